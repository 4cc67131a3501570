//! Reidemeister moves as Gauss-code rewrites.
//!
//! Every move is described by a [`MoveSpec`] naming the blocks of adjacent
//! passes it creates, deletes or permutes. A block is a [`Site`]: a
//! component and the position of the first of its two passes. Insert and
//! remove specs carry the same data, so each spec has an inverse without
//! looking at the diagram.
//!
//! Moves never wrap around a component's starting point, and on a
//! component with nonzero weight no block may start at position 0: moves
//! stay off arc 0, the arc leaving the starting point.
//! Virtual and mixed moves do not change a Gauss code and have no spec.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{Component, CrossingId, LinkDiagram, Pass, PassKind, Sign};
use crate::labeling::propagate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("component {0} does not exist")]
    BadComponent(usize),
    #[error("position {position} out of range on component {component}")]
    BadPosition { component: usize, position: usize },
    #[error("crossing id {0} already in use")]
    IdInUse(CrossingId),
    #[error("blocks overlap")]
    Overlap,
    #[error("block at {component}@{position} touches the weighted starting point")]
    TouchesWeightedStart { component: usize, position: usize },
    #[error("diagram does not match the move at {0}")]
    Mismatch(String),
    #[error("malformed move trace `{0}`")]
    Parse(String),
}

type MoveResult<T> = Result<T, MoveError>;

/// Two adjacent passes starting at `position` on `component`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub component: usize,
    pub position: usize,
}

impl Site {
    pub fn new(component: usize, position: usize) -> Self {
        Site { component, position }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.component, self.position)
    }
}

/// A kink: one crossing whose two passes are adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct R1 {
    pub site: Site,
    pub crossing: CrossingId,
    pub sign: Sign,
    /// Over pass first along the orientation.
    pub over_first: bool,
}

/// A bigon: strand `over` passes over strand `under` at `first` (sign
/// `sign`) and then at `second` (sign `-sign`). The under strand meets
/// them in the same order when `parallel`, reversed otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct R2 {
    pub over: Site,
    pub under: Site,
    pub first: CrossingId,
    pub second: CrossingId,
    pub sign: Sign,
    pub parallel: bool,
}

/// Three segments pairwise sharing a crossing; the move reverses the pass
/// order on each segment and keeps every sign and over/under status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct R3 {
    pub segments: [Site; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    R1Insert(R1),
    R1Remove(R1),
    R2Insert(R2),
    R2Remove(R2),
    R3(R3),
}

impl MoveSpec {
    pub fn inverse(&self) -> MoveSpec {
        match *self {
            MoveSpec::R1Insert(m) => MoveSpec::R1Remove(m),
            MoveSpec::R1Remove(m) => MoveSpec::R1Insert(m),
            MoveSpec::R2Insert(m) => MoveSpec::R2Remove(m),
            MoveSpec::R2Remove(m) => MoveSpec::R2Insert(m),
            MoveSpec::R3(m) => MoveSpec::R3(m),
        }
    }

    pub fn is_insertion(&self) -> bool {
        matches!(self, MoveSpec::R1Insert(_) | MoveSpec::R2Insert(_))
    }
}

impl R1 {
    fn passes(&self) -> [Pass; 2] {
        let o = Pass { crossing: self.crossing, kind: PassKind::Over(self.sign) };
        let u = Pass { crossing: self.crossing, kind: PassKind::Under(self.sign) };
        if self.over_first {
            [o, u]
        } else {
            [u, o]
        }
    }
}

impl R2 {
    fn over_passes(&self) -> [Pass; 2] {
        [
            Pass { crossing: self.first, kind: PassKind::Over(self.sign) },
            Pass { crossing: self.second, kind: PassKind::Over(-self.sign) },
        ]
    }

    fn under_passes(&self) -> [Pass; 2] {
        let a = Pass { crossing: self.first, kind: PassKind::Under(self.sign) };
        let b = Pass { crossing: self.second, kind: PassKind::Under(-self.sign) };
        if self.parallel {
            [a, b]
        } else {
            [b, a]
        }
    }
}

/// Checks that a two-pass block at `site` sits inside a component of length
/// `len` and respects the starting-point rule.
fn check_block(site: Site, len: usize, weight: i64) -> MoveResult<()> {
    if site.position + 1 >= len {
        return Err(MoveError::BadPosition { component: site.component, position: site.position });
    }
    if weight != 0 && site.position == 0 {
        return Err(MoveError::TouchesWeightedStart { component: site.component, position: site.position });
    }
    Ok(())
}

fn components_of(d: &LinkDiagram) -> Vec<Vec<Pass>> {
    d.components().iter().map(|c| c.passes().to_vec()).collect()
}

fn rebuild(comps: Vec<Vec<Pass>>) -> LinkDiagram {
    LinkDiagram::from_valid(comps.into_iter().map(Component::new).collect())
}

fn component_len(d: &LinkDiagram, c: usize) -> MoveResult<usize> {
    d.component(c).map(Component::len).ok_or(MoveError::BadComponent(c))
}

fn check_fresh(d: &LinkDiagram, id: CrossingId) -> MoveResult<()> {
    if d.crossing(id).is_some() {
        Err(MoveError::IdInUse(id))
    } else {
        Ok(())
    }
}

fn block_matches(d: &LinkDiagram, site: Site, expected: [Pass; 2]) -> bool {
    let passes = d.components()[site.component].passes();
    passes[site.position] == expected[0] && passes[site.position + 1] == expected[1]
}

/// Inserts blocks given by their final positions.
fn insert_blocks(d: &LinkDiagram, mut blocks: Vec<(Site, [Pass; 2])>) -> LinkDiagram {
    let mut comps = components_of(d);
    blocks.sort_by_key(|(s, _)| *s);
    for (site, passes) in blocks {
        let seq = &mut comps[site.component];
        seq.splice(site.position..site.position, passes);
    }
    rebuild(comps)
}

fn remove_blocks(d: &LinkDiagram, mut sites: Vec<Site>) -> LinkDiagram {
    let mut comps = components_of(d);
    sites.sort();
    for site in sites.into_iter().rev() {
        comps[site.component].drain(site.position..site.position + 2);
    }
    rebuild(comps)
}

pub fn apply(d: &LinkDiagram, spec: &MoveSpec) -> MoveResult<LinkDiagram> {
    let weights = propagate(d).component_weights;
    match spec {
        MoveSpec::R1Insert(m) => {
            let len = component_len(d, m.site.component)?;
            check_fresh(d, m.crossing)?;
            if m.site.position > len {
                return Err(MoveError::BadPosition { component: m.site.component, position: m.site.position });
            }
            check_block(m.site, len + 2, weights[m.site.component])?;
            Ok(insert_blocks(d, vec![(m.site, m.passes())]))
        }
        MoveSpec::R1Remove(m) => {
            let len = component_len(d, m.site.component)?;
            check_block(m.site, len, weights[m.site.component])?;
            if !block_matches(d, m.site, m.passes()) {
                return Err(MoveError::Mismatch(m.site.to_string()));
            }
            Ok(remove_blocks(d, vec![m.site]))
        }
        MoveSpec::R2Insert(m) => {
            let lo = component_len(d, m.over.component)?;
            let lu = component_len(d, m.under.component)?;
            check_fresh(d, m.first)?;
            check_fresh(d, m.second)?;
            if m.first == m.second {
                return Err(MoveError::IdInUse(m.first));
            }
            let (final_lo, final_lu) = if m.over.component == m.under.component {
                if m.over.position.abs_diff(m.under.position) < 2 {
                    return Err(MoveError::Overlap);
                }
                let (low, high) =
                    if m.over.position < m.under.position { (m.over, m.under) } else { (m.under, m.over) };
                if low.position > lo || high.position > lo + 2 {
                    return Err(MoveError::BadPosition { component: high.component, position: high.position });
                }
                (lo + 4, lo + 4)
            } else {
                for (site, len) in [(m.over, lo), (m.under, lu)] {
                    if site.position > len {
                        return Err(MoveError::BadPosition { component: site.component, position: site.position });
                    }
                }
                (lo + 2, lu + 2)
            };
            check_block(m.over, final_lo, weights[m.over.component])?;
            check_block(m.under, final_lu, weights[m.under.component])?;
            Ok(insert_blocks(d, vec![(m.over, m.over_passes()), (m.under, m.under_passes())]))
        }
        MoveSpec::R2Remove(m) => {
            let lo = component_len(d, m.over.component)?;
            let lu = component_len(d, m.under.component)?;
            if m.over.component == m.under.component && m.over.position.abs_diff(m.under.position) < 2 {
                return Err(MoveError::Overlap);
            }
            check_block(m.over, lo, weights[m.over.component])?;
            check_block(m.under, lu, weights[m.under.component])?;
            if !block_matches(d, m.over, m.over_passes()) || !block_matches(d, m.under, m.under_passes()) {
                return Err(MoveError::Mismatch(format!("{} / {}", m.over, m.under)));
            }
            Ok(remove_blocks(d, vec![m.over, m.under]))
        }
        MoveSpec::R3(m) => apply_r3(d, m, &weights),
    }
}

/// Roles of the three segments of a candidate R3 site.
struct R3Roles {
    top: usize,
    middle: usize,
    bottom: usize,
}

/// The line-arrangement condition for an oriented R3. With `t`, `m`, `b`
/// recording whether the top strand meets TM first, the middle strand
/// meets TM first and the bottom strand meets TB first:
/// `s_TM s_TB = +1` iff `m == b`, and `s_TB s_MB = +1` iff `t == m`.
pub fn r3_condition(t: bool, m: bool, b: bool, s_tm: Sign, s_tb: Sign, s_mb: Sign) -> bool {
    ((s_tm == s_tb) == (m == b)) && ((s_tb == s_mb) == (t == m))
}

fn r3_roles(d: &LinkDiagram, m: &R3) -> MoveResult<R3Roles> {
    let mismatch = || MoveError::Mismatch(format!("{} {} {}", m.segments[0], m.segments[1], m.segments[2]));
    let seg = |i: usize| -> [Pass; 2] {
        let s = m.segments[i];
        let p = d.components()[s.component].passes();
        [p[s.position], p[s.position + 1]]
    };
    let segs = [seg(0), seg(1), seg(2)];
    // each crossing appears on exactly two segments, once each
    let mut ids: Vec<CrossingId> = segs.iter().flatten().map(|p| p.crossing).collect();
    ids.sort();
    if ids.len() != 6 || ids[0] != ids[1] || ids[2] != ids[3] || ids[4] != ids[5] {
        return Err(mismatch());
    }
    if ids[1] == ids[2] || ids[3] == ids[4] || segs.iter().any(|s| s[0].crossing == s[1].crossing) {
        return Err(mismatch());
    }
    if segs.iter().flatten().any(Pass::is_singular) {
        return Err(mismatch());
    }
    let overs = |s: &[Pass; 2]| s.iter().filter(|p| p.is_over()).count();
    let find = |n: usize| (0..3).filter(|&i| overs(&segs[i]) == n).collect::<Vec<_>>();
    let (top, middle, bottom) = match (find(2).as_slice(), find(1).as_slice(), find(0).as_slice()) {
        ([t], [m], [b]) => (*t, *m, *b),
        _ => return Err(mismatch()),
    };
    Ok(R3Roles { top, middle, bottom })
}

fn r3_valid(d: &LinkDiagram, m: &R3) -> MoveResult<()> {
    let roles = r3_roles(d, m)?;
    let pass = |seg: usize, k: usize| {
        let s = m.segments[seg];
        d.components()[s.component].passes()[s.position + k]
    };
    let shared = |a: usize, b: usize| -> CrossingId {
        let x = [pass(a, 0).crossing, pass(a, 1).crossing];
        let y = [pass(b, 0).crossing, pass(b, 1).crossing];
        *x.iter().find(|c| y.contains(c)).expect("segments share a crossing")
    };
    let tm = shared(roles.top, roles.middle);
    let tb = shared(roles.top, roles.bottom);
    let mb = shared(roles.middle, roles.bottom);
    // the middle strand is under at TM and over at MB
    let mid = [pass(roles.middle, 0), pass(roles.middle, 1)];
    let mid_tm = mid.iter().find(|p| p.crossing == tm).unwrap();
    let mid_mb = mid.iter().find(|p| p.crossing == mb).unwrap();
    if !mid_tm.is_under() || !mid_mb.is_over() {
        return Err(MoveError::Mismatch("middle strand".into()));
    }
    let sign = |id: CrossingId| d.crossing(id).and_then(|c| c.sign()).unwrap();
    let t = pass(roles.top, 0).crossing == tm;
    let mm = pass(roles.middle, 0).crossing == tm;
    let b = pass(roles.bottom, 0).crossing == tb;
    if r3_condition(t, mm, b, sign(tm), sign(tb), sign(mb)) {
        Ok(())
    } else {
        Err(MoveError::Mismatch("R3 orientation/sign pattern".into()))
    }
}

fn apply_r3(d: &LinkDiagram, m: &R3, weights: &[i64]) -> MoveResult<LinkDiagram> {
    for s in m.segments {
        let len = component_len(d, s.component)?;
        check_block(s, len, weights[s.component])?;
    }
    for (i, a) in m.segments.iter().enumerate() {
        for b in &m.segments[i + 1..] {
            if a.component == b.component && a.position.abs_diff(b.position) < 2 {
                return Err(MoveError::Overlap);
            }
        }
    }
    r3_valid(d, m)?;
    let mut comps = components_of(d);
    for s in m.segments {
        comps[s.component].swap(s.position, s.position + 1);
    }
    Ok(rebuild(comps))
}

pub fn r1_insert(
    d: &LinkDiagram,
    component: usize,
    position: usize,
    sign: Sign,
    over_first: bool,
) -> MoveResult<(LinkDiagram, MoveSpec)> {
    let spec = MoveSpec::R1Insert(R1 {
        site: Site::new(component, position),
        crossing: CrossingId(d.max_crossing_id() + 1),
        sign,
        over_first,
    });
    Ok((apply(d, &spec)?, spec))
}

/// Removes the kink whose first pass sits at `site`.
pub fn r1_remove(d: &LinkDiagram, site: Site) -> MoveResult<(LinkDiagram, MoveSpec)> {
    let passes = d.component(site.component).ok_or(MoveError::BadComponent(site.component))?.passes();
    let (Some(a), Some(b)) = (passes.get(site.position), passes.get(site.position + 1)) else {
        return Err(MoveError::BadPosition { component: site.component, position: site.position });
    };
    let (Some(sign), true) = (a.sign(), a.crossing == b.crossing) else {
        return Err(MoveError::Mismatch(site.to_string()));
    };
    let spec = MoveSpec::R1Remove(R1 { site, crossing: a.crossing, sign, over_first: a.is_over() });
    Ok((apply(d, &spec)?, spec))
}

pub fn r2_insert(
    d: &LinkDiagram,
    over: Site,
    under: Site,
    sign: Sign,
    parallel: bool,
) -> MoveResult<(LinkDiagram, MoveSpec)> {
    let next = d.max_crossing_id();
    let spec = MoveSpec::R2Insert(R2 {
        over,
        under,
        first: CrossingId(next + 1),
        second: CrossingId(next + 2),
        sign,
        parallel,
    });
    Ok((apply(d, &spec)?, spec))
}

/// Removes the bigon whose over block starts at `over`.
pub fn r2_remove(d: &LinkDiagram, over: Site) -> MoveResult<(LinkDiagram, MoveSpec)> {
    let spec = r2_at(d, over).ok_or_else(|| MoveError::Mismatch(over.to_string()))?;
    Ok((apply(d, &spec)?, spec))
}

pub fn r3_apply(d: &LinkDiagram, segments: [Site; 3]) -> MoveResult<(LinkDiagram, MoveSpec)> {
    let spec = MoveSpec::R3(R3 { segments });
    Ok((apply(d, &spec)?, spec))
}

/// The R2 removal whose over block starts at `over`, if the passes there
/// form a bigon (ignoring the starting-point rule).
pub fn r2_at(d: &LinkDiagram, over: Site) -> Option<MoveSpec> {
    let passes = d.component(over.component)?.passes();
    let (a, b) = (passes.get(over.position)?, passes.get(over.position + 1)?);
    let (PassKind::Over(sa), PassKind::Over(sb)) = (a.kind, b.kind) else {
        return None;
    };
    if sa == sb {
        return None;
    }
    let ua = d.crossing(a.crossing)?.under()?;
    let ub = d.crossing(b.crossing)?.under()?;
    if ua.component != ub.component || ua.position.abs_diff(ub.position) != 1 {
        return None;
    }
    let parallel = ua.position < ub.position;
    let under = Site::new(ua.component, ua.position.min(ub.position));
    Some(MoveSpec::R2Remove(R2 { over, under, first: a.crossing, second: b.crossing, sign: sa, parallel }))
}

/// Every applicable R1 and R2 removal.
pub fn removal_sites(d: &LinkDiagram) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    for (ci, comp) in d.components().iter().enumerate() {
        for pos in 0..comp.len().saturating_sub(1) {
            let site = Site::new(ci, pos);
            let passes = comp.passes();
            if passes[pos].crossing == passes[pos + 1].crossing {
                if let Some(sign) = passes[pos].sign() {
                    out.push(MoveSpec::R1Remove(R1 {
                        site,
                        crossing: passes[pos].crossing,
                        sign,
                        over_first: passes[pos].is_over(),
                    }));
                }
            }
            if let Some(spec) = r2_at(d, site) {
                out.push(spec);
            }
        }
    }
    out.retain(|s| apply(d, s).is_ok());
    out
}

/// Every segment triple where an R3 move applies, each listed once.
pub fn r3_sites(d: &LinkDiagram) -> Vec<MoveSpec> {
    let mut segments = Vec::new();
    for (ci, comp) in d.components().iter().enumerate() {
        for pos in 0..comp.len().saturating_sub(1) {
            let p = comp.passes();
            if p[pos].crossing != p[pos + 1].crossing && !p[pos].is_singular() && !p[pos + 1].is_singular() {
                segments.push((Site::new(ci, pos), [p[pos].crossing, p[pos + 1].crossing]));
            }
        }
    }
    let mut out = Vec::new();
    for (i, (s0, c0)) in segments.iter().enumerate() {
        for (j, (s1, c1)) in segments.iter().enumerate().skip(i + 1) {
            let Some(shared01) = c0.iter().find(|c| c1.contains(c)) else { continue };
            let rest0 = if c0[0] == *shared01 { c0[1] } else { c0[0] };
            let rest1 = if c1[0] == *shared01 { c1[1] } else { c1[0] };
            if rest0 == rest1 {
                continue;
            }
            for (s2, c2) in segments.iter().skip(j + 1) {
                if c2.contains(&rest0) && c2.contains(&rest1) {
                    let spec = MoveSpec::R3(R3 { segments: [*s0, *s1, *s2] });
                    if apply(d, &spec).is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

/// An applicable R3 move on the triangle formed by three crossings, found by
/// looking for adjacent pass pairs of each two of them.
pub fn r3_at(d: &LinkDiagram, ids: [CrossingId; 3]) -> Option<MoveSpec> {
    let sites = |a: CrossingId, b: CrossingId| -> Vec<Site> {
        let mut out = Vec::new();
        for (ci, comp) in d.components().iter().enumerate() {
            for (pos, w) in comp.passes().windows(2).enumerate() {
                let pair = [w[0].crossing, w[1].crossing];
                if pair == [a, b] || pair == [b, a] {
                    out.push(Site::new(ci, pos));
                }
            }
        }
        out
    };
    let (xs, ys, zs) = (sites(ids[0], ids[1]), sites(ids[1], ids[2]), sites(ids[0], ids[2]));
    for &x in &xs {
        for &y in &ys {
            for &z in &zs {
                let mut segments = [x, y, z];
                segments.sort();
                let spec = MoveSpec::R3(R3 { segments });
                if apply(d, &spec).is_ok() {
                    return Some(spec);
                }
            }
        }
    }
    None
}

fn sign_char(s: Sign) -> char {
    s.symbol()
}

impl fmt::Display for MoveSpec {
    /// One-line trace form, e.g. `R1I 0@3 id=7 +OU` or
    /// `R2R 0@1 1@4 ids=5,6 - anti`. Components and positions are 0-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r1 = |f: &mut fmt::Formatter<'_>, tag: &str, m: &R1| {
            let order = if m.over_first { "OU" } else { "UO" };
            write!(f, "{tag} {} id={} {}{order}", m.site, m.crossing, sign_char(m.sign))
        };
        let r2 = |f: &mut fmt::Formatter<'_>, tag: &str, m: &R2| {
            let orient = if m.parallel { "par" } else { "anti" };
            write!(f, "{tag} {} {} ids={},{} {} {orient}", m.over, m.under, m.first, m.second, sign_char(m.sign))
        };
        match self {
            MoveSpec::R1Insert(m) => r1(f, "R1I", m),
            MoveSpec::R1Remove(m) => r1(f, "R1R", m),
            MoveSpec::R2Insert(m) => r2(f, "R2I", m),
            MoveSpec::R2Remove(m) => r2(f, "R2R", m),
            MoveSpec::R3(m) => write!(f, "R3 {} {} {}", m.segments[0], m.segments[1], m.segments[2]),
        }
    }
}

fn parse_site(s: &str) -> Option<Site> {
    let (c, p) = s.split_once('@')?;
    Some(Site::new(c.parse().ok()?, p.parse().ok()?))
}

fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "+" => Some(Sign::Pos),
        "-" => Some(Sign::Neg),
        _ => None,
    }
}

fn parse_id(s: &str, key: &str) -> Option<CrossingId> {
    Some(CrossingId(s.strip_prefix(key)?.parse().ok()?))
}

impl FromStr for MoveSpec {
    type Err = MoveError;

    fn from_str(text: &str) -> MoveResult<Self> {
        let err = || MoveError::Parse(text.to_string());
        let tok: Vec<&str> = text.split_whitespace().collect();
        let spec = match tok.as_slice() {
            [tag @ ("R1I" | "R1R"), site, id, so] => {
                let (s, order) = so.split_at(1);
                let m = R1 {
                    site: parse_site(site).ok_or_else(err)?,
                    crossing: parse_id(id, "id=").ok_or_else(err)?,
                    sign: parse_sign(s).ok_or_else(err)?,
                    over_first: match order {
                        "OU" => true,
                        "UO" => false,
                        _ => return Err(err()),
                    },
                };
                if *tag == "R1I" {
                    MoveSpec::R1Insert(m)
                } else {
                    MoveSpec::R1Remove(m)
                }
            }
            [tag @ ("R2I" | "R2R"), over, under, ids, sign, orient] => {
                let (a, b) = ids.strip_prefix("ids=").and_then(|s| s.split_once(',')).ok_or_else(err)?;
                let m = R2 {
                    over: parse_site(over).ok_or_else(err)?,
                    under: parse_site(under).ok_or_else(err)?,
                    first: CrossingId(a.parse().map_err(|_| err())?),
                    second: CrossingId(b.parse().map_err(|_| err())?),
                    sign: parse_sign(sign).ok_or_else(err)?,
                    parallel: match *orient {
                        "par" => true,
                        "anti" => false,
                        _ => return Err(err()),
                    },
                };
                if *tag == "R2I" {
                    MoveSpec::R2Insert(m)
                } else {
                    MoveSpec::R2Remove(m)
                }
            }
            ["R3", a, b, c] => MoveSpec::R3(R3 {
                segments: [
                    parse_site(a).ok_or_else(err)?,
                    parse_site(b).ok_or_else(err)?,
                    parse_site(c).ok_or_else(err)?,
                ],
            }),
            _ => return Err(err()),
        };
        Ok(spec)
    }
}

/// Moves joined by ` | `.
pub fn format_trace(specs: &[MoveSpec]) -> String {
    specs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
}

pub fn parse_trace(text: &str) -> MoveResult<Vec<MoveSpec>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split('|').map(|s| s.trim().parse()).collect()
}
