//! Double points and the finite type extension of the invariant.
//!
//! A double point is a crossing whose passes are `S<id>l` (the `MinusOne`
//! strand) and `S<id>r` (the `PlusOne` strand). The invariant extends by
//! `V(x) = V(x+) - V(x-)`: the positive resolution puts the `l` strand over
//! with sign `+`, the negative one puts the `r` strand over with sign `-`.
//! Both keep the strand roles, so labels agree across all resolutions.

use crate::diagram::{Component, CrossingId, LinkDiagram, Pass, PassKind, Sign};
use crate::error::{Error, Result};
use crate::gauss::format_diagram;
use crate::invariant::mvaip;
use crate::poly::MVPolynomial;

fn map_passes(d: &LinkDiagram, f: impl Fn(&Pass) -> Pass) -> LinkDiagram {
    let comps = d.clone().into_components();
    LinkDiagram::from_valid(comps.into_iter().map(|c| Component::new(c.passes().iter().map(&f).collect())).collect())
}

fn resolve_one(d: &LinkDiagram, id: CrossingId, sign: Sign) -> LinkDiagram {
    map_passes(d, |p| {
        if p.crossing != id {
            return *p;
        }
        let over = match (p.kind, sign) {
            (PassKind::SingularLeft, Sign::Pos) | (PassKind::SingularRight, Sign::Neg) => true,
            (PassKind::SingularLeft, Sign::Neg) | (PassKind::SingularRight, Sign::Pos) => false,
            _ => return *p,
        };
        let kind = if over { PassKind::Over(sign) } else { PassKind::Under(sign) };
        Pass { crossing: id, kind }
    })
}

/// All `2^k` resolutions with their coefficients `(-1)^{#negative}`.
/// Double points are resolved in id order, positive before negative.
pub fn resolve(sd: &LinkDiagram) -> Vec<(i64, LinkDiagram)> {
    let mut out = vec![(1, sd.clone())];
    for id in sd.singular_crossings() {
        out = out
            .into_iter()
            .flat_map(|(c, d)| [(c, resolve_one(&d, id, Sign::Pos)), (-c, resolve_one(&d, id, Sign::Neg))])
            .collect();
    }
    out
}

/// `Σ coefficient · mvaip(resolution)`.
pub fn v_extend(sd: &LinkDiagram) -> MVPolynomial {
    resolve(sd)
        .into_iter()
        .map(|(c, d)| {
            let p = mvaip(&d).expect("resolutions are classical").polynomial;
            if c > 0 {
                p
            } else {
                -p
            }
        })
        .sum()
}

/// Turns the given classical crossings into double points, keeping each
/// strand's role.
pub fn singularize(d: &LinkDiagram, ids: &[CrossingId]) -> Result<LinkDiagram> {
    for &id in ids {
        match d.crossing(id) {
            Some(c) if !c.is_singular() => {}
            _ => return Err(Error::UnknownCrossing(id)),
        }
    }
    Ok(map_passes(d, |p| {
        if !ids.contains(&p.crossing) || p.is_singular() {
            return *p;
        }
        let kind = match p.role() {
            crate::diagram::StrandRole::MinusOne => PassKind::SingularLeft,
            crate::diagram::StrandRole::PlusOne => PassKind::SingularRight,
        };
        Pass { crossing: p.crossing, kind }
    }))
}

/// Every diagram obtained by making exactly `k` classical crossings
/// singular.
pub fn singularizations(d: &LinkDiagram, k: usize) -> Vec<LinkDiagram> {
    let ids: Vec<CrossingId> = d.crossings().filter(|c| !c.is_singular()).map(|c| c.id).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    subsets(&ids, k, 0, &mut chosen, &mut |s| out.push(singularize(d, s).expect("ids are classical")));
    out
}

fn subsets(ids: &[CrossingId], k: usize, from: usize, chosen: &mut Vec<CrossingId>, f: &mut impl FnMut(&[CrossingId])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in from..ids.len() {
        chosen.push(ids[i]);
        subsets(ids, k, i + 1, chosen, f);
        chosen.pop();
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderEntry {
    pub code: String,
    pub double_points: usize,
    pub value: MVPolynomial,
}

/// Outcome of an order-one check over singular diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderReport {
    /// Diagrams with at least two double points that were checked.
    pub checked: usize,
    /// Diagrams with at least two double points and a nonzero value.
    pub failures: Vec<OrderEntry>,
    /// Diagrams with one double point and a nonzero value.
    pub witnesses: Vec<OrderEntry>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_witness(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

pub fn order_report<'a>(corpus: impl IntoIterator<Item = &'a LinkDiagram>) -> OrderReport {
    let mut report = OrderReport::default();
    for sd in corpus {
        let k = sd.singular_crossings().len();
        if k == 0 {
            continue;
        }
        let value = v_extend(sd);
        if value.is_zero() {
            if k >= 2 {
                report.checked += 1;
            }
            continue;
        }
        let entry = OrderEntry { code: format_diagram(sd), double_points: k, value };
        if k == 1 {
            report.witnesses.push(entry);
        } else {
            report.checked += 1;
            report.failures.push(entry);
        }
    }
    report
}
