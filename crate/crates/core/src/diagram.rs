//! Oriented multi-component Gauss codes with classical and singular crossings.
//!
//! A [`LinkDiagram`] is a list of components, each a cyclic sequence of
//! crossing passes read from the component's starting point. Virtual
//! crossings have no representation: a signed Gauss code already fixes the
//! virtual link up to detour moves.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Neg;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// The two strand roles at a crossing, named after their index change.
///
/// `MinusOne` is the strand running bottom-left to top-right when both
/// strands point upward, `PlusOne` the one running bottom-right to top-left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandRole {
    MinusOne,
    PlusOne,
}

impl StrandRole {
    pub fn index_change(self) -> i64 {
        match self {
            StrandRole::MinusOne => -1,
            StrandRole::PlusOne => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PassKind {
    Over(Sign),
    Under(Sign),
    /// The `MinusOne` strand of a double point.
    SingularLeft,
    /// The `PlusOne` strand of a double point.
    SingularRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: CrossingId,
    pub kind: PassKind,
}

impl Pass {
    pub fn over(id: u32, sign: Sign) -> Self {
        Pass { crossing: CrossingId(id), kind: PassKind::Over(sign) }
    }

    pub fn under(id: u32, sign: Sign) -> Self {
        Pass { crossing: CrossingId(id), kind: PassKind::Under(sign) }
    }

    pub fn singular_left(id: u32) -> Self {
        Pass { crossing: CrossingId(id), kind: PassKind::SingularLeft }
    }

    pub fn singular_right(id: u32) -> Self {
        Pass { crossing: CrossingId(id), kind: PassKind::SingularRight }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            PassKind::Over(s) | PassKind::Under(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self.kind, PassKind::SingularLeft | PassKind::SingularRight)
    }

    pub fn is_over(&self) -> bool {
        matches!(self.kind, PassKind::Over(_))
    }

    pub fn is_under(&self) -> bool {
        matches!(self.kind, PassKind::Under(_))
    }

    /// A positive crossing's over strand is the `MinusOne` strand; a
    /// negative crossing's over strand is the `PlusOne` strand.
    pub fn role(&self) -> StrandRole {
        match self.kind {
            PassKind::Over(Sign::Pos) | PassKind::Under(Sign::Neg) | PassKind::SingularLeft => StrandRole::MinusOne,
            PassKind::Over(Sign::Neg) | PassKind::Under(Sign::Pos) | PassKind::SingularRight => StrandRole::PlusOne,
        }
    }

    pub fn index_change(&self) -> i64 {
        self.role().index_change()
    }

    pub(crate) fn with_crossing(self, crossing: CrossingId) -> Self {
        Pass { crossing, ..self }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Component {
    passes: Vec<Pass>,
}

impl Component {
    pub fn new(passes: Vec<Pass>) -> Self {
        Component { passes }
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    pub fn into_passes(self) -> Vec<Pass> {
        self.passes
    }
}

impl From<Vec<Pass>> for Component {
    fn from(passes: Vec<Pass>) -> Self {
        Component { passes }
    }
}

/// Location of a pass: component index and position in its sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PassRef {
    pub component: usize,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingKind {
    Classical(Sign),
    Singular,
}

/// A crossing resolved to the locations of its two strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub id: CrossingId,
    pub kind: CrossingKind,
    pub minus: PassRef,
    pub plus: PassRef,
}

impl Crossing {
    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            CrossingKind::Classical(s) => Some(s),
            CrossingKind::Singular => None,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.kind == CrossingKind::Singular
    }

    pub fn over(&self) -> Option<PassRef> {
        match self.kind {
            CrossingKind::Classical(Sign::Pos) => Some(self.minus),
            CrossingKind::Classical(Sign::Neg) => Some(self.plus),
            CrossingKind::Singular => None,
        }
    }

    pub fn under(&self) -> Option<PassRef> {
        match self.kind {
            CrossingKind::Classical(Sign::Pos) => Some(self.plus),
            CrossingKind::Classical(Sign::Neg) => Some(self.minus),
            CrossingKind::Singular => None,
        }
    }

    pub fn is_self_crossing(&self) -> bool {
        self.minus.component == self.plus.component
    }

    pub fn passes(&self) -> [PassRef; 2] {
        [self.minus, self.plus]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OccursOnce(CrossingId),
    OccursTooOften(CrossingId, usize),
    SignMismatch(CrossingId),
    /// The two passes are not one Over and one Under, or one `l` and one `r`.
    KindMismatch(CrossingId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OccursOnce(id) => write!(f, "crossing {id} occurs once"),
            Violation::OccursTooOften(id, n) => write!(f, "crossing {id} occurs {n} times"),
            Violation::SignMismatch(id) => write!(f, "sign mismatch at crossing {id}"),
            Violation::KindMismatch(id) => write!(f, "pass kinds do not form a crossing at {id}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the crossing rules on raw components. Violations are listed in
/// crossing-id order.
pub fn validate(components: &[Component]) -> ValidationReport {
    let mut seen: BTreeMap<CrossingId, Vec<Pass>> = BTreeMap::new();
    for comp in components {
        for p in comp.passes() {
            seen.entry(p.crossing).or_default().push(*p);
        }
    }
    let mut violations = Vec::new();
    for (id, passes) in seen {
        match passes.as_slice() {
            [_] => violations.push(Violation::OccursOnce(id)),
            [a, b] => {
                use PassKind::*;
                match (a.kind, b.kind) {
                    (Over(s), Under(t)) | (Under(s), Over(t)) => {
                        if s != t {
                            violations.push(Violation::SignMismatch(id));
                        }
                    }
                    (SingularLeft, SingularRight) | (SingularRight, SingularLeft) => {}
                    _ => violations.push(Violation::KindMismatch(id)),
                }
            }
            more => violations.push(Violation::OccursTooOften(id, more.len())),
        }
    }
    ValidationReport { violations }
}

/// A valid oriented, ordered link diagram.
///
/// Construction validates; every structural operation returns a valid
/// diagram. Equality and hashing compare the pass sequences only, so two
/// diagrams differing by a crossing renumbering are unequal until both are
/// passed through [`LinkDiagram::canonical`].
#[derive(Debug, Clone)]
pub struct LinkDiagram {
    components: Vec<Component>,
    crossings: BTreeMap<CrossingId, Crossing>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for LinkDiagram {}

impl Hash for LinkDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.components.hash(state);
    }
}

impl LinkDiagram {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        let report = validate(&components);
        if !report.is_ok() {
            return Err(Error::Invalid(report));
        }
        Ok(Self::from_valid(components))
    }

    /// The unknot: one component without crossings.
    pub fn unknot() -> Self {
        Self::from_valid(vec![Component::default()])
    }

    pub(crate) fn from_valid(components: Vec<Component>) -> Self {
        debug_assert!(validate(&components).is_ok());
        let mut found: BTreeMap<CrossingId, Vec<(PassRef, Pass)>> = BTreeMap::new();
        for (ci, comp) in components.iter().enumerate() {
            for (pi, p) in comp.passes().iter().enumerate() {
                let at = PassRef { component: ci, position: pi };
                found.entry(p.crossing).or_default().push((at, *p));
            }
        }
        let crossings = found
            .into_iter()
            .map(|(id, passes)| {
                let (r0, p0) = passes[0];
                let (r1, p1) = passes[1];
                let kind = match p0.sign() {
                    Some(s) => CrossingKind::Classical(s),
                    None => CrossingKind::Singular,
                };
                let (minus, plus) = match p0.role() {
                    StrandRole::MinusOne => (r0, r1),
                    StrandRole::PlusOne => (r1, r0),
                };
                debug_assert_ne!(p0.role(), p1.role());
                (id, Crossing { id, kind, minus, plus })
            })
            .collect();
        LinkDiagram { components, crossings }
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.components)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Option<&Component> {
        self.components.get(i)
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Crossings in ascending id order.
    pub fn crossings(&self) -> impl Iterator<Item = &Crossing> + '_ {
        self.crossings.values()
    }

    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings.get(&id)
    }

    pub fn pass(&self, at: PassRef) -> Pass {
        self.components[at.component].passes[at.position]
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.crossings.keys().next_back().map_or(0, |id| id.0)
    }

    pub fn is_classical(&self) -> bool {
        self.crossings.values().all(|c| !c.is_singular())
    }

    pub fn singular_crossings(&self) -> Vec<CrossingId> {
        self.crossings.values().filter(|c| c.is_singular()).map(|c| c.id).collect()
    }

    pub(crate) fn first_singular(&self) -> Option<CrossingId> {
        self.crossings.values().find(|c| c.is_singular()).map(|c| c.id)
    }

    pub fn writhe(&self) -> Result<i64> {
        if let Some(id) = self.first_singular() {
            return Err(Error::SingularCrossing(id));
        }
        Ok(self.crossings.values().filter_map(|c| c.sign()).map(Sign::value).sum())
    }

    fn map_passes(&self, f: impl Fn(Pass) -> Pass) -> Self {
        let components =
            self.components.iter().map(|c| Component::new(c.passes.iter().map(|p| f(*p)).collect())).collect();
        Self::from_valid(components)
    }

    /// Negates every classical sign and swaps over with under. Double points
    /// are left alone.
    pub fn mirror(&self) -> Self {
        self.map_passes(|p| match p.kind {
            PassKind::Over(s) => Pass { kind: PassKind::Under(-s), ..p },
            PassKind::Under(s) => Pass { kind: PassKind::Over(-s), ..p },
            _ => p,
        })
    }

    /// Reverses the orientation of every component. The starting point is
    /// position 0 of the reversed sequence. Reversing both strands of a
    /// crossing keeps its sign and its strand roles.
    pub fn reverse(&self) -> Self {
        let components =
            self.components.iter().map(|c| Component::new(c.passes.iter().rev().copied().collect())).collect();
        Self::from_valid(components)
    }

    pub fn switch_crossing(&self, id: CrossingId) -> Result<Self> {
        let crossing = self.crossings.get(&id).ok_or(Error::UnknownCrossing(id))?;
        if crossing.is_singular() {
            return Err(Error::SingularCrossing(id));
        }
        Ok(self.map_passes(|p| {
            if p.crossing != id {
                return p;
            }
            match p.kind {
                PassKind::Over(s) => Pass { kind: PassKind::Under(-s), ..p },
                PassKind::Under(s) => Pass { kind: PassKind::Over(-s), ..p },
                _ => p,
            }
        }))
    }

    /// Moves old component `i` to position `perm[i]`.
    pub fn reorder_components(&self, perm: &[usize]) -> Result<Self> {
        let n = self.components.len();
        let bad = || Error::BadPermutation { perm: perm.to_vec(), len: n };
        if perm.len() != n {
            return Err(bad());
        }
        let mut slots: Vec<Option<Component>> = vec![None; n];
        for (old, &new) in perm.iter().enumerate() {
            match slots.get_mut(new) {
                Some(slot @ None) => *slot = Some(self.components[old].clone()),
                _ => return Err(bad()),
            }
        }
        Ok(Self::from_valid(slots.into_iter().map(Option::unwrap).collect()))
    }

    /// Renumbers crossings 1..m in order of first occurrence.
    pub fn canonical(&self) -> Self {
        let mut renumber: BTreeMap<CrossingId, CrossingId> = BTreeMap::new();
        for comp in &self.components {
            for p in &comp.passes {
                let next = CrossingId(renumber.len() as u32 + 1);
                renumber.entry(p.crossing).or_insert(next);
            }
        }
        self.map_passes(|p| p.with_crossing(renumber[&p.crossing]))
    }

    /// Entry `[i][j]` is the signed count of classical crossings where
    /// component `i` passes over component `j`, `i != j`.
    pub fn linking_degrees(&self) -> Vec<Vec<i64>> {
        let n = self.components.len();
        let mut out = vec![vec![0; n]; n];
        for c in self.crossings.values() {
            if let (Some(over), Some(under), Some(s)) = (c.over(), c.under(), c.sign()) {
                if over.component != under.component {
                    out[over.component][under.component] += s.value();
                }
            }
        }
        out
    }

    pub(crate) fn into_components(self) -> Vec<Component> {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::parse;

    fn d(s: &str) -> LinkDiagram {
        parse(s).unwrap()
    }

    fn comps(s: &str) -> Vec<Component> {
        crate::gauss::parse_components(s).unwrap()
    }

    #[test]
    fn validate_reports() {
        assert!(validate(&comps("O1+ U2+ U1+ O2+")).is_ok());
        let r = validate(&comps("O1+ U1-"));
        assert_eq!(r.violations, vec![Violation::SignMismatch(CrossingId(1))]);
        assert_eq!(r.to_string(), "sign mismatch at crossing 1");
        let r = validate(&comps("O1+"));
        assert_eq!(r.to_string(), "crossing 1 occurs once");
        let r = validate(&comps("O1+ O1+"));
        assert_eq!(r.violations, vec![Violation::KindMismatch(CrossingId(1))]);
        let r = validate(&comps("S1l ; S1l"));
        assert_eq!(r.violations, vec![Violation::KindMismatch(CrossingId(1))]);
        let r = validate(&comps("O1+ U1+ S1l"));
        assert_eq!(r.violations, vec![Violation::OccursTooOften(CrossingId(1), 3)]);
        assert!(validate(&comps("S1l O2+ S1r U2+")).is_ok());
    }

    #[test]
    fn writhe_counts_each_crossing_once() {
        assert_eq!(d("O1+ U2+ U1+ O2+").writhe().unwrap(), 2);
        assert_eq!(d("").writhe().unwrap(), 0);
        assert_eq!(d("O1+ U2+ U1+ O2+").mirror().writhe().unwrap(), -2);
        assert_eq!(d("O1+ U2- O3- U1+ O4+ U3- O2- U4+").writhe().unwrap(), 0);
        assert_eq!(d("S1l O2+ S1r U2+").writhe(), Err(Error::SingularCrossing(CrossingId(1))));
    }

    #[test]
    fn mirror_reverse_switch() {
        let t = d("O1+ U2+ U1+ O2+");
        assert_eq!(t.mirror(), d("U1- O2- O1- U2-"));
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(t.reverse(), d("O2+ U1+ U2+ O1+"));
        assert_eq!(t.reverse().reverse(), t);
        let s = t.switch_crossing(CrossingId(1)).unwrap();
        assert_eq!(s, d("U1- U2+ O1- O2+"));
        assert_eq!(s.switch_crossing(CrossingId(1)).unwrap(), t);
        assert_eq!(t.switch_crossing(CrossingId(9)), Err(Error::UnknownCrossing(CrossingId(9))));
        let sing = d("S1l O2+ S1r U2+");
        assert_eq!(sing.switch_crossing(CrossingId(1)), Err(Error::SingularCrossing(CrossingId(1))));
        assert_eq!(sing.mirror(), d("S1l U2- S1r O2-"));
    }

    #[test]
    fn strand_roles_follow_sign() {
        let t = d("O1+ U2- U1+ O2-");
        let c1 = t.crossing(CrossingId(1)).unwrap();
        assert_eq!(c1.over(), Some(c1.minus));
        let c2 = t.crossing(CrossingId(2)).unwrap();
        assert_eq!(c2.over(), Some(c2.plus));
        assert_eq!(t.pass(c2.minus), Pass::under(2, Sign::Neg));
    }

    #[test]
    fn reorder() {
        let h = d("O1+ ; U1+");
        assert_eq!(h.reorder_components(&[0, 1]).unwrap(), h);
        assert_eq!(h.reorder_components(&[1, 0]).unwrap(), d("U1+ ; O1+"));
        assert!(matches!(h.reorder_components(&[0, 0]), Err(Error::BadPermutation { .. })));
        assert!(matches!(h.reorder_components(&[0]), Err(Error::BadPermutation { .. })));
        let l = d("O1+ ; U1+ O2- ; U2-");
        let p = [2, 0, 1];
        let q = [1, 2, 0];
        let qp: Vec<usize> = p.iter().map(|&i| q[i]).collect();
        assert_eq!(
            l.reorder_components(&p).unwrap().reorder_components(&q).unwrap(),
            l.reorder_components(&qp).unwrap()
        );
    }

    #[test]
    fn canonical_renumbers_by_first_occurrence() {
        assert_eq!(d("O7+ U3+ U7+ O3+").canonical(), d("O1+ U2+ U1+ O2+"));
    }

    #[test]
    fn linking_degrees_count_over_passes() {
        let l = d("O1+ O2+ ; U1+ U2+");
        assert_eq!(l.linking_degrees(), vec![vec![0, 2], vec![0, 0]]);
        let l = d("O1+ U2- ; U1+ O2-");
        assert_eq!(l.linking_degrees(), vec![vec![0, 1], vec![-1, 0]]);
    }
}
