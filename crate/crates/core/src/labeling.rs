//! Affine bilabels and crossing weights.
//!
//! Every component starts from a symbolic bilabel `(x1, x2)` at its
//! starting point. Walking the component, each pass applies its index
//! change to the first coordinate when the crossing is a self-crossing and
//! to the second when it is external. Arcs store integer offsets from the
//! start, and weights only ever involve the sum `X = x1 + x2`, so the
//! lowercase coordinates are never materialised.

use crate::diagram::{Crossing, CrossingId, LinkDiagram, PassRef, Sign};
use crate::error::{Error, Result};
use crate::poly::{AffineExponent, CrossingTerm};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ArcLabel {
    pub self_offset: i64,
    pub ext_offset: i64,
}

impl ArcLabel {
    pub fn total(&self) -> i64 {
        self.self_offset + self.ext_offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    /// `labels[c][k]` is the arc of component `c` entering pass `k`; arc 0
    /// leaves the starting point.
    pub labels: Vec<Vec<ArcLabel>>,
    /// Second-coordinate discrepancy after a full circuit, discharged at
    /// the starting point.
    pub component_weights: Vec<i64>,
}

impl ArcLabeling {
    pub fn incoming(&self, at: PassRef) -> ArcLabel {
        self.labels[at.component][at.position]
    }

    /// `X_c + self_offset + ext_offset` for the arc entering `at`.
    pub fn combined(&self, at: PassRef) -> AffineExponent {
        AffineExponent::symbol(at.component).plus(self.incoming(at).total())
    }

    pub fn is_compatible(&self) -> bool {
        self.component_weights.iter().all(|&w| w == 0)
    }
}

pub fn propagate(d: &LinkDiagram) -> ArcLabeling {
    let mut labels = Vec::with_capacity(d.num_components());
    let mut component_weights = Vec::with_capacity(d.num_components());
    for (ci, comp) in d.components().iter().enumerate() {
        let mut arc = ArcLabel::default();
        let mut arcs = Vec::with_capacity(comp.len());
        for p in comp.passes() {
            arcs.push(arc);
            let crossing = d.crossing(p.crossing).expect("valid diagram");
            if crossing.is_self_crossing() {
                arc.self_offset += p.index_change();
            } else {
                arc.ext_offset += p.index_change();
            }
        }
        debug_assert_eq!(arc.self_offset, 0, "self-crossing changes cancel on component {ci}");
        labels.push(arcs);
        component_weights.push(arc.ext_offset);
    }
    ArcLabeling { labels, component_weights }
}

/// The weight a crossing would have with the given sign. Labels do not
/// depend on signs, so this is meaningful for double points too.
///
/// With `M` and `P` the incoming labels of the `MinusOne` and `PlusOne`
/// strands: `M - P - 1` when positive, `P - M + 1` when negative.
pub fn weight_with_sign(lab: &ArcLabeling, crossing: &Crossing, sign: Sign) -> AffineExponent {
    let m = lab.combined(crossing.minus);
    let p = lab.combined(crossing.plus);
    match sign {
        Sign::Pos => (&m - &p).plus(-1),
        Sign::Neg => (&p - &m).plus(1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingWeight {
    pub crossing: CrossingId,
    pub sign: Sign,
    pub over_component: usize,
    pub under_component: usize,
    pub exponent: AffineExponent,
}

impl CrossingWeight {
    pub fn is_self_crossing(&self) -> bool {
        self.over_component == self.under_component
    }

    pub fn term(&self) -> CrossingTerm {
        CrossingTerm {
            crossing: self.crossing,
            sign: self.sign,
            var: self.over_component,
            exponent: self.exponent.clone(),
        }
    }
}

/// Weights of all crossings in id order. Fails on double points.
pub fn crossing_weights(d: &LinkDiagram, lab: &ArcLabeling) -> Result<Vec<CrossingWeight>> {
    d.crossings()
        .map(|c| {
            let (Some(sign), Some(over), Some(under)) = (c.sign(), c.over(), c.under()) else {
                return Err(Error::SingularCrossing(c.id));
            };
            Ok(CrossingWeight {
                crossing: c.id,
                sign,
                over_component: over.component,
                under_component: under.component,
                exponent: weight_with_sign(lab, c, sign),
            })
        })
        .collect()
}
