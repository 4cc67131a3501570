//! Moving a component's starting point.
//!
//! Rotating a component's Gauss code moves its starting point forward past
//! some passes. The invariant of the rotated diagram is predicted from the
//! original one term by term: passing a pass with index change `δ` on a
//! component of weight `n` replaces `X_i` by `X_i - δ` everywhere and
//! multiplies the term of that crossing by `t_i^n` (over pass) or
//! `t_j^{-n}` (under pass, `j` the over component). Weights are unchanged by
//! rotation, so single steps compose.

use crate::diagram::{CrossingId, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariant::{mvaip, InvariantResult};
use crate::labeling::propagate;
use crate::poly::{CrossingTerms, MVPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftSpec {
    pub component: usize,
    /// Passes moved over, from 0 to the component length.
    pub steps: usize,
}

impl ShiftSpec {
    pub fn new(component: usize, steps: usize) -> Self {
        ShiftSpec { component, steps }
    }

    fn check(&self, d: &LinkDiagram) -> Result<usize> {
        let comp = d
            .component(self.component)
            .ok_or(Error::BadComponent { component: self.component, count: d.num_components() })?;
        if self.steps > comp.len() {
            return Err(Error::BadSteps { steps: self.steps, len: comp.len() });
        }
        Ok(comp.len())
    }
}

/// Per-step effect of a shift on the invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPrediction {
    pub component: usize,
    /// Sum of the index changes passed; `X_i` becomes `X_i - total`.
    pub total_index_change: i64,
    /// `(crossing, variable, k)`: that crossing's term gains a factor `t_var^k`.
    pub multipliers: Vec<(CrossingId, usize, i64)>,
}

impl ShiftPrediction {
    pub fn apply(&self, terms: &CrossingTerms) -> Result<CrossingTerms> {
        let mut out = terms.clone();
        out.shift_symbol(self.component, -self.total_index_change);
        for &(id, var, k) in &self.multipliers {
            out.multiply_term(id, var, k)?;
        }
        Ok(out)
    }
}

pub fn shift_diagram(d: &LinkDiagram, spec: ShiftSpec) -> Result<LinkDiagram> {
    let len = spec.check(d)?;
    let mut comps: Vec<_> = d.components().iter().map(|c| c.passes().to_vec()).collect();
    comps[spec.component].rotate_left(spec.steps % len.max(1));
    Ok(LinkDiagram::from_valid(comps.into_iter().map(Into::into).collect()))
}

pub fn prediction(d: &LinkDiagram, spec: ShiftSpec) -> Result<ShiftPrediction> {
    spec.check(d)?;
    if let Some(id) = d.first_singular() {
        return Err(Error::SingularCrossing(id));
    }
    let i = spec.component;
    let n = propagate(d).component_weights[i];
    let mut total = 0;
    let mut multipliers = Vec::with_capacity(spec.steps);
    for p in &d.components()[i].passes()[..spec.steps] {
        total += p.index_change();
        let crossing = d.crossing(p.crossing).expect("valid diagram");
        let over = crossing.over().expect("classical").component;
        if p.is_over() {
            multipliers.push((p.crossing, i, n));
        } else {
            multipliers.push((p.crossing, over, -n));
        }
    }
    Ok(ShiftPrediction { component: i, total_index_change: total, multipliers })
}

/// The per-crossing terms of `mvaip(shift_diagram(d, spec))`, predicted
/// from `inv = mvaip(d)`.
pub fn predict_terms(inv: &InvariantResult, d: &LinkDiagram, spec: ShiftSpec) -> Result<CrossingTerms> {
    prediction(d, spec)?.apply(&inv.per_crossing)
}

pub fn predict(inv: &InvariantResult, d: &LinkDiagram, spec: ShiftSpec) -> Result<MVPolynomial> {
    Ok(predict_terms(inv, d, spec)?.polynomial())
}

/// Whether the prediction matches a direct computation.
pub fn verify_shift(d: &LinkDiagram, spec: ShiftSpec) -> Result<bool> {
    let inv = mvaip(d)?;
    let predicted = predict(&inv, d, spec)?;
    Ok(predicted == mvaip(&shift_diagram(d, spec)?)?.polynomial)
}
