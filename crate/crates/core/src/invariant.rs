//! The multi-variable affine index polynomial and its single-variable
//! specialisations.

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::labeling::{crossing_weights, propagate, CrossingWeight};
use crate::poly::{AffineExponent, Collapse, CrossingTerms, MVPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub polynomial: MVPolynomial,
    pub per_crossing: CrossingTerms,
    pub weights: Vec<CrossingWeight>,
    pub component_weights: Vec<i64>,
}

impl InvariantResult {
    pub fn is_compatible(&self) -> bool {
        self.component_weights.iter().all(|&w| w == 0)
    }

    /// Contributions of self-crossings only.
    pub fn self_crossing_part(&self) -> MVPolynomial {
        self.weights
            .iter()
            .filter(|w| w.is_self_crossing())
            .map(|w| {
                MVPolynomial::monomial(w.over_component, w.exponent.clone(), w.sign.value())
                    - MVPolynomial::constant(w.sign.value())
            })
            .sum()
    }
}

/// `Σ_c sign(c) (t_i^{W(c)} - 1)` with `i` the over-component of `c`.
///
/// Compatible and non-compatible diagrams are handled alike; the component
/// weights in the result say which one it was.
pub fn mvaip(d: &LinkDiagram) -> Result<InvariantResult> {
    let lab = propagate(d);
    let weights = crossing_weights(d, &lab)?;
    let per_crossing: CrossingTerms = weights.iter().map(CrossingWeight::term).collect();
    Ok(InvariantResult {
        polynomial: per_crossing.polynomial(),
        per_crossing,
        weights,
        component_weights: lab.component_weights,
    })
}

/// The original single-variable polynomial of a virtual knot, in `t1`.
pub fn aip_knot(d: &LinkDiagram) -> Result<MVPolynomial> {
    if d.num_components() != 1 {
        return Err(Error::NotAKnot(d.num_components()));
    }
    let p = mvaip(d)?.polynomial;
    debug_assert!(p.is_symbol_free());
    Ok(p)
}

/// Single-variable polynomial of a compatible link: every `t_i` set to
/// `t1`, symbols kept.
pub fn kauffman_link_aip(d: &LinkDiagram) -> Result<MVPolynomial> {
    let inv = mvaip(d)?;
    if !inv.is_compatible() {
        return Err(Error::NotCompatible(inv.component_weights));
    }
    if d.num_components() == 0 {
        return Ok(inv.polynomial);
    }
    Collapse::new(d.num_components()).all_vars(0)?.apply(&inv.polynomial)
}

/// Rewrites a two-component polynomial in the single symbol `N = A - B`
/// (stored as symbol 0) and a single variable.
///
/// Fails unless every exponent depends on `A` and `B` through `A - B`
/// only.
pub fn difference_form(p: &MVPolynomial) -> Result<MVPolynomial> {
    for (_, e, _) in p.terms() {
        if e.coeff(0) + e.coeff(1) != 0 || e.max_symbol().is_some_and(|s| s > 1) {
            return Err(Error::Collapse(format!(
                "exponent {} is not a function of A-B",
                crate::poly::Notation::default().exponent(e)
            )));
        }
    }
    Collapse::new(2).all_vars(0)?.symbol(0, AffineExponent::symbol(0))?.symbol(1, AffineExponent::default())?.apply(p)
}
