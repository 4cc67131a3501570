//! Exact arithmetic on polynomials whose exponents are affine expressions in
//! per-component symbols.
//!
//! Component `i` (0-based) owns the variable `t_{i+1}` and the uppercase
//! symbol `A`, `B`, ... standing for the sum of its starting bilabel. An
//! exponent is an integer plus an integer combination of those symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::diagram::{CrossingId, Sign};
use crate::error::{Error, Result};

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in polynomial arithmetic")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in polynomial arithmetic")
}

fn checked_neg(a: i64) -> i64 {
    a.checked_neg().expect("integer overflow in polynomial arithmetic")
}

/// `constant + Σ coeffs[i] * X_i`, zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AffineExponent {
    constant: i64,
    coeffs: BTreeMap<usize, i64>,
}

impl AffineExponent {
    pub fn constant(c: i64) -> Self {
        AffineExponent { constant: c, coeffs: BTreeMap::new() }
    }

    /// The bare symbol of component `i`.
    pub fn symbol(i: usize) -> Self {
        Self::from_parts(0, [(i, 1)])
    }

    pub fn from_parts(constant: i64, coeffs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut e = AffineExponent::constant(constant);
        for (i, k) in coeffs {
            e.add_coeff(i, k);
        }
        e
    }

    fn add_coeff(&mut self, i: usize, k: i64) {
        let v = checked_add(self.coeff(i), k);
        if v == 0 {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, v);
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero symbol coefficients in component order.
    pub fn coeffs(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &k)| (i, k))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.coeffs.is_empty()
    }

    pub fn max_symbol(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn plus(&self, k: i64) -> Self {
        AffineExponent { constant: checked_add(self.constant, k), ..self.clone() }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut e = AffineExponent::constant(checked_mul(self.constant, k));
        for (i, c) in self.coeffs() {
            e.add_coeff(i, checked_mul(c, k));
        }
        e
    }

    /// Substitutes `X_i := X_i + k`.
    pub fn shift_symbol(&self, i: usize, k: i64) -> Self {
        self.plus(checked_mul(self.coeff(i), k))
    }

    /// Replaces each symbol that has an entry in `map` by its expression.
    pub fn substitute(&self, map: &BTreeMap<usize, AffineExponent>) -> Self {
        let mut out = AffineExponent::constant(self.constant);
        for (i, k) in self.coeffs() {
            match map.get(&i) {
                Some(e) => out = &out + &e.scale(k),
                None => out.add_coeff(i, k),
            }
        }
        out
    }

    /// Renames symbol `i` to `perm[i]`.
    pub fn permute_symbols(&self, perm: &[usize]) -> Self {
        Self::from_parts(self.constant, self.coeffs().map(|(i, k)| (perm[i], k)))
    }
}

impl Add for &AffineExponent {
    type Output = AffineExponent;

    fn add(self, other: &AffineExponent) -> AffineExponent {
        let mut e = self.plus(other.constant);
        for (i, k) in other.coeffs() {
            e.add_coeff(i, k);
        }
        e
    }
}

impl Add for AffineExponent {
    type Output = AffineExponent;

    fn add(self, other: AffineExponent) -> AffineExponent {
        &self + &other
    }
}

impl Neg for &AffineExponent {
    type Output = AffineExponent;

    fn neg(self) -> AffineExponent {
        self.scale(-1)
    }
}

impl Neg for AffineExponent {
    type Output = AffineExponent;

    fn neg(self) -> AffineExponent {
        self.scale(-1)
    }
}

impl Sub for &AffineExponent {
    type Output = AffineExponent;

    fn sub(self, other: &AffineExponent) -> AffineExponent {
        self + &(-other)
    }
}

impl Sub for AffineExponent {
    type Output = AffineExponent;

    fn sub(self, other: AffineExponent) -> AffineExponent {
        &self - &other
    }
}

impl From<i64> for AffineExponent {
    fn from(c: i64) -> Self {
        AffineExponent::constant(c)
    }
}

/// Canonical term order: symbol-coefficient vectors ascending (compared
/// component by component), then the integer part descending, so that
/// symbol-free powers read from the highest degree down.
impl Ord for AffineExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let top = self.max_symbol().max(other.max_symbol());
        if let Some(top) = top {
            for i in 0..=top {
                match self.coeff(i).cmp(&other.coeff(i)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
        }
        other.constant.cmp(&self.constant)
    }
}

impl PartialOrd for AffineExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable and symbol names used when rendering.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Notation {
    single_var: Option<String>,
    symbols: Vec<String>,
}

impl Notation {
    /// Every variable prints as `name` (for collapsed polynomials).
    pub fn single_variable(name: &str) -> Self {
        Notation { single_var: Some(name.to_string()), symbols: Vec::new() }
    }

    /// Overrides the names of the first symbols.
    pub fn with_symbols<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.symbols = names.into_iter().map(Into::into).collect();
        self
    }

    fn var(&self, i: usize, latex: bool) -> String {
        match &self.single_var {
            Some(name) => name.clone(),
            None if latex => format!("t_{{{}}}", i + 1),
            None => format!("t{}", i + 1),
        }
    }

    fn symbol(&self, i: usize) -> String {
        if let Some(s) = self.symbols.get(i) {
            return s.clone();
        }
        if i < 26 {
            ((b'A' + i as u8) as char).to_string()
        } else {
            format!("X{}", i + 1)
        }
    }

    pub fn exponent(&self, e: &AffineExponent) -> String {
        let mut out = String::new();
        let positive = e.coeffs().filter(|&(_, k)| k > 0);
        let negative = e.coeffs().filter(|&(_, k)| k < 0);
        for (i, k) in positive.chain(negative) {
            if k < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k.abs() != 1 {
                out.push_str(&k.unsigned_abs().to_string());
            }
            out.push_str(&self.symbol(i));
        }
        let c = e.constant_term();
        if out.is_empty() {
            out = c.to_string();
        } else if c != 0 {
            out.push(if c < 0 { '-' } else { '+' });
            out.push_str(&c.unsigned_abs().to_string());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// A finite signed sum of `t_var^exponent` plus an integer constant.
///
/// Stored canonically: one entry per `(var, exponent)`, no zero
/// coefficients, and identically-zero exponents folded into the constant.
/// Equality is therefore structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MVPolynomial {
    terms: BTreeMap<(usize, AffineExponent), i64>,
    constant: i64,
}

impl MVPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        MVPolynomial { terms: BTreeMap::new(), constant: c }
    }

    pub fn monomial(var: usize, exponent: AffineExponent, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(var, exponent, coeff);
        p
    }

    pub fn add_term(&mut self, var: usize, exponent: AffineExponent, coeff: i64) {
        if exponent.is_zero() {
            self.constant = checked_add(self.constant, coeff);
            return;
        }
        let key = (var, exponent);
        let v = checked_add(self.terms.get(&key).copied().unwrap_or(0), coeff);
        if v == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    /// `(var, exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &AffineExponent, i64)> + '_ {
        self.terms.iter().map(|((v, e), &c)| (*v, e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.terms.is_empty()
    }

    pub fn is_symbol_free(&self) -> bool {
        self.terms.keys().all(|(_, e)| e.is_constant())
    }

    pub fn coefficient(&self, var: usize, exponent: &AffineExponent) -> i64 {
        if exponent.is_zero() {
            return self.constant;
        }
        self.terms.get(&(var, exponent.clone())).copied().unwrap_or(0)
    }

    pub fn map_terms(&self, f: impl Fn(usize, &AffineExponent) -> (usize, AffineExponent)) -> Self {
        let mut out = MVPolynomial::constant(self.constant);
        for (v, e, c) in self.terms() {
            let (v2, e2) = f(v, e);
            out.add_term(v2, e2, c);
        }
        out
    }

    /// `p(t_1^{-1}, ..., t_n^{-1})` with every symbol negated as well.
    pub fn negate_exponents(&self) -> Self {
        self.map_terms(|v, e| (v, -e))
    }

    /// Sends `t_i` to `t_{perm[i]}` and symbol `i` to symbol `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        self.map_terms(|v, e| (perm[v], e.permute_symbols(perm)))
    }

    pub fn shift_symbol(&self, i: usize, k: i64) -> Self {
        self.map_terms(|v, e| (v, e.shift_symbol(i, k)))
    }

    /// Largest variable or symbol index mentioned, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().map(|(v, e)| e.max_symbol().map_or(*v, |s| s.max(*v))).max()
    }

    pub fn render(&self, format: Format) -> String {
        self.render_with(format, &Notation::default())
    }

    pub fn render_with(&self, format: Format, notation: &Notation) -> String {
        match format {
            Format::Text => self.render_infix(notation, false),
            Format::Latex => self.render_infix(notation, true),
            Format::Json => self.to_json(),
        }
    }

    fn render_infix(&self, notation: &Notation, latex: bool) -> String {
        let mut pieces: Vec<(bool, String)> = Vec::new();
        for (v, e, c) in self.terms() {
            let mut body = String::new();
            if c.abs() != 1 {
                body.push_str(&c.unsigned_abs().to_string());
            }
            body.push_str(&notation.var(v, latex));
            if *e != AffineExponent::constant(1) {
                let exp = notation.exponent(e);
                if latex {
                    body.push_str(&format!("^{{{exp}}}"));
                } else {
                    body.push_str(&format!("^({exp})"));
                }
            }
            pieces.push((c < 0, body));
        }
        if self.constant != 0 {
            pieces.push((self.constant < 0, self.constant.unsigned_abs().to_string()));
        }
        if pieces.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (negative, body)) in pieces.iter().enumerate() {
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(body);
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial JSON is always serializable")
    }

    /// `{"terms":[{"var":i,"coeff":m,"exp":{"const":c,"coeffs":{"<idx>":k}}}],"constant":c0}`
    /// with 1-based variable and symbol indices, terms in canonical order.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PolyJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        raw.try_into()
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<Self> {
        let raw: PolyJson = serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

impl Add for &MVPolynomial {
    type Output = MVPolynomial;

    fn add(self, other: &MVPolynomial) -> MVPolynomial {
        let mut out = self.clone();
        out.constant = checked_add(out.constant, other.constant);
        for (v, e, c) in other.terms() {
            out.add_term(v, e.clone(), c);
        }
        out
    }
}

impl Add for MVPolynomial {
    type Output = MVPolynomial;

    fn add(self, other: MVPolynomial) -> MVPolynomial {
        &self + &other
    }
}

impl Neg for &MVPolynomial {
    type Output = MVPolynomial;

    fn neg(self) -> MVPolynomial {
        MVPolynomial {
            terms: self.terms.iter().map(|(k, &c)| (k.clone(), checked_neg(c))).collect(),
            constant: checked_neg(self.constant),
        }
    }
}

impl Neg for MVPolynomial {
    type Output = MVPolynomial;

    fn neg(self) -> MVPolynomial {
        -&self
    }
}

impl Sub for &MVPolynomial {
    type Output = MVPolynomial;

    fn sub(self, other: &MVPolynomial) -> MVPolynomial {
        self + &(-other)
    }
}

impl Sub for MVPolynomial {
    type Output = MVPolynomial;

    fn sub(self, other: MVPolynomial) -> MVPolynomial {
        &self - &other
    }
}

impl std::iter::Sum for MVPolynomial {
    fn sum<I: Iterator<Item = MVPolynomial>>(iter: I) -> Self {
        iter.fold(MVPolynomial::zero(), |a, b| a + b)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpJson {
    #[serde(rename = "const")]
    constant: i64,
    coeffs: BTreeMap<usize, i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    var: usize,
    coeff: i64,
    exp: ExpJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    terms: Vec<TermJson>,
    constant: i64,
}

impl From<&MVPolynomial> for PolyJson {
    fn from(p: &MVPolynomial) -> Self {
        PolyJson {
            terms: p
                .terms()
                .map(|(v, e, c)| TermJson {
                    var: v + 1,
                    coeff: c,
                    exp: ExpJson { constant: e.constant_term(), coeffs: e.coeffs().map(|(i, k)| (i + 1, k)).collect() },
                })
                .collect(),
            constant: p.constant,
        }
    }
}

impl TryFrom<PolyJson> for MVPolynomial {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        let one_based =
            |i: usize, what: &str| i.checked_sub(1).ok_or_else(|| Error::Json(format!("{what} index must be >= 1")));
        let mut p = MVPolynomial::constant(raw.constant);
        for t in raw.terms {
            let var = one_based(t.var, "variable")?;
            let mut coeffs = Vec::new();
            for (i, k) in t.exp.coeffs {
                coeffs.push((one_based(i, "symbol")?, k));
            }
            p.add_term(var, AffineExponent::from_parts(t.exp.constant, coeffs), t.coeff);
        }
        Ok(p)
    }
}

/// A substitution of variables and symbols, e.g. `t_i := t` or `A - B := N`.
///
/// Indices refer to the `arity` components of the polynomial it is
/// applied to; anything outside that range is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    arity: usize,
    vars: BTreeMap<usize, usize>,
    symbols: BTreeMap<usize, AffineExponent>,
}

impl Collapse {
    pub fn new(arity: usize) -> Self {
        Collapse { arity, vars: BTreeMap::new(), symbols: BTreeMap::new() }
    }

    fn check(&self, i: usize, what: &str) -> Result<()> {
        if i < self.arity {
            Ok(())
        } else {
            Err(Error::Collapse(format!("unknown {what} {} (arity {})", i + 1, self.arity)))
        }
    }

    pub fn var(mut self, from: usize, to: usize) -> Result<Self> {
        self.check(from, "variable")?;
        self.check(to, "variable")?;
        self.vars.insert(from, to);
        Ok(self)
    }

    /// Sends every variable to `to`.
    pub fn all_vars(mut self, to: usize) -> Result<Self> {
        self.check(to, "variable")?;
        self.vars = (0..self.arity).map(|i| (i, to)).collect();
        Ok(self)
    }

    /// Replaces symbol `i` by `value`. Symbols appearing in `value` are
    /// not substituted again.
    pub fn symbol(mut self, i: usize, value: AffineExponent) -> Result<Self> {
        self.check(i, "symbol")?;
        self.symbols.insert(i, value);
        Ok(self)
    }

    pub fn apply(&self, p: &MVPolynomial) -> Result<MVPolynomial> {
        if let Some(top) = p.max_index() {
            self.check(top, "index in polynomial")?;
        }
        Ok(p.map_terms(|v, e| (self.vars.get(&v).copied().unwrap_or(v), e.substitute(&self.symbols))))
    }
}

/// One crossing's contribution `sign * (t_var^exponent - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingTerm {
    pub crossing: CrossingId,
    pub sign: Sign,
    pub var: usize,
    pub exponent: AffineExponent,
}

/// Crossing contributions kept apart so that "the term of crossing c" stays
/// meaningful when several crossings contribute equal monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossingTerms {
    terms: BTreeMap<CrossingId, CrossingTerm>,
}

impl CrossingTerms {
    pub fn get(&self, id: CrossingId) -> Option<&CrossingTerm> {
        self.terms.get(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CrossingTerm> + '_ {
        self.terms.values()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn shift_symbol(&mut self, i: usize, k: i64) {
        for t in self.terms.values_mut() {
            t.exponent = t.exponent.shift_symbol(i, k);
        }
    }

    /// Multiplies the `t_var^e` part of crossing `id`'s term by `t_var^k`.
    /// The `-1` of `(t^e - 1)` is untouched.
    pub fn multiply_term(&mut self, id: CrossingId, var: usize, k: i64) -> Result<()> {
        let t = self.terms.get_mut(&id).ok_or(Error::Provenance(id))?;
        if t.var != var {
            return Err(Error::Provenance(id));
        }
        t.exponent = t.exponent.plus(k);
        Ok(())
    }

    /// `Σ sign (t_var^exponent - 1)`.
    pub fn polynomial(&self) -> MVPolynomial {
        let mut p = MVPolynomial::zero();
        for t in self.terms.values() {
            p.add_term(t.var, t.exponent.clone(), t.sign.value());
            p.constant = checked_add(p.constant, -t.sign.value());
        }
        p
    }
}

impl FromIterator<CrossingTerm> for CrossingTerms {
    fn from_iter<I: IntoIterator<Item = CrossingTerm>>(iter: I) -> Self {
        CrossingTerms { terms: iter.into_iter().map(|t| (t.crossing, t)).collect() }
    }
}
