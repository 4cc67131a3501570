//! Independent oracles: a separate Gauss-code reader and label walks that
//! share no code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use serde_json::Value;
use vaip::MVPolynomial;

/// `(variable, symbol coefficients, constant) -> coefficient`, plus the
/// constant term. Variables and symbols are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<(usize, Vec<i64>, i64), i64>,
    pub constant: i64,
}

impl Poly {
    fn add(&mut self, var: usize, coeffs: Vec<i64>, c: i64, k: i64) {
        if coeffs.iter().all(|&x| x == 0) && c == 0 {
            self.constant += k;
            return;
        }
        let e = self.terms.entry((var, coeffs, c)).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn from_library(p: &MVPolynomial, n_symbols: usize) -> Poly {
        let mut out = Poly { constant: p.constant_term(), ..Poly::default() };
        for (var, e, k) in p.terms() {
            let coeffs = (0..n_symbols).map(|i| e.coeff(i)).collect();
            out.terms.insert((var, coeffs, e.constant_term()), k);
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
struct Tok {
    over: bool,
    id: u32,
    sign: i64,
}

fn read(code: &str) -> Vec<Vec<Tok>> {
    code.split(';')
        .map(|comp| {
            comp.split_whitespace()
                .map(|t| {
                    let b = t.as_bytes();
                    let over = match b[0] {
                        b'O' => true,
                        b'U' => false,
                        _ => panic!("oracle reads classical codes only: {t}"),
                    };
                    let sign = if b[b.len() - 1] == b'+' { 1 } else { -1 };
                    Tok { over, id: t[1..t.len() - 1].parse().unwrap(), sign }
                })
                .collect()
        })
        .collect()
}

/// Over pass changes the label by `-sign`, under pass by `+sign`.
fn change(t: &Tok) -> i64 {
    if t.over {
        -t.sign
    } else {
        t.sign
    }
}

struct Seen {
    comp: usize,
    label: (Vec<i64>, i64),
}

/// Crossing id -> (sign, [(incoming label, index change, is over)]).
type Table = BTreeMap<u32, (i64, Vec<(Seen, i64, bool)>)>;

/// For each crossing: sign, over component, and the (label, change) of
/// both passes as seen on the way in.
fn crossing_table(comps: &[Vec<Tok>], labels: &[Vec<(Vec<i64>, i64)>]) -> Table {
    let mut table = Table::new();
    for (c, comp) in comps.iter().enumerate() {
        for (k, t) in comp.iter().enumerate() {
            let e = table.entry(t.id).or_insert((t.sign, Vec::new()));
            e.1.push((Seen { comp: c, label: labels[c][k].clone() }, change(t), t.over));
        }
    }
    table
}

fn weights_to_poly(n: usize, table: Table, single: bool) -> Poly {
    let mut p = Poly::default();
    for (_, (sign, passes)) in table {
        let minus = passes.iter().find(|x| x.1 == -1).unwrap();
        let plus = passes.iter().find(|x| x.1 == 1).unwrap();
        let over = passes.iter().find(|x| x.2).unwrap().0.comp;
        let (m, pl) = (&minus.0.label, &plus.0.label);
        let diff: Vec<i64> = (0..n).map(|i| m.0[i] - pl.0[i]).collect();
        let (coeffs, c) =
            if sign > 0 { (diff, m.1 - pl.1 - 1) } else { (diff.iter().map(|x| -x).collect(), pl.1 - m.1 + 1) };
        p.add(if single { 0 } else { over }, coeffs, c, sign);
        p.constant -= sign;
    }
    p
}

/// The multi-variable polynomial from a literal bilabel walk: each
/// component starts at `(x1_c, x2_c)`; self-crossings move the first
/// coordinate, external ones the second; `X_c = x1_c + x2_c`.
pub fn bilabel_mvaip(code: &str) -> (Poly, Vec<i64>) {
    let comps = read(code);
    let n = comps.len();
    let is_self: BTreeMap<u32, bool> = {
        let mut owner: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (c, comp) in comps.iter().enumerate() {
            for t in comp {
                owner.entry(t.id).or_default().push(c);
            }
        }
        owner.into_iter().map(|(id, v)| (id, v[0] == v[1])).collect()
    };
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for (c, comp) in comps.iter().enumerate() {
        // symbolic parts over 2n lowercase symbols: x1_c at 2c, x2_c at 2c+1
        let mut first = (vec![0i64; 2 * n], 0i64);
        let mut second = (vec![0i64; 2 * n], 0i64);
        first.0[2 * c] = 1;
        second.0[2 * c + 1] = 1;
        let mut arcs = Vec::new();
        for t in comp {
            let combined: Vec<i64> = (0..2 * n).map(|i| first.0[i] + second.0[i]).collect();
            assert_eq!(combined[2 * c], combined[2 * c + 1], "X only appears as x1 + x2");
            let upper: Vec<i64> = (0..n).map(|i| combined[2 * i]).collect();
            arcs.push((upper, first.1 + second.1));
            if is_self[&t.id] {
                first.1 += change(t);
            } else {
                second.1 += change(t);
            }
        }
        assert_eq!(first.1, 0, "self-crossing changes cancel");
        weights.push(second.1);
        labels.push(arcs);
    }
    let table = crossing_table(&comps, &labels);
    (weights_to_poly(n, table, false), weights)
}

/// The one-variable link polynomial from single integer labels, or `None`
/// when some component's label does not close up.
pub fn single_label_aip(code: &str) -> Option<Poly> {
    let comps = read(code);
    let n = comps.len();
    let mut labels = Vec::new();
    for (c, comp) in comps.iter().enumerate() {
        let mut x = (vec![0i64; n], 0i64);
        x.0[c] = 1;
        let mut arcs = Vec::new();
        for t in comp {
            arcs.push(x.clone());
            x.1 += change(t);
        }
        if x.1 != 0 {
            return None;
        }
        labels.push(arcs);
    }
    let table = crossing_table(&comps, &labels);
    Some(weights_to_poly(n, table, true))
}

/// Checks the polynomial JSON layout: exactly `terms` and `constant`; each
/// term exactly `var` (>= 1), `coeff` (nonzero) and `exp` with `const` and
/// `coeffs` keyed by 1-based symbol indices.
pub fn check_poly_schema(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("not an object")?;
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    if keys != ["constant", "terms"] {
        return Err(format!("top-level keys {keys:?}"));
    }
    obj["constant"].as_i64().ok_or("constant is not an integer")?;
    for t in obj["terms"].as_array().ok_or("terms is not an array")? {
        let t = t.as_object().ok_or("term is not an object")?;
        let keys: Vec<&str> = t.keys().map(String::as_str).collect();
        if keys != ["coeff", "exp", "var"] {
            return Err(format!("term keys {keys:?}"));
        }
        if t["var"].as_u64().ok_or("var")? < 1 {
            return Err("var must be 1-based".into());
        }
        if t["coeff"].as_i64().ok_or("coeff")? == 0 {
            return Err("zero coefficient".into());
        }
        let e = t["exp"].as_object().ok_or("exp")?;
        let keys: Vec<&str> = e.keys().map(String::as_str).collect();
        if keys != ["coeffs", "const"] {
            return Err(format!("exp keys {keys:?}"));
        }
        e["const"].as_i64().ok_or("exp const")?;
        for (k, c) in e["coeffs"].as_object().ok_or("exp coeffs")? {
            if k.parse::<usize>().map_err(|_| format!("symbol key {k}"))? < 1 {
                return Err("symbol keys are 1-based".into());
            }
            if c.as_i64().ok_or("symbol coefficient")? == 0 {
                return Err("zero symbol coefficient".into());
            }
        }
    }
    Ok(())
}
