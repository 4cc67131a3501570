//! Named base diagrams and random diagrams for tests and campaigns.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Component, LinkDiagram, Pass};
use crate::gauss::parse;

const BASE: &str = include_str!("../corpus/base.txt");

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub code: String,
    pub diagram: LinkDiagram,
}

/// The standard corpus: knots and two- and three-component links, both
/// compatible and not, mostly with at most six crossings.
pub fn base() -> Vec<Entry> {
    let mut out = vec![Entry { name: "unknot".into(), code: String::new(), diagram: LinkDiagram::unknot() }];
    let mut name = String::new();
    for line in BASE.lines().map(str::trim) {
        if let Some(c) = line.strip_prefix('#') {
            name = c.trim().to_string();
        } else if !line.is_empty() {
            let diagram = parse(line).unwrap_or_else(|e| panic!("corpus entry `{name}`: {e}"));
            out.push(Entry { name: name.clone(), code: line.to_string(), diagram });
        }
    }
    out
}

pub fn knots() -> Vec<Entry> {
    base().into_iter().filter(|e| e.diagram.num_components() == 1).collect()
}

/// A random valid diagram with up to `max_crossings` crossings spread
/// over 1 to `max_components` components (some possibly empty).
pub fn random_diagram(rng: &mut impl Rng, max_crossings: u32, max_components: usize) -> LinkDiagram {
    let n = rng.gen_range(0..=max_crossings);
    let k = rng.gen_range(1..=max_components.max(1));
    let mut passes = Vec::with_capacity(2 * n as usize);
    for id in 1..=n {
        let sign = if rng.gen() { crate::Sign::Pos } else { crate::Sign::Neg };
        passes.push(Pass::over(id, sign));
        passes.push(Pass::under(id, sign));
    }
    passes.shuffle(rng);
    let mut cuts: Vec<usize> = (0..k - 1).map(|_| rng.gen_range(0..=passes.len())).collect();
    cuts.sort();
    let mut comps = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain([passes.len()]) {
        comps.push(Component::new(passes[prev..c].to_vec()));
        prev = c;
    }
    LinkDiagram::new(comps).expect("generated diagrams are valid")
}

/// Like [`random_diagram`], with each crossing turned into a double point
/// with probability `p`.
pub fn random_singular(rng: &mut impl Rng, max_crossings: u32, max_components: usize, p: f64) -> LinkDiagram {
    let d = random_diagram(rng, max_crossings, max_components);
    let ids: Vec<_> = d.crossings().map(|c| c.id).filter(|_| rng.gen_bool(p)).collect();
    crate::vassiliev::singularize(&d, &ids).expect("ids come from the diagram")
}
