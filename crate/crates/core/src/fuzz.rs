//! Seeded random walks through Reidemeister moves.
//!
//! A walk draws moves from a ChaCha stream seeded by the caller, so the same
//! `(diagram, seed, n_moves)` always yields the same result and trace.
//! Inapplicable draws are skipped. Insertions dominate early in a walk and
//! removals late, which keeps diagrams small while still visiting R3 sites.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{CrossingId, LinkDiagram, Pass, PassKind, Sign};
use crate::moves::{self, r3_at, r3_sites, removal_sites, MoveError, MoveSpec, Site, R1, R2};

/// Applies one move; [`moves::apply`] unless a test swaps it out.
pub type Applier<'a> = &'a dyn Fn(&LinkDiagram, &MoveSpec) -> Result<LinkDiagram, MoveError>;

/// Draws per requested move before the walk gives up.
const ATTEMPTS_PER_MOVE: usize = 40;

pub fn fuzz(d: &LinkDiagram, seed: u64, n_moves: usize) -> (LinkDiagram, Vec<MoveSpec>) {
    fuzz_with(d, seed, n_moves, &moves::apply)
}

pub fn fuzz_with(d: &LinkDiagram, seed: u64, n_moves: usize, applier: Applier<'_>) -> (LinkDiagram, Vec<MoveSpec>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut trace = Vec::with_capacity(n_moves);
    let mut attempts = 0;
    while trace.len() < n_moves && attempts < n_moves * ATTEMPTS_PER_MOVE {
        attempts += 1;
        let progress = trace.len() as f64 / n_moves as f64;
        let specs = match draw_kind(&mut rng, progress) {
            Kind::R1 => random_r1(&cur, &mut rng).into_iter().collect(),
            Kind::R2 => random_r2(&cur, &mut rng).into_iter().collect(),
            Kind::R3 => r3_sites(&cur).choose(&mut rng).copied().into_iter().collect(),
            Kind::Triangle if n_moves - trace.len() >= 3 => triangle(&cur, &mut rng),
            Kind::Triangle => Vec::new(),
            Kind::Remove => removal_sites(&cur).choose(&mut rng).copied().into_iter().collect(),
        };
        if specs.is_empty() {
            continue;
        }
        let mut next = cur.clone();
        let mut ok = true;
        for spec in &specs {
            match applier(&next, spec) {
                Ok(n) => next = n,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            cur = next;
            trace.extend(specs);
        }
    }
    (cur, trace)
}

/// Re-applies a trace with the real moves.
pub fn replay(d: &LinkDiagram, specs: &[MoveSpec]) -> Result<LinkDiagram, MoveError> {
    specs.iter().try_fold(d.clone(), |cur, s| moves::apply(&cur, s))
}

/// A deliberately broken applier: R2 insertions give both crossings the
/// same sign. Used to check that campaigns notice a bad move.
pub fn faulty_r2_applier(d: &LinkDiagram, spec: &MoveSpec) -> Result<LinkDiagram, MoveError> {
    let out = moves::apply(d, spec)?;
    let MoveSpec::R2Insert(m) = spec else {
        return Ok(out);
    };
    let flip = |p: &Pass| match p.kind {
        PassKind::Over(s) if p.crossing == m.second => Pass::over(p.crossing.0, -s),
        PassKind::Under(s) if p.crossing == m.second => Pass::under(p.crossing.0, -s),
        _ => *p,
    };
    let comps = out.components().iter().map(|c| c.passes().iter().map(flip).collect::<Vec<_>>().into());
    Ok(LinkDiagram::new(comps.collect()).expect("flipping both passes keeps the diagram valid"))
}

#[derive(Clone, Copy)]
enum Kind {
    R1,
    R2,
    R3,
    Triangle,
    Remove,
}

fn draw_kind(rng: &mut ChaCha8Rng, progress: f64) -> Kind {
    const KINDS: [Kind; 5] = [Kind::R1, Kind::R2, Kind::R3, Kind::Triangle, Kind::Remove];
    let weights = [3.0, 3.0, 3.0, 2.0, 1.0 + 8.0 * progress];
    KINDS[WeightedIndex::new(weights).unwrap().sample(rng)]
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn random_gap(d: &LinkDiagram, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let c = rng.gen_range(0..d.num_components());
    (c, rng.gen_range(0..=d.components()[c].len()))
}

fn random_r1(d: &LinkDiagram, rng: &mut ChaCha8Rng) -> Option<MoveSpec> {
    let (c, g) = random_gap(d, rng);
    let spec = MoveSpec::R1Insert(R1 {
        site: Site::new(c, g),
        crossing: CrossingId(d.max_crossing_id() + 1),
        sign: random_sign(rng),
        over_first: rng.gen(),
    });
    moves::apply(d, &spec).ok().map(|_| spec)
}

/// Final block positions of an R2 inserted at two gaps of `d`.
fn r2_sites(over: (usize, usize), under: (usize, usize)) -> (Site, Site) {
    if over.0 != under.0 {
        return (Site::new(over.0, over.1), Site::new(under.0, under.1));
    }
    if over.1 <= under.1 {
        (Site::new(over.0, over.1), Site::new(under.0, under.1 + 2))
    } else {
        (Site::new(over.0, over.1 + 2), Site::new(under.0, under.1))
    }
}

fn r2_spec(d: &LinkDiagram, over: (usize, usize), under: (usize, usize), sign: Sign, parallel: bool) -> MoveSpec {
    let (over, under) = r2_sites(over, under);
    let next = d.max_crossing_id();
    MoveSpec::R2Insert(R2 { over, under, first: CrossingId(next + 1), second: CrossingId(next + 2), sign, parallel })
}

fn random_r2(d: &LinkDiagram, rng: &mut ChaCha8Rng) -> Option<MoveSpec> {
    let spec = r2_spec(d, random_gap(d, rng), random_gap(d, rng), random_sign(rng), rng.gen());
    moves::apply(d, &spec).ok().map(|_| spec)
}

/// Two bigons that push a third strand across both strands of a crossing,
/// followed by an R3 through the triangle they leave behind.
fn triangle(d: &LinkDiagram, rng: &mut ChaCha8Rng) -> Vec<MoveSpec> {
    let crossings: Vec<_> = d.crossings().filter(|c| !c.is_singular()).collect();
    let Some(c) = crossings.choose(rng) else {
        return Vec::new();
    };
    let (id, over, under) = (c.id, c.over().unwrap(), c.under().unwrap());
    let third = random_gap(d, rng);
    let mut variants: Vec<[bool; 8]> = (0..256u32).map(|v| std::array::from_fn(|i| v >> i & 1 == 1)).collect();
    variants.shuffle(rng);
    for v in variants {
        let sign = |b: bool| if b { Sign::Pos } else { Sign::Neg };
        let x_gap = (over.component, over.position + v[0] as usize);
        let (o1, u1) = if v[1] { (third, x_gap) } else { (x_gap, third) };
        let first = r2_spec(d, o1, u1, sign(v[2]), v[3]);
        let Ok(d1) = moves::apply(d, &first) else { continue };
        let MoveSpec::R2Insert(m1) = first else { unreachable!() };
        let block = if v[1] { m1.over } else { m1.under };
        let y_pos = d1.crossing(id).unwrap().under().unwrap().position;
        let y_gap = (under.component, y_pos + v[4] as usize);
        let t_gap = (block.component, block.position + 2);
        let (o2, u2) = if v[5] { (t_gap, y_gap) } else { (y_gap, t_gap) };
        let second = r2_spec(&d1, o2, u2, sign(v[6]), v[7]);
        let Ok(d2) = moves::apply(&d1, &second) else { continue };
        let MoveSpec::R2Insert(m2) = second else { unreachable!() };
        for a in [m1.first, m1.second] {
            for b in [m2.first, m2.second] {
                if let Some(r3) = r3_at(&d2, [a, b, id]) {
                    return vec![first, second, r3];
                }
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::parse;
    use crate::invariant::mvaip;

    fn inv(d: &LinkDiagram) -> crate::MVPolynomial {
        mvaip(d).unwrap().polynomial
    }

    #[test]
    fn zero_moves_is_identity() {
        let t = parse("O1+ U2+ U1+ O2+").unwrap();
        let (out, trace) = fuzz(&t, 7, 0);
        assert_eq!(out, t);
        assert!(trace.is_empty());
    }

    #[test]
    fn walks_preserve_the_invariant_and_replay() {
        for code in ["O1+ U2+ U1+ O2+", "O1+ O2+ ; U1+ U2+", "", "O1+ O2+ U1+ U3+ U4- ; O3+ U2+ O4-"] {
            let d = parse(code).unwrap();
            for seed in 0..10 {
                let (out, trace) = fuzz(&d, seed, 20);
                assert_eq!(trace.len(), 20, "{code} seed {seed}");
                assert_eq!(inv(&out), inv(&d), "{code} seed {seed}: {}", moves::format_trace(&trace));
                assert_eq!(replay(&d, &trace).unwrap(), out);
                assert_eq!(fuzz(&d, seed, 20), (out, trace));
            }
        }
    }

    #[test]
    fn triangles_produce_r3_moves() {
        let d = parse("O1+ U2+ U1+ O2+").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut found = 0;
        for _ in 0..20 {
            let specs = triangle(&d, &mut rng);
            if let [_, _, MoveSpec::R3(_)] = specs.as_slice() {
                found += 1;
                assert_eq!(inv(&replay(&d, &specs).unwrap()), inv(&d));
            }
        }
        assert!(found > 10, "{found}");
    }

    #[test]
    fn faulty_applier_is_caught() {
        let d = parse("O1+ U2+ U1+ O2+").unwrap();
        let caught = (0..20).any(|seed| {
            let (out, _) = fuzz_with(&d, seed, 20, &faulty_r2_applier);
            inv(&out) != inv(&d)
        });
        assert!(caught);
    }
}
