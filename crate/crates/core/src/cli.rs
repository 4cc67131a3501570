//! The `vaip` command line, as a library function so tests can drive it.
//!
//! Every command reads one diagram per line from a file or `-` (stdin),
//! writes data to stdout and diagnostics to stderr. Exit codes: 0 success,
//! 1 a check failed, 2 bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{CrossingId, LinkDiagram};
use crate::fuzz::{faulty_r2_applier, fuzz_with, Applier};
use crate::gauss::{format_diagram, parse_batch, BatchLine};
use crate::invariant::{difference_form, kauffman_link_aip, mvaip};
use crate::moves::{self, format_trace};
use crate::poly::{Format, MVPolynomial, Notation};
use crate::shift::{predict, shift_diagram, ShiftSpec};
use crate::vassiliev::{order_report, singularizations, singularize};

#[derive(Debug, Parser)]
#[command(name = "vaip", version, about = "Multi-variable affine index polynomial of virtual links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the invariant of each diagram.
    Compute {
        /// Input file, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Collapse to one variable (`single`) or to one variable and N = A - B (`n-form`).
        #[arg(long, value_enum)]
        collapse: Option<CollapseMode>,
        /// New component order, e.g. `2,1`: component i moves to position perm[i].
        #[arg(long)]
        order: Option<String>,
    },
    /// Random Reidemeister walks; fails if the invariant changes.
    Fuzz {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        moves: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Use an R2 insertion with a wrong sign (checks that failures are caught).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Check that the invariant vanishes with two or more double points.
    Vassiliev {
        input: String,
        /// `all`, or `sample N` for N random pairs per diagram.
        #[arg(long, num_args = 1..=2, default_values_t = [String::from("all")])]
        pairs: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Move a component's starting point and predict the new invariant.
    Shift {
        input: String,
        /// 1-based component index.
        #[arg(long)]
        component: usize,
        #[arg(long)]
        steps: usize,
        /// Recompute directly and compare.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CollapseMode {
    Single,
    #[value(name = "n-form", alias = "N-form")]
    NForm,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn fail(&mut self, code: i32, msg: impl AsRef<str>) {
        self.code = self.code.max(code);
        self.stderr.push_str(msg.as_ref());
        self.stderr.push('\n');
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Output::default();
    let input = match &cli.command {
        Command::Compute { input, .. }
        | Command::Fuzz { input, .. }
        | Command::Vassiliev { input, .. }
        | Command::Shift { input, .. } => input,
    };
    let text = match read_input(input, stdin) {
        Ok(t) => t,
        Err(e) => {
            out.fail(2, format!("{input}: {e}"));
            return out;
        }
    };
    let lines = parse_batch(&text);
    match cli.command {
        Command::Compute { format, collapse, order, .. } => {
            compute(&lines, format, collapse, order.as_deref(), &mut out)
        }
        Command::Fuzz { seed, moves, count, inject_fault, .. } => {
            let applier: Applier<'_> = if inject_fault { &faulty_r2_applier } else { &moves::apply };
            fuzz_cmd(&lines, seed, moves, count, applier, &mut out)
        }
        Command::Vassiliev { pairs, seed, .. } => vassiliev_cmd(&lines, &pairs, seed, &mut out),
        Command::Shift { component, steps, verify, .. } => shift_cmd(&lines, component, steps, verify, &mut out),
    }
    out
}

fn read_input(path: &str, stdin: &mut dyn Read) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Successfully parsed diagrams; parse errors are reported with their line.
fn diagrams<'a>(lines: &'a [BatchLine], out: &mut Output) -> Vec<(usize, &'a LinkDiagram)> {
    let mut ok = Vec::new();
    for l in lines {
        match &l.diagram {
            Ok(d) => ok.push((l.line, d)),
            Err(e) => out.fail(2, format!("line {}: {e}", l.line)),
        }
    }
    ok
}

fn parse_order(s: &str, n: usize) -> Result<Vec<usize>, String> {
    let perm: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
        .collect::<Option<_>>()
        .ok_or_else(|| format!("bad --order `{s}`"))?;
    if perm.len() != n {
        return Err(format!("--order `{s}` has {} entries, diagram has {n} components", perm.len()));
    }
    Ok(perm)
}

fn render(p: &MVPolynomial, format: OutputFormat, notation: &Notation) -> String {
    match format {
        OutputFormat::Text => p.render_with(Format::Text, notation),
        OutputFormat::Latex => p.render_with(Format::Latex, notation),
        OutputFormat::Json => p.to_json(),
    }
}

fn compute(
    lines: &[BatchLine],
    format: OutputFormat,
    collapse: Option<CollapseMode>,
    order: Option<&str>,
    out: &mut Output,
) {
    for (line, d) in diagrams(lines, out) {
        let d = match order {
            None => d.clone(),
            Some(o) => match parse_order(o, d.num_components())
                .and_then(|p| d.reorder_components(&p).map_err(|e| e.to_string()))
            {
                Ok(d) => d,
                Err(e) => {
                    out.fail(2, format!("line {line}: {e}"));
                    continue;
                }
            },
        };
        let inv = match mvaip(&d) {
            Ok(i) => i,
            Err(e) => {
                out.fail(2, format!("line {line}: {e}"));
                continue;
            }
        };
        let (poly, notation) = match collapse {
            None => (Ok(inv.polynomial.clone()), Notation::default()),
            Some(CollapseMode::Single) => (kauffman_link_aip(&d), Notation::single_variable("t")),
            Some(CollapseMode::NForm) => (
                kauffman_link_aip(&d).and_then(|_| difference_form(&inv.polynomial)),
                Notation::single_variable("t").with_symbols(["N"]),
            ),
        };
        let poly = match poly {
            Ok(p) => p,
            Err(e) => {
                out.fail(2, format!("line {line}: {e}"));
                continue;
            }
        };
        let compatible = inv.is_compatible();
        if format == OutputFormat::Json {
            let record = serde_json::json!({
                "polynomial": poly.to_json_value(),
                "weights": inv.component_weights,
                "compatible": compatible,
            });
            let _ = writeln!(out.stdout, "{record}");
        } else {
            let weights: Vec<String> = inv.component_weights.iter().map(i64::to_string).collect();
            let flag = if compatible { "compatible" } else { "non-compatible" };
            let _ = writeln!(out.stdout, "{}\t{}\t{flag}", render(&poly, format, &notation), weights.join(","));
        }
    }
}

fn fuzz_cmd(lines: &[BatchLine], seed: u64, n_moves: usize, count: usize, applier: Applier<'_>, out: &mut Output) {
    for (line, d) in diagrams(lines, out) {
        if count == 0 {
            continue;
        }
        let before = match mvaip(d) {
            Ok(i) => i.polynomial,
            Err(e) => {
                out.fail(2, format!("line {line}: {e}"));
                continue;
            }
        };
        let degrees = d.linking_degrees();
        let mut failed = false;
        for trial in 0..count {
            let s = seed.wrapping_add(trial as u64);
            let (after, trace) = fuzz_with(d, s, n_moves, applier);
            let now = mvaip(&after).expect("moves keep diagrams classical").polynomial;
            if now != before || after.linking_degrees() != degrees {
                let _ = writeln!(
                    out.stdout,
                    "line {line} seed {s}: MISMATCH\n  before: {before}\n  after:  {now}\n  trace:  {}",
                    format_trace(&trace)
                );
                out.code = out.code.max(1);
                failed = true;
                break;
            }
        }
        if !failed {
            let _ = writeln!(out.stdout, "line {line}: {count} walks of {n_moves} moves, invariant unchanged");
        }
    }
}

fn vassiliev_cmd(lines: &[BatchLine], pairs: &[String], seed: u64, out: &mut Output) {
    let sample = match pairs {
        [m] if m == "all" => None,
        [m, n] if m == "sample" => match n.parse::<usize>() {
            Ok(n) => Some(n),
            Err(_) => return out.fail(2, format!("bad --pairs sample count `{n}`")),
        },
        _ => return out.fail(2, format!("bad --pairs `{}`", pairs.join(" "))),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parsed = diagrams(lines, out);
    if parsed.is_empty() {
        return;
    }
    let (mut checked, mut failures, mut witnesses) = (0, Vec::new(), Vec::new());
    for (line, d) in parsed {
        let corpus: Vec<LinkDiagram> = if !d.is_classical() {
            vec![d.clone()]
        } else {
            let ids: Vec<CrossingId> = d.crossings().map(|c| c.id).collect();
            let mut doubles = match sample {
                None => singularizations(d, 2),
                Some(n) => {
                    let mut all: Vec<[CrossingId; 2]> = Vec::new();
                    for (i, &a) in ids.iter().enumerate() {
                        all.extend(ids[i + 1..].iter().map(|&b| [a, b]));
                    }
                    all.choose_multiple(&mut rng, n).map(|p| singularize(d, p).unwrap()).collect()
                }
            };
            doubles.extend(singularizations(d, 1));
            doubles
        };
        let r = order_report(&corpus);
        checked += r.checked;
        failures.extend(r.failures.into_iter().map(|e| (line, e)));
        witnesses.extend(r.witnesses.into_iter().map(|e| (line, e)));
    }
    let _ =
        writeln!(out.stdout, "checked {checked} diagrams with two or more double points: {} failures", failures.len());
    for (line, e) in &failures {
        let _ = writeln!(out.stdout, "FAIL line {line}: {} -> {}", e.code, e.value);
    }
    for (line, e) in &witnesses {
        let _ = writeln!(out.stdout, "witness line {line}: {} -> {}", e.code, e.value);
    }
    if !failures.is_empty() {
        out.code = out.code.max(1);
    }
}

fn shift_cmd(lines: &[BatchLine], component: usize, steps: usize, verify: bool, out: &mut Output) {
    for (line, d) in diagrams(lines, out) {
        let Some(c) = component.checked_sub(1).filter(|&c| c < d.num_components()) else {
            out.fail(2, format!("line {line}: no component {component} (diagram has {})", d.num_components()));
            continue;
        };
        let spec = ShiftSpec::new(c, steps);
        let result = mvaip(d).and_then(|inv| Ok((shift_diagram(d, spec)?, predict(&inv, d, spec)?)));
        let (shifted, predicted) = match result {
            Ok(r) => r,
            Err(e) => {
                out.fail(2, format!("line {line}: {e}"));
                continue;
            }
        };
        let _ = writeln!(out.stdout, "shifted:   {}", format_diagram(&shifted));
        let _ = writeln!(out.stdout, "predicted: {predicted}");
        if verify {
            let computed = mvaip(&shifted).expect("shifts keep diagrams classical").polynomial;
            let _ = writeln!(out.stdout, "computed:  {computed}");
            if computed == predicted {
                out.stdout.push_str("MATCH\n");
            } else {
                out.stdout.push_str("MISMATCH\n");
                out.code = out.code.max(1);
            }
        }
    }
}
