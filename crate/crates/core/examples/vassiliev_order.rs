//! Double points: resolutions, the extended invariant, and an order check.

use vaip::corpus;
use vaip::vassiliev::{order_report, resolve, singularizations, v_extend};
use vaip::{gauss::format_diagram, parse};

fn main() -> Result<(), vaip::Error> {
    let sd = parse("S1l O2+ S1r U2+")?;
    for (c, r) in resolve(&sd) {
        println!("{c:+} x {}", format_diagram(&r));
    }
    println!("extended value: {}", v_extend(&sd));

    let mut singular = Vec::new();
    for e in corpus::base().into_iter().filter(|e| e.diagram.num_crossings() <= 6) {
        singular.extend(singularizations(&e.diagram, 2));
        singular.extend(singularizations(&e.diagram, 1));
    }
    let report = order_report(&singular);
    println!(
        "{} diagrams with two double points, {} nonzero; {} one-point witnesses",
        report.checked,
        report.failures.len(),
        report.witnesses.len()
    );
    Ok(())
}
