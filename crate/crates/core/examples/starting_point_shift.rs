//! Moving a starting point: predicted versus recomputed invariants.

use vaip::shift::{predict, shift_diagram, verify_shift, ShiftSpec};
use vaip::{gauss::format_diagram, mvaip, parse};

fn main() -> Result<(), vaip::Error> {
    let d = parse("O1+ O2+ ; U1+ U2+")?;
    let inv = mvaip(&d)?;
    println!("{}  ->  {}", format_diagram(&d), inv.polynomial);
    for (i, comp) in d.components().iter().enumerate() {
        for steps in 1..=comp.len() {
            let spec = ShiftSpec::new(i, steps);
            println!(
                "  component {} by {steps}: {}  predicted {}  ({})",
                i + 1,
                format_diagram(&shift_diagram(&d, spec)?),
                predict(&inv, &d, spec)?,
                if verify_shift(&d, spec)? { "matches" } else { "differs" }
            );
        }
    }
    Ok(())
}
