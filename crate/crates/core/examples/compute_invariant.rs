//! Compute the invariant of a few diagrams and show the per-crossing data.
//!
//! ```bash
//! cargo run --example compute_invariant
//! cargo run --example compute_invariant -- "O1+ O2+ ; U1+ U2+"
//! ```

use vaip::{mvaip, parse, Format};

fn main() -> Result<(), vaip::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let codes = if args.is_empty() {
        vec!["O1+ U2+ U1+ O2+".to_string(), "O1+ ; U1+".into(), "O1+ U2+ O3+ U1+ O2+ U3+".into()]
    } else {
        args
    };
    for code in codes {
        let d = parse(&code)?;
        let inv = mvaip(&d)?;
        println!("{code}");
        println!("  polynomial: {}", inv.polynomial);
        println!("  latex:      {}", inv.polynomial.render(Format::Latex));
        println!("  weights:    {:?}", inv.component_weights);
        for w in &inv.weights {
            println!(
                "  crossing {} ({}): over component {}, weight {}",
                w.crossing,
                w.sign.symbol(),
                w.over_component + 1,
                vaip::Notation::default().exponent(&w.exponent)
            );
        }
    }
    Ok(())
}
