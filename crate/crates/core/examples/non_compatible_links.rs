//! Links whose components have nonzero weight, and what changes with them.

use vaip::labeling::propagate;
use vaip::{kauffman_link_aip, mvaip, parse};

fn main() -> Result<(), vaip::Error> {
    for code in ["O1+ O2+ U1+ U3+ ; O3+ U2+", "O1+ O2+ U1+ U3+ U4- ; O3+ U2+ O4-", "O1+ O2+ ; U1+ ; U2+"] {
        let d = parse(code)?;
        let lab = propagate(&d);
        println!("{code}");
        println!("  component weights: {:?}", lab.component_weights);
        println!("  mvaip:             {}", mvaip(&d)?.polynomial);
        match kauffman_link_aip(&d) {
            Ok(p) => println!("  one variable:      {p}"),
            Err(e) => println!("  one variable:      {e}"),
        }
        println!("  linking degrees:   {:?}", d.linking_degrees());
    }
    Ok(())
}
