//! One-variable specialisations: all variables to `t`, and `A - B` to `N`.

use vaip::invariant::difference_form;
use vaip::{kauffman_link_aip, mvaip, parse, Format, Notation};

fn main() -> Result<(), vaip::Error> {
    let d = parse("O1+ O2+ U1+ U3+ ; O3+ U2+")?;
    let p = mvaip(&d)?.polynomial;
    let t = Notation::single_variable("t");
    println!("multi-variable: {p}");
    println!("one variable:   {}", kauffman_link_aip(&d)?.render_with(Format::Text, &t));
    let n = difference_form(&p)?;
    println!("in N = A - B:   {}", n.render_with(Format::Text, &t.with_symbols(["N"])));
    Ok(())
}
