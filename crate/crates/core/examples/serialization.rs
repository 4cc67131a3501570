//! Canonical Gauss codes and polynomial JSON.

use vaip::{mvaip, parse, serialize, MVPolynomial};

fn main() -> Result<(), vaip::Error> {
    let d = parse("  O7+ U3+;U7+ O3+ ")?;
    println!("canonical: {}", serialize(&d));
    let p = mvaip(&d)?.polynomial;
    let json = p.to_json();
    println!("json:      {json}");
    assert_eq!(MVPolynomial::from_json(&json)?, p);
    Ok(())
}
