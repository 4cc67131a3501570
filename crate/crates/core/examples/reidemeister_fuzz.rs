//! Random Reidemeister walks, with a replayable trace.
//!
//! ```bash
//! cargo run --example reidemeister_fuzz -- 42
//! ```

use vaip::fuzz::{fuzz, replay};
use vaip::moves::{format_trace, parse_trace};
use vaip::{mvaip, parse, serialize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let d = parse("O1+ O2+ U1+ U3+ U4- ; O3+ U2+ O4-")?;
    let (out, trace) = fuzz(&d, seed, 20);
    let text = format_trace(&trace);
    println!("start:  {}", serialize(&d));
    println!("end:    {}", serialize(&out));
    println!("trace:  {text}");
    println!("before: {}", mvaip(&d)?.polynomial);
    println!("after:  {}", mvaip(&out)?.polynomial);
    assert_eq!(replay(&d, &parse_trace(&text)?)?, out);
    Ok(())
}
