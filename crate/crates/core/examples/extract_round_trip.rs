//! Decompose a built algebra along its canonical triple and recover the
//! structure it was built from.
//!
//! Usage: `cargo run --release --example extract_round_trip -- sp:4:2`

use liejordan::io::write_lie;
use liejordan::isotypic::{decompose, extract};
use liejordan::models::{catalog_structure, ModelSpec};
use liejordan::tkk::{build, canonical_triple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: ModelSpec = std::env::args().nth(1).as_deref().unwrap_or("sl:5:1").parse()?;
    let s = catalog_structure(&spec)?;
    let l = build(&s)?;
    let t = canonical_triple(&l, &s)?;

    let data = decompose(&l, &t)?;
    println!(
        "{spec}: dim {}  multiplicities (trivial, plane, adjoint) = ({}, {}, {})",
        l.dim(),
        data.m0,
        data.m1,
        data.m2
    );

    let back = extract(&l, &t)?;
    println!("extracted structure equals the source: {}", back == s);
    let again = build(&back)?;
    println!("rebuilt lie-v1 bytes identical: {}", write_lie(&again) == write_lie(&l));
    Ok(())
}
