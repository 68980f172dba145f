//! Compare a built algebra with the commutators of its matrix model, then
//! show that a mis-scaled symplectic form is caught.
//!
//! Usage: `cargo run --release --example oracle_check -- so-odd:3:2`

use liejordan::foundation::rat;
use liejordan::models::{catalog_structure, oracle_check, oracle_check_structure, ModelSpec};
use liejordan::sympjordan::SymplecticSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: ModelSpec = std::env::args().nth(1).as_deref().unwrap_or("maximal:1").parse()?;
    let r = oracle_check(&spec)?;
    println!("{}: {} bracket pairs, {} mismatches", r.model, r.pairs, r.mismatches);

    let mut s = catalog_structure(&spec)?;
    s.space = SymplecticSpace::new(s.space.omega().scale(&rat(2)))?;
    let r = oracle_check_structure(&spec, &s)?;
    println!(
        "omega × 2: {} mismatches, first at {:?}",
        r.mismatches, r.first_mismatch
    );
    Ok(())
}
