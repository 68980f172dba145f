//! Build every catalog model, verify it, and compare it against matrices.
//!
//! Usage: `cargo run --release --example catalog_models [-- sl:5:1 ...]`

use std::time::Instant;

use liejordan::isotypic::extract;
use liejordan::models::{acceptance_catalog, catalog_extraction, oracle_check, ModelSpec};
use liejordan::sympjordan::validate;
use liejordan::tkk::{build, canonical_triple, JacobiMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs: Vec<ModelSpec> = {
        let args: Vec<String> = std::env::args().skip(1).collect();
        if args.is_empty() {
            acceptance_catalog()
        } else {
            args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
        }
    };
    let total = Instant::now();
    for spec in specs {
        let start = Instant::now();
        let (amb, ex) = catalog_extraction(&spec)?;
        let s = &ex.structure;
        let report = validate(s);
        let l = build(s)?;
        let jacobi = l.verify_jacobi(JacobiMode::Full);
        let simple = l.simplicity(42);
        let oracle = oracle_check(&spec)?;
        let again = extract(&l, &canonical_triple(&l, s)?)?;
        println!(
            "{:<16} ambient {:>3}  g0 {:>3}  J1 {:>3}  J2 {:>3}  valid {:<5}  jacobi {:<5}  simple {:<5}  oracle {}/{}  round-trip {:<5}  {:.2?}",
            spec.to_string(),
            amb.algebra.dim(),
            s.g0_basis.len(),
            s.dim_j1(),
            s.j2_basis.len(),
            report.passed(),
            jacobi.passed(),
            simple.is_simple(),
            oracle.pairs - oracle.mismatches,
            oracle.pairs,
            again == *s,
            start.elapsed()
        );
        for note in &report.notes {
            println!("    note: {note}");
        }
    }
    println!("total {:.2?}", total.elapsed());
    Ok(())
}
