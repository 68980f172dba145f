//! The operator calculus on a symplectic space: symmetric and skew
//! operators, the Jordan product, the maps `φ_m`, `δ_m`, and the axiom
//! report of a structure.
//!
//! Usage: `cargo run --example symplectic_jordan`

use liejordan::foundation::{format_rational, unit_vec};
use liejordan::sympjordan::{jordan_product, validate, SymplecticSpace};
use liejordan::LieJordanStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = SymplecticSpace::side_diagonal(2);
    println!("Ω =");
    for r in 0..space.dim() {
        let row: Vec<String> = space.omega().row(r).iter().map(format_rational).collect();
        println!("  [{}]", row.join(" "));
    }

    let sym = space.sym_basis();
    let sp = space.sp_basis();
    println!("dim sym = {}, dim sp = {}", sym.len(), sp.len());

    let p = jordan_product(&space, &sym[0], &sym[1])?;
    println!("A0 ∘ A1 symmetric: {}", space.is_symmetric_operator(&p));

    let a = unit_vec(4, 0);
    let b = unit_vec(4, 3);
    println!("<a, b> = {}", space.pair(&a, &b));
    let phi = space.phi_m(&a, &b);
    let delta = space.delta_m(&a, &b);
    println!("φ_m(a, b) symmetric: {}", space.is_symmetric_operator(&phi));
    println!("δ_m(a, b) skew: {}", space.is_symplectic_operator(&delta));
    println!("tr φ_m(a, b) = {}", phi.trace());

    let s = LieJordanStructure::maximal(2)?;
    let report = validate(&s);
    for check in &report.checks {
        println!("  {:<28} {}", check.axiom, if check.passed { "pass" } else { "FAIL" });
    }
    Ok(())
}
