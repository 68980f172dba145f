//! Build the Lie algebra of the maximal structure on a `2n`-dimensional
//! symplectic space and check that it is a simple algebra of dimension
//! `(4n+1)(2n)`.
//!
//! Usage: `cargo run --release --example build_maximal -- 2`

use liejordan::tkk::{build, canonical_triple, invariant_form, JacobiMode};
use liejordan::LieJordanStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let s = LieJordanStructure::maximal(n)?;
    println!(
        "dim J1 = {}, dim J2 = {}, dim g0 = {}",
        s.dim_j1(),
        s.j2_basis.len(),
        s.g0_basis.len()
    );

    let l = build(&s)?;
    println!("built algebra: dim {} (so({}) has dim {})", l.dim(), 4 * n + 1, (4 * n + 1) * 4 * n / 2);

    let jacobi = l.verify_jacobi(JacobiMode::Full);
    println!("Jacobi: {} triples, violation {:?}", jacobi.triples, jacobi.violation);

    let simple = l.simplicity(42);
    println!(
        "Killing nondegenerate: {}, commutant dimension: {:?}",
        simple.killing_nondegenerate, simple.commutant_dimension
    );

    let t = canonical_triple(&l, &s)?;
    t.check(&l)?;
    let form = invariant_form(&l, &s)?;
    println!("(e, f) under the normalized invariant form: {}", liejordan::tkk::LieAlgebra::form_value(&form, &t.e, &t.f));
    Ok(())
}
