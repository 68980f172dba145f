//! Root systems and Chevalley bases: positive roots, integral structure
//! constants, and the checks on the resulting algebra.
//!
//! Usage: `cargo run --release --example chevalley_basis -- G 2`

use liejordan::rootsys::{build_root_system, chevalley_algebra, RootType};
use liejordan::tkk::JacobiMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: RootType = args.first().map(String::as_str).unwrap_or("G").parse()?;
    let rank: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(2);

    let rs = build_root_system(kind, rank)?;
    println!("{}: {} positive roots, highest root {:?}", rs.name(), rs.num_positive(), rs.highest_root);
    println!("Cartan matrix:");
    for row in &rs.cartan {
        println!("  {row:?}");
    }

    let l = chevalley_algebra(&rs);
    let integral = l.entries().all(|(_, _, t)| t.iter().all(|(_, c)| c.is_integer()));
    println!("dim {}, integral structure constants: {integral}", l.dim());
    let j = l.verify_jacobi(JacobiMode::default_for(l.dim(), 42));
    println!("Jacobi ({:?}): violation {:?}", j.mode, j.violation);
    println!("simple: {}", l.is_simple());
    Ok(())
}
