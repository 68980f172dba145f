//! Existence of sl2-triples for the markings of the classical types at
//! small rank.
//!
//! Usage: `cargo run --release --example classical_rules -- D 5`

use liejordan::rootsys::{classify, RootType};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: RootType = args.first().map(String::as_str).unwrap_or("A").parse()?;
    let rank: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(4);

    for row in classify(kind, rank, 20, 42)? {
        let nodes: Vec<String> = row.marking.marked_nodes().iter().map(|i| format!("α{i}")).collect();
        let (g0, j1, j2) = row.dims;
        println!(
            "{:<12} {:?}  exists = {:<5}  (dim g0, dim J1, dim J2) = ({g0}, {j1}, {j2})",
            nodes.join("+"),
            row.marking.0,
            row.exists
        );
    }
    Ok(())
}
