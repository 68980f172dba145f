//! Classify the short gradings of a simple type and print the table.
//!
//! Usage: `cargo run --release --example classify_exceptional -- E 6`

use std::time::Instant;

use liejordan::rootsys::{classify, RootType};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: RootType = args.first().map(String::as_str).unwrap_or("F").parse()?;
    let rank: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(4);

    let start = Instant::now();
    let rows = classify(kind, rank, 20, 42)?;
    println!("{kind}{rank}: {} markings in {:.2?}", rows.len(), start.elapsed());
    for (i, row) in rows.iter().enumerate() {
        let (g0, j1, j2) = row.dims;
        print!(
            "  [{i}] p = {:?}  exists = {:<5}  dim g0 = {g0:>3}  dim J1 = {j1:>3}  dim J2 = {j2:>2}",
            row.marking.0, row.exists
        );
        if let Some(j) = row.equivalent_to {
            print!("  (equivalent to [{j}])");
        }
        println!();
        for note in &row.notes {
            println!("      note: {note}");
        }
    }
    Ok(())
}
