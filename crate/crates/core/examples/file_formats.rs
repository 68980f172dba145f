//! Write and read the JSON file formats: an algebra (lie-v1), a structure
//! (ljs-v1), a triple, and a classification (cls-v1).
//!
//! Usage: `cargo run --release --example file_formats -- /tmp/out`

use std::path::PathBuf;

use liejordan::io;
use liejordan::rootsys::{classify, RootType};
use liejordan::tkk::{build, canonical_triple};
use liejordan::LieJordanStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/formats".into()));
    std::fs::create_dir_all(&dir)?;

    let s = LieJordanStructure::maximal(1)?;
    let l = build(&s)?;
    let t = canonical_triple(&l, &s)?;
    std::fs::write(dir.join("so5.lie.json"), io::write_lie(&l))?;
    std::fs::write(dir.join("so5.ljs.json"), io::write_ljs(&s))?;
    std::fs::write(dir.join("so5.triple.json"), io::write_triple(&t))?;
    std::fs::write(dir.join("g2.cls.json"), io::write_cls(&classify(RootType::G, 2, 20, 42)?))?;

    let l2 = io::read_lie(&std::fs::read_to_string(dir.join("so5.lie.json"))?)?;
    let s2 = io::read_ljs(&std::fs::read_to_string(dir.join("so5.ljs.json"))?)?;
    let t2 = io::read_triple(&std::fs::read_to_string(dir.join("so5.triple.json"))?, l2.dim())?;
    let rows = io::read_cls(&std::fs::read_to_string(dir.join("g2.cls.json"))?)?;
    println!("lie-v1 round trip: {}", l2 == l);
    println!("ljs-v1 round trip: {}", s2 == s);
    println!("triple round trip: {}", t2 == t);
    println!("cls-v1 rows: {}", rows.len());
    println!("files in {}", dir.display());
    Ok(())
}
