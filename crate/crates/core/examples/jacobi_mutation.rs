//! Perturb single structure constants of a built algebra and count how
//! often the Jacobi check notices.
//!
//! Usage: `cargo run --release --example jacobi_mutation -- sp:3:1 100`

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liejordan::foundation::rat;
use liejordan::models::{catalog_structure, ModelSpec};
use liejordan::tkk::{build, JacobiMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec: ModelSpec = args.first().map(String::as_str).unwrap_or("maximal:1").parse()?;
    let count: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(100);

    let l = build(&catalog_structure(&spec)?)?;
    let d = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut detected = 0;
    for _ in 0..count {
        let i = rng.gen_range(0..d);
        let j = loop {
            let j = rng.gen_range(0..d);
            if j != i {
                break j;
            }
        };
        let k = rng.gen_range(0..d);
        let bad = l.perturbed(i, j, k, &rat(1));
        if !bad.verify_jacobi(JacobiMode::Full).passed() {
            detected += 1;
        }
    }
    println!("{spec}: {detected} of {count} single-constant perturbations break Jacobi");
    Ok(())
}
