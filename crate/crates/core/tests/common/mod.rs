#![allow(dead_code)]

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use liejordan::foundation::{combine, frac, ExactMatrix, Rational};
use liejordan::models::{acceptance_catalog, catalog_structure, ModelSpec};
use liejordan::LieJordanStructure;

pub const SEED: u64 = 42;
pub const SAMPLES: usize = 100;

/// Every catalog model with its extracted structure, built once per binary.
pub fn catalog() -> &'static [(ModelSpec, LieJordanStructure)] {
    static CELL: OnceLock<Vec<(ModelSpec, LieJordanStructure)>> = OnceLock::new();
    CELL.get_or_init(|| {
        acceptance_catalog()
            .into_par_iter()
            .map(|spec| {
                let s = catalog_structure(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
                (spec, s)
            })
            .collect()
    })
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(salt);
    r
}

/// Rational with numerator in `-10..=10` and denominator in `1..=10`.
pub fn small(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-10..=10), rng.gen_range(1..=10))
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small(rng)).collect()
}

/// A random combination of the given operators.
pub fn element(rng: &mut ChaCha8Rng, basis: &[ExactMatrix], n: usize) -> ExactMatrix {
    let c = vector(rng, basis.len());
    combine(&c, basis, n, n)
}
