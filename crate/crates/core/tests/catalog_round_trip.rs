mod common;

use rand::Rng;
use rayon::prelude::*;

use common::{catalog, rng};
use liejordan::foundation::rat;
use liejordan::io::{read_lie, read_ljs, write_lie, write_ljs};
use liejordan::isotypic::extract;
use liejordan::models::{oracle_check_structure, sl_closed_form_check, ModelSpec};
use liejordan::sympjordan::SymplecticSpace;
use liejordan::tkk::{build, canonical_triple, JacobiMode};
use liejordan::LieJordanStructure;

#[test]
fn build_decompose_build_is_byte_identical() {
    catalog().par_iter().for_each(|(spec, s)| {
        let l = build(s).unwrap();
        let bytes = write_lie(&l);
        let parsed = read_lie(&bytes).unwrap();
        let t = canonical_triple(&parsed, s).unwrap();
        let back = extract(&parsed, &t).unwrap();
        assert_eq!(&back, s, "{spec}");
        assert_eq!(write_lie(&build(&back).unwrap()), bytes, "{spec}");
        let ljs = write_ljs(s);
        assert_eq!(write_ljs(&read_ljs(&ljs).unwrap()), ljs, "{spec}");
    });
}

#[test]
fn every_model_is_a_simple_lie_algebra() {
    catalog().par_iter().for_each(|(spec, s)| {
        let l = build(s).unwrap();
        let report = l.verify_jacobi(JacobiMode::Full);
        assert!(report.passed(), "{spec}: {:?}", report.violation);
        let simple = l.simplicity(42);
        assert!(simple.killing_nondegenerate, "{spec}");
        assert_eq!(simple.commutant_dimension, Some(1), "{spec}");
    });
}

#[test]
fn built_brackets_agree_with_matrix_commutators() {
    catalog().par_iter().for_each(|(spec, s)| {
        let report = oracle_check_structure(spec, s).unwrap();
        assert!(report.passed(), "{spec}: first mismatch {:?}", report.first_mismatch);
        let d = s.g0_basis.len() + 2 * s.dim_j1() + 3 * s.j2_basis.len();
        assert_eq!(report.pairs, d * (d - 1) / 2, "{spec}");
    });
}

#[test]
fn rescaled_symplectic_form_is_caught_by_the_oracle() {
    for spec in ["maximal:1", "sl:5:1", "sp:3:1"] {
        let spec: ModelSpec = spec.parse().unwrap();
        let s = &catalog().iter().find(|(m, _)| *m == spec).unwrap().1;
        let omega = s.space.omega().scale(&rat(2));
        let bad = LieJordanStructure { space: SymplecticSpace::new(omega).unwrap(), ..s.clone() };
        let report = oracle_check_structure(&spec, &bad).unwrap();
        assert!(report.mismatches > 0, "{spec}");
        let (a, b) = report.first_mismatch.clone().unwrap();
        assert!(a.starts_with("v1") && b.starts_with("v1"), "{spec}: first mismatch at ({a}, {b})");
    }
}

#[test]
fn sl_models_match_the_closed_forms() {
    for (spec, _) in catalog().iter().filter(|(m, _)| matches!(m, ModelSpec::Sl { .. })) {
        let report = sl_closed_form_check(spec).unwrap();
        assert!(report.passed(), "{spec}: {report:?}");
        assert!(report.pairs > 0);
    }
}

#[test]
fn single_constant_perturbations_break_jacobi() {
    // A reduced sample per model; the acceptance target checks 100 each.
    catalog().par_iter().enumerate().for_each(|(m, (spec, s))| {
        let l = build(s).unwrap();
        let d = l.dim();
        let mut r = rng(500 + m as u64);
        let mut detected = 0;
        let total = 10;
        for _ in 0..total {
            let i = r.gen_range(0..d);
            let j = (i + r.gen_range(1..d)) % d;
            let k = r.gen_range(0..d);
            if !l.perturbed(i, j, k, &rat(1)).verify_jacobi(JacobiMode::Full).passed() {
                detected += 1;
            }
        }
        assert_eq!(detected, total, "{spec}");
    });
}

#[test]
fn small_model_dimensions() {
    for (name, dims, ambient) in [
        ("maximal:2", (10, 4, 6), 36),
        ("sl:5:1", (9, 6, 1), 24),
        ("so-odd:3:2", (6, 6, 1), 21),
    ] {
        let spec: ModelSpec = name.parse().unwrap();
        let s = &catalog().iter().find(|(m, _)| *m == spec).unwrap().1;
        assert_eq!((s.g0_basis.len(), s.dim_j1(), s.j2_basis.len()), dims, "{name}");
        assert_eq!(build(s).unwrap().dim(), ambient, "{name}");
    }
}
