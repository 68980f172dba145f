mod common;

use common::{catalog, element, rng, small, vector, SAMPLES};
use liejordan::foundation::{dot, frac, rat, unit_vec, ExactMatrix, Rational};
use liejordan::sympjordan::{validate, I0Pairing, StructureContext, SymplecticSpace};
use liejordan::LieJordanStructure;

fn pair(s: &LieJordanStructure, a: &[Rational], b: &[Rational]) -> Rational {
    s.space.pair(a, b)
}

fn for_each_model(salt: u64, check: impl Fn(&str, &LieJordanStructure, &StructureContext, &mut rand_chacha::ChaCha8Rng) + Sync) {
    use rayon::prelude::*;
    catalog().par_iter().enumerate().for_each(|(k, (spec, s))| {
        let ctx = StructureContext::new(s).expect("context");
        let mut r = rng(salt * 1000 + k as u64);
        check(&spec.to_string(), s, &ctx, &mut r);
    });
}

#[test]
fn every_catalog_model_validates() {
    for (spec, s) in catalog() {
        let report = validate(s);
        assert!(report.passed(), "{spec}: {:?}", report.first_failure());
        let (g0, j1, j2) = spec.expected_dims();
        assert_eq!((s.g0_basis.len(), s.dim_j1(), s.j2_basis.len()), (g0, j1, j2), "{spec}");
    }
}

#[test]
fn phi_pairs_with_j2() {
    for_each_model(1, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let a_op = element(r, &s.j2_basis, n);
            let (a, b) = (vector(r, n), vector(r, n));
            let lhs = a_op.trace_product(&ctx.phi(&a, &b));
            assert_eq!(lhs, pair(s, &a_op.mul_vec(&a), &b), "{name}");
            assert_eq!(lhs, pair(s, &a, &a_op.mul_vec(&b)), "{name}");
        }
    });
}

#[test]
fn delta_pairs_with_g0() {
    for_each_model(2, |name, s, ctx, r| {
        let n = s.dim_j1();
        let i0 = ctx.i0_basis();
        let gram: Option<ExactMatrix> = match ctx.i0_pairing() {
            I0Pairing::Trivial => None,
            I0Pairing::TraceForm => Some(ExactMatrix::from_rows(
                i0.iter().map(|x| i0.iter().map(|y| x.trace_product(y)).collect()).collect(),
            )),
            I0Pairing::Rescaled(p) => Some(p),
            I0Pairing::Inconsistent => panic!("{name}: delta0 is not dual to <Da, b>"),
        };
        for _ in 0..SAMPLES {
            let (a, b) = (vector(r, n), vector(r, n));
            let delta = ctx.delta(&a, &b);
            if !ctx.der_basis().is_empty() {
                let d = element(r, ctx.der_basis(), n);
                let lhs = d.trace_product(&delta);
                assert_eq!(lhs, pair(s, &d.mul_vec(&a), &b), "{name}");
                assert_eq!(lhs, -pair(s, &a, &d.mul_vec(&b)), "{name}");
            }
            if let Some(p) = &gram {
                let x = vector(r, i0.len());
                let d = liejordan::foundation::combine(&x, i0, n, n);
                let y = ctx.i0_part(&ctx.g0_coords(&ctx.delta0(&a, &b)).expect("delta0 in g0"));
                assert_eq!(dot(&x, &p.mul_vec(&y)), pair(s, &d.mul_vec(&a), &b), "{name}");
            }
        }
    });
}

#[test]
fn trace_form_invariances() {
    for_each_model(3, |name, s, _ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let d = element(r, &s.g0_basis, n);
            let (a, b, c) = (element(r, &s.j2_basis, n), element(r, &s.j2_basis, n), element(r, &s.j2_basis, n));
            assert_eq!(d.trace_product(&a.commutator(&b)), d.commutator(&a).trace_product(&b), "{name}");
            assert_eq!(a.jordan(&b).trace_product(&c), a.trace_product(&b.jordan(&c)), "{name}");
        }
    });
}

#[test]
fn j2_acts_on_phi_through_delta() {
    for_each_model(4, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let a_op = element(r, &s.j2_basis, n);
            let (a, b) = (vector(r, n), vector(r, n));
            let (aa, ab) = (a_op.mul_vec(&a), a_op.mul_vec(&b));
            assert_eq!(a_op.commutator(&ctx.phi(&a, &b)), &ctx.delta(&aa, &b) - &ctx.delta(&a, &ab), "{name}");
        }
    });
}

#[test]
fn j2_acts_on_delta_through_phi() {
    for_each_model(5, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let a_op = element(r, &s.j2_basis, n);
            let (a, b) = (vector(r, n), vector(r, n));
            let (aa, ab) = (a_op.mul_vec(&a), a_op.mul_vec(&b));
            assert_eq!(a_op.commutator(&ctx.delta(&a, &b)), &ctx.phi(&aa, &b) - &ctx.phi(&a, &ab), "{name}");
        }
    });
}

#[test]
fn delta_is_g0_equivariant() {
    for_each_model(6, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let d = element(r, &s.g0_basis, n);
            let (a, b) = (vector(r, n), vector(r, n));
            let (da, db) = (d.mul_vec(&a), d.mul_vec(&b));
            assert_eq!(d.commutator(&ctx.delta(&a, &b)), &ctx.delta(&da, &b) + &ctx.delta(&a, &db), "{name}");
        }
    });
}

#[test]
fn jordan_product_with_phi() {
    for_each_model(7, |name, s, ctx, r| {
        let n = s.dim_j1();
        let half = frac(1, 2);
        for _ in 0..SAMPLES {
            let a_op = element(r, &s.j2_basis, n);
            let (a, b) = (vector(r, n), vector(r, n));
            let (aa, ab) = (a_op.mul_vec(&a), a_op.mul_vec(&b));
            let lhs = a_op.jordan(&ctx.phi(&a, &b));
            assert_eq!(lhs, (&ctx.phi(&aa, &b) + &ctx.phi(&a, &ab)).scale(&half), "{name}");
        }
    });
}

#[test]
fn f_is_totally_symmetric() {
    for_each_model(8, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let (a, b, c) = (vector(r, n), vector(r, n), vector(r, n));
            let f = ctx.compute_f(&a, &b, &c);
            assert_eq!(f, ctx.compute_f(&b, &a, &c), "{name}");
            assert_eq!(f, ctx.compute_f(&c, &b, &a), "{name}");
        }
        // Exhaustively on basis triples for the small models.
        if n <= 6 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let f = ctx.f_basis(i, j, k);
                        assert_eq!(f, ctx.f_basis(k, j, i), "{name}");
                        assert_eq!(f, ctx.f_basis(j, i, k), "{name}");
                    }
                }
            }
        }
    });
}

fn plane(r: &mut rand_chacha::ChaCha8Rng) -> [Rational; 2] {
    [small(r), small(r)]
}

fn det(u: &[Rational; 2], v: &[Rational; 2]) -> Rational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

#[test]
fn curvature_form_satisfies_the_bianchi_relation() {
    for_each_model(9, |name, s, ctx, r| {
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let (a, b, c, d) = (vector(r, n), vector(r, n), vector(r, n), vector(r, n));
            let u: Vec<[Rational; 2]> = (0..4).map(|_| plane(r)).collect();
            let fabc = ctx.f_bar(&a, &b, &c, &d);
            let fbca = ctx.f_bar(&b, &c, &a, &d);
            let fcab = ctx.f_bar(&c, &a, &b, &d);
            let total = det(&u[0], &u[1]) * det(&u[2], &u[3]) * &fabc
                + det(&u[1], &u[2]) * det(&u[0], &u[3]) * &fbca
                + det(&u[2], &u[0]) * det(&u[1], &u[3]) * &fcab;
            assert_eq!(total, rat(0), "{name}");
            // The special choice u1 = u3 = e1, u2 = u4 = e-1 isolates cyclic symmetry.
            assert_eq!(fabc, fbca, "{name}");
        }
    });
}

#[test]
fn curvature_form_from_scalar_products() {
    // With the trace form on i0 the curvature form is a sum of scalar products.
    for_each_model(10, |name, s, ctx, r| {
        if !matches!(ctx.i0_pairing(), I0Pairing::Trivial | I0Pairing::TraceForm) {
            return;
        }
        let n = s.dim_j1();
        for _ in 0..SAMPLES {
            let (a, b, c, d) = (vector(r, n), vector(r, n), vector(r, n), vector(r, n));
            let scalar = ctx.delta(&a, &b).trace_product(&ctx.delta(&c, &d))
                + ctx.phi(&b, &c).trace_product(&ctx.phi(&a, &d))
                + ctx.phi(&a, &c).trace_product(&ctx.phi(&b, &d));
            assert_eq!(scalar, ctx.f_bar(&a, &b, &c, &d), "{name}");
        }
    });
}

#[test]
fn rank_one_operators_split_into_phi_m_and_delta_m() {
    let mut r = rng(11);
    for m in 1..=3 {
        let space = SymplecticSpace::side_diagonal(m);
        for _ in 0..SAMPLES {
            let (a, b) = (vector(&mut r, 2 * m), vector(&mut r, 2 * m));
            assert_eq!(&space.phi_m(&a, &b) + &space.delta_m(&a, &b), space.rank_one(&b, &a));
            assert!(space.is_symmetric_operator(&space.phi_m(&a, &b)));
            assert!(space.is_symplectic_operator(&space.delta_m(&a, &b)));
        }
    }
}

#[test]
fn maximal_family_uses_the_canonical_maps() {
    let mut r = rng(12);
    for m in 1..=3 {
        let s = LieJordanStructure::maximal(m).unwrap();
        let ctx = StructureContext::new(&s).unwrap();
        let n = 2 * m;
        assert_eq!(ctx.i0_basis().len() + ctx.der_basis().len(), m * (2 * m + 1));
        // Ω = [[0, Ω_m], [-Ω_m, 0]] with Ω_m the anti-identity.
        for i in 0..n {
            for j in 0..n {
                let expected = if i + j == n - 1 { rat(if i < m { 1 } else { -1 }) } else { rat(0) };
                assert_eq!(s.space.omega().get(i, j), &expected);
            }
        }
        for _ in 0..SAMPLES {
            let (a, b, c, d) = (vector(&mut r, n), vector(&mut r, n), vector(&mut r, n), vector(&mut r, n));
            assert_eq!(ctx.phi(&a, &b), s.space.phi_m(&a, &b));
            assert_eq!(ctx.delta(&a, &b), s.space.delta_m(&a, &b));
            assert_eq!(ctx.f_bar(&a, &b, &c, &d), rat(0));
        }
        if m <= 2 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert!(ctx.f_basis(i, j, k).iter().all(|x| *x == rat(0)));
                    }
                }
            }
        }
        let (a, b) = (unit_vec(n, 0), unit_vec(n, n - 1));
        assert_eq!(ctx.phi(&a, &a), ExactMatrix::zeros(n, n));
        assert_eq!(ctx.delta(&a, &a), s.space.rank_one(&a, &a));
        assert_eq!(s.space.pair(&a, &b), rat(1));
    }
}
