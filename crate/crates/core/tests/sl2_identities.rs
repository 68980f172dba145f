use liejordan::foundation::{frac, rat, ExactMatrix, Rational};
use liejordan::sl2kit::{apply, e, e1, em1, f, h, outer, s_map, skew2, trace_form, Vec2};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config() -> Config {
    Config { cases: 128, rng_seed: RngSeed::Fixed(42), failure_persistence: None, ..Config::default() }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| frac(n, d))
}

fn vec2() -> impl Strategy<Value = Vec2> {
    (small_rational(), small_rational()).prop_map(|(a, b)| [a, b])
}

fn sl2() -> impl Strategy<Value = ExactMatrix> {
    (small_rational(), small_rational(), small_rational()).prop_map(|(x, y, z)| {
        ExactMatrix::from_rows(vec![vec![y.clone(), x], vec![z, -y]])
    })
}

fn scale2(c: &Rational, u: &Vec2) -> Vec2 {
    [c * &u[0], c * &u[1]]
}

fn add2(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

fn basis_vectors() -> Vec<Vec2> {
    vec![e1(), em1()]
}

fn basis_ops() -> Vec<ExactMatrix> {
    vec![e(), h(), f()]
}

fn skew_adjoint(x: &ExactMatrix, u: &Vec2, v: &Vec2) -> bool {
    skew2(&apply(x, u), v) == -skew2(u, &apply(x, v))
}

fn pairing_with_s(x: &ExactMatrix, u: &Vec2, v: &Vec2) -> bool {
    trace_form(x, &s_map(u, v)) == rat(2) * skew2(&apply(x, u), v)
}

fn cyclic_sum_vanishes(u: &Vec2, v: &Vec2, w: &Vec2) -> bool {
    let s = add2(&add2(&scale2(&skew2(u, v), w), &scale2(&skew2(v, w), u)), &scale2(&skew2(w, u), v));
    s == [rat(0), rat(0)]
}

fn outer_difference_is_scalar(u: &Vec2, v: &Vec2) -> bool {
    &outer(u, v) - &outer(v, u) == ExactMatrix::identity(2).scale(&skew2(u, v))
}

fn bracket_with_s(x: &ExactMatrix, u: &Vec2, v: &Vec2) -> bool {
    let lhs = x.commutator(&s_map(u, v));
    let rhs = (&s_map(u, &apply(x, v)) + &x.scale(&skew2(u, v))).scale(&rat(2));
    lhs == rhs
}

fn s_of_moved_arguments(x: &ExactMatrix, u: &Vec2, v: &Vec2) -> bool {
    &s_map(&apply(x, u), v) - &s_map(u, &apply(x, v)) == x.scale(&(rat(2) * skew2(u, v)))
}

fn anticommutator_is_scalar(x: &ExactMatrix, y: &ExactMatrix, w: &Vec2) -> bool {
    let xy = &(x * y) + &(y * x);
    apply(&xy, w) == scale2(&trace_form(x, y), w)
}

#[test]
fn exhaustive_on_basis_elements() {
    for x in basis_ops() {
        for u in basis_vectors() {
            for v in basis_vectors() {
                assert!(skew_adjoint(&x, &u, &v));
                assert!(pairing_with_s(&x, &u, &v));
                assert!(bracket_with_s(&x, &u, &v));
                assert!(s_of_moved_arguments(&x, &u, &v));
                for w in basis_vectors() {
                    assert!(cyclic_sum_vanishes(&u, &v, &w));
                }
            }
        }
        for y in basis_ops() {
            for w in basis_vectors() {
                assert!(anticommutator_is_scalar(&x, &y, &w));
            }
        }
    }
    for u in basis_vectors() {
        for v in basis_vectors() {
            assert!(outer_difference_is_scalar(&u, &v));
        }
    }
}

#[test]
fn fixed_values() {
    assert_eq!(skew2(&[rat(2), rat(3)], &[rat(1), rat(1)]), rat(-1));
    assert_eq!(trace_form(&h(), &h()), rat(2));
    assert_eq!(trace_form(&e(), &f()), rat(1));
    assert_eq!(trace_form(&e(), &e()), rat(0));
    assert_eq!(s_map(&e1(), &em1()), h());
    assert_eq!(s_map(&e1(), &e1()), e().scale(&rat(-2)));
    assert_eq!(s_map(&em1(), &em1()), f().scale(&rat(2)));
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn operators_are_skew_for_the_determinant(x in sl2(), u in vec2(), v in vec2()) {
        prop_assert!(skew_adjoint(&x, &u, &v));
    }

    #[test]
    fn trace_pairing_with_s(x in sl2(), u in vec2(), v in vec2()) {
        prop_assert!(pairing_with_s(&x, &u, &v));
    }

    #[test]
    fn cyclic_determinant_sum(u in vec2(), v in vec2(), w in vec2()) {
        prop_assert!(cyclic_sum_vanishes(&u, &v, &w));
    }

    #[test]
    fn antisymmetrized_outer_product(u in vec2(), v in vec2()) {
        prop_assert!(outer_difference_is_scalar(&u, &v));
    }

    #[test]
    fn commutator_with_s(x in sl2(), u in vec2(), v in vec2()) {
        prop_assert!(bracket_with_s(&x, &u, &v));
    }

    #[test]
    fn s_with_moved_arguments(x in sl2(), u in vec2(), v in vec2()) {
        prop_assert!(s_of_moved_arguments(&x, &u, &v));
    }

    #[test]
    fn anticommutator_acts_by_trace_form(x in sl2(), y in sl2(), w in vec2()) {
        prop_assert!(anticommutator_is_scalar(&x, &y, &w));
    }

    #[test]
    fn s_is_symmetric_and_traceless(u in vec2(), v in vec2()) {
        prop_assert_eq!(s_map(&u, &v), s_map(&v, &u));
        prop_assert_eq!(s_map(&u, &v).trace(), rat(0));
    }
}
