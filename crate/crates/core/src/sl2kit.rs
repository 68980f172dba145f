//! The two fixed sl2 modules: the plane with its determinant form, and sl2
//! itself with the trace form.
//!
//! Basis conventions: `e = [[0,1],[0,0]]`, `f = [[0,0],[1,0]]`,
//! `h = diag(1,-1)`, `e1 = (1,0)`, `e-1 = (0,1)`.

use num_traits::Zero;

use crate::foundation::{rat, ExactMatrix, Rational};

/// Vector of the plane in the basis `(e1, e-1)`.
pub type Vec2 = [Rational; 2];

/// Traceless 2x2 matrix.
pub type Sl2Op = ExactMatrix;

/// The three basis elements of sl2 in the order used for labels.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Basis {
    E,
    H,
    F,
}

impl Sl2Basis {
    pub const ALL: [Sl2Basis; 3] = [Sl2Basis::E, Sl2Basis::H, Sl2Basis::F];

    pub fn matrix(self) -> Sl2Op {
        match self {
            Sl2Basis::E => e(),
            Sl2Basis::H => h(),
            Sl2Basis::F => f(),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sl2Basis::E => 'e',
            Sl2Basis::H => 'h',
            Sl2Basis::F => 'f',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'e' => Some(Sl2Basis::E),
            'h' => Some(Sl2Basis::H),
            'f' => Some(Sl2Basis::F),
            _ => None,
        }
    }
}

pub fn e() -> Sl2Op {
    ExactMatrix::from_i64(&[vec![0, 1], vec![0, 0]])
}

pub fn f() -> Sl2Op {
    ExactMatrix::from_i64(&[vec![0, 0], vec![1, 0]])
}

pub fn h() -> Sl2Op {
    ExactMatrix::from_i64(&[vec![1, 0], vec![0, -1]])
}

pub fn e1() -> Vec2 {
    [rat(1), rat(0)]
}

pub fn em1() -> Vec2 {
    [rat(0), rat(1)]
}

/// Basis vector of weight `w` (`+1` gives `e1`, `-1` gives `e-1`).
pub fn weight_vector(w: i8) -> Vec2 {
    if w > 0 {
        e1()
    } else {
        em1()
    }
}

pub fn apply(x: &Sl2Op, u: &Vec2) -> Vec2 {
    [
        x.get(0, 0) * &u[0] + x.get(0, 1) * &u[1],
        x.get(1, 0) * &u[0] + x.get(1, 1) * &u[1],
    ]
}

/// `<u, v> = det(u, v)`.
pub fn skew2(u: &Vec2, v: &Vec2) -> Rational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

/// `(X, Y) = tr(XY)`.
pub fn trace_form(x: &Sl2Op, y: &Sl2Op) -> Rational {
    x.trace_product(y)
}

/// The operator `u (x) v*`, acting as `w -> <w, v> u`.
pub fn outer(u: &Vec2, v: &Vec2) -> Sl2Op {
    // <w, v> = w0 v1 - w1 v0, so the row functional is (v1, -v0).
    let row = [v[1].clone(), -&v[0]];
    ExactMatrix::from_rows(vec![
        vec![&u[0] * &row[0], &u[0] * &row[1]],
        vec![&u[1] * &row[0], &u[1] * &row[1]],
    ])
}

/// `S(u, v) w = <w, u> v + <w, v> u`.
pub fn s_map(u: &Vec2, v: &Vec2) -> Sl2Op {
    &outer(v, u) + &outer(u, v)
}

/// Coordinates of a traceless matrix in the basis `(e, h, f)`.
pub fn sl2_coords(x: &Sl2Op) -> [Rational; 3] {
    debug_assert!(x.trace().is_zero(), "matrix is not traceless");
    [x.get(0, 1).clone(), x.get(0, 0).clone(), x.get(1, 0).clone()]
}

pub fn vec2_sub(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

pub fn vec2_add(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

pub fn vec2_scale(c: &Rational, a: &Vec2) -> Vec2 {
    [c * &a[0], c * &a[1]]
}
