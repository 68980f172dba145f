//! The Lie algebra `g0 ⊕ (C² ⊗ J1) ⊕ (sl2 ⊗ J2)` attached to a Lie-Jordan
//! structure.

mod algebra;

use num_traits::Zero;

pub use algebra::{BasisLabel, JacobiMode, JacobiReport, LieAlgebra, Simplicity, Sl2Triple};

use crate::error::Error;
use crate::foundation::{rat, zero_vec, ExactMatrix, Rational};
use crate::sl2kit::Sl2Basis;
use crate::sympjordan::{validate, LieJordanStructure, StructureContext};

/// Index arithmetic for the basis order `G0, V1(+1), V1(-1), V2(e), V2(h), V2(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TkkLayout {
    pub g0: usize,
    pub j1: usize,
    pub j2: usize,
}

impl TkkLayout {
    pub fn of(s: &LieJordanStructure) -> Self {
        TkkLayout { g0: s.g0_basis.len(), j1: s.dim_j1(), j2: s.j2_basis.len() }
    }

    pub fn dim(&self) -> usize {
        self.g0 + 2 * self.j1 + 3 * self.j2
    }

    pub fn g0(&self, k: usize) -> usize {
        k
    }

    pub fn v1(&self, w: i8, j: usize) -> usize {
        self.g0 + if w > 0 { 0 } else { self.j1 } + j
    }

    pub fn v2(&self, x: Sl2Basis, k: usize) -> usize {
        let block = match x {
            Sl2Basis::E => 0,
            Sl2Basis::H => 1,
            Sl2Basis::F => 2,
        };
        self.g0 + 2 * self.j1 + block * self.j2 + k
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        let mut out = Vec::with_capacity(self.dim());
        out.extend((0..self.g0).map(BasisLabel::G0));
        out.extend((0..self.j1).map(|j| BasisLabel::V1(1, j)));
        out.extend((0..self.j1).map(|j| BasisLabel::V1(-1, j)));
        for x in Sl2Basis::ALL {
            out.extend((0..self.j2).map(|k| BasisLabel::V2(x, k)));
        }
        out
    }

    /// Recovers the layout from labels in canonical order.
    pub fn from_labels(labels: &[BasisLabel]) -> Result<Self, Error> {
        let count = |p: &dyn Fn(&BasisLabel) -> bool| labels.iter().filter(|l| p(l)).count();
        let g0 = count(&|l| matches!(l, BasisLabel::G0(_)));
        let j1 = count(&|l| matches!(l, BasisLabel::V1(1, _)));
        let j2 = count(&|l| matches!(l, BasisLabel::V2(Sl2Basis::E, _)));
        let layout = TkkLayout { g0, j1, j2 };
        if layout.labels() != labels {
            return Err(Error::NotBuilt);
        }
        Ok(layout)
    }
}

/// Weight of `X e_w` for `X ∈ {e, h, f}`: `Some((coefficient, new weight))`.
fn sl2_on_weight(x: Sl2Basis, w: i8) -> Option<(i64, i8)> {
    match (x, w > 0) {
        (Sl2Basis::E, true) => None,
        (Sl2Basis::E, false) => Some((1, 1)),
        (Sl2Basis::H, true) => Some((1, 1)),
        (Sl2Basis::H, false) => Some((-1, -1)),
        (Sl2Basis::F, true) => Some((1, -1)),
        (Sl2Basis::F, false) => None,
    }
}

/// `[X, Y]` in sl2 as `(coefficient, basis)`.
fn sl2_bracket(x: Sl2Basis, y: Sl2Basis) -> Option<(i64, Sl2Basis)> {
    use Sl2Basis::*;
    match (x, y) {
        (E, H) => Some((-2, E)),
        (H, E) => Some((2, E)),
        (E, F) => Some((1, H)),
        (F, E) => Some((-1, H)),
        (H, F) => Some((-2, F)),
        (F, H) => Some((2, F)),
        _ => None,
    }
}

/// `(X, Y) = tr(XY)` on sl2 basis elements.
fn sl2_trace(x: Sl2Basis, y: Sl2Basis) -> i64 {
    use Sl2Basis::*;
    match (x, y) {
        (E, F) | (F, E) => 1,
        (H, H) => 2,
        _ => 0,
    }
}

fn push_scaled(out: &mut Vec<(usize, Rational)>, offset: impl Fn(usize) -> usize, c: &Rational, coords: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (k, x) in coords.iter().enumerate() {
        if !x.is_zero() {
            out.push((offset(k), c * x));
        }
    }
}

/// Validates the structure and builds its Lie algebra.
pub fn build(s: &LieJordanStructure) -> Result<LieAlgebra, Error> {
    let report = validate(s);
    if let Some(f) = report.first_failure() {
        let w = f.witness.as_ref().map(|w| format!(" at {w:?}")).unwrap_or_default();
        return Err(Error::InvalidStructure(format!("{} fails{}: {}", f.axiom, w, f.detail)));
    }
    build_unchecked(s)
}

/// Builds the bracket table without checking the axioms. The result is a Lie
/// algebra only when the structure is valid.
pub fn build_unchecked(s: &LieJordanStructure) -> Result<LieAlgebra, Error> {
    let ctx = StructureContext::new(s)?;
    let lay = TkkLayout::of(s);
    let (g, n, m) = (lay.g0, lay.j1, lay.j2);

    let g0c = |mat: &ExactMatrix| {
        ctx.g0_coords(mat).ok_or_else(|| Error::InvalidStructure("bracket leaves g0".into()))
    };
    let j2c = |mat: &ExactMatrix| {
        ctx.j2_coords(mat).ok_or_else(|| Error::InvalidStructure("operator leaves J2".into()))
    };

    let mut brackets: Vec<(usize, usize, Vec<(usize, Rational)>)> = Vec::new();
    let one = rat(1);

    // [D_k, D_l]
    for k in 0..g {
        for l in (k + 1)..g {
            let c = g0c(&s.g0_basis[k].commutator(&s.g0_basis[l]))?;
            let mut t = Vec::new();
            push_scaled(&mut t, |i| lay.g0(i), &one, &c);
            brackets.push((lay.g0(k), lay.g0(l), t));
        }
    }
    // [D_k, e_w ⊗ a_j] = e_w ⊗ D_k a_j
    for k in 0..g {
        for w in [1i8, -1] {
            for j in 0..n {
                let col = s.g0_basis[k].col(j);
                let mut t = Vec::new();
                push_scaled(&mut t, |r| lay.v1(w, r), &one, &col);
                brackets.push((lay.g0(k), lay.v1(w, j), t));
            }
        }
    }
    // [D_k, X ⊗ A_s] = X ⊗ [D_k, A_s]
    for k in 0..g {
        for s_idx in 0..m {
            let c = j2c(&s.g0_basis[k].commutator(&s.j2_basis[s_idx]))?;
            for x in Sl2Basis::ALL {
                let mut t = Vec::new();
                push_scaled(&mut t, |r| lay.v2(x, r), &one, &c);
                brackets.push((lay.g0(k), lay.v2(x, s_idx), t));
            }
        }
    }
    // [u ⊗ a, v ⊗ b] = S(u, v) ⊗ φ(a, b) + <u, v> δ(a, b)
    for (wu, wv) in [(1i8, 1i8), (1, -1), (-1, -1)] {
        for a in 0..n {
            for b in 0..n {
                let (i, j) = (lay.v1(wu, a), lay.v1(wv, b));
                if i >= j {
                    continue;
                }
                let phi = ctx.phi_basis_coords(a, b);
                let mut t = Vec::new();
                match (wu, wv) {
                    (1, 1) => push_scaled(&mut t, |r| lay.v2(Sl2Basis::E, r), &rat(-2), phi),
                    (-1, -1) => push_scaled(&mut t, |r| lay.v2(Sl2Basis::F, r), &rat(2), phi),
                    _ => {
                        push_scaled(&mut t, |r| lay.v2(Sl2Basis::H, r), &one, phi);
                        push_scaled(&mut t, |r| lay.g0(r), &one, ctx.delta_basis_coords(a, b));
                    }
                }
                brackets.push((i, j, t));
            }
        }
    }
    // [v ⊗ b, X ⊗ A] = -(X v ⊗ A b)
    for w in [1i8, -1] {
        for b in 0..n {
            for x in Sl2Basis::ALL {
                let Some((coef, w2)) = sl2_on_weight(x, w) else { continue };
                for s_idx in 0..m {
                    let col = s.j2_basis[s_idx].col(b);
                    let mut t = Vec::new();
                    push_scaled(&mut t, |r| lay.v1(w2, r), &rat(-coef), &col);
                    brackets.push((lay.v1(w, b), lay.v2(x, s_idx), t));
                }
            }
        }
    }
    // [X ⊗ A, Y ⊗ B] = [X, Y] ⊗ (A ∘ B) + (X, Y)/2 [A, B]
    let mut jordan = vec![Vec::new(); m * m];
    let mut comm = vec![Vec::new(); m * m];
    for p in 0..m {
        for q in p..m {
            let jc = j2c(&s.j2_basis[p].jordan(&s.j2_basis[q]))?;
            jordan[p * m + q] = jc.clone();
            jordan[q * m + p] = jc;
            let cc = g0c(&s.j2_basis[p].commutator(&s.j2_basis[q]))?;
            comm[q * m + p] = cc.iter().map(|x| -x).collect();
            comm[p * m + q] = cc;
        }
    }
    for x in Sl2Basis::ALL {
        for p in 0..m {
            for y in Sl2Basis::ALL {
                for q in 0..m {
                    let (i, j) = (lay.v2(x, p), lay.v2(y, q));
                    if i >= j {
                        continue;
                    }
                    let mut t = Vec::new();
                    if let Some((c, z)) = sl2_bracket(x, y) {
                        push_scaled(&mut t, |r| lay.v2(z, r), &rat(c), &jordan[p * m + q]);
                    }
                    let tr = sl2_trace(x, y);
                    if tr != 0 {
                        push_scaled(&mut t, |r| lay.g0(r), &(rat(tr) / rat(2)), &comm[p * m + q]);
                    }
                    brackets.push((i, j, t));
                }
            }
        }
    }
    LieAlgebra::from_brackets(lay.labels(), brackets)
}

/// `(e ⊗ 𝕀, h ⊗ 𝕀, f ⊗ 𝕀)` in a built algebra.
pub fn canonical_triple(l: &LieAlgebra, s: &LieJordanStructure) -> Result<Sl2Triple, Error> {
    let lay = TkkLayout::from_labels(l.labels())?;
    if lay != TkkLayout::of(s) {
        return Err(Error::NotBuilt);
    }
    let mk = |x: Sl2Basis| {
        let mut v = zero_vec(lay.dim());
        for (k, c) in s.unit.iter().enumerate() {
            v[lay.v2(x, k)] = c.clone();
        }
        v
    };
    Ok(Sl2Triple { e: mk(Sl2Basis::E), h: mk(Sl2Basis::H), f: mk(Sl2Basis::F) })
}

/// `λ K` where `λ` makes the induced form on `J2` equal to `tr(AB)`.
pub fn invariant_form(l: &LieAlgebra, s: &LieJordanStructure) -> Result<ExactMatrix, Error> {
    let k = l.killing_form();
    let lambda = invariant_form_scale(l, s, &k)?;
    Ok(k.scale(&lambda))
}

/// The factor `λ` of [`invariant_form`], given the Killing matrix.
pub fn invariant_form_scale(l: &LieAlgebra, s: &LieJordanStructure, killing: &ExactMatrix) -> Result<Rational, Error> {
    let t = canonical_triple(l, s)?;
    let kef = LieAlgebra::form_value(killing, &t.e, &t.f);
    if kef.is_zero() {
        return Err(Error::NotSimple);
    }
    Ok(Rational::from_integer((s.dim_j1() as i64).into()) / (rat(2) * kef))
}
