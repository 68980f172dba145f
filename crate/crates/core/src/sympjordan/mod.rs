//! Symplectic spaces, the operator algebras `sym(J1)` and `sp(J1)`, and the
//! Lie-Jordan structure `(J1; J2; g0; delta0)`.

mod context;
mod validate;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::foundation::{dot, frac, kernel, rank, rat, ExactMatrix, Rational};

pub use context::{split_g0, I0Pairing, StructureContext};
pub use validate::{jordan_is_simple, validate, AxiomResult, ValidationReport, AXIOMS};

/// `J1` together with its nondegenerate skew form `<a, b> = a^T Ω b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    omega: ExactMatrix,
}

impl SymplecticSpace {
    pub fn new(omega: ExactMatrix) -> Result<Self, Error> {
        let n = omega.rows();
        if !omega.is_square() {
            return Err(Error::InvalidSpace("omega is not square".into()));
        }
        if n == 0 || n % 2 == 1 {
            return Err(Error::InvalidSpace(format!("dimension {n} is not a positive even number")));
        }
        if omega.transpose() != -&omega {
            return Err(Error::InvalidSpace("omega is not antisymmetric".into()));
        }
        if rank(&omega) < n {
            return Err(Error::InvalidSpace("omega is degenerate".into()));
        }
        Ok(SymplecticSpace { omega })
    }

    /// `Ω = [[0, I],[-I, 0]]` on a space of dimension `2m`.
    pub fn standard(m: usize) -> Self {
        let mut omega = ExactMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            omega.set(i, m + i, rat(1));
            omega.set(m + i, i, rat(-1));
        }
        SymplecticSpace { omega }
    }

    /// `Ω = [[0, Ω_m],[-Ω_m, 0]]` with `Ω_m` the `m x m` anti-identity.
    pub fn side_diagonal(m: usize) -> Self {
        let mut omega = ExactMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            omega.set(i, 2 * m - 1 - i, rat(1));
            omega.set(m + i, m - 1 - i, rat(-1));
        }
        SymplecticSpace { omega }
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn omega(&self) -> &ExactMatrix {
        &self.omega
    }

    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, &self.omega.mul_vec(b))
    }

    /// `<Aa, b> = <a, Ab>` for all `a, b`.
    pub fn is_symmetric_operator(&self, m: &ExactMatrix) -> bool {
        &m.transpose() * &self.omega == &self.omega * m
    }

    /// `<Da, b> = -<a, Db>` for all `a, b`.
    pub fn is_symplectic_operator(&self, m: &ExactMatrix) -> bool {
        &m.transpose() * &self.omega == -&(&self.omega * m)
    }

    /// `R(a, b) c = <c, a> b`.
    pub fn rank_one(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        let n = self.dim();
        // <c, a> = c^T (Ω a)
        let w = self.omega.mul_vec(a);
        let mut r = ExactMatrix::zeros(n, n);
        for i in 0..n {
            if b[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !w[j].is_zero() {
                    r.set(i, j, &b[i] * &w[j]);
                }
            }
        }
        r
    }

    /// `phi_m(a, b) = (R(b, a) - R(a, b)) / 2`, a symmetric operator.
    pub fn phi_m(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        (&self.rank_one(b, a) - &self.rank_one(a, b)).scale(&frac(1, 2))
    }

    /// `delta_m(a, b) = (R(b, a) + R(a, b)) / 2`, a symplectic operator.
    pub fn delta_m(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        (&self.rank_one(b, a) + &self.rank_one(a, b)).scale(&frac(1, 2))
    }

    /// Basis of `sym(J1)`: `Ω^{-1} X` for antisymmetric `X`.
    pub fn sym_basis(&self) -> Vec<ExactMatrix> {
        let n = self.dim();
        let inv = self.omega.inverse().expect("omega is invertible");
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut x = ExactMatrix::zeros(n, n);
                x.set(i, j, rat(1));
                x.set(j, i, rat(-1));
                out.push(&inv * &x);
            }
        }
        out
    }

    /// Basis of `sp(J1)`: `Ω^{-1} X` for symmetric `X`.
    pub fn sp_basis(&self) -> Vec<ExactMatrix> {
        let n = self.dim();
        let inv = self.omega.inverse().expect("omega is invertible");
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut x = ExactMatrix::zeros(n, n);
                x.set(i, j, rat(1));
                x.set(j, i, rat(1));
                out.push(&inv * &x);
            }
        }
        out
    }
}

/// Operator known to lie in `sym(J1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymOperator(ExactMatrix);

impl SymOperator {
    pub fn new(space: &SymplecticSpace, m: ExactMatrix) -> Result<Self, Error> {
        if space.is_symmetric_operator(&m) {
            Ok(SymOperator(m))
        } else {
            Err(Error::NotSymmetric)
        }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }
}

/// Operator known to lie in `sp(J1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpOperator(ExactMatrix);

impl SpOperator {
    pub fn new(space: &SymplecticSpace, m: ExactMatrix) -> Result<Self, Error> {
        if space.is_symplectic_operator(&m) {
            Ok(SpOperator(m))
        } else {
            Err(Error::InvalidStructure("operator is not in sp(J1)".into()))
        }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }
}

/// `A ∘ B = (AB + BA) / 2`.
pub fn jordan_product(space: &SymplecticSpace, a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if !space.is_symmetric_operator(a) || !space.is_symmetric_operator(b) {
        return Err(Error::NotSymmetric);
    }
    Ok(a.jordan(b))
}

/// The quadruple `(J1; J2; g0; delta0)`.
///
/// `delta0` maps a pair `(i, j)` with `i <= j` of basis indices of `J1` to
/// coordinates over the `i0` basis returned by [`split_g0`]. Missing pairs are
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieJordanStructure {
    pub space: SymplecticSpace,
    pub j2_basis: Vec<ExactMatrix>,
    pub g0_basis: Vec<ExactMatrix>,
    pub delta0: BTreeMap<(usize, usize), Vec<Rational>>,
    pub unit: Vec<Rational>,
}

impl LieJordanStructure {
    pub fn dim_j1(&self) -> usize {
        self.space.dim()
    }

    /// `𝕀` rebuilt from the unit coordinates.
    pub fn unit_operator(&self) -> ExactMatrix {
        let n = self.dim_j1();
        crate::foundation::combine(&self.unit, &self.j2_basis, n, n)
    }

    /// Table entry for an arbitrary ordered pair.
    pub fn delta0_entry(&self, i: usize, j: usize) -> Option<&Vec<Rational>> {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.delta0.get(&key)
    }

    /// The structure with `J2 = sym(J1)` and `g0 = sp(J1)` on a space of
    /// dimension `2n`, using `Ω = [[0, Ω_n],[-Ω_n, 0]]`.
    pub fn maximal(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameters("maximal structure needs n >= 1".into()));
        }
        let space = SymplecticSpace::side_diagonal(n);
        let j2_basis = space.sym_basis();
        let g0_basis = space.sp_basis();
        let dim = space.dim();
        let flat: Vec<Vec<Rational>> = j2_basis.iter().map(|m| m.as_flat().to_vec()).collect();
        let sc = crate::foundation::SpanCoords::new(&flat, dim * dim)?;
        let unit = sc.coords(ExactMatrix::identity(dim).as_flat()).ok_or(Error::NonUnitalJ2)?;
        let mut s = LieJordanStructure { space, j2_basis, g0_basis, delta0: BTreeMap::new(), unit };
        s.delta0 = delta0_from_delta_m(&s)?;
        Ok(s)
    }
}

/// `delta0 = π_{i0} delta_m` on basis pairs. This is the choice that makes the
/// trace form the defining pairing on `i0`.
pub fn delta0_from_delta_m(s: &LieJordanStructure) -> Result<BTreeMap<(usize, usize), Vec<Rational>>, Error> {
    let ctx = StructureContext::without_delta0(s)?;
    let n = s.dim_j1();
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let a = crate::foundation::unit_vec(n, i);
            let b = crate::foundation::unit_vec(n, j);
            let dm = s.space.delta_m(&a, &b);
            let g0c = ctx.g0_coords(&dm).ok_or_else(|| Error::InvalidStructure("delta_m not in g0".into()))?;
            let i0c = ctx.i0_part(&g0c);
            if i0c.iter().any(|x| !x.is_zero()) {
                table.insert((i, j), i0c);
            }
        }
    }
    Ok(table)
}

/// Structure whose `J2` is the scalar operators only and `g0 = sp(J1)`.
/// Useful as a small test object; it is not a Lie-Jordan structure when
/// `dim J1 > 2` because F fails to be symmetric.
pub fn scalar_structure(space: SymplecticSpace) -> LieJordanStructure {
    let n = space.dim();
    let g0_basis = space.sp_basis();
    LieJordanStructure {
        space,
        j2_basis: vec![ExactMatrix::identity(n)],
        g0_basis,
        delta0: BTreeMap::new(),
        unit: vec![Rational::one()],
    }
}

/// Kernel helper used by several modules: coordinates `x` with
/// `Σ x_k tr(D_k C) = 0` for every `C` in `others`.
pub(crate) fn trace_orthogonal_coords(basis: &[ExactMatrix], others: &[ExactMatrix]) -> Vec<Vec<Rational>> {
    let g = basis.len();
    if others.is_empty() {
        return (0..g).map(|i| crate::foundation::unit_vec(g, i)).collect();
    }
    let rows: Vec<Vec<Rational>> = others.iter().map(|c| basis.iter().map(|d| d.trace_product(c)).collect()).collect();
    let mut m = ExactMatrix::zeros(rows.len(), g);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    kernel(&m)
}
