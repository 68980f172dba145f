//! Derived data of a Lie-Jordan structure: coordinate maps, the split
//! `g0 = i0 ⊕ [J2, J2]`, the projections `π2`, `πc`, and the maps `φ`, `δ`, `F`.

use num_traits::Zero;

use super::{trace_orthogonal_coords, LieJordanStructure};
use crate::error::Error;
use crate::foundation::{
    axpy, combine, solve, unit_vec, zero_vec, EchelonBasis, ExactMatrix, Rational, SpanCoords,
};

/// Basis of `i0` and of `[J2, J2]`, as operators.
pub fn split_g0(s: &LieJordanStructure) -> Result<(Vec<ExactMatrix>, Vec<ExactMatrix>), Error> {
    let ctx = StructureContext::without_delta0(s)?;
    Ok((ctx.i0_basis.clone(), ctx.der_basis.clone()))
}

/// How the `δ0` table pairs with `i0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum I0Pairing {
    /// `i0` is zero.
    Trivial,
    /// `tr(D δ0(a, b)) = <Da, b>` holds for every `D ∈ i0`.
    TraceForm,
    /// A symmetric nondegenerate Gram matrix `P` on `i0`, different from the
    /// trace form, satisfies `P(D, δ0(a, b)) = <Da, b>`.
    Rescaled(ExactMatrix),
    /// No bilinear form on `i0` reproduces `<Da, b>` from the table.
    Inconsistent,
}

/// Precomputed coordinates and structure maps for one structure.
#[derive(Clone, Debug)]
pub struct StructureContext {
    n: usize,
    j2: SpanCoords,
    j2_gram_inv: ExactMatrix,
    g0: SpanCoords,
    pub(crate) der_basis: Vec<ExactMatrix>,
    der_gram_inv: ExactMatrix,
    /// `[J2,J2]` basis in g0 coordinates.
    der_g0: Vec<Vec<Rational>>,
    pub(crate) i0_basis: Vec<ExactMatrix>,
    /// `i0` basis in g0 coordinates.
    i0_g0: Vec<Vec<Rational>>,
    /// Coordinates over `i0 ∪ der` inside g0 coordinates.
    split: SpanCoords,
    j2_basis: Vec<ExactMatrix>,
    g0_basis: Vec<ExactMatrix>,
    space_omega: ExactMatrix,
    delta0_ops: Vec<ExactMatrix>,
    /// `φ(e_a, e_b)` in J2 coordinates, indexed `a * n + b`.
    phi_coords: Vec<Vec<Rational>>,
    phi_ops: Vec<ExactMatrix>,
    /// `δ(e_a, e_b)` in g0 coordinates and as operators.
    delta_coords: Vec<Vec<Rational>>,
    delta_ops: Vec<ExactMatrix>,
}

fn gram(basis: &[ExactMatrix]) -> ExactMatrix {
    let k = basis.len();
    let mut g = ExactMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = basis[i].trace_product(&basis[j]);
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    g
}

fn flats(ms: &[ExactMatrix]) -> Vec<Vec<Rational>> {
    ms.iter().map(|m| m.as_flat().to_vec()).collect()
}

impl StructureContext {
    /// Context ignoring the `δ0` table (used while the table is being built).
    pub fn without_delta0(s: &LieJordanStructure) -> Result<Self, Error> {
        let n = s.dim_j1();
        let nn = n * n;
        for m in s.j2_basis.iter().chain(&s.g0_basis) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::InvalidStructure("operator has wrong size".into()));
            }
        }
        let j2 = SpanCoords::new(&flats(&s.j2_basis), nn)?;
        let g0 = SpanCoords::new(&flats(&s.g0_basis), nn)?;
        let j2_gram_inv = gram(&s.j2_basis)
            .inverse()
            .ok_or_else(|| Error::DegenerateRestriction("J2".into()))?;

        let mut ech = EchelonBasis::new(nn);
        let mut der_basis = Vec::new();
        for i in 0..s.j2_basis.len() {
            for j in (i + 1)..s.j2_basis.len() {
                let c = s.j2_basis[i].commutator(&s.j2_basis[j]);
                if ech.insert(c.as_flat().to_vec()) {
                    der_basis.push(c);
                }
            }
        }
        let der_g0: Vec<Vec<Rational>> = der_basis
            .iter()
            .map(|c| g0.coords(c.as_flat()).ok_or_else(|| Error::InvalidStructure("[J2,J2] is not inside g0".into())))
            .collect::<Result<_, _>>()?;
        let der_gram_inv = gram(&der_basis)
            .inverse()
            .ok_or_else(|| Error::DegenerateRestriction("[J2,J2]".into()))?;
        if gram(&s.g0_basis).inverse().is_none() && !s.g0_basis.is_empty() {
            return Err(Error::DegenerateRestriction("g0".into()));
        }

        let i0_g0 = trace_orthogonal_coords(&s.g0_basis, &der_basis);
        let i0_basis: Vec<ExactMatrix> = i0_g0.iter().map(|c| combine(c, &s.g0_basis, n, n)).collect();
        let mut split_vecs = i0_g0.clone();
        split_vecs.extend(der_g0.iter().cloned());
        let split = SpanCoords::new(&split_vecs, s.g0_basis.len())
            .map_err(|_| Error::DegenerateRestriction("i0 meets [J2,J2]".into()))?;
        if split.len() != s.g0_basis.len() {
            return Err(Error::DegenerateRestriction("i0 + [J2,J2] is not all of g0".into()));
        }

        let mut ctx = StructureContext {
            n,
            j2,
            j2_gram_inv,
            g0,
            der_basis,
            der_gram_inv,
            der_g0,
            i0_basis,
            i0_g0,
            split,
            j2_basis: s.j2_basis.clone(),
            g0_basis: s.g0_basis.clone(),
            space_omega: s.space.omega().clone(),
            delta0_ops: vec![ExactMatrix::zeros(n, n); nn],
            phi_coords: Vec::new(),
            phi_ops: Vec::new(),
            delta_coords: Vec::new(),
            delta_ops: Vec::new(),
        };
        ctx.fill_tables(s);
        Ok(ctx)
    }

    /// Full context; fails if the `δ0` table has the wrong shape.
    pub fn new(s: &LieJordanStructure) -> Result<Self, Error> {
        let mut ctx = Self::without_delta0(s)?;
        let n = ctx.n;
        let k = ctx.i0_basis.len();
        for (&(i, j), v) in &s.delta0 {
            if i > j || j >= n {
                return Err(Error::InvalidStructure(format!("delta0 entry ({i},{j}) out of range")));
            }
            if v.len() != k {
                return Err(Error::InvalidStructure(format!(
                    "delta0 entry ({i},{j}) has {} coordinates, i0 has dimension {k}",
                    v.len()
                )));
            }
            let op = combine(v, &ctx.i0_basis, n, n);
            ctx.delta0_ops[i * n + j] = op.clone();
            ctx.delta0_ops[j * n + i] = op;
        }
        ctx.fill_tables(s);
        Ok(ctx)
    }

    fn fill_tables(&mut self, s: &LieJordanStructure) {
        let n = self.n;
        let g = self.g0_basis.len();
        let mut phi_coords = vec![Vec::new(); n * n];
        let mut phi_ops = vec![ExactMatrix::zeros(n, n); n * n];
        let mut delta_coords = vec![Vec::new(); n * n];
        let mut delta_ops = vec![ExactMatrix::zeros(n, n); n * n];
        for a in 0..n {
            for b in a..n {
                let (ua, ub) = (unit_vec(n, a), unit_vec(n, b));
                let pc = self.pi2(&s.space.phi_m(&ua, &ub));
                let pop = combine(&pc, &self.j2_basis, n, n);
                let neg: Vec<Rational> = pc.iter().map(|x| -x).collect();
                phi_ops[b * n + a] = -&pop;
                phi_ops[a * n + b] = pop;
                phi_coords[b * n + a] = neg;
                phi_coords[a * n + b] = pc;

                let dc = self.pic(&s.space.delta_m(&ua, &ub));
                let mut coords = zero_vec(g);
                for (c, v) in dc.iter().zip(&self.der_g0) {
                    axpy(&mut coords, c, v);
                }
                let d0 = &self.delta0_ops[a * n + b];
                if !d0.is_zero() {
                    let d0c = self.g0.coords_unchecked(d0.as_flat());
                    for (x, y) in coords.iter_mut().zip(d0c) {
                        *x += y;
                    }
                }
                let op = combine(&coords, &self.g0_basis, n, n);
                delta_ops[a * n + b] = op.clone();
                delta_ops[b * n + a] = op;
                delta_coords[a * n + b] = coords.clone();
                delta_coords[b * n + a] = coords;
            }
        }
        self.phi_coords = phi_coords;
        self.phi_ops = phi_ops;
        self.delta_coords = delta_coords;
        self.delta_ops = delta_ops;
    }

    pub fn dim_j1(&self) -> usize {
        self.n
    }

    pub fn i0_basis(&self) -> &[ExactMatrix] {
        &self.i0_basis
    }

    pub fn der_basis(&self) -> &[ExactMatrix] {
        &self.der_basis
    }

    pub fn j2_coords(&self, m: &ExactMatrix) -> Option<Vec<Rational>> {
        self.j2.coords(m.as_flat())
    }

    pub fn g0_coords(&self, m: &ExactMatrix) -> Option<Vec<Rational>> {
        self.g0.coords(m.as_flat())
    }

    pub fn j2_op(&self, coords: &[Rational]) -> ExactMatrix {
        combine(coords, &self.j2_basis, self.n, self.n)
    }

    pub fn g0_op(&self, coords: &[Rational]) -> ExactMatrix {
        combine(coords, &self.g0_basis, self.n, self.n)
    }

    /// `i0` coordinates of the `i0` component of a g0 element.
    pub fn i0_part(&self, g0_coords: &[Rational]) -> Vec<Rational> {
        let c = self.split.coords_unchecked(g0_coords);
        c[..self.i0_basis.len()].to_vec()
    }

    /// Trace-orthogonal projection onto `J2`, in J2 coordinates.
    pub fn pi2(&self, m: &ExactMatrix) -> Vec<Rational> {
        let r: Vec<Rational> = self.j2_basis.iter().map(|a| a.trace_product(m)).collect();
        self.j2_gram_inv.mul_vec(&r)
    }

    /// Trace-orthogonal projection onto `[J2, J2]`, in coordinates over the
    /// `[J2, J2]` basis.
    pub fn pic(&self, m: &ExactMatrix) -> Vec<Rational> {
        if self.der_basis.is_empty() {
            return Vec::new();
        }
        let r: Vec<Rational> = self.der_basis.iter().map(|a| a.trace_product(m)).collect();
        self.der_gram_inv.mul_vec(&r)
    }

    /// Coordinates of `[J2, J2]` basis elements inside g0.
    pub fn der_in_g0(&self) -> &[Vec<Rational>] {
        &self.der_g0
    }

    pub fn i0_in_g0(&self) -> &[Vec<Rational>] {
        &self.i0_g0
    }

    pub fn phi_basis(&self, a: usize, b: usize) -> &ExactMatrix {
        &self.phi_ops[a * self.n + b]
    }

    pub fn phi_basis_coords(&self, a: usize, b: usize) -> &[Rational] {
        &self.phi_coords[a * self.n + b]
    }

    pub fn delta_basis(&self, a: usize, b: usize) -> &ExactMatrix {
        &self.delta_ops[a * self.n + b]
    }

    pub fn delta_basis_coords(&self, a: usize, b: usize) -> &[Rational] {
        &self.delta_coords[a * self.n + b]
    }

    pub fn delta0_basis(&self, a: usize, b: usize) -> &ExactMatrix {
        &self.delta0_ops[a * self.n + b]
    }

    fn bilinear(&self, table: &[ExactMatrix], a: &[Rational], b: &[Rational]) -> ExactMatrix {
        let n = self.n;
        let mut out = zero_vec(n * n);
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                axpy(&mut out, &(&a[i] * &b[j]), table[i * n + j].as_flat());
            }
        }
        ExactMatrix::from_flat(n, n, out)
    }

    /// `φ(a, b) = π2 φ_m(a, b)` as an operator.
    pub fn phi(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        self.bilinear(&self.phi_ops, a, b)
    }

    /// `δ(a, b) = δ0(a, b) + πc δ_m(a, b)` as an operator.
    pub fn delta(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        self.bilinear(&self.delta_ops, a, b)
    }

    pub fn delta0(&self, a: &[Rational], b: &[Rational]) -> ExactMatrix {
        self.bilinear(&self.delta0_ops, a, b)
    }

    /// `F(a, b, c) = δ(a, b) c + φ(b, c) a + φ(a, c) b`.
    pub fn compute_f(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vec<Rational> {
        let mut out = self.delta(a, b).mul_vec(c);
        let t1 = self.phi(b, c).mul_vec(a);
        let t2 = self.phi(a, c).mul_vec(b);
        for ((o, x), y) in out.iter_mut().zip(t1).zip(t2) {
            *o += x + y;
        }
        out
    }

    /// `F` on basis vectors, read from cached columns.
    pub fn f_basis(&self, a: usize, b: usize, c: usize) -> Vec<Rational> {
        let n = self.n;
        (0..n)
            .map(|r| {
                self.delta_ops[a * n + b].get(r, c) + self.phi_ops[b * n + c].get(r, a) + self.phi_ops[a * n + c].get(r, b)
            })
            .collect()
    }

    fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        crate::foundation::dot(a, &self.space_omega.mul_vec(b))
    }

    /// `F̄(a, b, c, d) = <F(a, b, c), d>`.
    pub fn f_bar(&self, a: &[Rational], b: &[Rational], c: &[Rational], d: &[Rational]) -> Rational {
        self.pair(&self.compute_f(a, b, c), d)
    }

    /// The pairing on `i0` implied by the `δ0` table.
    pub fn i0_pairing(&self) -> I0Pairing {
        let k = self.i0_basis.len();
        if k == 0 {
            return I0Pairing::Trivial;
        }
        let n = self.n;
        // Rows: pairs (a <= b); columns: i0 coordinates of δ0(e_a, e_b).
        let mut rows = Vec::new();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a..n {
                let op = &self.delta0_ops[a * n + b];
                let g0c = self.g0.coords_unchecked(op.as_flat());
                rows.push(self.i0_part(&g0c));
                pairs.push((a, b));
            }
        }
        let t = ExactMatrix::from_rows(rows);
        let mut p = ExactMatrix::zeros(k, k);
        for (kk, d) in self.i0_basis.iter().enumerate() {
            let rhs: Vec<Rational> = pairs
                .iter()
                .map(|&(a, b)| {
                    let da = d.col(a);
                    self.pair(&da, &unit_vec(n, b))
                })
                .collect();
            match solve(&t, &rhs) {
                Some(x) => {
                    for (l, v) in x.into_iter().enumerate() {
                        p.set(kk, l, v);
                    }
                }
                None => return I0Pairing::Inconsistent,
            }
        }
        let tr = gram(&self.i0_basis);
        if p == tr {
            I0Pairing::TraceForm
        } else if p.transpose() == p && p.inverse().is_some() {
            I0Pairing::Rescaled(p)
        } else {
            I0Pairing::Inconsistent
        }
    }
}
