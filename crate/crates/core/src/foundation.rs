//! Exact rational scalars and dense linear algebra.
//!
//! Every matrix here is small enough (a few hundred columns at most) that a
//! dense Gauss-Jordan elimination is the right tool. Pivoting always takes the
//! first nonzero entry in column order, so results are deterministic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| Error::Malformed(format!("bad rational `{s}`")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| Error::Malformed(format!("bad rational `{s}`")))?;
        if q.is_zero() {
            return Err(Error::Malformed(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(p, q))
    } else {
        let p = BigInt::from_str(t).map_err(|_| Error::Malformed(format!("bad rational `{s}`")))?;
        Ok(Rational::from_integer(p))
    }
}

/// Canonical string form, `"p/q"` or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// `true` when every entry is zero.
pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `y += c * x`
pub fn axpy(y: &mut [Rational], c: &Rational, x: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

pub fn scale_vec(c: &Rational, x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| c * v).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Dense matrix of rationals in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data has wrong length");
        ExactMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Rational> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: scale_vec(k, &self.data) }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &ExactMatrix) -> Rational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, i);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &ExactMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// `(self * other + other * self) / 2`
    pub fn jordan(&self, other: &ExactMatrix) -> Self {
        (&(self * other) + &(other * self)).scale(&frac(1, 2))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Gauss-Jordan elimination restricted to the first `limit` columns.
    /// Returns pivot columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..limit {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !self.data[r * cols + c].is_zero()) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = self.data[pr * cols + c].recip();
            for k in c..cols {
                let v = &mut self.data[pr * cols + k];
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            let support: Vec<usize> = (c..cols).filter(|&k| !self.data[pr * cols + k].is_zero()).collect();
            let pivot_row: Vec<Rational> = support.iter().map(|&k| self.data[pr * cols + k].clone()).collect();
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.data[r * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for (&k, pv) in support.iter().zip(&pivot_row) {
                    let v = &mut self.data[r * cols + k];
                    *v -= &factor * pv;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(sel) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Rational::zero();
            };
            if sel != c {
                for k in 0..n {
                    m.data.swap(sel * n + k, c * n + k);
                }
                det = -det;
            }
            let p = m.get(c, c).clone();
            det *= &p;
            let pinv = p.recip();
            for r in (c + 1)..n {
                let f = m.get(r, c) * &pinv;
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let sub = &f * m.get(c, k);
                    if !sub.is_zero() {
                        *m.entry_mut(r, k) -= sub;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: add_vec(&self.data, &rhs.data) }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: sub_vec(&self.data, &rhs.data) }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Linear combination `Σ c_k M_k` of equally shaped matrices.
pub fn combine(coeffs: &[Rational], mats: &[ExactMatrix], rows: usize, cols: usize) -> ExactMatrix {
    let mut data = zero_vec(rows * cols);
    for (c, m) in coeffs.iter().zip(mats) {
        axpy(&mut data, c, m.as_flat());
    }
    ExactMatrix::from_flat(rows, cols, data)
}

/// Some `x` with `A x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &ExactMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows, b.len(), "right-hand side length mismatch");
    let n = a.cols;
    let mut aug = ExactMatrix::zeros(a.rows, n + 1);
    for r in 0..a.rows {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let pivots = aug.rref_in_place(n);
    for r in pivots.len()..a.rows {
        if !aug.get(r, n).is_zero() {
            return None;
        }
    }
    let mut x = zero_vec(n);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, n).clone();
    }
    Some(x)
}

/// Basis of the null space; one vector per free column, in column order.
pub fn kernel(a: &ExactMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = a.rref();
    let n = a.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(n);
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            let e = r.get(row, free);
            if !e.is_zero() {
                v[pc] = -e;
            }
        }
        basis.push(v);
    }
    basis
}

pub fn rank(a: &ExactMatrix) -> usize {
    let mut m = a.clone();
    m.rref_in_place(a.cols).len()
}

/// Basis of `{v : form(v, s) = 0 for every s in subspace}`.
pub fn orthogonal_complement(form: &ExactMatrix, subspace: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, Error> {
    if !form.is_square() {
        return Err(Error::DegenerateForm("form is not square".into()));
    }
    let n = form.rows;
    if rank(form) < n {
        return Err(Error::DegenerateForm(format!("form of size {n} is singular")));
    }
    if subspace.is_empty() {
        return Ok((0..n).map(|i| unit_vec(n, i)).collect());
    }
    let rows: Vec<Vec<Rational>> = subspace.iter().map(|s| form.mul_vec(s)).collect();
    Ok(kernel(&ExactMatrix::from_rows(rows)))
}

/// Incrementally maintained echelon basis of a row space.
///
/// Each stored row is normalized to have a leading one and is zero at the
/// pivots of all earlier rows, so reduction runs in insertion order.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduces `v` in place; returns the coefficient used for each stored row.
    pub fn reduce(&self, v: &mut [Rational]) -> Vec<Rational> {
        let mut coeffs = zero_vec(self.rows.len());
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (vi, ri) in v.iter_mut().zip(row).skip(p) {
                if !ri.is_zero() {
                    *vi -= &c * ri;
                }
            }
            coeffs[k] = c;
        }
        coeffs
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        self.push_reduced(v).is_some()
    }

    /// Stores an already reduced vector. Returns the normalizing factor
    /// (reciprocal of the pivot) when the vector was nonzero.
    pub fn push_reduced(&mut self, mut v: Vec<Rational>) -> Option<Rational> {
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        Some(inv)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Picks one ambient position per basis vector where the restricted system is
/// invertible; membership is then confirmed by recombining.
#[derive(Clone, Debug)]
pub struct SpanCoords {
    ambient: usize,
    basis: Vec<Vec<(usize, Rational)>>,
    positions: Vec<usize>,
    inv: Vec<Vec<(usize, Rational)>>,
}

impl SpanCoords {
    pub fn new(basis: &[Vec<Rational>], ambient: usize) -> Result<Self, Error> {
        let m = basis.len();
        if m == 0 {
            return Ok(SpanCoords { ambient, basis: vec![], positions: vec![], inv: vec![] });
        }
        let mat = ExactMatrix::from_rows(basis.to_vec());
        let (_, positions) = mat.rref();
        if positions.len() < m {
            return Err(Error::DependentBasis(format!("{} vectors span only {}", m, positions.len())));
        }
        // Solve B_P^T c = v_P, so invert B_P^T.
        let mut bpt = ExactMatrix::zeros(m, m);
        for (l, &p) in positions.iter().enumerate() {
            for k in 0..m {
                bpt.set(l, k, basis[k][p].clone());
            }
        }
        let inv_m = bpt.inverse().expect("pivot submatrix is invertible");
        let inv = (0..m)
            .map(|k| (0..m).filter_map(|l| {
                let x = inv_m.get(k, l);
                (!x.is_zero()).then(|| (l, x.clone()))
            }).collect())
            .collect();
        let sparse = basis
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
            .collect();
        Ok(SpanCoords { ambient, basis: sparse, positions, inv })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates assuming `v` lies in the span (no membership check).
    pub fn coords_unchecked(&self, v: &[Rational]) -> Vec<Rational> {
        let vp: Vec<&Rational> = self.positions.iter().map(|&p| &v[p]).collect();
        self.inv
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (l, x) in row {
                    if !vp[*l].is_zero() {
                        acc += x * vp[*l];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (i, x) in b {
                out[*i] += c * x;
            }
        }
        out
    }

    /// Coordinates of `v`, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let c = self.coords_unchecked(v);
        (self.combine(&c) == v).then_some(c)
    }
}

/// Least common multiple of the denominators, if it and every scaled
/// numerator fit into `i64`.
pub fn common_denominator<'a>(values: impl Iterator<Item = &'a Rational> + Clone) -> Option<i64> {
    let mut l = BigInt::one();
    for v in values.clone() {
        l = num_integer::Integer::lcm(&l, v.denom());
    }
    let li: i64 = i64::try_from(&l).ok()?;
    for v in values {
        let scaled = v.numer() * (&l / v.denom());
        if i64::try_from(scaled.abs()).is_err() {
            return None;
        }
    }
    Some(li)
}

/// `v * d` as an integer, assuming `d` clears the denominator and the result fits.
pub fn scaled_i64(v: &Rational, d: i64) -> i64 {
    let s = v.numer() * (BigInt::from(d) / v.denom());
    i64::try_from(&s).expect("scaled value fits in i64")
}

pub fn from_i128_ratio(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve(&ExactMatrix::identity(3), &v(&[1, 2, 3])), Some(v(&[1, 2, 3])));
        assert_eq!(solve(&ExactMatrix::from_i64(&[vec![1, 1], vec![2, 2]]), &v(&[1, 3])), None);
        let x = solve(&ExactMatrix::from_i64(&[vec![2, 0], vec![0, 3]]), &v(&[1, 1])).unwrap();
        assert_eq!(x, vec![frac(1, 2), frac(1, 3)]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&ExactMatrix::from_i64(&[vec![1, 1]]));
        assert_eq!(k, vec![v(&[-1, 1])]);
        assert!(kernel(&ExactMatrix::identity(2)).is_empty());
        assert_eq!(kernel(&ExactMatrix::zeros(2, 2)).len(), 2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ExactMatrix::identity(5)), 5);
        assert_eq!(rank(&ExactMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&ExactMatrix::from_i64(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn complement_examples() {
        let c = orthogonal_complement(&ExactMatrix::identity(2), &[v(&[1, 0])]).unwrap();
        assert_eq!(c, vec![v(&[0, 1])]);
        assert_eq!(orthogonal_complement(&ExactMatrix::identity(3), &[]).unwrap().len(), 3);
        let light = orthogonal_complement(&ExactMatrix::from_i64(&[vec![1, 0], vec![0, -1]]), &[v(&[1, 1])]).unwrap();
        assert_eq!(light, vec![v(&[1, 1])]);
        assert!(matches!(
            orthogonal_complement(&ExactMatrix::zeros(2, 2), &[]),
            Err(Error::DegenerateForm(_))
        ));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(parse_rational("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("4/2").unwrap(), rat(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ExactMatrix::from_i64(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.determinant(), rat(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(2));
        assert!(ExactMatrix::from_i64(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn span_coords_roundtrip() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let sc = SpanCoords::new(&basis, 3).unwrap();
        assert_eq!(sc.coords(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(sc.coords(&v(&[1, 0, 0])), None);
    }
}
