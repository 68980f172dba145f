//! Arithmetic modulo the Mersenne prime `2^61 - 1`.
//!
//! Ranks can only drop under reduction, so a full rank or a one-dimensional
//! solution space found here certifies the same statement over the rationals.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::foundation::Rational;

pub const P: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    let w = a as u128 * b as u128;
    let lo = (w as u64) & P;
    let hi = (w >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

/// Reduction of a rational, `None` when the denominator vanishes mod `P`.
pub fn reduce(x: &Rational) -> Option<u64> {
    let p = num_bigint::BigInt::from(P);
    let n = x.numer().mod_floor(&p).to_u64()?;
    let d = x.denom().mod_floor(&p).to_u64()?;
    if d.is_zero() {
        return None;
    }
    Some(mul(n, inv(d)))
}

/// Row echelon basis over `F_P`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Reduces `v` in place and returns the coefficients of the stored rows.
    pub fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        let mut coeffs = vec![0; self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (vi, &ri) in v.iter_mut().zip(row).skip(p) {
                if ri != 0 {
                    *vi = sub(*vi, mul(c, ri));
                }
            }
            coeffs[k] = c;
        }
        coeffs
    }

    /// Stores a reduced vector, normalized to pivot 1; returns the factor.
    pub fn push_reduced(&mut self, mut v: Vec<u64>) -> Option<u64> {
        let p = v.iter().position(|&x| x != 0)?;
        let s = inv(v[p]);
        for x in v.iter_mut() {
            *x = mul(*x, s);
        }
        self.rows.push(v);
        self.pivots.push(p);
        Some(s)
    }

    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        self.push_reduced(v).is_some()
    }
}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<u64>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// Basis of `{x : M x = 0}` for an `m × n` matrix given by rows.
pub fn kernel(rows: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
    // Reduced row echelon form, then one vector per free column.
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let s = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mul(*x, s);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (a, &b) in row.iter_mut().zip(&pivot_row) {
                    *a = sub(*a, mul(f, b));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0; n];
        x[free] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = sub(0, m[i][free]);
        }
        out.push(x);
    }
    out
}

/// Commutant dimension of operators `G_s` over `F_P` through the cyclic
/// vector `v`, with `T v` confined to the span of `z`. Mirrors
/// [`crate::commutant::commutant_dimension_cyclic`]. `None` when `v` is not
/// cyclic.
pub fn commutant_dimension_cyclic(
    dim: usize,
    generators: usize,
    apply: &(dyn Fn(usize, &[u64]) -> Vec<u64> + Sync),
    v: &[u64],
    z: &[Vec<u64>],
) -> Option<usize> {
    let ell = z.len();
    if dim == 0 {
        return Some(0);
    }
    let mut spin = Echelon::new();
    let mut images: Vec<Vec<Vec<u64>>> = Vec::new();
    let s0 = spin.push_reduced(v.to_vec())?;
    images.push(z.iter().map(|zi| zi.iter().map(|&x| mul(x, s0)).collect()).collect());

    let mut constraints = Echelon::new();
    let mut t = 0;
    while t < spin.rank() {
        for s in 0..generators {
            let mut y = apply(s, &spin.rows()[t]);
            let mut img: Vec<Vec<u64>> = images[t].iter().map(|col| apply(s, col)).collect();
            let coeffs = spin.reduce(&mut y);
            for (u, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (col, prev) in img.iter_mut().zip(&images[u]) {
                    for (a, &b) in col.iter_mut().zip(prev) {
                        if b != 0 {
                            *a = sub(*a, mul(c, b));
                        }
                    }
                }
            }
            if y.iter().any(|&x| x != 0) {
                let f = spin.push_reduced(y).expect("nonzero vector");
                for col in img.iter_mut() {
                    for x in col.iter_mut() {
                        *x = mul(*x, f);
                    }
                }
                images.push(img);
            } else {
                for p in 0..dim {
                    let row: Vec<u64> = img.iter().map(|col| col[p]).collect();
                    if row.iter().any(|&x| x != 0) {
                        constraints.insert(row);
                    }
                }
            }
            if spin.rank() == dim && ell > 0 && constraints.rank() + 1 == ell {
                return Some(1);
            }
        }
        t += 1;
    }
    if spin.rank() < dim {
        return None;
    }
    Some(ell - constraints.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::frac;

    #[test]
    fn field_operations() {
        assert_eq!(mul(inv(7), 7), 1);
        assert_eq!(sub(0, 1), P - 1);
        assert_eq!(reduce(&frac(1, 2)).map(|h| mul(h, 2)), Some(1));
        assert_eq!(reduce(&frac(-3, 1)), Some(P - 3));
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(&[vec![1, 2, 3]], 3);
        assert_eq!(k.len(), 2);
        for x in k {
            assert_eq!(add(add(x[0], mul(2, x[1])), mul(3, x[2])), 0);
        }
    }
}
