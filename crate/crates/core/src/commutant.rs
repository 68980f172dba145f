//! Commutant dimension of a family of operators through a cyclic vector.
//!
//! If `v` generates the whole space under the operators `G_s`, an operator
//! commuting with every `G_s` is determined by `w = T v`. Spinning `v` gives a
//! basis of words applied to `v`; every word relation that holds for `v` must
//! hold for `w`, and those relations are all that is needed. The unknown is
//! therefore a single vector, optionally confined to a subspace known to
//! contain `T v` (for the adjoint module, the centralizer of `v`).

use num_traits::Zero;

use crate::foundation::{axpy, is_zero_vec, EchelonBasis, Rational};

/// Dimension of `{T : T G_s = G_s T for all s}`.
///
/// * `apply(s, x)` returns `G_s x`.
/// * `v` must lie in the span of `z`, and `T v` must lie in that span for
///   every commuting `T`.
///
/// Returns `None` when `v` is not cyclic.
pub fn commutant_dimension_cyclic(
    dim: usize,
    generators: usize,
    apply: &(dyn Fn(usize, &[Rational]) -> Vec<Rational> + Sync),
    v: &[Rational],
    z: &[Vec<Rational>],
) -> Option<usize> {
    let ell = z.len();
    if dim == 0 {
        return Some(0);
    }
    let mut spin = EchelonBasis::new(dim);
    // images[t][i] is T(row_t) when T v = z_i.
    let mut images: Vec<Vec<Vec<Rational>>> = Vec::new();

    let start = v.to_vec();
    let inv = spin.push_reduced(start)?;
    images.push(z.iter().map(|zi| zi.iter().map(|x| x * &inv).collect()).collect());

    let mut constraints = EchelonBasis::new(ell);
    let mut t = 0;
    while t < spin.rank() {
        for s in 0..generators {
            let mut y = apply(s, &spin.rows()[t]);
            let mut img: Vec<Vec<Rational>> = images[t].iter().map(|col| apply(s, col)).collect();
            let coeffs = spin.reduce(&mut y);
            for (u, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = -c;
                for (col, prev) in img.iter_mut().zip(&images[u]) {
                    axpy(col, &neg, prev);
                }
            }
            if !is_zero_vec(&y) {
                let inv = spin.push_reduced(y).expect("nonzero vector");
                for col in img.iter_mut() {
                    for x in col.iter_mut() {
                        if !x.is_zero() {
                            *x *= &inv;
                        }
                    }
                }
                images.push(img);
            } else {
                for p in 0..dim {
                    let row: Vec<Rational> = img.iter().map(|col| col[p].clone()).collect();
                    if !is_zero_vec(&row) {
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
