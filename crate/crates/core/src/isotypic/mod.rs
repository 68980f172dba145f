//! Grading by `ad h`, the isotypic decomposition under an sl2-triple, and
//! extraction of the Lie-Jordan structure.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::foundation::{kernel, rat, zero_vec, ExactMatrix, Rational, SpanCoords};
use crate::sl2kit::Sl2Basis;
use crate::sympjordan::{LieJordanStructure, StructureContext, SymplecticSpace};
use crate::tkk::{BasisLabel, LieAlgebra, Sl2Triple, TkkLayout};

/// Eigenspaces `g^k` of `ad h` for `k = -2..=2`, as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    spaces: [Vec<Vec<Rational>>; 5],
}

impl Grading {
    pub fn space(&self, k: i32) -> &[Vec<Rational>] {
        assert!((-2..=2).contains(&k), "grade out of range");
        &self.spaces[(k + 2) as usize]
    }

    /// `dim g^k` for `k = -2..=2`.
    pub fn dims(&self) -> [usize; 5] {
        [0, 1, 2, 3, 4].map(|i| self.spaces[i].len())
    }
}

/// Multiplicities of the 1-, 2- and 3-dimensional irreducibles, with bases of
/// the corresponding highest-weight spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicData {
    pub m0: usize,
    pub m1: usize,
    pub m2: usize,
    /// Basis of the invariants `g_0`.
    pub g0_basis: Vec<Vec<Rational>>,
    /// Basis of `g^1`, the vectors `e_1 ⊗ a`.
    pub g1_basis: Vec<Vec<Rational>>,
    /// Basis of `g^2`, the vectors `e ⊗ A`.
    pub g2_basis: Vec<Vec<Rational>>,
}

fn shifted(m: &ExactMatrix, k: i64) -> ExactMatrix {
    let mut s = m.clone();
    let kk = rat(k);
    for i in 0..m.rows() {
        *s.entry_mut(i, i) -= &kk;
    }
    s
}

/// Dimension of the generalized eigenspace of `m` for eigenvalue `k`.
fn generalized_dim(m: &ExactMatrix, k: i64) -> usize {
    let a = shifted(m, k);
    let mut p = a.clone();
    let mut last = kernel(&p).len();
    loop {
        p = &p * &a;
        let d = kernel(&p).len();
        if d == last {
            return d;
        }
        last = d;
    }
}

/// Eigenspace decomposition of `ad h`.
pub fn grade(l: &LieAlgebra, h: &[Rational]) -> Result<Grading, Error> {
    let n = l.dim();
    if h.len() != n {
        return Err(Error::InvalidTriple(format!("h must have {n} coordinates")));
    }
    let m = l.ad_matrix(h);
    let spaces = [-2i64, -1, 0, 1, 2].map(|k| kernel(&shifted(&m, k)));
    let total: usize = spaces.iter().map(Vec::len).sum();
    if total < n {
        let gen: usize = (-2..=2).map(|k| generalized_dim(&m, k)).sum();
        if gen == n {
            return Err(Error::NotSemisimpleElement);
        }
        return Err(Error::NotShort(format!("eigenspaces for -2..2 span {total} of {n} dimensions")));
    }
    Ok(Grading { spaces })
}

fn check_triple(l: &LieAlgebra, t: &Sl2Triple) -> Result<Grading, Error> {
    t.check(l)?;
    grade(l, &t.h)
}

/// Multiplicities and component bases for the triple `t`.
pub fn decompose(l: &LieAlgebra, t: &Sl2Triple) -> Result<IsotypicData, Error> {
    let g = check_triple(l, t)?;
    let g0_basis = invariants(l, t, &g);
    let (m1, m2) = (g.space(1).len(), g.space(2).len());
    Ok(IsotypicData {
        m0: g.space(0).len() - m2,
        m1,
        m2,
        g0_basis,
        g1_basis: g.space(1).to_vec(),
        g2_basis: g.space(2).to_vec(),
    })
}

/// `ker ad e ∩ ker ad f` inside `g^0`, with coordinates over the grading basis.
fn invariants(l: &LieAlgebra, t: &Sl2Triple, g: &Grading) -> Vec<Vec<Rational>> {
    let zero = g.space(0);
    if zero.is_empty() {
        return Vec::new();
    }
    let n = l.dim();
    let cols: Vec<Vec<Rational>> = zero
        .iter()
        .map(|x| {
            let mut c = l.bracket(&t.e, x);
            c.extend(l.bracket(&t.f, x));
            c
        })
        .collect();
    let m = ExactMatrix::from_cols(&cols, 2 * n);
    kernel(&m)
        .into_iter()
        .map(|c| {
            let mut v = zero_vec(n);
            for (ci, b) in c.iter().zip(zero) {
                if !ci.is_zero() {
                    crate::foundation::axpy(&mut v, ci, b);
                }
            }
            v
        })
        .collect()
}

/// A structure extracted from an algebra, with the image of every basis
/// element of `build(structure)` in the source algebra.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub structure: LieJordanStructure,
    /// `embedding[i]` is the source-algebra vector for TKK basis element `i`.
    pub embedding: Vec<Vec<Rational>>,
    /// The factor `λ` with `λ K` the normalized invariant form.
    pub form_scale: Rational,
}

/// Extracts `(J1; J2; g0; δ0)` from a simple algebra and a short triple.
pub fn extract(l: &LieAlgebra, t: &Sl2Triple) -> Result<LieJordanStructure, Error> {
    extract_with_embedding(l, t).map(|e| e.structure)
}

/// [`extract`] together with the embedding of the rebuilt algebra.
pub fn extract_with_embedding(l: &LieAlgebra, t: &Sl2Triple) -> Result<Extraction, Error> {
    let grading = check_triple(l, t)?;
    let simp = l.simplicity(42);
    if !simp.is_simple() {
        return Err(Error::NotSimple);
    }
    let killing = l.killing_form();
    extract_graded(l, t, &grading, &killing)
}

fn extract_graded(l: &LieAlgebra, t: &Sl2Triple, grading: &Grading, killing: &ExactMatrix) -> Result<Extraction, Error> {
    let dim = l.dim();
    let e1: Vec<Vec<Rational>> = grading.space(1).to_vec();
    let n = e1.len();
    if n == 0 {
        return Err(Error::InvalidStructure("g^1 is zero".into()));
    }
    let em1: Vec<Vec<Rational>> = e1.iter().map(|x| l.bracket(&t.f, x)).collect();
    let e2: Vec<Vec<Rational>> = grading.space(2).to_vec();
    let h2: Vec<Vec<Rational>> = e2.iter().map(|x| l.bracket(x, &t.f)).collect();
    let half = Rational::new(1.into(), 2.into());
    let f2: Vec<Vec<Rational>> =
        h2.iter().map(|x| l.bracket(&t.f, x).into_iter().map(|c| c * &half).collect()).collect();
    let g0v = invariants(l, t, grading);

    let e1c = SpanCoords::new(&e1, dim)?;
    let e2c = SpanCoords::new(&e2, dim)?;

    let op_from = |img: &dyn Fn(usize) -> Vec<Rational>| -> Result<ExactMatrix, Error> {
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|b| e1c.coords(&img(b)).ok_or_else(|| Error::InvalidStructure("bracket leaves g^1".into())))
            .collect::<Result<_, _>>()?;
        Ok(ExactMatrix::from_cols(&cols, n))
    };
    let j2_basis: Vec<ExactMatrix> =
        e2.iter().map(|x| op_from(&|b| l.bracket(x, &em1[b]))).collect::<Result<_, _>>()?;
    let g0_basis: Vec<ExactMatrix> =
        g0v.iter().map(|x| op_from(&|a| l.bracket(x, &e1[a]))).collect::<Result<_, _>>()?;

    let kef = LieAlgebra::form_value(killing, &t.e, &t.f);
    if kef.is_zero() {
        return Err(Error::NotSimple);
    }
    let lambda = Rational::from_integer((n as i64).into()) / (rat(2) * kef);
    let mut omega = ExactMatrix::zeros(n, n);
    for a in 0..n {
        let ka = killing.mul_vec(&e1[a]);
        for b in 0..n {
            omega.set(a, b, &lambda * crate::foundation::dot(&ka, &em1[b]));
        }
    }
    let space = SymplecticSpace::new(omega)?;

    let unit = e2c.coords(&t.e).ok_or(Error::NonUnitalJ2)?;
    let unit_op = crate::foundation::combine(&unit, &j2_basis, n, n);
    if unit_op != ExactMatrix::identity(n) {
        return Err(Error::NonUnitalJ2);
    }

    let mut s = LieJordanStructure { space, j2_basis, g0_basis, delta0: BTreeMap::new(), unit };
    let ctx = StructureContext::without_delta0(&s)?;
    let mut split = g0v.clone();
    split.extend(h2.iter().cloned());
    let split = SpanCoords::new(&split, dim)?;
    let kg = g0v.len();
    for a in 0..n {
        for b in a..n {
            let br = l.bracket(&e1[a], &em1[b]);
            let c = split
                .coords(&br)
                .ok_or_else(|| Error::InvalidStructure("[g^1, g^-1] leaves g^0".into()))?;
            let i0c = ctx.i0_part(&c[..kg]);
            if i0c.iter().any(|x| !x.is_zero()) {
                s.delta0.insert((a, b), i0c);
            }
        }
    }

    let lay = TkkLayout::of(&s);
    let embedding = lay
        .labels()
        .iter()
        .map(|lab| match lab {
            BasisLabel::G0(k) => g0v[*k].clone(),
            BasisLabel::V1(w, j) => if *w > 0 { e1[*j].clone() } else { em1[*j].clone() },
            BasisLabel::V2(Sl2Basis::E, k) => e2[*k].clone(),
            BasisLabel::V2(Sl2Basis::H, k) => h2[*k].clone(),
            BasisLabel::V2(Sl2Basis::F, k) => f2[*k].clone(),
            BasisLabel::Opaque(_) => unreachable!("layout labels are never opaque"),
        })
        .collect();
    Ok(Extraction { structure: s, embedding, form_scale: lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tkk::{build, canonical_triple};

    #[test]
    fn sl2_grading() {
        let l = LieAlgebra::with_opaque_labels(
            3,
            vec![(0, 1, vec![(0, rat(-2))]), (0, 2, vec![(1, rat(1))]), (1, 2, vec![(2, rat(-2))])],
        )
        .unwrap();
        let g = grade(&l, &[rat(0), rat(1), rat(0)]).unwrap();
        assert_eq!(g.dims(), [1, 0, 1, 0, 1]);
        let t = Sl2Triple { e: vec![rat(1), rat(0), rat(0)], h: vec![rat(0), rat(1), rat(0)], f: vec![rat(0), rat(0), rat(1)] };
        let d = decompose(&l, &t).unwrap();
        assert_eq!((d.m0, d.m1, d.m2), (0, 0, 1));
    }

    #[test]
    fn eigenvalue_three_is_not_short() {
        let l = LieAlgebra::with_opaque_labels(
            3,
            vec![(0, 1, vec![(0, rat(-2))]), (0, 2, vec![(1, rat(1))]), (1, 2, vec![(2, rat(-2))])],
        )
        .unwrap();
        assert!(matches!(grade(&l, &[rat(0), frac3(), rat(0)]), Err(Error::NotShort(_))));
        assert_eq!(grade(&l, &[rat(1), rat(0), rat(0)]), Err(Error::NotSemisimpleElement));
    }

    fn frac3() -> Rational {
        rat(3) / rat(2)
    }

    #[test]
    fn maximal_round_trip() {
        let s = LieJordanStructure::maximal(1).unwrap();
        let l = build(&s).unwrap();
        let t = canonical_triple(&l, &s).unwrap();
        assert_eq!(grade(&l, &t.h).unwrap().dims(), [1, 2, 4, 2, 1]);
        let x = extract(&l, &t).unwrap();
        assert_eq!(x, s);
    }
}
