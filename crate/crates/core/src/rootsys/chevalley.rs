//! Chevalley basis with structure constants fixed by extraspecial pairs.

use std::collections::HashMap;

use num_traits::Zero;

use super::RootSystem;
use crate::foundation::{rat, Rational};
use crate::tkk::{BasisLabel, LieAlgebra};

/// Index arithmetic for the basis `e_α (α > 0), h_1..h_r, e_{-α} (α > 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChevalleyIndex {
    pub positive: usize,
    pub rank: usize,
}

impl ChevalleyIndex {
    pub fn of(rs: &RootSystem) -> Self {
        ChevalleyIndex { positive: rs.num_positive(), rank: rs.rank }
    }

    pub fn dim(&self) -> usize {
        2 * self.positive + self.rank
    }

    pub fn e(&self, i: usize) -> usize {
        i
    }

    pub fn h(&self, j: usize) -> usize {
        self.positive + j
    }

    pub fn f(&self, i: usize) -> usize {
        self.positive + self.rank + i
    }
}

/// A root as `(positive index, sign)`.
type SignedRoot = (usize, i8);

struct Constants<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(SignedRoot, SignedRoot), i64>,
    /// Extraspecial pair `(α_i, ξ - α_i)` for each non-simple positive root.
    extraspecial: Vec<Option<(usize, usize)>>,
}

impl<'a> Constants<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let n = rs.rank;
        let extraspecial = rs
            .positive_roots
            .iter()
            .map(|xi| {
                if RootSystem::height(xi) == 1 {
                    return None;
                }
                (0..n).find_map(|i| {
                    let mut rest = xi.clone();
                    rest[i] -= 1;
                    rs.positive_index(&rest).map(|b| (i, b))
                })
            })
            .collect();
        Constants { rs, memo: HashMap::new(), extraspecial }
    }

    fn vector(&self, r: SignedRoot) -> Vec<i64> {
        let v = &self.rs.positive_roots[r.0];
        if r.1 > 0 {
            v.clone()
        } else {
            v.iter().map(|x| -x).collect()
        }
    }

    fn lookup(&self, v: &[i64]) -> Option<SignedRoot> {
        if let Some(i) = self.rs.positive_index(v) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.rs.positive_index(&neg).map(|i| (i, -1))
    }

    fn sum(&self, r: SignedRoot, s: SignedRoot) -> Option<SignedRoot> {
        let (a, b) = (self.vector(r), self.vector(s));
        let v: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        self.lookup(&v)
    }

    fn len2(&self, r: SignedRoot) -> i64 {
        let v = &self.rs.positive_roots[r.0];
        self.rs.inner(v, v)
    }

    /// `p + 1` where `p` is the largest integer with `s - p r` a root.
    fn string_length(&self, r: SignedRoot, s: SignedRoot) -> i64 {
        let (a, b) = (self.vector(r), self.vector(s));
        let mut p = 0;
        let mut cur = b;
        loop {
            for (c, x) in cur.iter_mut().zip(&a) {
                *c -= x;
            }
            if self.lookup(&cur).is_some() {
                p += 1;
            } else {
                return p + 1;
            }
        }
    }

    /// `N_{r,s}`, zero when `r + s` is not a root.
    fn n(&mut self, r: SignedRoot, s: SignedRoot) -> i64 {
        let Some(t) = self.sum(r, s) else { return 0 };
        if let Some(&v) = self.memo.get(&(r, s)) {
            return v;
        }
        let v = match (r.1 > 0, s.1 > 0) {
            (true, true) => {
                if r.0 < s.0 {
                    self.positive_pair(r.0, s.0, t.0)
                } else {
                    -self.n(s, r)
                }
            }
            (false, false) => -self.n((r.0, 1), (s.0, 1)),
            (false, true) => -self.n(s, r),
            (true, false) => {
                // r + s + u = 0 with u = -(r + s); N_{r,s}/(u,u) = N_{s,u}/(r,r) = N_{u,r}/(s,s).
                let u = (t.0, -t.1);
                if t.1 > 0 {
                    // u < 0, s < 0: N_{s,u} = -N_{-s,-u}.
                    let nsu = self.n(s, u);
                    nsu * self.len2(u) / self.len2(r)
                } else {
                    // u > 0 and r > 0.
                    let nur = self.n(u, r);
                    nur * self.len2(u) / self.len2(s)
                }
            }
        };
        self.memo.insert((r, s), v);
        v
    }

    /// `N_{γ,δ}` for positive `γ` before `δ` with `γ + δ = ξ`.
    fn positive_pair(&mut self, g: usize, d: usize, xi: usize) -> i64 {
        let (i, b) = self.extraspecial[xi].expect("non-simple root has an extraspecial pair");
        let a = self.rs.positive_index(&super::unit(self.rs.rank, i)).expect("simple root");
        let (alpha, beta) = ((a, 1i8), (b, 1i8));
        let nab = self.string_length(alpha, beta);
        if (g, d) == (a, b) {
            return nab;
        }
        let (gamma, delta) = ((g, 1i8), (d, 1i8));
        let neg = |r: SignedRoot| (r.0, -r.1);
        let mut acc = Rational::zero();
        if let Some(bg) = self.sum(beta, neg(gamma)) {
            let t = self.n(beta, neg(gamma)) * self.n(alpha, neg(delta));
            acc += Rational::new(t.into(), self.len2(bg).into());
        }
        if let Some(ag) = self.sum(alpha, neg(gamma)) {
            let t = self.n(neg(gamma), alpha) * self.n(beta, neg(delta));
            acc += Rational::new(t.into(), self.len2(ag).into());
        }
        let v = acc * rat(self.len2((xi, 1))) / rat(nab);
        assert!(v.is_integer(), "structure constant is not an integer");
        i64::try_from(v.to_integer()).expect("small structure constant")
    }
}

/// The Chevalley-basis Lie algebra of a root system.
///
/// Labels are `e[k_1 ... k_r]`, `h[i]` (1-based) and `f[k_1 ... k_r]`.
pub fn chevalley_algebra(rs: &RootSystem) -> LieAlgebra {
    let idx = ChevalleyIndex::of(rs);
    let p = idx.positive;
    let r = rs.rank;
    let fmt_root = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut labels = Vec::with_capacity(idx.dim());
    labels.extend(rs.positive_roots.iter().map(|v| BasisLabel::Opaque(format!("e[{}]", fmt_root(v)))));
    labels.extend((0..r).map(|j| BasisLabel::Opaque(format!("h[{}]", j + 1))));
    labels.extend(rs.positive_roots.iter().map(|v| BasisLabel::Opaque(format!("f[{}]", fmt_root(v)))));

    let pos = |s: SignedRoot| if s.1 > 0 { idx.e(s.0) } else { idx.f(s.0) };
    let mut c = Constants::new(rs);
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rational)>)> = Vec::new();

    // [h_j, e_{±α}] = ±α(h_j) e_{±α}
    for j in 0..r {
        for (a, v) in rs.positive_roots.iter().enumerate() {
            let w = rs.coroot_pairing(v, j);
            if w != 0 {
                brackets.push((idx.e(a), idx.h(j), vec![(idx.e(a), rat(-w))]));
                brackets.push((idx.h(j), idx.f(a), vec![(idx.f(a), rat(-w))]));
            }
        }
    }
    // [e_α, e_{-α}] = h_α = Σ k_i (α_i, α_i)/(α, α) h_i
    for (a, v) in rs.positive_roots.iter().enumerate() {
        let la = rs.inner(v, v);
        let terms: Vec<(usize, Rational)> = (0..r)
            .filter(|&i| v[i] != 0)
            .map(|i| (idx.h(i), Rational::new((v[i] * rs.gram[i][i]).into(), la.into())))
            .collect();
        brackets.push((idx.e(a), idx.f(a), terms));
    }
    // [e_r, e_s] = N_{r,s} e_{r+s}
    let signed: Vec<SignedRoot> = (0..p).map(|a| (a, 1)).chain((0..p).map(|a| (a, -1))).collect();
    for (x, &rr) in signed.iter().enumerate() {
        for &ss in &signed[x + 1..] {
            if rr.0 == ss.0 {
                continue;
            }
            let Some(t) = c.sum(rr, ss) else { continue };
            let nv = c.n(rr, ss);
            debug_assert!(nv != 0);
            brackets.push((pos(rr), pos(ss), vec![(pos(t), rat(nv))]));
        }
    }
    LieAlgebra::from_brackets(labels, brackets).expect("well-formed Chevalley brackets")
}

#[cfg(test)]
mod tests {
    use super::super::{build_root_system, RootType};
    use super::*;
    use crate::tkk::JacobiMode;

    #[test]
    fn a1_is_sl2() {
        let rs = build_root_system(RootType::A, 1).unwrap();
        let l = chevalley_algebra(&rs);
        let idx = ChevalleyIndex::of(&rs);
        assert_eq!(l.bracket_basis(idx.e(0), idx.f(0)), &[(idx.h(0), rat(1))]);
        assert_eq!(l.bracket_basis(idx.h(0), idx.e(0)), &[(idx.e(0), rat(2))]);
    }

    #[test]
    fn rank_two_jacobi_and_simplicity() {
        for (k, r, dim) in [(RootType::A, 2, 8), (RootType::B, 2, 10), (RootType::G, 2, 14)] {
            let l = chevalley_algebra(&build_root_system(k, r).unwrap());
            assert_eq!(l.dim(), dim);
            assert!(l.verify_jacobi(JacobiMode::Full).passed(), "{k}{r}");
            assert!(l.is_simple(), "{k}{r}");
        }
    }

    #[test]
    fn structure_constants_are_integers() {
        let l = chevalley_algebra(&build_root_system(RootType::G, 2).unwrap());
        assert!(l.entries().all(|(_, _, t)| t.iter().all(|(_, c)| c.is_integer())));
    }
}
