//! Markings with `α_max(h) = 2`, the sl2-triple existence decision and the
//! classification table.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_root_system, chevalley_algebra, ChevalleyIndex, RootSystem, RootType};
use crate::error::Error;
use crate::foundation::{kernel, rat, solve, zero_vec, EchelonBasis, ExactMatrix, Rational};
use crate::isotypic::decompose;
use crate::tkk::{LieAlgebra, Sl2Triple};

/// Witness attempts used to cross-check a "does not exist" decision.
pub const CROSS_CHECK_ATTEMPTS: usize = 100;
/// Attempts at solving `[e, f] = h` once the decision says "exists".
pub const WITNESS_ATTEMPTS: usize = 100;

/// Nonnegative labels `p_i = α_i(h)` of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Marking(pub Vec<i64>);

impl Marking {
    /// `α(h)` for a coefficient vector.
    pub fn value(&self, root: &[i64]) -> i64 {
        root.iter().zip(&self.0).map(|(k, p)| k * p).sum()
    }

    /// 1-based indices of the marked nodes.
    pub fn marked_nodes(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &p)| p != 0).map(|(i, _)| i + 1).collect()
    }
}

/// All markings with `Σ l_i p_i = 2` and `g^1 ≠ 0`, in descending
/// lexicographic order.
pub fn enumerate_markings(rs: &RootSystem) -> Vec<Marking> {
    let n = rs.rank;
    let l = &rs.highest_root;
    let mut out = Vec::new();
    let mut p = vec![0i64; n];
    fn rec(i: usize, left: i64, l: &[i64], p: &mut Vec<i64>, out: &mut Vec<Marking>) {
        if i == l.len() {
            if left == 0 {
                out.push(Marking(p.clone()));
            }
            return;
        }
        let mut k = 0;
        while k * l[i] <= left {
            p[i] = k;
            rec(i + 1, left - k * l[i], l, p, out);
            k += 1;
        }
        p[i] = 0;
    }
    rec(0, 2, l, &mut p, &mut out);
    out.retain(|m| rs.positive_roots.iter().any(|r| m.value(r) == 1));
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `h = Σ c_j h_j` with `α_i(h) = p_i`, in Chevalley coordinates.
pub fn cartan_element(rs: &RootSystem, m: &Marking) -> Vec<Rational> {
    let n = rs.rank;
    let a = ExactMatrix::from_rows((0..n).map(|i| (0..n).map(|j| rat(rs.cartan[i][j])).collect()).collect());
    let p: Vec<Rational> = m.0.iter().map(|&x| rat(x)).collect();
    let c = solve(&a, &p).expect("Cartan matrix is invertible");
    let idx = ChevalleyIndex::of(rs);
    let mut h = zero_vec(idx.dim());
    for (j, cj) in c.into_iter().enumerate() {
        h[idx.h(j)] = cj;
    }
    h
}

/// `(dim g², α_max(h_j) for each unmarked node j)` with 1-based `j`.
pub fn g2_module_info(rs: &RootSystem, m: &Marking) -> (usize, Vec<(usize, i64)>) {
    let dim = rs.positive_roots.iter().filter(|r| m.value(r) == 2).count();
    let pairings = (0..rs.rank)
        .filter(|&j| m.0[j] == 0)
        .map(|j| (j + 1, rs.coroot_pairing(&rs.highest_root, j)))
        .collect();
    (dim, pairings)
}

/// `(e, f)` of a witness triple; `h` is determined by the marking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub e: Vec<Rational>,
    pub f: Vec<Rational>,
}

/// Outcome of the existence decision for one marking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub exists: bool,
    /// Largest rank of `D ↦ [D, e]` from `g̃⁰` to `g²` over the trials.
    pub generic_rank: usize,
    pub g2_dim: usize,
    pub witness: Option<Witness>,
}

struct Graded {
    g0_roots: Vec<usize>,
    g2_roots: Vec<usize>,
}

fn graded(rs: &RootSystem, idx: &ChevalleyIndex, m: &Marking) -> Graded {
    let mut g0_roots = Vec::new();
    let mut g2_roots = Vec::new();
    for (a, r) in rs.positive_roots.iter().enumerate() {
        match m.value(r) {
            0 => {
                g0_roots.push(idx.e(a));
                g0_roots.push(idx.f(a));
            }
            2 => g2_roots.push(idx.e(a)),
            _ => {}
        }
    }
    g0_roots.sort_unstable();
    Graded { g0_roots, g2_roots }
}

fn random_g2(dim: usize, g2: &[usize], rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut e = zero_vec(dim);
    for &i in g2 {
        e[i] = rat(rng.gen_range(-10..=10));
    }
    e
}

/// Solves `[e, f] = h` for `f ∈ g^{-2}`.
fn try_witness(l: &LieAlgebra, idx: &ChevalleyIndex, g2: &[usize], e: &[Rational], h: &[Rational]) -> Option<Witness> {
    if e.iter().all(Zero::is_zero) {
        return None;
    }
    let neg: Vec<usize> = g2.iter().map(|&i| idx.f(i)).collect();
    let cols: Vec<Vec<Rational>> = neg.iter().map(|&j| l.ad_basis_apply(j, e).into_iter().map(|x| -x).collect()).collect();
    let m = ExactMatrix::from_cols(&cols, l.dim());
    let y = solve(&m, h)?;
    let mut f = zero_vec(l.dim());
    for (c, &j) in y.into_iter().zip(&neg) {
        f[j] = c;
    }
    let t = Sl2Triple { e: e.to_vec(), h: h.to_vec(), f: f.clone() };
    t.check(l).ok()?;
    Some(Witness { e: e.to_vec(), f })
}

/// Existence decision, building the Chevalley algebra internally.
pub fn sl2_exists(rs: &RootSystem, m: &Marking, trials: usize, seed: u64) -> Result<Decision, Error> {
    let l = chevalley_algebra(rs);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sl2_exists_in(&l, rs, m, trials, &mut rng)
}

/// Existence decision inside an already built Chevalley algebra.
pub fn sl2_exists_in(l: &LieAlgebra, rs: &RootSystem, m: &Marking, trials: usize, rng: &mut ChaCha8Rng) -> Result<Decision, Error> {
    let idx = ChevalleyIndex::of(rs);
    let gr = graded(rs, &idx, m);
    let h = cartan_element(rs, m);
    let n = rs.rank;
    let dim = idx.dim();
    let m2 = gr.g2_roots.len();

    // Cartan part of g̃⁰: Killing-orthogonal to h, with K(h_i, h_j) = Σ_α α(h_i) α(h_j).
    let hc: Vec<Rational> = (0..n).map(|j| h[idx.h(j)].clone()).collect();
    let kh: Vec<Rational> = (0..n)
        .map(|i| {
            let mut s = Rational::zero();
            for r in &rs.positive_roots {
                let ai = rs.coroot_pairing(r, i);
                if ai == 0 {
                    continue;
                }
                let ah: Rational = (0..n).map(|j| rat(rs.coroot_pairing(r, j)) * &hc[j]).sum();
                s += rat(2 * ai) * ah;
            }
            s
        })
        .collect();
    let cartan_perp: Vec<Vec<Rational>> = kernel(&ExactMatrix::from_rows(vec![kh]))
        .into_iter()
        .map(|c| {
            let mut v = zero_vec(dim);
            for (j, x) in c.into_iter().enumerate() {
                v[idx.h(j)] = x;
            }
            v
        })
        .collect();

    let mut generic_rank = 0;
    if m2 > 0 {
        for _ in 0..trials.max(1) {
            let e = random_g2(dim, &gr.g2_roots, rng);
            let mut ech = EchelonBasis::new(m2);
            let restrict = |v: Vec<Rational>| -> Vec<Rational> { gr.g2_roots.iter().map(|&i| v[i].clone()).collect() };
            for &d in &gr.g0_roots {
                ech.insert(restrict(l.ad_basis_apply(d, &e)));
                if ech.rank() == m2 {
                    break;
                }
            }
            if ech.rank() < m2 {
                for c in &cartan_perp {
                    ech.insert(restrict(l.bracket(c, &e)));
                }
            }
            generic_rank = generic_rank.max(ech.rank());
            if generic_rank == m2 {
                break;
            }
        }
    }
    let name = format!("{:?} of {}", m.0, rs.name());
    let exists = m2 > 0 && generic_rank < m2;
    if exists {
        for _ in 0..WITNESS_ATTEMPTS {
            let e = random_g2(dim, &gr.g2_roots, rng);
            if let Some(w) = try_witness(l, &idx, &gr.g2_roots, &e, &h) {
                return Ok(Decision { exists, generic_rank, g2_dim: m2, witness: Some(w) });
            }
        }
        Err(Error::WitnessNotFound(name))
    } else {
        for _ in 0..CROSS_CHECK_ATTEMPTS {
            let e = random_g2(dim, &gr.g2_roots, rng);
            if try_witness(l, &idx, &gr.g2_roots, &e, &h).is_some() {
                return Err(Error::InconsistentDecision(name));
            }
        }
        Ok(Decision { exists, generic_rank, g2_dim: m2, witness: None })
    }
}

/// Permutations of the nodes preserving the Cartan matrix.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank;
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(rs: &RootSystem, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = rs.rank;
        let i = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            if (0..i).all(|j| rs.cartan[i][j] == rs.cartan[c][perm[j]] && rs.cartan[j][i] == rs.cartan[perm[j]][c])
                && rs.cartan[i][i] == rs.cartan[c][c]
            {
                used[c] = true;
                perm.push(c);
                rec(rs, perm, used, out);
                perm.pop();
                used[c] = false;
            }
        }
    }
    rec(rs, &mut perm, &mut used, &mut out);
    out
}

/// One line of the classification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub marking: Marking,
    pub exists: bool,
    /// `(dim g0, dim J1, dim J2) = (dim g⁰ - dim g², dim g¹, dim g²)`.
    pub dims: (usize, usize, usize),
    pub g2_dim: usize,
    /// Index of an earlier row related by a diagram automorphism.
    pub equivalent_to: Option<usize>,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

/// Classification with the default decision parameters of [`classify_with`].
pub fn classify(kind: RootType, rank: usize, trials: usize, seed: u64) -> Result<Vec<ClassificationRow>, Error> {
    let rs = build_root_system(kind, rank)?;
    let l = chevalley_algebra(&rs);
    classify_with(&rs, &l, trials, seed)
}

/// One row per marking, processed in parallel with per-row random streams.
pub fn classify_with(rs: &RootSystem, l: &LieAlgebra, trials: usize, seed: u64) -> Result<Vec<ClassificationRow>, Error> {
    let markings = enumerate_markings(rs);
    let autos = diagram_automorphisms(rs);
    let rows: Vec<Result<ClassificationRow, Error>> = markings
        .par_iter()
        .enumerate()
        .map(|(k, m)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let d = sl2_exists_in(l, rs, m, trials, &mut rng)?;
            let zero_roots = rs.positive_roots.iter().filter(|r| m.value(r) == 0).count();
            let ones = rs.positive_roots.iter().filter(|r| m.value(r) == 1).count();
            let g0_total = rs.rank + 2 * zero_roots;
            let dims = (g0_total - d.g2_dim, ones, d.g2_dim);
            let mut notes = Vec::new();
            if let Some(w) = &d.witness {
                let t = Sl2Triple { e: w.e.clone(), h: cartan_element(rs, m), f: w.f.clone() };
                let iso = decompose(l, &t)?;
                if (iso.m0, iso.m1, iso.m2) != dims {
                    return Err(Error::InconsistentDecision(format!("grading dims of {:?} disagree with root count", m.0)));
                }
                let center = center_dim(l, &iso.g0_basis);
                if center > 0 {
                    notes.push(format!(
                        "g0 has a {center}-dimensional center; semisimple part has dimension {}",
                        iso.g0_basis.len() - center
                    ));
                }
            }
            let equivalent_to = (0..k).find(|&j| {
                autos.iter().any(|p| (0..rs.rank).all(|i| markings[j].0[p[i]] == m.0[i]))
            });
            Ok(ClassificationRow {
                marking: m.clone(),
                exists: d.exists,
                dims,
                g2_dim: d.g2_dim,
                equivalent_to,
                witness: d.witness,
                notes,
            })
        })
        .collect();
    rows.into_iter().collect()
}

/// `dim g0 - dim [g0, g0]` for a subalgebra given by a basis.
fn center_dim(l: &LieAlgebra, basis: &[Vec<Rational>]) -> usize {
    let k = basis.len();
    let mut ech = EchelonBasis::new(l.dim());
    for i in 0..k {
        for j in (i + 1)..k {
            ech.insert(l.bracket(&basis[i], &basis[j]));
            if ech.rank() == k {
                return 0;
            }
        }
    }
    k - ech.rank()
}
