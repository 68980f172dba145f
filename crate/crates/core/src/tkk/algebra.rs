//! Lie algebras given by structure constants on a labeled basis.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::commutant::commutant_dimension_cyclic;
use crate::error::Error;
use crate::modp;
use crate::foundation::{common_denominator, kernel, rat, scaled_i64, zero_vec, ExactMatrix, Rational};
use crate::sl2kit::Sl2Basis;

/// Name of a basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `D_k ∈ g0`.
    G0(usize),
    /// `e_w ⊗ a_j` with weight `w = ±1`.
    V1(i8, usize),
    /// `X ⊗ A_k` with `X ∈ {e, h, f}`.
    V2(Sl2Basis, usize),
    /// Label of an algebra that was not produced from a structure.
    Opaque(String),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::G0(k) => write!(f, "g0:{k}"),
            BasisLabel::V1(w, j) => write!(f, "v1:{}:{j}", if *w > 0 { "+1" } else { "-1" }),
            BasisLabel::V2(x, k) => write!(f, "v2:{}:{k}", x.symbol()),
            BasisLabel::Opaque(s) => f.write_str(s),
        }
    }
}

impl BasisLabel {
    /// Parses the textual form; anything unrecognized becomes opaque.
    pub fn parse(s: &str) -> BasisLabel {
        let parts: Vec<&str> = s.split(':').collect();
        let idx = |p: &str| p.parse::<usize>().ok();
        let parsed = match parts.as_slice() {
            ["g0", k] => idx(k).map(BasisLabel::G0),
            ["v1", "+1", j] => idx(j).map(|j| BasisLabel::V1(1, j)),
            ["v1", "-1", j] => idx(j).map(|j| BasisLabel::V1(-1, j)),
            ["v2", x, k] if x.len() == 1 => {
                Sl2Basis::from_symbol(x.chars().next().unwrap()).and_then(|b| idx(k).map(|k| BasisLabel::V2(b, k)))
            }
            _ => None,
        };
        parsed.unwrap_or_else(|| BasisLabel::Opaque(s.to_string()))
    }

    pub fn is_opaque(&self) -> bool {
        matches!(self, BasisLabel::Opaque(_))
    }
}

/// Structure constants scaled to integers by a common denominator.
#[derive(Debug)]
struct ScaledTable {
    denom: i64,
    table: Vec<Vec<(usize, i64)>>,
}

/// A finite-dimensional Lie algebra with sparse structure constants.
///
/// The full table `[b_i, b_j]` is stored for every ordered pair, so lookups
/// need no sign bookkeeping.
#[derive(Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<BasisLabel>,
    table: Vec<Vec<(usize, Rational)>>,
    scaled: OnceLock<Option<ScaledTable>>,
}

impl Clone for LieAlgebra {
    fn clone(&self) -> Self {
        LieAlgebra { dim: self.dim, labels: self.labels.clone(), table: self.table.clone(), scaled: OnceLock::new() }
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.labels == other.labels && self.table == other.table
    }
}

impl Eq for LieAlgebra {}

fn normalize_terms(terms: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    let mut terms = terms;
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// How Jacobi triples are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JacobiMode {
    Full,
    Sampled { count: usize, seed: u64 },
}

impl JacobiMode {
    /// Full up to dimension 80, otherwise 10000 samples.
    pub fn default_for(dim: usize, seed: u64) -> JacobiMode {
        if dim <= 80 {
            JacobiMode::Full
        } else {
            JacobiMode::Sampled { count: 10000, seed }
        }
    }
}

/// Result of a Jacobi check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub mode: JacobiMode,
    pub triples: u64,
    /// First violating triple (lexicographic in full mode, sample order in
    /// sampled mode).
    pub violation: Option<[usize; 3]>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[b_i, b_j]` given for `i < j`.
    /// Repeated pairs are summed.
    pub fn from_brackets(
        labels: Vec<BasisLabel>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut raw: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
        for (i, j, terms) in brackets {
            if i >= j || j >= dim {
                return Err(Error::Malformed(format!("bracket pair ({i},{j}) is not i < j < {dim}")));
            }
            if let Some((k, _)) = terms.iter().find(|(k, _)| *k >= dim) {
                return Err(Error::Malformed(format!("bracket term index {k} out of range")));
            }
            raw[i * dim + j].extend(terms);
        }
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let t = normalize_terms(std::mem::take(&mut raw[i * dim + j]));
                table[j * dim + i] = t.iter().map(|(k, c)| (*k, -c)).collect();
                table[i * dim + j] = t;
            }
        }
        Ok(LieAlgebra { dim, labels, table, scaled: OnceLock::new() })
    }

    /// Algebra with opaque labels `x0, x1, ...`.
    pub fn with_opaque_labels(
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self, Error> {
        let labels = (0..dim).map(|i| BasisLabel::Opaque(format!("x{i}"))).collect();
        Self::from_brackets(labels, brackets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `true` if every label names a graded piece of a built algebra.
    pub fn has_structure_labels(&self) -> bool {
        !self.labels.is_empty() && self.labels.iter().all(|l| !l.is_opaque())
    }

    /// `[b_i, b_j]` as sorted sparse terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets with `i < j` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> + '_ {
        (0..self.dim).flat_map(move |i| {
            ((i + 1)..self.dim).filter_map(move |j| {
                let t = self.bracket_basis(i, j);
                (!t.is_empty()).then_some((i, j, t))
            })
        })
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// `[b_i, y]`.
    pub fn ad_basis_apply(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.bracket_basis(i, j) {
                out[*k] += b * c;
            }
        }
        out
    }

    /// Matrix of `ad x` (column `j` holds `[x, b_j]`).
    pub fn ad_matrix(&self, x: &[Rational]) -> ExactMatrix {
        let n = self.dim;
        let mut m = ExactMatrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j) {
                    *m.entry_mut(*k, j) += a * c;
                }
            }
        }
        m
    }

    /// Copy with `c_{ij}^k` changed by `delta` (and `c_{ji}^k` by `-delta`).
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Rational) -> LieAlgebra {
        assert!(i != j && i < self.dim && j < self.dim && k < self.dim);
        let mut table = self.table.clone();
        let mut bump = |p: usize, d: Rational| {
            let mut t = std::mem::take(&mut table[p]);
            t.push((k, d));
            table[p] = normalize_terms(t);
        };
        bump(i * self.dim + j, delta.clone());
        bump(j * self.dim + i, -delta);
        LieAlgebra { dim: self.dim, labels: self.labels.clone(), table, scaled: OnceLock::new() }
    }

    fn scaled(&self) -> Option<&ScaledTable> {
        self.scaled
            .get_or_init(|| {
                let denom = common_denominator(self.table.iter().flatten().map(|(_, c)| c))?;
                let table = self
                    .table
                    .iter()
                    .map(|t| t.iter().map(|(k, c)| (*k, scaled_i64(c, denom))).collect())
                    .collect();
                Some(ScaledTable { denom, table })
            })
            .as_ref()
    }

    /// Jacobiator of three basis elements over the rationals.
    pub fn jacobiator(&self, a: usize, b: usize, c: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (k, ck) in self.bracket_basis(x, y) {
                for (m, cm) in self.bracket_basis(*k, z) {
                    out[*m] += ck * cm;
                }
            }
        }
        out
    }

    /// `Some(true)` if the Jacobiator vanishes, computed in integers; `None` on
    /// overflow.
    fn jacobi_int(&self, st: &ScaledTable, a: usize, b: usize, c: usize, acc: &mut [i128], touched: &mut Vec<usize>) -> Option<bool> {
        let n = self.dim;
        let mut ok = true;
        'outer: for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for &(k, ck) in &st.table[x * n + y] {
                for &(m, cm) in &st.table[k * n + z] {
                    let p = (ck as i128) * (cm as i128);
                    match acc[m].checked_add(p) {
                        Some(v) => {
                            if acc[m] == 0 {
                                touched.push(m);
                            }
                            acc[m] = v;
                        }
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        let zero = touched.iter().all(|&m| acc[m] == 0);
        for &m in touched.iter() {
            acc[m] = 0;
        }
        touched.clear();
        if !ok {
            acc.iter_mut().for_each(|x| *x = 0);
            return None;
        }
        Some(zero)
    }

    fn triple_ok(&self, a: usize, b: usize, c: usize, acc: &mut [i128], touched: &mut Vec<usize>) -> bool {
        if let Some(st) = self.scaled() {
            if let Some(r) = self.jacobi_int(st, a, b, c, acc, touched) {
                return r;
            }
        }
        self.jacobiator(a, b, c).iter().all(Zero::is_zero)
    }

    /// Checks `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` on basis triples.
    pub fn verify_jacobi(&self, mode: JacobiMode) -> JacobiReport {
        let n = self.dim;
        match mode {
            JacobiMode::Full => {
                let total = if n < 3 { 0 } else { (n as u64) * (n as u64 - 1) * (n as u64 - 2) / 6 };
                let best = AtomicUsize::new(usize::MAX);
                let found: Option<[usize; 3]> = (0..n)
                    .into_par_iter()
                    .filter_map(|a| {
                        let mut acc = vec![0i128; n];
                        let mut touched = Vec::new();
                        for b in (a + 1)..n {
                            if best.load(Ordering::Relaxed) < a {
                                return None;
                            }
                            for c in (b + 1)..n {
                                if !self.triple_ok(a, b, c, &mut acc, &mut touched) {
                                    best.fetch_min(a, Ordering::Relaxed);
                                    return Some([a, b, c]);
                                }
                            }
                        }
                        None
                    })
                    .min();
                JacobiReport { mode, triples: total, violation: found }
            }
            JacobiMode::Sampled { count, seed } => {
                if n < 3 {
                    return JacobiReport { mode, triples: 0, violation: None };
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let triples: Vec<[usize; 3]> = (0..count)
                    .map(|_| loop {
                        let mut t = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
                        t.sort_unstable();
                        if t[0] != t[1] && t[1] != t[2] {
                            break t;
                        }
                    })
                    .collect();
                let found = triples
                    .par_chunks(256)
                    .map(|chunk| {
                        let mut acc = vec![0i128; n];
                        let mut touched = Vec::new();
                        chunk.iter().copied().find(|t| !self.triple_ok(t[0], t[1], t[2], &mut acc, &mut touched))
                    })
                    .find_first(Option::is_some)
                    .flatten();
                JacobiReport { mode, triples: count as u64, violation: found }
            }
        }
    }

    /// `K(b_i, b_j) = tr(ad b_i ad b_j)`.
    pub fn killing_form(&self) -> ExactMatrix {
        let n = self.dim;
        let rows: Vec<Vec<Rational>> = match self.scaled() {
            Some(st) => {
                let d2 = Rational::from_integer((st.denom as i128 * st.denom as i128).into());
                (0..n)
                    .into_par_iter()
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                // Σ_k Σ_m c_{ik}^m c_{jm}^k
                                let mut acc: i128 = 0;
                                let mut overflow = false;
                                for k in 0..n {
                                    for &(m, cm) in &st.table[i * n + k] {
                                        let row = &st.table[j * n + m];
                                        if let Ok(p) = row.binary_search_by_key(&k, |t| t.0) {
                                            match acc.checked_add(cm as i128 * row[p].1 as i128) {
                                                Some(v) => acc = v,
                                                None => overflow = true,
                                            }
                                        }
                                    }
                                }
                                if overflow {
                                    self.killing_entry(i, j)
                                } else {
                                    Rational::from_integer(acc.into()) / &d2
                                }
                            })
                            .collect()
                    })
                    .collect()
            }
            None => (0..n).into_par_iter().map(|i| (0..n).map(|j| self.killing_entry(i, j)).collect()).collect(),
        };
        ExactMatrix::from_rows(rows)
    }

    fn killing_entry(&self, i: usize, j: usize) -> Rational {
        let n = self.dim;
        let mut acc = Rational::zero();
        for k in 0..n {
            for (m, cm) in self.bracket_basis(i, k) {
                let row = self.bracket_basis(j, *m);
                if let Ok(p) = row.binary_search_by_key(&k, |t| t.0) {
                    acc += cm * &row[p].1;
                }
            }
        }
        acc
    }

    /// `K(x, y)` for coordinate vectors, given a Killing matrix.
    pub fn form_value(form: &ExactMatrix, x: &[Rational], y: &[Rational]) -> Rational {
        crate::foundation::dot(x, &form.mul_vec(y))
    }

    /// Dimension of the commutant of the adjoint representation, computed
    /// through a random cyclic vector with seed `seed`. `None` if no cyclic
    /// vector was found.
    pub fn commutant_dimension(&self, seed: u64) -> Option<usize> {
        let n = self.dim;
        if n == 0 {
            return Some(0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let apply = |s: usize, x: &[Rational]| self.ad_basis_apply(s, x);
        for _ in 0..5 {
            let v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(1..=10))).collect();
            let z = kernel(&self.ad_matrix(&v));
            if let Some(d) = commutant_dimension_cyclic(n, n, &apply, &v, &z) {
                return Some(d);
            }
        }
        None
    }

    /// Structure constants reduced modulo [`modp::P`], indexed like the table.
    fn table_mod_p(&self) -> Option<Vec<Vec<(usize, u64)>>> {
        self.table
            .iter()
            .map(|terms| terms.iter().map(|(k, c)| modp::reduce(c).map(|x| (*k, x))).collect())
            .collect()
    }

    /// Killing rank and commutant dimension modulo the prime, if the
    /// constants reduce.
    fn simplicity_mod_p(&self, seed: u64) -> Option<(usize, Option<usize>)> {
        let n = self.dim;
        let tp = self.table_mod_p()?;
        let ad = |i: usize, x: &[u64]| -> Vec<u64> {
            let mut out = vec![0; n];
            for (j, &xj) in x.iter().enumerate() {
                if xj == 0 {
                    continue;
                }
                for &(k, c) in &tp[i * n + j] {
                    out[k] = modp::add(out[k], modp::mul(xj, c));
                }
            }
            out
        };
        let killing: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = 0;
                        for k in 0..n {
                            for &(m, cm) in &tp[i * n + k] {
                                let row = &tp[j * n + m];
                                if let Ok(p) = row.binary_search_by_key(&k, |t| t.0) {
                                    acc = modp::add(acc, modp::mul(cm, row[p].1));
                                }
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let killing_rank = modp::rank(&killing);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut commutant = None;
        for _ in 0..5 {
            let v: Vec<u64> = (0..n).map(|_| rng.gen_range(1..modp::P)).collect();
            // Rows of ad(v): (ad v)_{k j} = Σ_i v_i c_{ij}^k.
            let mut rows = vec![vec![0u64; n]; n];
            for (i, &vi) in v.iter().enumerate() {
                for j in 0..n {
                    for &(k, c) in &tp[i * n + j] {
                        rows[k][j] = modp::add(rows[k][j], modp::mul(vi, c));
                    }
                }
            }
            let z = modp::kernel(&rows, n);
            if let Some(d) = modp::commutant_dimension_cyclic(n, n, &ad, &v, &z) {
                commutant = Some(d);
                break;
            }
        }
        Some((killing_rank, commutant))
    }

    /// Nondegenerate Killing form and one-dimensional adjoint commutant.
    pub fn is_simple(&self) -> bool {
        self.simplicity(42).is_simple()
    }

    /// Both ingredients of the simplicity decision.
    ///
    /// A full Killing rank and a one-dimensional commutant modulo a large
    /// prime already certify both statements over the rationals, so the exact
    /// computation runs only when the reduction is inconclusive.
    pub fn simplicity(&self, seed: u64) -> Simplicity {
        if let Some((rank, Some(1))) = self.simplicity_mod_p(seed) {
            if rank == self.dim && self.dim > 0 {
                return Simplicity { killing_nondegenerate: true, commutant_dimension: Some(1) };
            }
        }
        let k = self.killing_form();
        let nondegenerate = self.dim > 0 && k.rank() == self.dim;
        let commutant = if nondegenerate { self.commutant_dimension(seed) } else { None };
        Simplicity { killing_nondegenerate: nondegenerate, commutant_dimension: commutant }
    }

    /// Linear span closure check: `[x, y] ∈ span` for all basis vectors of
    /// a subspace, tested against `target`.
    pub fn brackets_into(&self, a: &[Vec<Rational>], b: &[Vec<Rational>], target: &[Vec<Rational>]) -> bool {
        let sc = match crate::foundation::SpanCoords::new(target, self.dim) {
            Ok(s) => s,
            Err(_) => return false,
        };
        a.iter().all(|x| b.iter().all(|y| sc.coords(&self.bracket(x, y)).is_some()))
    }

    /// `Σ c_i b_i` helper for building elements from sparse coefficients.
    pub fn element(&self, terms: &[(usize, Rational)]) -> Vec<Rational> {
        let mut v = zero_vec(self.dim);
        for (i, c) in terms {
            v[*i] += c;
        }
        v
    }

    /// Adds `c * b_i` into `v`.
    pub fn add_basis(v: &mut [Rational], i: usize, c: &Rational) {
        v[i] += c;
    }
}

/// Simplicity decision with its two ingredients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplicity {
    pub killing_nondegenerate: bool,
    pub commutant_dimension: Option<usize>,
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        self.killing_nondegenerate && self.commutant_dimension == Some(1)
    }
}

/// `(e, h, f)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Vec<Rational>,
    pub h: Vec<Rational>,
    pub f: Vec<Rational>,
}

impl Sl2Triple {
    /// Verifies the three relations exactly.
    pub fn check(&self, l: &LieAlgebra) -> Result<(), Error> {
        let n = l.dim();
        if self.e.len() != n || self.h.len() != n || self.f.len() != n {
            return Err(Error::InvalidTriple(format!("coordinates must have length {n}")));
        }
        if l.bracket(&self.e, &self.f) != self.h {
            return Err(Error::InvalidTriple("[e,f] != h".into()));
        }
        let two = rat(2);
        if l.bracket(&self.h, &self.e) != self.e.iter().map(|x| x * &two).collect::<Vec<_>>() {
            return Err(Error::InvalidTriple("[h,e] != 2e".into()));
        }
        if l.bracket(&self.h, &self.f) != self.f.iter().map(|x| -(x * &two)).collect::<Vec<_>>() {
            return Err(Error::InvalidTriple("[h,f] != -2f".into()));
        }
        if self.e.iter().all(Zero::is_zero) {
            return Err(Error::InvalidTriple("e is zero".into()));
        }
        Ok(())
    }
}
