//! Matrix models of the classical short gradings and the maximal structure.
//!
//! Orthogonal and symplectic algebras are taken with respect to forms on the
//! side diagonal, so `x' = N - 1 - x` is the mirror index.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::foundation::{rat, ExactMatrix, Rational, SpanCoords};
use crate::isotypic::{extract_with_embedding, Extraction};
use crate::sl2kit::Sl2Basis;
use crate::sympjordan::{LieJordanStructure, StructureContext};
use crate::tkk::{build_unchecked, BasisLabel, LieAlgebra, Sl2Triple, TkkLayout};

/// A catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelSpec {
    /// `so_{4n+1}` with `J2 = sym(J1)`, `dim J1 = 2n`.
    Maximal { n: usize },
    /// `sl_n` with `h = diag(1 (i times), 0, -1 (i times))`.
    Sl { n: usize, i: usize },
    /// `so_{2n+1}`.
    SoOdd { n: usize, i: usize },
    /// `so_{2n}` with the vector marking.
    SoEven { n: usize, i: usize },
    /// `so_{2n}` with the spin double marking, `i = n - 1`.
    SoEvenSpin { n: usize },
    /// `sp_{2n}`.
    Sp { n: usize, i: usize },
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelSpec::Maximal { n } => write!(f, "maximal:{n}"),
            ModelSpec::Sl { n, i } => write!(f, "sl:{n}:{i}"),
            ModelSpec::SoOdd { n, i } => write!(f, "so-odd:{n}:{i}"),
            ModelSpec::SoEven { n, i } => write!(f, "so-even:{n}:{i}"),
            ModelSpec::SoEvenSpin { n } => write!(f, "so-even-spin:{n}"),
            ModelSpec::Sp { n, i } => write!(f, "sp:{n}:{i}"),
        }
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameters(format!("unknown model `{s}`"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        let spec = match parts.as_slice() {
            ["maximal", n] => ModelSpec::Maximal { n: num(n)? },
            ["sl", n, i] => ModelSpec::Sl { n: num(n)?, i: num(i)? },
            ["so-odd", n, i] => ModelSpec::SoOdd { n: num(n)?, i: num(i)? },
            ["so-even", n, i] => ModelSpec::SoEven { n: num(n)?, i: num(i)? },
            ["so-even-spin", n] => ModelSpec::SoEvenSpin { n: num(n)? },
            ["sp", n, i] => ModelSpec::Sp { n: num(n)?, i: num(i)? },
            _ => return Err(bad()),
        };
        spec.check()?;
        Ok(spec)
    }
}

/// Families with their parameter constraints, for listings.
pub const CATALOG: [(&str, &str); 6] = [
    ("maximal:n", "n >= 1; so(4n+1), J2 = sym(J1), dim J1 = 2n"),
    ("sl:n:i", "1 <= i, 2i < n"),
    ("so-odd:n:i", "i even, 2 <= i <= n; so(2n+1)"),
    ("so-even:n:i", "i even, 2 <= i <= n-2; so(2n)"),
    ("so-even-spin:n", "n odd, n >= 3; so(2n)"),
    ("sp:n:i", "1 <= i < n; sp(2n)"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Sl,
    So,
    Sp,
}

impl ModelSpec {
    /// Checks the parameter constraints.
    pub fn check(&self) -> Result<(), Error> {
        let ok = match *self {
            ModelSpec::Maximal { n } => n >= 1,
            ModelSpec::Sl { n, i } => i >= 1 && 2 * i < n,
            ModelSpec::SoOdd { n, i } => i >= 2 && i % 2 == 0 && i <= n,
            ModelSpec::SoEven { n, i } => i >= 2 && i % 2 == 0 && i + 2 <= n,
            ModelSpec::SoEvenSpin { n } => n >= 3 && n % 2 == 1,
            ModelSpec::Sp { n, i } => i >= 1 && i < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("{self} violates the family constraints")))
        }
    }

    /// `(family, matrix size N, corner size i)`.
    fn shape(&self) -> (Family, usize, usize) {
        match *self {
            ModelSpec::Maximal { n } => (Family::So, 4 * n + 1, 2 * n),
            ModelSpec::Sl { n, i } => (Family::Sl, n, i),
            ModelSpec::SoOdd { n, i } => (Family::So, 2 * n + 1, i),
            ModelSpec::SoEven { n, i } => (Family::So, 2 * n, i),
            ModelSpec::SoEvenSpin { n } => (Family::So, 2 * n, n - 1),
            ModelSpec::Sp { n, i } => (Family::Sp, 2 * n, i),
        }
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.shape().1
    }

    /// `(dim g0, dim J1, dim J2)` predicted by the family formulas.
    pub fn expected_dims(&self) -> (usize, usize, usize) {
        let (fam, big_n, i) = self.shape();
        let m = big_n - 2 * i;
        match fam {
            // g0 = sl_m ⊕ sl_i ⊕ C (the sl_m part is absent for m = 0, 1).
            Family::Sl => ((m * m).saturating_sub(1) + i * i - 1 + 1, 2 * i * m, i * i),
            // J2 = antisymmetric i × i, g0 = sp_i ⊕ so_m.
            Family::So => (i * (i + 1) / 2 + m * (m - 1) / 2, i * m, i * (i - 1) / 2),
            // J2 = symmetric i × i, g0 = so_i ⊕ sp_m.
            Family::Sp => (i * (i - 1) / 2 + m * (m + 1) / 2, i * m, i * (i + 1) / 2),
        }
    }
}

/// The defining matrix basis of the ambient algebra.
pub fn matrix_basis(spec: &ModelSpec) -> Vec<ExactMatrix> {
    let (fam, n, _) = spec.shape();
    let unit = |r: usize, c: usize| {
        let mut m = ExactMatrix::zeros(n, n);
        m.set(r, c, rat(1));
        m
    };
    let mirror = |x: usize| n - 1 - x;
    let mut out = Vec::new();
    match fam {
        Family::Sl => {
            for p in 0..n {
                for q in 0..n {
                    if p != q {
                        out.push(unit(p, q));
                    }
                }
            }
            for p in 0..n - 1 {
                out.push(&unit(p, p) - &unit(p + 1, p + 1));
            }
        }
        Family::So => {
            for p in 0..n {
                for q in 0..n {
                    if p + q < n - 1 {
                        out.push(&unit(p, q) - &unit(mirror(q), mirror(p)));
                    }
                }
            }
        }
        Family::Sp => {
            let half = n / 2;
            for r in 0..n {
                for c in 0..n {
                    let same = (r < half) == (c < half);
                    if same {
                        if r < half {
                            out.push(&unit(r, c) - &unit(mirror(c), mirror(r)));
                        }
                    } else if r + c < n - 1 {
                        out.push(&unit(r, c) + &unit(mirror(c), mirror(r)));
                    } else if r + c == n - 1 {
                        out.push(unit(r, c));
                    }
                }
            }
        }
    }
    out
}

/// `(e, h, f)` as matrices.
pub fn triple_matrices(spec: &ModelSpec) -> (ExactMatrix, ExactMatrix, ExactMatrix) {
    let (fam, n, i) = spec.shape();
    let mut h = ExactMatrix::zeros(n, n);
    for k in 0..i {
        h.set(k, k, rat(1));
        h.set(n - 1 - k, n - 1 - k, rat(-1));
    }
    let corner: Vec<i64> = match fam {
        Family::So => (0..i).map(|r| if r < i / 2 { 1 } else { -1 }).collect(),
        _ => vec![1; i],
    };
    let mut e = ExactMatrix::zeros(n, n);
    let mut f = ExactMatrix::zeros(n, n);
    for r in 0..i {
        e.set(r, n - i + r, rat(corner[r]));
        f.set(n - i + r, r, rat(corner[r]));
    }
    (e, h, f)
}

/// An ambient matrix algebra with its basis and triple.
#[derive(Clone, Debug)]
pub struct AmbientModel {
    pub spec: ModelSpec,
    pub basis: Vec<ExactMatrix>,
    pub algebra: LieAlgebra,
    pub triple: Sl2Triple,
    coords: SpanCoords,
}

impl AmbientModel {
    /// Coordinates of a matrix in the ambient basis.
    pub fn coords(&self, m: &ExactMatrix) -> Option<Vec<Rational>> {
        self.coords.coords(m.as_flat())
    }

    /// Matrix of a coordinate vector.
    pub fn matrix(&self, v: &[Rational]) -> ExactMatrix {
        let n = self.spec.matrix_size();
        crate::foundation::combine(v, &self.basis, n, n)
    }
}

fn matrix_label(m: &ExactMatrix) -> String {
    let n = m.rows();
    let mut parts = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let x = m.get(r, c);
            if !num_traits::Zero::is_zero(x) {
                parts.push(format!("{}E{},{}", crate::foundation::format_rational(x), r + 1, c + 1));
            }
        }
    }
    parts.join("+")
}

/// The ambient matrix algebra and the explicit triple.
pub fn ambient_algebra(spec: &ModelSpec) -> Result<AmbientModel, Error> {
    spec.check()?;
    let n = spec.matrix_size();
    let basis = matrix_basis(spec);
    let flat: Vec<Vec<Rational>> = basis.iter().map(|m| m.as_flat().to_vec()).collect();
    let coords = SpanCoords::new(&flat, n * n)?;
    let d = basis.len();
    let mut brackets = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let c = basis[a].commutator(&basis[b]);
            if c.is_zero() {
                continue;
            }
            let x = coords.coords(c.as_flat()).ok_or_else(|| Error::InvalidStructure("basis is not closed".into()))?;
            let terms: Vec<(usize, Rational)> =
                x.into_iter().enumerate().filter(|(_, v)| !num_traits::Zero::is_zero(v)).collect();
            brackets.push((a, b, terms));
        }
    }
    let labels = basis.iter().map(|m| BasisLabel::Opaque(matrix_label(m))).collect();
    let algebra = LieAlgebra::from_brackets(labels, brackets)?;
    let (e, h, f) = triple_matrices(spec);
    let to = |m: &ExactMatrix| coords.coords(m.as_flat()).ok_or_else(|| Error::InvalidTriple("triple leaves the algebra".into()));
    let triple = Sl2Triple { e: to(&e)?, h: to(&h)?, f: to(&f)? };
    triple.check(&algebra)?;
    Ok(AmbientModel { spec: *spec, basis, algebra, triple, coords })
}

/// The extracted structure of a catalog model together with the embedding.
pub fn catalog_extraction(spec: &ModelSpec) -> Result<(AmbientModel, Extraction), Error> {
    let amb = ambient_algebra(spec)?;
    let ex = extract_with_embedding(&amb.algebra, &amb.triple)?;
    Ok((amb, ex))
}

/// The Lie-Jordan structure of a catalog model.
pub fn catalog_structure(spec: &ModelSpec) -> Result<LieJordanStructure, Error> {
    catalog_extraction(spec).map(|(_, ex)| ex.structure)
}

/// `c` with `λ K(x, y) = c tr(xy)` on the ambient matrices.
pub fn ambient_form_scale(spec: &ModelSpec) -> Rational {
    let (fam, n, i) = spec.shape();
    let m = rat((n - 2 * i) as i64);
    match fam {
        Family::Sl => m,
        _ => m / rat(2),
    }
}

/// Bracket-by-bracket comparison with the ambient matrix commutators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub model: String,
    pub pairs: usize,
    pub mismatches: usize,
    /// Labels of the first mismatching pair.
    pub first_mismatch: Option<(String, String)>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Builds the extracted structure and compares every bracket with the matrix
/// commutator under the extraction embedding.
pub fn oracle_check(spec: &ModelSpec) -> Result<OracleReport, Error> {
    let (amb, ex) = catalog_extraction(spec)?;
    oracle_compare(&amb, &ex, &ex.structure)
}

/// Like [`oracle_check`], but builds `structure` (for example a mutated copy)
/// instead of the extracted one.
pub fn oracle_check_structure(spec: &ModelSpec, structure: &LieJordanStructure) -> Result<OracleReport, Error> {
    let (amb, ex) = catalog_extraction(spec)?;
    oracle_compare(&amb, &ex, structure)
}

fn oracle_compare(amb: &AmbientModel, ex: &Extraction, s: &LieJordanStructure) -> Result<OracleReport, Error> {
    let built = build_unchecked(s)?;
    let emb: Vec<ExactMatrix> = ex.embedding.iter().map(|v| amb.matrix(v)).collect();
    let d = built.dim();
    if d != emb.len() {
        return Err(Error::InvalidStructure("structure does not match the extraction".into()));
    }
    let n = amb.spec.matrix_size();
    let mut mismatches = 0;
    let mut first = None;
    let mut pairs = 0;
    for i in 0..d {
        for j in (i + 1)..d {
            pairs += 1;
            let lhs = emb[i].commutator(&emb[j]);
            let mut rhs = ExactMatrix::zeros(n, n);
            for (k, c) in built.bracket_basis(i, j) {
                rhs = &rhs + &emb[*k].scale(c);
            }
            if lhs != rhs {
                mismatches += 1;
                if first.is_none() {
                    first = Some((built.labels()[i].to_string(), built.labels()[j].to_string()));
                }
            }
        }
    }
    Ok(OracleReport { model: amb.spec.to_string(), pairs, mismatches, first_mismatch: first })
}

/// Agreement of the extracted `φ` and `δ0` of `sl:n:i` with the block
/// formulas, over all pairs of basis vectors of `J1`.
///
/// An element of `g^1` is a pair of blocks `(a, b)` with `a` the `i × m`
/// block right of the top-left corner and `b` the `m × i` block above the
/// bottom-right corner, `m = n - 2i`. `J2 ≅ g^2` is the top-right `i × i`
/// block. The formulas are
///
/// * `φ((a1, b1), (a2, b2)) = ½ (a2 b1 - a1 b2)`
/// * `δ0((a1, b1), (a2, b2)) = diag(c E, b1 a2 + b2 a1, c E)` with
///   `c = -tr(a1 b2 + a2 b1) / (2i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub model: String,
    pub pairs: usize,
    pub phi_mismatches: usize,
    pub delta0_mismatches: usize,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.phi_mismatches == 0 && self.delta0_mismatches == 0
    }
}

fn block(m: &ExactMatrix, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            out.set(r, c, m.get(r0 + r, c0 + c).clone());
        }
    }
    out
}

/// Compares the extracted `sl:n:i` structure with the block formulas.
pub fn sl_closed_form_check(spec: &ModelSpec) -> Result<ClosedFormReport, Error> {
    let ModelSpec::Sl { n, i } = *spec else {
        return Err(Error::InvalidParameters(format!("{spec} is not in the sl family")));
    };
    let (amb, ex) = catalog_extraction(spec)?;
    let s = &ex.structure;
    let ctx = StructureContext::new(s)?;
    let layout = TkkLayout::of(s);
    let m = n - 2 * i;
    let d = s.dim_j1();
    let g1: Vec<ExactMatrix> = (0..d).map(|j| amb.matrix(&ex.embedding[layout.v1(1, j)])).collect();
    let blocks: Vec<(ExactMatrix, ExactMatrix)> =
        g1.iter().map(|x| (block(x, 0, i, i, m), block(x, i, n - i, m, i))).collect();
    let to_ambient = |coords: &[Rational], of: &dyn Fn(usize) -> usize| -> ExactMatrix {
        let mut out = ExactMatrix::zeros(n, n);
        for (k, c) in coords.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &amb.matrix(&ex.embedding[of(k)]).scale(c);
            }
        }
        out
    };
    let half = Rational::new(1.into(), 2.into());
    let mut report = ClosedFormReport { model: spec.to_string(), pairs: 0, phi_mismatches: 0, delta0_mismatches: 0 };
    for x in 0..d {
        for y in x..d {
            report.pairs += 1;
            let (a1, b1) = &blocks[x];
            let (a2, b2) = &blocks[y];
            let ex_x = crate::foundation::unit_vec(d, x);
            let ex_y = crate::foundation::unit_vec(d, y);

            let phi = ctx.phi(&ex_x, &ex_y);
            let phi_coords = ctx.j2_coords(&phi).ok_or_else(|| Error::InvalidStructure("phi leaves J2".into()))?;
            let phi_amb = to_ambient(&phi_coords, &|k| layout.v2(Sl2Basis::E, k));
            let expected = (&(a2 * b1) - &(a1 * b2)).scale(&half);
            if block(&phi_amb, 0, n - i, i, i) != expected {
                report.phi_mismatches += 1;
            }

            let d0 = ctx.delta0(&ex_x, &ex_y);
            let d0_coords = ctx.g0_coords(&d0).ok_or_else(|| Error::InvalidStructure("delta0 leaves g0".into()))?;
            let d0_amb = to_ambient(&d0_coords, &|k| layout.g0(k));
            let sum = &(a1 * b2) + &(a2 * b1);
            let c = -sum.trace() / rat(2 * i as i64);
            let mut expected = ExactMatrix::zeros(n, n);
            for k in 0..i {
                expected.set(k, k, c.clone());
                expected.set(n - 1 - k, n - 1 - k, c.clone());
            }
            let mid = &(b1 * a2) + &(b2 * a1);
            for r in 0..m {
                for q in 0..m {
                    expected.set(i + r, i + q, mid.get(r, q).clone());
                }
            }
            if d0_amb != expected {
                report.delta0_mismatches += 1;
            }
        }
    }
    Ok(report)
}

/// The catalog used by the acceptance suite.
pub fn acceptance_catalog() -> Vec<ModelSpec> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(ModelSpec::Maximal { n });
    }
    for n in 4..=7 {
        for i in 1..=2 {
            let s = ModelSpec::Sl { n, i };
            if s.check().is_ok() {
                out.push(s);
            }
        }
    }
    for n in 3..=5 {
        out.push(ModelSpec::SoOdd { n, i: 2 });
    }
    for n in 4..=6 {
        out.push(ModelSpec::SoEven { n, i: 2 });
    }
    for n in [3, 5] {
        out.push(ModelSpec::SoEvenSpin { n });
    }
    for n in 2..=5 {
        for i in 1..n {
            out.push(ModelSpec::Sp { n, i });
        }
    }
    out
}
