//! JSON file formats.
//!
//! * `lie-v1`: structure constants of a [`LieAlgebra`]
//! * `ljs-v1`: a [`LieJordanStructure`]
//! * `cls-v1`: classification rows
//! * triple files `{ "e": [...], "h": [...], "f": [...] }`
//!
//! Every number is a rational string such as `"-3/2"`. Writers produce
//! canonical, byte-stable output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::foundation::{format_rational, parse_rational, ExactMatrix, Rational};
use crate::rootsys::{ClassificationRow, Witness};
use crate::sympjordan::{LieJordanStructure, SymplecticSpace};
use crate::tkk::{BasisLabel, LieAlgebra, Sl2Triple};

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::Malformed(e.to_string())
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rationals(v: &[String]) -> Result<Vec<Rational>, Error> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn matrix_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| format_rational(m.get(r, c))).collect()).collect()
}

fn matrix_from(rows: &[Vec<String>], n: usize, what: &str) -> Result<ExactMatrix, Error> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Malformed(format!("{what} must be a {n} × {n} matrix")));
    }
    Ok(ExactMatrix::from_rows(rows.iter().map(|r| rationals(r)).collect::<Result<_, _>>()?))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    dim: usize,
    labels: Vec<String>,
    brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    terms: Vec<(usize, String)>,
}

/// Serializes an algebra as `lie-v1`: pairs `i < j` in lexicographic order,
/// terms by ascending index, zero brackets omitted.
pub fn write_lie(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let t = l.bracket_basis(i, j);
            if !t.is_empty() {
                brackets.push(BracketEntry {
                    i,
                    j,
                    terms: t.iter().map(|(k, c)| (*k, format_rational(c))).collect(),
                });
            }
        }
    }
    to_pretty(&LieFile { dim: n, labels: l.labels().iter().map(|b| b.to_string()).collect(), brackets })
}

/// Parses `lie-v1`. Antisymmetry is implied by the format; the Jacobi
/// identity is not checked here.
pub fn read_lie(text: &str) -> Result<LieAlgebra, Error> {
    let f: LieFile = serde_json::from_str(text).map_err(malformed)?;
    if f.labels.len() != f.dim {
        return Err(Error::Malformed(format!("{} labels for dimension {}", f.labels.len(), f.dim)));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::with_capacity(f.brackets.len());
    for b in &f.brackets {
        if b.i >= b.j || b.j >= f.dim {
            return Err(Error::Malformed(format!("bracket index pair ({}, {}) must satisfy i < j < dim", b.i, b.j)));
        }
        if !seen.insert((b.i, b.j)) {
            return Err(Error::Malformed(format!("bracket ({}, {}) listed twice", b.i, b.j)));
        }
        let mut terms = Vec::with_capacity(b.terms.len());
        for (k, c) in &b.terms {
            if *k >= f.dim {
                return Err(Error::Malformed(format!("term index {k} out of range")));
            }
            terms.push((*k, parse_rational(c)?));
        }
        entries.push((b.i, b.j, terms));
    }
    let labels = f.labels.iter().map(|s| BasisLabel::parse(s)).collect();
    LieAlgebra::from_brackets(labels, entries).map_err(|e| Error::Malformed(e.to_string()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LjsFile {
    dim_j1: usize,
    omega: Vec<Vec<String>>,
    j2_basis: Vec<Vec<Vec<String>>>,
    g0_basis: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    delta0: Vec<Delta0Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Delta0Entry {
    i: usize,
    j: usize,
    value: Vec<String>,
}

/// Serializes a structure as `ljs-v1`.
pub fn write_ljs(s: &LieJordanStructure) -> String {
    let f = LjsFile {
        dim_j1: s.dim_j1(),
        omega: matrix_strings(s.space.omega()),
        j2_basis: s.j2_basis.iter().map(matrix_strings).collect(),
        g0_basis: s.g0_basis.iter().map(matrix_strings).collect(),
        unit: strings(&s.unit),
        delta0: s.delta0.iter().map(|(&(i, j), v)| Delta0Entry { i, j, value: strings(v) }).collect(),
    };
    to_pretty(&f)
}

/// Parses `ljs-v1`. Shapes are checked here; the axioms are left to
/// [`crate::sympjordan::validate`].
pub fn read_ljs(text: &str) -> Result<LieJordanStructure, Error> {
    let f: LjsFile = serde_json::from_str(text).map_err(malformed)?;
    let n = f.dim_j1;
    let omega = matrix_from(&f.omega, n, "omega")?;
    let space = SymplecticSpace::new(omega).map_err(|e| Error::Malformed(e.to_string()))?;
    let j2_basis: Vec<ExactMatrix> =
        f.j2_basis.iter().map(|m| matrix_from(m, n, "j2_basis entry")).collect::<Result<_, _>>()?;
    let g0_basis: Vec<ExactMatrix> =
        f.g0_basis.iter().map(|m| matrix_from(m, n, "g0_basis entry")).collect::<Result<_, _>>()?;
    if f.unit.len() != j2_basis.len() {
        return Err(Error::Malformed(format!("unit has {} coordinates for {} basis operators", f.unit.len(), j2_basis.len())));
    }
    let unit = rationals(&f.unit)?;
    let mut delta0 = BTreeMap::new();
    for e in &f.delta0 {
        if e.i > e.j || e.j >= n {
            return Err(Error::Malformed(format!("delta0 index pair ({}, {}) must satisfy i <= j < dim_j1", e.i, e.j)));
        }
        if delta0.insert((e.i, e.j), rationals(&e.value)?).is_some() {
            return Err(Error::Malformed(format!("delta0 entry ({}, {}) listed twice", e.i, e.j)));
        }
    }
    Ok(LieJordanStructure { space, j2_basis, g0_basis, delta0, unit })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleFile {
    e: Vec<String>,
    h: Vec<String>,
    f: Vec<String>,
}

/// Serializes a triple.
pub fn write_triple(t: &Sl2Triple) -> String {
    to_pretty(&TripleFile { e: strings(&t.e), h: strings(&t.h), f: strings(&t.f) })
}

/// Parses a triple file; coordinates must all have length `dim`.
pub fn read_triple(text: &str, dim: usize) -> Result<Sl2Triple, Error> {
    let f: TripleFile = serde_json::from_str(text).map_err(malformed)?;
    for (name, v) in [("e", &f.e), ("h", &f.h), ("f", &f.f)] {
        if v.len() != dim {
            return Err(Error::Malformed(format!("triple element {name} has {} coordinates, expected {dim}", v.len())));
        }
    }
    Ok(Sl2Triple { e: rationals(&f.e)?, h: rationals(&f.h)?, f: rationals(&f.f)? })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClsRow {
    marking: Vec<i64>,
    exists: bool,
    dims: [usize; 3],
    g2_dim: usize,
    equivalent_to: Option<usize>,
    witness: Option<WitnessFile>,
    notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessFile {
    e: Vec<String>,
    f: Vec<String>,
}

/// Serializes classification rows as `cls-v1`.
pub fn write_cls(rows: &[ClassificationRow]) -> String {
    let out: Vec<ClsRow> = rows
        .iter()
        .map(|r| ClsRow {
            marking: r.marking.0.clone(),
            exists: r.exists,
            dims: [r.dims.0, r.dims.1, r.dims.2],
            g2_dim: r.g2_dim,
            equivalent_to: r.equivalent_to,
            witness: r.witness.as_ref().map(|w| WitnessFile { e: strings(&w.e), f: strings(&w.f) }),
            notes: r.notes.clone(),
        })
        .collect();
    to_pretty(&out)
}

/// Parses `cls-v1`.
pub fn read_cls(text: &str) -> Result<Vec<ClassificationRow>, Error> {
    let rows: Vec<ClsRow> = serde_json::from_str(text).map_err(malformed)?;
    rows.into_iter()
        .map(|r| {
            let witness = match r.witness {
                Some(w) => Some(Witness { e: rationals(&w.e)?, f: rationals(&w.f)? }),
                None => None,
            };
            Ok(ClassificationRow {
                marking: crate::rootsys::Marking(r.marking),
                exists: r.exists,
                dims: (r.dims[0], r.dims[1], r.dims[2]),
                g2_dim: r.g2_dim,
                equivalent_to: r.equivalent_to,
                witness,
                notes: r.notes,
            })
        })
        .collect()
}
