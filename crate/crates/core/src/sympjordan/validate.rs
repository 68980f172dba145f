//! Axiom-by-axiom validation of a Lie-Jordan structure.

use rayon::prelude::*;
use serde::Serialize;

use super::{I0Pairing, LieJordanStructure, StructureContext};
use crate::commutant::commutant_dimension_cyclic;
use crate::foundation::{unit_vec, ExactMatrix, Rational, SpanCoords};

/// Outcome of a single axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub passed: bool,
    /// Basis indices exhibiting the failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl AxiomResult {
    fn pass(axiom: &'static str) -> Self {
        AxiomResult { axiom, passed: true, witness: None, detail: String::new() }
    }

    fn fail(axiom: &'static str, witness: Option<Vec<usize>>, detail: impl Into<String>) -> Self {
        AxiomResult { axiom, passed: false, witness, detail: detail.into() }
    }

    fn from_witness(axiom: &'static str, witness: Option<Vec<usize>>, detail: &str) -> Self {
        match witness {
            None => Self::pass(axiom),
            Some(w) => Self::fail(axiom, Some(w), detail),
        }
    }
}

/// Every axiom in evaluation order, plus informational notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomResult>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Axiom names in evaluation order.
pub const AXIOMS: [&str; 13] = [
    "j2_symmetric",
    "g0_symplectic",
    "trace_form_nondegenerate",
    "g0_closed",
    "unit",
    "jordan_closed",
    "derivations_in_g0",
    "g0_normalizes_j2",
    "delta0_table",
    "delta_equivariant",
    "delta0_symmetric_operators",
    "f_symmetric",
    "jordan_simple",
];

fn first_index<T: Sync>(items: &[T], pred: impl Fn(&T) -> bool + Sync + Send) -> Option<usize> {
    items.par_iter().position_first(pred)
}

/// Runs every check; later checks that depend on a failed prerequisite are
/// reported as failed with a "not evaluated" detail.
pub fn validate(s: &LieJordanStructure) -> ValidationReport {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let n = s.dim_j1();
    let space = &s.space;

    let bad = s.j2_basis.iter().position(|m| m.rows() != n || m.cols() != n || !space.is_symmetric_operator(m));
    checks.push(AxiomResult::from_witness("j2_symmetric", bad.map(|k| vec![k]), "J2 basis element is not Ω-symmetric"));
    let bad = s.g0_basis.iter().position(|m| m.rows() != n || m.cols() != n || !space.is_symplectic_operator(m));
    checks.push(AxiomResult::from_witness("g0_symplectic", bad.map(|k| vec![k]), "g0 basis element is not in sp(J1)"));

    let ctx = if checks.iter().all(|c| c.passed) {
        match StructureContext::new(s) {
            Ok(ctx) => {
                checks.push(AxiomResult::pass("trace_form_nondegenerate"));
                Some(ctx)
            }
            Err(e) => {
                checks.push(AxiomResult::fail("trace_form_nondegenerate", None, e.to_string()));
                None
            }
        }
    } else {
        None
    };
    let Some(ctx) = ctx else {
        skip_rest(&mut checks);
        return ValidationReport { checks, notes };
    };

    let k0g = s.g0_basis.len();
    let gpairs: Vec<(usize, usize)> = (0..k0g).flat_map(|i| ((i + 1)..k0g).map(move |j| (i, j))).collect();
    let bad = first_index(&gpairs, |&(i, j)| ctx.g0_coords(&s.g0_basis[i].commutator(&s.g0_basis[j])).is_none())
        .map(|p| vec![gpairs[p].0, gpairs[p].1]);
    checks.push(AxiomResult::from_witness("g0_closed", bad, "[D,D'] is not in g0"));

    let unit_ok = s.unit.len() == s.j2_basis.len() && s.unit_operator() == ExactMatrix::identity(n);
    checks.push(if unit_ok {
        AxiomResult::pass("unit")
    } else {
        AxiomResult::fail("unit", None, "unit coordinates do not give the identity operator")
    });

    let k2 = s.j2_basis.len();
    let pairs: Vec<(usize, usize)> = (0..k2).flat_map(|i| (i..k2).map(move |j| (i, j))).collect();
    let jordan_table: Vec<Option<Vec<Rational>>> =
        pairs.par_iter().map(|&(i, j)| ctx.j2_coords(&s.j2_basis[i].jordan(&s.j2_basis[j]))).collect();
    let bad = jordan_table.iter().position(Option::is_none).map(|p| vec![pairs[p].0, pairs[p].1]);
    let closed = bad.is_none();
    checks.push(AxiomResult::from_witness("jordan_closed", bad, "A∘B leaves J2"));

    let bad = first_index(&pairs, |&(i, j)| ctx.g0_coords(&s.j2_basis[i].commutator(&s.j2_basis[j])).is_none())
        .map(|p| vec![pairs[p].0, pairs[p].1]);
    checks.push(AxiomResult::from_witness("derivations_in_g0", bad, "[A,B] is not in g0"));

    let dk: Vec<(usize, usize)> = (0..s.g0_basis.len()).flat_map(|d| (0..k2).map(move |a| (d, a))).collect();
    let bad = first_index(&dk, |&(d, a)| ctx.j2_coords(&s.g0_basis[d].commutator(&s.j2_basis[a])).is_none())
        .map(|p| vec![dk[p].0, dk[p].1]);
    checks.push(AxiomResult::from_witness("g0_normalizes_j2", bad, "[D,A] is not in J2"));

    let k0 = ctx.i0_basis().len();
    let bad = s
        .delta0
        .iter()
        .find(|(&(i, j), v)| i > j || j >= n || v.len() != k0)
        .map(|(&(i, j), _)| vec![i, j]);
    checks.push(AxiomResult::from_witness("delta0_table", bad, "delta0 entry is out of range or has the wrong length"));

    let triples: Vec<(usize, usize, usize)> = (0..s.g0_basis.len())
        .flat_map(|d| (0..n).flat_map(move |a| (a..n).map(move |b| (d, a, b))))
        .collect();
    let bad = first_index(&triples, |&(d, a, b)| {
        let dm = &s.g0_basis[d];
        let (ua, ub) = (unit_vec(n, a), unit_vec(n, b));
        let lhs = dm.commutator(ctx.delta_basis(a, b));
        let rhs = &ctx.delta(&dm.col(a), &ub) + &ctx.delta(&ua, &dm.col(b));
        lhs != rhs
    })
    .map(|p| vec![triples[p].0, triples[p].1, triples[p].2]);
    checks.push(AxiomResult::from_witness("delta_equivariant", bad, "[D,δ(a,b)] ≠ δ(Da,b) + δ(a,Db)"));

    let triples: Vec<(usize, usize, usize)> =
        (0..k2).flat_map(|t| (0..n).flat_map(move |a| (0..n).map(move |b| (t, a, b)))).collect();
    let bad = if s.delta0.is_empty() {
        None
    } else {
        first_index(&triples, |&(t, a, b)| {
            let am = &s.j2_basis[t];
            ctx.delta0(&am.col(a), &unit_vec(n, b)) != ctx.delta0(&unit_vec(n, a), &am.col(b))
        })
        .map(|p| vec![triples[p].0, triples[p].1, triples[p].2])
    };
    checks.push(AxiomResult::from_witness("delta0_symmetric_operators", bad, "δ0(Aa,b) ≠ δ0(a,Ab)"));

    let abc: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (a..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
    let bad = first_index(&abc, |&(a, b, c)| ctx.f_basis(a, b, c) != ctx.f_basis(c, b, a))
        .map(|p| vec![abc[p].0, abc[p].1, abc[p].2]);
    checks.push(AxiomResult::from_witness("f_symmetric", bad, "F(a,b,c) ≠ F(c,b,a)"));

    if closed && unit_ok {
        let table: Vec<Vec<Rational>> = jordan_table.into_iter().map(Option::unwrap).collect();
        let simple = jordan_is_simple_from_table(k2, &pairs, &table, &s.unit, &s.j2_basis);
        checks.push(if simple {
            AxiomResult::pass("jordan_simple")
        } else {
            AxiomResult::fail("jordan_simple", None, "J2 has a proper ideal or a degenerate trace form")
        });
    } else {
        checks.push(AxiomResult::fail("jordan_simple", None, "not evaluated: J2 is not a unital Jordan subalgebra"));
    }

    match ctx.i0_pairing() {
        I0Pairing::Trivial | I0Pairing::TraceForm => {}
        I0Pairing::Rescaled(p) => notes.push(format!(
            "delta0 pairs with i0 through {}, not through the trace form",
            describe_pairing(&p, ctx.i0_basis())
        )),
        I0Pairing::Inconsistent => {
            notes.push("delta0 table is not dual to <Da,b> under any symmetric nondegenerate form on i0".into())
        }
    }
    ValidationReport { checks, notes }
}

fn describe_pairing(p: &ExactMatrix, i0: &[ExactMatrix]) -> String {
    let k = i0.len();
    let tr = ExactMatrix::from_rows(
        (0..k).map(|a| (0..k).map(|b| i0[a].trace_product(&i0[b])).collect()).collect(),
    );
    // Report the ratio when the pairing is a single multiple of the trace form.
    let mut ratio: Option<Rational> = None;
    for a in 0..k {
        for b in 0..k {
            let t = tr.get(a, b);
            let v = p.get(a, b);
            if num_traits::Zero::is_zero(t) {
                if !num_traits::Zero::is_zero(v) {
                    return "a symmetric form that is not a multiple of tr".into();
                }
                continue;
            }
            let r = v / t;
            match &ratio {
                None => ratio = Some(r),
                Some(q) if *q == r => {}
                Some(_) => return "a symmetric form that is not a multiple of tr".into(),
            }
        }
    }
    match ratio {
        Some(r) => format!("{} · tr", crate::foundation::format_rational(&r)),
        None => "zero".into(),
    }
}

fn skip_rest(checks: &mut Vec<AxiomResult>) {
    for name in AXIOMS.iter().skip(checks.len()) {
        checks.push(AxiomResult::fail(name, None, "not evaluated: a prerequisite failed"));
    }
}

fn jordan_is_simple_from_table(
    k: usize,
    pairs: &[(usize, usize)],
    table: &[Vec<Rational>],
    unit: &[Rational],
    basis: &[ExactMatrix],
) -> bool {
    let gram = ExactMatrix::from_rows(
        (0..k).map(|a| (0..k).map(|b| basis[a].trace_product(&basis[b])).collect()).collect(),
    );
    if gram.inverse().is_none() {
        return false;
    }
    let mut full = vec![Vec::new(); k * k];
    for (&(i, j), v) in pairs.iter().zip(table) {
        full[i * k + j] = v.clone();
        full[j * k + i] = v.clone();
    }
    let apply = |s: usize, x: &[Rational]| {
        let mut out = crate::foundation::zero_vec(k);
        for (t, c) in x.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                crate::foundation::axpy(&mut out, c, &full[s * k + t]);
            }
        }
        out
    };
    let z: Vec<Vec<Rational>> = (0..k).map(|i| unit_vec(k, i)).collect();
    commutant_dimension_cyclic(k, k, &apply, unit, &z) == Some(1)
}

/// `true` iff `J2` is a simple Jordan algebra: the trace form on it is
/// nondegenerate and the multiplication operators have a one-dimensional
/// commutant.
pub fn jordan_is_simple(s: &LieJordanStructure) -> bool {
    let n = s.dim_j1();
    let k = s.j2_basis.len();
    let flat: Vec<Vec<Rational>> = s.j2_basis.iter().map(|m| m.as_flat().to_vec()).collect();
    let Ok(sc) = SpanCoords::new(&flat, n * n) else { return false };
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let mut table = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        match sc.coords(s.j2_basis[i].jordan(&s.j2_basis[j]).as_flat()) {
            Some(c) => table.push(c),
            None => return false,
        }
    }
    jordan_is_simple_from_table(k, &pairs, &table, &s.unit, &s.j2_basis)
}
