//! One line per acceptance criterion. Exits nonzero if any line fails.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use common::{element, rng, vector, SAMPLES};
use liejordan::foundation::{frac, rat, Rational};
use liejordan::io::write_lie;
use liejordan::isotypic::{extract, grade};
use liejordan::models::{acceptance_catalog, catalog_structure, sl_closed_form_check, ModelSpec};
use liejordan::rootsys::{
    build_root_system, cartan_element, chevalley_algebra, classify_with, ClassificationRow, RootSystem, RootType,
};
use liejordan::sl2kit::{apply, e, e1, em1, f, h, s_map, skew2, trace_form, Vec2};
use liejordan::sympjordan::{validate, StructureContext};
use liejordan::tkk::{build, canonical_triple, JacobiMode};
use liejordan::{LieAlgebra, LieJordanStructure, Sl2Triple};

const CATALOG_RUNTIME_LIMIT: Duration = Duration::from_secs(60);
const E8_RUNTIME_LIMIT: Duration = Duration::from_secs(600);
const MUTATIONS_PER_MODEL: usize = 100;
const MUTATION_DETECTION_MIN: f64 = 0.99;
const CLASSICAL_SEEDS: [u64; 5] = [42, 1, 2, 3, 4];
const TRIALS: usize = 20;
const SEED: u64 = 42;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("{} [{id}] {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn catalog() -> (Vec<(ModelSpec, LieJordanStructure, LieAlgebra)>, Duration) {
    let start = Instant::now();
    let models = acceptance_catalog()
        .into_par_iter()
        .map(|spec| {
            let s = catalog_structure(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            let l = build(&s).unwrap_or_else(|e| panic!("{spec}: {e}"));
            (spec, s, l)
        })
        .collect();
    (models, start.elapsed())
}

fn jacobi(r: &mut Report, models: &[(ModelSpec, LieJordanStructure, LieAlgebra)], build_time: Duration) {
    let start = Instant::now();
    let failed: Vec<String> = models
        .par_iter()
        .filter(|(_, _, l)| !l.verify_jacobi(JacobiMode::Full).passed())
        .map(|(spec, _, _)| spec.to_string())
        .collect();
    let elapsed = build_time + start.elapsed();
    let max_dim = models.iter().map(|m| m.2.dim()).max().unwrap_or(0);
    r.line(
        "1",
        failed.is_empty() && elapsed < CATALOG_RUNTIME_LIMIT,
        format!(
            "Jacobi exactness: {} models up to dimension {max_dim}, full mode, violations in {:?}, {:.1} s (limit {} s)",
            models.len(),
            failed,
            elapsed.as_secs_f64(),
            CATALOG_RUNTIME_LIMIT.as_secs()
        ),
    );
}

fn simplicity(r: &mut Report, models: &[(ModelSpec, LieJordanStructure, LieAlgebra)]) {
    let not_simple: Vec<String> = models
        .par_iter()
        .filter(|(_, _, l)| {
            let s = l.simplicity(SEED);
            !(s.killing_nondegenerate && s.commutant_dimension == Some(1))
        })
        .map(|(spec, _, _)| spec.to_string())
        .collect();
    r.line(
        "2a",
        not_simple.is_empty(),
        format!("Simplicity: nondegenerate Killing form and commutant dimension 1, failures {not_simple:?}"),
    );

    let rates: Vec<(String, usize)> = models
        .par_iter()
        .enumerate()
        .map(|(m, (spec, _, l))| {
            let d = l.dim();
            let mut g = rng(9000 + m as u64);
            let mut detected = 0;
            for _ in 0..MUTATIONS_PER_MODEL {
                let i = g.gen_range(0..d);
                let j = (i + g.gen_range(1..d)) % d;
                let k = g.gen_range(0..d);
                if !l.perturbed(i, j, k, &rat(1)).verify_jacobi(JacobiMode::Full).passed() {
                    detected += 1;
                }
            }
            (spec.to_string(), detected)
        })
        .collect();
    let need = (MUTATION_DETECTION_MIN * MUTATIONS_PER_MODEL as f64).ceil() as usize;
    let worst = rates.iter().min_by_key(|x| x.1).cloned().unwrap_or_default();
    r.line(
        "2b",
        rates.iter().all(|x| x.1 >= need),
        format!(
            "Mutation control: {MUTATIONS_PER_MODEL} single-constant +1 perturbations per model, worst {} detected {}/{MUTATIONS_PER_MODEL} (need {need})",
            worst.0, worst.1
        ),
    );
}

/// `(dim g0, 2 dim J1, dim J2)`, except for G2 whose table row lists `dim J1`.
fn table_dims(kind: RootType, d: (usize, usize, usize)) -> (usize, usize, usize) {
    if kind == RootType::G {
        d
    } else {
        (d.0, 2 * d.1, d.2)
    }
}

fn classified(kind: RootType, rank: usize, seed: u64) -> (RootSystem, LieAlgebra, Vec<ClassificationRow>, Duration) {
    let start = Instant::now();
    let rs = build_root_system(kind, rank).unwrap();
    let l = chevalley_algebra(&rs);
    let rows = classify_with(&rs, &l, TRIALS, seed).unwrap();
    (rs, l, rows, start.elapsed())
}

fn witnesses_valid(rs: &RootSystem, l: &LieAlgebra, rows: &[ClassificationRow]) -> Result<usize, String> {
    let mut n = 0;
    for row in rows.iter().filter(|r| r.exists) {
        let name = format!("{} {:?}", rs.name(), row.marking.0);
        let w = row.witness.as_ref().ok_or(format!("{name}: no witness"))?;
        let t = Sl2Triple { e: w.e.clone(), h: cartan_element(rs, &row.marking), f: w.f.clone() };
        t.check(l).map_err(|e| format!("{name}: {e}"))?;
        let g = grade(l, &t.h).map_err(|e| format!("{name}: {e}"))?;
        let d = g.dims();
        if d.iter().sum::<usize>() != l.dim() || d[3] == 0 || (d[3], d[4]) != (row.dims.1, row.dims.2) {
            return Err(format!("{name}: grading dims {d:?}"));
        }
        n += 1;
    }
    Ok(n)
}

fn exceptional(r: &mut Report, witness_log: &mut Vec<Result<usize, String>>) {
    let expected: [(RootType, usize, Vec<(usize, usize, usize)>); 5] = [
        (RootType::G, 2, vec![(3, 4, 1)]),
        (RootType::F, 4, vec![(15, 16, 7), (21, 28, 1)]),
        (RootType::E, 6, vec![(22, 32, 8), (35, 40, 1)]),
        (RootType::E, 7, vec![(39, 64, 10), (66, 64, 1)]),
        (RootType::E, 8, vec![(78, 128, 14), (133, 112, 1)]),
    ];
    for (kind, rank, want) in expected {
        let (rs, l, rows, elapsed) = classified(kind, rank, SEED);
        let existing: Vec<_> = rows.iter().filter(|r| r.exists && r.equivalent_to.is_none()).collect();
        let sums_ok = existing.iter().all(|r| r.dims.0 + 2 * r.dims.1 + 3 * r.dims.2 == l.dim());
        let mut found: Vec<_> = existing.iter().map(|r| table_dims(kind, r.dims)).collect();
        found.sort();
        let mut ok = found == want && sums_ok;
        let mut extra = String::new();
        if (kind, rank) == (RootType::E, 6) {
            let absent = rows.iter().filter(|r| !r.exists).count();
            let note = rows.iter().any(|r| r.exists && r.dims.0 == 22 && r.notes.iter().any(|n| n.contains("center")));
            ok &= absent > 0 && note;
            extra = format!(", non-existing markings {absent}, center note on dim-22 row {note}");
        }
        if (kind, rank) == (RootType::E, 7) {
            let absent = rows.iter().filter(|r| !r.exists).count();
            ok &= absent == 1;
            extra = format!(", non-existing markings {absent}");
        }
        if kind == RootType::E && rank == 8 {
            ok &= elapsed < E8_RUNTIME_LIMIT;
            extra = format!(", {:.1} s (limit {} s)", elapsed.as_secs_f64(), E8_RUNTIME_LIMIT.as_secs());
        }
        r.line("3", ok, format!("{} table: dims {found:?}, expected {want:?}, sums {}{extra}", rs.name(), l.dim()));
        witness_log.push(witnesses_valid(&rs, &l, &rows));
    }
}

fn rule(kind: RootType, n: usize, nodes: &[usize]) -> Option<bool> {
    match (kind, nodes) {
        (RootType::A, &[i, j]) => Some(i + j == n + 1),
        (RootType::B, &[i]) => Some(i % 2 == 0),
        (RootType::C, &[i]) => Some(i < n),
        (RootType::D, &[i]) if i <= n - 2 => Some(i % 2 == 0),
        (RootType::D, &[a, b]) if a == n - 1 && b == n => Some(n % 2 == 1),
        (RootType::D, &[1, b]) if b >= n - 1 => Some(false),
        _ => None,
    }
}

fn classical(r: &mut Report, witness_log: &mut Vec<Result<usize, String>>) {
    let families = [(RootType::A, 2..=6), (RootType::B, 2..=5), (RootType::C, 2..=5), (RootType::D, 4..=6)];
    for (kind, ranks) in families {
        let mut markings = 0;
        let mut wrong = Vec::new();
        let mut unstable = Vec::new();
        for n in ranks.clone() {
            let (rs, l, rows, _) = classified(kind, n, CLASSICAL_SEEDS[0]);
            for row in &rows {
                markings += 1;
                if rule(kind, n, &row.marking.marked_nodes()) != Some(row.exists) {
                    wrong.push(format!("{kind}{n}{:?}", row.marking.0));
                }
            }
            for &seed in &CLASSICAL_SEEDS[1..] {
                let other = classify_with(&rs, &l, TRIALS, seed).unwrap();
                if other.iter().map(|x| x.exists).ne(rows.iter().map(|x| x.exists)) {
                    unstable.push(format!("{kind}{n} seed {seed}"));
                }
            }
            witness_log.push(witnesses_valid(&rs, &l, &rows));
        }
        r.line(
            "4",
            wrong.is_empty() && unstable.is_empty(),
            format!(
                "{kind}_n, n in {}..={}: {markings} markings, disagreements {wrong:?}, seed instabilities {unstable:?}",
                ranks.start(),
                ranks.end()
            ),
        );
    }
}

fn sl2_identities() -> bool {
    let vs = [e1(), em1()];
    let ops = [e(), h(), f()];
    let two = rat(2);
    let mut ok = true;
    for x in &ops {
        for u in &vs {
            for v in &vs {
                ok &= skew2(&apply(x, u), v) == -skew2(u, &apply(x, v));
                ok &= trace_form(x, &s_map(u, v)) == &two * skew2(&apply(x, u), v);
                ok &= x.commutator(&s_map(u, v))
                    == (&s_map(u, &apply(x, v)) + &x.scale(&skew2(u, v))).scale(&two);
            }
        }
    }
    let mut g = rng(7000);
    for _ in 0..SAMPLES {
        let c: Vec<Rational> = vector(&mut g, 7);
        let x = liejordan::ExactMatrix::from_rows(vec![vec![c[0].clone(), c[1].clone()], vec![c[2].clone(), -c[0].clone()]]);
        let (u, v): (Vec2, Vec2) = ([c[3].clone(), c[4].clone()], [c[5].clone(), c[6].clone()]);
        ok &= skew2(&apply(&x, &u), &v) == -skew2(&u, &apply(&x, &v));
        ok &= trace_form(&x, &s_map(&u, &v)) == &two * skew2(&apply(&x, &u), &v);
    }
    ok
}

/// Samples the structural identities on one model; returns the first failure.
fn structure_identities(name: &str, s: &LieJordanStructure, salt: u64) -> Result<(), String> {
    let ctx = StructureContext::new(s).map_err(|e| e.to_string())?;
    let n = s.dim_j1();
    let mut g = rng(salt);
    let fail = |what: &str| Err(format!("{name}: {what}"));
    if !validate(s).passed() {
        return fail("validate");
    }
    for _ in 0..SAMPLES {
        let a_op = element(&mut g, &s.j2_basis, n);
        let d = element(&mut g, &s.g0_basis, n);
        let (a, b, c, w) = (vector(&mut g, n), vector(&mut g, n), vector(&mut g, n), vector(&mut g, n));
        let (aa, ab) = (a_op.mul_vec(&a), a_op.mul_vec(&b));
        if a_op.trace_product(&ctx.phi(&a, &b)) != s.space.pair(&aa, &b) {
            return fail("phi pairing with J2");
        }
        if a_op.commutator(&ctx.phi(&a, &b)) != &ctx.delta(&aa, &b) - &ctx.delta(&a, &ab) {
            return fail("[A, phi(a, b)]");
        }
        if a_op.commutator(&ctx.delta(&a, &b)) != &ctx.phi(&aa, &b) - &ctx.phi(&a, &ab) {
            return fail("[A, delta(a, b)]");
        }
        if a_op.jordan(&ctx.phi(&a, &b)) != (&ctx.phi(&aa, &b) + &ctx.phi(&a, &ab)).scale(&frac(1, 2)) {
            return fail("A o phi(a, b)");
        }
        let (da, db) = (d.mul_vec(&a), d.mul_vec(&b));
        if d.commutator(&ctx.delta(&a, &b)) != &ctx.delta(&da, &b) + &ctx.delta(&a, &db) {
            return fail("g0 equivariance of delta");
        }
        let fabc = ctx.compute_f(&a, &b, &c);
        if fabc != ctx.compute_f(&b, &a, &c) || fabc != ctx.compute_f(&c, &b, &a) {
            return fail("F symmetry");
        }
        let (x, y, z) = (ctx.f_bar(&a, &b, &c, &w), ctx.f_bar(&b, &c, &a, &w), ctx.f_bar(&c, &a, &b, &w));
        if x != y || y != z {
            return fail("curvature form cyclic relation");
        }
    }
    if n <= 6 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = ctx.f_basis(i, j, k);
                    if v != ctx.f_basis(j, i, k) || v != ctx.f_basis(k, j, i) {
                        return fail("F symmetry on basis");
                    }
                }
            }
        }
    }
    if let ModelSpec::Maximal { .. } = name.parse::<ModelSpec>().map_err(|e| e.to_string())? {
        for _ in 0..SAMPLES {
            let (a, b, c, w) = (vector(&mut g, n), vector(&mut g, n), vector(&mut g, n), vector(&mut g, n));
            if ctx.phi(&a, &b) != s.space.phi_m(&a, &b) || ctx.delta(&a, &b) != s.space.delta_m(&a, &b) {
                return fail("canonical maps on the maximal family");
            }
            if ctx.f_bar(&a, &b, &c, &w) != rat(0) {
                return fail("curvature form vanishes on the maximal family");
            }
        }
    }
    Ok(())
}

fn properties(r: &mut Report, models: &[(ModelSpec, LieJordanStructure, LieAlgebra)]) {
    let sl2 = sl2_identities();
    let failures: Vec<String> = models
        .par_iter()
        .enumerate()
        .filter_map(|(k, (spec, s, _))| structure_identities(&spec.to_string(), s, 8000 + k as u64).err())
        .collect();
    r.line(
        "5",
        sl2 && failures.is_empty(),
        format!(
            "Property suites: sl2 identities {}, structure identities on {} models with {SAMPLES} samples each, failures {failures:?}",
            if sl2 { "hold" } else { "fail" },
            models.len()
        ),
    );
}

fn round_trip(r: &mut Report, models: &[(ModelSpec, LieJordanStructure, LieAlgebra)]) {
    let failures: Vec<String> = models
        .par_iter()
        .filter(|(_, s, l)| {
            let bytes = write_lie(l);
            let Ok(t) = canonical_triple(l, s) else { return true };
            let Ok(back) = extract(l, &t) else { return true };
            build(&back).map(|l2| write_lie(&l2) != bytes).unwrap_or(true)
        })
        .map(|(spec, _, _)| spec.to_string())
        .collect();
    let sl: Vec<&ModelSpec> = models.iter().map(|m| &m.0).filter(|m| matches!(m, ModelSpec::Sl { .. })).collect();
    let closed: Vec<String> = sl
        .iter()
        .filter(|spec| !sl_closed_form_check(spec).map(|c| c.passed()).unwrap_or(false))
        .map(|spec| spec.to_string())
        .collect();
    r.line(
        "6",
        failures.is_empty() && closed.is_empty(),
        format!(
            "Round trip: byte-identical lie-v1 after decompose and rebuild for {} models (failures {failures:?}); sl closed forms on {} models (failures {closed:?})",
            models.len(),
            sl.len()
        ),
    );
}

fn main() {
    let mut r = Report { failures: 0 };
    let (models, build_time) = catalog();
    jacobi(&mut r, &models, build_time);
    simplicity(&mut r, &models);
    let mut witness_log = Vec::new();
    exceptional(&mut r, &mut witness_log);
    classical(&mut r, &mut witness_log);
    properties(&mut r, &models);
    round_trip(&mut r, &models);
    let errors: Vec<&String> = witness_log.iter().filter_map(|x| x.as_ref().err()).collect();
    let checked: usize = witness_log.iter().filter_map(|x| x.as_ref().ok()).sum();
    r.line(
        "7",
        errors.is_empty() && checked > 0,
        format!("Witness validity: {checked} existing rows checked for triple relations and grading, errors {errors:?}"),
    );
    println!("{} failing line(s)", r.failures);
    if r.failures > 0 {
        std::process::exit(1);
    }
}
