use liejordan::io::{read_cls, write_cls};
use liejordan::isotypic::{decompose, grade};
use liejordan::rootsys::{
    build_root_system, cartan_element, chevalley_algebra, classify_with, ClassificationRow, RootSystem, RootType,
};
use liejordan::{LieAlgebra, Sl2Triple};

const SEEDS: [u64; 5] = [42, 1, 2, 3, 4];
const TRIALS: usize = 20;

/// The closed-form existence conditions for the classical types.
fn expected(kind: RootType, n: usize, nodes: &[usize]) -> bool {
    match (kind, nodes) {
        (RootType::A, &[i, j]) => i + j == n + 1,
        (RootType::B, &[i]) => i % 2 == 0,
        (RootType::C, &[i]) => i < n,
        (RootType::D, &[i]) if i <= n - 2 => i % 2 == 0,
        (RootType::D, &[a, b]) if a == n - 1 && b == n => n % 2 == 1,
        (RootType::D, &[1, b]) if b >= n - 1 => false,
        _ => panic!("{kind}{n}: unexpected marking {nodes:?}"),
    }
}

fn check_witnesses(rs: &RootSystem, l: &LieAlgebra, rows: &[ClassificationRow]) {
    for row in rows.iter().filter(|r| r.exists) {
        let w = row.witness.as_ref().unwrap_or_else(|| panic!("{}: {:?} has no witness", rs.name(), row.marking));
        let t = Sl2Triple { e: w.e.clone(), h: cartan_element(rs, &row.marking), f: w.f.clone() };
        t.check(l).unwrap_or_else(|e| panic!("{}: {:?}: {e}", rs.name(), row.marking));
        let g = grade(l, &t.h).expect("eigenvalues of ad h lie in -2..2");
        let d = g.dims();
        assert_eq!(d.iter().sum::<usize>(), l.dim());
        assert!(d[3] > 0, "{}: {:?} has g1 = 0", rs.name(), row.marking);
        assert_eq!((d[3], d[4]), (row.dims.1, row.dims.2), "{}: {:?}", rs.name(), row.marking);
        let iso = decompose(l, &t).unwrap();
        assert_eq!((iso.m0, iso.m1, iso.m2), row.dims, "{}: {:?}", rs.name(), row.marking);
        assert_eq!(row.dims.0 + 2 * row.dims.1 + 3 * row.dims.2, l.dim());
    }
}

fn check_family(kind: RootType, ranks: std::ops::RangeInclusive<usize>) {
    for n in ranks {
        let rs = build_root_system(kind, n).unwrap();
        let l = chevalley_algebra(&rs);
        let reference = classify_with(&rs, &l, TRIALS, SEEDS[0]).unwrap();
        assert!(!reference.is_empty());
        for row in &reference {
            let want = expected(kind, n, &row.marking.marked_nodes());
            assert_eq!(row.exists, want, "{kind}{n}: {:?}", row.marking);
        }
        for &seed in &SEEDS[1..] {
            let rows = classify_with(&rs, &l, TRIALS, seed).unwrap();
            let a: Vec<bool> = rows.iter().map(|r| r.exists).collect();
            let b: Vec<bool> = reference.iter().map(|r| r.exists).collect();
            assert_eq!(a, b, "{kind}{n}: seed {seed} changes a decision");
        }
        check_witnesses(&rs, &l, &reference);
    }
}

#[test]
fn type_a_needs_symmetric_nodes() {
    check_family(RootType::A, 2..=6);
}

#[test]
fn type_b_needs_an_even_node() {
    check_family(RootType::B, 2..=5);
}

#[test]
fn type_c_always_exists() {
    check_family(RootType::C, 2..=5);
}

#[test]
fn type_d_vector_spin_and_mixed() {
    check_family(RootType::D, 4..=6);
}

#[test]
fn low_rank_exceptional_rows() {
    for (kind, rank, dims) in [
        (RootType::G, 2, vec![(3, 4, 1)]),
        (RootType::F, 4, vec![(15, 8, 7), (21, 14, 1)]),
    ] {
        let rs = build_root_system(kind, rank).unwrap();
        let l = chevalley_algebra(&rs);
        let rows = classify_with(&rs, &l, TRIALS, 42).unwrap();
        let mut found: Vec<_> = rows.iter().filter(|r| r.exists).map(|r| r.dims).collect();
        found.sort();
        assert_eq!(found, dims, "{}", rs.name());
        check_witnesses(&rs, &l, &rows);
    }
}

#[test]
fn classification_is_deterministic_and_serializes_stably() {
    let rs = build_root_system(RootType::D, 4).unwrap();
    let l = chevalley_algebra(&rs);
    let a = classify_with(&rs, &l, TRIALS, 7).unwrap();
    let b = classify_with(&rs, &l, TRIALS, 7).unwrap();
    assert_eq!(a, b);
    let text = write_cls(&a);
    assert_eq!(text, write_cls(&b));
    let back = read_cls(&text).unwrap();
    assert_eq!(back, a);
    assert_eq!(write_cls(&back), text);
}

#[test]
fn equivalent_markings_are_tagged() {
    let rs = build_root_system(RootType::D, 4).unwrap();
    let l = chevalley_algebra(&rs);
    let rows = classify_with(&rs, &l, TRIALS, 42).unwrap();
    // α1+α3, α1+α4 and α3+α4 form one triality orbit.
    let mixed: Vec<_> = rows.iter().enumerate().filter(|(_, r)| r.marking.marked_nodes().len() == 2).collect();
    assert_eq!(mixed.len(), 3);
    let first = mixed[0].0;
    assert_eq!(mixed[0].1.equivalent_to, None);
    assert!(mixed[1..].iter().all(|(_, r)| r.equivalent_to == Some(first)));
}
