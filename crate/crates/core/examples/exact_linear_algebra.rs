//! Exact rational linear algebra: rank, kernel, solve, inverse.
//!
//! Usage: `cargo run --example exact_linear_algebra`

use liejordan::foundation::{format_rational, frac, kernel, solve, ExactMatrix};

fn show(v: &[liejordan::Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn main() {
    let a = ExactMatrix::from_i64(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
    println!("rank = {}, det = {}", a.rank(), a.determinant());
    for v in kernel(&a) {
        println!("kernel vector ({})", show(&v));
    }

    let b = ExactMatrix::from_i64(&[vec![2, 1], vec![1, 3]]);
    let x = solve(&b, &[frac(1, 2), frac(1, 3)]).expect("invertible");
    println!("solution ({})", show(&x));
    let inv = b.inverse().expect("invertible");
    println!("inverse row 0 ({})", show(inv.row(0)));
    println!("inverse row 1 ({})", show(inv.row(1)));
}
