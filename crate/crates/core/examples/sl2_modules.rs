//! The plane and the adjoint module of sl2: commutation relations, the
//! determinant pairing, and the map `S(u, v)`.
//!
//! Usage: `cargo run --example sl2_modules`

use liejordan::foundation::format_rational;
use liejordan::sl2kit::{apply, e, e1, em1, f, h, s_map, skew2, sl2_coords, trace_form};

fn show(name: &str, c: [liejordan::Rational; 3]) {
    let c: Vec<String> = c.iter().map(format_rational).collect();
    println!("{name:<12} = {} e + {} h + {} f", c[0], c[1], c[2]);
}

fn main() {
    show("[e, f]", sl2_coords(&e().commutator(&f())));
    show("[h, e]", sl2_coords(&h().commutator(&e())));
    show("[h, f]", sl2_coords(&h().commutator(&f())));
    println!("(e, f) = tr(ef) = {}", format_rational(&trace_form(&e(), &f())));
    println!("<e1, e-1> = {}", format_rational(&skew2(&e1(), &em1())));
    let he1 = apply(&h(), &e1());
    println!("h e1 = ({}, {})", he1[0], he1[1]);
    show("S(e1, e1)", sl2_coords(&s_map(&e1(), &e1())));
    show("S(e1, e-1)", sl2_coords(&s_map(&e1(), &em1())));
    show("S(e-1, e-1)", sl2_coords(&s_map(&em1(), &em1())));
}
