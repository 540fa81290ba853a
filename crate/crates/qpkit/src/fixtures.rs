//! Small worked examples used throughout the test suites and demos.

use crate::potential::{coeff, CyclicWord, Potential, QP};
use crate::quiver::Quiver;

/// Four vertices, five arrows, W = abe + bcd. Vertices are numbered so that
/// a: 3->1, b: 1->4, c: 4->2, d: 2->1, e: 4->3.
pub fn example_a() -> QP {
    let q = Quiver::from_names(
        &["1", "2", "3", "4"],
        &[
            ("a", "3", "1"),
            ("b", "1", "4"),
            ("c", "4", "2"),
            ("d", "2", "1"),
            ("e", "4", "3"),
        ],
    )
    .unwrap();
    let by = |n: &str| q.arrow_by_name(n).unwrap();
    let mut w = Potential::zero();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("a"), by("b"), by("e")]).unwrap(),
        coeff(1),
    )
    .unwrap();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("b"), by("c"), by("d")]).unwrap(),
        coeff(1),
    )
    .unwrap();
    QP::new(q, w).unwrap()
}

/// Three vertices with parallel arrows c, d and W = abc + abd.
/// a: 1->2, b: 2->3, c: 3->1, d: 3->1.
pub fn example_b() -> QP {
    let q = Quiver::from_names(
        &["1", "2", "3"],
        &[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "1"),
            ("d", "3", "1"),
        ],
    )
    .unwrap();
    let by = |n: &str| q.arrow_by_name(n).unwrap();
    let mut w = Potential::zero();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("a"), by("b"), by("c")]).unwrap(),
        coeff(1),
    )
    .unwrap();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("a"), by("b"), by("d")]).unwrap(),
        coeff(1),
    )
    .unwrap();
    QP::new(q, w).unwrap()
}

/// The covering example: 1 ⇉ 2 → 3 with arrows a, b parallel and c.
/// The interesting cut is {b}.
pub fn covering_example() -> QP {
    let q = Quiver::from_names(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")],
    )
    .unwrap();
    QP::with_zero_potential(q)
}

/// A loop with zero potential; its Jacobian algebra is a polynomial ring.
pub fn one_loop() -> QP {
    let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
    QP::with_zero_potential(q)
}

/// Linear A_n quiver 1 -> 2 -> ... -> n with zero potential.
pub fn linear_an(n: usize) -> QP {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut q = Quiver::new();
    for v in &name_refs {
        q.add_vertex(v).unwrap();
    }
    for i in 1..n {
        q.add_arrow_by_names(&format!("a{i}"), &i.to_string(), &(i + 1).to_string())
            .unwrap();
    }
    QP::with_zero_potential(q)
}

/// A small corpus exercising loops, parallel arrows and several cycle shapes.
pub fn small_corpus() -> Vec<QP> {
    let mut out = vec![example_a(), example_b(), one_loop()];
    // loop squared
    let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
    let a = q.arrow_by_name("a").unwrap();
    let mut w = Potential::zero();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![a, a]).unwrap(),
        coeff(1),
    )
    .unwrap();
    out.push(QP::new(q, w).unwrap());
    // 2-cycle with coefficient 3/2
    let q = Quiver::from_names(&["x", "y"], &[("u", "x", "y"), ("v", "y", "x")]).unwrap();
    let u = q.arrow_by_name("u").unwrap();
    let v = q.arrow_by_name("v").unwrap();
    let mut w = Potential::zero();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![u, v]).unwrap(),
        coeff(3) / coeff(2),
    )
    .unwrap();
    out.push(QP::new(q, w).unwrap());
    out
}
