//! Derivative calculus and Jacobian algebras on the two worked examples.
//!
//! ```bash
//! cargo run --release --example jacobian_basics
//! ```

use qpkit::algebra::{default_degree_bound, jacobian_algebra, truncated_jacobian};
use qpkit::fixtures;
use qpkit::potential::{cyclic_derivative, double_derivative, sigma_expand};

fn main() {
    let qp = fixtures::example_a();
    let q = &qp.quiver;
    println!("example (a): W = {}", qp.potential.display(q));
    println!("sigma(W)   = {}", sigma_expand(q, &qp.potential).display(q));
    for name in ["a", "b", "c", "d", "e"] {
        let a = q.arrow_by_name(name).unwrap();
        println!(
            "d_{name} W  = {}",
            cyclic_derivative(q, &qp.potential, a).display(q)
        );
    }
    let a = q.arrow_by_name("a").unwrap();
    let e = q.arrow_by_name("e").unwrap();
    println!(
        "d_(a,e) W  = {}",
        double_derivative(q, &qp.potential, a, e).display(q)
    );

    let alg = jacobian_algebra(&qp, default_degree_bound(&qp))
        .finite()
        .expect("finite dimensional");
    println!("Jacobian algebra dimension: {}", alg.dim());
    println!("dimension vector: {:?}", alg.dimension_vector());

    let b = q.arrow_by_name("b").unwrap();
    let truncated = truncated_jacobian(&qp, &[b], 32)
        .unwrap()
        .finite()
        .unwrap();
    println!("truncation at {{b}}: dimension {}", truncated.dim());

    let qp2 = fixtures::example_b();
    let alg2 = jacobian_algebra(&qp2, default_degree_bound(&qp2))
        .finite()
        .unwrap();
    println!(
        "example (b): W = {}  (dimension {})",
        qp2.potential.display(&qp2.quiver),
        alg2.dim()
    );
}
