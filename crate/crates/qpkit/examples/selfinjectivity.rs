//! Selfinjectivity reports across the QP families.
//!
//! ```bash
//! cargo run --release --example selfinjectivity
//! ```

use qpkit::algebra::{default_degree_bound, jacobian_algebra};
use qpkit::families::*;
use qpkit::potential::{coeff, QP};
use qpkit::selfinjective::is_selfinjective;

fn show(label: &str, qp: &QP) {
    let bound = default_degree_bound(qp);
    let dim = match jacobian_algebra(qp, bound) {
        qpkit::algebra::JacobianOutcome::Finite(a) => a.dim(),
        qpkit::algebra::JacobianOutcome::Undetermined { .. } => {
            println!("{label}: dimension undetermined");
            return;
        }
    };
    let rep = is_selfinjective(qp, bound).unwrap();
    let sigma = rep
        .nakayama
        .as_ref()
        .map(|s| {
            qp.quiver
                .vertices()
                .map(|v| {
                    format!(
                        "{}->{}",
                        qp.quiver.vertex_name(v),
                        qp.quiver.vertex_name(s[v.index()])
                    )
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_else(|| "-".into());
    println!(
        "{label}: dim {dim}, selfinjective: {}, sigma: {sigma}",
        rep.selfinjective
    );
}

fn main() {
    for n in 4..=7 {
        show(&format!("cycle {n}"), &cycle_qp(n).unwrap());
    }
    show("companion 6", &tilde_cycle_qp(6).unwrap());
    show("tubular (2,2,2,2), lambda=2", &tubular_2222(coeff(2)).unwrap());

    let a3 = alternating_orientation(DynkinType::A(3));
    show("A3 (x) A3 twisted tensor", &tensor_qp(&a3.quiver, &a3.quiver));
    show(
        "A3 square product A3",
        &square_product_qp(&a3.quiver, &a3.quiver).unwrap(),
    );
    let a5 = alternating_orientation(DynkinType::A(5));
    let d4 = alternating_orientation(DynkinType::D(4));
    println!(
        "Coxeter numbers: A5 = {}, D4 = {}",
        coxeter_number(DynkinType::A(5)),
        coxeter_number(DynkinType::D(4))
    );
    show("A5 (x) D4 twisted tensor", &tensor_qp(&a5.quiver, &d4.quiver));

    for s in 2..=4 {
        show(&format!("triangle s={s}"), &triangle_qp(s).unwrap().qp());
    }
}
