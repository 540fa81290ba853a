//! Canvas topology: homology, fundamental group presentations and the
//! simple-connectivity semi-decision.
//!
//! ```bash
//! cargo run --release --example canvas_topology
//! ```

use qpkit::canvas::{build_canvas, homology_h1, is_simply_connected, pi1_presentation};
use qpkit::cuts::is_fully_compatible;
use qpkit::families::*;
use qpkit::fixtures;
use qpkit::potential::QP;
use qpkit::quiver::VertexId;

fn show(label: &str, qp: &QP) {
    let canvas = build_canvas(qp);
    let h1 = homology_h1(&canvas);
    let verdict = is_simply_connected(&canvas, 64);
    let gens = pi1_presentation(&canvas, VertexId(0))
        .map(|p| p.generator_arrows.len())
        .unwrap_or(0);
    println!(
        "{label}: cells {}, H1 rank {} torsion {:?}, pi1 generators {}, simply connected: {verdict:?}",
        canvas.two_cells.len(),
        h1.rank,
        h1.torsion,
        gens
    );
    if matches!(verdict, qpkit::canvas::SimplyConnected::Yes) {
        println!("  => fully compatible: {}", is_fully_compatible(qp));
    }
}

fn main() {
    show("example (a)", &fixtures::example_a());
    show("example (b)", &fixtures::example_b());
    show("cycle 4", &cycle_qp(4).unwrap());
    show(
        "cycle 4 without potential",
        &QP::with_zero_potential(cycle_qp(4).unwrap().quiver),
    );
    show("triangle s=3", &triangle_qp(3).unwrap().qp());
    show("tubular", &tubular_2222(qpkit::potential::coeff(2)).unwrap());
    let a3 = alternating_orientation(DynkinType::A(3));
    show("A3 square A3", &square_product_qp(&a3.quiver, &a3.quiver).unwrap());
}
