//! Computes the reference mutation lattices: cut-mutation lattices of the
//! rank-3 tensor and square products, and the planar mutation lattices of
//! the triangle and square families.
//!
//! ```bash
//! cargo run --release --example mutation_lattices
//! ```

use qpkit::families::*;
use qpkit::lattice::{cut_lattice, export_dot, planar_mutation_lattice, transitivity_report};

fn main() {
    let a3 = alternating_orientation(DynkinType::A(3));
    let tensor = tensor_qp(&a3.quiver, &a3.quiver);
    let square = square_product_qp(&a3.quiver, &a3.quiver).unwrap();

    for (label, qp) in [("A3 (x) A3", &tensor), ("A3 square A3", &square)] {
        let g = cut_lattice(qp);
        println!(
            "{label}: {} cuts, cut-mutation lattice connected: {}",
            g.node_count(),
            g.is_connected()
        );
    }

    // planar mutation lattices, deduplicated by canonical form
    let cases: Vec<(&str, qpkit::planar::PlanarQP)> = vec![
        ("triangle s=4", triangle_qp(4).unwrap()),
        ("A3 square planar", square_product_planar(3).unwrap()),
        ("triangle s=5", triangle_qp(5).unwrap()),
        ("square s=4", square_product_planar(4).unwrap()),
    ];
    for (label, seed) in cases {
        let (graph, _) = planar_mutation_lattice(&seed, 512).unwrap();
        println!(
            "{label}: planar mutation lattice has {} nodes, connected: {}",
            graph.node_count(),
            graph.is_connected()
        );
    }

    // transitivity report on the smallest triangle
    let tri = triangle_qp(3).unwrap().qp();
    let rep = transitivity_report(&tri, 64).unwrap();
    println!(
        "triangle s=3: hypotheses hold: {}, {} cuts, all pairs connected: {}",
        rep.hypotheses_hold,
        rep.cuts.len(),
        rep.all_pairs_connected
    );

    // DOT export of a small lattice
    let (graph, _) = planar_mutation_lattice(&triangle_qp(4).unwrap(), 16).unwrap();
    println!("\nDOT of the 2-node triangle s=4 lattice:\n{}", export_dot(&graph));
}
