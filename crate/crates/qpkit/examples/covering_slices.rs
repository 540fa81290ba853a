//! The integer covering of a truncated quiver: windows, slices, the
//! cut-slice correspondence and cut-mutation reachability.
//!
//! ```bash
//! cargo run --release --example covering_slices
//! ```

use qpkit::covering::{
    build_covering_window, cut_mutation_reachability, enumerate_slices, lift_walk, slice_to_cut,
};
use qpkit::fixtures;
use qpkit::quiver::{Walk, WalkStep};

fn main() {
    let qp = fixtures::covering_example();
    let q = &qp.quiver;
    let b = q.arrow_by_name("b").unwrap();

    println!("covering example: 1 => 2 -> 3 with parallel arrows a, b and cut {{b}}");
    let window = build_covering_window(q, &[b], -1, 1);
    println!(
        "window [-1,1]: {} vertices, {} lifted arrows ({} leave the window)",
        window.vertices.len(),
        window.arrows.len(),
        window
            .arrows
            .iter()
            .filter(|a| a.boundary_incomplete)
            .count()
    );

    let a = q.arrow_by_name("a").unwrap();
    let walk = Walk(vec![
        WalkStep { arrow: a, forward: true },
        WalkStep { arrow: b, forward: false },
    ]);
    let (end, level) = lift_walk(q, &[b], &walk, 0);
    println!(
        "lift of the cyclic walk a b^-1 from level 0 ends at {} on level {level}",
        q.vertex_name(end)
    );

    let slices = enumerate_slices(q, &[b]);
    println!("{} slices modulo shift:", slices.len());
    for theta in &slices {
        let cut = slice_to_cut(q, &[b], theta);
        let names: Vec<&str> = cut.iter().map(|&x| q.arrow_name(x)).collect();
        println!("  heights {:?} -> compatible cut {{{}}}", theta.0, names.join(","));
    }

    let graph = cut_mutation_reachability(q, &[b]);
    println!(
        "cut-mutation reachability: {} compatible subsets, connected: {}, hypotheses hold: {}",
        graph.nodes.len(),
        graph.connected,
        graph.hypotheses_hold
    );
}
