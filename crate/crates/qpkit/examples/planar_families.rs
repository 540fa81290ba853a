//! Planar QPs: construction from coordinates and cells, validation and a
//! planar mutation step.
//!
//! ```bash
//! cargo run --release --example planar_families
//! ```

use qpkit::algebra::default_degree_bound;
use qpkit::families::*;
use qpkit::json::serialize_planar;
use qpkit::planar::{planar_mutate, validate_planar};
use qpkit::selfinjective::is_selfinjective;

fn main() {
    for s in 2..=5 {
        let tri = triangle_qp(s).unwrap();
        let cert = validate_planar(&tri).unwrap();
        println!(
            "triangle s={s}: {} vertices, {} bounded faces, disk boundary: {}",
            tri.quiver().vertex_count(),
            cert.bounded_faces,
            cert.outer_walk_is_simple
        );
    }

    let display = square_shaped_display_example().unwrap();
    let cert = validate_planar(&display).unwrap();
    println!(
        "square-shaped 4x4 display example: {} bounded faces, symmetric: {}",
        cert.bounded_faces,
        is_symmetric_square_shaped(&display, 4)
    );

    let checkerboard = square_product_planar(3).unwrap();
    println!(
        "3x3 checkerboard (planar A3 square product): symmetric: {}",
        is_symmetric_square_shaped(&checkerboard, 3)
    );

    // one planar mutation step on the triangle family
    let tri = triangle_qp(4).unwrap();
    let qp = tri.qp();
    let rep = is_selfinjective(&qp, default_degree_bound(&qp)).unwrap();
    let sigma = rep.nakayama.unwrap();
    // mutate at a corner vertex (its whole orbit, vertex by vertex)
    let corner = qp.quiver.vertex_by_name("3,0,0").unwrap();
    let mut orbit = vec![corner];
    let mut at = sigma[corner.index()];
    while at != corner {
        orbit.push(at);
        at = sigma[at.index()];
    }
    println!(
        "triangle s=4 corner orbit: {:?}",
        orbit
            .iter()
            .map(|&v| qp.quiver.vertex_name(v))
            .collect::<Vec<_>>()
    );
    let mut current = tri;
    for &v in &orbit {
        current = planar_mutate(&current, v, 32).unwrap();
    }
    let mutated_qp = current.qp();
    let rep = is_selfinjective(&mutated_qp, default_degree_bound(&mutated_qp)).unwrap();
    println!(
        "after the orbit mutation: still planar and selfinjective: {}",
        rep.selfinjective
    );
    println!("JSON of the 2-triangle seed:\n{}", serialize_planar(&triangle_qp(2).unwrap()));
}
