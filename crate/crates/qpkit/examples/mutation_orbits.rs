//! QP mutation: single vertices, Nakayama orbits and the worked families.
//!
//! ```bash
//! cargo run --release --example mutation_orbits
//! ```

use qpkit::algebra::default_degree_bound;
use qpkit::families::*;
use qpkit::iso::{is_isomorphic_up_to_rescaling, qp_canonical_form};
use qpkit::mutation::{mutate, orbit_mutate};
use qpkit::potential::coeff;
use qpkit::selfinjective::is_selfinjective;

fn main() {
    // the companion family mutates into the plain cycle at its even vertices
    for n in [4usize, 6] {
        let tilde = tilde_cycle_qp(n).unwrap();
        let mut current = tilde;
        for v in (2..=n).step_by(2) {
            let k = current.quiver.vertex_by_name(&v.to_string()).unwrap();
            current = mutate(&current, k, 24).unwrap().qp;
        }
        let same = qp_canonical_form(&current) == qp_canonical_form(&cycle_qp(n).unwrap());
        println!("companion {n} at even vertices -> cycle {n}: {same}");
    }

    // orbit mutation along the Nakayama permutation preserves selfinjectivity
    let tilde6 = tilde_cycle_qp(6).unwrap();
    let rep = is_selfinjective(&tilde6, default_degree_bound(&tilde6)).unwrap();
    let sigma = rep.nakayama.unwrap();
    let k = tilde6.quiver.vertex_by_name("2").unwrap();
    let mutated = orbit_mutate(&tilde6, &sigma, k, 24).unwrap();
    let rep2 = is_selfinjective(&mutated.qp, default_degree_bound(&mutated.qp)).unwrap();
    println!(
        "companion 6, orbit of vertex 2: selfinjective before: {}, after: {}",
        rep.selfinjective, rep2.selfinjective
    );

    // the tubular QP mutates into its second presentation
    let tubular = tubular_2222(coeff(2)).unwrap();
    let m1 = tubular.quiver.vertex_by_name("m1").unwrap();
    let out = mutate(&tubular, m1, 24).unwrap();
    let second = tubular_second_presentation(coeff(2)).unwrap();
    println!(
        "tubular lambda=2 at m1 -> second presentation with lambda'=2: {}",
        is_isomorphic_up_to_rescaling(&out.qp, &second)
    );
    println!(
        "  split off {} two-cycle pair(s); potential now {}",
        out.trivial_part_rank,
        out.qp.potential.display(&out.qp.quiver)
    );

    // double mutation returns the original up to relabeling and rescaling
    let qp = cycle_qp(5).unwrap();
    let k = qp.quiver.vertex_by_name("3").unwrap();
    let twice = mutate(&mutate(&qp, k, 24).unwrap().qp, k, 24).unwrap();
    println!(
        "cycle 5 mutated twice at vertex 3 returns itself: {}",
        is_isomorphic_up_to_rescaling(&twice.qp, &qp)
    );
}
