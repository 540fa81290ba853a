//! Cut enumeration and the algebraic-cut test on the worked examples.
//!
//! ```bash
//! cargo run --release --example cut_census
//! ```

use qpkit::cuts::{compatibility_class, enumerate_cuts, is_algebraic_cut};
use qpkit::fixtures;

fn main() {
    for (label, qp) in [
        ("example (a)", fixtures::example_a()),
        ("example (b)", fixtures::example_b()),
    ] {
        let q = &qp.quiver;
        let cuts = enumerate_cuts(&qp);
        println!("{label}: {} cuts", cuts.len());
        for cut in &cuts {
            let names: Vec<&str> = cut.iter().map(|&a| q.arrow_name(a)).collect();
            let rep = is_algebraic_cut(&qp, cut, 24).unwrap();
            let class = compatibility_class(q, cut);
            println!(
                "  {{{}}}  algebraic: {:<5}  class size: {}  ({})",
                names.join(","),
                rep.algebraic,
                class.len(),
                rep.diagnostic
            );
        }
        println!();
    }
}
