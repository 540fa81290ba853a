//! qpkit: exact computation with quivers with potential.
//!
//! The crate covers the full pipeline from potentials and their derivative
//! calculus through Jacobian and truncated Jacobian algebras, selfinjectivity
//! and Nakayama permutations, cut combinatorics and coverings, QP mutation
//! (plain, orbit and planar) and mutation-lattice exploration.
//!
//! Start with [`potential::QP`] and the constructors in [`families`], or run
//! the examples:
//!
//! ```bash
//! cargo run --release --example cut_census
//! cargo run --release --example selfinjectivity
//! cargo run --release --example mutation_orbits
//! cargo run --release --example covering_slices
//! cargo run --release --example canvas_topology
//! cargo run --release --example planar_families
//! cargo run --release --example mutation_lattices
//! ```
//!
//! A thin `qpkit` binary exposes the same functionality on the command line.

pub mod error;
pub mod quiver;
pub mod potential;
pub mod fixtures;
pub mod linalg;
pub mod json;
pub mod iso;
pub mod rewrite;
pub mod algebra;
pub mod modules;
pub mod selfinjective;
pub mod cuts;
pub mod covering;
pub mod mutation;
pub mod canvas;
pub mod planar;
pub mod families;
pub mod lattice;

pub use error::{QpError, Result};
pub use potential::{AlgebraElement, Coeff, CyclicWord, Potential, QP};
pub use quiver::{ArrowId, Path, Quiver, VertexId};
