//! Staggered quantum walks with Hamiltonians.
//!
//! A walk on a graph is driven by tessellations: partitions of the vertex set
//! into cliques, each clique carrying a unit vector. A tessellation induces an
//! orthogonal reflection `H = 2 Σ |α_k⟩⟨α_k| - I`, and one step of the walk is
//! the product of local unitaries `e^{iθH}` taken right to left,
//! `U = e^{iθ₁H₁} e^{iθ₀H₀}` in the two-tessellation case.
//!
//! The crate is organised as
//!
//! * [`graph`]: graphs, polygons, tessellations and clique expansion;
//! * [`operators`]: reflections, local unitaries and their composition;
//! * [`simulation`]: state trajectories, distributions and moments;
//! * [`line`]: the Fourier solution of the walk on the line;
//! * [`coined`]: flip-flop coined walks rewritten as staggered walks;
//! * [`document`]: the JSON file format for graphs, tessellations and coins.

pub mod angle;
pub mod coined;
pub mod document;
mod error;
pub mod graph;
pub mod line;
pub mod operators;
pub mod simulation;
mod state;

pub use num_complex::Complex64;

pub use angle::Angle;
pub use error::{Error, Result};
pub use graph::{ExpansionMap, Graph, Polygon, Tessellation};
pub use operators::{EvolutionOperator, LocalUnitary, OrthogonalReflection};
pub use state::WalkState;

/// Tolerance on the norm of every unit vector accepted as input.
pub const NORM_TOLERANCE: f64 = 1e-12;
