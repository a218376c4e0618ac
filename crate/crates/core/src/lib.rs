//! Spectral toolkit for finite regular graphs.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`graph`] — build or parse a simple undirected graph (generators for
//!    the standard families, edge lists, graph6).
//! 2. [`symmetry`] — classify it as vertex-transitive / arc-transitive via
//!    backtracking automorphism search.
//! 3. [`spectral`] — assemble `-Δ = I - A/d` and compute its full
//!    eigendecomposition (cyclic Jacobi), with eigenfunctions orthonormal
//!    under the degree-weighted inner product `⟨u,v⟩ = Σ_x u(x)v(x)·d`.
//! 4. [`calculus`] — the discrete difference calculus on vertex functions:
//!    the Laplacian, the edge difference `∇_xy u = u(y) - u(x)`, and the
//!    carré du champ `Γ`.
//! 5. [`bounds`] — numerical certifiers that evaluate both sides of each
//!    supported eigenvalue inequality / constancy identity and report the
//!    slack.
//!
//! All eigenvalues are those of `-Δ`, i.e. `λ` with `Δu + λu = 0`, so they
//! lie in `[0, 2]` and the spectral gap is `λ₁`.

pub mod bounds;
pub mod calculus;
pub mod graph;
mod kahan;
pub mod spectral;
pub mod symmetry;

pub use calculus::VertexFunction;
pub use graph::{FamilySpec, Graph, GraphError};
pub use spectral::{EigGroups, Spectrum, SymMatrix};
pub use symmetry::{Permutation, SymmetryReport};
