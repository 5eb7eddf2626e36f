//! Homological tools for relative trisection diagrams of 4-manifolds.
//!
//! Diagrams are stored as integer class matrices on a surface `Σ_{g,b}`.
//! From them the crate computes the homology of the 4-manifold, the linking
//! matrix of the γ curves, the monodromy of the boundary open book, and a
//! normal form `α·γ = B ⊕ Q ⊕ 0` that exposes the intersection form `Q`.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod intlin;
pub mod invariants;
mod json;
pub mod monodromy;
pub mod standardize;
pub mod surface;

pub use diagram::{parse_diagram, serialize_diagram, synthesize_diagram, validate, Diagram, TrisectionParams};
pub use error::{Error, Result};
pub use intlin::{IntMatrix, Lattice};
pub use invariants::{form_invariants, homology, linking_matrix};
pub use monodromy::monodromy_action;
pub use standardize::{standardize, torelli_compare};
pub use surface::SurfaceModel;
