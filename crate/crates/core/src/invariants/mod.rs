//! Homology of the trisected 4-manifold, the linking matrix of the γ curves,
//! and invariants of integral symmetric forms.

mod chain;
mod form;
mod linking;

pub use chain::{build_chain_complex, homology, homology_of, ChainComplexData, HomologyGroup, HomologyResult};
pub use form::{e8, form_invariants, hyperbolic, FormInvariants, Parity};
pub use linking::{linking_correction, linking_matrix};
