//! Exact integer linear algebra: Smith and Hermite normal forms, lattices,
//! and unimodular solves. Everything here works over arbitrary-precision
//! integers; no floating point is involved.

mod hermite;
mod lattice;
mod matrix;
mod smith;

pub use hermite::column_hermite;
pub use lattice::{
    complete_to_unimodular, kernel_basis, lattice_intersection, lattice_quotient, saturate, Lattice,
    LatticeQuotient,
};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, solve, unimodular_inverse, SmithDecomposition};
