//! Exact integer matrices and lattices: Hermite and Smith normal forms,
//! membership, preimages and quotient invariants.
//!
//! Lattices follow the row convention: a [`LatticeBasis`] is the row span of
//! its stored matrix, and a map `Z^a -> Z^b` is an `a × b` matrix acting on
//! row vectors from the right.

mod abgroup;
mod lattice;
mod matrix;
mod normal_form;

pub use abgroup::AbGroup;
pub use lattice::{lattice_member, lattice_preimage, quotient_invariants, LatticeBasis, RowSolver};
pub use matrix::IntMatrix;
pub use normal_form::{
    elementary_divisors, hermite_normal_form, left_kernel, smith_normal_form, EchelonBuilder,
    SmithForm,
};
