//! Generalized dimension subgroups `D(n, 𝔞) = F ∩ (1 + 𝔞 + 𝔣ⁿ)` for `n ∈ {3, 4}`,
//! their quotients by the denominator subgroups, and the theorem checkers.
//!
//! `D(n, 𝔞) ∩ γ₂(F)` is computed as the preimage under `Φ_n` of the ideal
//! lattice, in the log coordinates of [`crate::nilpotent`].

mod problem;
mod verify;

pub use problem::{
    dimension_lattice, lattice_quotient, q_generators, q_group, q_lattice, quotient,
    DimensionProblem, DimensionSolver,
};
pub use verify::{verify_theorem, Check, Datum, Status, TheoremId, VerifyReport, Verifier, Witness};
