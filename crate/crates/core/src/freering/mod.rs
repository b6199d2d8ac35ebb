//! The truncated free group ring `Z[F]/f^N`, group words and their
//! deviations `w - 1`, Fox derivatives, and ideal expressions evaluated as
//! lattices in monomial coordinates.

mod divisors;
mod ideal;
mod ring;
mod word;

pub use divisors::DivisorTuple;
pub use ideal::{
    eval_ideal, is_closed, lattice_product, membership, parse_ideal_expr, Atom, IdealEvaluator,
    IdealExpr,
};
pub use ring::{
    left_partial, right_partial, t_polynomial, RingContext, RingElement, MAX_DEGREE, MAX_RANK,
};
pub use word::{check_word, deviation, GroupWord, Literal};
