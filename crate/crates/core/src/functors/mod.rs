//! Derived functors of `SP²`, `SP³` and the super Lie functor `𝔏ₛ³` on
//! finitely generated abelian groups, computed as homology of explicit
//! finite complexes built from the diagonal resolution `0 → P1 → P0 → A`.

mod complex;
mod derived;
mod free;

pub use complex::{koszul_sp, ChainComplex, Resolution};
pub use derived::{
    derived_table, functor_value, h5, h7, jean_l1sp3, l2_ls3, l_sp2, l_sp3, tor, BoundsRecord,
    FunctorValue, Gated,
};
pub use free::{
    functor_on_free, functor_on_map, lie3_basis, lie3_embedding, ls3_presentation, multisets,
    subsets, tuples, FreeFunctorValue, FunctorTag,
};
