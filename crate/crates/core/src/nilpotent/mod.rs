//! The free nilpotent group of class 3: basic commutators, logs of words in
//! `γ₂(F)/γ₄(F)`, and the lattices of the denominator subgroups.
//!
//! All subgroup images live in the abelian section `γ₂(F)/γ₄(F)` (or
//! `γ₂(F)/γ₃(F)` for level-3 tags), where a subgroup is the integer span of
//! the logs of its elements and normality is closure under the conjugation
//! corrections of [`FreeNilpotent::correction`].
//!
//! `R` is the normal closure of the relators `x_i^{e_i}`. Because these
//! relators are independent in `F_ab`, `R ∩ γ₂(F) = [R,F]`, so the tag
//! `RF.g4` doubles as `Rγ₄(F) ∩ γ₂(F)`.

mod basis;
mod logs;
mod subgroup;

pub use basis::{basic_commutators, CommutatorBasis};
pub use logs::{word_log, FreeNilpotent, LogVector};
pub use subgroup::{relator_words, seed_words, subgroup_lattice, SubgroupSpec, SubgroupTag};
