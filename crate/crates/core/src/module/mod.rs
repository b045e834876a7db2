//! Quiver algebras with relations, their finite-dimensional representations and
//! homomorphisms.

pub mod algebra;
pub mod hom;
pub mod morphism;
pub mod repr;
pub mod structure;

pub use algebra::{parse_relation, Algebra, Arrow, Path, Relation};
pub use hom::{hom_basis, HomCache, HomSpace};
pub use morphism::{column_map, compose, direct_sum, quotient, row_map, submodule, DirectSum, Embedded, Morphism};
pub use repr::{Module, ModuleId};
pub use structure::{
    injective_envelope, is_injective, is_projective, is_split_epi, is_split_mono, projective_cover, radical, socle, top,
};

#[cfg(test)]
mod tests;
