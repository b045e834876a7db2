//! Exact linear algebra over prime fields and the rationals.

pub mod field;
pub mod matrix;
pub mod solve;

pub use field::{FieldSpec, Scalar, MAX_CHARACTERISTIC};
pub use matrix::{Echelon, Matrix, Vector};
pub use solve::{solve_affine_membership, solve_linear, AffineConstraint, AffineSolution, Subspace};
