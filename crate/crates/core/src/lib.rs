pub mod additive;
pub mod budget;
pub mod cotorsion;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod homotopy;
pub mod linalg;
pub mod module;
pub mod report;
pub mod triangles;

pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, Scalar, Vector};
pub use module::{Algebra, Module, ModuleId, Morphism};
pub use additive::{Category, FactorHom, HomSolver, Subcategory};
pub use budget::Budget;
pub use cotorsion::{build_localization_triple, check_hovey_triple, check_localization_triple, CotorsionPair, HoveyTriple, LocalizationTriple, WitnessProvider, WitnessTable};
pub use exact::Conflation;
pub use homotopy::{HoMorphism, HomotopyCategory};
pub use report::{Report, Status};
pub use triangles::TriangleStructure;
