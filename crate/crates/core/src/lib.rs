//! Exact verification toolkit for Hopf module algebras, quasitriangular
//! structures and generalized BiHom-Lie algebras given by structure constants.

pub mod bihom;
pub mod catalog;
pub mod format;
pub mod hmod;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structure;
pub mod suite;
pub mod tensor;

pub use bihom::{BiHomAlgebra, BiHomError, BiHomLie, TwistedStructure};
pub use hmod::{HModule, HmodError, ModuleMap};
pub use hopf::{HopfAlgebra, HopfError, RMatrix};
pub use linalg::{LinalgError, Matrix, Subspace, Vector};
pub use report::{CheckEntry, CheckReport, Status, Witness};
pub use scalar::{Rational, Scalar, ScalarError};
pub use tensor::Tensor3;
