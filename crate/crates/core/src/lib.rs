//! Affine charts of quiver Grassmannians with squarefree top.
//!
//! Given `Λ = KQ/I`, a semisimple top `T` and a dimension `d`, this crate
//! enumerates skeletons, builds chart coordinates and defining polynomials,
//! decides full invariance and the moduli criteria for simple tops, and
//! checks everything against a brute-force enumeration over a small prime
//! field.

pub mod algebra;
pub mod catalogue;
pub mod chart;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod moduli;
pub mod oracle;
pub mod poly;
pub mod quiver;
pub mod representation;
pub mod skeleton;

pub use algebra::{AlgElement, AlgebraPresentation, ProjectiveCover, Top};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use quiver::{Path, Quiver};
