//! Finitely generated semirings over the non-negative integers, their finite
//! semimodules, cell theory and bounded classification.

pub mod cells;
pub mod classify;
pub mod dot;
pub mod error;
pub mod io;
pub mod monoid;
pub mod presets;
pub mod semimodule;
pub mod semiring;
pub mod validation;

pub use error::{Error, Result};
pub use monoid::FinMonoid;
pub use semiring::{BasedSemiring, FiniteSemiring, NatVec, Semiring};
pub use validation::ValidationReport;
pub use semimodule::Semimodule;
