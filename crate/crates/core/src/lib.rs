//! Exact universal hyperbolic geometry over ℚ and finite fields.

pub mod error;
pub mod field;
pub mod linalg;
pub mod projective;
pub mod duality;
pub mod metric;
pub mod theorems;
pub mod script;
pub mod census;
pub mod render;

pub use error::{GeomError, Result};
pub use field::{FieldCtx, FieldElement, FieldError};
pub use projective::{ExtValue, ProjLine, ProjPoint};
