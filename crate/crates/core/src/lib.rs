//! Coherence checking for braided distributive categories.
//!
//! Formal objects and structural morphisms are built in [`expr`], sent to
//! exact matrices over `ℤ[q, q⁻¹]` by the graded model in [`graded`], and
//! organised into closed diagrams in [`diagram`]. [`conditions`] holds the
//! catalogue of coherence diagrams and the suite runner, and [`braid`]
//! decides equality of purely multiplicative words through the Artin
//! representation.

pub mod braid;
pub mod conditions;
pub mod diagram;
pub mod expr;
pub mod graded;
pub mod laurent;
pub mod matrix;

pub use braid::{braid_equal, strict_image, BraidWord, Crossing};
pub use conditions::{ConditionName, Outcome};
pub use diagram::{Diagram, Edge, Orientation, Verdict};
pub use expr::{MorphExpr, ObjectExpr, TypeError};
pub use graded::{Assignment, GradedBasis, GradedModel, ModelError, QParam};
pub use laurent::LaurentPoly;
pub use matrix::{Mismatch, PolyMatrix};
