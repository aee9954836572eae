//! Exact-arithmetic exterior algebra and Frölicher–Nijenhuis bracket engine
//! for the standard G2 structure on ℝ⁷ and Spin(7) structure on ℝ⁸.
//!
//! The crate works pointwise: a structure form together with its covariant
//! derivative (equivalently a torsion endomorphism) at a single point. On top
//! of the exterior kernel it provides
//!
//! - polynomial-coefficient differential calculus with the full
//!   Frölicher–Nijenhuis bracket and the classical Nijenhuis-tensor oracle,
//! - the G2 and Spin(7) models with their irreducible-component projectors,
//!   torsion synthesis/extraction, and randomized identity suites,
//! - the bracket evaluators [Cr,χ], [χ,χ], [P,P] from torsion data with their
//!   closed forms, and the sixteen-class / four-class torsion classifiers.
//!
//! All values are immutable and every operation is a pure function; rational
//! mode is bit-exact.

pub mod basis;
pub mod brackets;
pub mod classify;
pub mod error;
pub mod form;
pub mod g2;
pub mod json;
pub mod matrix;
pub mod metric;
pub mod poly;
pub mod polyform;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod spin7;
pub mod vform;

pub use error::{Error, Result};
pub use form::Form;
pub use matrix::Matrix;
pub use metric::Metric;
pub use scalar::{Scalar, ScalarMode};
pub use vform::{delta_g, VectorForm};
