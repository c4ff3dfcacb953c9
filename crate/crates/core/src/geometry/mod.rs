//! Near-point geometry on a single chart `ℝ^n`.
//!
//! A near point `ξ ∈ (ℝ^n)^A` is stored through the chart bijection
//! `ξ ↦ (ξ(x1), .., ξ(xn)) ∈ A^n`; its base point is the componentwise
//! augmentation. Tangent vectors at `ξ` are `A^n`-coordinates in the frame
//! `(∂/∂xi)^A`, and vector fields on `M` prolong to fields on `M^A`.

mod field;
mod frame;
mod linalg;
mod near_point;
mod sigma;
mod weil_iso;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::expr::{EvalError, ParseError};

pub use field::{extend_field_apply, field_apply, prolong_field, AFunction, TangentVectorA, VectorField};
pub use frame::{
    frame_is_basis, frame_matrix, frame_test, parallelism_check, FrameMatrix, FrameReport, FrameSample, FrameTest,
    SampleCounts, Sampler,
};
pub use linalg::{real_det, real_rank};
pub use near_point::{canonical_iso_va, canonical_iso_va_inverse, hom_pushforward, lift_map, project, NearPoint};
pub use sigma::{gamma, sigma_decompose, sigma_decompose_in, sigma_recompose, sigma_recompose_in};
pub use weil_iso::{power_mul, weil_iso_check, weil_map, WeilIsoReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid near point: {0}")]
    InvalidPoint(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    /// Process exit code: 0 pass, 1 fail, 2 indeterminate.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Indeterminate => 2,
        }
    }
}
