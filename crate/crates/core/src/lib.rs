//! Weil-algebra arithmetic and near-point calculus.
//!
//! - [`algebra`]: monomially presented local algebras, their elements and homomorphisms.
//! - [`expr`]: smooth scalar expressions, symbolic partial derivatives and lifted evaluation `f ↦ f^A`.
//! - [`geometry`]: near points on a chart `ℝ^n`, prolonged vector fields, and frame checks on `M^A`.
//! - [`sample`]: seeded generators for random elements, near points and expressions.

pub mod algebra;
pub mod expr;
pub mod geometry;
pub mod sample;
