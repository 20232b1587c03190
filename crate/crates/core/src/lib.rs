//! Exact torus-equivariant localization for Hilbert schemes of curves and
//! points on toric Calabi-Yau 4-folds.
//!
//! The crate computes vertex and edge terms of the virtual tangent space,
//! several explicit square roots of them, the associated sign rules, and the
//! localized DT sums in cohomological, K-theoretic and elliptic form.

pub mod character;
pub mod error;
pub mod geometry;
pub mod partitions;
pub mod vertex;

pub use character::{
    euler, khat, theta, CharClass, FactoredClass, Mode, Polynomial, RatChar, RatSum,
    RationalFunction, ThetaClass, Weight,
};
pub use error::{Error, Result};
pub use partitions::{CurvePartition, NormalDegrees, PlanePartition, SolidPartition};
