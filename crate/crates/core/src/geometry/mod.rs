//! Toric Calabi-Yau 4-folds, their torus-fixed subschemes and localized DT sums.

mod dt;
mod fixed;
mod toric;

pub use dt::{
    degree_vectors, dt_invariant, dt_over_points, dt_series, series_start, sign_patching_check,
    signed_square_root, vertex_root, AxisChoices, DtMode, DtResult, DtValue, Insertion,
    InsertionKind, PointLog, SeriesTerm, SignPatchReport,
};
pub use fixed::{assemble_tvir, enumerate_fixed_points, local_weight, min_chi, transport_leg, FixedPoint};
pub use toric::{Edge, GeometrySpec, ToricGeometry};
