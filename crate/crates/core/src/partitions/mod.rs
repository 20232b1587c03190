//! Plane, solid and curve-like solid partitions with their statistics.

mod boxes;
mod curve;
mod stats;

pub use boxes::{
    enumerate_plane, enumerate_solid, plane_up_to, solid_up_to, Cell, Partition, PartitionIter,
    PlanePartition, SolidPartition,
};
pub use curve::{embed, enumerate_curve, leg_axes, project, CurvePartition};
pub use stats::{
    char_of_leg, char_of_solid, f_m, sigma_curve, sigma_curve_at, sigma_edge, sigma_point,
    NormalDegrees,
};
