//! Vertex and edge terms of the virtual tangent space and their square roots.

mod curve;
mod edge;
mod point;

pub use curve::{
    c_bridge_parity, correction_c, correction_c_with, sqrt_vertex_curve, sqrt_vertex_curve_prime,
    vertex_decomposition, vertex_full, VertexContext,
};
pub use edge::{edge_full, f_full, f_leg, sqrt_edge, A_k, B_op, EdgeContext};
pub use point::{sqrt_vertex_of, sqrt_vertex_point, vertex_point};
