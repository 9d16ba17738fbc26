//! Triangulations: the face subdivision `T(Q)`, link winding numbers and the
//! parity argument for two odd-degree vertices.

mod fisk;
mod generate;
mod subdivision;

pub use fisk::{fisk_check, link_winding, FiskReport, ParityRow};
pub use generate::{bipyramid, flip_walk, octahedron, torus_triangulation, FlipWalk};
pub use subdivision::{
    extend_with_hub_color, face_subdivision, tq_lower_bound_check, Triangulation, TqReport, VertexOrigin,
};
