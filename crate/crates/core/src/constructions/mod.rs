//! Concrete embedded graphs and the face-list assembler they are built with.

mod complex;
mod grids;
mod quads;

pub use complex::{assemble_embedding, canonical_walk, Assembled, FaceListComplex, Side};
pub use grids::{klein_grid, sphere_square, torus_grid};
pub use quads::{
    add_main_diagonals, build_g0, build_g0_prime, build_g1, build_g1_prime, build_high_genus_family,
    build_k4_projective, build_u_embedding, canonical_choice, cycles_of_length, edge_orbit,
    lift_color_permutation, main_diagonals, DiagonalQuad, HexQuad,
};
