//! Quadrangulations: parity, the cycle parity map, the auxiliary graph of
//! bichromatic faces, degree excess, and the surgeries that build and
//! simplify odd quadrangulations.

mod auxgraph;
mod parity;
mod phi;
mod surgery;

pub use auxgraph::{auxiliary_graph, excess_report, AuxiliaryGraph, ExcessReport, FaceTag};
pub use parity::{
    check_quadrangulation, color_order_orientation, cyclically_increasing_faces, inconsistent_edges,
    odd_faces, odd_faces_parity, quad_parity, validate_orientation, Parity,
};
pub use phi::{
    classify_phi_type, cycle_parity_profile, cycle_parity_profile_from, phi3_certificate, BasisCycle,
    ParityProfile, PhiType,
};
pub use surgery::{
    admissible_crosscap_edges, crosscap_hexagon, identify_face_diagonal, refine_3x3, refine_3x3_map,
};
