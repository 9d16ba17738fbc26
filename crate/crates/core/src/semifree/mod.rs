//! Semi-free groups: generators with the relations `xy = yx` for the edges of
//! a graph. Words are flat letter lists; the identity problem is decided by
//! cancelling `x … x⁻¹` across letters that commute with `x`.

mod group;
mod labels;
mod tables;

pub use group::{kneser_graph, parse_word_file, CommutationGraph, GroupWord, Letter};
pub use labels::{face_label, label_group, medial_edge_label, nontrivial_face_labels, walk_label, x_pair};
pub use tables::{table_data, verify_elements, verify_table, TableData, TableReport};
