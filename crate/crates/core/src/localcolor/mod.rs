//! Local colorings, the universal graphs `U(m, r)` and exhaustive search.

mod coloring;
mod search;
mod ugraph;

pub use coloring::{
    greedy_coloring, is_local_coloring, is_proper, local_coloring_violation, local_number,
    neighborhood_colors, Coloring, Violation,
};
pub use search::{
    default_order, local_chromatic_number, replay_none, search_local_coloring, search_with_order,
    NoneCertificate, PsiReport, SearchOutcome, SEARCH_RULES,
};
pub(crate) use ugraph::subsets;
pub use ugraph::{build_u, hom_to_u, is_homomorphism_to_u, is_triangle_pair, UGraph, UVertex};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::surface::EmbeddedGraph;

/// Distinct colors on the vertices of face `f`.
pub fn face_colors(g: &EmbeddedGraph, c: &Coloring, f: usize) -> BTreeSet<usize> {
    g.faces()[f].vertices(g).into_iter().map(|v| c.get(v)).collect()
}

/// First quadrilateral face whose four corners carry four distinct colors.
pub fn find_four_chromatic_face(q: &EmbeddedGraph, c: &Coloring) -> Result<Option<usize>> {
    if c.len() != q.vertex_count() {
        return Err(Error::Coloring("coloring does not cover the graph".into()));
    }
    if let Some(e) = (0..q.edge_count()).find(|&e| {
        let (a, b) = q.endpoints(e);
        c.get(a) == c.get(b)
    }) {
        let (a, b) = q.endpoints(e);
        return Err(Error::Coloring(format!("edge {}-{} is monochromatic", q.name(a), q.name(b))));
    }
    for (f, walk) in q.faces().iter().enumerate() {
        if walk.len() != 4 {
            return Err(Error::NotQuadrangulation { face: f, len: walk.len() });
        }
    }
    Ok((0..q.face_count()).find(|&f| face_colors(q, c, f).len() == 4))
}
