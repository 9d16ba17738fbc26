use super::parity::check_quadrangulation;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::localcolor::{face_colors, is_proper, Coloring};
use crate::surface::{classify_surface, EmbeddedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceTag {
    /// Exactly two colors around the face.
    Bichromatic,
    /// Four distinct colors.
    FourChromatic,
    Other,
}

#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    /// Diagonal pairs of bichromatic faces, with the face each comes from.
    pub edges: Vec<(usize, usize, usize)>,
    pub graph: SimpleGraph,
    pub tags: Vec<FaceTag>,
}

impl AuxiliaryGraph {
    pub fn count(&self, tag: FaceTag) -> usize {
        self.tags.iter().filter(|&&t| t == tag).count()
    }
}

pub fn auxiliary_graph(g: &EmbeddedGraph, c: &Coloring) -> Result<AuxiliaryGraph> {
    check_quadrangulation(g)?;
    if !is_proper(&g.underlying(), c) {
        return Err(Error::Coloring("coloring is not proper".into()));
    }
    let mut edges = Vec::new();
    let mut tags = Vec::with_capacity(g.face_count());
    for f in 0..g.face_count() {
        let tag = match face_colors(g, c, f).len() {
            2 => FaceTag::Bichromatic,
            4 => FaceTag::FourChromatic,
            _ => FaceTag::Other,
        };
        if tag == FaceTag::Bichromatic {
            let vs = g.faces()[f].vertices(g);
            edges.push((vs[0], vs[2], f));
            edges.push((vs[1], vs[3], f));
        }
        tags.push(tag);
    }
    let graph = SimpleGraph::from_edges(g.names().to_vec(), edges.iter().map(|&(a, b, _)| (a, b)));
    Ok(AuxiliaryGraph { edges, graph, tags })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessReport {
    pub per_vertex: Vec<i64>,
    pub total: i64,
    /// `4(g - 2)` from the surface classification.
    pub expected: i64,
    pub genus: u32,
}

/// Per-vertex `deg - 4` and the total, checked against `4(g - 2)`.
pub fn excess_report(g: &EmbeddedGraph) -> Result<ExcessReport> {
    check_quadrangulation(g)?;
    let s = classify_surface(g);
    if s.orientable {
        return Err(Error::Unsupported("excess identity is stated for non-orientable surfaces".into()));
    }
    let per_vertex: Vec<i64> = (0..g.vertex_count()).map(|v| g.degree(v) as i64 - 4).collect();
    let total = per_vertex.iter().sum();
    let expected = 4 * (i64::from(s.genus) - 2);
    if total != expected {
        return Err(Error::InternalConsistency(format!(
            "total excess {total} differs from 4(g-2) = {expected}"
        )));
    }
    Ok(ExcessReport { per_vertex, total, expected, genus: s.genus })
}
