use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A total vertex coloring with colors in `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    m: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, m: usize) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0 || c > m) {
            return Err(Error::Coloring(format!(
                "vertex {v} has color {} outside 1..={m}",
                colors[v]
            )));
        }
        Ok(Coloring { colors, m })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let m = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, m)
    }

    pub fn get(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn used_colors(&self) -> BTreeSet<usize> {
        self.colors.iter().copied().collect()
    }

    /// Renames colors through `perm`, a permutation of `1..=m` given as a
    /// slice indexed by `color - 1`.
    pub fn renamed(&self, perm: &[usize]) -> Result<Coloring> {
        Coloring::new(self.colors.iter().map(|&c| perm[c - 1]).collect(), self.m)
    }

    /// Keeps the colors of the listed vertices, in that order.
    pub fn select(&self, vertices: &[usize]) -> Coloring {
        Coloring { colors: vertices.iter().map(|&v| self.colors[v]).collect(), m: self.m }
    }

    /// Appends vertices with the given colors (growing `m` if needed).
    pub fn extended(&self, extra: impl IntoIterator<Item = usize>) -> Coloring {
        let mut colors = self.colors.clone();
        colors.extend(extra);
        let m = colors.iter().copied().max().unwrap_or(0).max(self.m);
        Coloring { colors, m }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] (m = {})", parts.join(" "), self.m)
    }
}

/// Why a coloring fails to be a local r-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { expected: usize, found: usize },
    Improper { a: usize, b: usize },
    /// Vertex sees more than `r - 1` colors on its neighbors.
    Crowded { vertex: usize, colors: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { expected, found } => {
                write!(f, "coloring has {found} entries for {expected} vertices")
            }
            Violation::Improper { a, b } => write!(f, "edge {a}-{b} is monochromatic"),
            Violation::Crowded { vertex, colors } => {
                write!(f, "vertex {vertex} sees {colors} colors in its neighborhood")
            }
        }
    }
}

pub fn neighborhood_colors(g: &SimpleGraph, c: &Coloring, v: usize) -> BTreeSet<usize> {
    g.neighbors(v).iter().map(|&u| c.get(u)).collect()
}

/// First violation of "proper, and at most `r - 1` colors around every
/// vertex", scanning vertices in order.
pub fn local_coloring_violation(g: &SimpleGraph, c: &Coloring, r: usize) -> Option<Violation> {
    if c.len() != g.vertex_count() {
        return Some(Violation::SizeMismatch { expected: g.vertex_count(), found: c.len() });
    }
    if let Some((a, b)) = g.edges().find(|&(a, b)| c.get(a) == c.get(b)) {
        return Some(Violation::Improper { a, b });
    }
    (0..g.vertex_count()).find_map(|v| {
        let k = neighborhood_colors(g, c, v).len();
        (k + 1 > r).then_some(Violation::Crowded { vertex: v, colors: k })
    })
}

pub fn is_local_coloring(g: &SimpleGraph, c: &Coloring, r: usize) -> bool {
    local_coloring_violation(g, c, r).is_none()
}

pub fn is_proper(g: &SimpleGraph, c: &Coloring) -> bool {
    c.len() == g.vertex_count() && g.edges().all(|(a, b)| c.get(a) != c.get(b))
}

/// Smallest `r` for which `c` is a local r-coloring, if it is proper.
pub fn local_number(g: &SimpleGraph, c: &Coloring) -> Option<usize> {
    if !is_proper(g, c) {
        return None;
    }
    Some(
        (0..g.vertex_count())
            .map(|v| neighborhood_colors(g, c, v).len() + 1)
            .max()
            .unwrap_or(1),
    )
}

/// Proper coloring by first fit along breadth-first order.
pub fn greedy_coloring(g: &SimpleGraph) -> Result<Coloring> {
    let n = g.vertex_count();
    if let Some((a, _)) = g.edges().find(|&(a, b)| a == b) {
        return Err(Error::Loop(g.name(a).to_string()));
    }
    let mut colors = vec![0usize; n];
    for v in g.bfs_order(g.max_degree_vertex()) {
        let taken: BTreeSet<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        colors[v] = (1..).find(|k| !taken.contains(k)).unwrap();
    }
    Coloring::from_colors(colors)
}
