use std::collections::HashMap;

use super::coloring::{local_coloring_violation, neighborhood_colors, Coloring};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Vertex `(color, set)` of `U(m, r)`; `set` is sorted and omits `color`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UVertex {
    pub color: usize,
    pub set: Vec<usize>,
}

impl UVertex {
    /// Adjacency of the universal graph: `i ∈ B` and `j ∈ A`.
    pub fn adjacent(&self, other: &UVertex) -> bool {
        other.set.binary_search(&self.color).is_ok() && self.set.binary_search(&other.color).is_ok()
    }

    /// `(i,jk)` for small palettes, `(i,j.k)` once colors reach two digits.
    pub fn label(&self, m: usize) -> String {
        let sep = if m >= 10 { "." } else { "" };
        let parts: Vec<String> = self.set.iter().map(|c| c.to_string()).collect();
        format!("({},{})", self.color, parts.join(sep))
    }
}

/// The universal graph for local r-colorings with m colors.
#[derive(Debug, Clone)]
pub struct UGraph {
    pub m: usize,
    pub r: usize,
    pub vertices: Vec<UVertex>,
    pub graph: SimpleGraph,
    index: HashMap<UVertex, usize>,
}

/// All `k`-subsets of `items`, lexicographic.
pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

pub fn build_u(m: usize, r: usize) -> Result<UGraph> {
    if r < 2 || m < r {
        return Err(Error::OutOfRange(format!("U(m, r) needs m >= r >= 2, got m = {m}, r = {r}")));
    }
    let mut vertices = Vec::new();
    for i in 1..=m {
        let others: Vec<usize> = (1..=m).filter(|&j| j != i).collect();
        for set in subsets(&others, r - 1) {
            vertices.push(UVertex { color: i, set });
        }
    }
    let n = vertices.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if vertices[a].adjacent(&vertices[b]) {
                edges.push((a, b));
            }
        }
    }
    let names = vertices.iter().map(|v| v.label(m)).collect();
    let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    Ok(UGraph { m, r, vertices, graph: SimpleGraph::from_edges(names, edges), index })
}

impl UGraph {
    pub fn index_of(&self, v: &UVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn natural_coloring(&self) -> Coloring {
        Coloring::new(self.vertices.iter().map(|v| v.color).collect(), self.m)
            .expect("colors of U lie in 1..=m")
    }

    /// Edges of the form `(i,{j,k})–(j,{i,k})`; only meaningful for `r = 3`.
    pub fn is_triangle_edge(&self, a: usize, b: usize) -> bool {
        is_triangle_pair(&self.vertices[a], &self.vertices[b])
    }

    pub fn triangle_edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges().filter(|&(a, b)| self.is_triangle_edge(a, b)).collect()
    }
}

/// `(i,{j,k})` and `(j,{i,k})` for some common third color `k`.
pub fn is_triangle_pair(x: &UVertex, y: &UVertex) -> bool {
    if x.set.len() != 2 || y.set.len() != 2 || !x.adjacent(y) {
        return false;
    }
    let kx = x.set.iter().find(|&&c| c != y.color);
    let ky = y.set.iter().find(|&&c| c != x.color);
    matches!((kx, ky), (Some(a), Some(b)) if a == b)
}

/// `v ↦ (c(v), A_v)` with `A_v ⊇ c(N(v))`, padded by the smallest unused
/// colors different from `c(v)`.
pub fn hom_to_u(g: &SimpleGraph, c: &Coloring, r: usize) -> Result<Vec<UVertex>> {
    if let Some(v) = local_coloring_violation(g, c, r) {
        return Err(Error::Coloring(format!("not a local {r}-coloring: {v}")));
    }
    if c.m() < r {
        return Err(Error::OutOfRange(format!("{} colors cannot index U(m, {r})", c.m())));
    }
    Ok((0..g.vertex_count())
        .map(|v| {
            let own = c.get(v);
            let mut set = neighborhood_colors(g, c, v);
            for k in 1..=c.m() {
                if set.len() >= r - 1 {
                    break;
                }
                if k != own {
                    set.insert(k);
                }
            }
            UVertex { color: own, set: set.into_iter().collect() }
        })
        .collect())
}

/// Checks that `images` maps every edge of `g` to an edge of the universal graph.
pub fn is_homomorphism_to_u(g: &SimpleGraph, images: &[UVertex]) -> bool {
    images.len() == g.vertex_count() && g.edges().all(|(a, b)| images[a].adjacent(&images[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localcolor::is_local_coloring;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn u53_counts() {
        let u = build_u(5, 3).unwrap();
        assert_eq!(u.graph.vertex_count(), 5 * binom(4, 2));
        assert_eq!(u.graph.edge_count(), 90);
        assert_eq!(u.triangle_edges().len(), 30);
        assert!(is_local_coloring(&u.graph, &u.natural_coloring(), 3));
    }

    #[test]
    fn u_m2_is_a_matching() {
        for m in 2..7 {
            let u = build_u(m, 2).unwrap();
            assert_eq!(u.graph.vertex_count(), m * (m - 1));
            assert!((0..u.graph.vertex_count()).all(|v| u.graph.degree(v) == 1));
        }
    }

    #[test]
    fn u63_vertex_count() {
        assert_eq!(build_u(6, 3).unwrap().graph.vertex_count(), 60);
    }

    #[test]
    fn rejects_small_m() {
        assert!(build_u(2, 3).is_err());
    }

    #[test]
    fn pads_two_colored_cycle() {
        let g = SimpleGraph::cycle(6);
        let c = Coloring::new(vec![1, 2, 1, 2, 1, 2], 3).unwrap();
        let h = hom_to_u(&g, &c, 3).unwrap();
        assert_eq!(h[0], UVertex { color: 1, set: vec![2, 3] });
        assert_eq!(h[1], UVertex { color: 2, set: vec![1, 3] });
        assert!(is_homomorphism_to_u(&g, &h));
        let u = build_u(3, 3).unwrap();
        assert!(h.iter().all(|x| u.index_of(x).is_some()));
    }

    #[test]
    fn k4_maps_into_u44() {
        let g = SimpleGraph::complete(4);
        let c = Coloring::from_colors(vec![1, 2, 3, 4]).unwrap();
        let h = hom_to_u(&g, &c, 4).unwrap();
        assert!(is_homomorphism_to_u(&g, &h));
        assert_eq!(h[2].set, vec![1, 2, 4]);
    }
}
