//! Plain undirected graphs, used wherever the embedding does not matter
//! (colorings, homomorphisms, cycle censuses).

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds from an edge list; repeated edges are merged, a loop makes a
    /// vertex its own neighbor.
    pub fn from_edges(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); names.len()];
        for (a, b) in edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { names, adj }
    }

    pub fn with_numbered_vertices(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn cycle(n: usize) -> Self {
        Self::with_numbered_vertices(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::with_numbered_vertices(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Each edge once, as `(a, b)` with `a <= b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a <= b).map(move |&b| (a, b)))
    }

    /// A proper 2-coloring (`false`/`true`) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let s = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!s);
                            stack.push(u);
                        }
                        Some(t) if t == s => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Vertices in breadth-first order from `root`, then any unreached ones.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for start in std::iter::once(root).chain(0..n) {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        order
    }

    pub fn max_degree_vertex(&self) -> usize {
        (0..self.vertex_count())
            .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
            .unwrap_or(0)
    }

    /// Applies a vertex permutation and reports whether the edge set is preserved.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.edges().all(|(a, b)| self.has_edge(perm[a], perm[b]))
    }

    /// Orbit of `start` under the group generated by `perms`.
    pub fn orbit(start: usize, perms: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for p in perms {
                if seen.insert(p[x]) {
                    stack.push(p[x]);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_bipartition() {
        assert!(SimpleGraph::cycle(6).bipartition().is_some());
        assert!(SimpleGraph::cycle(5).bipartition().is_none());
    }

    #[test]
    fn merges_parallel_edges() {
        let g = SimpleGraph::with_numbered_vertices(2, [(0, 1), (1, 0), (0, 1)]);
        assert_eq!(g.edge_count(), 1);
    }
}
