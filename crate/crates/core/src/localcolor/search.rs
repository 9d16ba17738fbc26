//! Exhaustive backtracking for local colorings.
//!
//! Vertices are colored in a fixed order; a color `k + 1` may only appear
//! after colors `1..=k` have been used. Each vertex keeps the multiset of
//! colors on its colored neighbors, so a choice is rejected as soon as it
//! would give some vertex an `r`-th neighborhood color. After every choice
//! the uncolored vertices within distance two are checked for a remaining
//! legal color.

use std::fmt::Write as _;

use super::coloring::{greedy_coloring, is_local_coloring, local_number, Coloring};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const SEARCH_RULES: &str =
    "proper; at most r-1 neighborhood colors; first-use color order; distance-2 forward check";

/// Proof of nonexistence: rerunning the search with the same order and
/// parameters visits exactly `nodes` assignments and finds nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoneCertificate {
    pub r: usize,
    pub m: usize,
    pub order: Vec<usize>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { coloring: Coloring, nodes: u64 },
    None(NoneCertificate),
    BudgetExceeded { nodes: u64 },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. } | SearchOutcome::BudgetExceeded { nodes } => *nodes,
            SearchOutcome::None(cert) => cert.nodes,
        }
    }

    /// Plain-text certificate: `FOUND` with the coloring, or `NONE` with the
    /// search-space definition and statistics.
    pub fn certificate(&self, g: &SimpleGraph, r: usize, m: usize) -> String {
        let mut out = String::from("# quadloc-cert v1\n");
        let _ = writeln!(out, "search local-coloring r {r} m {m}");
        match self {
            SearchOutcome::Found { coloring, nodes } => {
                let _ = writeln!(out, "FOUND nodes {nodes}");
                for v in 0..g.vertex_count() {
                    let _ = writeln!(out, "color {} {}", g.name(v), coloring.get(v));
                }
            }
            SearchOutcome::None(cert) => {
                let _ = writeln!(out, "NONE nodes {}", cert.nodes);
                let _ = writeln!(out, "rules {SEARCH_RULES}");
                let order: Vec<&str> = cert.order.iter().map(|&v| g.name(v)).collect();
                let _ = writeln!(out, "order {}", order.join(" "));
            }
            SearchOutcome::BudgetExceeded { nodes } => {
                let _ = writeln!(out, "BUDGET-EXCEEDED nodes {nodes}");
            }
        }
        out
    }
}

pub fn default_order(g: &SimpleGraph) -> Vec<usize> {
    g.bfs_order(g.max_degree_vertex())
}

pub fn search_local_coloring(
    g: &SimpleGraph,
    r: usize,
    m: usize,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    search_with_order(g, r, m, budget, default_order(g))
}

pub fn search_with_order(
    g: &SimpleGraph,
    r: usize,
    m: usize,
    budget: Option<u64>,
    order: Vec<usize>,
) -> Result<SearchOutcome> {
    let n = g.vertex_count();
    if m < r {
        return Err(Error::OutOfRange(format!("search needs m >= r, got m = {m}, r = {r}")));
    }
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Input("vertex order is not a permutation".into()));
    }
    if r == 0 || g.edges().any(|(a, b)| a == b) {
        return Ok(SearchOutcome::None(NoneCertificate { r, m, order, nodes: 0 }));
    }
    let mut s = Search::new(g, r, m, budget, &order);
    let step = s.run(0);
    let (color, nodes) = (s.color, s.nodes);
    let outcome = match step {
        Step::Found => {
            let coloring = Coloring::new(color, m)?;
            if !is_local_coloring(g, &coloring, r) {
                return Err(Error::InternalConsistency("search returned an invalid coloring".into()));
            }
            SearchOutcome::Found { coloring, nodes }
        }
        Step::Exhausted => SearchOutcome::None(NoneCertificate { r, m, order, nodes }),
        Step::OutOfBudget => SearchOutcome::BudgetExceeded { nodes },
    };
    Ok(outcome)
}

/// Replays a NONE certificate and confirms verdict and node count.
pub fn replay_none(g: &SimpleGraph, cert: &NoneCertificate) -> Result<bool> {
    let again = search_with_order(g, cert.r, cert.m, None, cert.order.clone())?;
    Ok(matches!(again, SearchOutcome::None(c) if c.nodes == cert.nodes))
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    r: usize,
    m: usize,
    budget: Option<u64>,
    order: &'a [usize],
    color: Vec<usize>,
    /// `count[v * (m + 1) + k]`: colored neighbors of `v` with color `k`.
    count: Vec<u32>,
    distinct: Vec<usize>,
    used: usize,
    nodes: u64,
    near: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, r: usize, m: usize, budget: Option<u64>, order: &'a [usize]) -> Self {
        let n = g.vertex_count();
        let near = (0..n)
            .map(|v| {
                let mut list: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .flat_map(|&w| std::iter::once(w).chain(g.neighbors(w).iter().copied()))
                    .filter(|&u| u != v)
                    .collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        Search {
            g,
            r,
            m,
            budget,
            order,
            color: vec![0; n],
            count: vec![0; n * (m + 1)],
            distinct: vec![0; n],
            used: 0,
            nodes: 0,
            near,
        }
    }

    fn feasible(&self, v: usize, k: usize) -> bool {
        self.g.neighbors(v).iter().all(|&w| {
            self.color[w] != k
                && (self.count[w * (self.m + 1) + k] > 0 || self.distinct[w] + 1 < self.r)
        })
    }

    fn has_option(&self, v: usize) -> bool {
        (1..=(self.used + 1).min(self.m)).any(|k| self.feasible(v, k))
    }

    fn set(&mut self, v: usize, k: usize) {
        self.color[v] = k;
        for &w in self.g.neighbors(v) {
            let c = &mut self.count[w * (self.m + 1) + k];
            *c += 1;
            if *c == 1 {
                self.distinct[w] += 1;
            }
        }
    }

    fn unset(&mut self, v: usize, k: usize) {
        self.color[v] = 0;
        for &w in self.g.neighbors(v) {
            let c = &mut self.count[w * (self.m + 1) + k];
            *c -= 1;
            if *c == 0 {
                self.distinct[w] -= 1;
            }
        }
    }

    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        let top = (self.used + 1).min(self.m);
        for k in 1..=top {
            if !self.feasible(v, k) {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Step::OutOfBudget;
            }
            let prev_used = self.used;
            self.used = self.used.max(k);
            self.set(v, k);
            let alive = self.near[v].iter().all(|&u| self.color[u] != 0 || self.has_option(u));
            if alive {
                match self.run(depth + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.unset(v, k);
            self.used = prev_used;
        }
        Step::Exhausted
    }
}

/// Result of computing the local chromatic number, possibly only bounded
/// when the node budget runs out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiReport {
    /// No local r-coloring exists for any r below this.
    pub lower: usize,
    /// A witness coloring with local number `upper` exists.
    pub upper: usize,
    pub witness: Coloring,
    pub refutations: Vec<NoneCertificate>,
    pub nodes: u64,
}

impl PsiReport {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Smallest `r` admitting a local r-coloring, searching with `m = |V|`.
pub fn local_chromatic_number(g: &SimpleGraph, budget: Option<u64>) -> Result<PsiReport> {
    let n = g.vertex_count();
    let witness = greedy_coloring(g)?;
    let upper = local_number(g, &witness).expect("greedy coloring is proper");
    let mut report = PsiReport {
        lower: if g.edge_count() > 0 { 2 } else { 1 },
        upper,
        witness,
        refutations: Vec::new(),
        nodes: 0,
    };
    while report.lower < report.upper {
        let r = report.lower;
        let left = budget.map(|b| b.saturating_sub(report.nodes));
        let outcome = search_local_coloring(g, r, n.max(r), left)?;
        report.nodes += outcome.nodes();
        match outcome {
            SearchOutcome::Found { coloring, .. } => {
                report.upper = local_number(g, &coloring).expect("found colorings are proper");
                report.witness = coloring;
            }
            SearchOutcome::None(cert) => {
                report.refutations.push(cert);
                report.lower = r + 1;
            }
            SearchOutcome::BudgetExceeded { .. } => break,
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every proper coloring of `g` with colors `1..=m`, by odometer.
    fn brute_force_exists(g: &SimpleGraph, r: usize, m: usize) -> bool {
        let n = g.vertex_count();
        let mut c = vec![1usize; n];
        loop {
            let col = Coloring::new(c.clone(), m).unwrap();
            if is_local_coloring(g, &col, r) {
                return true;
            }
            let mut i = 0;
            while i < n && c[i] == m {
                c[i] = 1;
                i += 1;
            }
            if i == n {
                return false;
            }
            c[i] += 1;
        }
    }

    #[test]
    fn k4_needs_four() {
        let g = SimpleGraph::complete(4);
        let out = search_local_coloring(&g, 3, 4, None).unwrap();
        let SearchOutcome::None(cert) = out else { panic!("expected NONE") };
        assert!(replay_none(&g, &cert).unwrap());
        assert!(matches!(search_local_coloring(&g, 4, 4, None).unwrap(), SearchOutcome::Found { .. }));
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let graphs = [
            SimpleGraph::cycle(5),
            SimpleGraph::cycle(6),
            SimpleGraph::complete(4),
            SimpleGraph::with_numbered_vertices(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            // Petersen-like 5-wheel
            SimpleGraph::with_numbered_vertices(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)]),
        ];
        for g in &graphs {
            for r in 2..=4 {
                for m in r..=5 {
                    let ours = matches!(
                        search_local_coloring(g, r, m, None).unwrap(),
                        SearchOutcome::Found { .. }
                    );
                    assert_eq!(ours, brute_force_exists(g, r, m), "r = {r}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn psi_values() {
        assert_eq!(local_chromatic_number(&SimpleGraph::cycle(5), None).unwrap().exact(), Some(3));
        assert_eq!(local_chromatic_number(&SimpleGraph::cycle(8), None).unwrap().exact(), Some(2));
        assert_eq!(local_chromatic_number(&SimpleGraph::complete(5), None).unwrap().exact(), Some(5));
    }

    #[test]
    fn budget_is_reported() {
        let g = SimpleGraph::complete(6);
        let out = search_local_coloring(&g, 5, 6, Some(3)).unwrap();
        assert!(matches!(out, SearchOutcome::BudgetExceeded { .. }));
    }
}
