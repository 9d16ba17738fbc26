//! The cycle parity map on a fundamental-cycle basis, and the four normal
//! forms it can take on a non-orientable surface.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use super::parity::Parity;
use crate::error::{Error, Result};
use crate::surface::{balancing_potential, is_orientable, EmbeddedGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiType {
    Phi0,
    Phi1,
    Phi2,
    Phi3,
}

impl fmt::Display for PhiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            PhiType::Phi0 => 0,
            PhiType::Phi1 => 1,
            PhiType::Phi2 => 2,
            PhiType::Phi3 => 3,
        };
        write!(f, "Phi{i}")
    }
}

/// Fundamental cycle of one cotree edge: tree path, the edge, tree path back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCycle {
    pub cotree_edge: usize,
    pub edges: Vec<usize>,
    /// Length parity (true = odd).
    pub phi: bool,
    /// Negative-edge parity (true = one-sided).
    pub w1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityProfile {
    pub orientable: bool,
    pub root: usize,
    pub tree_edges: Vec<usize>,
    pub basis: Vec<BasisCycle>,
}

impl ParityProfile {
    pub fn phi_values(&self) -> Vec<bool> {
        self.basis.iter().map(|b| b.phi).collect()
    }

    pub fn w1_values(&self) -> Vec<bool> {
        self.basis.iter().map(|b| b.w1).collect()
    }

    pub fn phi_is_zero(&self) -> bool {
        self.basis.iter().all(|b| !b.phi)
    }

    pub fn phi_equals_w1(&self) -> bool {
        self.basis.iter().all(|b| b.phi == b.w1)
    }

    /// `(φ, w₁)` of a cycle-space element given as an edge multiset, using
    /// its expansion in this basis (cotree edges occurring an odd number of
    /// times).
    pub fn evaluate(&self, edges: &[usize]) -> (bool, bool) {
        let mut odd = std::collections::BTreeMap::<usize, bool>::new();
        for &e in edges {
            *odd.entry(e).or_default() ^= true;
        }
        self.basis
            .iter()
            .filter(|b| odd.get(&b.cotree_edge).copied().unwrap_or(false))
            .fold((false, false), |(p, w), b| (p ^ b.phi, w ^ b.w1))
    }

    pub fn certificate(&self, g: &EmbeddedGraph, parity: Parity) -> String {
        let mut out = String::from("# quadloc-cert v1\n");
        let _ = writeln!(out, "parity-profile");
        let _ = writeln!(out, "orientable {}", self.orientable);
        let _ = writeln!(out, "parity {parity}");
        let _ = writeln!(out, "root {}", g.name(self.root));
        for b in &self.basis {
            let edges: Vec<String> = b.edges.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(
                out,
                "cycle {} phi {} w1 {} : {}",
                b.cotree_edge,
                u8::from(b.phi),
                u8::from(b.w1),
                edges.join(" ")
            );
        }
        match classify_phi_type(self, parity) {
            Ok(t) => {
                let _ = writeln!(out, "type {t}");
            }
            Err(_) => {
                let _ = writeln!(out, "type none (orientable surface)");
            }
        }
        out
    }
}

/// Breadth-first spanning tree from `root`: parent dart for every vertex
/// (pointing from parent to child), or `None` at the root.
fn spanning_tree(g: &EmbeddedGraph, root: usize) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &d in g.rotation(v) {
            let u = g.far_end(d);
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(d);
                queue.push_back(u);
            }
        }
    }
    parent
}

fn path_to_root(g: &EmbeddedGraph, parent: &[Option<usize>], mut v: usize) -> Vec<usize> {
    let mut edges = Vec::new();
    while let Some(d) = parent[v] {
        edges.push(d / 2);
        v = g.vertex_of(d);
    }
    edges
}

pub fn cycle_parity_profile(g: &EmbeddedGraph) -> Result<ParityProfile> {
    cycle_parity_profile_from(g, 0)
}

/// As [`cycle_parity_profile`], growing the spanning tree from `root`.
pub fn cycle_parity_profile_from(g: &EmbeddedGraph, root: usize) -> Result<ParityProfile> {
    if root >= g.vertex_count() {
        return Err(Error::OutOfRange(format!("root {root}")));
    }
    if let Some(f) = g.faces().iter().position(|f| f.len() % 2 == 1) {
        return Err(Error::ParityUndefined { face: f, len: g.faces()[f].len() });
    }
    let parent = spanning_tree(g, root);
    let mut is_tree = vec![false; g.edge_count()];
    for d in parent.iter().flatten() {
        is_tree[d / 2] = true;
    }
    let mut basis = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !is_tree[e]) {
        let (a, b) = g.endpoints(e);
        let mut edges = path_to_root(g, &parent, a);
        let mut back = path_to_root(g, &parent, b);
        // drop the shared segment above the meeting point
        while let (Some(x), Some(y)) = (edges.last(), back.last()) {
            if x != y {
                break;
            }
            edges.pop();
            back.pop();
        }
        edges.reverse();
        edges.push(e);
        edges.extend(back);
        let phi = edges.len() % 2 == 1;
        let w1 = edges.iter().filter(|&&x| g.sign(x).is_neg()).count() % 2 == 1;
        basis.push(BasisCycle { cotree_edge: e, edges, phi, w1 });
    }
    let tree_edges = (0..g.edge_count()).filter(|&e| is_tree[e]).collect();
    Ok(ParityProfile { orientable: is_orientable(g), root, tree_edges, basis })
}

/// Φ0 if φ vanishes; Φ3 if φ = w₁ (this also covers genus 1, where the
/// forms Φ1 and Φ3 coincide); otherwise Φ1 for odd and Φ2 for even
/// quadrangulations.
pub fn classify_phi_type(profile: &ParityProfile, parity: Parity) -> Result<PhiType> {
    if profile.orientable {
        return Err(Error::Unsupported("cycle parity types are defined for non-orientable surfaces".into()));
    }
    Ok(if profile.phi_is_zero() {
        PhiType::Phi0
    } else if profile.phi_equals_w1() {
        PhiType::Phi3
    } else if parity.is_odd() {
        PhiType::Phi1
    } else {
        PhiType::Phi2
    })
}

/// Checks that making exactly `negative` negative is a switching of the
/// signature, then that removing those edges leaves a bipartite graph whose
/// classes each removed edge stays inside.
pub fn phi3_certificate(g: &EmbeddedGraph, negative: &[usize]) -> Result<bool> {
    let m = g.edge_count();
    let mut in_set = vec![false; m];
    for &e in negative {
        if e >= m {
            return Err(Error::OutOfRange(format!("edge {e} of {m}")));
        }
        in_set[e] = true;
    }
    let product: Vec<Sign> = (0..m)
        .map(|e| if in_set[e] { g.sign(e).flip() } else { g.sign(e) })
        .collect();
    if balancing_potential(g, &product).is_none() {
        return Err(Error::CertificateMismatch(
            "the listed edges are not the negative edges of any switching of the signature".into(),
        ));
    }
    // class(u) = class(v) exactly on listed edges
    let want: Vec<Sign> = (0..m).map(|e| if in_set[e] { Sign::Pos } else { Sign::Neg }).collect();
    Ok(balancing_potential(g, &want).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{assemble_embedding, FaceListComplex};

    fn square_sphere() -> EmbeddedGraph {
        let names = (0..4).map(|i| i.to_string()).collect();
        let c = FaceListComplex::from_vertex_cycles(names, &[vec![0, 1, 2, 3], vec![0, 1, 2, 3]]).unwrap();
        assemble_embedding(&c).unwrap().graph
    }

    #[test]
    fn sphere_profile() {
        let g = square_sphere();
        let p = cycle_parity_profile(&g).unwrap();
        assert!(p.orientable);
        assert_eq!(p.basis.len(), 1);
        assert!(!p.basis[0].phi);
        assert!(classify_phi_type(&p, Parity::Even).is_err());
        assert!(phi3_certificate(&g, &[]).unwrap());
    }

    #[test]
    fn certificate_rejects_non_switching_set() {
        let g = square_sphere();
        assert!(matches!(phi3_certificate(&g, &[0]), Err(Error::CertificateMismatch(_))));
        // the two edges at a vertex form a switching; both then join equal classes
        let at0: Vec<usize> = g.rotation(0).iter().map(|d| d / 2).collect();
        assert!(phi3_certificate(&g, &at0).unwrap());
    }

    #[test]
    fn fundamental_cycles_close_up() {
        let g = square_sphere();
        let p = cycle_parity_profile_from(&g, 2).unwrap();
        for b in &p.basis {
            let mut deg = vec![0; g.vertex_count()];
            for &e in &b.edges {
                let (x, y) = g.endpoints(e);
                deg[x] += 1;
                deg[y] += 1;
            }
            assert!(deg.iter().all(|d| d % 2 == 0));
        }
    }
}
