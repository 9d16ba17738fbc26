//! Combinatorial maps with edge signatures.
//!
//! A map has `2E` darts. Dart `d` belongs to edge `d / 2` and its mate is
//! `d ^ 1`, so the edge pairing is implicit and always a fixed-point-free
//! involution. Each vertex carries a cyclic dart order (its rotation) and each
//! edge a sign; negative edges reverse the local orientation when a walk
//! crosses them.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }

    fn index(self) -> usize {
        match self {
            Sign::Pos => 0,
            Sign::Neg => 1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => write!(f, "+"),
            Sign::Neg => write!(f, "-"),
        }
    }
}

/// One position on a facial walk: the walk leaves `vertex_of(dart)` along
/// `dart` while its local orientation there is `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub dart: usize,
    pub eps: Sign,
}

impl Slot {
    pub fn edge(&self) -> usize {
        self.dart / 2
    }
}

/// A facial walk as a cyclic sequence of slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    slots: Vec<Slot>,
}

impl FaceWalk {
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Vertices in walk order (the tail of every slot).
    pub fn vertices(&self, g: &EmbeddedGraph) -> Vec<usize> {
        self.slots.iter().map(|s| g.vertex_of(s.dart)).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.slots.iter().map(Slot::edge).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    names: Vec<String>,
    vert: Vec<usize>,
    rot: Vec<usize>,
    rot_inv: Vec<usize>,
    sign: Vec<Sign>,
    rotations: Vec<Vec<usize>>,
    faces: Vec<FaceWalk>,
}

impl EmbeddedGraph {
    /// Builds a map from per-vertex cyclic dart orders. Dart `d` belongs to
    /// edge `d / 2`, so `signs.len()` fixes the dart count at `2 * signs.len()`.
    pub fn from_rotations(
        names: Vec<String>,
        rotations: Vec<Vec<usize>>,
        signs: Vec<Sign>,
    ) -> Result<Self> {
        let n = rotations.len();
        if names.len() != n {
            return Err(Error::Structural(format!(
                "{} names for {} vertices",
                names.len(),
                n
            )));
        }
        if n == 0 {
            return Err(Error::Structural("empty map".into()));
        }
        let ndarts = 2 * signs.len();
        let mut vert = vec![usize::MAX; ndarts];
        let mut rot = vec![usize::MAX; ndarts];
        for (v, cyc) in rotations.iter().enumerate() {
            if cyc.is_empty() {
                return Err(Error::Disconnected(format!("isolated vertex {}", names[v])));
            }
            for (k, &d) in cyc.iter().enumerate() {
                if d >= ndarts {
                    return Err(Error::Structural(format!("dart {d} out of range")));
                }
                if vert[d] != usize::MAX {
                    return Err(Error::Structural(format!("dart {d} appears twice in rotations")));
                }
                vert[d] = v;
                rot[d] = cyc[(k + 1) % cyc.len()];
            }
        }
        if let Some(d) = vert.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Structural(format!("dart {d} missing from rotations")));
        }
        let mut rot_inv = vec![0; ndarts];
        for d in 0..ndarts {
            rot_inv[rot[d]] = d;
        }

        // connectivity over vertices
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &rotations[v] {
                let u = vert[d ^ 1];
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Disconnected(format!(
                "vertex {} unreachable from {}",
                names[v], names[0]
            )));
        }

        let faces = trace(&rot, &rot_inv, &signs)?;
        Ok(EmbeddedGraph {
            names,
            vert,
            rot,
            rot_inv,
            sign: signs,
            rotations,
            faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sign.len()
    }

    pub fn dart_count(&self) -> usize {
        self.vert.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find_vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vert[d]
    }

    pub fn rot(&self, d: usize) -> usize {
        self.rot[d]
    }

    pub fn rot_inv(&self, d: usize) -> usize {
        self.rot_inv[d]
    }

    /// Rotation step in direction `eps`.
    pub fn rot_dir(&self, d: usize, eps: Sign) -> usize {
        match eps {
            Sign::Pos => self.rot[d],
            Sign::Neg => self.rot_inv[d],
        }
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.sign[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.sign
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vert[2 * e], self.vert[2 * e + 1])
    }

    /// The vertex across the edge of dart `d`.
    pub fn far_end(&self, d: usize) -> usize {
        self.vert[d ^ 1]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    pub fn first_loop(&self) -> Option<usize> {
        (0..self.edge_count()).find(|&e| self.is_loop(e))
    }

    /// Cached facial walks, in tracing order.
    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    /// Re-traces the facial walks from the rotation system.
    pub fn trace_faces(&self) -> Vec<FaceWalk> {
        trace(&self.rot, &self.rot_inv, &self.sign).expect("validated at construction")
    }

    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(FaceWalk::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Neighbor list with multiplicity, in rotation order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rotations[v].iter().map(|&d| self.far_end(d)).collect()
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = (0..self.edge_count())
            .map(|e| {
                let (a, b) = self.endpoints(e);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    /// Edges joining `a` and `b` (in either direction).
    pub fn edges_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| {
                let (x, y) = self.endpoints(e);
                (x == a && y == b) || (x == b && y == a)
            })
            .collect()
    }

    /// Underlying abstract graph (parallel edges merged).
    pub fn underlying(&self) -> SimpleGraph {
        let edges = (0..self.edge_count()).map(|e| self.endpoints(e));
        SimpleGraph::from_edges(self.names.clone(), edges)
    }

    /// Local switching at `v`: reverse its rotation and flip the sign of every
    /// incident edge end (a loop at `v` is flipped twice and keeps its sign).
    pub fn switch_vertex(&self, v: usize) -> EmbeddedGraph {
        let mut rotations = self.rotations.clone();
        rotations[v].reverse();
        let mut signs = self.sign.clone();
        for &d in &self.rotations[v] {
            signs[d / 2] = signs[d / 2].flip();
        }
        EmbeddedGraph::from_rotations(self.names.clone(), rotations, signs)
            .expect("switching preserves validity")
    }

    /// Renames vertices and edges: vertex `v` becomes `vperm[v]`, edge `e`
    /// becomes `eperm[e]`, and `flip[e]` swaps which dart of `e` is even.
    pub fn relabeled(&self, vperm: &[usize], eperm: &[usize], flip: &[bool]) -> Result<EmbeddedGraph> {
        let n = self.vertex_count();
        let m = self.edge_count();
        if vperm.len() != n || eperm.len() != m || flip.len() != m {
            return Err(Error::Input("relabeling size mismatch".into()));
        }
        let map_dart = |d: usize| 2 * eperm[d / 2] + ((d & 1) ^ usize::from(flip[d / 2]));
        let mut names = vec![String::new(); n];
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            names[vperm[v]] = self.names[v].clone();
            rotations[vperm[v]] = self.rotations[v].iter().map(|&d| map_dart(d)).collect();
        }
        let mut signs = vec![Sign::Pos; m];
        for e in 0..m {
            signs[eperm[e]] = self.sign[e];
        }
        EmbeddedGraph::from_rotations(names, rotations, signs)
    }
}

/// Traces all facial walks. Every (dart, orientation) state is visited exactly
/// once, either by a face in its traced direction or by its reversal.
fn trace(rot: &[usize], rot_inv: &[usize], sign: &[Sign]) -> Result<Vec<FaceWalk>> {
    let nd = rot.len();
    let mut visited = vec![[false; 2]; nd];
    let mut faces = Vec::new();
    for start_eps in [Sign::Pos, Sign::Neg] {
        for start in 0..nd {
            if visited[start][start_eps.index()] {
                continue;
            }
            let mut slots = Vec::new();
            let mut reverse = Vec::new();
            let (mut d, mut eps) = (start, start_eps);
            loop {
                if visited[d][eps.index()] {
                    return Err(Error::Structural(format!("face tracing revisits dart {d}")));
                }
                visited[d][eps.index()] = true;
                slots.push(Slot { dart: d, eps });
                let mate = d ^ 1;
                let arrive = eps * sign[d / 2];
                reverse.push((mate, arrive.flip()));
                d = match arrive {
                    Sign::Pos => rot[mate],
                    Sign::Neg => rot_inv[mate],
                };
                eps = arrive;
                if d == start && eps == start_eps {
                    break;
                }
            }
            for (rd, re) in reverse {
                if visited[rd][re.index()] {
                    return Err(Error::Structural(format!(
                        "face through dart {start} is its own reversal"
                    )));
                }
                visited[rd][re.index()] = true;
            }
            faces.push(FaceWalk { slots });
        }
    }
    Ok(faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn single_edge_on_sphere() {
        let g = EmbeddedGraph::from_rotations(names(2), vec![vec![0], vec![1]], vec![Sign::Pos]).unwrap();
        assert_eq!(g.face_lengths(), vec![2]);
        assert_eq!(g.euler_characteristic(), 2);
    }

    #[test]
    fn negative_loop_is_projective_plane() {
        let g = EmbeddedGraph::from_rotations(names(1), vec![vec![0, 1]], vec![Sign::Neg]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face_lengths(), vec![2]);
        assert_eq!(g.euler_characteristic(), 1);
    }

    #[test]
    fn rejects_duplicate_and_missing_darts() {
        let dup = EmbeddedGraph::from_rotations(names(2), vec![vec![0, 0], vec![1]], vec![Sign::Pos]);
        assert!(matches!(dup, Err(Error::Structural(_))));
        let missing = EmbeddedGraph::from_rotations(names(2), vec![vec![0], vec![]], vec![Sign::Pos]);
        assert!(missing.is_err());
    }

    #[test]
    fn rejects_disconnected() {
        let g = EmbeddedGraph::from_rotations(
            names(4),
            vec![vec![0], vec![1], vec![2], vec![3]],
            vec![Sign::Pos, Sign::Pos],
        );
        assert!(matches!(g, Err(Error::Disconnected(_))));
    }

    #[test]
    fn switching_keeps_face_lengths() {
        // theta graph: two vertices, three parallel edges
        let g = EmbeddedGraph::from_rotations(
            names(2),
            vec![vec![0, 2, 4], vec![1, 5, 3]],
            vec![Sign::Pos, Sign::Neg, Sign::Pos],
        )
        .unwrap();
        let mut a = g.face_lengths();
        let mut b = g.switch_vertex(0).face_lengths();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
