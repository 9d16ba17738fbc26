//! Graphs embedded on closed surfaces.

mod format;
mod map;

use std::fmt;

pub use format::{parse_embedding, write_embedding};
pub use map::{EmbeddedGraph, FaceWalk, Sign, Slot};

use crate::constructions::{assemble_embedding, FaceListComplex, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceClass {
    pub orientable: bool,
    pub euler_characteristic: i64,
    pub genus: u32,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable { "orientable" } else { "non-orientable" };
        write!(f, "{kind} genus {} (euler characteristic {})", self.genus, self.euler_characteristic)
    }
}

/// Vertex potentials `s` with `s(u) * s(v) * sign(e) = +` on every edge, if
/// the given signature is balanced (switching-equivalent to all-positive).
pub fn balancing_potential(g: &EmbeddedGraph, signs: &[Sign]) -> Option<Vec<Sign>> {
    let n = g.vertex_count();
    let mut pot: Vec<Option<Sign>> = vec![None; n];
    pot[0] = Some(Sign::Pos);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let pv = pot[v].unwrap();
        for &d in g.rotation(v) {
            let u = g.far_end(d);
            let want = pv * signs[d / 2];
            match pot[u] {
                None => {
                    pot[u] = Some(want);
                    stack.push(u);
                }
                Some(p) if p != want => return None,
                _ => {}
            }
        }
    }
    Some(pot.into_iter().map(Option::unwrap).collect())
}

pub fn is_orientable(g: &EmbeddedGraph) -> bool {
    balancing_potential(g, g.signs()).is_some()
}

/// Euler characteristic, orientability and genus of the surface a map lives on.
pub fn classify_surface(g: &EmbeddedGraph) -> SurfaceClass {
    let chi = g.euler_characteristic();
    let orientable = is_orientable(g);
    let genus = if orientable {
        debug_assert!(chi % 2 == 0 && chi <= 2);
        ((2 - chi) / 2) as u32
    } else {
        debug_assert!(chi <= 1);
        (2 - chi) as u32
    };
    SurfaceClass { orientable, euler_characteristic: chi, genus }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MedialFace {
    /// Surrounds a vertex of the base graph.
    Star(usize),
    /// Sits inside a face of the base graph.
    Cycle(usize),
}

/// The medial map `M(G)`. Medial vertex `k` is base edge `k`; medial edge `d`
/// is the base corner between dart `d` and `rot(d)`.
#[derive(Debug, Clone)]
pub struct MedialGraph {
    pub graph: EmbeddedGraph,
    pub face_tags: Vec<MedialFace>,
}

impl MedialGraph {
    /// Base dart `d` whose corner `(d, rot d)` this medial edge crosses.
    pub fn corner_of_edge(&self, medial_edge: usize) -> usize {
        medial_edge
    }

    pub fn base_edge_of_vertex(&self, medial_vertex: usize) -> usize {
        medial_vertex
    }

    pub fn star_count(&self) -> usize {
        self.face_tags.iter().filter(|t| matches!(t, MedialFace::Star(_))).count()
    }

    pub fn cycle_count(&self) -> usize {
        self.face_tags.iter().filter(|t| matches!(t, MedialFace::Cycle(_))).count()
    }
}

/// Corner key between two consecutive slots of a facial walk.
pub(crate) fn corner_between(from: Slot, to: Slot) -> usize {
    let arrive = from.dart ^ 1;
    match to.eps {
        Sign::Pos => arrive,
        Sign::Neg => to.dart,
    }
}

pub fn medial_graph(g: &EmbeddedGraph) -> Result<MedialGraph> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) < 2) {
        return Err(Error::Unsupported(format!("vertex {} has degree 1", g.name(v))));
    }
    for d in 0..g.dart_count() {
        if d / 2 == g.rot(d) / 2 {
            return Err(Error::Unsupported(format!(
                "loop at {} with consecutive ends gives a medial loop",
                g.name(g.vertex_of(d))
            )));
        }
    }
    let names = (0..g.edge_count()).map(|e| format!("e{e}")).collect();
    let mut faces = Vec::with_capacity(g.vertex_count() + g.face_count());
    let mut tags = Vec::with_capacity(faces.capacity());
    for v in 0..g.vertex_count() {
        faces.push(g.rotation(v).iter().map(|&d| Side { from: d / 2, edge: d }).collect());
        tags.push(MedialFace::Star(v));
    }
    for (fi, f) in g.faces().iter().enumerate() {
        let slots = f.slots();
        let k = slots.len();
        faces.push(
            (0..k)
                .map(|i| Side {
                    from: slots[i].edge(),
                    edge: corner_between(slots[i], slots[(i + 1) % k]),
                })
                .collect(),
        );
        tags.push(MedialFace::Cycle(fi));
    }
    let assembled = assemble_embedding(&FaceListComplex { names, faces })?;
    let mut face_tags = vec![MedialFace::Star(0); assembled.graph.face_count()];
    for (input, &traced) in assembled.face_of_input.iter().enumerate() {
        face_tags[traced] = tags[input];
    }
    Ok(MedialGraph { graph: assembled.graph, face_tags })
}

#[derive(Debug, Clone)]
pub enum DoubleCover {
    Connected(EmbeddedGraph),
    /// The base is orientable, so the cover is two disjoint copies of it.
    AlreadyOrientable,
}

/// Orientation double cover. Vertex `(v, layer)` is numbered `v + layer * V`;
/// layer 1 carries the reversed rotations.
pub fn orientation_double_cover(g: &EmbeddedGraph) -> DoubleCover {
    if is_orientable(g) {
        return DoubleCover::AlreadyOrientable;
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let lift = |d: usize, layer: usize| {
        let e = d / 2;
        if d % 2 == 0 {
            2 * (2 * e + layer)
        } else {
            let base_layer = layer ^ usize::from(g.sign(e).is_neg());
            2 * (2 * e + base_layer) + 1
        }
    };
    let mut names = Vec::with_capacity(2 * n);
    let mut rotations = Vec::with_capacity(2 * n);
    for layer in 0..2 {
        for v in 0..n {
            names.push(format!("{}.{layer}", g.name(v)));
            let mut rot: Vec<usize> = g.rotation(v).iter().map(|&d| lift(d, layer)).collect();
            if layer == 1 {
                rot.reverse();
            }
            rotations.push(rot);
        }
    }
    let cover = EmbeddedGraph::from_rotations(names, rotations, vec![Sign::Pos; 2 * m])
        .expect("cover of a non-orientable map is connected");
    DoubleCover::Connected(cover)
}
