//! The quadrangulations built from subgraphs of `U(m, 3)`: `G0`, `G1`, their
//! diagonal completions, the crosscap family, and `K4` on the projective plane.

use std::collections::BTreeSet;

use super::complex::{assemble_embedding, FaceListComplex};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::localcolor::{build_u, is_local_coloring, is_triangle_pair, Coloring, UVertex};
use crate::quadform::{admissible_crosscap_edges, check_quadrangulation, crosscap_hexagon};
use crate::surface::{classify_surface, EmbeddedGraph, Sign};

/// Simple cycles of length `k`, each listed once: it starts at its smallest
/// vertex and its second vertex is smaller than its last.
pub fn cycles_of_length(g: &SimpleGraph, k: usize) -> Vec<Vec<usize>> {
    fn extend(g: &SimpleGraph, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == k {
            if g.has_edge(last, path[0]) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &u in g.neighbors(last) {
            if u > path[0] && !path.contains(&u) {
                path.push(u);
                extend(g, k, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        extend(g, k, &mut vec![s], &mut out);
    }
    out.sort();
    out
}

/// A quadrangulation-with-hexagons whose vertices are labelled by `U(m, 3)`.
#[derive(Debug, Clone)]
pub struct HexQuad {
    pub graph: EmbeddedGraph,
    pub coloring: Coloring,
    pub labels: Vec<UVertex>,
    /// Quadrilateral faces as vertex cycles.
    pub quads: Vec<Vec<usize>>,
    /// Hexagonal faces as vertex cycles, in the order diagonal choices refer to.
    pub hexagons: Vec<Vec<usize>>,
}

/// A diagonal completion; `diagonals[h]` is the vertex pair added in hexagon `h`.
#[derive(Debug, Clone)]
pub struct DiagonalQuad {
    pub graph: EmbeddedGraph,
    pub coloring: Coloring,
    pub labels: Vec<UVertex>,
    pub diagonals: Vec<(usize, usize)>,
}

fn u_subgraph(m: usize, keep: impl Fn(&UVertex) -> bool) -> Result<HexQuad> {
    let u = build_u(m, 3)?;
    let labels: Vec<UVertex> = u.vertices.iter().filter(|v| keep(v)).cloned().collect();
    let n = labels.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if labels[a].adjacent(&labels[b]) && !is_triangle_pair(&labels[a], &labels[b]) {
                edges.push((a, b));
            }
        }
    }
    let names: Vec<String> = labels.iter().map(|v| v.label(m)).collect();
    let abstract_graph = SimpleGraph::from_edges(names.clone(), edges);
    let color_count = |cyc: &Vec<usize>| cyc.iter().map(|&v| labels[v].color).collect::<BTreeSet<_>>().len();
    let quads = cycles_of_length(&abstract_graph, 4);
    let hexagons: Vec<Vec<usize>> = cycles_of_length(&abstract_graph, 6)
        .into_iter()
        .filter(|c| color_count(c) == 2)
        .collect();
    let all: Vec<Vec<usize>> = quads.iter().chain(&hexagons).cloned().collect();
    let cx = FaceListComplex::from_vertex_cycles(names, &all)?;
    let graph = assemble_embedding(&cx)?.graph;
    let coloring = Coloring::new(labels.iter().map(|v| v.color).collect(), m)?;
    Ok(HexQuad { graph, coloring, labels, quads, hexagons })
}

/// `U(5,3)` without its triangle edges; faces are all 4-cycles and all
/// 2-colored 6-cycles.
pub fn build_g0() -> Result<HexQuad> {
    u_subgraph(5, |_| true)
}

/// Vertices `(i, H)` of `U(6,3)` with exactly one of 1, 2, 3 in `H`, without
/// triangle edges; faces as for `G0`.
pub fn build_g1() -> Result<HexQuad> {
    u_subgraph(6, |v| v.set.iter().filter(|&&c| c <= 3).count() == 1)
}

/// The three main diagonals of a hexagon as sorted vertex pairs, sorted.
pub fn main_diagonals(hex: &[usize]) -> [(usize, usize); 3] {
    let mut d = [0, 1, 2].map(|k| (hex[k].min(hex[k + 3]), hex[k].max(hex[k + 3])));
    d.sort();
    d
}

/// Splits every hexagon by one main diagonal; `choice[h]` indexes
/// [`main_diagonals`] of hexagon `h`.
pub fn add_main_diagonals(base: &HexQuad, choice: &[usize]) -> Result<DiagonalQuad> {
    if choice.len() != base.hexagons.len() {
        return Err(Error::Input(format!(
            "{} diagonal choices for {} hexagons",
            choice.len(),
            base.hexagons.len()
        )));
    }
    let mut cycles = base.quads.clone();
    let mut diagonals = Vec::with_capacity(choice.len());
    for (hex, &k) in base.hexagons.iter().zip(choice) {
        if k > 2 {
            return Err(Error::OutOfRange(format!("diagonal index {k}, expected 0..=2")));
        }
        let (a, b) = main_diagonals(hex)[k];
        let s = hex.iter().position(|&v| v == a).expect("diagonal end on hexagon");
        let h: Vec<usize> = (0..6).map(|i| hex[(s + i) % 6]).collect();
        debug_assert_eq!(h[3], b);
        cycles.push(h[0..4].to_vec());
        cycles.push(vec![h[3], h[4], h[5], h[0]]);
        diagonals.push((a, b));
    }
    let names = base.graph.names().to_vec();
    let cx = FaceListComplex::from_vertex_cycles(names, &cycles)?;
    let graph = assemble_embedding(&cx)?.graph;
    check_quadrangulation(&graph)?;
    Ok(DiagonalQuad { graph, coloring: base.coloring.clone(), labels: base.labels.clone(), diagonals })
}

pub fn canonical_choice(base: &HexQuad) -> Vec<usize> {
    vec![0; base.hexagons.len()]
}

pub fn build_g0_prime() -> Result<DiagonalQuad> {
    let g0 = build_g0()?;
    add_main_diagonals(&g0, &canonical_choice(&g0))
}

pub fn build_g1_prime() -> Result<DiagonalQuad> {
    let g1 = build_g1()?;
    add_main_diagonals(&g1, &canonical_choice(&g1))
}

/// `K4` with each vertex seeing the others in label order, and the first
/// signature (by bitmask) that closes it into three quadrilaterals.
pub fn build_k4_projective() -> Result<(EmbeddedGraph, Coloring)> {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    let dart = |a: usize, b: usize| {
        let e = pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        if a < b {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let rotations: Vec<Vec<usize>> =
        (0..4).map(|v| (0..4).filter(|&u| u != v).map(|u| dart(v, u)).collect()).collect();
    let names: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
    for mask in 0u32..64 {
        let signs = (0..6).map(|e| if mask >> e & 1 == 1 { Sign::Neg } else { Sign::Pos }).collect();
        let g = EmbeddedGraph::from_rotations(names.clone(), rotations.clone(), signs)?;
        if g.face_count() == 3 && g.face_lengths().iter().all(|&l| l == 4) {
            let c = Coloring::from_colors(vec![1, 2, 3, 4])?;
            return Ok((g, c));
        }
    }
    Err(Error::InternalConsistency("no signature embeds K4 with three quadrilaterals".into()))
}

/// `U(m, r)` with every rotation in label order and all signs positive:
/// some orientable embedding, for tooling that needs a map.
pub fn build_u_embedding(m: usize, r: usize) -> Result<(EmbeddedGraph, Coloring)> {
    let u = build_u(m, r)?;
    let g = &u.graph;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut rotations = vec![Vec::new(); g.vertex_count()];
    for (e, &(a, b)) in edges.iter().enumerate() {
        rotations[a].push((b, 2 * e));
        rotations[b].push((a, 2 * e + 1));
    }
    let rotations = rotations
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    let emb = EmbeddedGraph::from_rotations(g.names().to_vec(), rotations, vec![Sign::Pos; edges.len()])?;
    Ok((emb, u.natural_coloring()))
}

/// `k` crosscap steps on a diagonal completion. Steps go first to the added
/// diagonals (in hexagon order), which turns each hexagon into a crosscap
/// carrying all three of its main diagonals; further steps use the
/// lowest-numbered admissible edge.
pub fn build_high_genus_family(base: &DiagonalQuad, k: usize) -> Result<(EmbeddedGraph, Coloring)> {
    let mut g = base.graph.clone();
    let c = base.coloring.clone();
    let genus0 = classify_surface(&g).genus;
    for step in 0..k {
        let admissible = admissible_crosscap_edges(&g, &c);
        let pick = base
            .diagonals
            .get(step)
            .and_then(|&(a, b)| g.edges_between(a, b).into_iter().find(|e| admissible.contains(e)))
            .or_else(|| admissible.first().copied())
            .ok_or_else(|| {
                Error::InternalConsistency(format!("no adjacent 2-colored face pair after {step} crosscaps"))
            })?;
        g = crosscap_hexagon(&g, &c, pick)?.0;
    }
    let s = classify_surface(&g);
    if s.genus != genus0 + k as u32 || s.orientable {
        return Err(Error::InternalConsistency(format!("family member has {s}")));
    }
    if !is_local_coloring(&g.underlying(), &c, 3) {
        return Err(Error::InternalConsistency("family coloring is not local 3".into()));
    }
    Ok((g, c))
}

/// Lifts a permutation of colors (`pi[c - 1]` is the image of `c`) to the
/// labelled vertices, if it maps the vertex set to itself.
pub fn lift_color_permutation(labels: &[UVertex], pi: &[usize]) -> Option<Vec<usize>> {
    labels
        .iter()
        .map(|v| {
            let mut set: Vec<usize> = v.set.iter().map(|&c| pi[c - 1]).collect();
            set.sort_unstable();
            let image = UVertex { color: pi[v.color - 1], set };
            labels.iter().position(|w| *w == image)
        })
        .collect()
}

/// Orbit of edge `(a, b)` of `g` under the group generated by `perms`.
pub fn edge_orbit(g: &SimpleGraph, edge: (usize, usize), perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let mut seen = BTreeSet::from([norm(edge)]);
    let mut stack = vec![norm(edge)];
    while let Some((a, b)) = stack.pop() {
        for p in perms {
            let img = norm((p[a], p[b]));
            if g.has_edge(img.0, img.1) && seen.insert(img) {
                stack.push(img);
            }
        }
    }
    seen.into_iter().collect()
}
