//! Polygonal face lists and their assembly into signed rotation systems.
//!
//! A face is a cyclic list of sides; side `i` leaves vertex `from` along edge
//! `edge` and arrives at the `from` of side `i + 1`. Every edge id must occur on
//! exactly two sides. Assembly reads the rotation at each vertex off the link
//! (the cycle of corners around it) and derives edge signs from how the face
//! orientations meet, so any gluing of polygons into a closed surface can be
//! expressed without choosing signs by hand.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::surface::{EmbeddedGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub from: usize,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceListComplex {
    pub names: Vec<String>,
    pub faces: Vec<Vec<Side>>,
}

/// Result of assembly: the map, plus the traced face index of every input face.
#[derive(Debug, Clone)]
pub struct Assembled {
    pub graph: EmbeddedGraph,
    pub face_of_input: Vec<usize>,
}

impl FaceListComplex {
    /// Faces given as vertex cycles; each unordered vertex pair must occur on
    /// exactly two sides and becomes one edge (numbered by first occurrence).
    pub fn from_vertex_cycles(names: Vec<String>, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut ids: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut next = 0;
        let mut faces = Vec::with_capacity(cycles.len());
        for cyc in cycles {
            let mut face = Vec::with_capacity(cyc.len());
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                let key = (a.min(b), a.max(b));
                let entry = ids.entry(key).or_insert_with(|| {
                    next += 1;
                    (next - 1, 0)
                });
                entry.1 += 1;
                face.push(Side { from: a, edge: entry.0 });
            }
            faces.push(face);
        }
        if let Some((&(a, b), &(_, k))) = ids.iter().find(|(_, &(_, k))| k != 2) {
            return Err(Error::Assembly {
                vertex: names.get(a).cloned().unwrap_or_default(),
                msg: format!("vertex pair ({}, {}) lies on {k} face sides", a, b),
            });
        }
        Ok(FaceListComplex { names, faces })
    }

    /// The facial walks of an existing map, using its edge numbering.
    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        let faces = g
            .faces()
            .iter()
            .map(|f| {
                f.slots()
                    .iter()
                    .map(|s| Side { from: g.vertex_of(s.dart), edge: s.edge() })
                    .collect()
            })
            .collect();
        FaceListComplex { names: g.names().to_vec(), faces }
    }

    pub fn edge_count(&self) -> usize {
        self.faces
            .iter()
            .flatten()
            .map(|s| s.edge + 1)
            .max()
            .unwrap_or(0)
    }

    /// Renumbers edge ids to `0..E`, keeping their relative order.
    pub fn compact_edges(&mut self) {
        let mut ids: Vec<usize> = self.faces.iter().flatten().map(|s| s.edge).collect();
        ids.sort_unstable();
        ids.dedup();
        let map: HashMap<usize, usize> = ids.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
        for s in self.faces.iter_mut().flatten() {
            s.edge = map[&s.edge];
        }
    }

    /// Drops vertices that no face mentions, renumbering the rest in order.
    /// Returns the old index of every surviving vertex.
    pub fn compact_vertices(&mut self) -> Vec<usize> {
        let mut used = vec![false; self.names.len()];
        for s in self.faces.iter().flatten() {
            used[s.from] = true;
        }
        let kept: Vec<usize> = (0..self.names.len()).filter(|&v| used[v]).collect();
        let mut map = vec![usize::MAX; self.names.len()];
        for (i, &v) in kept.iter().enumerate() {
            map[v] = i;
        }
        for s in self.faces.iter_mut().flatten() {
            s.from = map[s.from];
        }
        self.names = kept.iter().map(|&v| self.names[v].clone()).collect();
        kept
    }
}

#[derive(Clone, Copy)]
struct Corner {
    arrive: usize,
    leave: usize,
}

/// Glues the faces into a surface. Fails with the offending vertex when an
/// edge is not on exactly two sides, an edge is a loop, or a vertex link is
/// not a single cycle (the faces around it do not form a disk).
pub fn assemble_embedding(c: &FaceListComplex) -> Result<Assembled> {
    let n = c.names.len();
    let ne = c.edge_count();
    let vname = |v: usize| c.names.get(v).cloned().unwrap_or_else(|| v.to_string());

    let mut ends: Vec<Option<(usize, usize)>> = vec![None; ne];
    let mut uses = vec![0usize; ne];
    for face in &c.faces {
        if face.is_empty() {
            return Err(Error::Input("empty face".into()));
        }
        for i in 0..face.len() {
            let (a, b, e) = (face[i].from, face[(i + 1) % face.len()].from, face[i].edge);
            if a >= n || b >= n {
                return Err(Error::Input(format!("vertex index {} out of range", a.max(b))));
            }
            if a == b {
                return Err(Error::Loop(vname(a)));
            }
            uses[e] += 1;
            match ends[e] {
                None => ends[e] = Some((a, b)),
                Some((x, y)) if (x, y) == (a, b) || (x, y) == (b, a) => {}
                Some((x, y)) => {
                    return Err(Error::Assembly {
                        vertex: vname(a),
                        msg: format!(
                            "edge {e} joins {}-{} on one side and {}-{} on the other",
                            vname(x),
                            vname(y),
                            vname(a),
                            vname(b)
                        ),
                    })
                }
            }
        }
    }
    for e in 0..ne {
        if uses[e] != 2 {
            let v = ends[e].map(|(a, _)| vname(a)).unwrap_or_default();
            return Err(Error::Assembly {
                vertex: v,
                msg: format!("edge {e} lies on {} face sides", uses[e]),
            });
        }
    }
    let ends: Vec<(usize, usize)> = ends.into_iter().map(Option::unwrap).collect();
    let dart_at = |e: usize, v: usize| if ends[e].0 == v { 2 * e } else { 2 * e + 1 };

    // corners, indexed by (face, position) flattened
    let mut corner_base = Vec::with_capacity(c.faces.len());
    let mut corners = Vec::new();
    let mut incidences: Vec<Vec<usize>> = vec![Vec::with_capacity(2); 2 * ne];
    for face in &c.faces {
        corner_base.push(corners.len());
        let len = face.len();
        for i in 0..len {
            let v = face[i].from;
            let incoming = face[(i + len - 1) % len].edge;
            let corner = Corner { arrive: dart_at(incoming, v), leave: dart_at(face[i].edge, v) };
            let id = corners.len();
            incidences[corner.arrive].push(id);
            incidences[corner.leave].push(id);
            corners.push(corner);
        }
    }

    let mut darts_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for d in 0..2 * ne {
        let (a, b) = ends[d / 2];
        darts_at[if d % 2 == 0 { a } else { b }].push(d);
    }

    let mut tau = vec![Sign::Pos; corners.len()];
    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let Some(&d0) = darts_at[v].first() else {
            return Err(Error::Assembly { vertex: vname(v), msg: "vertex lies on no face".into() });
        };
        let mut rotation = Vec::with_capacity(darts_at[v].len());
        let mut d = d0;
        let mut corner = incidences[d0][0];
        loop {
            rotation.push(d);
            let cr = corners[corner];
            let (next, t) = if cr.arrive == d { (cr.leave, Sign::Pos) } else { (cr.arrive, Sign::Neg) };
            tau[corner] = t;
            if next == d0 {
                break;
            }
            if rotation.len() > darts_at[v].len() {
                return Err(Error::Assembly { vertex: vname(v), msg: "link does not close".into() });
            }
            let inc = &incidences[next];
            corner = if inc[0] == corner { inc[1] } else { inc[0] };
            d = next;
        }
        if rotation.len() != darts_at[v].len() {
            return Err(Error::Assembly {
                vertex: vname(v),
                msg: format!(
                    "faces around the vertex form no disk: link cycle covers {} of {} edge ends",
                    rotation.len(),
                    darts_at[v].len()
                ),
            });
        }
        rotations.push(rotation);
    }

    let mut signs: Vec<Option<Sign>> = vec![None; ne];
    for (f, face) in c.faces.iter().enumerate() {
        let len = face.len();
        for i in 0..len {
            let e = face[i].edge;
            let s = tau[corner_base[f] + i] * tau[corner_base[f] + (i + 1) % len];
            match signs[e] {
                None => signs[e] = Some(s),
                Some(t) if t == s => {}
                Some(_) => {
                    return Err(Error::InternalConsistency(format!(
                        "edge {e} receives conflicting signs from its two sides"
                    )))
                }
            }
        }
    }
    let signs = signs.into_iter().map(Option::unwrap).collect();
    let graph = EmbeddedGraph::from_rotations(c.names.clone(), rotations, signs)?;

    let mut by_key: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
    for (i, face) in c.faces.iter().enumerate() {
        let seq: Vec<(usize, usize)> = face.iter().map(|s| (s.from, s.edge)).collect();
        by_key.entry(canonical_walk(&seq)).or_default().push(i);
    }
    let mut face_of_input = vec![usize::MAX; c.faces.len()];
    for (fi, walk) in graph.faces().iter().enumerate() {
        let seq: Vec<(usize, usize)> =
            walk.slots().iter().map(|s| (graph.vertex_of(s.dart), s.edge())).collect();
        let input = by_key
            .get_mut(&canonical_walk(&seq))
            .and_then(Vec::pop)
            .ok_or_else(|| {
                Error::InternalConsistency(format!("traced face {fi} is not in the input face list"))
            })?;
        face_of_input[input] = fi;
    }
    if face_of_input.contains(&usize::MAX) {
        return Err(Error::InternalConsistency("an input face was not traced".into()));
    }
    Ok(Assembled { graph, face_of_input })
}

/// Lexicographically least representative of a closed walk under rotation
/// and reversal. Entries are `(vertex, edge leaving it)`.
pub fn canonical_walk(seq: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let k = seq.len();
    let mut rev = Vec::with_capacity(k);
    for i in 0..k {
        // reversed walk leaves seq[-i].vertex along the edge that arrived there
        let v = seq[(k - i) % k].0;
        let e = seq[(2 * k - i - 1) % k].1;
        rev.push((v, e));
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    for base in [seq, rev.as_slice()] {
        for r in 0..k {
            let cand: Vec<_> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}
