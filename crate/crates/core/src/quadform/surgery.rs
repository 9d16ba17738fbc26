//! Surgeries on quadrangulations. Each one edits the face list and reassembles
//! it, so the result is checked for being a closed surface every time.

use std::collections::HashSet;

use super::parity::check_quadrangulation;
use crate::constructions::{assemble_embedding, FaceListComplex, Side};
use crate::error::{Error, Result};
use crate::localcolor::Coloring;
use crate::surface::{classify_surface, EmbeddedGraph};

fn rotate(face: &[Side], start: usize) -> Vec<Side> {
    let k = face.len();
    (0..k).map(|i| face[(start + i) % k]).collect()
}

/// The same boundary walked the other way round.
fn reversed(face: &[Side]) -> Vec<Side> {
    let k = face.len();
    (0..k)
        .map(|i| Side { from: face[(k - i) % k].from, edge: face[(2 * k - i - 1) % k].edge })
        .collect()
}

/// `(face, position)` of the two sides carrying edge `e`.
fn sides_of(cx: &FaceListComplex, e: usize) -> Vec<(usize, usize)> {
    cx.faces
        .iter()
        .enumerate()
        .flat_map(|(f, face)| face.iter().enumerate().map(move |(i, s)| (f, i, s.edge)))
        .filter(|&(_, _, x)| x == e)
        .map(|(f, i, _)| (f, i))
        .collect()
}

/// Edges whose two sides lie on distinct quadrilaterals that together show
/// only two colors.
pub fn admissible_crosscap_edges(g: &EmbeddedGraph, c: &Coloring) -> Vec<usize> {
    (0..g.edge_count()).filter(|&e| hexagon_around(g, c, e).is_ok()).collect()
}

/// Hexagon vertices `h0..h5` and boundary edges around edge `e`, with the
/// first face traversing `e` from `h3` to `h0`.
fn hexagon_around(g: &EmbeddedGraph, c: &Coloring, e: usize) -> Result<(Vec<usize>, Vec<usize>, [usize; 2])> {
    if e >= g.edge_count() {
        return Err(Error::OutOfRange(format!("edge {e} of {}", g.edge_count())));
    }
    let cx = FaceListComplex::from_graph(g);
    let holders = sides_of(&cx, e);
    let [(f1, p1), (f2, p2)] = holders[..] else {
        return Err(Error::Structural(format!("edge {e} lies on {} sides", holders.len())));
    };
    if f1 == f2 {
        return Err(Error::SurgeryRejected(format!("edge {e} lies twice on face {f1}")));
    }
    if cx.faces[f1].len() != 4 || cx.faces[f2].len() != 4 {
        return Err(Error::SurgeryRejected(format!("faces at edge {e} are not quadrilaterals")));
    }
    let a = rotate(&cx.faces[f1], p1 + 1);
    let mut b = rotate(&cx.faces[f2], p2 + 1);
    if b[3].from == a[3].from {
        b = reversed(&b);
        let p = b.iter().position(|s| s.edge == e).expect("edge survives reversal");
        b = rotate(&b, p + 1);
    }
    let hex = vec![a[0].from, a[1].from, a[2].from, a[3].from, b[1].from, b[2].from];
    let edges = vec![a[0].edge, a[1].edge, a[2].edge, b[0].edge, b[1].edge, b[2].edge];
    let colors: HashSet<usize> = hex.iter().map(|&v| c.get(v)).collect();
    if colors.len() != 2 {
        return Err(Error::SurgeryRejected(format!(
            "faces at edge {e} show {} colors, need exactly 2",
            colors.len()
        )));
    }
    Ok((hex, edges, [f1, f2]))
}

/// Removes `shared_edge`, leaving a 2-colored hexagon, and closes it with a
/// crosscap crossed by the three main diagonals. The hexagon becomes three
/// quadrilaterals and the non-orientable genus grows by one.
pub fn crosscap_hexagon(g: &EmbeddedGraph, c: &Coloring, shared_edge: usize) -> Result<(EmbeddedGraph, Coloring)> {
    check_quadrangulation(g)?;
    let (h, ed, [f1, f2]) = hexagon_around(g, c, shared_edge)?;
    let mut cx = FaceListComplex::from_graph(g);
    let n = cx.edge_count();
    let d = [n, n + 1, n + 2];
    for f in [f1.max(f2), f1.min(f2)] {
        cx.faces.remove(f);
    }
    let side = |from, edge| Side { from, edge };
    cx.faces.push(vec![side(h[0], ed[0]), side(h[1], d[1]), side(h[4], ed[3]), side(h[3], d[0])]);
    cx.faces.push(vec![side(h[1], ed[1]), side(h[2], d[2]), side(h[5], ed[4]), side(h[4], d[1])]);
    cx.faces.push(vec![side(h[2], ed[2]), side(h[3], d[0]), side(h[0], ed[5]), side(h[5], d[2])]);
    cx.compact_edges();
    let out = assemble_embedding(&cx)?.graph;

    let before = classify_surface(g);
    let after = classify_surface(&out);
    if after.euler_characteristic != before.euler_characteristic - 1
        || after.orientable
        || out.edge_count() != g.edge_count() + 2
        || out.face_count() != g.face_count() + 1
    {
        return Err(Error::InternalConsistency(format!(
            "crosscap produced {after} from {before}"
        )));
    }
    check_quadrangulation(&out)?;
    Ok((out, c.clone()))
}

fn fresh_name(taken: &mut HashSet<String>, base: String) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

/// Each edge cut into three, each face into a 3×3 grid. Also returns, for
/// every new vertex, the old vertex it folds onto; this fold is a graph
/// homomorphism, so pulling back a coloring keeps it proper and local.
pub fn refine_3x3_map(g: &EmbeddedGraph) -> Result<(EmbeddedGraph, Vec<usize>)> {
    check_quadrangulation(g)?;
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let mut names: Vec<String> = g.names().to_vec();
    let mut origin: Vec<usize> = (0..nv).collect();
    // edge e from u = vertex_of(2e) to v: points u, sub(e,0), sub(e,1), v
    for e in 0..ne {
        let (u, v) = g.endpoints(e);
        for (k, fold) in [(1, v), (2, u)] {
            names.push(fresh_name(&mut taken, format!("e{e}.{k}")));
            origin.push(fold);
        }
    }
    let sub = |e: usize, k: usize| nv + 2 * e + k;
    let mut cycles = Vec::with_capacity(9 * g.face_count());
    for (f, walk) in g.faces().iter().enumerate() {
        let corners = walk.vertices(g);
        let mut grid = [[usize::MAX; 4]; 4];
        // side i runs from corner i to corner i+1 along these grid cells
        let paths: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(3, 0), (3, 1), (3, 2), (3, 3)],
            [(3, 3), (2, 3), (1, 3), (0, 3)],
            [(0, 3), (0, 2), (0, 1), (0, 0)],
        ];
        for (i, slot) in walk.slots().iter().enumerate() {
            let e = slot.edge();
            let inner = if slot.dart % 2 == 0 { [sub(e, 0), sub(e, 1)] } else { [sub(e, 1), sub(e, 0)] };
            let path = paths[i];
            grid[path[0].0][path[0].1] = corners[i];
            grid[path[1].0][path[1].1] = inner[0];
            grid[path[2].0][path[2].1] = inner[1];
        }
        for (i, j) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            grid[i][j] = names.len();
            names.push(fresh_name(&mut taken, format!("f{f}.{i}{j}")));
            let (fi, fj) = (3 * (i % 2), 3 * (j % 2));
            let corner = paths.iter().position(|p| p[0] == (fi, fj)).expect("grid corner");
            origin.push(corners[corner]);
        }
        for i in 0..3 {
            for j in 0..3 {
                cycles.push(vec![grid[i][j], grid[i + 1][j], grid[i + 1][j + 1], grid[i][j + 1]]);
            }
        }
    }
    let cx = FaceListComplex::from_vertex_cycles(names, &cycles)?;
    let out = assemble_embedding(&cx)?.graph;
    if out.euler_characteristic() != g.euler_characteristic() {
        return Err(Error::InternalConsistency("refinement changed the Euler characteristic".into()));
    }
    Ok((out, origin))
}

pub fn refine_3x3(g: &EmbeddedGraph, c: &Coloring) -> Result<(EmbeddedGraph, Coloring)> {
    if c.len() != g.vertex_count() {
        return Err(Error::Coloring("coloring does not cover the graph".into()));
    }
    let (out, origin) = refine_3x3_map(g)?;
    let colors = origin.iter().map(|&v| c.get(v)).collect();
    Ok((out, Coloring::new(colors, c.m())?))
}

/// Cuts out face `xyzt` and glues `x` to `z` (and `xy` to `zy`, `xt` to
/// `zt`), where `x` and `z` are the first opposite pair of equal color.
/// The surface is unchanged; `x` disappears into `z`.
pub fn identify_face_diagonal(g: &EmbeddedGraph, c: &Coloring, face: usize) -> Result<(EmbeddedGraph, Coloring)> {
    check_quadrangulation(g)?;
    if face >= g.face_count() {
        return Err(Error::OutOfRange(format!("face {face} of {}", g.face_count())));
    }
    let corners = g.faces()[face].vertices(g);
    let distinct: HashSet<usize> = corners.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(Error::Unsupported(format!("face {face} repeats a vertex")));
    }
    let start = if c.get(corners[0]) == c.get(corners[2]) {
        0
    } else if c.get(corners[1]) == c.get(corners[3]) {
        1
    } else {
        return Err(Error::SurgeryRejected(format!("face {face} has no equally colored diagonal")));
    };
    let mut cx = FaceListComplex::from_graph(g);
    let sides = rotate(&cx.faces.remove(face), start);
    let (x, z) = (sides[0].from, sides[2].from);
    let (e_xy, e_yz, e_zt, e_tx) = (sides[0].edge, sides[1].edge, sides[2].edge, sides[3].edge);
    if !g.edges_between(x, z).is_empty() {
        return Err(Error::SurgeryRejected(format!(
            "{} and {} are adjacent; identifying them makes a loop",
            g.name(x),
            g.name(z)
        )));
    }
    for s in cx.faces.iter_mut().flatten() {
        if s.from == x {
            s.from = z;
        }
        if s.edge == e_xy {
            s.edge = e_yz;
        } else if s.edge == e_tx {
            s.edge = e_zt;
        }
    }
    let kept = cx.compact_vertices();
    cx.compact_edges();
    let out = assemble_embedding(&cx)?.graph;
    if classify_surface(&out) != classify_surface(g) {
        return Err(Error::InternalConsistency("identification changed the surface".into()));
    }
    let colors = kept.iter().map(|&v| c.get(v)).collect();
    Ok((out, Coloring::new(colors, c.m())?))
}
