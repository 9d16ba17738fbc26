//! Line-oriented text format for embedded graphs.
//!
//! ```text
//! # comment
//! vertex <vid> : <dart> <dart> ...      cyclic rotation order
//! edge <eid> : <dartA> <dartB> <+|->
//! color <vid> <int>                     optional, all or none
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use super::{EmbeddedGraph, Sign};
use crate::error::{Error, Result};
use crate::localcolor::Coloring;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_embedding(text: &str) -> Result<(EmbeddedGraph, Option<Coloring>)> {
    let mut names: Vec<String> = Vec::new();
    let mut name_index: HashMap<String, usize> = HashMap::new();
    let mut raw_rotations: Vec<Vec<u64>> = Vec::new();
    let mut raw_edges: Vec<(u64, u64, Sign, usize)> = Vec::new();
    let mut edge_ids: HashSet<String> = HashSet::new();
    let mut colors: Vec<(String, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                if tokens.len() < 4 || tokens[2] != ":" {
                    return Err(perr(line_no, "expected `vertex <vid> : <dart> ...`"));
                }
                let name = tokens[1].to_string();
                if name_index.contains_key(&name) {
                    return Err(perr(line_no, format!("duplicate vertex `{name}`")));
                }
                let darts = tokens[3..]
                    .iter()
                    .map(|t| t.parse::<u64>().map_err(|_| perr(line_no, format!("bad dart `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                name_index.insert(name.clone(), names.len());
                names.push(name);
                raw_rotations.push(darts);
            }
            "edge" => {
                if tokens.len() != 6 || tokens[2] != ":" {
                    return Err(perr(line_no, "expected `edge <eid> : <dartA> <dartB> <+|->`"));
                }
                if !edge_ids.insert(tokens[1].to_string()) {
                    return Err(perr(line_no, format!("duplicate edge `{}`", tokens[1])));
                }
                let a = tokens[3].parse::<u64>().map_err(|_| perr(line_no, "bad dart"))?;
                let b = tokens[4].parse::<u64>().map_err(|_| perr(line_no, "bad dart"))?;
                let s = match tokens[5] {
                    "+" => Sign::Pos,
                    "-" => Sign::Neg,
                    t => return Err(perr(line_no, format!("bad sign `{t}`"))),
                };
                if a == b {
                    return Err(perr(line_no, "edge pairs a dart with itself"));
                }
                raw_edges.push((a, b, s, line_no));
            }
            "color" => {
                if tokens.len() != 3 {
                    return Err(perr(line_no, "expected `color <vid> <int>`"));
                }
                let c = tokens[2]
                    .parse::<usize>()
                    .map_err(|_| perr(line_no, format!("bad color `{}`", tokens[2])))?;
                colors.push((tokens[1].to_string(), c, line_no));
            }
            other => return Err(perr(line_no, format!("unknown directive `{other}`"))),
        }
    }
    if names.is_empty() {
        return Err(perr(0, "no vertices"));
    }

    let mut dense: HashMap<u64, usize> = HashMap::new();
    let mut signs = Vec::with_capacity(raw_edges.len());
    for (k, &(a, b, s, line_no)) in raw_edges.iter().enumerate() {
        for (dart, slot) in [(a, 2 * k), (b, 2 * k + 1)] {
            if dense.insert(dart, slot).is_some() {
                return Err(perr(line_no, format!("dart {dart} paired twice (pairing not an involution)")));
            }
        }
        signs.push(s);
    }
    let mut seen = HashSet::new();
    let mut rotations = Vec::with_capacity(raw_rotations.len());
    for (v, darts) in raw_rotations.iter().enumerate() {
        let mut rot = Vec::with_capacity(darts.len());
        for d in darts {
            if !seen.insert(*d) {
                return Err(Error::Structural(format!("dart {d} listed at two rotation positions")));
            }
            let Some(&x) = dense.get(d) else {
                return Err(Error::Structural(format!(
                    "dart {d} at vertex {} belongs to no edge",
                    names[v]
                )));
            };
            rot.push(x);
        }
        rotations.push(rot);
    }
    if let Some(d) = dense.keys().find(|d| !seen.contains(*d)) {
        return Err(Error::Structural(format!("dart {d} belongs to no vertex")));
    }
    let graph = EmbeddedGraph::from_rotations(names, rotations, signs)?;

    let coloring = if colors.is_empty() {
        None
    } else {
        let mut assign = vec![0usize; graph.vertex_count()];
        for (name, c, line_no) in &colors {
            let v = *name_index
                .get(name)
                .ok_or_else(|| perr(*line_no, format!("color for unknown vertex `{name}`")))?;
            if assign[v] != 0 {
                return Err(perr(*line_no, format!("vertex `{name}` colored twice")));
            }
            if *c == 0 {
                return Err(perr(*line_no, "colors start at 1"));
            }
            assign[v] = *c;
        }
        if let Some(v) = assign.iter().position(|&c| c == 0) {
            return Err(Error::Coloring(format!("vertex `{}` has no color", graph.name(v))));
        }
        Some(Coloring::from_colors(assign)?)
    };
    Ok((graph, coloring))
}

/// Canonical text: edge `k` uses darts `2k` and `2k+1`.
pub fn write_embedding(g: &EmbeddedGraph, coloring: Option<&Coloring>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# embedded graph: {} vertices, {} edges, {} faces",
        g.vertex_count(),
        g.edge_count(),
        g.face_count()
    );
    for v in 0..g.vertex_count() {
        let darts: Vec<String> = g.rotation(v).iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out, "vertex {} : {}", g.name(v), darts.join(" "));
    }
    for e in 0..g.edge_count() {
        let _ = writeln!(out, "edge {e} : {} {} {}", 2 * e, 2 * e + 1, g.sign(e));
    }
    if let Some(c) = coloring {
        for v in 0..g.vertex_count() {
            let _ = writeln!(out, "color {} {}", g.name(v), c.get(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "\
# theta graph on the sphere
vertex a : 10 12 14
vertex b : 11 15 13
edge x : 10 11 +
edge y : 12 13 +
edge z : 14 15 +
color a 1
color b 2
";

    #[test]
    fn parses_and_roundtrips() {
        let (g, c) = parse_embedding(THETA).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.face_count(), 3);
        let text = write_embedding(&g, c.as_ref());
        let (h, d) = parse_embedding(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(c, d);
    }

    #[test]
    fn rejects_duplicate_dart() {
        let bad = THETA.replace("vertex b : 11 15 13", "vertex b : 11 15 10");
        assert!(parse_embedding(&bad).is_err());
    }

    #[test]
    fn rejects_non_involutive_pairing() {
        let bad = THETA.replace("edge z : 14 15 +", "edge z : 14 11 +");
        assert!(matches!(parse_embedding(&bad), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_disconnection() {
        let text = "vertex a : 0\nvertex b : 1\nvertex c : 2\nvertex d : 3\nedge 0 : 0 1 +\nedge 1 : 2 3 +\n";
        assert!(matches!(parse_embedding(text), Err(Error::Disconnected(_))));
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let bad = THETA.replace("color b 2\n", "");
        assert!(matches!(parse_embedding(&bad), Err(Error::Coloring(_))));
    }
}
