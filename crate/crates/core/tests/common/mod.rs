//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use quadloc::graph::SimpleGraph;
use quadloc::localcolor::{is_local_coloring, Coloring};
use quadloc::semifree::{CommutationGraph, GroupWord, Letter};
use quadloc::surface::EmbeddedGraph;
use rand::Rng;

/// Identity test by exhausting the orbit of the word under swaps of adjacent
/// commuting letters and deletion of adjacent `x x⁻¹`.
pub fn orbit_is_identity(h: &CommutationGraph, w: &GroupWord) -> bool {
    let start: Vec<(usize, bool)> = w.letters.iter().map(|l| (l.gen, l.inv)).collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur.is_empty() {
            return true;
        }
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            let next = if a.0 == b.0 && a.1 != b.1 {
                let mut n = cur.clone();
                n.drain(i..i + 2);
                n
            } else if a.0 != b.0 && h.commute(a.0, b.0) {
                let mut n = cur.clone();
                n.swap(i, i + 1);
                n
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

pub fn random_commutation_graph(rng: &mut impl Rng, max_n: usize) -> CommutationGraph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    CommutationGraph::new((0..n).map(|i| format!("g{i}")).collect(), &edges).unwrap()
}

pub fn random_word(rng: &mut impl Rng, gens: usize, len: usize) -> GroupWord {
    GroupWord::from_letters(
        (0..len).map(|_| Letter { gen: rng.gen_range(0..gens), inv: rng.gen_bool(0.5) }).collect(),
    )
}

/// A word equal to the identity: `u u⁻¹` or a commutator of commuting
/// generators inside a conjugate, then shuffled by valid commuting swaps.
pub fn random_identity_word(rng: &mut impl Rng, h: &CommutationGraph, max_len: usize) -> GroupWord {
    let n = h.generator_count();
    let mut w = if rng.gen_bool(0.5) || h.edge_count() == 0 {
        let len = rng.gen_range(0..=max_len / 2);
        let u = random_word(rng, n, len);
        u.concat(&u.inverse())
    } else {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| h.commute(a, b)).collect();
        let (a, b) = pairs[rng.gen_range(0..pairs.len())];
        let (x, y) = (GroupWord::generator(a), GroupWord::generator(b));
        let comm = GroupWord::product([&x, &y, &x.inverse(), &y.inverse()]);
        let len = rng.gen_range(0..=max_len.saturating_sub(4) / 2);
        let u = random_word(rng, n, len);
        GroupWord::product([&u, &comm, &u.inverse()])
    };
    for _ in 0..w.len() * 2 {
        if w.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..w.len() - 1);
        let (a, b) = (w.letters[i], w.letters[i + 1]);
        if a.gen != b.gen && h.commute(a.gen, b.gen) {
            w.letters.swap(i, i + 1);
        }
    }
    w
}

/// Every coloring with colors `1..=m` that is a local r-coloring, by odometer.
pub fn all_local_colorings(g: &SimpleGraph, r: usize, m: usize, limit: usize) -> Vec<Coloring> {
    let n = g.vertex_count();
    let mut c = vec![1usize; n];
    let mut out = Vec::new();
    loop {
        let col = Coloring::new(c.clone(), m).unwrap();
        if is_local_coloring(g, &col, r) {
            out.push(col);
            if out.len() >= limit {
                return out;
            }
        }
        let mut i = 0;
        while i < n && c[i] == m {
            c[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        c[i] += 1;
    }
}

pub fn random_heads(rng: &mut impl Rng, g: &EmbeddedGraph) -> Vec<usize> {
    (0..g.edge_count()).map(|e| 2 * e + usize::from(rng.gen_bool(0.5))).collect()
}

/// Edge ids from lines `pair <a> <b>`.
pub fn edges_from_pairs(g: &EmbeddedGraph, text: &str) -> Vec<usize> {
    text.lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(t[0], "pair");
            let a = g.find_vertex(t[1]).unwrap_or_else(|| panic!("no vertex {}", t[1]));
            let b = g.find_vertex(t[2]).unwrap_or_else(|| panic!("no vertex {}", t[2]));
            let es = g.edges_between(a, b);
            assert_eq!(es.len(), 1, "{} {}", t[1], t[2]);
            es[0]
        })
        .collect()
}

pub const G1_NEGATIVE_EDGES: &str = include_str!("../data/g1_negative_edges.txt");
