use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::subdivision::Triangulation;
use crate::constructions::{assemble_embedding, FaceListComplex};
use crate::error::{Error, Result};

fn from_triangles(names: Vec<String>, tris: &[[usize; 3]]) -> Result<Triangulation> {
    let cycles: Vec<Vec<usize>> = tris.iter().map(|t| t.to_vec()).collect();
    let cx = FaceListComplex::from_vertex_cycles(names, &cycles)?;
    Triangulation::new(assemble_embedding(&cx)?.graph)
}

/// Double pyramid over `C_n`: cycle `0..n`, apexes `n` and `n + 1`.
pub fn bipyramid(n: usize) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("bipyramid over C{n}")));
    }
    let mut tris = Vec::with_capacity(2 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        tris.push([i, j, n]);
        tris.push([j, i, n + 1]);
    }
    let names = (0..n).map(|i| i.to_string()).chain(["N".into(), "S".into()]).collect();
    from_triangles(names, &tris)
}

pub fn octahedron() -> Result<Triangulation> {
    bipyramid(4)
}

/// 6-regular triangulation of the torus on a `p × q` grid; vertex
/// `(i, j)` is `i * q + j` and each square is cut along its `(i, j)(i+1, j+1)`
/// diagonal.
fn torus_triangles(p: usize, q: usize) -> Vec<[usize; 3]> {
    let v = |i: usize, j: usize| (i % p) * q + j % q;
    let mut tris = Vec::with_capacity(2 * p * q);
    for i in 0..p {
        for j in 0..q {
            tris.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push([v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    tris
}

pub fn torus_triangulation(p: usize, q: usize) -> Result<Triangulation> {
    if p < 3 || q < 3 {
        return Err(Error::OutOfRange(format!("torus grid {p}x{q}, need both >= 3")));
    }
    let names = (0..p).flat_map(|i| (0..q).map(move |j| format!("{i}.{j}"))).collect();
    from_triangles(names, &torus_triangles(p, q))
}

#[derive(Debug, Clone)]
pub struct FlipWalk {
    pub triangulation: Triangulation,
    pub flips: usize,
    /// The two adjacent odd-degree vertices.
    pub odd_pair: (usize, usize),
}

/// Random diagonal flips on the `p × q` torus triangulation until exactly
/// two odd-degree vertices remain and they are adjacent. A flip replaces
/// edge `ab` of triangles `abc`, `bad` by `cd`; it is skipped if `c = d`,
/// `cd` is already an edge, or `a` or `b` would drop below degree 4.
pub fn flip_walk(p: usize, q: usize, seed: u64, max_flips: usize) -> Result<FlipWalk> {
    if p < 3 || q < 3 || p * q > 16 {
        return Err(Error::OutOfRange(format!("flip walk on {p}x{q}; need 3 <= p, q and pq <= 16")));
    }
    let n = p * q;
    let mut tris = torus_triangles(p, q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut degree = vec![0usize; n];
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for t in &tris {
        for s in 0..3 {
            if edges.insert(key(t[s], t[(s + 1) % 3])) {
                degree[t[s]] += 1;
                degree[t[(s + 1) % 3]] += 1;
            }
        }
    }
    let mut flips = 0;
    for _ in 0..max_flips {
        let ti = rng.gen_range(0..tris.len());
        let s = rng.gen_range(0..3);
        let [a, b, c] = [tris[ti][s], tris[ti][(s + 1) % 3], tris[ti][(s + 2) % 3]];
        let Some((tj, d)) = tris.iter().enumerate().find_map(|(k, t)| {
            (0..3).find(|&r| t[r] == b && t[(r + 1) % 3] == a).map(|r| (k, t[(r + 2) % 3]))
        }) else {
            return Err(Error::InternalConsistency(format!("edge {a}-{b} has one side")));
        };
        if c == d || edges.contains(&key(c, d)) || degree[a] <= 4 || degree[b] <= 4 {
            continue;
        }
        edges.remove(&key(a, b));
        edges.insert(key(c, d));
        degree[a] -= 1;
        degree[b] -= 1;
        degree[c] += 1;
        degree[d] += 1;
        tris[ti] = [a, d, c];
        tris[tj] = [d, b, c];
        flips += 1;
        let odd: Vec<usize> = (0..n).filter(|&v| degree[v] % 2 == 1).collect();
        if let [x, y] = odd[..] {
            if edges.contains(&key(x, y)) {
                let names = (0..p).flat_map(|i| (0..q).map(move |j| format!("{i}.{j}"))).collect();
                let t = from_triangles(names, &tris)?;
                if t.odd_vertices() != [x, y] {
                    return Err(Error::InternalConsistency("flip walk lost track of degrees".into()));
                }
                return Ok(FlipWalk { triangulation: t, flips, odd_pair: (x, y) });
            }
        }
    }
    Err(Error::Unsupported(format!("no adjacent odd pair within {max_flips} flips (seed {seed})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::classify_surface;

    #[test]
    fn torus_is_six_regular() {
        let t = torus_triangulation(4, 4).unwrap();
        let g = t.graph();
        assert!((0..16).all(|v| g.degree(v) == 6));
        let s = classify_surface(g);
        assert!(s.orientable && s.genus == 1);
    }

    #[test]
    fn flip_walk_is_reproducible() {
        let a = flip_walk(4, 4, 7, 10_000).unwrap();
        let b = flip_walk(4, 4, 7, 10_000).unwrap();
        assert_eq!(a.flips, b.flips);
        assert_eq!(a.odd_pair, b.odd_pair);
        let g = a.triangulation.graph();
        assert!(g.edges_between(a.odd_pair.0, a.odd_pair.1).len() == 1);
        assert_eq!(classify_surface(g).genus, 1);
    }
}
