//! Small grid quadrangulations of the torus and the Klein bottle, and the
//! plain sphere square. Used as test surfaces.

use super::complex::{assemble_embedding, FaceListComplex, Side};
use crate::error::{Error, Result};
use crate::surface::EmbeddedGraph;

/// `p × q` grid with `(p, j) ~ (0, j)` on the torus or `(p, j) ~ (0, -j)` on
/// the Klein bottle, and `(i, q) ~ (i, 0)` in both. Vertex `(i, j)` is `i * q + j`.
fn grid(p: usize, q: usize, twisted: bool) -> Result<EmbeddedGraph> {
    if p < 2 || q < 2 || (p < 3 && q < 3) {
        return Err(Error::OutOfRange(format!("grid {p}x{q} is too small")));
    }
    let wrap_i = |i: usize, j: usize| -> (usize, usize) {
        if i < p {
            (i, j % q)
        } else if twisted {
            (0, (q - j % q) % q)
        } else {
            (0, j % q)
        }
    };
    let vid = |(i, j): (usize, usize)| i * q + j;
    let h = |i: usize, j: usize| 2 * (i * q + j);
    let v = |i: usize, j: usize| 2 * (i * q + j) + 1;
    let mut faces = Vec::with_capacity(p * q);
    for i in 0..p {
        for j in 0..q {
            let a = (i, j);
            let b = wrap_i(i + 1, j);
            let c = wrap_i(i + 1, j + 1);
            let d = (i, (j + 1) % q);
            // right side: vertical edge between b and c
            let right = if i + 1 < p {
                v(i + 1, j)
            } else if twisted {
                v(0, (2 * q - j - 1) % q)
            } else {
                v(0, j)
            };
            faces.push(vec![
                Side { from: vid(a), edge: h(i, j) },
                Side { from: vid(b), edge: right },
                Side { from: vid(c), edge: h(i, (j + 1) % q) },
                Side { from: vid(d), edge: v(i, j) },
            ]);
        }
    }
    let names = (0..p)
        .flat_map(|i| (0..q).map(move |j| format!("{i}.{j}")))
        .collect();
    let cx = FaceListComplex { names, faces };
    Ok(assemble_embedding(&cx)?.graph)
}

pub fn torus_grid(p: usize, q: usize) -> Result<EmbeddedGraph> {
    grid(p, q, false)
}

pub fn klein_grid(p: usize, q: usize) -> Result<EmbeddedGraph> {
    grid(p, q, true)
}

/// A 4-cycle bounding two squares on the sphere.
pub fn sphere_square() -> EmbeddedGraph {
    let names = (0..4).map(|i| i.to_string()).collect();
    let cx = FaceListComplex::from_vertex_cycles(names, &[vec![0, 1, 2, 3], vec![0, 1, 2, 3]])
        .expect("two squares on one 4-cycle");
    assemble_embedding(&cx).expect("sphere square assembles").graph
}
