use std::fmt;

use crate::error::{Error, Result};
use crate::localcolor::Coloring;
use crate::surface::EmbeddedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Loopless with every face of length 4.
pub fn check_quadrangulation(g: &EmbeddedGraph) -> Result<()> {
    if let Some(e) = g.first_loop() {
        return Err(Error::Loop(g.name(g.endpoints(e).0).to_string()));
    }
    match g.faces().iter().position(|f| f.len() != 4) {
        Some(f) => Err(Error::NotQuadrangulation { face: f, len: g.faces()[f].len() }),
        None => Ok(()),
    }
}

/// Faces oriented along their traced walks; an edge breaks consistency when
/// both of its face slots leave from the same end.
pub fn inconsistent_edges(g: &EmbeddedGraph) -> Vec<usize> {
    let mut tail: Vec<Option<usize>> = vec![None; g.edge_count()];
    let mut bad = Vec::new();
    for slot in g.faces().iter().flat_map(|f| f.slots()) {
        let e = slot.edge();
        match tail[e] {
            None => tail[e] = Some(slot.dart),
            Some(d) if d == slot.dart => bad.push(e),
            Some(_) => {}
        }
    }
    bad.sort_unstable();
    bad
}

pub fn quad_parity(g: &EmbeddedGraph) -> Result<Parity> {
    check_quadrangulation(g)?;
    Ok(Parity::from_count(inconsistent_edges(g).len()))
}

/// Edge `e` points along `heads[e]`, one of its two darts.
pub fn validate_orientation(g: &EmbeddedGraph, heads: &[usize]) -> Result<()> {
    if heads.len() != g.edge_count() {
        return Err(Error::Input(format!(
            "orientation covers {} of {} edges",
            heads.len(),
            g.edge_count()
        )));
    }
    match heads.iter().enumerate().find(|&(e, &d)| d / 2 != e) {
        Some((e, d)) => Err(Error::Input(format!("dart {d} does not belong to edge {e}"))),
        None => Ok(()),
    }
}

/// Faces traversing an odd number of their edges against the orientation.
pub fn odd_faces(g: &EmbeddedGraph, heads: &[usize]) -> Result<Vec<usize>> {
    check_quadrangulation(g)?;
    validate_orientation(g, heads)?;
    Ok((0..g.face_count())
        .filter(|&f| {
            let against = g.faces()[f].slots().iter().filter(|s| heads[s.edge()] != s.dart).count();
            against % 2 == 1
        })
        .collect())
}

/// Parity of the number of odd faces, and that number.
pub fn odd_faces_parity(g: &EmbeddedGraph, heads: &[usize]) -> Result<(Parity, usize)> {
    let n = odd_faces(g, heads)?.len();
    Ok((Parity::from_count(n), n))
}

/// Every edge points from its smaller to its larger color.
pub fn color_order_orientation(g: &EmbeddedGraph, c: &Coloring) -> Result<Vec<usize>> {
    (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.endpoints(e);
            match c.get(a).cmp(&c.get(b)) {
                std::cmp::Ordering::Less => Ok(2 * e),
                std::cmp::Ordering::Greater => Ok(2 * e + 1),
                std::cmp::Ordering::Equal => Err(Error::Coloring(format!(
                    "edge {}-{} is monochromatic",
                    g.name(a),
                    g.name(b)
                ))),
            }
        })
        .collect()
}

/// Quadrilateral faces whose colors increase strictly along the boundary,
/// read from a suitable corner in one of the two directions.
pub fn cyclically_increasing_faces(g: &EmbeddedGraph, c: &Coloring) -> Vec<usize> {
    (0..g.face_count())
        .filter(|&f| {
            let cols: Vec<usize> = g.faces()[f].vertices(g).iter().map(|&v| c.get(v)).collect();
            let k = cols.len();
            let rising = |seq: &[usize]| {
                (0..k).any(|r| (0..k - 1).all(|i| seq[(r + i) % k] < seq[(r + i + 1) % k]))
            };
            let mut rev = cols.clone();
            rev.reverse();
            k == 4 && (rising(&cols) || rising(&rev))
        })
        .collect()
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
    fn sphere_square_is_even() {
        let g = square_sphere();
        assert_eq!(quad_parity(&g).unwrap(), Parity::Even);
        for mask in 0..16u32 {
            let heads: Vec<usize> = (0..4).map(|e| 2 * e + ((mask >> e) & 1) as usize).collect();
            assert_eq!(odd_faces_parity(&g, &heads).unwrap().0, Parity::Even);
        }
    }

    #[test]
    fn rejects_bad_orientation() {
        let g = square_sphere();
        assert!(odd_faces_parity(&g, &[0, 2, 4]).is_err());
        assert!(odd_faces_parity(&g, &[1, 0, 4, 6]).is_err());
    }

    #[test]
    fn cyclic_increase_detection() {
        let g = square_sphere();
        let c = Coloring::from_colors(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(cyclically_increasing_faces(&g, &c).len(), 2);
        let c = Coloring::from_colors(vec![1, 3, 2, 4]).unwrap();
        assert!(cyclically_increasing_faces(&g, &c).is_empty());
    }
}
