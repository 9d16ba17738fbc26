use std::collections::BTreeSet;
use std::fmt;

use super::subdivision::Triangulation;
use crate::error::{Error, Result};
use crate::localcolor::{is_local_coloring, neighborhood_colors, Coloring};
use crate::quadform::Parity;

/// Winding number of the link of `v` around the 3-cycle of its colors,
/// with steps `1 → 2 → 3 → 1` (on the sorted colors) counted `+1`.
pub fn link_winding(t: &Triangulation, c: &Coloring, v: usize) -> Result<i64> {
    let g = t.graph();
    if v >= g.vertex_count() {
        return Err(Error::OutOfRange(format!("vertex {v}")));
    }
    let link: Vec<usize> = g.rotation(v).iter().map(|&d| c.get(g.far_end(d))).collect();
    let palette: BTreeSet<usize> = link.iter().copied().collect();
    if palette.len() > 3 || palette.contains(&c.get(v)) {
        return Err(Error::Coloring(format!(
            "vertex {} is not locally 4-colored: link colors {palette:?}, own color {}",
            g.name(v),
            c.get(v)
        )));
    }
    let pos: Vec<usize> = palette.into_iter().collect();
    let at = |col: usize| pos.iter().position(|&p| p == col).expect("color in palette") as i64;
    let mut total = 0i64;
    for i in 0..link.len() {
        let (a, b) = (at(link[i]), at(link[(i + 1) % link.len()]));
        total += match (b - a).rem_euclid(3) {
            1 => 1,
            2 => -1,
            _ => return Err(Error::Coloring(format!("link of {} repeats a color on an edge", g.name(v)))),
        };
    }
    if total % 3 != 0 {
        return Err(Error::InternalConsistency(format!("link of {} does not close up", g.name(v))));
    }
    Ok(total / 3)
}

/// Parities for one color triple `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityRow {
    pub colors: [usize; 3],
    pub triangles: usize,
    /// `Σ deg` over `V_i^{jk}`, `V_j^{ik}`, `V_k^{ij}`.
    pub degree_sums: [usize; 3],
}

impl ParityRow {
    pub fn consistent(&self) -> bool {
        let p = Parity::from_count(self.triangles);
        self.degree_sums.iter().all(|&s| Parity::from_count(s) == p)
    }
}

#[derive(Debug, Clone)]
pub struct FiskReport {
    pub odd: Vec<usize>,
    pub rows: Vec<ParityRow>,
    /// Link winding number per vertex.
    pub windings: Vec<i64>,
    /// For two odd vertices: equal colors and equal neighbor color sets.
    pub same_color: Option<bool>,
    pub same_neighborhood: Option<bool>,
}

impl FiskReport {
    pub fn parity_ok(&self) -> bool {
        self.rows.iter().all(ParityRow::consistent)
    }
}

impl fmt::Display for FiskReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "i j k |T| sum_i sum_j sum_k")?;
        for r in &self.rows {
            let [i, j, k] = r.colors;
            let [a, b, c] = r.degree_sums.map(|s| s % 2);
            writeln!(f, "{i} {j} {k} {} {a} {b} {c}", r.triangles % 2)?;
        }
        match (self.same_color, self.same_neighborhood) {
            (Some(a), Some(b)) => write!(f, "odd vertices: same color {a}, same neighbor colors {b}"),
            _ => write!(f, "no odd vertices"),
        }
    }
}

/// Checks the two-odd-vertex conclusion and the per-triple parity
/// congruences for a local 4-coloring. A failed conclusion is an
/// internal-consistency error.
pub fn fisk_check(t: &Triangulation, c: &Coloring) -> Result<FiskReport> {
    let g = t.graph();
    let odd = t.odd_vertices().to_vec();
    if odd.len() != 0 && odd.len() != 2 {
        return Err(Error::Unsupported(format!("{} odd-degree vertices, need 0 or 2", odd.len())));
    }
    let sg = g.underlying();
    if c.len() != g.vertex_count() || !is_local_coloring(&sg, c, 4) {
        return Err(Error::Coloring("not a local 4-coloring".into()));
    }
    let mut windings = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let w = link_winding(t, c, v)?;
        if Parity::from_count(w.unsigned_abs() as usize) != Parity::from_count(g.degree(v)) {
            return Err(Error::InternalConsistency(format!("winding {w} at {} of degree {}", g.name(v), g.degree(v))));
        }
        windings.push(w);
    }
    let tri_colors: Vec<(Vec<usize>, [usize; 3])> = g
        .faces()
        .iter()
        .map(|w| {
            let vs = w.vertices(g);
            let mut cols = [c.get(vs[0]), c.get(vs[1]), c.get(vs[2])];
            cols.sort_unstable();
            (vs, cols)
        })
        .collect();
    let used: Vec<usize> = c.used_colors().into_iter().collect();
    let mut rows = Vec::new();
    for (a, &i) in used.iter().enumerate() {
        for (b, &j) in used.iter().enumerate().skip(a + 1) {
            for &k in used.iter().skip(b + 1) {
                let key = [i, j, k];
                let mut members: [BTreeSet<usize>; 3] = Default::default();
                let mut triangles = 0;
                for (vs, cols) in &tri_colors {
                    if *cols == key {
                        triangles += 1;
                        for &v in vs {
                            let slot = key.iter().position(|&x| x == c.get(v)).expect("color in triple");
                            members[slot].insert(v);
                        }
                    }
                }
                let degree_sums = members.clone().map(|s| s.iter().map(|&v| g.degree(v)).sum());
                rows.push(ParityRow { colors: key, triangles, degree_sums });
            }
        }
    }
    if let Some(r) = rows.iter().find(|r| !r.consistent()) {
        return Err(Error::InternalConsistency(format!("parity table fails for colors {:?}", r.colors)));
    }
    let (same_color, same_neighborhood) = match odd[..] {
        [x, y] => {
            let sc = c.get(x) == c.get(y);
            let sn = neighborhood_colors(&sg, c, x) == neighborhood_colors(&sg, c, y);
            if !sc || !sn {
                return Err(Error::InternalConsistency(format!(
                    "odd vertices {} and {} differ in color or neighbor colors",
                    g.name(x),
                    g.name(y)
                )));
            }
            (Some(sc), Some(sn))
        }
        _ => (None, None),
    };
    Ok(FiskReport { odd, rows, windings, same_color, same_neighborhood })
}

#[cfg(test)]
mod tests {
    use super::super::generate::{bipyramid, octahedron};
    use super::*;

    #[test]
    fn bipyramid_apexes() {
        let t = bipyramid(5).unwrap();
        let c = Coloring::from_colors(vec![1, 2, 1, 2, 3, 4, 4]).unwrap();
        assert_eq!(t.odd_vertices(), &[5, 6]);
        assert_eq!(link_winding(&t, &c, 5).unwrap().rem_euclid(2), 1);
        let r = fisk_check(&t, &c).unwrap();
        assert_eq!((r.same_color, r.same_neighborhood), (Some(true), Some(true)));
        assert!(r.parity_ok());
    }

    #[test]
    fn octahedron_is_vacuous() {
        let t = octahedron().unwrap();
        // antipodal pairs share a color
        let c = Coloring::from_colors(vec![1, 2, 1, 2, 3, 3]).unwrap();
        let r = fisk_check(&t, &c).unwrap();
        assert_eq!(r.same_color, None);
        assert!(r.rows.iter().all(|row| row.triangles % 2 == 0));
        assert!(r.windings.iter().all(|w| w % 2 == 0));
    }

    #[test]
    fn rejects_crowded_link() {
        let t = bipyramid(5).unwrap();
        let c = Coloring::from_colors(vec![1, 2, 3, 4, 5, 6, 6]).unwrap();
        assert!(matches!(link_winding(&t, &c, 5), Err(Error::Coloring(_))));
        assert!(matches!(fisk_check(&t, &c), Err(Error::Coloring(_))));
    }
}
