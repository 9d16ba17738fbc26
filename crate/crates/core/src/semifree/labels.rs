use super::group::{kneser_graph, CommutationGraph, GroupWord, Letter};
use crate::error::{Error, Result};
use crate::localcolor::{is_local_coloring, Coloring};
use crate::surface::{EmbeddedGraph, MedialGraph};

/// The Kneser graph used for labels with colors in `[m]`. For `m < 4` the
/// pairs in `[m]` pairwise intersect, so `KG(4, 2)` gives the same group on them.
pub fn label_group(m: usize) -> Result<CommutationGraph> {
    kneser_graph(m.max(4), 2)
}

/// `x_{i,j}`: `ε` if `i = j`, `{i,j}` if `i < j`, `{j,i}⁻¹` if `j < i`.
pub fn x_pair(h: &CommutationGraph, i: usize, j: usize) -> Result<GroupWord> {
    if i == 0 || j == 0 || h.subset(0).is_none() {
        return Err(Error::OutOfRange(format!("colors ({i}, {j})")));
    }
    if i == j {
        let top = h.subset(h.generator_count() - 1).map_or(0, |s| s[s.len() - 1]);
        if i > top {
            return Err(Error::OutOfRange(format!("color {i} exceeds {top}")));
        }
        return Ok(GroupWord::identity());
    }
    let gen = h.pair(i, j).map_err(|_| Error::OutOfRange(format!("colors ({i}, {j})")))?;
    Ok(GroupWord::from_letters(vec![Letter { gen, inv: j < i }]))
}

/// `x_{c_t,c_2} x_{c_1,c_3} ⋯ x_{c_{t-1},c_1}` for a closed walk with colors `c`.
pub fn walk_label(h: &CommutationGraph, colors: &[usize]) -> Result<GroupWord> {
    let t = colors.len();
    if t == 0 {
        return Err(Error::ImproperWalk("empty walk".into()));
    }
    for i in 0..t {
        if colors[i] == colors[(i + 1) % t] {
            return Err(Error::ImproperWalk(format!(
                "positions {} and {} both have color {}",
                i + 1,
                (i + 1) % t + 1,
                colors[i]
            )));
        }
    }
    let parts = (0..t)
        .map(|i| x_pair(h, colors[(i + t - 1) % t], colors[(i + 1) % t]))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupWord::product(&parts))
}

fn require_local3(g: &EmbeddedGraph, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() || !is_local_coloring(&g.underlying(), c, 3) {
        return Err(Error::Coloring("labels need a local 3-coloring".into()));
    }
    Ok(())
}

fn dart_label(g: &EmbeddedGraph, medial: &MedialGraph, h: &CommutationGraph, c: &Coloring, md: usize) -> Result<GroupWord> {
    let d = medial.corner_of_edge(md / 2);
    let forward = x_pair(h, c.get(g.far_end(d)), c.get(g.far_end(g.rot(d))))?;
    let tail = medial.base_edge_of_vertex(medial.graph.vertex_of(md));
    let (from, to) = (d / 2, g.rot(d) / 2);
    if tail == from {
        Ok(forward)
    } else if tail == to {
        Ok(forward.inverse())
    } else {
        Err(Error::InternalConsistency(format!("medial dart {md} leaves a foreign vertex")))
    }
}

/// Label of medial dart `md`. The medial edge at corner `(d, rot d)` of base
/// vertex `a` runs from `v_e` (`e = ab` along `d`) to `v_f` (`f = ad'` along
/// `rot d`) with label `x_{c(b), c(d')}`; the other direction gets the inverse.
pub fn medial_edge_label(g: &EmbeddedGraph, medial: &MedialGraph, c: &Coloring, md: usize) -> Result<GroupWord> {
    require_local3(g, c)?;
    if md >= medial.graph.dart_count() {
        return Err(Error::OutOfRange(format!("medial dart {md}")));
    }
    dart_label(g, medial, &label_group(c.m())?, c, md)
}

/// Product of the edge labels around medial face `f`.
pub fn face_label(g: &EmbeddedGraph, medial: &MedialGraph, c: &Coloring, f: usize) -> Result<GroupWord> {
    require_local3(g, c)?;
    if f >= medial.graph.face_count() {
        return Err(Error::OutOfRange(format!("medial face {f}")));
    }
    let h = label_group(c.m())?;
    let parts = medial.graph.faces()[f]
        .slots()
        .iter()
        .map(|s| dart_label(g, medial, &h, c, s.dart))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupWord::product(&parts))
}

/// Medial faces whose label does not reduce to `ε`.
pub fn nontrivial_face_labels(g: &EmbeddedGraph, medial: &MedialGraph, c: &Coloring) -> Result<Vec<usize>> {
    let h = label_group(c.m())?;
    let mut bad = Vec::new();
    for f in 0..medial.graph.face_count() {
        if !h.is_identity(&face_label(g, medial, c, f)?)? {
            bad.push(f);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::medial_graph;

    #[test]
    fn x_pair_cases() {
        let h = label_group(5).unwrap();
        assert!(x_pair(&h, 3, 3).unwrap().is_empty());
        let a = x_pair(&h, 1, 2).unwrap();
        assert_eq!(h.format_kneser(&a), "1.2");
        assert_eq!(x_pair(&h, 2, 1).unwrap(), a.inverse());
        assert!(x_pair(&h, 0, 1).is_err());
        assert!(x_pair(&h, 6, 6).is_err());
    }

    #[test]
    fn remark_walk() {
        let h = label_group(4).unwrap();
        let w = walk_label(&h, &[2, 1, 2, 3, 1, 3, 4, 1, 4]).unwrap();
        assert!(!h.is_identity(&w).unwrap());
        assert!(h.abelianize(&w).unwrap().iter().all(|&x| x == 0));
    }

    #[test]
    fn two_colored_walks_are_trivial() {
        let h = label_group(4).unwrap();
        for t in [2, 4, 6, 8] {
            let cols: Vec<usize> = (0..t).map(|i| if i % 2 == 0 { 1 } else { 3 }).collect();
            assert!(h.is_identity(&walk_label(&h, &cols).unwrap()).unwrap());
        }
        assert!(matches!(walk_label(&h, &[1, 1, 2]), Err(Error::ImproperWalk(_))));
        assert!(matches!(walk_label(&h, &[1, 2, 1]), Err(Error::ImproperWalk(_))));
    }

    #[test]
    fn sphere_square_faces() {
        let g = crate::constructions::sphere_square();
        let m = medial_graph(&g).unwrap();
        let c = Coloring::from_colors(vec![1, 2, 1, 2]).unwrap();
        assert!(nontrivial_face_labels(&g, &m, &c).unwrap().is_empty());
        let c4 = Coloring::from_colors(vec![1, 2, 3, 4]).unwrap();
        assert!(nontrivial_face_labels(&g, &m, &c4).unwrap().is_empty());
    }
}
