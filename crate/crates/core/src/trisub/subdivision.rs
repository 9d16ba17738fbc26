use crate::constructions::{assemble_embedding, FaceListComplex, Side};
use crate::error::{Error, Result};
use crate::localcolor::{local_chromatic_number, search_local_coloring, Coloring, PsiReport, SearchOutcome};
use crate::quadform::check_quadrangulation;
use crate::surface::EmbeddedGraph;

/// A map whose faces are all triangles, with its odd-degree vertices.
#[derive(Debug, Clone)]
pub struct Triangulation {
    graph: EmbeddedGraph,
    odd: Vec<usize>,
}

impl Triangulation {
    pub fn new(graph: EmbeddedGraph) -> Result<Self> {
        if let Some((f, w)) = graph.faces().iter().enumerate().find(|(_, w)| w.len() != 3) {
            return Err(Error::Structural(format!("face {f} has length {}, expected 3", w.len())));
        }
        let odd: Vec<usize> = (0..graph.vertex_count()).filter(|&v| graph.degree(v) % 2 == 1).collect();
        if odd.len() % 2 == 1 {
            return Err(Error::InternalConsistency("odd number of odd-degree vertices".into()));
        }
        Ok(Triangulation { graph, odd })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn odd_vertices(&self) -> &[usize] {
        &self.odd
    }

    pub fn into_graph(self) -> EmbeddedGraph {
        self.graph
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexOrigin {
    Original(usize),
    /// Added inside this face of the quadrangulation.
    Hub(usize),
}

/// `T(Q)`: a hub in each face joined to its four corners. Vertex `v` of `Q`
/// keeps its index; the hub of face `f` is `|V(Q)| + f`.
pub fn face_subdivision(q: &EmbeddedGraph) -> Result<(Triangulation, Vec<VertexOrigin>)> {
    check_quadrangulation(q)?;
    let base = FaceListComplex::from_graph(q);
    let nv = q.vertex_count();
    let ne = base.edge_count();
    let mut names = base.names.clone();
    let mut origin: Vec<VertexOrigin> = (0..nv).map(VertexOrigin::Original).collect();
    let mut faces = Vec::with_capacity(4 * base.faces.len());
    for (f, sides) in base.faces.iter().enumerate() {
        let hub = nv + f;
        let mut name = format!("h{f}");
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
        origin.push(VertexOrigin::Hub(f));
        let spoke = |i: usize| ne + 4 * f + i % 4;
        for i in 0..4 {
            let next = sides[(i + 1) % 4].from;
            faces.push(vec![
                Side { from: sides[i].from, edge: sides[i].edge },
                Side { from: next, edge: spoke(i + 1) },
                Side { from: hub, edge: spoke(i) },
            ]);
        }
    }
    let t = assemble_embedding(&FaceListComplex { names, faces })?.graph;
    if t.euler_characteristic() != q.euler_characteristic()
        || t.vertex_count() != nv + q.face_count()
        || t.edge_count() != q.edge_count() + 4 * q.face_count()
    {
        return Err(Error::InternalConsistency("face subdivision counts are off".into()));
    }
    Ok((Triangulation::new(t)?, origin))
}

/// Colors the hubs with `m + 1` and keeps the rest.
pub fn extend_with_hub_color(c: &Coloring, origin: &[VertexOrigin]) -> Result<Coloring> {
    let hub = c.m() + 1;
    let colors = origin
        .iter()
        .map(|o| match *o {
            VertexOrigin::Original(v) if v < c.len() => Ok(c.get(v)),
            VertexOrigin::Original(v) => Err(Error::Coloring(format!("no color for vertex {v}"))),
            VertexOrigin::Hub(_) => Ok(hub),
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(colors, hub)
}

#[derive(Debug, Clone)]
pub struct TqReport {
    pub triangulation: Triangulation,
    /// Search for a local 4-coloring of `T(Q)` with `|V(T(Q))|` colors.
    pub outcome: SearchOutcome,
    /// `ψ(Q)` bounds and witness.
    pub quad_psi: PsiReport,
    /// The witness extended by a hub color: a local `(upper + 1)`-coloring of `T(Q)`.
    pub extended: Coloring,
}

impl TqReport {
    pub fn no_local_4(&self) -> bool {
        matches!(self.outcome, SearchOutcome::None(_))
    }

    /// `ψ(T(Q))` when both bounds meet at 5.
    pub fn exact_psi(&self) -> Option<usize> {
        (self.no_local_4() && self.quad_psi.exact() == Some(4)).then_some(5)
    }
}

pub fn tq_lower_bound_check(q: &EmbeddedGraph, budget: Option<u64>) -> Result<TqReport> {
    let (t, origin) = face_subdivision(q)?;
    let tg = t.graph().underlying();
    let n = tg.vertex_count();
    let outcome = search_local_coloring(&tg, 4, n.max(4), budget)?;
    let quad_psi = local_chromatic_number(&q.underlying(), budget)?;
    let extended = extend_with_hub_color(&quad_psi.witness, &origin)?;
    if !crate::localcolor::is_local_coloring(&tg, &extended, quad_psi.upper + 1) {
        return Err(Error::InternalConsistency("hub extension is not a local coloring".into()));
    }
    Ok(TqReport { triangulation: t, outcome, quad_psi, extended })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_k4_projective, sphere_square};
    use crate::surface::classify_surface;

    #[test]
    fn sphere_square_gives_octahedron() {
        let (t, origin) = face_subdivision(&sphere_square()).unwrap();
        let g = t.graph();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (6, 12, 8));
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert_eq!(origin[5], VertexOrigin::Hub(1));
        assert!(t.odd_vertices().is_empty());
    }

    #[test]
    fn k4_subdivision() {
        let (k4, _) = build_k4_projective().unwrap();
        let (t, _) = face_subdivision(&k4).unwrap();
        let g = t.graph();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (7, 18, 12));
        assert_eq!(classify_surface(g), classify_surface(&k4));
    }

    #[test]
    fn rejects_triangles() {
        let (k4, _) = build_k4_projective().unwrap();
        let (t, _) = face_subdivision(&k4).unwrap();
        assert!(face_subdivision(t.graph()).is_err());
    }
}
