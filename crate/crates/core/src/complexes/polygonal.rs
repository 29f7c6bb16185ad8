//! Regular 2-complexes with the intersection property, and their scwols.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::{BipartiteGraph, ComplexError, SimpleGraph};
use crate::groups::SphericalSubset;
use crate::scwol::{Scwol, ScwolBuilder, VertexId};

/// An oriented, labeled edge of a polygonal complex.
#[derive(Clone, Debug)]
pub struct PcEdge {
    pub label: String,
    /// Generator name this edge projects to (`x1` for `x1^2`), when known.
    pub gen: Option<String>,
    /// Position superscript `k` of the edge around its polygons, when known.
    pub level: Option<usize>,
    pub from: usize,
    pub to: usize,
}

/// A face given by its cyclic boundary word.
#[derive(Clone, Debug)]
pub struct PcFace {
    pub label: String,
    /// Generator pair `(x_i, y_j)` this face corresponds to, when known.
    pub gens: Option<(String, String)>,
    /// `(edge index, traversed along orientation?)`, in cyclic order.
    pub boundary: Vec<(usize, bool)>,
}

/// A 2-dimensional regular CW complex with the intersection property.
///
/// Faces carry explicit cyclic boundary words with a distinguished starting
/// position, which makes gluing and equality checks deterministic.
#[derive(Clone, Debug)]
pub struct PolygonalComplex {
    vertices: Vec<String>,
    edges: Vec<PcEdge>,
    faces: Vec<PcFace>,
}

/// A closed cell of a [`PolygonalComplex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellRef {
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

/// One violation found by [`PolygonalComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexIssue {
    EdgeIsLoop { edge: usize },
    BoundaryBroken { face: usize },
    FaceTooSmall { face: usize },
    RepeatedEdgeInFace { face: usize },
    RepeatedVertexInFace { face: usize },
    IntersectionProperty { a: CellRef, b: CellRef },
    Disconnected,
}

/// Outcome of [`PolygonalComplex::validate`].
#[derive(Clone, Debug, Default)]
pub struct ComplexReport {
    pub issues: Vec<ComplexIssue>,
}

impl ComplexReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

impl PolygonalComplex {
    pub fn new(vertices: Vec<String>, edges: Vec<PcEdge>, faces: Vec<PcFace>) -> Self {
        PolygonalComplex {
            vertices,
            edges,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &PcEdge {
        &self.edges[e]
    }

    pub fn face(&self, f: usize) -> &PcFace {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[PcFace] {
        &self.faces
    }

    pub fn edge_by_label(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn face_by_label(&self, label: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.label == label)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    fn boundary_start(&self, step: (usize, bool)) -> usize {
        let e = &self.edges[step.0];
        if step.1 {
            e.from
        } else {
            e.to
        }
    }

    fn boundary_end(&self, step: (usize, bool)) -> usize {
        let e = &self.edges[step.0];
        if step.1 {
            e.to
        } else {
            e.from
        }
    }

    /// The corner vertices of a face in cyclic order; `corners[p]` sits
    /// between boundary steps `p` and `p+1`.
    pub fn corner_cycle(&self, f: usize) -> Vec<usize> {
        self.faces[f]
            .boundary
            .iter()
            .map(|&step| self.boundary_end(step))
            .collect()
    }

    /// The boundary word of a face as edge labels.
    pub fn boundary_word(&self, f: usize) -> Vec<String> {
        self.faces[f]
            .boundary
            .iter()
            .map(|&(e, forward)| {
                if forward {
                    self.edges[e].label.clone()
                } else {
                    format!("{}^-1", self.edges[e].label)
                }
            })
            .collect()
    }

    fn closed_cell(&self, c: CellRef) -> BTreeSet<CellRef> {
        let mut set = BTreeSet::new();
        match c {
            CellRef::Vertex(v) => {
                set.insert(CellRef::Vertex(v));
            }
            CellRef::Edge(e) => {
                set.insert(CellRef::Edge(e));
                set.insert(CellRef::Vertex(self.edges[e].from));
                set.insert(CellRef::Vertex(self.edges[e].to));
            }
            CellRef::Face(f) => {
                set.insert(CellRef::Face(f));
                for &(e, _) in &self.faces[f].boundary {
                    set.insert(CellRef::Edge(e));
                    set.insert(CellRef::Vertex(self.edges[e].from));
                    set.insert(CellRef::Vertex(self.edges[e].to));
                }
            }
        }
        set
    }

    pub fn all_cells(&self) -> Vec<CellRef> {
        (0..self.vertices.len())
            .map(CellRef::Vertex)
            .chain((0..self.edges.len()).map(CellRef::Edge))
            .chain((0..self.faces.len()).map(CellRef::Face))
            .collect()
    }

    /// Regularity validation: no edge loops, boundary words that chain up,
    /// at least three sides per face, attaching maps injective on edges and
    /// vertices, and connectivity.
    pub fn validate(&self) -> ComplexReport {
        let mut issues = Vec::new();

        for (idx, e) in self.edges.iter().enumerate() {
            if e.from == e.to {
                issues.push(ComplexIssue::EdgeIsLoop { edge: idx });
            }
        }

        for (idx, face) in self.faces.iter().enumerate() {
            if face.boundary.len() < 3 {
                issues.push(ComplexIssue::FaceTooSmall { face: idx });
            }
            let n = face.boundary.len();
            let broken = (0..n).any(|p| {
                self.boundary_end(face.boundary[p]) != self.boundary_start(face.boundary[(p + 1) % n])
            });
            if broken {
                issues.push(ComplexIssue::BoundaryBroken { face: idx });
                continue;
            }
            let mut edge_ids: Vec<usize> = face.boundary.iter().map(|&(e, _)| e).collect();
            edge_ids.sort();
            let had = edge_ids.len();
            edge_ids.dedup();
            if edge_ids.len() != had {
                issues.push(ComplexIssue::RepeatedEdgeInFace { face: idx });
            }
            let mut corners = self.corner_cycle(idx);
            corners.sort();
            let had = corners.len();
            corners.dedup();
            if corners.len() != had {
                issues.push(ComplexIssue::RepeatedVertexInFace { face: idx });
            }
        }

        if !self.is_connected() {
            issues.push(ComplexIssue::Disconnected);
        }

        ComplexReport { issues }
    }

    /// Strict intersection property, checked exhaustively over unordered
    /// cell pairs: two closed cells meet in nothing or in exactly one closed
    /// cell.
    ///
    /// This holds for simplicial-like complexes (single polygons, the
    /// chamber, simply-connected covers) but genuinely fails on glued
    /// quotients whenever two faces share more than one boundary edge, so it
    /// is a separate check rather than part of [`Self::validate`].
    pub fn intersection_property_issues(&self) -> Vec<ComplexIssue> {
        let cells = self.all_cells();
        let closures: Vec<BTreeSet<CellRef>> =
            cells.iter().map(|&c| self.closed_cell(c)).collect();
        let mut pair_issues: Vec<ComplexIssue> = (0..cells.len())
            .into_par_iter()
            .flat_map_iter(|ai| {
                let mut local = Vec::new();
                for bi in (ai + 1)..cells.len() {
                    let inter: BTreeSet<CellRef> =
                        closures[ai].intersection(&closures[bi]).copied().collect();
                    if inter.is_empty() {
                        continue;
                    }
                    let ok = inter.iter().any(|&m| {
                        let idx = cells.iter().position(|&c| c == m).unwrap();
                        closures[idx] == inter
                    });
                    if !ok {
                        local.push(ComplexIssue::IntersectionProperty {
                            a: cells[ai],
                            b: cells[bi],
                        });
                    }
                }
                local
            })
            .collect();
        pair_issues.sort_by_key(|i| match i {
            ComplexIssue::IntersectionProperty { a, b } => (*a, *b),
            _ => unreachable!(),
        });
        pair_issues
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (p, q) in [(e.from, e.to), (e.to, e.from)] {
                    if p == v && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The link of a vertex: one graph vertex per incident edge, one graph
    /// edge per face corner at `v`.
    pub fn link(&self, v: usize) -> SimpleGraph {
        let incident: Vec<usize> = (0..self.edges.len())
            .filter(|&e| self.edges[e].from == v || self.edges[e].to == v)
            .collect();
        let labels = incident
            .iter()
            .map(|&e| self.edges[e].label.clone())
            .collect();
        let mut graph = SimpleGraph::new(labels);
        let index_of: HashMap<usize, usize> = incident
            .iter()
            .enumerate()
            .map(|(pos, &e)| (e, pos))
            .collect();
        for (f, face) in self.faces.iter().enumerate() {
            let n = face.boundary.len();
            for p in 0..n {
                if self.boundary_end(face.boundary[p]) == v {
                    let e1 = face.boundary[p].0;
                    let e2 = face.boundary[(p + 1) % n].0;
                    if e1 != e2 {
                        graph.add_edge(index_of[&e1], index_of[&e2]);
                    }
                }
            }
            let _ = f;
        }
        graph
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "label": e.label,
                    "from": self.vertices[e.from],
                    "to": self.vertices[e.to],
                })
            })
            .collect();
        let faces: Vec<_> = (0..self.faces.len())
            .map(|f| {
                serde_json::json!({
                    "label": self.faces[f].label,
                    "boundary": self.boundary_word(f),
                })
            })
            .collect();
        serde_json::json!({
            "vertices": self.vertices,
            "edges": edges,
            "faces": faces,
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name);
        for (id, label) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", id, label));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  v{} -- v{} [label=\"{}\"];\n",
                e.from, e.to, e.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Glues one 2m-gon per edge of `L` along labeled edges: the complex with
/// `2m` vertices, `m (q1+q2)` edges and `|E(L)|` faces, all of whose vertex
/// links are `L`.
pub fn build_x(m: usize, graph: &BipartiteGraph) -> Result<PolygonalComplex, ComplexError> {
    if m < 2 {
        return Err(ComplexError::MTooSmall(m));
    }
    graph.require_connected()?;
    let (q1, q2) = (graph.q1(), graph.q2());

    let mut vertices = Vec::with_capacity(2 * m);
    for k in 1..=m {
        vertices.push(format!("u^{}", k));
        vertices.push(format!("v^{}", k));
    }
    let u = |k: usize| 2 * (k - 1);
    let v = |k: usize| 2 * (k - 1) + 1;

    let mut edges = Vec::with_capacity(m * (q1 + q2));
    // x_i^k runs from v^{k-1} (cyclically) to u^k; y_j^k from u^k to v^k.
    for i in 1..=q1 {
        for k in 1..=m {
            let from = if k == 1 { v(m) } else { v(k - 1) };
            edges.push(PcEdge {
                label: format!("x{}^{}", i, k),
                gen: Some(format!("x{}", i)),
                level: Some(k),
                from,
                to: u(k),
            });
        }
    }
    for j in 1..=q2 {
        for k in 1..=m {
            edges.push(PcEdge {
                label: format!("y{}^{}", j, k),
                gen: Some(format!("y{}", j)),
                level: Some(k),
                from: u(k),
                to: v(k),
            });
        }
    }
    let x_edge = |i: usize, k: usize| (i - 1) * m + (k - 1);
    let y_edge = |j: usize, k: usize| q1 * m + (j - 1) * m + (k - 1);

    let mut faces = Vec::with_capacity(graph.edge_count());
    for (i0, j0) in graph.edges() {
        let (i, j) = (i0 + 1, j0 + 1);
        let mut boundary = Vec::with_capacity(2 * m);
        for k in 1..=m {
            boundary.push((x_edge(i, k), true));
            boundary.push((y_edge(j, k), true));
        }
        faces.push(PcFace {
            label: format!("P(x{},y{})", i, j),
            gens: Some((format!("x{}", i), format!("y{}", j))),
            boundary,
        });
    }

    Ok(PolygonalComplex::new(vertices, edges, faces))
}

/// A single 2m-gon with boundary word `e_1 f_1 e_2 f_2 ...`, the base
/// polygon that `build_x` output projects onto.
pub fn build_polygon(m: usize) -> Result<PolygonalComplex, ComplexError> {
    if m < 2 {
        return Err(ComplexError::MTooSmall(m));
    }
    let mut vertices = Vec::with_capacity(2 * m);
    for k in 1..=m {
        vertices.push(format!("u_{}", k));
        vertices.push(format!("v_{}", k));
    }
    let u = |k: usize| 2 * (k - 1);
    let v = |k: usize| 2 * (k - 1) + 1;
    let mut edges = Vec::with_capacity(2 * m);
    for k in 1..=m {
        let from = if k == 1 { v(m) } else { v(k - 1) };
        edges.push(PcEdge {
            label: format!("e_{}", k),
            gen: Some("e".into()),
            level: Some(k),
            from,
            to: u(k),
        });
    }
    for k in 1..=m {
        edges.push(PcEdge {
            label: format!("f_{}", k),
            gen: Some("f".into()),
            level: Some(k),
            from: u(k),
            to: v(k),
        });
    }
    let mut boundary = Vec::with_capacity(2 * m);
    for k in 1..=m {
        boundary.push((k - 1, true));
        boundary.push((m + k - 1, true));
    }
    let faces = vec![PcFace {
        label: "P".into(),
        gens: None,
        boundary,
    }];
    Ok(PolygonalComplex::new(vertices, edges, faces))
}

/// A scwol derived from a complex, remembering which cell every scwol
/// vertex lies over.
#[derive(Clone, Debug)]
pub struct ComplexScwol {
    pub scwol: Scwol,
    /// Cell under each scwol vertex, indexed by `VertexId`.
    pub cells: Vec<CellRef>,
    /// Types by scwol vertex, present when the complex carries generator labels.
    pub types: Option<Vec<SphericalSubset>>,
    lookup: BTreeMap<CellRef, VertexId>,
}

impl ComplexScwol {
    pub fn vertex_of_cell(&self, c: CellRef) -> VertexId {
        self.lookup[&c]
    }

    pub fn cell_of_vertex(&self, v: VertexId) -> CellRef {
        self.cells[v.0]
    }
}

fn scwol_cell_label(x: &PolygonalComplex, c: CellRef) -> String {
    match c {
        CellRef::Vertex(v) => format!("vertex {}", x.vertex_label(v)),
        CellRef::Edge(e) => format!("mid {}", x.edge(e).label),
        CellRef::Face(f) => format!("bary {}", x.face(f).label),
    }
}

/// The scwol of a complex: one vertex per cell, one edge per strict
/// inclusion of cells, oriented from larger to smaller, with face-through-
/// edge-to-vertex compositions.
pub fn scwol_of(x: &PolygonalComplex) -> ComplexScwol {
    let mut builder = ScwolBuilder::new();
    let mut cells = Vec::new();
    let mut lookup = BTreeMap::new();

    let add = |builder: &mut ScwolBuilder,
                   cells: &mut Vec<CellRef>,
                   lookup: &mut BTreeMap<CellRef, VertexId>,
                   c: CellRef,
                   label: String| {
        let vid = builder.add_vertex(label);
        cells.push(c);
        lookup.insert(c, vid);
    };

    for vtx in 0..x.vertex_count() {
        let c = CellRef::Vertex(vtx);
        add(&mut builder, &mut cells, &mut lookup, c, scwol_cell_label(x, c));
    }
    for e in 0..x.edge_count() {
        let c = CellRef::Edge(e);
        add(&mut builder, &mut cells, &mut lookup, c, scwol_cell_label(x, c));
    }
    for f in 0..x.face_count() {
        let c = CellRef::Face(f);
        add(&mut builder, &mut cells, &mut lookup, c, scwol_cell_label(x, c));
    }

    for e in 0..x.edge_count() {
        let mid = lookup[&CellRef::Edge(e)];
        for endpoint in [x.edge(e).from, x.edge(e).to] {
            let vid = lookup[&CellRef::Vertex(endpoint)];
            builder.add_edge(
                format!("mid {} -> vertex {}", x.edge(e).label, x.vertex_label(endpoint)),
                mid,
                vid,
            );
        }
    }
    for f in 0..x.face_count() {
        let bary = lookup[&CellRef::Face(f)];
        let mut seen_edges = BTreeSet::new();
        for &(e, _) in &x.face(f).boundary {
            if seen_edges.insert(e) {
                builder.add_edge(
                    format!("bary {} -> mid {}", x.face(f).label, x.edge(e).label),
                    bary,
                    lookup[&CellRef::Edge(e)],
                );
            }
        }
        let mut seen_vertices = BTreeSet::new();
        for vtx in x.corner_cycle(f) {
            if seen_vertices.insert(vtx) {
                builder.add_edge(
                    format!("bary {} -> vertex {}", x.face(f).label, x.vertex_label(vtx)),
                    bary,
                    lookup[&CellRef::Vertex(vtx)],
                );
            }
        }
    }

    builder
        .infer_compositions()
        .expect("cell poset of a regular complex composes");
    ComplexScwol {
        scwol: builder.build(),
        cells,
        types: None,
        lookup,
    }
}

/// The opposite scwol with vertex types read off the generator labels:
/// vertices get the empty type, edge midpoints the singleton of their
/// generator, face barycenters the pair of theirs.
pub fn op_scwol_of(x: &PolygonalComplex) -> Result<ComplexScwol, ComplexError> {
    let base = scwol_of(x);
    let mut types = Vec::with_capacity(base.cells.len());
    for &c in &base.cells {
        let t = match c {
            CellRef::Vertex(_) => SphericalSubset::Empty,
            CellRef::Edge(e) => {
                let gen = x.edge(e).gen.clone().ok_or(ComplexError::MissingTypeData)?;
                SphericalSubset::Single(gen)
            }
            CellRef::Face(f) => {
                let (a, b) = x.face(f).gens.clone().ok_or(ComplexError::MissingTypeData)?;
                SphericalSubset::Pair(a, b)
            }
        };
        types.push(t);
    }
    Ok(ComplexScwol {
        scwol: base.scwol.opposite(),
        cells: base.cells,
        types: Some(types),
        lookup: base.lookup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{graph_isomorphic, type_orientation_issues};

    #[test]
    fn x_counts_m2_k22() {
        let x = build_x(2, &BipartiteGraph::complete(2, 2)).unwrap();
        assert_eq!(x.vertex_count(), 4);
        assert_eq!(x.edge_count(), 8);
        assert_eq!(x.face_count(), 4);
        assert_eq!(x.euler_characteristic(), 0);
        assert!(x.validate().is_clean());
    }

    #[test]
    fn x_counts_m3_path() {
        let l = BipartiteGraph::path(2).unwrap(); // x1 - y1 - x2
        let x = build_x(3, &l).unwrap();
        assert_eq!(x.vertex_count(), 6);
        assert_eq!(x.edge_count(), 9);
        assert_eq!(x.face_count(), 2);
        assert!(x.validate().is_clean());
    }

    #[test]
    fn x_counts_m4_k34() {
        let x = build_x(4, &BipartiteGraph::complete(3, 4)).unwrap();
        assert_eq!(x.vertex_count(), 8);
        assert_eq!(x.edge_count(), 28);
        assert_eq!(x.face_count(), 12);
        assert!(x.validate().is_clean());
    }

    #[test]
    fn every_link_is_l() {
        for (m, l) in [
            (2, BipartiteGraph::complete(2, 2)),
            (3, BipartiteGraph::complete(2, 3)),
            (3, BipartiteGraph::path(3).unwrap()),
        ] {
            let x = build_x(m, &l).unwrap();
            let reference = SimpleGraph::from_bipartite(&l);
            for v in 0..x.vertex_count() {
                let link = x.link(v);
                assert!(
                    graph_isomorphic(&link, &reference).is_some(),
                    "link at vertex {} for m={} is not L",
                    v,
                    m
                );
            }
        }
    }

    #[test]
    fn link_with_explicit_bijection_m3_k22() {
        // At u^1 the incident edges are x_i^1 and y_j^1 and the bijection
        // x_i^1 <-> x_i, y_j^1 <-> y_j is itself an isomorphism onto L.
        let l = BipartiteGraph::complete(2, 2);
        let x = build_x(3, &l).unwrap();
        let u1 = x.vertex_by_label("u^1").unwrap();
        let link = x.link(u1);
        let reference = SimpleGraph::from_bipartite(&l);
        let strip = |s: &str| s.split('^').next().unwrap().to_string();
        for a in 0..link.vertex_count() {
            for b in (a + 1)..link.vertex_count() {
                let la = reference.vertex_by_label(&strip(link.label(a))).unwrap();
                let lb = reference.vertex_by_label(&strip(link.label(b))).unwrap();
                assert_eq!(link.adjacent(a, b), reference.adjacent(la, lb));
            }
        }
    }

    #[test]
    fn corner_of_single_polygon_has_single_edge_link() {
        let p = build_polygon(3).unwrap();
        for v in 0..p.vertex_count() {
            let link = p.link(v);
            assert_eq!(link.vertex_count(), 2);
            assert_eq!(link.edge_count(), 1);
        }
    }

    #[test]
    fn single_square_scwol_counts() {
        let p = build_polygon(2).unwrap();
        let cs = scwol_of(&p);
        assert!(cs.scwol.validate().is_clean());
        let chains = cs.scwol.chains();
        assert_eq!(chains.vertices.len(), 9);
        assert_eq!(chains.edges.len(), 16);
        assert_eq!(chains.pairs.len(), 8);
    }

    #[test]
    fn hexagon_scwol_counts() {
        let p = build_polygon(3).unwrap();
        let cs = scwol_of(&p);
        let chains = cs.scwol.chains();
        assert_eq!(chains.vertices.len(), 13);
        assert_eq!(chains.edges.len(), 24);
        assert_eq!(chains.pairs.len(), 12);
    }

    #[test]
    fn op_scwol_types_are_increasing() {
        let x = build_x(3, &BipartiteGraph::complete(2, 2)).unwrap();
        let op = op_scwol_of(&x).unwrap();
        assert!(op.scwol.validate().is_clean());
        let issues = type_orientation_issues(&op.scwol, op.types.as_ref().unwrap());
        assert!(issues.is_empty());
    }

    #[test]
    fn op_scwol_is_opposite_of_scwol() {
        let x = build_x(2, &BipartiteGraph::complete(2, 2)).unwrap();
        let plain = scwol_of(&x);
        let op = op_scwol_of(&x).unwrap();
        for e in plain.scwol.edge_ids() {
            assert_eq!(plain.scwol.initial(e), op.scwol.terminal(e));
            assert_eq!(plain.scwol.terminal(e), op.scwol.initial(e));
        }
        assert_eq!(
            plain.scwol.chains().pairs.len(),
            op.scwol.chains().pairs.len()
        );
    }

    #[test]
    fn example_words_for_m4_k34() {
        let x = build_x(4, &BipartiteGraph::complete(3, 4)).unwrap();
        assert_eq!(x.face_count(), 12);
        let word = x.boundary_word(x.face_by_label("P(x2,y3)").unwrap());
        assert_eq!(
            word,
            ["x2^1", "y3^1", "x2^2", "y3^2", "x2^3", "y3^3", "x2^4", "y3^4"]
                .map(String::from)
                .to_vec()
        );
    }

    #[test]
    fn intersection_property_catches_double_edge() {
        // Two edges between the same vertices: their closed cells meet in
        // two vertices, which is not a single cell.
        let vertices = vec!["a".into(), "b".into(), "c".into()];
        let edges = vec![
            PcEdge { label: "e1".into(), gen: None, level: None, from: 0, to: 1 },
            PcEdge { label: "e2".into(), gen: None, level: None, from: 0, to: 1 },
            PcEdge { label: "e3".into(), gen: None, level: None, from: 1, to: 2 },
            PcEdge { label: "e4".into(), gen: None, level: None, from: 2, to: 0 },
        ];
        let faces = vec![PcFace {
            label: "F".into(),
            gens: None,
            boundary: vec![(0, true), (2, true), (3, true)],
        }];
        let x = PolygonalComplex::new(vertices, edges, faces);
        assert!(x.validate().is_clean());
        let issues = x.intersection_property_issues();
        assert!(issues
            .iter()
            .any(|i| matches!(i, ComplexIssue::IntersectionProperty { .. })));
    }

    #[test]
    fn single_polygon_has_intersection_property() {
        for m in 2..=5 {
            let p = build_polygon(m).unwrap();
            assert!(p.validate().is_clean());
            assert!(p.intersection_property_issues().is_empty());
        }
    }

    #[test]
    fn disconnected_graph_rejected() {
        let l = BipartiteGraph::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(build_x(3, &l).is_err());
    }
}
