//! The chamber: cone on the barycentric subdivision of `L`, with vertex
//! types, mirrors, and the associated scwol.

use std::collections::BTreeMap;

use super::{BipartiteGraph, ComplexError, PcEdge, PcFace, PolygonalComplex, SimpleGraph};
use crate::groups::SphericalSubset;
use crate::scwol::{Scwol, ScwolBuilder, VertexId};

/// The cone on the subdivided graph, together with type and mirror data.
///
/// Vertices carry the spherical subsets as types: the cone point the empty
/// set, each original graph vertex its singleton, each edge midpoint its
/// pair. Simplices are metrized only symbolically (angle `pi/2m` at the
/// pair vertex, `pi/2` at the singleton, `pi/4` at the cone point).
#[derive(Clone, Debug)]
pub struct Chamber {
    pub m: usize,
    pub complex: PolygonalComplex,
    /// Type of each complex vertex.
    pub types: Vec<SphericalSubset>,
    /// Mirror of each generator: the subdivided-edge indices touching it.
    pub mirrors: BTreeMap<String, Vec<usize>>,
}

impl Chamber {
    /// The vertices shared by two mirrors: a single midpoint when the
    /// generators are adjacent in `L`, nothing otherwise.
    pub fn mirror_intersection(&self, s1: &str, s2: &str) -> Vec<usize> {
        let empty = Vec::new();
        let m1 = self.mirrors.get(s1).unwrap_or(&empty);
        let m2 = self.mirrors.get(s2).unwrap_or(&empty);
        let vertices = |edges: &[usize]| {
            let mut vs: Vec<usize> = edges
                .iter()
                .flat_map(|&e| {
                    let ed = self.complex.edge(e);
                    [ed.from, ed.to]
                })
                .collect();
            vs.sort();
            vs.dedup();
            vs
        };
        let v1 = vertices(m1);
        let v2 = vertices(m2);
        v1.into_iter().filter(|v| v2.contains(v)).collect()
    }
}

/// Builds the chamber for `(m, L)`: one cone point, one vertex per graph
/// vertex, one per edge midpoint; triangles `(cone, s, midpoint)` for each
/// subdivided half-edge.
pub fn build_chamber(m: usize, graph: &BipartiteGraph) -> Result<Chamber, ComplexError> {
    if m < 2 {
        return Err(ComplexError::MTooSmall(m));
    }
    graph.require_connected()?;

    let mut vertices = vec!["cone".to_string()];
    let mut types = vec![SphericalSubset::Empty];
    let mut vertex_of: BTreeMap<String, usize> = BTreeMap::new();
    for name in graph.left_names().iter().chain(graph.right_names()) {
        vertex_of.insert(name.clone(), vertices.len());
        vertices.push(name.clone());
        types.push(SphericalSubset::Single(name.clone()));
    }
    let mut mid_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, j) in graph.edges() {
        let x = graph.left_names()[i].clone();
        let y = graph.right_names()[j].clone();
        mid_of.insert((i, j), vertices.len());
        vertices.push(format!("mid({},{})", x, y));
        types.push(SphericalSubset::Pair(x, y));
    }

    let mut edges: Vec<PcEdge> = Vec::new();
    let mut mirrors: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    // Subdivided halves of the edges of L: these are the mirror pieces.
    for (i, j) in graph.edges() {
        let x = &graph.left_names()[i];
        let y = &graph.right_names()[j];
        let mid = mid_of[&(i, j)];
        for s in [x, y] {
            let idx = edges.len();
            edges.push(PcEdge {
                label: format!("{}-mid({},{})", s, x, y),
                gen: None,
                level: None,
                from: vertex_of[s.as_str()],
                to: mid,
            });
            mirrors.entry(s.to_string()).or_default().push(idx);
        }
    }
    // Cone edges to every vertex of the subdivision.
    let mut cone_edge_to: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, label) in vertices.iter().enumerate().skip(1) {
        cone_edge_to.insert(v, edges.len());
        edges.push(PcEdge {
            label: format!("cone-{}", label),
            gen: None,
            level: None,
            from: 0,
            to: v,
        });
    }

    // One triangle per subdivided half-edge.
    let mut faces: Vec<PcFace> = Vec::new();
    for (idx, (i, j)) in graph.edges().enumerate() {
        let x = &graph.left_names()[i];
        let y = &graph.right_names()[j];
        let mid = mid_of[&(i, j)];
        for (half, s) in [x, y].into_iter().enumerate() {
            let sv = vertex_of[s.as_str()];
            let half_edge = 2 * idx + half;
            faces.push(PcFace {
                label: format!("tri(cone,{},mid({},{}))", s, x, y),
                gens: None,
                boundary: vec![
                    (cone_edge_to[&sv], true),
                    (half_edge, true),
                    (cone_edge_to[&mid], false),
                ],
            });
        }
    }

    Ok(Chamber {
        m,
        complex: PolygonalComplex::new(vertices, edges, faces),
        types,
        mirrors,
    })
}

/// The chamber scwol: vertices of the chamber, edges oriented by strict
/// type inclusion, compositions through the singleton types.
#[derive(Clone, Debug)]
pub struct ChamberScwol {
    pub scwol: Scwol,
    pub types: Vec<SphericalSubset>,
    by_type: BTreeMap<SphericalSubset, VertexId>,
}

impl ChamberScwol {
    pub fn vertex_of_type(&self, t: &SphericalSubset) -> Option<VertexId> {
        self.by_type.get(t).copied()
    }
}

pub fn chamber_scwol(chamber: &Chamber) -> ChamberScwol {
    let mut builder = ScwolBuilder::new();
    let mut by_type = BTreeMap::new();
    for v in 0..chamber.complex.vertex_count() {
        let vid = builder.add_vertex(chamber.complex.vertex_label(v).to_string());
        by_type.insert(chamber.types[v].clone(), vid);
    }
    for e in 0..chamber.complex.edge_count() {
        let edge = chamber.complex.edge(e);
        let (from, to) =
            if chamber.types[edge.to].strictly_contains(&chamber.types[edge.from]) {
                (edge.from, edge.to)
            } else {
                (edge.to, edge.from)
            };
        builder.add_edge(
            format!(
                "{} -> {}",
                chamber.complex.vertex_label(from),
                chamber.complex.vertex_label(to)
            ),
            VertexId(from),
            VertexId(to),
        );
    }
    builder
        .infer_compositions()
        .expect("chamber scwol composes");
    ChamberScwol {
        scwol: builder.build(),
        types: chamber.types.clone(),
        by_type,
    }
}

/// The 1-dimensional scwol of a simplicial graph: sources are the graph
/// vertices, sinks the edge barycenters, and there are no composable pairs.
pub fn build_theta_scwol(theta: &SimpleGraph) -> Scwol {
    let mut builder = ScwolBuilder::new();
    let sources: Vec<VertexId> = (0..theta.vertex_count())
        .map(|v| builder.add_vertex(theta.label(v).to_string()))
        .collect();
    for (a, b) in theta.edges() {
        let sink = builder.add_vertex(format!("mid({},{})", theta.label(a), theta.label(b)));
        builder.add_edge(format!("{} -> mid", theta.label(a)), sources[a], sink);
        builder.add_edge(format!("{} -> mid", theta.label(b)), sources[b], sink);
    }
    builder.build()
}
