//! Polygonal complexes and the combinatorial objects derived from them.
//!
//! The central construction is [`build_x`]: given `m >= 2` and a connected
//! bipartite graph `L`, glue one 2m-gon per edge of `L` along labeled edges
//! so that the link of every vertex is `L`. The module also derives scwols
//! from complexes ([`scwol_of`], [`op_scwol_of`]), builds the chamber (cone
//! on the subdivided graph) and its scwol, the 1-dimensional scwol of a
//! simplicial graph, and decides hyperbolicity of the associated Coxeter
//! group.

mod bipartite;
mod chamber;
mod graph;
mod polygonal;

pub use bipartite::BipartiteGraph;
pub use chamber::{build_chamber, build_theta_scwol, chamber_scwol, Chamber, ChamberScwol};
pub use graph::{graph_isomorphic, verify_graph_isomorphism, SimpleGraph};
pub use polygonal::{
    build_polygon, build_x, op_scwol_of, scwol_of, CellRef, ComplexIssue, ComplexReport,
    ComplexScwol, PcEdge, PcFace, PolygonalComplex,
};

use crate::groups::SphericalSubset;
use crate::scwol::{EdgeId, Scwol};

/// Errors for graph and complex construction.
#[derive(Debug, thiserror::Error)]
pub enum ComplexError {
    #[error("bipartite graph is empty on one side")]
    EmptySide,
    #[error("bipartite graph is not connected")]
    NotConnected,
    #[error("edge ({0},{1}) out of range")]
    EdgeOutOfRange(usize, usize),
    #[error("polygon gons need m >= 2, got {0}")]
    MTooSmall(usize),
    #[error("complex has no generator labels; cannot assign types")]
    MissingTypeData,
    #[error("invalid graph JSON: {0}")]
    BadGraphJson(String),
}

/// Checks that every scwol edge increases the assigned type strictly.
pub fn type_orientation_issues(scwol: &Scwol, types: &[SphericalSubset]) -> Vec<EdgeId> {
    scwol
        .edge_ids()
        .filter(|&e| {
            let from = &types[scwol.initial(e).0];
            let to = &types[scwol.terminal(e).0];
            !to.strictly_contains(from)
        })
        .collect()
}

/// Hyperbolicity of the Coxeter group determined by `(m, L)`.
///
/// For `m >= 3` the group is always hyperbolic; for `m = 2` it is
/// hyperbolic exactly when `L` has no embedded 4-cycle, and a witness
/// cycle is returned otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityReport {
    pub hyperbolic: bool,
    /// Vertex labels of an embedded 4-cycle, when one obstructs.
    pub witness: Option<[String; 4]>,
}

pub fn hyperbolicity_report(m: usize, graph: &BipartiteGraph) -> HyperbolicityReport {
    if m >= 3 {
        return HyperbolicityReport {
            hyperbolic: true,
            witness: None,
        };
    }
    for i in 0..graph.q1() {
        for i2 in (i + 1)..graph.q1() {
            for j in 0..graph.q2() {
                for j2 in (j + 1)..graph.q2() {
                    if graph.contains_edge(i, j)
                        && graph.contains_edge(i2, j)
                        && graph.contains_edge(i2, j2)
                        && graph.contains_edge(i, j2)
                    {
                        return HyperbolicityReport {
                            hyperbolic: false,
                            witness: Some([
                                graph.left_names()[i].clone(),
                                graph.right_names()[j].clone(),
                                graph.left_names()[i2].clone(),
                                graph.right_names()[j2].clone(),
                            ]),
                        };
                    }
                }
            }
        }
    }
    HyperbolicityReport {
        hyperbolic: true,
        witness: None,
    }
}
