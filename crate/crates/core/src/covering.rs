//! Coverings of complexes of groups: verifier, explicit constructions,
//! and a backtracking search.
//!
//! A covering of a complex of groups by a trivial complex consists of a
//! non-degenerate scwol morphism `f` together with one codomain group
//! element `phi(a)` per domain edge, subject to two conditions:
//!
//! 1. `phi(ab) = phi(a) . psi_{f(a)}(phi(b))` on every composable pair;
//! 2. over every domain vertex and every codomain edge `b` into its image,
//!    `a -> phi(a)` induces a bijection from the fiber edges onto the left
//!    cosets of the image of `psi_b`.
//!
//! [`CoveringData::verify`] checks both exhaustively, counts sheets from
//! every codomain vertex, and cross-checks the Euler characteristic
//! multiplicativity. [`build_phi_gamma`] and [`build_psi_w`] produce the
//! two canonical coverings of the polygon of groups (`q1*q2` sheets) and
//! of the chamber of groups (`2m` sheets); [`search_covering`] finds an
//! element family from scratch by backtracking, as an independent route.

use std::collections::BTreeMap;

use num::rational::Rational64;
use rayon::prelude::*;

use crate::cog::{
    build_g_k, build_g_p, trivial_cog, BuildCogError, ChamberOfGroups, ComplexOfGroups,
    PolygonOfGroups,
};
use crate::complexes::{
    build_x, op_scwol_of, scwol_of, BipartiteGraph, CellRef, ComplexError, ComplexScwol,
};
use crate::groups::{dihedral_word, Elem, GroupTable};
use crate::scwol::{EdgeId, MorphismIssue, ScwolMorphism, VertexId};

/// One violated covering requirement.
#[derive(Clone, Debug)]
pub enum CoveringIssue {
    DomainNotTrivial,
    Morphism(MorphismIssue),
    /// The codomain complex of groups fails its own validation.
    CodomainInvalid { detail: String },
    /// `phi(a)` is not an element of the local group at `f(t(a))`.
    PhiOutOfRange { edge: EdgeId },
    /// Condition 1 fails on the composable pair `(a, b)`.
    Condition1 { a: EdgeId, b: EdgeId },
    /// Condition 2 fails over `(vertex, codomain edge)`.
    Condition2 {
        vertex: VertexId,
        codomain_edge: EdgeId,
        detail: String,
    },
    /// Per-vertex sheet counts disagree.
    SheetsInconsistent { detail: String },
}

impl std::fmt::Display for CoveringIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoveringIssue::DomainNotTrivial => write!(f, "domain complex is not trivial"),
            CoveringIssue::Morphism(m) => write!(f, "scwol morphism invalid: {}", m),
            CoveringIssue::CodomainInvalid { detail } => {
                write!(f, "codomain complex invalid: {}", detail)
            }
            CoveringIssue::PhiOutOfRange { edge } => {
                write!(f, "phi value out of range on edge {:?}", edge)
            }
            CoveringIssue::Condition1 { a, b } => {
                write!(f, "condition 1 fails on pair ({:?},{:?})", a, b)
            }
            CoveringIssue::Condition2 {
                vertex,
                codomain_edge,
                detail,
            } => write!(
                f,
                "condition 2 fails at vertex {:?} over codomain edge {:?}: {}",
                vertex, codomain_edge, detail
            ),
            CoveringIssue::SheetsInconsistent { detail } => {
                write!(f, "sheet count inconsistent: {}", detail)
            }
        }
    }
}

/// All issues found by [`CoveringData::verify`].
#[derive(Clone, Debug, Default)]
pub struct CoveringReport {
    pub issues: Vec<CoveringIssue>,
}

impl CoveringReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn condition1_ok(&self) -> bool {
        !self
            .issues
            .iter()
            .any(|i| matches!(i, CoveringIssue::Condition1 { .. }))
    }

    pub fn condition2_ok(&self) -> bool {
        !self
            .issues
            .iter()
            .any(|i| matches!(i, CoveringIssue::Condition2 { .. }))
    }
}

/// Exact multiplicativity data: `chi(domain) = sheets * chi_orb(codomain)`.
#[derive(Clone, Debug)]
pub struct EulerCheck {
    pub chi_domain: i64,
    pub chi_orb_codomain: Rational64,
    /// `None` when the sheet count is itself inconsistent.
    pub multiplicative: Option<bool>,
}

/// Result of verifying a covering.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub report: CoveringReport,
    /// The common sheet count, when consistent across codomain vertices.
    pub sheets: Option<usize>,
    /// Fiber size over each codomain vertex, by label.
    pub fibers: BTreeMap<String, usize>,
    pub euler: EulerCheck,
}

/// A candidate covering: trivial domain, codomain complex of groups, scwol
/// morphism, and the element family `phi`.
#[derive(Clone, Debug)]
pub struct CoveringData {
    pub domain: ComplexOfGroups,
    pub codomain: ComplexOfGroups,
    pub morphism: ScwolMorphism,
    phi: Vec<Elem>,
}

impl CoveringData {
    pub fn new(
        domain: ComplexOfGroups,
        codomain: ComplexOfGroups,
        morphism: ScwolMorphism,
        phi: Vec<Elem>,
    ) -> Self {
        assert_eq!(phi.len(), domain.base().edge_count());
        CoveringData {
            domain,
            codomain,
            morphism,
            phi,
        }
    }

    pub fn phi(&self, e: EdgeId) -> Elem {
        self.phi[e.0]
    }

    /// The group `phi(e)` is supposed to live in.
    pub fn phi_group(&self, e: EdgeId) -> &GroupTable {
        let target = self.morphism.vertex_image(self.domain.base().terminal(e));
        self.codomain.local_group(target)
    }

    /// Overwrites one element; used for fault injection.
    pub fn set_phi(&mut self, e: EdgeId, v: Elem) {
        self.phi[e.0] = v;
    }

    /// Full verification: morphism validity, triviality of the domain,
    /// validity of the codomain, both covering conditions, and the sheet
    /// count from every codomain vertex.
    pub fn verify(&self) -> VerifyOutcome {
        let mut issues = Vec::new();
        let dom = self.domain.base();
        let cod = self.codomain.base();

        if !self.domain.is_trivial() {
            issues.push(CoveringIssue::DomainNotTrivial);
        }
        for issue in self.morphism.validate(dom, cod).issues {
            issues.push(CoveringIssue::Morphism(issue));
        }
        let codomain_ok = {
            let report = self.codomain.validate();
            for issue in &report.issues {
                issues.push(CoveringIssue::CodomainInvalid {
                    detail: issue.to_string(),
                });
            }
            report.is_clean()
        };

        let mut range_ok = true;
        for e in dom.edge_ids() {
            if self.phi(e).0 >= self.phi_group(e).order() {
                issues.push(CoveringIssue::PhiOutOfRange { edge: e });
                range_ok = false;
            }
        }

        // With a broken morphism, broken codomain, or out-of-range values
        // the conditions are not well posed; report what we have.
        let morphism_ok = !issues
            .iter()
            .any(|i| matches!(i, CoveringIssue::Morphism(_)));
        if morphism_ok && codomain_ok && range_ok {
            issues.extend(self.check_condition1());
            issues.extend(self.check_condition2());
        }

        let (sheets, fibers, sheet_issues) = self.sheet_count();
        issues.extend(sheet_issues);

        let chi_domain = dom.euler_characteristic();
        let chi_orb = self.codomain.euler_orbifold();
        let multiplicative = sheets.map(|n| {
            Rational64::from_integer(chi_domain) == Rational64::from_integer(n as i64) * chi_orb
        });

        VerifyOutcome {
            report: CoveringReport { issues },
            sheets,
            fibers,
            euler: EulerCheck {
                chi_domain,
                chi_orb_codomain: chi_orb,
                multiplicative,
            },
        }
    }

    fn check_condition1(&self) -> Vec<CoveringIssue> {
        let dom = self.domain.base();
        let pairs = dom.composable_pairs();
        let mut found: Vec<(EdgeId, EdgeId)> = pairs
            .par_iter()
            .filter_map(|&(a, b)| {
                let ab = dom.composite(a, b)?;
                let psi = self.codomain.edge_mono(self.morphism.edge_image(a));
                let group = self.phi_group(a);
                let expected = group.mul(self.phi(a), psi.apply(self.phi(b)));
                if expected != self.phi(ab) {
                    Some((a, b))
                } else {
                    None
                }
            })
            .collect();
        found.sort();
        found
            .into_iter()
            .map(|(a, b)| CoveringIssue::Condition1 { a, b })
            .collect()
    }

    fn check_condition2(&self) -> Vec<CoveringIssue> {
        let dom = self.domain.base();
        let cod = self.codomain.base();
        let vertices: Vec<VertexId> = dom.vertices().collect();
        let mut found: Vec<(usize, usize, String)> = vertices
            .par_iter()
            .flat_map_iter(|&sigma| {
                let mut local = Vec::new();
                let image = self.morphism.vertex_image(sigma);
                let group = self.codomain.local_group(image);
                for &b in cod.edges_in(image) {
                    let sub = self.codomain.edge_mono(b).image();
                    let cosets = crate::groups::left_cosets(group, &sub)
                        .expect("monomorphism image is a subgroup");
                    let fiber: Vec<EdgeId> = dom
                        .edges_in(sigma)
                        .iter()
                        .copied()
                        .filter(|&a| self.morphism.edge_image(a) == b)
                        .collect();
                    if fiber.len() != cosets.len() {
                        local.push((
                            sigma.0,
                            b.0,
                            format!("{} fiber edges vs {} cosets", fiber.len(), cosets.len()),
                        ));
                        continue;
                    }
                    let mut hit = vec![false; cosets.len()];
                    for &a in &fiber {
                        let idx = crate::groups::coset_index(&cosets, self.phi(a));
                        if hit[idx] {
                            local.push((
                                sigma.0,
                                b.0,
                                format!(
                                    "two fiber edges land in the coset of {}",
                                    group.element_name(cosets[idx][0])
                                ),
                            ));
                            break;
                        }
                        hit[idx] = true;
                    }
                }
                local
            })
            .collect();
        found.sort();
        found
            .into_iter()
            .map(|(v, b, detail)| CoveringIssue::Condition2 {
                vertex: VertexId(v),
                codomain_edge: EdgeId(b),
                detail,
            })
            .collect()
    }

    /// Sheet count from every codomain vertex, with consistency issues.
    fn sheet_count(&self) -> (Option<usize>, BTreeMap<String, usize>, Vec<CoveringIssue>) {
        let dom = self.domain.base();
        let cod = self.codomain.base();
        let mut fibers: BTreeMap<String, usize> = BTreeMap::new();
        let mut per_vertex: Vec<usize> = Vec::new();
        for tau in cod.vertices() {
            let fiber = dom
                .vertices()
                .filter(|&s| self.morphism.vertex_image(s) == tau)
                .count();
            fibers.insert(cod.vertex_label(tau).to_string(), fiber);
            per_vertex.push(fiber * self.codomain.local_group(tau).order());
        }
        let mut issues = Vec::new();
        let n = per_vertex.first().copied();
        let consistent = per_vertex.iter().all(|&v| Some(v) == n);
        if !consistent {
            let mut counts: Vec<String> = cod
                .vertices()
                .map(|t| format!("{}:{}", cod.vertex_label(t), per_vertex[t.0]))
                .collect();
            counts.sort();
            issues.push(CoveringIssue::SheetsInconsistent {
                detail: counts.join(", "),
            });
            return (None, fibers, issues);
        }
        (n, fibers, issues)
    }

    /// JSON covering report with sheet count, per-vertex fibers, condition
    /// statuses and the exact Euler cross-check.
    pub fn report_json(&self) -> serde_json::Value {
        let outcome = self.verify();
        let chi = outcome.euler.chi_orb_codomain;
        let chi_str = format!("{}/{}", chi.numer(), chi.denom());
        let mut euler = serde_json::Map::new();
        euler.insert("chiX".into(), serde_json::json!(outcome.euler.chi_domain));
        euler.insert("chiOrb".into(), serde_json::json!(chi_str));
        if chi != Rational64::from_integer(0) {
            let ratio = Rational64::from_integer(outcome.euler.chi_domain) / chi;
            if ratio.is_integer() {
                euler.insert("ratio".into(), serde_json::json!(ratio.to_integer()));
            } else {
                euler.insert(
                    "ratio".into(),
                    serde_json::json!(format!("{}/{}", ratio.numer(), ratio.denom())),
                );
            }
        } else if let Some(n) = outcome.sheets {
            let product = chi * Rational64::from_integer(n as i64);
            euler.insert(
                "product".into(),
                serde_json::json!(format!("{}/{}", product.numer(), product.denom())),
            );
        }
        let status = |ok: bool| if ok { "ok" } else { "failed" };
        serde_json::json!({
            "sheets": outcome.sheets,
            "sheetLowerBound": sheet_lower_bound(&self.codomain),
            "fibers": outcome.fibers,
            "condition1": status(outcome.report.condition1_ok()),
            "condition2": status(outcome.report.condition2_ok()),
            "euler": serde_json::Value::Object(euler),
            "issues": outcome.report.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Lower bound on the index of a torsion-free subgroup: the largest local
/// group order of the codomain.
pub fn sheet_lower_bound(codomain: &ComplexOfGroups) -> usize {
    codomain
        .base()
        .vertices()
        .map(|v| codomain.local_group(v).order())
        .max()
        .unwrap_or(1)
}

#[derive(Debug, thiserror::Error)]
pub enum CoveringBuildError {
    #[error("the polygon-of-groups covering requires both sides of size at least two")]
    GraphNotComplete,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cog(#[from] BuildCogError),
    #[error("internal construction error: {0}")]
    Internal(String),
}

fn edge_image_by_endpoints(
    domain: &ComplexScwol,
    target: &crate::scwol::Scwol,
    vertex_map: &[VertexId],
) -> Result<Vec<EdgeId>, CoveringBuildError> {
    domain
        .scwol
        .edge_ids()
        .map(|e| {
            let from = vertex_map[domain.scwol.initial(e).0];
            let to = vertex_map[domain.scwol.terminal(e).0];
            target.edge_between(from, to).ok_or_else(|| {
                CoveringBuildError::Internal(format!(
                    "no codomain edge under {}",
                    domain.scwol.edge_label(e)
                ))
            })
        })
        .collect()
}

/// Fills the composite-edge values from condition 1.
fn force_composites(
    domain: &ComplexOfGroups,
    codomain: &ComplexOfGroups,
    morphism: &ScwolMorphism,
    phi: &mut [Option<Elem>],
) {
    let dom = domain.base();
    for (a, b) in dom.composable_pairs() {
        let ab = dom.composite(a, b).expect("domain scwol is valid");
        if phi[ab.0].is_some() {
            continue;
        }
        if let (Some(pa), Some(pb)) = (phi[a.0], phi[b.0]) {
            let psi = codomain.edge_mono(morphism.edge_image(a));
            let group = codomain.local_group(morphism.vertex_image(dom.terminal(a)));
            phi[ab.0] = Some(group.mul(pa, psi.apply(pb)));
        }
    }
}

/// The covering of the polygon of groups by the complex over the complete
/// graph, with `q1*q2` sheets, over arbitrary groups of orders `q1`, `q2`.
pub fn build_phi_gamma_with(
    m: usize,
    g1: &GroupTable,
    g2: &GroupTable,
) -> Result<CoveringData, CoveringBuildError> {
    let (q1, q2) = (g1.order(), g2.order());
    let graph = BipartiteGraph::complete(q1, q2);
    let x = build_x(m, &graph)?;
    let xs = scwol_of(&x);
    let domain = trivial_cog(&xs.scwol);
    let pog: PolygonOfGroups = build_g_p(m, q1, q2, g1, g2)?;

    let left_index = |gen: &str| graph.left_names().iter().position(|n| n == gen);
    let right_index = |gen: &str| graph.right_names().iter().position(|n| n == gen);
    // build_x creates faces in the order of the graph's edge list
    let face_pairs: Vec<(usize, usize)> = graph.edges().collect();

    let mut vertex_map = Vec::with_capacity(xs.scwol.vertex_count());
    for &cell in &xs.cells {
        let image_cell = match cell {
            CellRef::Vertex(v) => CellRef::Vertex(v),
            CellRef::Edge(e) => {
                let edge = x.edge(e);
                let k = edge
                    .level
                    .ok_or_else(|| CoveringBuildError::Internal("edge without level".into()))?;
                let gen = edge.gen.as_deref().unwrap_or_default();
                if left_index(gen).is_some() {
                    CellRef::Edge(k - 1) // e_k
                } else {
                    CellRef::Edge(m + k - 1) // f_k
                }
            }
            CellRef::Face(_) => CellRef::Face(0),
        };
        vertex_map.push(pog.cells.vertex_of_cell(image_cell));
    }
    let edge_map = edge_image_by_endpoints(&xs, &pog.cells.scwol, &vertex_map)?;
    let morphism = ScwolMorphism {
        vertex_map,
        edge_map,
    };

    // phi on generating edges; composites forced by condition 1.
    let mut phi: Vec<Option<Elem>> = vec![None; xs.scwol.edge_count()];
    for e in xs.scwol.edge_ids() {
        let from = xs.cell_of_vertex(xs.scwol.initial(e));
        let to = xs.cell_of_vertex(xs.scwol.terminal(e));
        match (from, to) {
            (CellRef::Edge(xe), CellRef::Vertex(_)) => {
                // mid -> vertex: the generator index, embedded through its
                // factor, independent of the level k.
                let gen = x.edge(xe).gen.as_deref().unwrap_or_default();
                let value = if let Some(i) = left_index(gen) {
                    pog.embed_g1.apply(Elem(i))
                } else if let Some(j) = right_index(gen) {
                    pog.embed_g2.apply(Elem(j))
                } else {
                    return Err(CoveringBuildError::Internal(format!(
                        "unknown generator {}",
                        gen
                    )));
                };
                phi[e.0] = Some(value);
            }
            (CellRef::Face(xf), CellRef::Edge(xe)) => {
                // bary -> mid: the face's opposite index, in the factor
                // carried by the midpoint.
                let (i, j) = face_pairs[xf];
                let gen = x.edge(xe).gen.as_deref().unwrap_or_default();
                let value = if left_index(gen).is_some() {
                    Elem(j) // e-midpoints carry G2
                } else {
                    Elem(i) // f-midpoints carry G1
                };
                phi[e.0] = Some(value);
            }
            (CellRef::Face(_), CellRef::Vertex(_)) => {} // composite
            other => {
                return Err(CoveringBuildError::Internal(format!(
                    "unexpected domain edge between {:?}",
                    other
                )))
            }
        }
    }
    force_composites(&domain, &pog.cog, &morphism, &mut phi);
    let phi = phi
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CoveringBuildError::Internal("phi not total".into()))?;

    Ok(CoveringData::new(domain, pog.cog, morphism, phi))
}

/// [`build_phi_gamma_with`] over cyclic groups.
pub fn build_phi_gamma(m: usize, q1: usize, q2: usize) -> Result<CoveringData, CoveringBuildError> {
    if q1 < 2 || q2 < 2 {
        return Err(CoveringBuildError::GraphNotComplete);
    }
    let g1 = GroupTable::cyclic(q1, "g1");
    let g2 = GroupTable::cyclic(q2, "g2");
    build_phi_gamma_with(m, &g1, &g2)
}

/// Boundary position of an edge with superscript `k`: left edges sit at
/// `2(k-1)`, right edges at `2k-1`, identically in every face containing
/// them.
fn boundary_position(is_left: bool, k: usize) -> usize {
    if is_left {
        2 * (k - 1)
    } else {
        2 * k - 1
    }
}

/// The covering of the chamber of groups by the opposite scwol of the
/// complex, with `2m` sheets, for any connected bipartite graph.
///
/// The element family is derived structurally rather than transcribed:
/// walking a face boundary forward from position 1 through position `m`
/// assigns the alternating words starting with the right generator,
/// walking backward from position 0 assigns those starting with the left
/// one, and condition 1 forces every composite. The two walks agree at the
/// far vertex because the two longest alternating words coincide.
pub fn build_psi_w(m: usize, graph: &BipartiteGraph) -> Result<CoveringData, CoveringBuildError> {
    let x = build_x(m, graph)?;
    let op = op_scwol_of(&x)?;
    let domain = trivial_cog(&op.scwol);
    let chg: ChamberOfGroups = build_g_k(m, graph)?;
    let types = op
        .types
        .as_ref()
        .ok_or_else(|| CoveringBuildError::Internal("untyped opposite scwol".into()))?;

    let mut vertex_map = Vec::with_capacity(op.scwol.vertex_count());
    for t in types {
        let image = chg
            .chamber_scwol
            .vertex_of_type(t)
            .ok_or_else(|| CoveringBuildError::Internal(format!("no chamber vertex of type {}", t)))?;
        vertex_map.push(image);
    }
    let edge_map = edge_image_by_endpoints(&op, &chg.chamber_scwol.scwol, &vertex_map)?;
    let morphism = ScwolMorphism {
        vertex_map,
        edge_map,
    };

    let is_left = |gen: &str| graph.left_names().iter().any(|n| n == gen);
    let internal = |e: crate::groups::GroupError| CoveringBuildError::Internal(e.to_string());

    let mut phi: Vec<Option<Elem>> = vec![None; op.scwol.edge_count()];
    for e in op.scwol.edge_ids() {
        let from = op.cell_of_vertex(op.scwol.initial(e));
        let to = op.cell_of_vertex(op.scwol.terminal(e));
        match (from, to) {
            (CellRef::Vertex(xv), CellRef::Edge(xe)) => {
                // vertex -> midpoint: order-two target; the head endpoint
                // takes the generator on the forward walk, the tail on the
                // backward one.
                let edge = x.edge(xe);
                let gen = edge.gen.as_deref().unwrap_or_default();
                let k = edge
                    .level
                    .ok_or_else(|| CoveringBuildError::Internal("edge without level".into()))?;
                let p = boundary_position(is_left(gen), k);
                let forward_walk = (1..=m).contains(&p);
                let at_head = edge.to == xv;
                let group = chg
                    .cog
                    .local_group(morphism.vertex_image(op.scwol.terminal(e)));
                let value = if forward_walk == at_head {
                    group.element_by_name(gen).map_err(internal)?
                } else {
                    group.identity()
                };
                phi[e.0] = Some(value);
            }
            (CellRef::Edge(xe), CellRef::Face(xf)) => {
                // midpoint -> barycenter: alternating words by position.
                let edge = x.edge(xe);
                let gen = edge.gen.as_deref().unwrap_or_default();
                let k = edge
                    .level
                    .ok_or_else(|| CoveringBuildError::Internal("edge without level".into()))?;
                let p = boundary_position(is_left(gen), k);
                let group = chg
                    .cog
                    .local_group(morphism.vertex_image(op.scwol.terminal(e)));
                let (xg, yg) = x
                    .face(xf)
                    .gens
                    .clone()
                    .ok_or_else(|| CoveringBuildError::Internal("face without gens".into()))?;
                let x_gen = group.element_by_name(&xg).map_err(internal)?;
                let y_gen = group.element_by_name(&yg).map_err(internal)?;
                let value = if p <= 1 {
                    group.identity()
                } else if p <= m {
                    dihedral_word(group, y_gen, x_gen, p - 1).map_err(internal)?
                } else {
                    dihedral_word(group, x_gen, y_gen, 2 * m - p).map_err(internal)?
                };
                phi[e.0] = Some(value);
            }
            (CellRef::Vertex(_), CellRef::Face(_)) => {} // composite
            other => {
                return Err(CoveringBuildError::Internal(format!(
                    "unexpected domain edge between {:?}",
                    other
                )))
            }
        }
    }
    force_composites(&domain, &chg.cog, &morphism, &mut phi);
    let phi = phi
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CoveringBuildError::Internal("phi not total".into()))?;

    Ok(CoveringData::new(domain, chg.cog, morphism, phi))
}

/// Backtracking search for an element family making `(domain, codomain, f)`
/// a covering. The result is re-verifiable but need not match any hand
/// construction. Deterministic: variables are taken in breadth-first order
/// over the chain structure, values in canonical element order, and
/// composite edges are forced through condition 1.
pub fn search_covering(
    domain: &ComplexOfGroups,
    codomain: &ComplexOfGroups,
    morphism: &ScwolMorphism,
    max_nodes: Option<u64>,
) -> Option<CoveringData> {
    if !domain.is_trivial() {
        return None;
    }
    let dom = domain.base();
    let cod = codomain.base();
    if !morphism.validate(dom, cod).is_clean() {
        return None;
    }
    if !codomain.validate().is_clean() {
        return None;
    }

    // Coset structure per codomain edge: count and element -> coset table.
    let mut coset_count: Vec<usize> = Vec::with_capacity(cod.edge_count());
    let mut coset_of_elem: Vec<Vec<usize>> = Vec::with_capacity(cod.edge_count());
    for b in cod.edge_ids() {
        let group = codomain.local_group(cod.terminal(b));
        let image = codomain.edge_mono(b).image();
        let cosets = crate::groups::left_cosets(group, &image).ok()?;
        let mut table = vec![0usize; group.order()];
        for (ci, coset) in cosets.iter().enumerate() {
            for &g in coset {
                table[g.0] = ci;
            }
        }
        coset_count.push(cosets.len());
        coset_of_elem.push(table);
    }

    // Condition 2 buckets; their sizes must match the coset counts.
    let mut bucket_of_edge: Vec<usize> = vec![usize::MAX; dom.edge_count()];
    let mut buckets: Vec<Vec<EdgeId>> = Vec::new();
    {
        let mut key_to_bucket: BTreeMap<(VertexId, EdgeId), usize> = BTreeMap::new();
        for sigma in dom.vertices() {
            for &a in dom.edges_in(sigma) {
                let key = (sigma, morphism.edge_image(a));
                let idx = *key_to_bucket.entry(key).or_insert_with(|| {
                    buckets.push(Vec::new());
                    buckets.len() - 1
                });
                buckets[idx].push(a);
                bucket_of_edge[a.0] = idx;
            }
            let image = morphism.vertex_image(sigma);
            for &b in cod.edges_in(image) {
                let members = dom
                    .edges_in(sigma)
                    .iter()
                    .filter(|&&a| morphism.edge_image(a) == b)
                    .count();
                if members != coset_count[b.0] {
                    return None;
                }
            }
        }
    }

    // Chain relations, indexed by participating edge.
    let pairs = dom.composable_pairs();
    let mut relations: Vec<(EdgeId, EdgeId, EdgeId)> = Vec::with_capacity(pairs.len());
    let mut relations_of: Vec<Vec<usize>> = vec![Vec::new(); dom.edge_count()];
    for &(a, b) in &pairs {
        let ab = dom.composite(a, b)?;
        let idx = relations.len();
        relations.push((a, b, ab));
        for e in [a, b, ab] {
            if !relations_of[e.0].contains(&idx) {
                relations_of[e.0].push(idx);
            }
        }
    }

    // Variables: non-composite edges in breadth-first order over shared
    // relations, so each face is pinned down soon after it is entered.
    let composite: Vec<bool> = dom.edge_ids().map(|e| dom.is_composite(e)).collect();
    let mut order: Vec<EdgeId> = Vec::new();
    {
        let mut seen = vec![false; dom.edge_count()];
        let mut queue = std::collections::VecDeque::new();
        for start in dom.edge_ids() {
            if seen[start.0] || composite[start.0] {
                continue;
            }
            seen[start.0] = true;
            queue.push_back(start);
            while let Some(e) = queue.pop_front() {
                order.push(e);
                for &r in &relations_of[e.0] {
                    let (a, b, ab) = relations[r];
                    for next in [a, b, ab] {
                        if !seen[next.0] && !composite[next.0] {
                            seen[next.0] = true;
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }

    struct Search<'a> {
        domain: &'a ComplexOfGroups,
        codomain: &'a ComplexOfGroups,
        morphism: &'a ScwolMorphism,
        relations: &'a [(EdgeId, EdgeId, EdgeId)],
        relations_of: &'a [Vec<usize>],
        buckets: &'a [Vec<EdgeId>],
        bucket_of_edge: &'a [usize],
        coset_of_elem: &'a [Vec<usize>],
        phi: Vec<Option<Elem>>,
        trail: Vec<EdgeId>,
        nodes: u64,
        max_nodes: Option<u64>,
    }

    impl Search<'_> {
        fn group_at(&self, e: EdgeId) -> &GroupTable {
            let tgt = self.morphism.vertex_image(self.domain.base().terminal(e));
            self.codomain.local_group(tgt)
        }

        /// Assigns a value and propagates; false means conflict.
        fn assign(&mut self, e: EdgeId, v: Elem) -> bool {
            if let Some(existing) = self.phi[e.0] {
                return existing == v;
            }
            let bucket = self.bucket_of_edge[e.0];
            if bucket != usize::MAX {
                let table = &self.coset_of_elem[self.morphism.edge_image(e).0];
                let my_coset = table[v.0];
                for &other in &self.buckets[bucket] {
                    if other != e {
                        if let Some(o) = self.phi[other.0] {
                            if table[o.0] == my_coset {
                                return false;
                            }
                        }
                    }
                }
            }
            self.phi[e.0] = Some(v);
            self.trail.push(e);
            for &r in &self.relations_of[e.0] {
                let (a, b, ab) = self.relations[r];
                let psi = self.codomain.edge_mono(self.morphism.edge_image(a));
                let group = self.group_at(a);
                match (self.phi[a.0], self.phi[b.0], self.phi[ab.0]) {
                    (Some(pa), Some(pb), maybe) => {
                        let forced = group.mul(pa, psi.apply(pb));
                        match maybe {
                            None => {
                                if !self.assign(ab, forced) {
                                    return false;
                                }
                            }
                            Some(pc) => {
                                if pc != forced {
                                    return false;
                                }
                            }
                        }
                    }
                    (Some(pa), None, Some(pc)) => {
                        let needed = group.mul(group.inv(pa), pc);
                        match psi.preimage(needed) {
                            Some(pb) => {
                                if !self.assign(b, pb) {
                                    return false;
                                }
                            }
                            None => return false,
                        }
                    }
                    (None, Some(pb), Some(pc)) => {
                        let value = group.mul(pc, group.inv(psi.apply(pb)));
                        if !self.assign(a, value) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
            true
        }

        fn rollback(&mut self, mark: usize) {
            while self.trail.len() > mark {
                let e = self.trail.pop().unwrap();
                self.phi[e.0] = None;
            }
        }

        fn solve(&mut self, order: &[EdgeId], at: usize) -> bool {
            self.nodes += 1;
            if let Some(limit) = self.max_nodes {
                if self.nodes > limit {
                    return false;
                }
            }
            let Some(&var) = order.get(at) else {
                return true;
            };
            if self.phi[var.0].is_some() {
                return self.solve(order, at + 1);
            }
            let n = self.group_at(var).order();
            for raw in 0..n {
                let mark = self.trail.len();
                if self.assign(var, Elem(raw)) && self.solve(order, at + 1) {
                    return true;
                }
                self.rollback(mark);
            }
            false
        }
    }

    let mut search = Search {
        domain,
        codomain,
        morphism,
        relations: &relations,
        relations_of: &relations_of,
        buckets: &buckets,
        bucket_of_edge: &bucket_of_edge,
        coset_of_elem: &coset_of_elem,
        phi: vec![None; dom.edge_count()],
        trail: Vec::new(),
        nodes: 0,
        max_nodes,
    };

    if !search.solve(&order, 0) {
        return None;
    }
    let phi = search.phi.into_iter().collect::<Option<Vec<_>>>()?;
    Some(CoveringData::new(
        domain.clone(),
        codomain.clone(),
        morphism.clone(),
        phi,
    ))
}
