//! Small categories without loops (scwols), their morphisms and chains.
//!
//! A scwol is a set of vertices and oriented edges with an explicit partial
//! composition: a pair `(a, b)` composes exactly when `i(a) = t(b)`, and the
//! composite `ab` runs from `i(b)` to `t(a)`. All scwols here are thin (at
//! most one edge per ordered vertex pair) and at most 2-dimensional, which
//! makes them equivalent to the face posets of polygonal complexes.
//!
//! Construction goes through [`ScwolBuilder`]; a built [`Scwol`] is immutable
//! and can be shared freely between threads. Validation never panics: it
//! returns a [`ScwolReport`] listing every violated axiom.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Index of a vertex inside one scwol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// Index of an edge inside one scwol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug)]
struct EdgeData {
    label: String,
    initial: VertexId,
    terminal: VertexId,
}

/// A thin scwol of dimension at most 2 with explicitly stored composition.
#[derive(Clone, Debug)]
pub struct Scwol {
    vertex_labels: Vec<String>,
    edges: Vec<EdgeData>,
    compose: BTreeMap<(EdgeId, EdgeId), EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

/// Incremental constructor for [`Scwol`].
///
/// The builder accepts arbitrary data, including data violating the scwol
/// axioms, so that diagnostics can be exercised; call
/// [`Scwol::validate`] on the result to find out.
#[derive(Clone, Debug, Default)]
pub struct ScwolBuilder {
    vertex_labels: Vec<String>,
    edges: Vec<EdgeData>,
    compose: BTreeMap<(EdgeId, EdgeId), EdgeId>,
}

/// Error when inferring compositions in a builder.
#[derive(Debug, thiserror::Error)]
pub enum ComposeError {
    #[error("no edge from {from:?} to {to:?} to serve as composite of ({a:?},{b:?})")]
    MissingCompositeEdge {
        a: EdgeId,
        b: EdgeId,
        from: VertexId,
        to: VertexId,
    },
    #[error("several edges from {from:?} to {to:?}; scwol is not thin")]
    AmbiguousCompositeEdge { from: VertexId, to: VertexId },
}

impl ScwolBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> VertexId {
        self.vertex_labels.push(label.into());
        VertexId(self.vertex_labels.len() - 1)
    }

    pub fn add_edge(
        &mut self,
        label: impl Into<String>,
        initial: VertexId,
        terminal: VertexId,
    ) -> EdgeId {
        self.edges.push(EdgeData {
            label: label.into(),
            initial,
            terminal,
        });
        EdgeId(self.edges.len() - 1)
    }

    /// Records `ab` as the composite of `(a, b)`.
    pub fn set_composition(&mut self, a: EdgeId, b: EdgeId, ab: EdgeId) {
        self.compose.insert((a, b), ab);
    }

    /// Fills the composition table of a thin scwol: for every composable
    /// pair `(a, b)` the composite must be the unique edge `i(b) -> t(a)`.
    pub fn infer_compositions(&mut self) -> Result<(), ComposeError> {
        let mut by_endpoints: HashMap<(VertexId, VertexId), Vec<EdgeId>> = HashMap::new();
        for (idx, e) in self.edges.iter().enumerate() {
            by_endpoints
                .entry((e.initial, e.terminal))
                .or_default()
                .push(EdgeId(idx));
        }
        for a_idx in 0..self.edges.len() {
            for b_idx in 0..self.edges.len() {
                let (a, b) = (EdgeId(a_idx), EdgeId(b_idx));
                if self.edges[a_idx].initial != self.edges[b_idx].terminal {
                    continue;
                }
                let from = self.edges[b_idx].initial;
                let to = self.edges[a_idx].terminal;
                let candidates = by_endpoints.get(&(from, to)).map(Vec::as_slice).unwrap_or(&[]);
                match candidates {
                    [] => return Err(ComposeError::MissingCompositeEdge { a, b, from, to }),
                    [ab] => {
                        self.compose.insert((a, b), *ab);
                    }
                    _ => return Err(ComposeError::AmbiguousCompositeEdge { from, to }),
                }
            }
        }
        Ok(())
    }

    pub fn build(self) -> Scwol {
        let mut out_edges = vec![Vec::new(); self.vertex_labels.len()];
        let mut in_edges = vec![Vec::new(); self.vertex_labels.len()];
        for (idx, e) in self.edges.iter().enumerate() {
            out_edges[e.initial.0].push(EdgeId(idx));
            in_edges[e.terminal.0].push(EdgeId(idx));
        }
        Scwol {
            vertex_labels: self.vertex_labels,
            edges: self.edges,
            compose: self.compose,
            out_edges,
            in_edges,
        }
    }
}

/// One violated scwol axiom, carrying the offending cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScwolIssue {
    /// `i(a) = t(a)`.
    Loop { edge: EdgeId },
    /// Two distinct edges share an ordered vertex pair.
    NotThin { first: EdgeId, second: EdgeId },
    /// `(a, b)` is composable but no composite is recorded.
    MissingComposition { a: EdgeId, b: EdgeId },
    /// A composite is recorded for a non-composable pair.
    SpuriousComposition { a: EdgeId, b: EdgeId },
    /// `compose(a, b)` does not run from `i(b)` to `t(a)`.
    WrongCompositeEndpoints { a: EdgeId, b: EdgeId, ab: EdgeId },
    /// `(ab)c` and `a(bc)` disagree (or one of them is undefined).
    NotAssociative { a: EdgeId, b: EdgeId, c: EdgeId },
    /// Three pairwise-composable edges exist, so the dimension exceeds 2.
    DimensionExceeded { a: EdgeId, b: EdgeId, c: EdgeId },
    /// An edge references a vertex index that does not exist.
    DanglingEdge { edge: EdgeId },
}

impl fmt::Display for ScwolIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScwolIssue::Loop { edge } => write!(f, "loop: edge {:?} has i(a) = t(a)", edge),
            ScwolIssue::NotThin { first, second } => {
                write!(f, "not thin: edges {:?} and {:?} share endpoints", first, second)
            }
            ScwolIssue::MissingComposition { a, b } => {
                write!(f, "missing composition for composable pair ({:?},{:?})", a, b)
            }
            ScwolIssue::SpuriousComposition { a, b } => {
                write!(f, "composition recorded for non-composable pair ({:?},{:?})", a, b)
            }
            ScwolIssue::WrongCompositeEndpoints { a, b, ab } => {
                write!(f, "composite {:?} of ({:?},{:?}) has wrong endpoints", ab, a, b)
            }
            ScwolIssue::NotAssociative { a, b, c } => {
                write!(f, "associativity fails on ({:?},{:?},{:?})", a, b, c)
            }
            ScwolIssue::DimensionExceeded { a, b, c } => {
                write!(f, "chain of three composable edges ({:?},{:?},{:?})", a, b, c)
            }
            ScwolIssue::DanglingEdge { edge } => {
                write!(f, "edge {:?} references an unknown vertex", edge)
            }
        }
    }
}

/// Outcome of [`Scwol::validate`]; empty iff the scwol satisfies all axioms.
#[derive(Clone, Debug, Default)]
pub struct ScwolReport {
    pub issues: Vec<ScwolIssue>,
}

impl ScwolReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

impl Scwol {
    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_labels.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertex_labels[v.0]
    }

    pub fn edge_label(&self, e: EdgeId) -> &str {
        &self.edges[e.0].label
    }

    pub fn initial(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].initial
    }

    pub fn terminal(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].terminal
    }

    /// Edges `a` with `i(a) = v`.
    pub fn edges_out(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    /// Edges `a` with `t(a) = v`.
    pub fn edges_in(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.0]
    }

    pub fn composite(&self, a: EdgeId, b: EdgeId) -> Option<EdgeId> {
        self.compose.get(&(a, b)).copied()
    }

    /// The unique edge from `from` to `to`, if any (the scwol is thin).
    pub fn edge_between(&self, from: VertexId, to: VertexId) -> Option<EdgeId> {
        self.out_edges[from.0]
            .iter()
            .copied()
            .find(|&e| self.edges[e.0].terminal == to)
    }

    /// True when `e` is the recorded composite of some pair.
    pub fn is_composite(&self, e: EdgeId) -> bool {
        self.compose.values().any(|&ab| ab == e)
    }

    /// All composable pairs `(a, b)` (with `i(a) = t(b)`), in canonical order.
    pub fn composable_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut pairs = Vec::new();
        for (a_idx, a) in self.edges.iter().enumerate() {
            for &b in &self.in_edges[a.initial.0] {
                pairs.push((EdgeId(a_idx), b));
            }
        }
        pairs.sort();
        pairs
    }

    /// The decompositions of a composite edge: all pairs `(a, b)` with `ab = e`.
    pub fn decompositions(&self, e: EdgeId) -> Vec<(EdgeId, EdgeId)> {
        self.compose
            .iter()
            .filter(|&(_, &ab)| ab == e)
            .map(|(&(a, b), _)| (a, b))
            .collect()
    }

    /// Checks every scwol axiom and reports all violations.
    pub fn validate(&self) -> ScwolReport {
        let mut issues = Vec::new();
        let n = self.vertex_labels.len();
        for (idx, e) in self.edges.iter().enumerate() {
            if e.initial.0 >= n || e.terminal.0 >= n {
                issues.push(ScwolIssue::DanglingEdge { edge: EdgeId(idx) });
            } else if e.initial == e.terminal {
                issues.push(ScwolIssue::Loop { edge: EdgeId(idx) });
            }
        }
        if issues.iter().any(|i| matches!(i, ScwolIssue::DanglingEdge { .. })) {
            return ScwolReport { issues };
        }

        let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        for (idx, e) in self.edges.iter().enumerate() {
            if let Some(&first) = seen.get(&(e.initial, e.terminal)) {
                issues.push(ScwolIssue::NotThin {
                    first,
                    second: EdgeId(idx),
                });
            } else {
                seen.insert((e.initial, e.terminal), EdgeId(idx));
            }
        }

        for (a, b) in self.composable_pairs() {
            match self.composite(a, b) {
                None => issues.push(ScwolIssue::MissingComposition { a, b }),
                Some(ab) => {
                    if self.initial(ab) != self.initial(b) || self.terminal(ab) != self.terminal(a)
                    {
                        issues.push(ScwolIssue::WrongCompositeEndpoints { a, b, ab });
                    }
                }
            }
        }
        for &(a, b) in self.compose.keys() {
            if a.0 >= self.edges.len()
                || b.0 >= self.edges.len()
                || self.initial(a) != self.terminal(b)
            {
                issues.push(ScwolIssue::SpuriousComposition { a, b });
            }
        }

        // Dimension: an edge b sitting in the middle of a 3-chain.
        for (b_idx, b) in self.edges.iter().enumerate() {
            let b_id = EdgeId(b_idx);
            let a = self.out_edges[b.terminal.0].first().copied();
            let c = self.in_edges[b.initial.0].first().copied();
            if let (Some(a), Some(c)) = (a, c) {
                issues.push(ScwolIssue::DimensionExceeded { a, b: b_id, c });
            }
        }

        // Associativity over the stored table.
        for (a, b) in self.composable_pairs() {
            for &c in &self.in_edges[self.initial(b).0] {
                let left = self.composite(a, b).and_then(|ab| self.composite(ab, c));
                let right = self.composite(b, c).and_then(|bc| self.composite(a, bc));
                if left != right || left.is_none() {
                    issues.push(ScwolIssue::NotAssociative { a, b, c });
                }
            }
        }

        ScwolReport { issues }
    }

    /// The opposite scwol: same cells, all orientations reversed, mirrored
    /// composition. An involution.
    pub fn opposite(&self) -> Scwol {
        let mut builder = ScwolBuilder::new();
        for label in &self.vertex_labels {
            builder.add_vertex(label.clone());
        }
        for e in &self.edges {
            builder.edges.push(EdgeData {
                label: e.label.clone(),
                initial: e.terminal,
                terminal: e.initial,
            });
        }
        for (&(a, b), &ab) in &self.compose {
            builder.compose.insert((b, a), ab);
        }
        builder.build()
    }

    /// All chains of length 0, 1 and 2: the simplices of the geometric
    /// realization.
    pub fn chains(&self) -> Chains {
        Chains {
            vertices: self.vertices().collect(),
            edges: self.edge_ids().collect(),
            pairs: self.composable_pairs(),
        }
    }

    /// Euler characteristic of the geometric realization.
    pub fn euler_characteristic(&self) -> i64 {
        let c = self.chains();
        c.vertices.len() as i64 - c.edges.len() as i64 + c.pairs.len() as i64
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertex_labels
            .iter()
            .enumerate()
            .map(|(id, label)| serde_json::json!({"id": id, "label": label}))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| {
                serde_json::json!({"id": id, "label": e.label, "i": e.initial.0, "t": e.terminal.0})
            })
            .collect();
        let compose: Vec<_> = self
            .compose
            .iter()
            .map(|(&(a, b), &ab)| serde_json::json!({"a": a.0, "b": b.0, "ab": ab.0}))
            .collect();
        serde_json::json!({"vertices": vertices, "edges": edges, "compose": compose})
    }

    /// DOT export: solid arrows for generating edges, dashed for composites.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", name);
        for (id, label) in self.vertex_labels.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", id, label));
        }
        for (id, e) in self.edges.iter().enumerate() {
            let style = if self.is_composite(EdgeId(id)) {
                " [style=dashed]"
            } else {
                ""
            };
            out.push_str(&format!(
                "  v{} -> v{}{};\n",
                e.initial.0, e.terminal.0, style
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The chains (simplices of the realization) of a scwol.
#[derive(Clone, Debug)]
pub struct Chains {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// Composable pairs `(a, b)`, each a 2-simplex.
    pub pairs: Vec<(EdgeId, EdgeId)>,
}

/// A map of scwols given by compatible vertex and edge assignments.
#[derive(Clone, Debug)]
pub struct ScwolMorphism {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

/// One violated morphism condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismIssue {
    /// Vertex or edge map goes out of range.
    OutOfRange,
    /// `i(f(a)) != f(i(a))` or `t(f(a)) != f(t(a))`.
    Endpoints { edge: EdgeId },
    /// `f(ab) != f(a) f(b)`.
    Composition { a: EdgeId, b: EdgeId },
    /// Restriction to edges issuing from `vertex` is not a bijection.
    NotBijectiveAt { vertex: VertexId },
}

impl fmt::Display for MorphismIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismIssue::OutOfRange => write!(f, "morphism maps out of range"),
            MorphismIssue::Endpoints { edge } => {
                write!(f, "endpoints not preserved on edge {:?}", edge)
            }
            MorphismIssue::Composition { a, b } => {
                write!(f, "composition not preserved on ({:?},{:?})", a, b)
            }
            MorphismIssue::NotBijectiveAt { vertex } => {
                write!(f, "outgoing edges at {:?} do not map bijectively", vertex)
            }
        }
    }
}

/// Outcome of [`ScwolMorphism::validate`].
#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    pub issues: Vec<MorphismIssue>,
}

impl MorphismReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

impl ScwolMorphism {
    pub fn identity(s: &Scwol) -> Self {
        ScwolMorphism {
            vertex_map: s.vertices().collect(),
            edge_map: s.edge_ids().collect(),
        }
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.0]
    }

    pub fn edge_image(&self, e: EdgeId) -> EdgeId {
        self.edge_map[e.0]
    }

    /// Checks the three conditions of a non-degenerate morphism.
    pub fn validate(&self, source: &Scwol, target: &Scwol) -> MorphismReport {
        let mut issues = Vec::new();
        if self.vertex_map.len() != source.vertex_count()
            || self.edge_map.len() != source.edge_count()
            || self.vertex_map.iter().any(|v| v.0 >= target.vertex_count())
            || self.edge_map.iter().any(|e| e.0 >= target.edge_count())
        {
            issues.push(MorphismIssue::OutOfRange);
            return MorphismReport { issues };
        }

        for e in source.edge_ids() {
            let fe = self.edge_image(e);
            if target.initial(fe) != self.vertex_image(source.initial(e))
                || target.terminal(fe) != self.vertex_image(source.terminal(e))
            {
                issues.push(MorphismIssue::Endpoints { edge: e });
            }
        }

        for (a, b) in source.composable_pairs() {
            let lhs = source.composite(a, b).map(|ab| self.edge_image(ab));
            let rhs = target.composite(self.edge_image(a), self.edge_image(b));
            if lhs.is_none() || lhs != rhs {
                issues.push(MorphismIssue::Composition { a, b });
            }
        }

        for v in source.vertices() {
            let fv = self.vertex_image(v);
            let mut images: Vec<EdgeId> =
                source.edges_out(v).iter().map(|&a| self.edge_image(a)).collect();
            images.sort();
            let before = images.len();
            images.dedup();
            let mut expected: Vec<EdgeId> = target.edges_out(fv).to_vec();
            expected.sort();
            if images.len() != before || images != expected {
                issues.push(MorphismIssue::NotBijectiveAt { vertex: v });
            }
        }

        MorphismReport { issues }
    }

    /// Composite morphism `self` after `first` (both must validate).
    pub fn compose(first: &ScwolMorphism, second: &ScwolMorphism) -> ScwolMorphism {
        ScwolMorphism {
            vertex_map: first
                .vertex_map
                .iter()
                .map(|&v| second.vertex_image(v))
                .collect(),
            edge_map: first
                .edge_map
                .iter()
                .map(|&e| second.edge_image(e))
                .collect(),
        }
    }
}
