//! Group presentations: polygon contraction, surface relators, amalgams
//! over 1-dimensional scwols, and export forms.
//!
//! Words are stored over explicit generator names with inverse letters and
//! are freely reduced eagerly. Presentation equality is syntactic: same
//! generator set and the same multiset of relators up to free reduction,
//! cyclic rotation, and inversion. That is decidable and exactly what the
//! pipeline equalities need; no isomorphism testing happens here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complexes::{
    build_theta_scwol, build_x, BipartiteGraph, ComplexError, PolygonalComplex, SimpleGraph,
};
use crate::scwol::Scwol;

/// One letter of a word: a generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: String,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: impl Into<String>) -> Self {
        Letter {
            gen: gen.into(),
            inv: false,
        }
    }

    pub fn inverse(gen: impl Into<String>) -> Self {
        Letter {
            gen: gen.into(),
            inv: true,
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            inv: !self.inv,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "({})^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A freely reduced word in named generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Builds a word, reducing `g g^-1` pairs eagerly.
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            if stack.last().is_some_and(|t| t.gen == l.gen && t.inv != l.inv) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word::new(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        Word::new(letters)
    }

    /// Substitutes a word for every occurrence of a generator.
    pub fn substitute(&self, gen: &str, replacement: &Word) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            if l.gen == gen {
                let r = if l.inv {
                    replacement.inverse()
                } else {
                    replacement.clone()
                };
                letters.extend(r.0);
            } else {
                letters.push(l.clone());
            }
        }
        Word::new(letters)
    }

    fn rotations(&self) -> Vec<Word> {
        let n = self.0.len().max(1);
        (0..n)
            .map(|s| {
                let mut rot: Vec<Letter> = self.0[s..].to_vec();
                rot.extend_from_slice(&self.0[..s]);
                Word::new(rot)
            })
            .collect()
    }

    /// Canonical form under free reduction, cyclic reduction, rotation,
    /// and inversion: the lexicographically least representative.
    pub fn canonical_cyclic(&self) -> Word {
        // cyclically reduce: strip conjugating pairs a w a^-1
        let mut w = self.0.clone();
        while w.len() >= 2
            && w.first().unwrap().gen == w.last().unwrap().gen
            && w.first().unwrap().inv != w.last().unwrap().inv
        {
            w = w[1..w.len() - 1].to_vec();
        }
        let reduced = Word(w);
        let mut candidates = reduced.rotations();
        candidates.extend(reduced.inverse().rotations());
        candidates.into_iter().min().unwrap_or_default()
    }

    /// Exponent sum of a generator.
    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| if l.inv { -1 } else { 1 })
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite presentation: named generators and freely reduced relators.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

#[derive(Debug, thiserror::Error)]
pub enum PresentationError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("no face labeled {0}")]
    NoSuchFace(String),
    #[error("generator {0} cannot be eliminated: no relator uses it exactly once")]
    CannotEliminate(String),
    #[error("operation requires m = 2, got {0}")]
    NotRightAngled(usize),
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation {
            generators,
            relators,
        }
    }

    /// Canonical comparison key: the generator set together with the
    /// multiset of canonicalized relators (empty relators are dropped).
    pub fn normalized_key(&self) -> (BTreeSet<String>, Vec<Word>) {
        let gens: BTreeSet<String> = self.generators.iter().cloned().collect();
        let mut rels: Vec<Word> = self
            .relators
            .iter()
            .map(|r| r.canonical_cyclic())
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort();
        (gens, rels)
    }

    /// Syntactic equality up to free reduction, rotation, and inversion.
    pub fn equivalent(&self, other: &Presentation) -> bool {
        self.normalized_key() == other.normalized_key()
    }

    /// Tietze elimination of a generator defined by a relator that uses it
    /// exactly once. Deterministic: the shortest such relator is used, so
    /// the short family words produced by a face collapse win over the full
    /// boundary words.
    pub fn eliminate_generator(&self, gen: &str) -> Result<Presentation, PresentationError> {
        let position = self
            .relators
            .iter()
            .enumerate()
            .filter(|(_, r)| r.letters().iter().filter(|l| l.gen == gen).count() == 1)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .ok_or_else(|| PresentationError::CannotEliminate(gen.to_string()))?;
        let relator = &self.relators[position];
        let at = relator
            .letters()
            .iter()
            .position(|l| l.gen == gen)
            .expect("occurrence exists");
        // rotate so the occurrence comes first: r = g^e t, so g^e = t^-1
        let mut rot: Vec<Letter> = relator.letters()[at..].to_vec();
        rot.extend_from_slice(&relator.letters()[..at]);
        let head = rot[0].clone();
        let tail = Word::new(rot[1..].to_vec());
        let replacement = if head.inv {
            tail.clone() // g^-1 = t^-1, so g = t
        } else {
            tail.inverse()
        };
        let generators = self
            .generators
            .iter()
            .filter(|g| g.as_str() != gen)
            .cloned()
            .collect();
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != position)
            .map(|(_, r)| r.substitute(gen, &replacement))
            .collect();
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Exponent-sum matrix of relators over the generator list.
    pub fn abelianization_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| self.generators.iter().map(|g| r.exponent_sum(g)).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let relators: Vec<Vec<String>> = self
            .relators
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|l| {
                        if l.inv {
                            format!("{}(-1)", l.gen)
                        } else {
                            l.gen.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "generators": self.generators,
            "relators": relators,
        })
    }

    /// Conventional angle-bracket form for human reading.
    pub fn display_text(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        format!("< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// Collapses one face of a complex to a point: its boundary edges become
/// trivial, all other faces read off relators over the remaining edges.
/// This is the one-vertex-complex stage, before any elimination.
pub fn contract_face(x: &PolygonalComplex, face: usize) -> Result<Presentation, PresentationError> {
    let collapsed: BTreeSet<usize> = x.face(face).boundary.iter().map(|&(e, _)| e).collect();
    let generators: Vec<String> = (0..x.edge_count())
        .filter(|e| !collapsed.contains(e))
        .map(|e| x.edge(e).label.clone())
        .collect();
    let mut relators = Vec::new();
    for f in 0..x.face_count() {
        if f == face {
            continue;
        }
        let letters: Vec<Letter> = x
            .face(f)
            .boundary
            .iter()
            .filter(|(e, _)| !collapsed.contains(e))
            .map(|&(e, forward)| Letter {
                gen: x.edge(e).label.clone(),
                inv: !forward,
            })
            .collect();
        relators.push(Word::new(letters));
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

/// Full contraction pipeline: collapse the face, then eliminate the
/// top-level generator of every surviving edge family using the short
/// relators left behind by the collapse.
pub fn contraction_pipeline(
    x: &PolygonalComplex,
    face_label: &str,
) -> Result<Presentation, PresentationError> {
    let face = x
        .face_by_label(face_label)
        .ok_or_else(|| PresentationError::NoSuchFace(face_label.to_string()))?;
    let mut p = contract_face(x, face)?;
    let max_level = (0..x.edge_count())
        .filter_map(|e| x.edge(e).level)
        .max()
        .unwrap_or(0);
    let eliminate: Vec<String> = (0..x.edge_count())
        .filter(|&e| x.edge(e).level == Some(max_level))
        .map(|e| x.edge(e).label.clone())
        .filter(|label| p.generators.contains(label))
        .collect();
    for gen in eliminate {
        p = p.eliminate_generator(&gen)?;
    }
    Ok(p)
}

/// The surface-amalgam presentation of the fundamental group: generators
/// `x_i^k`, `y_j^k` for `i < q1`, `j < q2`, `k < m`, one relator of length
/// `4(m-1)` per generator pair, produced by the contraction pipeline
/// rather than written out.
pub fn presentation_h(m: usize, q1: usize, q2: usize) -> Result<Presentation, PresentationError> {
    let graph = BipartiteGraph::complete(q1, q2);
    let x = build_x(m, &graph)?;
    let collapsed = format!("P(x{},y{})", q1, q2);
    contraction_pipeline(&x, &collapsed)
}

/// The relator of the genus-`(m-1)` surface group on the pair `(x_i, y_j)`:
/// the alternating product of the first `m-1` levels followed by the
/// reversed inverses of each family.
pub fn surface_relator(m: usize, i: usize, j: usize) -> Word {
    let x = |k: usize| format!("x{}^{}", i, k);
    let y = |k: usize| format!("y{}^{}", j, k);
    let mut letters = Vec::with_capacity(4 * (m - 1));
    for k in 1..m {
        letters.push(Letter::new(x(k)));
        letters.push(Letter::new(y(k)));
    }
    for k in (1..m).rev() {
        letters.push(Letter::inverse(x(k)));
    }
    for k in (1..m).rev() {
        letters.push(Letter::inverse(y(k)));
    }
    Word::new(letters)
}

/// Euler characteristic of the one-vertex gluing of a `4(m-1)`-gon:
/// `2 - 2(m-1)`, the closed surface of genus `m-1`.
pub fn euler_check_surface(m: usize) -> i64 {
    1 - 2 * (m as i64 - 1) + 1
}

/// A graph of groups over a 1-dimensional scwol: free groups at sources,
/// surface groups at sinks, generator-injections on edges.
#[derive(Clone, Debug)]
pub struct GraphOfGroups {
    pub base: Scwol,
    /// Vertex groups as presentations, indexed by scwol vertex.
    pub vertex_groups: Vec<Presentation>,
    /// For each scwol edge, the generator assignment source -> target.
    pub edge_maps: Vec<Vec<(String, String)>>,
}

impl GraphOfGroups {
    /// Checks 1-dimensionality and that edge maps are injective
    /// generator-to-generator assignments.
    pub fn validate(&self) -> bool {
        if !self.base.chains().pairs.is_empty() {
            return false;
        }
        self.base.edge_ids().all(|e| {
            let src = &self.vertex_groups[self.base.initial(e).0];
            let dst = &self.vertex_groups[self.base.terminal(e).0];
            let map = &self.edge_maps[e.0];
            let mut targets = BTreeSet::new();
            map.len() == src.generators.len()
                && map.iter().all(|(from, to)| {
                    src.generators.contains(from)
                        && dst.generators.contains(to)
                        && targets.insert(to.clone())
                })
        })
    }
}

/// The graph of groups whose colimit recovers the fundamental group: base
/// the 1-dimensional scwol of the complete bipartite graph on
/// `(q1-1, q2-1)` vertices, free groups of rank `m-1` at sources, surface
/// groups of genus `m-1` at sinks.
pub fn build_amalgam(m: usize, q1: usize, q2: usize) -> GraphOfGroups {
    assert!(m >= 2 && q1 >= 2 && q2 >= 2);
    let theta = SimpleGraph::complete_bipartite(q1 - 1, q2 - 1);
    let base = build_theta_scwol(&theta);

    let parse_pair = |label: &str| -> Option<(usize, usize)> {
        // sink labels look like "mid(x1,y2)"
        let inner = label.strip_prefix("mid(")?.strip_suffix(')')?;
        let (a, b) = inner.split_once(',')?;
        Some((
            a.strip_prefix('x')?.parse().ok()?,
            b.strip_prefix('y')?.parse().ok()?,
        ))
    };

    let mut vertex_groups = Vec::with_capacity(base.vertex_count());
    for v in base.vertices() {
        let label = base.vertex_label(v).to_string();
        let group = if let Some((i, j)) = parse_pair(&label) {
            let mut gens = Vec::new();
            for k in 1..m {
                gens.push(format!("x{}^{}", i, k));
            }
            for k in 1..m {
                gens.push(format!("y{}^{}", j, k));
            }
            Presentation::new(gens, vec![surface_relator(m, i, j)])
        } else {
            let gens = (1..m).map(|k| format!("{}^{}", label, k)).collect();
            Presentation::new(gens, Vec::new())
        };
        vertex_groups.push(group);
    }

    let mut edge_maps = Vec::with_capacity(base.edge_count());
    for e in base.edge_ids() {
        let src = &vertex_groups[base.initial(e).0];
        let map = src
            .generators
            .iter()
            .map(|g| (g.clone(), g.clone()))
            .collect();
        edge_maps.push(map);
    }

    GraphOfGroups {
        base,
        vertex_groups,
        edge_maps,
    }
}

/// The colimit of a graph of groups along generator-injections: sink
/// presentations are merged, and for every source the images of each of
/// its generators under the outgoing edge maps are identified.
pub fn direct_limit(g: &GraphOfGroups) -> Presentation {
    // union-find over sink generator names
    let mut parent: BTreeMap<String, String> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<String, String>, mut x: String) -> String {
        loop {
            let p = parent.get(&x).cloned().unwrap_or_else(|| x.clone());
            if p == x {
                return x;
            }
            let gp = parent.get(&p).cloned().unwrap_or_else(|| p.clone());
            parent.insert(x, gp.clone());
            x = p;
        }
    }

    let sinks: Vec<usize> = g
        .base
        .vertices()
        .filter(|&v| g.base.edges_out(v).is_empty())
        .map(|v| v.0)
        .collect();
    for &s in &sinks {
        for gen in &g.vertex_groups[s].generators {
            parent.entry(gen.clone()).or_insert_with(|| gen.clone());
        }
    }
    for v in g.base.vertices() {
        let out = g.base.edges_out(v);
        if out.is_empty() {
            continue;
        }
        let src = &g.vertex_groups[v.0];
        for gen in &src.generators {
            let images: Vec<String> = out
                .iter()
                .map(|&e| {
                    g.edge_maps[e.0]
                        .iter()
                        .find(|(from, _)| from == gen)
                        .map(|(_, to)| to.clone())
                        .expect("edge maps are total on source generators")
                })
                .collect();
            for w in images.windows(2) {
                let ra = find(&mut parent, w[0].clone());
                let rb = find(&mut parent, w[1].clone());
                if ra != rb {
                    parent.insert(rb, ra);
                }
            }
        }
    }

    let mut generators: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    for &s in &sinks {
        for gen in &g.vertex_groups[s].generators {
            let rep = find(&mut parent, gen.clone());
            if seen.insert(rep.clone()) {
                generators.push(rep);
            }
        }
    }
    let mut relators = Vec::new();
    for &s in &sinks {
        for r in &g.vertex_groups[s].relators {
            let letters = r
                .letters()
                .iter()
                .map(|l| Letter {
                    gen: find(&mut parent, l.gen.clone()),
                    inv: l.inv,
                })
                .collect();
            relators.push(Word::new(letters));
        }
    }
    Presentation::new(generators, relators)
}

/// The graph-product presentation of the polygon-of-groups fundamental
/// group: one cyclic generator per vertex of a 2m-cycle, orders
/// alternating `q1`, `q2`, with commutation between neighbors.
pub fn gamma_presentation(m: usize, q1: usize, q2: usize) -> Presentation {
    let a = |k: usize| format!("a{}", k);
    let b = |k: usize| format!("b{}", k);
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    for k in 1..=m {
        generators.push(a(k));
        relators.push(Word::new(vec![Letter::new(a(k)); q1]));
    }
    for k in 1..=m {
        generators.push(b(k));
        relators.push(Word::new(vec![Letter::new(b(k)); q2]));
    }
    let commutator = |g: String, h: String| {
        Word::new(vec![
            Letter::new(g.clone()),
            Letter::new(h.clone()),
            Letter::inverse(g),
            Letter::inverse(h),
        ])
    };
    for k in 1..=m {
        relators.push(commutator(a(k), b(k)));
        let next = if k == m { 1 } else { k + 1 };
        relators.push(commutator(b(k), a(next)));
    }
    Presentation::new(generators, relators)
}

/// The Coxeter presentation determined by `(m, L)`: an involution per
/// vertex and one alternating relator of length `2m` per edge.
pub fn w_presentation(m: usize, graph: &BipartiteGraph) -> Presentation {
    let mut generators: Vec<String> = graph.left_names().to_vec();
    generators.extend(graph.right_names().iter().cloned());
    let mut relators = Vec::new();
    for g in &generators {
        relators.push(Word::new(vec![
            Letter::new(g.clone()),
            Letter::new(g.clone()),
        ]));
    }
    for (i, j) in graph.edges() {
        let x = &graph.left_names()[i];
        let y = &graph.right_names()[j];
        let mut letters = Vec::with_capacity(2 * m);
        for _ in 0..m {
            letters.push(Letter::new(x.clone()));
            letters.push(Letter::new(y.clone()));
        }
        relators.push(Word::new(letters));
    }
    Presentation::new(generators, relators)
}

/// For `m = 2`: checks that every relator is a commutator of two distinct
/// generators, i.e. the group is the right-angled Artin group on the
/// complete bipartite graph with parts `q1 - 1` and `q2 - 1`.
pub fn raag_check(m: usize, q1: usize, q2: usize) -> Result<bool, PresentationError> {
    if m != 2 {
        return Err(PresentationError::NotRightAngled(m));
    }
    let p = presentation_h(2, q1, q2)?;
    if p.relators.len() != (q1 - 1) * (q2 - 1) {
        return Ok(false);
    }
    let mut pairs = BTreeSet::new();
    for r in &p.relators {
        let c = r.canonical_cyclic();
        let l = c.letters();
        let is_commutator = l.len() == 4
            && l[0].gen != l[1].gen
            && l[2] == l[0].inverted()
            && l[3] == l[1].inverted();
        if !is_commutator {
            return Ok(false);
        }
        pairs.insert((l[0].gen.clone(), l[1].gen.clone()));
    }
    Ok(pairs.len() == (q1 - 1) * (q2 - 1))
}

/// A one-vertex 2-complex given by loops and attaching words; the
/// aspherical model obtained by gluing one `4(m-1)`-gon per generator
/// pair along the shared loop alphabet.
#[derive(Clone, Debug)]
pub struct GluedComplex {
    pub loops: Vec<String>,
    pub attaching: Vec<Word>,
}

impl GluedComplex {
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.loops.len() as i64 + self.attaching.len() as i64
    }

    /// Every attaching word uses only declared loops.
    pub fn validate(&self) -> bool {
        self.attaching
            .iter()
            .all(|w| w.letters().iter().all(|l| self.loops.contains(&l.gen)))
    }
}

/// The aspherical gluing data for the fundamental group: one
/// `4(m-1)`-gon per pair `(i, j)` with `i < q1`, `j < q2`, attached along
/// `(m-1)(q1+q2-2)` loops.
pub fn kg1_gluing(m: usize, q1: usize, q2: usize) -> GluedComplex {
    assert!(m >= 2 && q1 >= 2 && q2 >= 2);
    let mut loops = Vec::new();
    for i in 1..q1 {
        for k in 1..m {
            loops.push(format!("x{}^{}", i, k));
        }
    }
    for j in 1..q2 {
        for k in 1..m {
            loops.push(format!("y{}^{}", j, k));
        }
    }
    let mut attaching = Vec::new();
    for i in 1..q1 {
        for j in 1..q2 {
            attaching.push(surface_relator(m, i, j));
        }
    }
    GluedComplex { loops, attaching }
}
