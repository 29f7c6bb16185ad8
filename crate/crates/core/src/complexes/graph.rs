//! Simplicial graphs and exact isomorphism testing.

use std::collections::BTreeSet;

use super::BipartiteGraph;

/// An undirected simplicial graph with labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Self {
        SimpleGraph {
            labels,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "simplicial graphs have no loops");
        let (a, b) = (a.min(b), a.max(b));
        self.edges.insert((a, b));
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (p, q) in [(a, b), (b, a)] {
                    if p == v && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The complete bipartite graph on `q1 + q2` vertices.
    pub fn complete_bipartite(q1: usize, q2: usize) -> Self {
        let labels = (1..=q1)
            .map(|i| format!("x{}", i))
            .chain((1..=q2).map(|j| format!("y{}", j)))
            .collect();
        let mut g = SimpleGraph::new(labels);
        for i in 0..q1 {
            for j in 0..q2 {
                g.add_edge(i, q1 + j);
            }
        }
        g
    }

    /// A cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let labels = (0..n).map(|i| format!("c{}", i)).collect();
        let mut g = SimpleGraph::new(labels);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Forgets the bipartition of `L`.
    pub fn from_bipartite(graph: &BipartiteGraph) -> Self {
        let labels = graph
            .left_names()
            .iter()
            .chain(graph.right_names().iter())
            .cloned()
            .collect();
        let mut g = SimpleGraph::new(labels);
        for (i, j) in graph.edges() {
            g.add_edge(i, graph.q1() + j);
        }
        g
    }

    /// The barycentric subdivision: one new vertex per edge.
    pub fn subdivision(&self) -> SimpleGraph {
        let mut labels = self.labels.clone();
        let edge_list: Vec<_> = self.edges().collect();
        for &(a, b) in &edge_list {
            labels.push(format!("mid({},{})", self.labels[a], self.labels[b]));
        }
        let mut g = SimpleGraph::new(labels);
        for (idx, &(a, b)) in edge_list.iter().enumerate() {
            let mid = self.labels.len() + idx;
            g.add_edge(a, mid);
            g.add_edge(b, mid);
        }
        g
    }

    fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort();
        d
    }
}

/// Exact backtracking graph isomorphism. Returns a vertex bijection
/// `g1 -> g2` preserving adjacency, or `None`. Intended for graphs with at
/// most a few dozen vertices.
pub fn graph_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Vec<usize>> {
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return None;
    }
    let n = g1.vertex_count();
    // Assign high-degree vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g1: &SimpleGraph,
        g2: &SimpleGraph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..g2.vertex_count() {
            if used[w] || g1.degree(v) != g2.degree(w) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&prev| {
                g1.adjacent(v, prev) == g2.adjacent(w, map[prev])
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(g1, g2, order, depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }

    if extend(g1, g2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Re-checks that `map` is a bijection preserving adjacency in both
/// directions; used to audit exhibited isomorphisms independently.
pub fn verify_graph_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, map: &[usize]) -> bool {
    let n = g1.vertex_count();
    if map.len() != n || g2.vertex_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &w in map {
        if w >= n || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if g1.adjacent(a, b) != g2.adjacent(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}
