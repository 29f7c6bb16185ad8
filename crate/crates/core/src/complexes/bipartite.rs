//! The defining bipartite graph `L`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::ComplexError;

/// A finite simplicial bipartite graph with left vertices `x1..x_q1` and
/// right vertices `y1..y_q2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    left: Vec<String>,
    right: Vec<String>,
    edges: Vec<(String, String)>,
}

impl BipartiteGraph {
    /// Builds a graph with default vertex names; edges are deduplicated and
    /// stored sorted. Connectivity is not required here, only by the
    /// constructions that need it.
    pub fn new(q1: usize, q2: usize, edges: &[(usize, usize)]) -> Result<Self, ComplexError> {
        if q1 == 0 || q2 == 0 {
            return Err(ComplexError::EmptySide);
        }
        let left = (1..=q1).map(|i| format!("x{}", i)).collect();
        let right = (1..=q2).map(|j| format!("y{}", j)).collect();
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i >= q1 || j >= q2 {
                return Err(ComplexError::EdgeOutOfRange(i, j));
            }
            set.insert((i, j));
        }
        Ok(BipartiteGraph {
            left,
            right,
            edges: set.into_iter().collect(),
        })
    }

    pub fn complete(q1: usize, q2: usize) -> Self {
        let edges: Vec<_> = (0..q1).flat_map(|i| (0..q2).map(move |j| (i, j))).collect();
        BipartiteGraph::new(q1, q2, &edges).expect("complete graph is well formed")
    }

    /// A path of `k >= 1` edges `x1 - y1 - x2 - y2 - ...`.
    pub fn path(k: usize) -> Result<Self, ComplexError> {
        let q1 = k / 2 + 1;
        let q2 = k.div_ceil(2).max(1);
        let mut edges = Vec::new();
        for step in 0..k {
            // step 2t: (x_{t+1}, y_{t+1}); step 2t+1: (x_{t+2}, y_{t+1})
            let t = step / 2;
            if step % 2 == 0 {
                edges.push((t, t));
            } else {
                edges.push((t + 1, t));
            }
        }
        BipartiteGraph::new(q1, q2, &edges)
    }

    /// An even cycle `x1 - y1 - x2 - y2 - ... - yt - x1` with `2t` edges.
    pub fn cycle(n: usize) -> Result<Self, ComplexError> {
        assert!(n >= 4 && n.is_multiple_of(2), "cycle length must be even and >= 4");
        let t = n / 2;
        let mut edges = Vec::new();
        for a in 0..t {
            edges.push((a, a));
            edges.push(((a + 1) % t, a));
        }
        BipartiteGraph::new(t, t, &edges)
    }

    pub fn q1(&self) -> usize {
        self.left.len()
    }

    pub fn q2(&self) -> usize {
        self.right.len()
    }

    pub fn left_names(&self) -> &[String] {
        &self.left
    }

    pub fn right_names(&self) -> &[String] {
        &self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i, j)).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.q1() * self.q2()
    }

    pub fn degree_left(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, _)| a == i).count()
    }

    pub fn degree_right(&self, j: usize) -> usize {
        self.edges.iter().filter(|&&(_, b)| b == j).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.q1() + self.q2();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize]; // left vertex 0
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &self.edges {
                let (a, b) = (i, self.q1() + j);
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
                if b == v && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn require_connected(&self) -> Result<(), ComplexError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(ComplexError::NotConnected)
        }
    }

    /// Downstream lattice statements assume both sides have at least two
    /// vertices; construction alone does not.
    pub fn lattice_size_warning(&self) -> Option<String> {
        if self.q1() < 2 || self.q2() < 2 {
            Some(format!(
                "graph has sides of size {} and {}; index statements assume both >= 2",
                self.q1(),
                self.q2()
            ))
        } else {
            None
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| (self.left[i].clone(), self.right[j].clone()))
            .collect();
        serde_json::to_value(GraphJson {
            left: self.left.clone(),
            right: self.right.clone(),
            edges,
        })
        .expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ComplexError> {
        let parsed: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| ComplexError::BadGraphJson(e.to_string()))?;
        if parsed.left.is_empty() || parsed.right.is_empty() {
            return Err(ComplexError::EmptySide);
        }
        let mut set = BTreeSet::new();
        for (a, b) in &parsed.edges {
            let i = parsed
                .left
                .iter()
                .position(|n| n == a)
                .ok_or_else(|| ComplexError::BadGraphJson(format!("unknown left vertex {}", a)))?;
            let j = parsed
                .right
                .iter()
                .position(|n| n == b)
                .ok_or_else(|| ComplexError::BadGraphJson(format!("unknown right vertex {}", b)))?;
            set.insert((i, j));
        }
        Ok(BipartiteGraph {
            left: parsed.left,
            right: parsed.right,
            edges: set.into_iter().collect(),
        })
    }
}
