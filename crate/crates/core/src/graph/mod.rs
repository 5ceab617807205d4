//! Simple undirected graphs over vertices `0..n`, stored as one adjacency
//! bitmask per vertex.

mod canon;
mod io;

use std::fmt;

use rand::Rng;
use thiserror::Error;

pub use canon::{
    are_isomorphic, canonical_code, canonical_form, enumerate_graphs_up_to_iso, CanonicalCode,
    MAX_CANON_VERTICES, MAX_ENUMERATION_VERTICES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("graph has {vertex_count} vertices, more than the limit of {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("malformed edge list at line {line}: {message}")]
    Malformed { line: usize, message: String },
}

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Self {
            vertex_count: n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// The cycle C_n (n ≥ 3).
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for u in 0..n {
                g.set_edge(u, (u + 1) % n, true);
            }
        }
        g
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.set_edge(u - 1, u, true);
        }
        g
    }

    /// K_{a,b} with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// Disjoint union of cliques with the given sizes, in order.
    pub fn disjoint_cliques(sizes: &[usize]) -> Self {
        let mut g = Self::new(sizes.iter().sum());
        let mut start = 0;
        for &s in sizes {
            for u in start..start + s {
                for v in u + 1..start + s {
                    g.set_edge(u, v, true);
                }
            }
            start += s;
        }
        g
    }

    /// G(n, p) random graph.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::LabelCount {
                expected: self.vertex_count,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (v / WORD, 1u64 << (v % WORD));
        let (wv, bv) = (u / WORD, 1u64 << (u % WORD));
        if on {
            self.rows[u * self.words + wu] |= bu;
            self.rows[v * self.words + wv] |= bv;
        } else {
            self.rows[u * self.words + wu] &= !bu;
            self.rows[v * self.words + wv] &= !bv;
        }
    }

    /// Constant-time edge query. Out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.rows[u * self.words + v / WORD] & (1u64 << (v % WORD)) != 0
    }

    /// Adjacency bitmask of `v`, `words_per_row()` words long.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<_> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Same vertices, complemented edge set; labels are kept.
    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.vertex_count);
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = Self::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g.labels = self
            .labels
            .as_ref()
            .map(|labels| vertices.iter().map(|&v| labels[v].clone()).collect());
        Ok(g)
    }

    /// Induced subgraph on every vertex not in `removed`, keeping order.
    pub fn without_vertices(&self, removed: &[usize]) -> Result<Self, GraphError> {
        for &v in removed {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.vertex_count)
            .filter(|v| !removed.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Vertices adjacent to every other vertex. In a one-vertex graph the
    /// single vertex counts.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count;
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.row(u).iter().zip(self.row(v)).all(|(a, b)| a & b == 0))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut component = Vec::new();
            while let Some(u) = stack.pop() {
                component.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True when every vertex subset is a clique: each component is complete.
    pub fn is_disjoint_union_of_cliques(&self) -> bool {
        self.connected_components().iter().all(|c| {
            c.iter()
                .all(|&u| c.iter().all(|&v| u == v || self.has_edge(u, v)))
        })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = Self::new(self.vertex_count);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        if let Some(labels) = &self.labels {
            let mut new = vec![String::new(); self.vertex_count];
            for (v, l) in labels.iter().enumerate() {
                new[perm[v]] = l.clone();
            }
            g.labels = Some(new);
        }
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("SimpleGraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &edges)
            .field("labels", &self.labels)
            .finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(SimpleGraph::complete(0).vertex_count(), 0);
        assert_eq!(SimpleGraph::complete(3).edge_count(), 3);
        assert_eq!(SimpleGraph::complete(5).edge_count(), 10);
        assert!(SimpleGraph::complete(5).is_complete());
    }

    #[test]
    fn complement_cases() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.complement().edge_count(), 0);
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        let three_k2 = SimpleGraph::disjoint_cliques(&[2, 2, 2]);
        let octahedron = three_k2.complement();
        assert_eq!(octahedron.edge_count(), 12);
        assert!(octahedron.degree_sequence().iter().all(|&d| d == 4));
    }

    #[test]
    fn complement_keeps_labels() {
        let g = SimpleGraph::path(2)
            .with_labels(vec!["x".into(), "y".into()])
            .unwrap();
        assert_eq!(g.complement().labels().unwrap(), &["x", "y"]);
    }

    #[test]
    fn induced_subgraphs() {
        let g = SimpleGraph::cycle(5);
        assert_eq!(g.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), g);
        assert_eq!(g.induced_subgraph(&[]).unwrap().vertex_count(), 0);

        let mut host = SimpleGraph::complete(5);
        host.set_edge(0, 1, false);
        let sub = host.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.edge_count(), 5);
        assert!(!sub.has_edge(0, 1));
        assert!(matches!(
            host.induced_subgraph(&[0, 9]),
            Err(GraphError::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn dominating_vertex_cases() {
        assert_eq!(
            SimpleGraph::complete(4).dominating_vertices(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            SimpleGraph::complete_bipartite(1, 3).dominating_vertices(),
            vec![0]
        );
        assert!(SimpleGraph::cycle(4).dominating_vertices().is_empty());
        assert_eq!(SimpleGraph::new(1).dominating_vertices(), vec![0]);
        assert!(SimpleGraph::new(0).dominating_vertices().is_empty());
    }

    #[test]
    fn triangles_and_edge_counts() {
        let c5 = SimpleGraph::cycle(5);
        assert!(c5.is_triangle_free());
        assert_eq!(c5.edge_count(), 5);
        assert!(!SimpleGraph::complete(3).is_triangle_free());
        let k23 = SimpleGraph::complete_bipartite(2, 3);
        assert!(k23.is_triangle_free());
        assert_eq!(k23.edge_count(), 25 / 4);
    }

    #[test]
    fn edge_errors() {
        let mut g = SimpleGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(g.add_edge(0, 3).is_err());
        assert!(!g.has_edge(0, 7));
        assert!(SimpleGraph::new(2).with_labels(vec!["a".into()]).is_err());
    }

    #[test]
    fn wide_rows() {
        let g = SimpleGraph::complete(130);
        assert_eq!(g.degree(129), 129);
        assert_eq!(g.neighbors(0).last(), Some(129));
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert_eq!(g.complement().edge_count(), 0);
    }

    #[test]
    fn components_of_cliques() {
        let g = SimpleGraph::disjoint_cliques(&[3, 1, 2]);
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1, 2], vec![3], vec![4, 5]]
        );
        assert!(g.is_disjoint_union_of_cliques());
        assert!(!SimpleGraph::path(3).is_disjoint_union_of_cliques());
    }
}
