//! Induced subgraph search by backtracking over pattern vertices.

use serde::Serialize;

use super::CertificateError;
use crate::graph::{iter_bits, SimpleGraph};

/// An injective map from pattern vertices into host vertices that preserves
/// both adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: SimpleGraph,
    /// `host_vertices[a]` is the image of pattern vertex `a`.
    pub host_vertices: Vec<usize>,
}

impl Embedding {
    /// Replays the embedding against `host`.
    pub fn validate(&self, host: &SimpleGraph) -> Result<(), CertificateError> {
        let k = self.pattern.vertex_count();
        if self.host_vertices.len() != k {
            return Err(CertificateError::EmbeddingLength {
                expected: k,
                got: self.host_vertices.len(),
            });
        }
        for (a, &h) in self.host_vertices.iter().enumerate() {
            if h >= host.vertex_count() {
                return Err(CertificateError::VertexOutOfRange(h));
            }
            if self.host_vertices[..a].contains(&h) {
                return Err(CertificateError::EmbeddingNotInjective(h));
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                let (ha, hb) = (self.host_vertices[a], self.host_vertices[b]);
                if self.pattern.has_edge(a, b) != host.has_edge(ha, hb) {
                    return Err(CertificateError::EmbeddingMismatch { a, b });
                }
            }
        }
        Ok(())
    }

    /// Host labels of the image, in pattern-vertex order.
    pub fn host_labels(&self, host: &SimpleGraph) -> Vec<String> {
        self.host_vertices.iter().map(|&h| host.label(h)).collect()
    }

    pub fn summary(&self, host: &SimpleGraph) -> EmbeddingSummary {
        EmbeddingSummary {
            pattern_vertices: self.pattern.vertex_count(),
            pattern_edges: self.pattern.edges().collect(),
            host_vertices: self.host_vertices.clone(),
            host_labels: self.host_labels(host),
        }
    }
}

/// Serializable view of an embedding for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingSummary {
    pub pattern_vertices: usize,
    pub pattern_edges: Vec<(usize, usize)>,
    pub host_vertices: Vec<usize>,
    pub host_labels: Vec<String>,
}

/// Order in which pattern vertices are matched: highest degree first, then
/// repeatedly the vertex with most already-ordered neighbours (ties by
/// degree, then index). Keeps the partial map connected whenever possible.
fn match_order(pattern: &SimpleGraph) -> Vec<usize> {
    let k = pattern.vertex_count();
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    order: Vec<usize>,
    host_degree: Vec<usize>,
    pattern_degree: Vec<usize>,
    all_mask: Vec<u64>,
    used: Vec<u64>,
    images: Vec<usize>,
}

impl Matcher<'_> {
    fn candidates(&self, depth: usize) -> Vec<u64> {
        let p = self.order[depth];
        let mut cand: Vec<u64> = self
            .all_mask
            .iter()
            .zip(&self.used)
            .map(|(a, u)| a & !u)
            .collect();
        for e in 0..depth {
            let q = self.order[e];
            let row = self.host.row(self.images[e]);
            if self.pattern.has_edge(p, q) {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
            } else {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= !r);
            }
        }
        cand
    }

    fn search(&mut self, depth: usize) -> bool {
        let k = self.order.len();
        if depth == k {
            return true;
        }
        let p = self.order[depth];
        let need_adj = self.pattern_degree[p];
        let need_non = k - 1 - need_adj;
        let n = self.host.vertex_count();
        let cand = self.candidates(depth);
        for h in iter_bits(&cand) {
            let deg = self.host_degree[h];
            if deg < need_adj || n - 1 - deg < need_non {
                continue;
            }
            self.used[h / 64] |= 1 << (h % 64);
            self.images.push(h);
            if self.search(depth + 1) {
                return true;
            }
            self.images.pop();
            self.used[h / 64] &= !(1 << (h % 64));
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Pattern vertices are matched in a fixed order (see `match_order`) and
/// host candidates are tried in increasing index, so the result is the
/// lexicographically first embedding with respect to that order.
pub fn find_induced(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Embedding> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return None;
    }
    let words = host.words_per_row();
    let mut all_mask = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        if let Some(last) = all_mask.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    let mut matcher = Matcher {
        host,
        pattern,
        order: match_order(pattern),
        host_degree: (0..n).map(|v| host.degree(v)).collect(),
        pattern_degree: (0..k).map(|v| pattern.degree(v)).collect(),
        all_mask,
        used: vec![0; words],
        images: Vec::with_capacity(k),
    };
    if !matcher.search(0) {
        return None;
    }
    let mut host_vertices = vec![0; k];
    for (depth, &p) in matcher.order.iter().enumerate() {
        host_vertices[p] = matcher.images[depth];
    }
    Some(Embedding {
        pattern: pattern.clone(),
        host_vertices,
    })
}

/// An isomorphism `a → b` as a vertex map, if one exists. Not size-limited.
pub fn find_isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return None;
    }
    find_induced(b, a).map(|e| e.host_vertices)
}
