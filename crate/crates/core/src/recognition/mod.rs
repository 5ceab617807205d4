//! Line-graph and complement-of-line-graph recognition.
//!
//! Two independent deciders are provided. The Beineke scan looks for any of
//! the nine minimal non-line graphs as an induced subgraph and certifies a
//! NO with the embedding it finds. The Krausz oracle searches for an edge
//! partition into cliques, at most two per vertex, and certifies a YES with
//! that partition and the root graph built from it.

mod embed;
mod forbidden;
mod krausz;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};

pub use embed::{find_induced, find_isomorphism, Embedding, EmbeddingSummary};
pub use forbidden::{derive_forbidden_family, forbidden_family, ForbiddenFamily, FAMILY_SIZE};
pub use krausz::{
    krausz_partition, root_from_partition, KrauszPartition, RootGraph, MAX_KRAUSZ_VERTICES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph has {vertex_count} vertices, more than the oracle limit of {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("forbidden family derivation produced {0} graphs instead of nine")]
    FamilyCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Why a certificate fails to replay.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("clique {0} has fewer than two vertices")]
    CliqueTooSmall(usize),
    #[error("clique {clique} is not complete: {u} and {v} are not adjacent")]
    NotAClique { clique: usize, u: usize, v: usize },
    #[error("edge ({0}, {1}) is in no clique")]
    EdgeUncovered(usize, usize),
    #[error("edge ({0}, {1}) is in more than one clique")]
    EdgeCoveredTwice(usize, usize),
    #[error("vertex {0} lies in more than two cliques")]
    VertexInTooManyCliques(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("embedding has {got} images for {expected} pattern vertices")]
    EmbeddingLength { expected: usize, got: usize },
    #[error("embedding maps two pattern vertices to host vertex {0}")]
    EmbeddingNotInjective(usize),
    #[error("pattern pair ({a}, {b}) disagrees with the host")]
    EmbeddingMismatch { a: usize, b: usize },
    #[error("line graph of the root is not isomorphic to the host")]
    RootMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Krausz,
    Beineke,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: bool,
    pub method: Method,
    /// Krausz partition for a YES.
    pub partition: Option<KrauszPartition>,
    /// Root graph built from the partition.
    pub root: Option<SimpleGraph>,
    /// Forbidden-member embedding for a NO from the Beineke scan.
    pub embedding: Option<Embedding>,
    /// Index of the embedded member in family order.
    pub family_index: Option<usize>,
}

impl RecognitionResult {
    fn beineke(hit: Option<(usize, Embedding)>) -> Self {
        let (family_index, embedding) = match hit {
            Some((i, e)) => (Some(i), Some(e)),
            None => (None, None),
        };
        Self {
            verdict: embedding.is_none(),
            method: Method::Beineke,
            partition: None,
            root: None,
            embedding,
            family_index,
        }
    }

    /// Replays whichever certificate is attached against `host`.
    pub fn validate(&self, host: &SimpleGraph) -> Result<(), CertificateError> {
        if let Some(e) = &self.embedding {
            e.validate(host)?;
        }
        if let Some(p) = &self.partition {
            p.validate(host)?;
        }
        if let Some(root) = &self.root {
            if find_isomorphism(&line_graph(root), host).is_none() {
                return Err(CertificateError::RootMismatch);
            }
        }
        Ok(())
    }
}

/// L(R): one vertex per edge of `root` (in lexicographic edge order),
/// adjacent when the edges share an endpoint. Labeled `u-v` when `root`
/// carries labels.
pub fn line_graph(root: &SimpleGraph) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = root.edges().collect();
    let mut g = SimpleGraph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    if root.labels().is_some() {
        let labels = edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", root.label(a), root.label(b)))
            .collect();
        g = g.with_labels(labels).expect("one label per edge");
    }
    g
}

/// Krausz decision with certificates. Limited to small graphs.
pub fn krausz_oracle(g: &SimpleGraph) -> Result<RecognitionResult, RecognitionError> {
    let partition = krausz_partition(g)?;
    let root = partition.as_ref().map(|p| root_from_partition(g, p).graph);
    Ok(RecognitionResult {
        verdict: partition.is_some(),
        method: Method::Krausz,
        partition,
        root,
        embedding: None,
        family_index: None,
    })
}

/// A root graph R with L(R) ≅ `g`, when `g` is a line graph.
pub fn root_graph(g: &SimpleGraph) -> Result<Option<SimpleGraph>, RecognitionError> {
    Ok(krausz_partition(g)?.map(|p| root_from_partition(g, &p).graph))
}

/// Beineke scan: `g` is a line graph iff none of the nine forbidden graphs
/// is an induced subgraph. Members are tried claw first, then by size.
pub fn is_line_graph(g: &SimpleGraph) -> RecognitionResult {
    RecognitionResult::beineke(forbidden_family().scan(g, false))
}

/// Decides whether `g` is the complement of a line graph.
///
/// Both the line-graph test on the complement and a direct scan for the
/// complemented family are run; they must agree. The certificate comes
/// from the direct scan and embeds into `g` itself.
pub fn is_complement_of_line_graph(g: &SimpleGraph) -> RecognitionResult {
    let via_complement = is_line_graph(&g.complement());
    let direct = RecognitionResult::beineke(forbidden_family().scan(g, true));
    assert_eq!(
        via_complement.verdict,
        direct.verdict,
        "complement routes disagree on a {}-vertex graph",
        g.vertex_count()
    );
    direct
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn small_line_graphs() {
        let l_p3 = line_graph(&SimpleGraph::path(3));
        assert!(are_isomorphic(&l_p3, &SimpleGraph::complete(2)).unwrap());
        let l_claw = line_graph(&SimpleGraph::complete_bipartite(1, 3));
        assert!(are_isomorphic(&l_claw, &SimpleGraph::complete(3)).unwrap());
        let l_c5 = line_graph(&SimpleGraph::cycle(5));
        assert!(are_isomorphic(&l_c5, &SimpleGraph::cycle(5)).unwrap());
        assert_eq!(line_graph(&SimpleGraph::new(4)).vertex_count(), 0);
    }

    #[test]
    fn oracle_examples() {
        assert!(krausz_oracle(&SimpleGraph::complete(3)).unwrap().verdict);
        assert!(
            !krausz_oracle(&SimpleGraph::complete_bipartite(1, 3))
                .unwrap()
                .verdict
        );
        let m = SimpleGraph::disjoint_cliques(&[2, 2, 2]);
        let r = krausz_oracle(&m).unwrap();
        assert!(r.verdict);
        r.validate(&m).unwrap();
    }

    #[test]
    fn root_graph_examples() {
        let k3 = SimpleGraph::complete(3);
        let root = root_graph(&k3).unwrap().unwrap();
        assert!(
            are_isomorphic(&root, &SimpleGraph::complete(3)).unwrap()
                || are_isomorphic(&root, &SimpleGraph::complete_bipartite(1, 3)).unwrap()
        );

        let m = SimpleGraph::disjoint_cliques(&[2, 2, 2]);
        let root = root_graph(&m).unwrap().unwrap();
        let three_p3 =
            SimpleGraph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)]).unwrap();
        assert!(find_isomorphism(&root, &three_p3).is_some());

        let l_c5 = line_graph(&SimpleGraph::cycle(5));
        let root = root_graph(&l_c5).unwrap().unwrap();
        assert!(are_isomorphic(&root, &SimpleGraph::cycle(5)).unwrap());

        assert!(root_graph(&SimpleGraph::complete_bipartite(1, 3))
            .unwrap()
            .is_none());
    }

    #[test]
    fn beineke_examples() {
        assert!(is_line_graph(&SimpleGraph::complete(7)).verdict);
        assert!(is_line_graph(&SimpleGraph::new(0)).verdict);
        assert!(is_line_graph(&SimpleGraph::new(1)).verdict);
        let claw = SimpleGraph::complete_bipartite(1, 3);
        let r = is_line_graph(&claw);
        assert!(!r.verdict);
        assert_eq!(r.family_index, Some(0));
        r.validate(&claw).unwrap();
    }

    #[test]
    fn complement_examples() {
        assert!(is_complement_of_line_graph(&SimpleGraph::complete(6)).verdict);
        assert!(is_complement_of_line_graph(&SimpleGraph::new(0)).verdict);
        // K5 minus an edge is the complement of K2 + 3K1, a line graph.
        let mut k5e = SimpleGraph::complete(5).complement();
        k5e.add_edge(0, 1).unwrap();
        let g = k5e.complement();
        assert!(!is_line_graph(&g).verdict);
        assert!(is_complement_of_line_graph(&g).verdict);
    }
}
