//! Krausz partitions: a graph is a line graph iff its edges split into
//! cliques with every vertex in at most two of them.

use serde::Serialize;

use super::{CertificateError, RecognitionError};
use crate::graph::SimpleGraph;

/// Backtracking is exponential in the worst case, so the oracle is limited
/// to small hosts. 21 = |E(K7)|, enough for the line graph of any root on
/// seven vertices.
pub const MAX_KRAUSZ_VERTICES: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    /// Each clique sorted ascending; at least two vertices each.
    pub cliques: Vec<Vec<usize>>,
}

impl KrauszPartition {
    /// Replays the three partition invariants against `host`.
    pub fn validate(&self, host: &SimpleGraph) -> Result<(), CertificateError> {
        let n = host.vertex_count();
        let mut cover = vec![vec![0u32; n]; n];
        let mut membership = vec![0usize; n];
        for (idx, clique) in self.cliques.iter().enumerate() {
            if clique.len() < 2 {
                return Err(CertificateError::CliqueTooSmall(idx));
            }
            for (i, &u) in clique.iter().enumerate() {
                if u >= n {
                    return Err(CertificateError::VertexOutOfRange(u));
                }
                membership[u] += 1;
                for &v in &clique[i + 1..] {
                    if v >= n || u == v {
                        return Err(CertificateError::VertexOutOfRange(v));
                    }
                    if !host.has_edge(u, v) {
                        return Err(CertificateError::NotAClique { clique: idx, u, v });
                    }
                    cover[u][v] += 1;
                    cover[v][u] += 1;
                }
            }
        }
        for (u, v) in host.edges() {
            match cover[u][v] {
                0 => return Err(CertificateError::EdgeUncovered(u, v)),
                1 => {}
                _ => return Err(CertificateError::EdgeCoveredTwice(u, v)),
            }
        }
        if let Some(v) = (0..n).find(|&v| membership[v] > 2) {
            return Err(CertificateError::VertexInTooManyCliques(v));
        }
        Ok(())
    }
}

struct Solver<'a> {
    g: &'a SimpleGraph,
    edges: Vec<(usize, usize)>,
    covered: Vec<u64>,
    cliques: Vec<Vec<usize>>,
    member_of: Vec<Vec<usize>>,
}

impl Solver<'_> {
    fn is_covered(&self, u: usize, v: usize) -> bool {
        self.covered[u] & (1 << v) != 0
    }

    fn set_cover(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.covered[u] |= 1 << v;
            self.covered[v] |= 1 << u;
        } else {
            self.covered[u] &= !(1 << v);
            self.covered[v] &= !(1 << u);
        }
    }

    fn can_join(&self, v: usize, clique: usize) -> bool {
        self.member_of[v].len() < 2
            && self.cliques[clique]
                .iter()
                .all(|&w| self.g.has_edge(v, w) && !self.is_covered(v, w))
    }

    fn join(&mut self, v: usize, clique: usize) {
        for i in 0..self.cliques[clique].len() {
            let w = self.cliques[clique][i];
            self.set_cover(v, w, true);
        }
        self.cliques[clique].push(v);
        self.member_of[v].push(clique);
    }

    fn leave(&mut self, v: usize, clique: usize) {
        self.cliques[clique].pop();
        self.member_of[v].pop();
        for i in 0..self.cliques[clique].len() {
            let w = self.cliques[clique][i];
            self.set_cover(v, w, false);
        }
    }

    fn solve(&mut self, mut idx: usize) -> bool {
        while idx < self.edges.len() && {
            let (u, v) = self.edges[idx];
            self.is_covered(u, v)
        } {
            idx += 1;
        }
        let Some(&(u, v)) = self.edges.get(idx) else {
            return true;
        };

        // Grow an existing clique at one endpoint by the other endpoint.
        for (a, b) in [(u, v), (v, u)] {
            for slot in 0..self.member_of[a].len() {
                let clique = self.member_of[a][slot];
                if self.can_join(b, clique) {
                    self.join(b, clique);
                    if self.solve(idx + 1) {
                        return true;
                    }
                    self.leave(b, clique);
                }
            }
        }

        // Open a new clique on the edge itself.
        if self.member_of[u].len() < 2 && self.member_of[v].len() < 2 {
            let clique = self.cliques.len();
            self.cliques.push(vec![u, v]);
            self.member_of[u].push(clique);
            self.member_of[v].push(clique);
            self.set_cover(u, v, true);
            if self.solve(idx + 1) {
                return true;
            }
            self.set_cover(u, v, false);
            self.member_of[u].pop();
            self.member_of[v].pop();
            self.cliques.pop();
        }
        false
    }
}

/// Searches for a Krausz partition of `g`.
pub fn krausz_partition(g: &SimpleGraph) -> Result<Option<KrauszPartition>, RecognitionError> {
    let n = g.vertex_count();
    if n > MAX_KRAUSZ_VERTICES {
        return Err(RecognitionError::TooLarge {
            vertex_count: n,
            limit: MAX_KRAUSZ_VERTICES,
        });
    }
    let mut solver = Solver {
        g,
        edges: g.edges().collect(),
        covered: vec![0; n],
        cliques: Vec::new(),
        member_of: vec![Vec::new(); n],
    };
    if !solver.solve(0) {
        return Ok(None);
    }
    let cliques = solver
        .cliques
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    Ok(Some(KrauszPartition { cliques }))
}

/// Host vertex `v` becomes root edge `edge_of[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootGraph {
    pub graph: SimpleGraph,
    pub edge_of: Vec<(usize, usize)>,
}

/// Builds a root graph R with L(R) ≅ `host` from a Krausz partition: one
/// root vertex per clique, one pendant vertex for each host vertex lying in
/// a single clique, and an isolated root edge for each host vertex lying in
/// none.
pub fn root_from_partition(host: &SimpleGraph, partition: &KrauszPartition) -> RootGraph {
    let n = host.vertex_count();
    let mut member_of = vec![Vec::new(); n];
    for (idx, clique) in partition.cliques.iter().enumerate() {
        for &v in clique {
            member_of[v].push(idx);
        }
    }
    let mut next = partition.cliques.len();
    let mut edge_of = Vec::with_capacity(n);
    for cliques in &member_of {
        let edge = match cliques[..] {
            [a, b] => (a.min(b), a.max(b)),
            [a] => {
                next += 1;
                (a, next - 1)
            }
            _ => {
                next += 2;
                (next - 2, next - 1)
            }
        };
        edge_of.push(edge);
    }
    let graph = SimpleGraph::from_edges(next, &edge_of).expect("distinct endpoints in range");
    RootGraph { graph, edge_of }
}
