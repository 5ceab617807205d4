//! Canonical forms for small graphs.
//!
//! The code of a labeled graph on n vertices is the upper-triangle bit
//! string read column by column, `(0,1), (0,2), (1,2), (0,3), …`, with the
//! first pair as the most significant bit. The canonical code is the minimum
//! over all vertex orderings. Column order lets a branch-and-bound search
//! compare prefixes as soon as each position is filled.

use std::collections::BTreeMap;

use super::{GraphError, SimpleGraph};

/// Canonization is exhaustive over orderings, so it is only offered for
/// tiny graphs.
pub const MAX_CANON_VERTICES: usize = 8;
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Isomorphism-invariant key; ordered by vertex count, then code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    vertex_count: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }
}

fn guard(g: &SimpleGraph) -> Result<(), GraphError> {
    if g.vertex_count() > MAX_CANON_VERTICES {
        Err(GraphError::TooLarge {
            vertex_count: g.vertex_count(),
            limit: MAX_CANON_VERTICES,
        })
    } else {
        Ok(())
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, code: u64) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for i in 0..pos {
                next = (next << 1) | u64::from(self.g.has_edge(self.order[i], v));
            }
            if let Some((best, _)) = &self.best {
                let prefix_len = (pos + 1) * pos / 2;
                let best_prefix = best >> (self.total_bits - prefix_len);
                if next > best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Minimal code and an ordering achieving it (`order[p]` is the original
/// vertex placed at position `p`).
fn minimize(g: &SimpleGraph) -> (u64, Vec<usize>) {
    let n = g.vertex_count();
    let mut search = Search {
        g,
        n,
        total_bits: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0);
    search.best.expect("at least one ordering")
}

pub fn canonical_code(g: &SimpleGraph) -> Result<CanonicalCode, GraphError> {
    guard(g)?;
    let (bits, _) = minimize(g);
    Ok(CanonicalCode {
        vertex_count: g.vertex_count() as u8,
        bits,
    })
}

/// The graph relabeled into its canonical ordering. Labels travel with
/// their vertices.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
    guard(g)?;
    let (_, order) = minimize(g);
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permuted(&perm))
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool, GraphError> {
    guard(a)?;
    guard(b)?;
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in ascending canonical-code order.
///
/// Built inductively: every n-vertex graph is some (n−1)-vertex graph plus
/// one vertex, so extending each smaller representative by every possible
/// neighbourhood reaches every class.
pub fn enumerate_graphs_up_to_iso(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::TooLarge {
            vertex_count: n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut reps = vec![SimpleGraph::new(0)];
    for size in 1..=n {
        let mut classes: BTreeMap<CanonicalCode, SimpleGraph> = BTreeMap::new();
        for base in &reps {
            for mask in 0u32..(1 << (size - 1)) {
                let mut g = SimpleGraph::new(size);
                for (u, v) in base.edges() {
                    g.set_edge(u, v, true);
                }
                for u in 0..size - 1 {
                    if mask & (1 << u) != 0 {
                        g.set_edge(u, size - 1, true);
                    }
                }
                let code = canonical_code(&g)?;
                classes
                    .entry(code)
                    .or_insert_with(|| canonical_form(&g).expect("guarded"));
            }
        }
        reps = classes.into_values().collect();
    }
    Ok(reps)
}
