//! The minimal non-line graphs, derived by exhaustive enumeration.

use std::sync::OnceLock;

use super::embed::{find_induced, Embedding};
use super::krausz::krausz_partition;
use super::RecognitionError;
use crate::graph::{canonical_code, enumerate_graphs_up_to_iso, SimpleGraph};

/// Number of minimal forbidden induced subgraphs for line graphs.
pub const FAMILY_SIZE: usize = 9;

const MIN_MEMBER_VERTICES: usize = 4;
const MAX_MEMBER_VERTICES: usize = 6;

/// The nine minimal non-line graphs in canonical form, ordered by
/// (vertex count, canonical code), together with their complements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenFamily {
    members: Vec<SimpleGraph>,
    complemented_members: Vec<SimpleGraph>,
}

impl ForbiddenFamily {
    pub fn members(&self) -> &[SimpleGraph] {
        &self.members
    }

    pub fn complemented_members(&self) -> &[SimpleGraph] {
        &self.complemented_members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// First member (in family order) occurring as an induced subgraph of
    /// `host`, with its index. With `complemented` the complemented members
    /// are scanned instead.
    pub fn scan(&self, host: &SimpleGraph, complemented: bool) -> Option<(usize, Embedding)> {
        let patterns = if complemented {
            &self.complemented_members
        } else {
            &self.members
        };
        patterns
            .iter()
            .enumerate()
            .find_map(|(i, p)| find_induced(host, p).map(|e| (i, e)))
    }

    /// Edge-list blocks joined by `---` lines, in family order.
    pub fn export(&self, complemented: bool) -> String {
        let graphs = if complemented {
            &self.complemented_members
        } else {
            &self.members
        };
        graphs
            .iter()
            .map(SimpleGraph::to_edge_list)
            .collect::<Vec<_>>()
            .join("---\n")
    }
}

/// Enumerates every graph on 4 to 6 vertices and keeps those with no
/// Krausz partition whose one-vertex-deleted subgraphs all have one.
pub fn derive_forbidden_family() -> Result<ForbiddenFamily, RecognitionError> {
    let mut members: Vec<SimpleGraph> = Vec::new();
    for n in MIN_MEMBER_VERTICES..=MAX_MEMBER_VERTICES {
        for g in enumerate_graphs_up_to_iso(n)? {
            if krausz_partition(&g)?.is_some() {
                continue;
            }
            let mut minimal = true;
            for v in 0..n {
                if krausz_partition(&g.without_vertices(&[v])?)?.is_none() {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                debug_assert!(members.iter().all(|m| find_induced(&g, m).is_none()));
                members.push(g);
            }
        }
    }
    // Enumeration is already ordered by code within each size.
    members.sort_by_key(|g| canonical_code(g).expect("member sizes are within the guard"));
    if members.len() != FAMILY_SIZE {
        return Err(RecognitionError::FamilyCount(members.len()));
    }
    let complemented_members = members.iter().map(SimpleGraph::complement).collect();
    Ok(ForbiddenFamily {
        members,
        complemented_members,
    })
}

/// The derived family, computed once per process.
pub fn forbidden_family() -> &'static ForbiddenFamily {
    static FAMILY: OnceLock<ForbiddenFamily> = OnceLock::new();
    FAMILY.get_or_init(|| {
        derive_forbidden_family().expect("forbidden family derivation must yield nine graphs")
    })
}
