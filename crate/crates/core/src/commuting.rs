//! Commuting graphs Γ(G), Γ*(G) and Γ**(G).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Γ(G): every element is a vertex.
    Full,
    /// Γ*(G): the identity is removed.
    Star,
    /// Γ**(G): every dominating vertex is removed.
    DoubleStar,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Full, Variant::Star, Variant::DoubleStar];

    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::Star => "star",
            Variant::DoubleStar => "double_star",
        }
    }

    /// Mathematical symbol used in reports.
    pub fn symbol(&self) -> &'static str {
        match self {
            Variant::Full => "Γ",
            Variant::Star => "Γ*",
            Variant::DoubleStar => "Γ**",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Variant::Full),
            "star" => Ok(Variant::Star),
            "double_star" | "double-star" => Ok(Variant::DoubleStar),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommutingError {
    #[error("dominating vertices of Γ({group}) are {dominating:?} but the center is {center:?}")]
    DominatingSetMismatch {
        group: String,
        dominating: Vec<usize>,
        center: Vec<usize>,
    },
}

/// A commuting graph with each vertex tied back to its group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingGraph {
    graph: SimpleGraph,
    group_name: String,
    variant: Variant,
    vertex_elements: Vec<usize>,
}

impl CommutingGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Element index (into the source group) of each vertex.
    pub fn vertex_elements(&self) -> &[usize] {
        &self.vertex_elements
    }

    /// Display name such as `Γ*(S3)`.
    pub fn title(&self) -> String {
        format!("{}({})", self.variant.symbol(), self.group_name)
    }

    fn restricted(&self, keep: &[usize], variant: Variant) -> Self {
        let graph = self
            .graph
            .induced_subgraph(keep)
            .expect("kept vertices are in range");
        Self {
            graph,
            group_name: self.group_name.clone(),
            variant,
            vertex_elements: keep.iter().map(|&v| self.vertex_elements[v]).collect(),
        }
    }
}

/// Γ(G): vertices are all elements in table order, and distinct `x`, `y`
/// are adjacent exactly when `xy = yx`.
pub fn commuting_graph(group: &FiniteGroup) -> CommutingGraph {
    let n = group.order();
    let mut graph = SimpleGraph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if group.commute(x, y) {
                graph.add_edge(x, y).expect("in range");
            }
        }
    }
    let graph = graph
        .with_labels(group.element_names().to_vec())
        .expect("one name per element");
    CommutingGraph {
        graph,
        group_name: group.name().to_string(),
        variant: Variant::Full,
        vertex_elements: (0..n).collect(),
    }
}

/// Γ*(G): Γ(G) without the identity.
pub fn star_graph(group: &FiniteGroup) -> CommutingGraph {
    let full = commuting_graph(group);
    let keep: Vec<usize> = (1..group.order()).collect();
    full.restricted(&keep, Variant::Star)
}

/// Γ**(G): Γ(G) without its dominating vertices.
///
/// The dominating set is read off the graph and must coincide with the
/// center Z(G); a disagreement is reported as an error.
pub fn double_star_graph(group: &FiniteGroup) -> Result<CommutingGraph, CommutingError> {
    let full = commuting_graph(group);
    let dominating = full.graph.dominating_vertices();
    let center = group.center().members().to_vec();
    if dominating != center {
        return Err(CommutingError::DominatingSetMismatch {
            group: group.name().to_string(),
            dominating,
            center,
        });
    }
    let keep: Vec<usize> = (0..group.order())
        .filter(|v| dominating.binary_search(v).is_err())
        .collect();
    Ok(full.restricted(&keep, Variant::DoubleStar))
}

pub fn build(group: &FiniteGroup, variant: Variant) -> Result<CommutingGraph, CommutingError> {
    match variant {
        Variant::Full => Ok(commuting_graph(group)),
        Variant::Star => Ok(star_graph(group)),
        Variant::DoubleStar => double_star_graph(group),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(cg: &CommutingGraph, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| cg.graph().label(v)).collect()
    }

    #[test]
    fn abelian_full_graph_is_complete() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let g = commuting_graph(&z4);
        assert!(g.graph().is_complete());
        assert_eq!(g.graph().vertex_count(), 4);
        let star = star_graph(&z4);
        assert!(star.graph().is_complete());
        assert_eq!(star.graph().vertex_count(), 3);
        let dstar = double_star_graph(&z4).unwrap();
        assert_eq!(dstar.graph().vertex_count(), 0);
    }

    #[test]
    fn s3_graphs() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let full = commuting_graph(&s3);
        assert_eq!(full.graph().vertex_count(), 6);
        assert_eq!(full.graph().edge_count(), 6);
        assert_eq!(full.graph().degree(0), 5);
        let star = star_graph(&s3);
        assert_eq!(star.graph().vertex_count(), 5);
        assert_eq!(star.graph().edge_count(), 1);
        let (u, v) = star.graph().edges().next().unwrap();
        let mut pair = names(&star, &[u, v]);
        pair.sort();
        assert_eq!(pair, vec!["(1 2 3)", "(1 3 2)"]);
    }

    #[test]
    fn q8_dominating_vertices_are_the_center() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        let full = commuting_graph(&q8);
        let dom = full.graph().dominating_vertices();
        assert_eq!(dom, q8.center().members());
        assert_eq!(names(&full, &dom), vec!["e", "a^2"]);
    }

    #[test]
    fn d5_star_components() {
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let star = star_graph(&d5);
        assert_eq!(star.graph().vertex_count(), 9);
        let mut sizes: Vec<usize> = star
            .graph()
            .connected_components()
            .iter()
            .map(Vec::len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 4]);
        assert!(star.graph().is_disjoint_union_of_cliques());
    }

    #[test]
    fn double_star_of_order_eight_groups() {
        for group in [
            FiniteGroup::dicyclic(2).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
        ] {
            let g = double_star_graph(&group).unwrap();
            assert_eq!(g.graph().vertex_count(), 6);
            assert_eq!(g.graph().edge_count(), 3);
            assert!(g.graph().is_disjoint_union_of_cliques());
        }
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let g = double_star_graph(&d4).unwrap();
        let mut pairs: Vec<Vec<String>> =
            g.graph().edges().map(|(u, v)| names(&g, &[u, v])).collect();
        pairs.sort();
        assert_eq!(
            pairs,
            vec![
                vec!["r".to_string(), "r^3".to_string()],
                vec!["s".to_string(), "sr^2".to_string()],
                vec!["sr".to_string(), "sr^3".to_string()],
            ]
        );
    }

    #[test]
    fn vertex_elements_track_group_elements() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let g = double_star_graph(&d4).unwrap();
        assert_eq!(g.vertex_elements(), &[1, 3, 4, 5, 6, 7]);
        assert_eq!(g.title(), "Γ**(D4)");
        for (u, v) in g.graph().edges() {
            assert!(d4.commute(g.vertex_elements()[u], g.vertex_elements()[v]));
        }
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("double_star".parse::<Variant>(), Ok(Variant::DoubleStar));
        assert_eq!("double-star".parse::<Variant>(), Ok(Variant::DoubleStar));
        assert!("half".parse::<Variant>().is_err());
    }
}
