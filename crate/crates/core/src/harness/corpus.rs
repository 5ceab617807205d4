use std::collections::BTreeSet;

use crate::group::FiniteGroup;

/// Largest order in the default corpus; bigger groups are opt-in.
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub group: FiniteGroup,
    pub tags: BTreeSet<String>,
}

impl CorpusEntry {
    /// Entry named after the group, tagged by commutativity, center size
    /// and whether it exceeds the default order cap.
    pub fn new(group: FiniteGroup) -> Self {
        let mut tags = BTreeSet::new();
        let abelian = group.is_abelian();
        tags.insert(if abelian { "abelian" } else { "non-abelian" }.to_string());
        let center = group.center().len();
        tags.insert(
            match center {
                1 => "trivial-center",
                2 => "center-2",
                _ => "center-3+",
            }
            .to_string(),
        );
        if group.order() > DEFAULT_MAX_ORDER {
            tags.insert("large".to_string());
        }
        Self {
            name: group.name().to_string(),
            group,
            tags,
        }
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }
}

fn entry(group: Result<FiniteGroup, crate::group::GroupError>) -> CorpusEntry {
    CorpusEntry::new(group.expect("corpus constructors are within bounds"))
}

fn product(a: FiniteGroup, b: FiniteGroup) -> CorpusEntry {
    entry(FiniteGroup::direct_product(&a, &b))
}

/// Covers every branch of the classification: abelian groups, non-abelian
/// groups with trivial center, with center of order 2, and with larger
/// center.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let z = |n| FiniteGroup::cyclic(n).expect("small order");
    let mut corpus: Vec<CorpusEntry> = (1..=16).map(|n| entry(FiniteGroup::cyclic(n))).collect();
    corpus.push(product(z(2), z(2)));
    corpus.push(product(z(2), z(4)));
    corpus.push(entry(
        FiniteGroup::direct_product(&z(2), &z(2))
            .and_then(|v| FiniteGroup::direct_product(&v, &z(2))),
    ));

    for n in [3, 5, 7, 9] {
        corpus.push(entry(FiniteGroup::dihedral(n)));
    }
    corpus.push(entry(FiniteGroup::symmetric(3)));
    corpus.push(entry(FiniteGroup::symmetric(4)));
    corpus.push(entry(FiniteGroup::alternating(4)));
    corpus.push(entry(FiniteGroup::alternating(5)));

    for n in [4, 6, 8, 10] {
        corpus.push(entry(FiniteGroup::dihedral(n)));
    }
    for m in [2, 3, 4] {
        corpus.push(entry(FiniteGroup::dicyclic(m)));
    }

    let d4 = || FiniteGroup::dihedral(4).expect("small order");
    corpus.push(product(d4(), z(2)));
    corpus.push(product(
        FiniteGroup::dicyclic(2).expect("small order"),
        z(2),
    ));
    corpus.push(product(d4(), z(3)));
    corpus
}

/// Groups beyond the default order cap.
pub fn large_corpus() -> Vec<CorpusEntry> {
    vec![entry(FiniteGroup::symmetric(5))]
}

pub fn extended_corpus(include_large: bool) -> Vec<CorpusEntry> {
    let mut corpus = default_corpus();
    if include_large {
        corpus.extend(large_corpus());
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let corpus = default_corpus();
        let names: BTreeSet<_> = corpus.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), corpus.len(), "names are unique");
        assert!(corpus.len() >= 30);
        let q8 = corpus.iter().find(|e| e.name == "Q8").unwrap();
        assert!(q8.has_tag("center-2"));
        assert!(corpus
            .iter()
            .any(|e| e.has_tag("non-abelian") && e.has_tag("center-3+")));
        assert!(corpus.iter().all(|e| e.group.order() <= DEFAULT_MAX_ORDER));
        assert!(corpus.iter().all(|e| e.group.validate().is_ok()));
    }

    #[test]
    fn large_corpus_is_tagged() {
        let large = large_corpus();
        assert_eq!(large[0].name, "S5");
        assert!(large[0].has_tag("large"));
        assert_eq!(extended_corpus(true).len(), default_corpus().len() + 1);
    }
}
