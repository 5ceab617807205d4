//! Group selectors: `Z6`, `D4`, `Dic3`, `Q8`, `S4`, `A5`, products joined
//! by `x` (`D4xZ2`, `Z2xZ2xZ2`), or `@path` for a Cayley-table file.

use std::path::Path;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

#[derive(Debug, Error)]
pub enum SelectorError {
    #[error("unrecognized group selector {0:?}")]
    Unrecognized(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{selector}: {source}")]
    Group {
        selector: String,
        source: GroupError,
    },
}

/// Builds the group named by `selector`. Factor names are kept verbatim, so
/// `D4xZ2` is displayed as written.
pub fn parse_group(selector: &str) -> Result<FiniteGroup, SelectorError> {
    let selector = selector.trim();
    if let Some(path) = selector.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|source| SelectorError::Io {
            path: path.to_string(),
            source,
        })?;
        let name = Path::new(path)
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or(path);
        return FiniteGroup::from_cayley_table(name, &text).map_err(|source| {
            SelectorError::Group {
                selector: selector.to_string(),
                source,
            }
        });
    }
    let mut factors = selector.split('x');
    let first = factors.next().unwrap_or_default();
    let mut group = parse_factor(first)?;
    for factor in factors {
        let next = parse_factor(factor)?;
        group =
            FiniteGroup::direct_product(&group, &next).map_err(|source| SelectorError::Group {
                selector: selector.to_string(),
                source,
            })?;
    }
    Ok(group.renamed(selector))
}

fn parse_factor(factor: &str) -> Result<FiniteGroup, SelectorError> {
    let unrecognized = || SelectorError::Unrecognized(factor.to_string());
    if factor == "Q8" {
        return FiniteGroup::dicyclic(2).map_err(|source| SelectorError::Group {
            selector: factor.to_string(),
            source,
        });
    }
    let (kind, digits) = ["Dic", "Z", "D", "S", "A"]
        .iter()
        .find_map(|p| factor.strip_prefix(p).map(|rest| (*p, rest)))
        .ok_or_else(unrecognized)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unrecognized());
    }
    let k: usize = digits.parse().map_err(|_| unrecognized())?;
    let built = match kind {
        "Z" => FiniteGroup::cyclic(k),
        "D" => FiniteGroup::dihedral(k),
        "Dic" => FiniteGroup::dicyclic(k),
        "S" => FiniteGroup::symmetric(k),
        "A" => FiniteGroup::alternating(k),
        _ => unreachable!(),
    };
    built.map_err(|source| SelectorError::Group {
        selector: factor.to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_selectors() {
        assert_eq!(parse_group("Z6").unwrap().order(), 6);
        assert_eq!(parse_group("D4").unwrap().order(), 8);
        assert_eq!(parse_group("Dic3").unwrap().order(), 12);
        assert_eq!(parse_group("S4").unwrap().order(), 24);
        assert_eq!(parse_group("A5").unwrap().order(), 60);
        let q8 = parse_group("Q8").unwrap();
        assert_eq!(q8.table(), FiniteGroup::dicyclic(2).unwrap().table());
    }

    #[test]
    fn products() {
        let g = parse_group("D4xZ2").unwrap();
        assert_eq!(g.name(), "D4xZ2");
        assert_eq!(g.order(), 16);
        assert_eq!(parse_group("Z2xZ2xZ2").unwrap().order(), 8);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "Y4", "D", "Dx", "Z-1", "D4xx", "S9", "Z0"] {
            assert!(parse_group(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn reads_table_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z3.txt");
        std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = parse_group(&format!("@{}", path.display())).unwrap();
        assert_eq!(g.order(), 3);
        assert!(parse_group("@/nonexistent/file").is_err());
    }
}
