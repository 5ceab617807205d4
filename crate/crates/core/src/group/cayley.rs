//! Plain-text Cayley table format.
//!
//! ```text
//! # Z3
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Line 1 is the order n, followed by n rows of n indices in `[0, n)`.
//! Blank lines and lines starting with `#` are skipped.

use super::{FiniteGroup, GroupError, MAX_ORDER};

/// Parses and validates a Cayley table. If the identity is not element 0,
/// elements are relabeled by swapping it into position 0; element names are
/// the original indices.
pub fn parse_cayley_table(name: &str, text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GroupError::Malformed {
        line: 0,
        message: "empty input".into(),
    })?;
    let order: usize = header.parse().map_err(|_| GroupError::Malformed {
        line: header_line,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if order == 0 {
        return Err(GroupError::InvalidOrder(0));
    }
    if order > MAX_ORDER {
        return Err(GroupError::TooLarge {
            order,
            limit: MAX_ORDER,
        });
    }

    let mut table = Vec::with_capacity(order * order);
    let mut rows = 0;
    for (line_no, line) in lines {
        if rows == order {
            return Err(GroupError::Malformed {
                line: line_no,
                message: format!("more than {order} rows"),
            });
        }
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| GroupError::Malformed {
                    line: line_no,
                    message: format!("not a non-negative integer: {tok:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        if row.len() != order {
            return Err(GroupError::Malformed {
                line: line_no,
                message: format!("expected {order} entries, found {}", row.len()),
            });
        }
        for (col, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(GroupError::EntryOutOfRange {
                    row: rows,
                    col,
                    value,
                    order,
                });
            }
        }
        table.extend(row);
        rows += 1;
    }
    if rows != order {
        return Err(GroupError::Malformed {
            line: text.lines().count(),
            message: format!("expected {order} rows, found {rows}"),
        });
    }

    // Associativity is checked before looking for the identity so that a
    // non-associative Latin square is reported as such.
    super::check_associativity(order, &table)?;
    let op = |a: usize, b: usize| table[a * order + b];
    let identity = (0..order)
        .find(|&e| (0..order).all(|x| op(e, x) == x && op(x, e) == x))
        .ok_or(GroupError::NoIdentity)?;

    let names: Vec<String> = (0..order).map(|i| i.to_string()).collect();
    let mut perm: Vec<usize> = (0..order).collect();
    perm.swap(0, identity);
    let mut relabeled = vec![0; order * order];
    let mut new_names = vec![String::new(); order];
    for a in 0..order {
        new_names[perm[a]] = names[a].clone();
        for b in 0..order {
            relabeled[perm[a] * order + perm[b]] = perm[op(a, b)];
        }
    }
    FiniteGroup::from_table(name, order, relabeled, new_names)
}

impl FiniteGroup {
    /// Reads a group from Cayley-table text. See [`parse_cayley_table`].
    pub fn from_cayley_table(name: &str, text: &str) -> Result<Self, GroupError> {
        parse_cayley_table(name, text)
    }

    /// Writes the table in the same text format, with the name as a comment.
    pub fn to_cayley_table(&self) -> String {
        let n = self.order();
        let mut out = format!("# {}\n{}\n", self.name(), n);
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.op(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}
