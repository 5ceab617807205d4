//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the recognizers or group predicates under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use comgraph::graph::{canonical_code, enumerate_graphs_up_to_iso, CanonicalCode};
use comgraph::recognition::line_graph;
use comgraph::{FiniteGroup, SimpleGraph};

/// Largest graph the line-graph oracle can classify.
pub const LINE_ORACLE_MAX: usize = 6;

/// Canonical codes of every connected line graph on at most
/// `LINE_ORACLE_MAX` vertices, built as L(R) over connected roots R. A root
/// of a connected k-vertex line graph is connected with k edges, so it has
/// at most k + 1 vertices.
pub fn connected_line_graph_codes() -> BTreeSet<CanonicalCode> {
    let mut codes = BTreeSet::new();
    for n in 2..=LINE_ORACLE_MAX + 1 {
        for root in enumerate_graphs_up_to_iso(n).unwrap() {
            if root.connected_components().len() != 1 || root.edge_count() > LINE_ORACLE_MAX {
                continue;
            }
            codes.insert(canonical_code(&line_graph(&root)).unwrap());
        }
    }
    codes
}

/// A graph is a line graph iff each component is.
pub fn is_line_graph_by_roots(g: &SimpleGraph, codes: &BTreeSet<CanonicalCode>) -> bool {
    g.connected_components().iter().all(|c| {
        let sub = g.induced_subgraph(c).unwrap();
        codes.contains(&canonical_code(&sub).unwrap())
    })
}

/// Commuting pairs (x, y), ordered, straight from the multiplication table.
pub fn commuting_pairs(g: &FiniteGroup) -> u64 {
    let mut count = 0;
    for x in g.elements() {
        for y in g.elements() {
            if g.op(x, y) == g.op(y, x) {
                count += 1;
            }
        }
    }
    count
}

pub fn center_by_table(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .filter(|&z| g.elements().all(|x| g.op(z, x) == g.op(x, z)))
        .collect()
}

/// Tries every bijection fixing the identity.
pub fn isomorphic_brute_force(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    let mut image: Vec<usize> = (1..n).collect();
    loop {
        let phi = |x: usize| if x == 0 { 0 } else { image[x - 1] };
        if a.elements().all(|x| {
            a.elements()
                .all(|y| phi(a.op(x, y)) == b.op(phi(x), phi(y)))
        }) {
            return true;
        }
        if !next_permutation(&mut image) {
            return false;
        }
    }
}

pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn table_group<T: PartialEq + Copy>(
    name: &str,
    elements: &[T],
    mul: impl Fn(T, T) -> T,
) -> FiniteGroup {
    let n = elements.len();
    let index = |x: T| elements.iter().position(|&e| e == x).expect("closed");
    let table = (0..n * n)
        .map(|k| index(mul(elements[k / n], elements[k % n])))
        .collect();
    let names = (0..n).map(|i| format!("g{i}")).collect();
    FiniteGroup::from_table(name, n, table, names).unwrap()
}

/// Symmetries of the square as affine maps x ↦ s·x + t on Z4.
pub fn square_symmetries() -> FiniteGroup {
    let mut elements = vec![(1i64, 0i64)];
    for s in [1, -1] {
        for t in 0..4 {
            if (s, t) != (1, 0) {
                elements.push((s, t));
            }
        }
    }
    // (f∘g)(x) = s1(s2 x + t2) + t1
    table_group("square", &elements, |(s1, t1), (s2, t2)| {
        (s1 * s2, (s1 * t2 + t1).rem_euclid(4))
    })
}

/// The unit quaternions ±1, ±i, ±j, ±k.
pub fn unit_quaternions() -> FiniteGroup {
    let mut elements = vec![[1i64, 0, 0, 0]];
    for axis in 0..4 {
        for sign in [1, -1] {
            let mut q = [0; 4];
            q[axis] = sign;
            if q != [1, 0, 0, 0] {
                elements.push(q);
            }
        }
    }
    table_group("quaternions", &elements, |a, b| {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    })
}
