use std::collections::HashMap;

use super::{FiniteGroup, GroupError, MAX_ORDER, MAX_PERMUTATION_DEGREE};

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn check_order(order: usize) -> Result<(), GroupError> {
    if order == 0 {
        Err(GroupError::InvalidOrder(0))
    } else if order > MAX_ORDER {
        Err(GroupError::TooLarge {
            order,
            limit: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

impl FiniteGroup {
    /// Z_n under addition mod n. Element `k` is printed as `a^k`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        check_order(n)?;
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let names = (0..n)
            .map(|k| {
                if k == 0 {
                    "e".to_string()
                } else {
                    power_name("a", k)
                }
            })
            .collect();
        Self::from_table_unchecked_assoc(format!("Z{n}"), n, table, names)
    }

    /// D_n of order 2n. Index `k < n` is the rotation r^k and index `n + k`
    /// is the reflection s·r^k.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder(0));
        }
        check_order(2 * n)?;
        let order = 2 * n;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (xs, xa) = (x >= n, x % n);
            for y in 0..order {
                let (ys, yb) = (y >= n, y % n);
                // r^a s = s r^{-a}
                let (s, k) = match (xs, ys) {
                    (false, false) => (false, xa + yb),
                    (false, true) => (true, n - xa + yb),
                    (true, false) => (true, xa + yb),
                    (true, true) => (false, n - xa + yb),
                };
                table[x * order + y] = if s { n + k % n } else { k % n };
            }
        }
        let names = (0..order)
            .map(|x| match (x >= n, x % n) {
                (false, 0) => "e".to_string(),
                (false, k) => power_name("r", k),
                (true, k) => format!("s{}", power_name("r", k)),
            })
            .collect();
        Self::from_table_unchecked_assoc(format!("D{n}"), order, table, names)
    }

    /// The dicyclic group of order 4m: a^{2m} = e, b² = a^m, b⁻¹ab = a⁻¹.
    /// Index `k < 2m` is a^k and index `2m + k` is a^k·b. `dicyclic(2)` is Q8.
    pub fn dicyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidOrder(0));
        }
        check_order(4 * m)?;
        let half = 2 * m;
        let order = 4 * m;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (xb, i) = (x >= half, x % half);
            for y in 0..order {
                let (yb, j) = (y >= half, y % half);
                // a^k b = b a^{-k}
                table[x * order + y] = match (xb, yb) {
                    (false, false) => (i + j) % half,
                    (false, true) => half + (i + j) % half,
                    (true, false) => half + (i + half - j) % half,
                    (true, true) => (i + half - j + m) % half,
                };
            }
        }
        let names = (0..order)
            .map(|x| match (x >= half, x % half) {
                (false, 0) => "e".to_string(),
                (false, k) => power_name("a", k),
                (true, k) => format!("{}b", power_name("a", k)),
            })
            .collect();
        let name = if m == 2 {
            "Q8".to_string()
        } else {
            format!("Dic{m}")
        };
        Self::from_table_unchecked_assoc(name, order, table, names)
    }

    /// S_k acting on {1..k}, elements in lexicographic order of their
    /// one-line notation (identity first). The product is composition
    /// `(p·q)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> Result<Self, GroupError> {
        Self::permutation_group(k, false)
    }

    /// A_k, the even permutations of {1..k}, ordered as in [`Self::symmetric`].
    pub fn alternating(k: usize) -> Result<Self, GroupError> {
        Self::permutation_group(k, true)
    }

    fn permutation_group(k: usize, even_only: bool) -> Result<Self, GroupError> {
        if k == 0 || k > MAX_PERMUTATION_DEGREE {
            return Err(GroupError::DegreeOutOfRange(k));
        }
        let perms: Vec<Vec<usize>> = lexicographic_permutations(k)
            .into_iter()
            .filter(|p| !even_only || is_even(p))
            .collect();
        let order = perms.len();
        check_order(order)?;
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let mut table = vec![0; order * order];
        let mut scratch = vec![0; k];
        for (x, p) in perms.iter().enumerate() {
            for (y, q) in perms.iter().enumerate() {
                for (slot, &qi) in scratch.iter_mut().zip(q) {
                    *slot = p[qi];
                }
                table[x * order + y] = index[scratch.as_slice()];
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        let name = if even_only {
            format!("A{k}")
        } else {
            format!("S{k}")
        };
        Self::from_table_unchecked_assoc(name, order, table, names)
    }

    /// G × H with componentwise product. The pair (g, h) has index
    /// `g·|H| + h`, so (e, e) stays at index 0.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        let (m, n) = (g.order(), h.order());
        check_order(m * n)?;
        let order = m * n;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (g1, h1) = (x / n, x % n);
            for y in 0..order {
                let (g2, h2) = (y / n, y % n);
                table[x * order + y] = g.op(g1, g2) * n + h.op(h1, h2);
            }
        }
        let names = (0..order)
            .map(|x| format!("({},{})", g.element_name(x / n), h.element_name(x % n)))
            .collect();
        Self::from_table_unchecked_assoc(format!("{}x{}", g.name(), h.name()), order, table, names)
    }
}

fn lexicographic_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![current.clone()];
    // Standard next-permutation step.
    loop {
        let Some(i) = (0..k.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.table(), vec![0]);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.op(2, 3), 1);
        assert!(FiniteGroup::cyclic(6).unwrap().is_abelian());
        assert_eq!(FiniteGroup::cyclic(0), Err(GroupError::InvalidOrder(0)));
    }

    #[test]
    fn dihedral_basics() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        assert_eq!(d3.center().len(), 1);
        let d1 = FiniteGroup::dihedral(1).unwrap();
        assert_eq!(d1.order(), 2);
        assert!(d1.is_abelian());
        assert!(FiniteGroup::dihedral(0).is_err());

        // s r s = r^{-1}
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let (r, s) = (1, 5);
        assert_eq!(d5.op(d5.op(s, r), s), 4);
        assert_eq!(d5.element_name(7), "sr^2");
    }

    #[test]
    fn dicyclic_basics() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert_eq!(q8.name(), "Q8");
        assert_eq!(q8.involution_count(), 1);
        let dic1 = FiniteGroup::dicyclic(1).unwrap();
        assert_eq!(dic1.order(), 4);
        assert!(dic1.is_abelian());
        assert_eq!(dic1.element_order(2).unwrap(), 4);
        // b^2 = a^m
        let dic3 = FiniteGroup::dicyclic(3).unwrap();
        assert_eq!(dic3.op(6, 6), 3);
        assert!(FiniteGroup::dicyclic(0).is_err());
    }

    #[test]
    fn permutation_groups() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.element_name(0), "e");
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let a4 = FiniteGroup::alternating(4).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.center().len(), 1);
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert_eq!(
            FiniteGroup::symmetric(8),
            Err(GroupError::DegreeOutOfRange(8))
        );
        assert_eq!(
            FiniteGroup::alternating(0),
            Err(GroupError::DegreeOutOfRange(0))
        );
    }

    #[test]
    fn cycle_notation_names() {
        assert_eq!(cycle_notation(&[1, 0, 3, 2]), "(1 2)(3 4)");
        assert_eq!(cycle_notation(&[1, 2, 0]), "(1 2 3)");
        assert_eq!(cycle_notation(&[0, 1]), "e");
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert!(v4.is_abelian());
        assert!(v4.elements().all(|x| v4.element_order(x).unwrap() <= 2));

        let d4 = FiniteGroup::dihedral(4).unwrap();
        let d4z2 = FiniteGroup::direct_product(&d4, &z2).unwrap();
        assert_eq!(d4z2.name(), "D4xZ2");
        assert_eq!(d4z2.center().len(), 4);
        assert_eq!(d4z2.element_name(0), "(e,e)");

        let z1 = FiniteGroup::cyclic(1).unwrap();
        let same = FiniteGroup::direct_product(&d4, &z1).unwrap();
        assert_eq!(same.table(), d4.table());
    }

    #[test]
    fn order_guard() {
        let big = FiniteGroup::cyclic(100).unwrap();
        assert!(matches!(
            FiniteGroup::direct_product(&big, &big),
            Err(GroupError::TooLarge { order: 10000, .. })
        ));
    }
}
