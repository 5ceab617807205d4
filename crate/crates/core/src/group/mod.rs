//! Finite groups given by an explicit Cayley table.
//!
//! Every group stores its identity at element index 0. Elements are plain
//! `usize` indices into the table; display names are carried alongside so
//! certificates can be reported in terms of the group's own notation.

mod cayley;
mod constructors;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

pub use cayley::parse_cayley_table;

/// Largest group order any constructor will build. The table is quadratic
/// in the order, so this caps memory at roughly 100 MB.
pub const MAX_ORDER: usize = 5040;

/// Largest degree accepted by [`FiniteGroup::symmetric`] and
/// [`FiniteGroup::alternating`].
pub const MAX_PERMUTATION_DEGREE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group order {0}: must be at least 1")]
    InvalidOrder(usize),
    #[error("group order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("permutation degree {0} outside the supported range 1..={MAX_PERMUTATION_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("malformed Cayley table at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity law fails: no element acts as a two-sided identity")]
    NoIdentity,
    #[error("identity is not element 0: table[0][{0}] or table[{0}][0] differs from {0}")]
    IdentityNotFirst(usize),
    #[error("associativity fails for ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("element index {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
}

/// The two non-abelian groups of order 8, as recognition targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    D4,
    Q8,
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::D4 => f.write_str("D4"),
            NamedGroup::Q8 => f.write_str("Q8"),
        }
    }
}

/// A finite group as an order-n Cayley table with the identity at index 0.
///
/// Values are immutable once built; every constructor validates closure,
/// identity, associativity and inverses before handing one out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table whose identity is element 0.
    ///
    /// All four group axioms are checked; the first violation is returned.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::InvalidOrder(0));
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(GroupError::Malformed {
                line: 0,
                message: format!("expected {} entries, got {}", order * order, table.len()),
            });
        }
        if names.len() != order {
            return Err(GroupError::NameCount {
                expected: order,
                got: names.len(),
            });
        }
        check_associativity_after_closure(order, &table)?;
        Self::assemble(name.into(), order, table, names)
    }

    /// Constructor path for tables that are associative by construction.
    /// Closure, identity and inverses are still checked.
    pub(crate) fn from_table_unchecked_assoc(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), order * order);
        debug_assert_eq!(names.len(), order);
        check_closure(order, &table)?;
        Self::assemble(name.into(), order, table, names)
    }

    fn assemble(
        name: String,
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        for j in 0..order {
            if table[j] != j || table[j * order] != j {
                return Err(GroupError::IdentityNotFirst(j));
            }
        }
        let inverses = find_inverses(order, &table)?;
        Ok(Self {
            name,
            order,
            table: table.into_iter().map(|v| v as u32).collect(),
            inverses,
            names,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Returns the same group under a different display name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Product `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.op(a, b) == self.op(b, a)
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by its display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row-major copy of the Cayley table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    /// Re-checks all four group axioms against the stored table.
    pub fn validate(&self) -> Result<(), GroupError> {
        let table = self.table();
        check_closure(self.order, &table)?;
        for j in 0..self.order {
            if table[j] != j || table[j * self.order] != j {
                return Err(GroupError::IdentityNotFirst(j));
            }
        }
        check_associativity(self.order, &table)?;
        find_inverses(self.order, &table).map(|_| ())
    }

    fn check_element(&self, x: usize) -> Result<(), GroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Z(G): the elements commuting with everything.
    pub fn center(&self) -> ElementSubset<'_> {
        let members = self
            .elements()
            .filter(|&z| self.elements().all(|g| self.commute(z, g)))
            .collect();
        ElementSubset::new(self, members)
    }

    /// C_G(x): the elements commuting with `x`.
    pub fn centralizer(&self, x: usize) -> Result<ElementSubset<'_>, GroupError> {
        self.check_element(x)?;
        let members = self.elements().filter(|&g| self.commute(g, x)).collect();
        Ok(ElementSubset::new(self, members))
    }

    /// The cyclic subgroup generated by `x`.
    pub fn cyclic_subgroup(&self, x: usize) -> Result<ElementSubset<'_>, GroupError> {
        self.check_element(x)?;
        let mut members = vec![0];
        let mut power = x;
        while power != 0 {
            members.push(power);
            power = self.op(power, x);
        }
        Ok(ElementSubset::new(self, members))
    }

    /// Least `t > 0` with `x^t = e`.
    pub fn element_order(&self, x: usize) -> Result<usize, GroupError> {
        self.check_element(x)?;
        let mut power = x;
        let mut t = 1;
        while power != 0 {
            power = self.op(power, x);
            t += 1;
        }
        Ok(t)
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.elements()
            .filter(|&x| x != 0 && self.op(x, x) == 0)
            .count()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyPartition<'_> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = BTreeSet::new();
            for g in self.elements() {
                let y = self.op(self.op(self.inverse(g), x), g);
                members.insert(y);
            }
            for &y in &members {
                class_of[y] = id;
            }
            classes.push(ElementSubset::new(self, members.into_iter().collect()));
        }
        ConjugacyPartition { classes }
    }

    /// Number of ordered pairs `(x, y)` with `xy = yx`.
    pub fn commuting_pair_count(&self) -> u64 {
        let mut count = 0u64;
        for a in self.elements() {
            for b in self.elements() {
                if self.commute(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// P₂(G) = k(G) / |G|, the probability that two random elements commute.
    pub fn commuting_probability(&self) -> Ratio<u64> {
        Ratio::new(self.conjugacy_classes().len() as u64, self.order as u64)
    }

    /// Decides `G ≅ D4` or `G ≅ Q8` by the involution census, which
    /// separates the two non-abelian groups of order 8.
    pub fn isomorphic_to_named(&self, target: NamedGroup) -> bool {
        if self.order != 8 || self.is_abelian() {
            return false;
        }
        let involutions = self.involution_count();
        match target {
            NamedGroup::D4 => involutions == 5,
            NamedGroup::Q8 => involutions == 1,
        }
    }

    /// True when every non-central element has an abelian centralizer.
    pub fn noncentral_centralizers_abelian(&self) -> bool {
        let center = self.center();
        self.elements().filter(|&x| !center.contains(x)).all(|x| {
            self.centralizer(x)
                .expect("element in range")
                .is_commutative()
        })
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

fn check_closure(order: usize, table: &[usize]) -> Result<(), GroupError> {
    for (idx, &value) in table.iter().enumerate() {
        if value >= order {
            return Err(GroupError::EntryOutOfRange {
                row: idx / order,
                col: idx % order,
                value,
                order,
            });
        }
    }
    Ok(())
}

fn check_associativity_after_closure(order: usize, table: &[usize]) -> Result<(), GroupError> {
    check_closure(order, table)?;
    check_associativity(order, table)
}

fn check_associativity(order: usize, table: &[usize]) -> Result<(), GroupError> {
    let op = |a: usize, b: usize| table[a * order + b];
    for i in 0..order {
        for j in 0..order {
            let ij = op(i, j);
            for k in 0..order {
                if op(ij, k) != op(i, op(j, k)) {
                    return Err(GroupError::NotAssociative { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// Assumes the identity sits at index 0.
fn find_inverses(order: usize, table: &[usize]) -> Result<Vec<u32>, GroupError> {
    (0..order)
        .map(|i| {
            (0..order)
                .find(|&j| table[i * order + j] == 0 && table[j * order + i] == 0)
                .map(|j| j as u32)
                .ok_or(GroupError::MissingInverse(i))
        })
        .collect()
}

/// A subset of a group's elements, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSubset<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
}

impl<'g> ElementSubset<'g> {
    pub fn new(group: &'g FiniteGroup, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { group, members }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// True when the members pairwise commute.
    pub fn is_commutative(&self) -> bool {
        self.members.iter().enumerate().all(|(i, &a)| {
            self.members[i + 1..]
                .iter()
                .all(|&b| self.group.commute(a, b))
        })
    }

    /// Closed under the product and contains the identity.
    pub fn is_subgroup(&self) -> bool {
        self.contains(0)
            && self.members.iter().all(|&a| {
                self.members
                    .iter()
                    .all(|&b| self.contains(self.group.op(a, b)))
            })
    }

    pub fn names(&self) -> Vec<&'g str> {
        self.members
            .iter()
            .map(|&x| self.group.element_name(x))
            .collect()
    }
}

/// The conjugacy classes of a group, ordered by least member.
#[derive(Debug, Clone)]
pub struct ConjugacyPartition<'g> {
    classes: Vec<ElementSubset<'g>>,
}

impl<'g> ConjugacyPartition<'g> {
    pub fn classes(&self) -> &[ElementSubset<'g>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<_> = self.classes.iter().map(ElementSubset::len).collect();
        sizes.sort_unstable();
        sizes
    }
}
