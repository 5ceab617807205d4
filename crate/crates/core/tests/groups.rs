mod common;

use comgraph::group::{GroupError, NamedGroup};
use comgraph::selector::parse_group;
use comgraph::FiniteGroup;
use num_rational::Ratio;
use proptest::prelude::*;

use common::*;

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=20).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (3usize..=12).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
        (2usize..=5).prop_map(|m| FiniteGroup::dicyclic(m).unwrap()),
        (1usize..=4).prop_map(|k| FiniteGroup::symmetric(k).unwrap()),
        (1usize..=4).prop_map(|k| FiniteGroup::alternating(k).unwrap()),
    ]
}

proptest! {
    #[test]
    fn constructors_satisfy_the_axioms(g in small_group()) {
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn center_matches_table_scan(g in small_group()) {
        prop_assert_eq!(g.center().members().to_vec(), center_by_table(&g));
    }

    #[test]
    fn commuting_probability_matches_pair_count(g in small_group()) {
        let n = g.order() as u64;
        let expected = Ratio::new(commuting_pairs(&g), n * n);
        prop_assert_eq!(g.commuting_probability(), expected);
        // P2 = k(G)/|G|.
        prop_assert_eq!(expected, Ratio::new(g.conjugacy_classes().len() as u64, n));
    }

    #[test]
    fn centralizers_are_subgroups(g in small_group(), pick in any::<prop::sample::Index>()) {
        let x = pick.index(g.order());
        let c = g.centralizer(x).unwrap();
        prop_assert!(c.is_subgroup());
        prop_assert!(c.contains(x));
        let brute: Vec<usize> = g.elements().filter(|&y| g.op(x, y) == g.op(y, x)).collect();
        prop_assert_eq!(c.members().to_vec(), brute);
    }

    #[test]
    fn conjugacy_classes_partition_the_group(g in small_group()) {
        let classes = g.conjugacy_classes();
        let total: usize = classes.sizes().iter().sum();
        prop_assert_eq!(total, g.order());
        for class in classes.classes() {
            // Orbit-stabilizer: |class| · |C(x)| = |G|.
            let x = class.members()[0];
            prop_assert_eq!(class.len() * g.centralizer(x).unwrap().len(), g.order());
        }
    }

    #[test]
    fn cayley_text_round_trip(g in small_group()) {
        let back = FiniteGroup::from_cayley_table("back", &g.to_cayley_table()).unwrap();
        prop_assert_eq!(back.table(), g.table());
    }

    #[test]
    fn product_order_and_center(a in small_group(), b in small_group()) {
        prop_assume!(a.order() * b.order() <= 200);
        let p = FiniteGroup::direct_product(&a, &b).unwrap();
        prop_assert_eq!(p.order(), a.order() * b.order());
        prop_assert_eq!(p.center().len(), a.center().len() * b.center().len());
        prop_assert_eq!(p.is_abelian(), a.is_abelian() && b.is_abelian());
    }
}

#[test]
fn order_eight_census_agrees_with_brute_force_isomorphism() {
    let square = square_symmetries();
    let quaternions = unit_quaternions();
    assert!(!isomorphic_brute_force(&square, &quaternions));

    let order_eight = ["Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8", "Dic2"];
    for sel in order_eight {
        let g = parse_group(sel).unwrap();
        assert_eq!(
            g.isomorphic_to_named(NamedGroup::D4),
            isomorphic_brute_force(&g, &square),
            "{sel} vs D4"
        );
        assert_eq!(
            g.isomorphic_to_named(NamedGroup::Q8),
            isomorphic_brute_force(&g, &quaternions),
            "{sel} vs Q8"
        );
    }
    assert!(square.isomorphic_to_named(NamedGroup::D4));
    assert!(quaternions.isomorphic_to_named(NamedGroup::Q8));
}

#[test]
fn p2_of_d4_and_q8_is_five_eighths() {
    for g in [square_symmetries(), unit_quaternions()] {
        assert_eq!(Ratio::new(commuting_pairs(&g), 64), Ratio::new(5, 8));
        assert_eq!(g.commuting_probability(), Ratio::new(5, 8));
    }
}

#[test]
fn symmetric_and_alternating_orders() {
    let factorial = |k: usize| (1..=k).product::<usize>();
    for k in 1..=5 {
        assert_eq!(FiniteGroup::symmetric(k).unwrap().order(), factorial(k));
        assert_eq!(
            FiniteGroup::alternating(k).unwrap().order(),
            factorial(k).div_ceil(2).max(1)
        );
    }
    assert!(matches!(
        FiniteGroup::symmetric(8),
        Err(GroupError::DegreeOutOfRange(..))
    ));
}

#[test]
fn s7_is_constructible() {
    let s7 = FiniteGroup::symmetric(7).unwrap();
    assert_eq!(s7.order(), 5040);
    assert_eq!(s7.center().len(), 1);
}
