// Builds a few small groups and prints their centers, class sizes and
// commuting probabilities.

use std::error::Error;

use comgraph::group::NamedGroup;
use comgraph::FiniteGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let groups = [
        FiniteGroup::dihedral(4)?,
        FiniteGroup::dicyclic(2)?,
        FiniteGroup::symmetric(3)?,
        FiniteGroup::alternating(4)?,
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(4)?)?,
    ];
    for g in &groups {
        let p2 = g.commuting_probability();
        println!(
            "{:<8} |G|={:<3} Z={{{}}} classes={:?} P2={}/{}",
            g.name(),
            g.order(),
            g.center().names().join(", "),
            g.conjugacy_classes().sizes(),
            p2.numer(),
            p2.denom(),
        );
    }

    let d4 = &groups[0];
    let q8 = &groups[1];
    assert!(d4.isomorphic_to_named(NamedGroup::D4));
    assert!(q8.isomorphic_to_named(NamedGroup::Q8));
    assert_eq!(d4.commuting_probability(), q8.commuting_probability());
    println!(
        "D4 has {} involutions, Q8 has {}",
        d4.involution_count(),
        q8.involution_count()
    );

    let s = d4.element_by_name("s").ok_or("no element s")?;
    println!("C(s) in D4 = {{{}}}", d4.centralizer(s)?.names().join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
