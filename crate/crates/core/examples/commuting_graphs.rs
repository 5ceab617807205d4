// Γ, Γ* and Γ** of S3 and D4, exported as edge lists and DOT.

use std::error::Error;

use comgraph::{commuting, FiniteGroup, Variant};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for g in [FiniteGroup::symmetric(3)?, FiniteGroup::dihedral(4)?] {
        for variant in Variant::ALL {
            let cg = commuting::build(&g, variant)?;
            let graph = cg.graph();
            println!(
                "{}: {} vertices, {} edges, components {:?}",
                cg.title(),
                graph.vertex_count(),
                graph.edge_count(),
                graph
                    .connected_components()
                    .iter()
                    .map(Vec::len)
                    .collect::<Vec<_>>()
            );
        }
    }

    // Γ**(D4) is three disjoint edges: {r, r^3}, {s, sr^2}, {sr, sr^3}.
    let d4 = FiniteGroup::dihedral(4)?;
    let dstar = commuting::double_star_graph(&d4)?;
    print!("{}", dstar.graph().to_edge_list());
    print!(
        "{}",
        commuting::star_graph(&FiniteGroup::symmetric(3)?)
            .graph()
            .to_dot("Γ*(S3)")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
