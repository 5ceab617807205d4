// Line-graph recognition with certificates: a forbidden induced subgraph
// for NO, a Krausz partition and root graph for YES.

use std::error::Error;

use comgraph::recognition::{self, krausz_oracle, line_graph, root_graph};
use comgraph::{commuting, FiniteGroup, SimpleGraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let gamma = commuting::commuting_graph(&s3);
    let verdict = recognition::is_line_graph(gamma.graph());
    println!("Γ(S3) line graph: {}", verdict.verdict);
    if let Some(e) = &verdict.embedding {
        e.validate(gamma.graph())?;
        println!(
            "  forbidden member {:?} on {:?}",
            verdict.family_index,
            e.host_labels(gamma.graph())
        );
    }

    // L(K4) is the octahedron; the oracle recovers K4 as its root.
    let octahedron = line_graph(&SimpleGraph::complete(4));
    let result = krausz_oracle(&octahedron)?;
    result.validate(&octahedron)?;
    let partition = result
        .partition
        .as_ref()
        .ok_or("octahedron is a line graph")?;
    println!(
        "L(K4): {} cliques {:?}",
        partition.cliques.len(),
        partition.cliques
    );
    let root = root_graph(&octahedron)?.ok_or("root exists")?;
    println!(
        "root: {} vertices, {} edges",
        root.vertex_count(),
        root.edge_count()
    );

    let coline = recognition::is_complement_of_line_graph(&octahedron.complement());
    println!(
        "complement of octahedron is a co-line graph: {}",
        coline.verdict
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
