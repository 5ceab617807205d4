// Enumerates small graphs up to isomorphism and checks Mantel's bound on
// the triangle-free ones.

use std::error::Error;

use comgraph::graph::{canonical_code, enumerate_graphs_up_to_iso};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 0..=6 {
        let graphs = enumerate_graphs_up_to_iso(n)?;
        let triangle_free: Vec<_> = graphs.iter().filter(|g| g.is_triangle_free()).collect();
        let densest = triangle_free
            .iter()
            .map(|g| g.edge_count())
            .max()
            .unwrap_or(0);
        assert!(densest <= n * n / 4);
        println!(
            "n={n}: {} classes, {} triangle-free, max edges {densest} (bound {})",
            graphs.len(),
            triangle_free.len(),
            n * n / 4
        );
    }
    let claw = comgraph::SimpleGraph::complete_bipartite(1, 3);
    println!("claw code: {:?}", canonical_code(&claw)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
