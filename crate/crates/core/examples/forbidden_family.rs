// Derives the nine minimal non-line graphs by exhaustive search over
// small graphs and prints them.

use std::error::Error;

use comgraph::recognition::derive_forbidden_family;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let family = derive_forbidden_family()?;
    for (i, g) in family.members().iter().enumerate() {
        println!(
            "member {}: {} vertices, {} edges, degrees {:?}",
            i + 1,
            g.vertex_count(),
            g.edge_count(),
            g.degree_sequence()
        );
    }
    print!("{}", family.export(false));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
