// Reads a group from a Cayley table and inspects its commuting graph.

use std::error::Error;

use comgraph::recognition;
use comgraph::{commuting, FiniteGroup};

// S3 written by hand: 0 = e, 1..2 rotations, 3..5 reflections.
const TABLE: &str = "\
# S3 as the symmetries of a triangle
6
0 1 2 3 4 5
1 2 0 4 5 3
2 0 1 5 3 4
3 5 4 0 2 1
4 3 5 1 0 2
5 4 3 2 1 0
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = FiniteGroup::from_cayley_table("triangle", TABLE)?;
    println!(
        "{}: order {}, abelian {}",
        g.name(),
        g.order(),
        g.is_abelian()
    );

    let star = commuting::star_graph(&g);
    let verdict = recognition::is_line_graph(star.graph());
    println!("{} is a line graph: {}", star.title(), verdict.verdict);
    assert!(verdict.verdict);

    // Round trip through the text format.
    let again = FiniteGroup::from_cayley_table("again", &g.to_cayley_table())?;
    assert_eq!(again.table(), g.table());

    let bad = "3\n0 1 2\n1 2 0\n2 1 0\n";
    match FiniteGroup::from_cayley_table("bad", bad) {
        Ok(_) => return Err("accepted a non-group".into()),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
