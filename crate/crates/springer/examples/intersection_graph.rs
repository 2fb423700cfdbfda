//! Components of a shape joined when they intersect, as text and Graphviz.

use springer::meanders::intersect;
use springer::oracle::intersection_graph;
use springer::YoungDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape: YoungDiagram = std::env::args().nth(1).unwrap_or_else(|| "3,2".into()).parse()?;
    let g = intersection_graph(&shape)?;
    print!("{g}");
    for e in g.edges.iter().take(5) {
        println!("{} and {}: {}", g.nodes[e.a], g.nodes[e.b], intersect(&g.nodes[e.a], &g.nodes[e.b])?);
    }
    println!();
    print!("{}", g.to_dot());
    Ok(())
}
