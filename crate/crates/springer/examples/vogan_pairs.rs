//! Codimension-one pairs from the Vogan transformations, with how each was reached.

use springer::meanders::intersection_2row;
use springer::vogan::vogan_set;
use springer::YoungDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape: YoungDiagram = std::env::args().nth(1).unwrap_or_else(|| "3,3".into()).parse()?;
    let pairs = vogan_set(&shape);
    println!("{} pairs on shape {shape}", pairs.len());
    for p in &pairs {
        let path: Vec<String> = p.provenance.iter().map(ToString::to_string).collect();
        let codim = if shape.num_rows() <= 2 {
            format!(" codim1={}", intersection_2row(&p.first, &p.second)?.codim_one)
        } else {
            String::new()
        };
        println!("{} | {}  from T_{} on {} then [{}]{codim}", p.first, p.second, p.seed_swap, p.seed, path.join(" "));
    }
    Ok(())
}
