//! Meander of two standard two-row tableaux, written as SVG.
//!
//! cargo run --example meander_svg -- meander.svg

use springer::meanders::{cup_diagram, intersection_2row, meander, render_svg};
use springer::StandardTableau;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "meander.svg".to_string());
    let t: StandardTableau = "1,2,4,6,7/3,5,8,9".parse()?;
    let s: StandardTableau = "1,2,5,6,7/3,4,8,9".parse()?;

    println!("{}  {}", t, cup_diagram(&t)?.word());
    println!("{}  {}", s, cup_diagram(&s)?.word());
    let m = meander(&t, &s)?;
    let x = intersection_2row(&t, &s)?;
    println!("{m}; intersection dim {:?}, codim one {}", x.dim, x.codim_one);
    std::fs::write(&path, render_svg(&m))?;
    println!("wrote {path}");
    Ok(())
}
