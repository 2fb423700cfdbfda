//! Decide whether a torus-fixed flag lies in a component, with every applicable criterion.
//!
//! cargo run --example membership -- "2,3,5/4/1" "1,3,4/2/5"

use springer::membership::{all_criteria, dominance_member, tau_quotients};
use springer::{RowStandardTableau, StandardTableau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let tau: RowStandardTableau = args.first().map_or("2,3,5/4/1", String::as_str).parse()?;
    let t: StandardTableau = args.get(1).map_or("1,3,4/2/5", String::as_str).parse()?;

    println!("τ = {tau}, T = {t}, st(τ) = {}", tau.standardize());
    for (label, verdict) in all_criteria(&tau, &t)? {
        println!("  {label:<24} {verdict}");
    }
    if let Some(w) = dominance_member(&tau, &t)?.witness {
        println!("dominance fails at {w}");
    }
    println!("subquotient shapes of τ:");
    for ((i, j), y) in tau_quotients(&tau).into_iter().filter(|((i, j), _)| j - i >= 2) {
        println!("  Y_{j}/{i} = {y}");
    }
    Ok(())
}
