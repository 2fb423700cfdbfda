//! Exhaustive cross-validation on every family shape up to a size.
//!
//! cargo run --release --example cross_validate -- 7

use springer::oracle::{cross_validate, family_shapes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(6), |s| s.parse())?;
    let mut failures = 0;
    for shape in family_shapes(max) {
        let report = cross_validate(&shape)?;
        failures += report.failure_count();
        let population: usize = report.checks.iter().map(|c| c.population).sum();
        println!(
            "{:<16} {:>3} checks {:>9} cases {:>3} failures  {:.2?}",
            shape.to_string(),
            report.checks.len(),
            population,
            report.failure_count(),
            report.elapsed
        );
    }
    println!("total failures: {failures}");
    Ok(())
}
