//! The Schützenberger involution and the matching action on row-standard tableaux.

use springer::jdt::{quotient_shape_t, schuetzenberger};
use springer::membership::member;
use springer::{RowStandardTableau, StandardTableau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: StandardTableau = "1,3,4/2,5,7/6".parse()?;
    let n = t.n();
    for i in (0..n).rev() {
        println!("Y^T_{n}/{i} = {}", quotient_shape_t(&t, i, n)?);
    }
    let ts = schuetzenberger(&t);
    println!("T = {t}, T^S = {ts}, (T^S)^S = {}", schuetzenberger(&ts));

    let tau: RowStandardTableau = "2,3/1,4".parse()?;
    let t: StandardTableau = "1,2/3,4".parse()?;
    println!(
        "{tau} in {t}: {}; {} in {}: {}",
        member(&tau, &t)?.member,
        tau.s_dual(),
        schuetzenberger(&t),
        member(&tau.s_dual(), &schuetzenberger(&t))?.member
    );
    Ok(())
}
