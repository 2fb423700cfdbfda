//! Outside the three families dominance no longer characterizes membership.

use springer::jdt::QuotientTable;
use springer::oracle::{enumerate_rho, r_minus_k_pair, rho_sweep_check, rho_sweep_pair};
use springer::YoungDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for s in ["3,2,1", "4,2,1", "5,3,2,1"] {
        let shape: YoungDiagram = s.parse()?;
        let (tau, t) = r_minus_k_pair(&shape)?;
        println!("{shape} ({}): τ = {tau} dominated by T = {t}", shape.classify());
    }

    let (t, s) = rho_sweep_pair();
    let (qt, qs) = (QuotientTable::new(&t), QuotientTable::new(&s));
    println!("T = {t}, S = {s}");
    for rho in enumerate_rho(6).iter().take(4) {
        let (i, j) = rho.pairs[5];
        println!("  {rho}: Y^S_{j}/{i} = {} below Y^T_{j}/{i} = {}", qs.get(i, j), qt.get(i, j));
    }
    println!("all claims hold: {}", rho_sweep_check());
    Ok(())
}
