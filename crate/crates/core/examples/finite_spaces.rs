// The Stone-Čech compactification of a finite space: its connected
// components, found through Zariski convergence of principal ideals.

use stonespec::topspace::{beta, enumerate_spaces, pi0_spec_check, FiniteSpace};

pub fn run_example() -> stonespec::Result<()> {
    // 0 ≤ 1 and 2 ≤ 3 in the specialization order, two components
    let s = FiniteSpace::from_preorder(4, &[(0, 1), (2, 3)])?;
    let b = beta(&s)?;
    println!(
        "βX classes: {:?}, projection {:?}",
        b.partition, b.projection
    );
    println!("convergence m_y → x: {:?}", s.convergence());
    let pi0 = pi0_spec_check(&s)?;
    println!(
        "{} clopens, Spec Clop has {} points, matches components: {}",
        pi0.clopen_count, pi0.spec_points, pi0.holds
    );

    for n in 1..=4 {
        let spaces = enumerate_spaces(n)?;
        let connected = spaces
            .iter()
            .filter(|s| s.topology().is_connected())
            .count();
        println!(
            "{n} points: {} topologies, {connected} connected",
            spaces.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
