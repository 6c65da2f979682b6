// Spec of the power set ring of a finite set: its points are the
// principal maximal ideals, dual to the principal ultrafilters.

use stonespec::stone::{count_ring_maps, spec_finite_boolean, Ultrafilter};

pub fn run_example() -> stonespec::Result<()> {
    let s = spec_finite_boolean(3)?;
    for (x, m) in s.points.iter().enumerate() {
        let u = Ultrafilter::from_maximal(m)?;
        println!("m_{x} = {m}");
        println!(
            "  ultrafilter {} (principal at {:?})",
            u.family(),
            u.principal_point()
        );
    }
    println!("topology: {:?}", s.topology.to_lists());
    for (n, m) in [(2, 3), (3, 2), (3, 3)] {
        println!(
            "ring maps P({n} points) → P({m} points): {}",
            count_ring_maps(n, m)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
