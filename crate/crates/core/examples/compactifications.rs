// Compactifications of the naturals from ultimately periodic generators,
// and the round trip through their clopen sets.

use stonespec::boolring::UpSet;
use stonespec::stone::{compactify, StonePoint};

pub fn run_example() -> stonespec::Result<()> {
    let gens = vec![UpSet::evens(), UpSet::multiples_of(3)?];
    let c = compactify(gens)?;
    println!("atoms of the generated algebra:");
    for (a, inf) in c
        .decomposition()
        .atoms
        .iter()
        .zip(&c.decomposition().infinite_flags)
    {
        println!("  {a}{}", if *inf { "  (point at infinity)" } else { "" });
    }
    let back = c.clopen_trace_ring()?;
    println!(
        "clopen traces give back the ring: {}",
        back.same_ring(c.ring())?
    );

    let pts = c.points_at_infinity();
    let sep = c.separate(&pts[0], &StonePoint::Principal(6))?;
    println!("{:?} and 6 are separated by D({sep})", pts[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
