// Primes of a few small rings, with their Zariski and flat topologies.

use stonespec::ring::FiniteRing;
use stonespec::spectrum::{enumerate_primes, max_ideals, min_primes};

pub fn run_example() -> stonespec::Result<()> {
    let rings = [
        FiniteRing::cyclic(12)?,
        FiniteRing::product_pk(&[(2, 2), (3, 1)])?,
        FiniteRing::product_pk(&[(2, 1), (2, 1), (5, 1)])?,
    ];
    for r in &rings {
        let spec = enumerate_primes(r)?;
        println!("{} has {} primes", r.describe(), spec.len());
        for p in spec.describe_points() {
            println!("  P{} = ({})", p.index, p.generators.join(", "));
        }
        let min = min_primes(r)?;
        let max = max_ideals(r)?;
        let z = max.zariski_topology()?;
        println!(
            "  |Min| = {}, |Max| = {}, Zariski on Max {:?} flat, R/J absolutely flat: {}",
            min.len(),
            max.len(),
            z.compare(&max.flat_topology()?)?,
            r.is_absolutely_flat_mod_jacobson()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
