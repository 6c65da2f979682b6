// Localizing at a multiplicative set, and which elements become
// nilpotent there.

use stonespec::ring::{localize, FiniteRing, MultSet};

pub fn run_example() -> stonespec::Result<()> {
    let r = FiniteRing::product_pk(&[(2, 2), (3, 1)])?;
    // S generated by (1,0): inverting it kills the second factor
    let s = MultSet::generated(&r, &[r.from_components(&[1, 0])?]);
    let loc = localize(&r, &s)?;
    let show = |i: &stonespec::ring::Ideal| {
        i.elements()
            .map(|e| r.fmt_elem(e))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!(
        "{} at S = {{{}}}",
        r.describe(),
        s.elements()
            .map(|e| r.fmt_elem(e))
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("  |S⁻¹R| = {}", loc.ring.order());
    println!("  kernel: {}", show(&loc.kernel(&r)));
    println!(
        "  preimage of the nilradical: {}",
        show(&loc.nil_contraction(&r))
    );

    // with S = {1} the kernel is zero but 2 is still nilpotent
    let z4 = FiniteRing::cyclic(4)?;
    let one = MultSet::new(&z4, &[z4.one()])?;
    let loc = localize(&z4, &one)?;
    println!(
        "Z/4 at {{1}}: kernel has {} element, nilradical preimage has {}",
        loc.kernel(&z4).len(),
        loc.nil_contraction(&z4).len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
