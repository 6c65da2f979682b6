// The ideals M* and M♭ of a product of local rings at each factor.

use stonespec::ring::FiniteRing;
use stonespec::ultra::{ideal_flat, residue_comparison, ultraproduct, PrincipalMax};

pub fn run_example() -> stonespec::Result<()> {
    let gamma = FiniteRing::product_pk(&[(2, 2), (3, 2), (5, 1)])?;
    let n = 3;
    for x in 0..n {
        let m = PrincipalMax::new(n, x)?;
        let u = ultraproduct(&gamma, m)?;
        let q = &u.quotient.ring;
        println!(
            "factor {x}: R/M* has order {}, field {}, local {}; f + M* ↦ f_x is an isomorphism: {}",
            q.order(),
            q.is_field(),
            q.is_local(),
            u.comparison_is_isomorphism(&gamma, x)
        );
        let flat = ideal_flat(&gamma, m)?;
        let rc = residue_comparison(&gamma, m)?;
        println!(
            "          M♭ has {} elements; Γ/M♭ is the residue field: {}",
            flat.ideal.len(),
            rc.is_isomorphism()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
