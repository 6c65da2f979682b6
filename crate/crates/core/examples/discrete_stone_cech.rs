// Spec P(X) as Min of a product of fields and as Max of a product of
// local rings, and the extension of maps out of X.

use stonespec::ring::FiniteRing;
use stonespec::ultra::{phi, psi};

pub fn run_example() -> stonespec::Result<()> {
    let lambda = FiniteRing::product_pk(&[(2, 1), (3, 1), (5, 1)])?;
    let gamma = FiniteRing::product_pk(&[(2, 2), (3, 2), (2, 1)])?;
    let p = phi(&lambda)?;
    let q = psi(&gamma)?;
    println!(
        "φ into Min({}): {:?}, homeomorphism {}",
        lambda.describe(),
        p.map,
        p.is_homeomorphism()
    );
    println!(
        "ψ into Max({}): {:?}, homeomorphism {}",
        gamma.describe(),
        q.map,
        q.is_homeomorphism()
    );
    println!("η into Min: {:?}; η into Max: {:?}", p.eta()?, q.eta()?);

    // a map X → Y with |Y| = 2 and its unique extension through Min(Λ)
    let g = [0, 1, 1];
    let ext = p.extend(&g, 2)?;
    println!(
        "g = {g:?} extends to {ext:?}; factorizations: {}",
        p.factorizations(&g, 2)?.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
