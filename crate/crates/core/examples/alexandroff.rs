// The one-point compactification of the naturals as the spectrum of the
// finite/cofinite ring.

use stonespec::boolring::{BoolRing, UpSet};
use stonespec::stone::{alexandroff, check_cover, maximality_witness, CoverCheck, StonePoint};

pub fn run_example() -> stonespec::Result<()> {
    let a = alexandroff();
    let inf = StonePoint::Infinity(UpSet::naturals());
    for probe in ["{n>=3}", "{0,5}", "!{2}"] {
        let s = UpSet::parse(probe)?;
        println!("D({s}) contains ∞: {}", a.in_basic_open(&inf, &s)?);
    }

    // Fin(N) is maximal: a cofinite A has A + m = 1 for the finite m = Aᶜ
    let s = UpSet::cofinite(&[1, 4]);
    let w = maximality_witness(&BoolRing::FinCofin, &inf, &s)?;
    println!("witness for {s}: m = {}, r = {}", w.m, w.r);

    let cover = vec![
        UpSet::finite(&[0, 1, 2]),
        UpSet::at_least(2),
        UpSet::finite(&[7]),
    ];
    match check_cover(&a, &cover)? {
        CoverCheck::Subcover(idx) => println!("finite subcover: {idx:?}"),
        CoverCheck::Uncovered(p) => println!("uncovered: {p:?}"),
    }
    match check_cover(&a, &[UpSet::finite(&[0, 1, 2])])? {
        CoverCheck::Subcover(idx) => println!("finite subcover: {idx:?}"),
        CoverCheck::Uncovered(p) => println!("not a cover, misses {p:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
