use std::collections::BTreeSet;

use stonespec::spectrum::FiniteTopology;
use stonespec::topspace::{beta, enumerate_spaces, FiniteSpace};

/// Every family of subsets of `{0..n}` that is a topology.
fn brute_force_topologies(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let subsets = 1u64 << n;
    let full = subsets - 1;
    let mut out = BTreeSet::new();
    for fam in 0u64..1 << subsets {
        if fam & 1 == 0 || fam >> full & 1 == 0 {
            continue;
        }
        let opens: Vec<u64> = (0..subsets).filter(|&u| fam >> u & 1 == 1).collect();
        let closed = opens.iter().all(|&a| {
            opens
                .iter()
                .all(|&b| fam >> (a | b) & 1 == 1 && fam >> (a & b) & 1 == 1)
        });
        if closed {
            out.insert(FiniteTopology::from_opens(n, opens).unwrap().to_lists());
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=4 {
        let enumerated: BTreeSet<Vec<Vec<usize>>> = enumerate_spaces(n)
            .unwrap()
            .iter()
            .map(|s| s.topology().to_lists())
            .collect();
        let brute = brute_force_topologies(n);
        assert_eq!(
            enumerated.len(),
            enumerate_spaces(n).unwrap().len(),
            "duplicates at {n}"
        );
        assert_eq!(enumerated, brute, "n = {n}");
    }
}

#[test]
fn beta_of_disjoint_sierpinski_spaces() {
    let s = FiniteSpace::sierpinski();
    let two = s.disjoint_union(&s).unwrap();
    let b = beta(&two).unwrap();
    assert_eq!(b.partition, vec![vec![0, 1], vec![2, 3]]);
    assert_eq!(
        b.quotient_topology(&two).unwrap(),
        FiniteTopology::discrete(2).unwrap()
    );
}

#[test]
fn indiscrete_space_collapses() {
    let s = FiniteSpace::indiscrete(4).unwrap();
    assert_eq!(beta(&s).unwrap().classes(), 1);
    // every point converges to every point
    assert_eq!(s.convergence().len(), 16);
}
