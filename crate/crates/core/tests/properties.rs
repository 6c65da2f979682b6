use proptest::prelude::*;

use stonespec::boolring::UpSet;
use stonespec::ring::{localize, Elem, FiniteRing, LocalAtom, MultSet};
use stonespec::stone::{compactify, StonePoint};
use stonespec::topspace::FiniteSpace;
use stonespec::ultra::support;

const HORIZON: usize = 300;

fn upset() -> impl Strategy<Value = UpSet> {
    (0usize..12, 1usize..9)
        .prop_flat_map(|(t, p)| {
            (
                Just(t),
                proptest::collection::vec(any::<bool>(), t),
                Just(p),
                proptest::collection::vec(any::<bool>(), p),
            )
        })
        .prop_map(|(t, head, p, res)| {
            let head: Vec<usize> = (0..t).filter(|&i| head[i]).collect();
            let res: Vec<usize> = (0..p).filter(|&i| res[i]).collect();
            UpSet::new(t, &head, p, &res).unwrap()
        })
}

fn members(a: &UpSet) -> Vec<bool> {
    (0..HORIZON).map(|n| a.contains(n)).collect()
}

fn atom() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![
        Just((2, 1)),
        Just((2, 2)),
        Just((2, 3)),
        Just((3, 1)),
        Just((3, 2)),
        Just((5, 1)),
        Just((7, 1))
    ]
}

fn product_ring_up_to(max: usize) -> impl Strategy<Value = FiniteRing> {
    proptest::collection::vec(atom(), 1..4)
        .prop_filter("order", move |f| {
            f.iter().map(|&(p, k)| p.pow(k) as usize).product::<usize>() <= max
        })
        .prop_map(|f| FiniteRing::product_pk(&f).unwrap())
}

fn product_ring() -> impl Strategy<Value = FiniteRing> {
    product_ring_up_to(200)
}

fn ring_and_elems(k: usize) -> impl Strategy<Value = (FiniteRing, Vec<Elem>)> {
    product_ring().prop_flat_map(move |r| {
        let n = r.order();
        (Just(r), proptest::collection::vec((0..n).prop_map(Elem), k))
    })
}

proptest! {
    #[test]
    fn upset_operations_match_membership(a in upset(), b in upset()) {
        let (ma, mb) = (members(&a), members(&b));
        let check = |s: &UpSet, f: &dyn Fn(bool, bool) -> bool| {
            (0..HORIZON).all(|n| s.contains(n) == f(ma[n], mb[n]))
        };
        prop_assert!(check(&a.union(&b), &|x, y| x || y));
        prop_assert!(check(&a.intersect(&b), &|x, y| x && y));
        prop_assert!(check(&a.sym_diff(&b), &|x, y| x != y));
        prop_assert!(check(&a.difference(&b), &|x, y| x && !y));
        prop_assert!((0..HORIZON).all(|n| a.complement().contains(n) != ma[n]));
        prop_assert_eq!(a.is_subset(&b), (0..HORIZON).all(|n| !ma[n] || mb[n]));
        prop_assert_eq!(a.is_disjoint(&b), (0..HORIZON).all(|n| !(ma[n] && mb[n])));
    }

    #[test]
    fn upset_equality_is_set_equality(a in upset(), b in upset()) {
        // thresholds < 12 and periods < 9 make 12 + lcm(1..8) a sufficient horizon
        prop_assert_eq!(a == b, members(&a) == members(&b));
    }

    #[test]
    fn upset_finiteness(a in upset()) {
        let tail: Vec<bool> = (12 + 840..12 + 2 * 840).map(|n| a.contains(n)).collect();
        prop_assert_eq!(a.is_finite(), tail.iter().all(|&x| !x));
        prop_assert_eq!(a.is_cofinite(), tail.iter().all(|&x| x));
        prop_assert_eq!(a.least(), (0..HORIZON).find(|&n| a.contains(n)));
    }

    #[test]
    fn upset_text_and_json_round_trip(a in upset()) {
        prop_assert_eq!(UpSet::parse(&a.to_string()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<UpSet>(&json).unwrap(), a);
    }

    #[test]
    fn product_rings_satisfy_axioms(r in product_ring_up_to(64)) {
        prop_assert!(r.check_axioms().is_ok());
        for e in r.elements() {
            prop_assert_eq!(r.from_components(&r.components(e)).unwrap(), e);
        }
    }

    #[test]
    fn scrambled_rings_satisfy_axioms(seed in any::<u64>()) {
        for c in stonespec::corpus::scrambled_rings(seed, 3, 32).unwrap() {
            prop_assert!(c.ring.check_axioms().is_ok(), "{}", c.name);
        }
    }

    #[test]
    fn supports_are_multiplicative((r, fs) in ring_and_elems(2)) {
        let (f, g) = (fs[0], fs[1]);
        let (sf, sg, sfg) = (support(&r, f).unwrap(), support(&r, g).unwrap(), support(&r, r.mul(f, g)).unwrap());
        prop_assert!(sfg.su.is_subset(&sf.su.mul(sg.su)));
        prop_assert_eq!(sfg.omega, sf.omega.mul(sg.omega));
        prop_assert!(sf.omega.is_subset(&sf.su));
        prop_assert_eq!(sf.omega.len() == sf.omega.universe(), r.is_unit(f));
        prop_assert_eq!(sf.su.is_empty(), f == r.zero());
        let fields = r.atoms().unwrap().0.iter().all(LocalAtom::is_field);
        if fields {
            prop_assert_eq!(sfg.su, sf.su.mul(sg.su));
            prop_assert_eq!(sf.su, sf.omega);
        }
    }

    #[test]
    fn localization_kernel_oracle((r, gens) in ring_and_elems(2)) {
        let s = MultSet::generated(&r, &gens);
        let loc = localize(&r, &s).unwrap();
        let contraction = loc.nil_contraction(&r);
        for f in r.elements() {
            let brute = s.elements().any(|g| r.is_nilpotent(r.mul(f, g)));
            prop_assert_eq!(contraction.contains(f), brute);
            // the literal kernel: u f = 0 for some u in S
            let killed = s.elements().any(|u| r.mul(u, f) == r.zero());
            prop_assert_eq!(loc.kernel(&r).contains(f), killed);
        }
    }

    #[test]
    fn preorders_round_trip(n in 1usize..6, pairs in proptest::collection::vec((0usize..6, 0usize..6), 0..8)) {
        let pairs: Vec<(usize, usize)> = pairs.into_iter().filter(|&(a, b)| a < n && b < n).collect();
        let s = FiniteSpace::from_preorder(n, &pairs).unwrap();
        let order = s.preorder();
        // reflexive, transitive, and containing the given pairs
        for &(a, b) in &pairs {
            prop_assert!(order[a][b]);
        }
        for a in 0..n {
            prop_assert!(order[a][a]);
            for b in 0..n {
                for c in 0..n {
                    prop_assert!(!(order[a][b] && order[b][c]) || order[a][c]);
                }
            }
        }
        prop_assert_eq!(FiniteSpace::from_preorder(n, &s.preorder_pairs()).unwrap(), s);
    }

    #[test]
    fn compactifications_are_hausdorff_and_round_trip(gens in proptest::collection::vec(upset(), 0..4)) {
        let c = compactify(gens.clone()).unwrap();
        prop_assert!(c.decomposition().is_partition());
        prop_assert!(c.clopen_trace_ring().unwrap().same_ring(c.ring()).unwrap());
        let mut pts = c.points_at_infinity();
        pts.extend((0..4).map(StonePoint::Principal));
        for p in &pts {
            for q in &pts {
                if p != q {
                    let a = c.separate(p, q).unwrap();
                    prop_assert!(c.separates(p, q, &a).unwrap());
                }
            }
        }
        for g in &gens {
            prop_assert!(c.is_clopen_trace(g));
        }
    }
}
