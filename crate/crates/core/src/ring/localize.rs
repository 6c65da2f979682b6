use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteRing, Ideal, TABLE_CAP};
use crate::{Error, Result};

/// A multiplicative subset: contains one, closed under multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultSet {
    members: FixedBitSet,
}

impl MultSet {
    pub fn new(ring: &FiniteRing, members: &[Elem]) -> Result<MultSet> {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for m in members {
            if m.0 >= ring.order() {
                return Err(Error::invalid(format!("element {} out of range", m.0)));
            }
            bits.insert(m.0);
        }
        if !bits.contains(ring.one().0) {
            return Err(Error::invalid("a multiplicative set must contain one"));
        }
        for a in bits.ones() {
            for b in bits.ones() {
                if !bits.contains(ring.mul(Elem(a), Elem(b)).0) {
                    return Err(Error::invalid("not closed under multiplication"));
                }
            }
        }
        Ok(MultSet { members: bits })
    }

    /// The submonoid generated by `gens`.
    pub fn generated(ring: &FiniteRing, gens: &[Elem]) -> MultSet {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        bits.insert(ring.one().0);
        for &g in gens {
            bits = extend_monoid(ring, &bits, g);
        }
        MultSet { members: bits }
    }

    /// `R ∖ P` for a prime `P`.
    pub fn complement_of_prime(ring: &FiniteRing, prime: &Ideal) -> Result<MultSet> {
        let outside: Vec<Elem> = ring.elements().filter(|&e| !prime.contains(e)).collect();
        MultSet::new(ring, &outside)
    }

    pub fn units(ring: &FiniteRing) -> MultSet {
        MultSet {
            members: ring
                .unit_table()
                .iter()
                .enumerate()
                .filter(|(_, &u)| u)
                .map(|(i, _)| i)
                .collect(),
        }
        .resized(ring.order())
    }

    fn resized(mut self, n: usize) -> Self {
        self.members.grow(n);
        self
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(Elem)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every multiplicative subset of `ring`, by breadth-first extension of
    /// `{1}` with one element at a time.
    pub fn enumerate_all(ring: &FiniteRing) -> Vec<MultSet> {
        let start = MultSet::generated(ring, &[]).members;
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        while let Some(m) = frontier.pop() {
            for x in ring.elements() {
                if m.contains(x.0) {
                    continue;
                }
                let ext = extend_monoid(ring, &m, x);
                if !seen.contains(&ext) {
                    seen.insert(ext.clone());
                    frontier.push(ext);
                }
            }
        }
        let mut all: Vec<MultSet> = seen
            .into_iter()
            .map(|members| MultSet { members })
            .collect();
        all.sort_by(|a, b| a.members.ones().cmp(b.members.ones()));
        all
    }
}

// submonoid generated by m ∪ {x} = { a·x^k }
fn extend_monoid(ring: &FiniteRing, m: &FixedBitSet, x: Elem) -> FixedBitSet {
    let mut powers = vec![ring.one()];
    let mut p = x;
    while !powers.contains(&p) {
        powers.push(p);
        p = ring.mul(p, x);
    }
    let mut out = m.clone();
    for a in m.ones() {
        for &q in &powers {
            out.insert(ring.mul(Elem(a), q).0);
        }
    }
    out
}

/// `S⁻¹R` as a table ring together with the canonical map `π: R → S⁻¹R`.
#[derive(Clone, Debug)]
pub struct Localization {
    pub ring: FiniteRing,
    /// `map[r]` is `π(r) = r/1`.
    pub map: Vec<Elem>,
    /// Representative pair `(r, s)` of each class.
    pub fractions: Vec<(Elem, Elem)>,
}

impl Localization {
    pub fn apply(&self, r: Elem) -> Elem {
        self.map[r.0]
    }

    /// `ker π`.
    pub fn kernel(&self, base: &FiniteRing) -> Ideal {
        let z = self.ring.zero();
        let ker: Vec<Elem> = base.elements().filter(|&r| self.map[r.0] == z).collect();
        Ideal::from_closed_members(base, &ker)
    }

    /// `π⁻¹(√0)`, the intersection of the primes `π*(q)` for `q` in
    /// `Spec(S⁻¹R)`.
    pub fn nil_contraction(&self, base: &FiniteRing) -> Ideal {
        let nil: Vec<Elem> = base
            .elements()
            .filter(|&r| self.ring.is_nilpotent(self.map[r.0]))
            .collect();
        Ideal::from_closed_members(base, &nil)
    }
}

/// Localization by explicit equivalence classes of pairs `(r, s)`, where
/// `(r, s) ~ (r', s')` iff `t(rs' - r's) = 0` for some `t ∈ S`.
pub fn localize(ring: &FiniteRing, s: &MultSet) -> Result<Localization> {
    let z = ring.zero();
    let ss: Vec<Elem> = s.elements().collect();
    // killed[d] iff some t ∈ S has td = 0
    let killed: Vec<bool> = ring
        .elements()
        .map(|d| ss.iter().any(|&t| ring.mul(t, d) == z))
        .collect();
    let equiv = |(r, s1): (Elem, Elem), (r2, s2): (Elem, Elem)| {
        killed[ring.sub(ring.mul(r, s2), ring.mul(r2, s1)).0]
    };

    let pair_index = |r: Elem, si: usize| r.0 * ss.len() + si;
    let s_pos: Vec<Option<usize>> = {
        let mut v = vec![None; ring.order()];
        for (i, e) in ss.iter().enumerate() {
            v[e.0] = Some(i);
        }
        v
    };
    let mut class_of = vec![usize::MAX; ring.order() * ss.len()];
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    for r in ring.elements() {
        for (si, &sv) in ss.iter().enumerate() {
            let pair = (r, sv);
            let c = reps
                .iter()
                .position(|&rep| equiv(rep, pair))
                .unwrap_or_else(|| {
                    reps.push(pair);
                    reps.len() - 1
                });
            class_of[pair_index(r, si)] = c;
        }
    }
    let m = reps.len();
    if m > TABLE_CAP {
        return Err(Error::capacity("localized ring", m, TABLE_CAP));
    }
    let class = |r: Elem, sv: Elem| class_of[pair_index(r, s_pos[sv.0].expect("denominator in S"))];
    let mut add = vec![0u16; m * m];
    let mut mul = vec![0u16; m * m];
    for (a, &(r1, s1)) in reps.iter().enumerate() {
        for (b, &(r2, s2)) in reps.iter().enumerate() {
            let den = ring.mul(s1, s2);
            let num = ring.add(ring.mul(r1, s2), ring.mul(r2, s1));
            add[a * m + b] = class(num, den) as u16;
            mul[a * m + b] = class(ring.mul(r1, r2), den) as u16;
        }
    }
    let one = ring.one();
    let map: Vec<Elem> = ring.elements().map(|r| Elem(class(r, one))).collect();
    let zero = class(ring.zero(), one);
    let unit = class(one, one);
    Ok(Localization {
        ring: FiniteRing::from_tables_unchecked(m, add, mul, zero, unit),
        map,
        fractions: reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_localization_is_identity() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let loc = localize(&z6, &MultSet::generated(&z6, &[])).unwrap();
        assert_eq!(loc.ring.order(), 6);
        loc.ring.check_axioms().unwrap();
    }

    #[test]
    fn inverting_three_in_z6_leaves_z2() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let s = MultSet::new(&z6, &[Elem(1), Elem(3)]).unwrap();
        let loc = localize(&z6, &s).unwrap();
        assert_eq!(loc.ring.order(), 2);
        assert!(loc.ring.is_field());
        // oracle: brute-force the pair classes directly
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|r| [(r, 1), (r, 3)]).collect();
        let eq = |(a, s): (usize, usize), (b, t): (usize, usize)| {
            [1usize, 3]
                .iter()
                .any(|u| (u * ((a * t + 6 * 6 - b * s) % 6)) % 6 == 0)
        };
        let mut classes: Vec<(usize, usize)> = Vec::new();
        for p in pairs {
            if !classes.iter().any(|&c| eq(c, p)) {
                classes.push(p);
            }
        }
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn inverting_units_changes_nothing() {
        let z4 = FiniteRing::cyclic(4).unwrap();
        let loc = localize(&z4, &MultSet::units(&z4)).unwrap();
        assert_eq!(loc.ring.order(), 4);
        assert_eq!(loc.kernel(&z4).len(), 1);
    }

    #[test]
    fn literal_kernel_differs_from_nil_contraction_when_not_reduced() {
        // Z/4, S = {1}: ker π = 0 while {f : f·1 nilpotent} = {0, 2}
        let z4 = FiniteRing::cyclic(4).unwrap();
        let loc = localize(&z4, &MultSet::generated(&z4, &[])).unwrap();
        assert_eq!(loc.kernel(&z4).len(), 1);
        assert_eq!(loc.nil_contraction(&z4).len(), 2);
    }

    #[test]
    fn multiplicative_set_validation_and_enumeration() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert!(MultSet::new(&z6, &[Elem(1), Elem(2)]).is_err());
        assert!(MultSet::new(&z6, &[Elem(2), Elem(4)]).is_err());
        let all = MultSet::enumerate_all(&z6);
        // every enumerated set validates and they are distinct
        for m in &all {
            let els: Vec<Elem> = m.elements().collect();
            assert!(MultSet::new(&z6, &els).is_ok());
        }
        // oracle: brute force over all subsets of Z/6
        let brute = (0u32..64)
            .filter(|mask| {
                let els: Vec<Elem> = (0..6).filter(|i| mask >> i & 1 == 1).map(Elem).collect();
                MultSet::new(&z6, &els).is_ok()
            })
            .count();
        assert_eq!(all.len(), brute);
    }
}
