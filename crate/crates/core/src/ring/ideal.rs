use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteRing};
use crate::{Error, Result};

/// An ideal of a [`FiniteRing`], stored as a characteristic bit vector with
/// a list of generators that produce it.
///
/// Equality, ordering and hashing only look at the members.
#[derive(Clone, Debug)]
pub struct Ideal {
    members: FixedBitSet,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on sorted member lists.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.ones().cmp(other.members.ones())
    }
}

fn principal_members(ring: &FiniteRing, g: Elem) -> FixedBitSet {
    // {rg : r ∈ R} is already an additive subgroup
    let mut bits = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        bits.insert(ring.mul(r, g).0);
    }
    bits
}

fn sum_members(ring: &FiniteRing, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    if b.is_subset(a) {
        return a.clone();
    }
    if a.is_subset(b) {
        return b.clone();
    }
    let mut bits = FixedBitSet::with_capacity(ring.order());
    for i in a.ones() {
        for j in b.ones() {
            bits.insert(ring.add(Elem(i), Elem(j)).0);
        }
    }
    bits
}

impl Ideal {
    /// Smallest ideal containing `gens`.
    pub fn generate(ring: &FiniteRing, gens: &[Elem]) -> Ideal {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert(ring.zero().0);
        for &g in gens {
            if members.contains(g.0) {
                continue;
            }
            members = sum_members(ring, &members, &principal_members(ring, g));
        }
        Ideal {
            members,
            generators: gens.to_vec(),
        }
    }

    pub fn principal(ring: &FiniteRing, g: Elem) -> Ideal {
        Ideal {
            members: principal_members(ring, g),
            generators: vec![g],
        }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Self::generate(ring, &[])
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        Self::principal(ring, ring.one())
    }

    /// Builds an ideal from a member set known to be closed; generators are
    /// chosen greedily in index order.
    pub(crate) fn from_closed_members(ring: &FiniteRing, members: &[Elem]) -> Ideal {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for m in members {
            bits.insert(m.0);
        }
        let generators = greedy_generators(ring, &bits);
        Ideal {
            members: bits,
            generators,
        }
    }

    /// Validates that `members` is an ideal of `ring`.
    pub fn from_members(ring: &FiniteRing, members: &[Elem]) -> Result<Ideal> {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for m in members {
            if m.0 >= ring.order() {
                return Err(Error::invalid(format!("element {} out of range", m.0)));
            }
            bits.insert(m.0);
        }
        if !bits.contains(ring.zero().0) {
            return Err(Error::invalid("an ideal must contain zero"));
        }
        for a in bits.ones() {
            for b in bits.ones() {
                if !bits.contains(ring.add(Elem(a), Elem(b)).0) {
                    return Err(Error::invalid("not closed under addition"));
                }
            }
            for r in ring.elements() {
                if !bits.contains(ring.mul(r, Elem(a)).0) {
                    return Err(Error::invalid("not closed under ring multiples"));
                }
            }
        }
        let generators = greedy_generators(ring, &bits);
        Ok(Ideal {
            members: bits,
            generators,
        })
    }

    pub(crate) fn from_bits(ring: &FiniteRing, bits: FixedBitSet) -> Ideal {
        let generators = greedy_generators(ring, &bits);
        Ideal {
            members: bits,
            generators,
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e.0)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(Elem)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_proper(&self, ring: &FiniteRing) -> bool {
        !self.contains(ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn sum(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let members = sum_members(ring, &self.members, &other.members);
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().copied());
        Ideal {
            members,
            generators,
        }
    }

    pub fn intersection(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        Self::from_bits(ring, bits)
    }

    /// Prime by the raw definition: proper, and `a, b ∉ P ⟹ ab ∉ P`.
    pub fn is_prime(&self, ring: &FiniteRing) -> bool {
        if !self.is_proper(ring) {
            return false;
        }
        let outside: Vec<Elem> = ring.elements().filter(|&e| !self.contains(e)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.contains(ring.mul(a, b))))
    }

    /// Rewrites the generator list with a greedy minimal-by-index choice.
    pub fn with_canonical_generators(mut self, ring: &FiniteRing) -> Ideal {
        self.generators = greedy_generators(ring, &self.members);
        self
    }
}

fn greedy_generators(ring: &FiniteRing, bits: &FixedBitSet) -> Vec<Elem> {
    let mut current = FixedBitSet::with_capacity(ring.order());
    current.insert(ring.zero().0);
    let mut gens = Vec::new();
    for i in bits.ones() {
        if current.contains(i) {
            continue;
        }
        current = sum_members(ring, &current, &principal_members(ring, Elem(i)));
        gens.push(Elem(i));
        if current == *bits {
            break;
        }
    }
    gens
}

/// Every ideal of `ring`, sorted by member list.
///
/// Every ideal of a finite ring is a finite sum of principal ideals, so a
/// breadth-first saturation of the principal ideals under sums reaches all
/// of them.
pub fn enumerate_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    use std::collections::HashSet;

    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut principals: Vec<FixedBitSet> = Vec::new();
    for g in ring.elements() {
        let p = principal_members(ring, g);
        if seen.insert(p.clone()) {
            principals.push(p);
        }
    }
    let mut all: Vec<FixedBitSet> = principals.clone();
    let mut frontier = principals.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in &frontier {
            for p in &principals {
                if p.is_subset(i) {
                    continue;
                }
                let s = sum_members(ring, i, p);
                if seen.insert(s.clone()) {
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = all.into_iter().map(|b| Ideal::from_bits(ring, b)).collect();
    ideals.sort();
    ideals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn els(v: &[usize]) -> Vec<Elem> {
        v.iter().copied().map(Elem).collect()
    }

    #[test]
    fn generated_ideals() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let i = Ideal::generate(&z6, &[Elem(2)]);
        assert_eq!(i.elements().collect::<Vec<_>>(), els(&[0, 2, 4]));
        assert_eq!(Ideal::generate(&z6, &[]).len(), 1);
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        let e = v4.from_components(&[1, 0]).unwrap();
        let i = Ideal::generate(&v4, &[e]);
        assert_eq!(i.elements().collect::<Vec<_>>(), vec![v4.zero(), e]);
        // two generators: (2) + (3) = Z/6
        assert_eq!(Ideal::generate(&z6, &[Elem(2), Elem(3)]).len(), 6);
    }

    #[test]
    fn validation() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert!(Ideal::from_members(&z6, &els(&[0, 3])).is_ok());
        assert!(Ideal::from_members(&z6, &els(&[0, 2])).is_err());
        assert!(Ideal::from_members(&z6, &els(&[3])).is_err());
    }

    #[test]
    fn enumeration_matches_subset_brute_force() {
        // oracle: every subset of a small ring, kept if it is an ideal
        for ring in [
            FiniteRing::cyclic(12).unwrap(),
            FiniteRing::product_pk(&[(2, 1), (2, 1), (2, 1)]).unwrap(),
            FiniteRing::product_pk(&[(2, 2), (2, 1)]).unwrap(),
        ] {
            let n = ring.order();
            let mut brute = Vec::new();
            for mask in 0u32..(1 << n) {
                let members: Vec<Elem> = (0..n).filter(|i| mask >> i & 1 == 1).map(Elem).collect();
                if let Ok(i) = Ideal::from_members(&ring, &members) {
                    brute.push(i);
                }
            }
            brute.sort();
            assert_eq!(enumerate_ideals(&ring), brute, "{}", ring.describe());
        }
    }

    #[test]
    fn greedy_generators_regenerate() {
        let r = FiniteRing::product_pk(&[(2, 2), (3, 1)]).unwrap();
        for i in enumerate_ideals(&r) {
            assert_eq!(Ideal::generate(&r, i.generators()), i);
        }
    }
}
