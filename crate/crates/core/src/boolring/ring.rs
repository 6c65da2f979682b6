use serde::Serialize;

use super::{FinSubset, UpSet};
use crate::{Error, Result};

/// Most extra generators a [`BoolRing::Generated`] ring may carry.
pub const MAX_GENERATORS: usize = 16;

/// A Boolean ring of subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoolRing {
    /// The full power set ring of `{0, .., n-1}`.
    FullFinite(usize),
    /// Finite and cofinite subsets of the naturals.
    FinCofin,
    /// The subring of `P(N)` generated by the finite sets and the listed
    /// ultimately periodic sets.
    Generated(Vec<UpSet>),
}

/// The atoms of the finite Boolean algebra generated by a list of sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomDecomposition {
    pub atoms: Vec<UpSet>,
    pub infinite_flags: Vec<bool>,
}

impl AtomDecomposition {
    pub fn infinite_atoms(&self) -> impl Iterator<Item = &UpSet> {
        self.atoms
            .iter()
            .zip(&self.infinite_flags)
            .filter(|(_, &inf)| inf)
            .map(|(a, _)| a)
    }

    /// Whether the atoms are pairwise disjoint and cover the naturals.
    pub fn is_partition(&self) -> bool {
        let mut acc = UpSet::empty();
        for a in &self.atoms {
            if !acc.is_disjoint(a) {
                return false;
            }
            acc = acc.union(a);
        }
        acc.is_naturals()
    }
}

/// Splits the naturals into the nonempty Boolean combinations of
/// `generators`, sorted canonically.
pub fn atom_decompose(generators: &[UpSet]) -> Result<AtomDecomposition> {
    if generators.len() > MAX_GENERATORS {
        return Err(Error::capacity(
            "generator list",
            generators.len(),
            MAX_GENERATORS,
        ));
    }
    // refine one generator at a time; empty cells are dropped as we go
    let mut cells = vec![UpSet::naturals()];
    for g in generators {
        let gc = g.complement();
        cells = cells
            .iter()
            .flat_map(|c| [c.intersect(g), c.intersect(&gc)])
            .filter(|c| !c.is_empty())
            .collect();
    }
    cells.sort();
    let infinite_flags = cells.iter().map(|c| !c.is_finite()).collect();
    Ok(AtomDecomposition {
        atoms: cells,
        infinite_flags,
    })
}

impl BoolRing {
    pub fn generated(generators: Vec<UpSet>) -> Result<Self> {
        if generators.len() > MAX_GENERATORS {
            return Err(Error::capacity(
                "generator list",
                generators.len(),
                MAX_GENERATORS,
            ));
        }
        Ok(BoolRing::Generated(generators))
    }

    /// The extra generators, with `FinCofin` read as `Generated([])`.
    pub fn generators(&self) -> Option<&[UpSet]> {
        match self {
            BoolRing::FullFinite(_) => None,
            BoolRing::FinCofin => Some(&[]),
            BoolRing::Generated(g) => Some(g),
        }
    }

    pub fn decomposition(&self) -> Result<AtomDecomposition> {
        match self.generators() {
            Some(g) => atom_decompose(g),
            None => Err(Error::invalid(
                "finite power set rings have no symbolic atoms",
            )),
        }
    }

    /// Membership of a symbolic set. A set lies in a generated ring iff on
    /// every infinite atom it is finite or co-finite within the atom.
    pub fn contains(&self, s: &UpSet) -> Result<bool> {
        match self {
            BoolRing::FullFinite(_) => Err(Error::invalid(
                "symbolic sets are not elements of a finite power set ring",
            )),
            BoolRing::FinCofin => Ok(s.is_finite() || s.is_cofinite()),
            BoolRing::Generated(g) => {
                let dec = atom_decompose(g)?;
                let inside = dec
                    .infinite_atoms()
                    .all(|c| c.intersect(s).is_finite() || c.difference(s).is_finite());
                Ok(inside)
            }
        }
    }

    pub fn contains_finite(&self, s: &FinSubset) -> bool {
        matches!(self, BoolRing::FullFinite(n) if *n == s.universe())
    }

    /// Inclusion of symbolic rings, by generator membership.
    pub fn is_subring_of(&self, other: &BoolRing) -> Result<bool> {
        match (self.generators(), other.generators()) {
            (Some(mine), Some(_)) => {
                for g in mine {
                    if !other.contains(g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => match (self, other) {
                (BoolRing::FullFinite(a), BoolRing::FullFinite(b)) => Ok(a == b),
                _ => Err(Error::invalid("cannot compare finite and symbolic rings")),
            },
        }
    }

    pub fn same_ring(&self, other: &BoolRing) -> Result<bool> {
        Ok(self.is_subring_of(other)? && other.is_subring_of(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        let d = atom_decompose(&[]).unwrap();
        assert_eq!(d.atoms, vec![UpSet::naturals()]);
        assert_eq!(d.infinite_flags, vec![true]);

        let d = atom_decompose(&[UpSet::evens()]).unwrap();
        assert_eq!(d.atoms.len(), 2);
        assert!(d.atoms.contains(&UpSet::evens()) && d.atoms.contains(&UpSet::odds()));

        let d = atom_decompose(&[UpSet::evens(), UpSet::multiples_of(3).unwrap()]).unwrap();
        let mut expected = vec![
            UpSet::new(0, &[], 6, &[0]).unwrap(),
            UpSet::new(0, &[], 6, &[2, 4]).unwrap(),
            UpSet::new(0, &[], 6, &[3]).unwrap(),
            UpSet::new(0, &[], 6, &[1, 5]).unwrap(),
        ];
        expected.sort();
        assert_eq!(d.atoms, expected);
        assert!(d.infinite_flags.iter().all(|&f| f));
        assert!(d.is_partition());
    }

    #[test]
    fn finite_generator_gives_finite_atom() {
        let d = atom_decompose(&[UpSet::finite(&[0, 1, 2])]).unwrap();
        assert_eq!(d.infinite_atoms().count(), 1);
        assert_eq!(d.atoms.len(), 2);
    }

    #[test]
    fn membership() {
        let fc = BoolRing::FinCofin;
        assert!(fc.contains(&UpSet::finite(&[0, 5])).unwrap());
        assert!(!fc.contains(&UpSet::evens()).unwrap());
        let g = BoolRing::generated(vec![UpSet::evens()]).unwrap();
        assert!(g.contains(&UpSet::evens()).unwrap());
        assert!(g
            .contains(&UpSet::evens().union(&UpSet::finite(&[1, 3])))
            .unwrap());
        assert!(!g.contains(&UpSet::multiples_of(3).unwrap()).unwrap());
        for r in [BoolRing::FinCofin, g] {
            assert!(r.contains(&UpSet::empty()).unwrap());
            assert!(r.contains(&UpSet::naturals()).unwrap());
        }
    }

    #[test]
    fn ring_comparison() {
        let a = BoolRing::generated(vec![UpSet::evens()]).unwrap();
        let b = BoolRing::generated(vec![UpSet::odds(), UpSet::finite(&[4])]).unwrap();
        assert!(a.same_ring(&b).unwrap());
        assert!(BoolRing::FinCofin.is_subring_of(&a).unwrap());
        assert!(!a.is_subring_of(&BoolRing::FinCofin).unwrap());
        assert!(BoolRing::generated(vec![UpSet::evens(); 17]).is_err());
    }
}
