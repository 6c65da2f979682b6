use std::fmt;

use serde::{Serialize, Serializer};

use super::{FinSubset, MAX_UNIVERSE};
use crate::{Error, Result};

/// A set of subsets of `{0, .., n-1}`, `n ≤ 6`, stored as a 64-bit mask
/// indexed by the subsets' bit patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    n: u8,
    mask: u64,
}

impl Family {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::capacity("power set universe", n, MAX_UNIVERSE));
        }
        let size = 1usize << n;
        if size < 64 && mask >> size != 0 {
            return Err(Error::invalid(
                "family mask mentions subsets outside the universe",
            ));
        }
        Ok(Family { n: n as u8, mask })
    }

    pub fn empty(n: usize) -> Self {
        Family {
            n: n as u8,
            mask: 0,
        }
    }

    pub fn from_subsets(n: usize, subsets: impl IntoIterator<Item = FinSubset>) -> Result<Self> {
        let mut f = Self::new(n, 0)?;
        for s in subsets {
            if s.universe() != n {
                return Err(Error::invalid("subset from a different universe"));
            }
            f.mask |= 1 << s.bits();
        }
        Ok(f)
    }

    /// `{A : pred(A)}`.
    pub fn filter(n: usize, pred: impl Fn(FinSubset) -> bool) -> Result<Self> {
        Self::from_subsets(n, FinSubset::all(n).filter(|&a| pred(a)))
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, a: FinSubset) -> bool {
        self.mask >> a.bits() & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn members(&self) -> impl Iterator<Item = FinSubset> + '_ {
        FinSubset::all(self.universe()).filter(|&a| self.contains(a))
    }

    /// `P(X) ∖ self`.
    pub fn complement(&self) -> Self {
        let size = 1usize << self.n;
        let all = if size >= 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        };
        Family {
            n: self.n,
            mask: !self.mask & all,
        }
    }

    pub fn is_subset(&self, other: &Family) -> bool {
        self.mask & !other.mask == 0
    }

    /// Ideal of the ring `P(X)`: contains `∅`, closed under `+` and under
    /// multiplication by every subset.
    pub fn is_ideal(&self) -> bool {
        let n = self.universe();
        if !self.contains(FinSubset::empty(n)) {
            return false;
        }
        let members: Vec<FinSubset> = self.members().collect();
        members.iter().all(|&a| {
            members.iter().all(|&b| self.contains(a.add(b)))
                && FinSubset::all(n).all(|r| self.contains(r.mul(a)))
        })
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(FinSubset::full(self.universe()))
    }

    /// Maximal ideal: a proper ideal containing exactly one of `A`, `Aᶜ`
    /// for every `A`.
    pub fn is_maximal_ideal(&self) -> bool {
        self.is_ideal()
            && self.is_proper()
            && FinSubset::all(self.universe())
                .all(|a| self.contains(a) != self.contains(a.complement()))
    }

    /// The principal maximal ideal `m_x = P(X ∖ {x}) = {A : x ∉ A}`.
    pub fn principal_maximal(n: usize, x: usize) -> Result<Self> {
        if x >= n {
            return Err(Error::invalid(format!(
                "point {x} outside universe of size {n}"
            )));
        }
        Self::filter(n, |a| !a.contains(x))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let members: Vec<Vec<usize>> = self.members().map(|a| a.points().collect()).collect();
        members.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_maximal_ideals() {
        let m0 = Family::principal_maximal(2, 0).unwrap();
        assert_eq!(
            m0.members().collect::<Vec<_>>(),
            vec![FinSubset::empty(2), FinSubset::singleton(2, 1)]
        );
        assert!(m0.is_maximal_ideal());
        assert!(!Family::empty(2).is_ideal());
    }

    #[test]
    fn ideals_are_down_closed_and_union_closed() {
        // every family of subsets, |X| ≤ 4, filtered down to the ideals
        for n in 1..=4usize {
            let size = 1usize << n;
            for mask in 0..(1u64 << size) {
                let f = Family::new(n, mask).unwrap();
                if !f.is_ideal() {
                    continue;
                }
                for a in f.members() {
                    for b in f.members() {
                        assert!(f.contains(a.union(b)));
                    }
                    for b in FinSubset::all(n).filter(|b| b.is_subset(&a)) {
                        assert!(f.contains(b));
                    }
                }
            }
        }
    }
}
