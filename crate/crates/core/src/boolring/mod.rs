//! Boolean rings.
//!
//! [`FinSubset`] is an element of the power set ring `P(X)` of a finite set
//! `X = {0, .., n-1}` (addition is symmetric difference, multiplication is
//! intersection). [`Family`] is a set of such subsets, used for ideals and
//! filters of `P(X)`. [`UpSet`] and [`BoolRing`] give the symbolic ring of
//! ultimately periodic subsets of the naturals.

mod family;
mod ring;
mod upset;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::{Elem, FiniteRing};
use crate::{Error, Result};

pub use family::Family;
pub use ring::{atom_decompose, AtomDecomposition, BoolRing, MAX_GENERATORS};
pub use upset::UpSet;

/// Largest universe for which `P(X)` is handled explicitly.
pub const MAX_UNIVERSE: usize = 6;

/// A subset of `{0, .., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinSubset {
    n: u8,
    bits: u64,
}

impl FinSubset {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::capacity("finite universe", n, 64));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::invalid(format!(
                "bits {bits:#b} outside universe of size {n}"
            )));
        }
        Ok(FinSubset { n: n as u8, bits })
    }

    pub fn empty(n: usize) -> Self {
        FinSubset {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        FinSubset {
            n: n as u8,
            bits: full_mask(n),
        }
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        FinSubset {
            n: n as u8,
            bits: 1 << x,
        }
    }

    pub fn from_points(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for p in points {
            if p >= n {
                return Err(Error::invalid(format!(
                    "point {p} outside universe of size {n}"
                )));
            }
            bits |= 1 << p;
        }
        Self::new(n, bits)
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits >> x & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe()).filter(|&x| self.contains(x))
    }

    /// Ring addition: symmetric difference.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Self {
        FinSubset {
            n: self.n,
            bits: self.bits ^ other.bits,
        }
    }

    /// Ring multiplication: intersection.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Self {
        FinSubset {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn union(self, other: Self) -> Self {
        FinSubset {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn complement(self) -> Self {
        FinSubset {
            n: self.n,
            bits: !self.bits & full_mask(self.universe()),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Every subset of `{0, .., n-1}`, in bit order.
    pub fn all(n: usize) -> impl Iterator<Item = FinSubset> {
        (0..1u64 << n).map(move |bits| FinSubset { n: n as u8, bits })
    }
}

impl fmt::Display for FinSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The product ring `(Z/2)^n` that `P(X)` is isomorphic to via characteristic
/// functions.
pub fn characteristic_ring(n: usize) -> Result<FiniteRing> {
    FiniteRing::product_pk(&vec![(2, 1); n])
}

/// `A ↦ χ_A`, into [`characteristic_ring`].
pub fn chi(ring: &FiniteRing, a: FinSubset) -> Elem {
    let comps: Vec<u64> = (0..a.universe())
        .map(|x| u64::from(a.contains(x)))
        .collect();
    ring.from_components(&comps)
        .expect("characteristic ring has one component per point")
}

/// Inverse of [`chi`]: the support of a 0/1 sequence.
pub fn chi_inverse(ring: &FiniteRing, e: Elem) -> FinSubset {
    let comps = ring.components(e);
    let n = comps.len();
    FinSubset::from_points(n, (0..n).filter(|&x| comps[x] != 0)).expect("in range")
}
