//! Stone duality for Boolean rings.
//!
//! For a finite set `X`, `Spec P(X)` is computed by brute force and checked
//! against the principal ideals `m_x = P(X ∖ {x})`; maximal ideals are
//! translated to ultrafilters and back. For the naturals, [`compact`]
//! presents `Spec(R')` for finitely generated subrings `Fin(N) ⊆ R' ⊆ P(N)`
//! symbolically, with one point per natural and one per infinite atom.

mod compact;

use serde::Serialize;

use crate::boolring::{characteristic_ring, chi_inverse, Family, FinSubset};
use crate::spectrum::{enumerate_primes, FiniteTopology};
use crate::{Error, Result};

pub use compact::{
    alexandroff, check_cover, compactify, fincofin_truncation_points, maximality_witness,
    BasicOpen, Compactification, CoverCheck, MaximalityWitness, StonePoint,
};

/// Largest `|X|` for [`spec_finite_boolean`].
pub const MAX_SPEC_UNIVERSE: usize = 5;
/// Largest `|X|` for which every family of subsets can be scanned.
pub const MAX_EXHAUSTIVE_UNIVERSE: usize = 4;
/// Largest `|X|`, `|Y|` for [`ring_maps`].
pub const MAX_HOM_UNIVERSE: usize = 3;

/// `Spec P(X)` with point `x` equal to `m_x`.
#[derive(Clone, Debug)]
pub struct FiniteBooleanSpectrum {
    pub n: usize,
    pub points: Vec<Family>,
    pub topology: FiniteTopology,
}

/// Computes `Spec P(X)`, `|X| = n`, by enumerating the primes of the
/// characteristic ring `(Z/2)^n` and pulling them back along `χ`. Each
/// prime must be `m_x` for exactly one `x`.
pub fn spec_finite_boolean(n: usize) -> Result<FiniteBooleanSpectrum> {
    if n == 0 {
        return Err(Error::invalid("P(∅) is the zero ring and has no primes"));
    }
    if n > MAX_SPEC_UNIVERSE {
        return Err(Error::capacity("power set universe", n, MAX_SPEC_UNIVERSE));
    }
    let ring = characteristic_ring(n)?;
    let site = enumerate_primes(&ring)?;
    let mut slots: Vec<Option<Family>> = vec![None; n];
    for p in site.points() {
        let fam = Family::from_subsets(n, p.elements().map(|e| chi_inverse(&ring, e)))?;
        let x = (0..n)
            .find(|&x| {
                Family::principal_maximal(n, x)
                    .map(|m| m == fam)
                    .unwrap_or(false)
            })
            .ok_or_else(|| Error::Consistency(format!("prime {fam} of P(X) is not principal")))?;
        if slots[x].replace(fam).is_some() {
            return Err(Error::Consistency(format!("two primes at point {x}")));
        }
    }
    let points: Vec<Family> = slots
        .into_iter()
        .enumerate()
        .map(|(x, s)| s.ok_or_else(|| Error::Consistency(format!("no prime at point {x}"))))
        .collect::<Result<_>>()?;
    let topology = zariski_on_families(n, &points)?;
    Ok(FiniteBooleanSpectrum {
        n,
        points,
        topology,
    })
}

/// Topology on a list of ideals of `P(X)` with basis `D(A) = {M : A ∉ M}`.
pub fn zariski_on_families(n: usize, points: &[Family]) -> Result<FiniteTopology> {
    let basis = FinSubset::all(n).map(|a| basic_open_of(points, a));
    FiniteTopology::from_basis(points.len(), basis)
}

/// `D(A)` as a mask over `points`.
pub fn basic_open_of(points: &[Family], a: FinSubset) -> u64 {
    points
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.contains(a))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Every maximal ideal of `P(X)` by scanning all `2^(2^n)` families.
pub fn maximal_ideals_exhaustive(n: usize) -> Result<Vec<Family>> {
    if n > MAX_EXHAUSTIVE_UNIVERSE {
        return Err(Error::capacity(
            "exhaustive family scan",
            n,
            MAX_EXHAUSTIVE_UNIVERSE,
        ));
    }
    let size = 1u64 << (1u64 << n);
    let mut out = Vec::new();
    // bit 0 is the empty set, which every ideal contains
    for mask in (1..size).step_by(2) {
        let f = Family::new(n, mask)?;
        if f.is_maximal_ideal() {
            out.push(f);
        }
    }
    Ok(out)
}

/// A maximal filter of `P(X)`, stored as its family of members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ultrafilter {
    family: Family,
}

impl Ultrafilter {
    /// `M ↦ P(X) ∖ M`, rejecting non-maximal `M`.
    pub fn from_maximal(m: &Family) -> Result<Self> {
        if !m.is_maximal_ideal() {
            return Err(Error::invalid(format!("{m} is not a maximal ideal")));
        }
        let family = m.complement();
        debug_assert!(Self::is_ultrafilter(&family));
        Ok(Ultrafilter { family })
    }

    /// Validates the ultrafilter axioms.
    pub fn new(family: Family) -> Result<Self> {
        if !Self::is_ultrafilter(&family) {
            return Err(Error::invalid(format!("{family} is not an ultrafilter")));
        }
        Ok(Ultrafilter { family })
    }

    /// Upward closed, closed under intersection, and containing exactly one
    /// of `A`, `Aᶜ` for every `A`.
    pub fn is_ultrafilter(f: &Family) -> bool {
        let n = f.universe();
        let members: Vec<FinSubset> = f.members().collect();
        let upward = members.iter().all(|a| {
            FinSubset::all(n)
                .filter(|b| a.is_subset(b))
                .all(|b| f.contains(b))
        });
        let meets = members
            .iter()
            .all(|&a| members.iter().all(|&b| f.contains(a.mul(b))));
        let decides = FinSubset::all(n).all(|a| f.contains(a) != f.contains(a.complement()));
        upward && meets && decides
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn contains(&self, a: FinSubset) -> bool {
        self.family.contains(a)
    }

    /// The maximal ideal `P(X) ∖ F`.
    pub fn to_maximal(&self) -> Family {
        self.family.complement()
    }

    /// The point `x` with `{x} ∈ F`.
    pub fn principal_point(&self) -> Option<usize> {
        let n = self.family.universe();
        (0..n).find(|&x| self.contains(FinSubset::singleton(n, x)))
    }
}

/// `d(A) = {F : A ∈ F}` as a mask over `filters`.
pub fn filter_basic_open(filters: &[Ultrafilter], a: FinSubset) -> u64 {
    filters
        .iter()
        .enumerate()
        .filter(|(_, f)| f.contains(a))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// The preimage map `P(g): P(X) → P(Y)` of `g: Y → X`, listed by the bit
/// pattern of the argument.
pub fn preimage_map(n: usize, g: &[usize]) -> Vec<FinSubset> {
    let m = g.len();
    FinSubset::all(n)
        .map(|a| FinSubset::from_points(m, (0..m).filter(|&y| a.contains(g[y]))).expect("in range"))
        .collect()
}

/// Every unital ring map `P(X) → P(Y)` with `|X| = n`, `|Y| = m`, found by
/// backtracking over all functions and pruning on the ring laws. Each map
/// is listed by the image of every subset in bit-pattern order.
pub fn ring_maps(n: usize, m: usize) -> Result<Vec<Vec<FinSubset>>> {
    if n > MAX_HOM_UNIVERSE || m > MAX_HOM_UNIVERSE {
        return Err(Error::capacity(
            "ring map universe",
            n.max(m),
            MAX_HOM_UNIVERSE,
        ));
    }
    if n == 0 || m == 0 {
        return Err(Error::invalid("universes must be nonempty"));
    }
    let domain: Vec<FinSubset> = FinSubset::all(n).collect();
    let codomain: Vec<FinSubset> = FinSubset::all(m).collect();
    let mut image: Vec<Option<FinSubset>> = vec![None; domain.len()];
    let mut out = Vec::new();
    extend_map(&domain, &codomain, &mut image, 0, &mut out);
    Ok(out)
}

fn extend_map(
    domain: &[FinSubset],
    codomain: &[FinSubset],
    image: &mut Vec<Option<FinSubset>>,
    next: usize,
    out: &mut Vec<Vec<FinSubset>>,
) {
    if next == domain.len() {
        out.push(image.iter().map(|i| i.expect("assigned")).collect());
        return;
    }
    let n = domain[0].universe();
    let m = codomain[0].universe();
    for &c in codomain {
        image[next] = Some(c);
        if consistent(domain, image, next, n, m) {
            extend_map(domain, codomain, image, next + 1, out);
        }
    }
    image[next] = None;
}

/// Checks every law that involves `domain[last]` and only assigned values.
fn consistent(
    domain: &[FinSubset],
    image: &[Option<FinSubset>],
    last: usize,
    n: usize,
    m: usize,
) -> bool {
    let a = domain[last];
    let ha = image[last].expect("just assigned");
    if a == FinSubset::empty(n) && ha != FinSubset::empty(m) {
        return false;
    }
    if a == FinSubset::full(n) && ha != FinSubset::full(m) {
        return false;
    }
    (0..=last).all(|j| {
        let b = domain[j];
        let hb = image[j].expect("assigned below last");
        let sum_ok = image[a.add(b).bits() as usize].is_none_or(|s| s == ha.add(hb));
        let prod_ok = image[a.mul(b).bits() as usize].is_none_or(|p| p == ha.mul(hb));
        sum_ok && prod_ok
    })
}

/// `|Hom(P(X), P(Y))|`.
pub fn count_ring_maps(n: usize, m: usize) -> Result<usize> {
    ring_maps(n, m).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_spectrum() {
        let s = spec_finite_boolean(2).unwrap();
        let m0: Vec<String> = s.points[0].members().map(|a| a.to_string()).collect();
        assert_eq!(m0, vec!["{}", "{1}"]);
        let m1: Vec<String> = s.points[1].members().map(|a| a.to_string()).collect();
        assert_eq!(m1, vec!["{}", "{0}"]);
        assert_eq!(s.topology, FiniteTopology::discrete(2).unwrap());
    }

    #[test]
    fn spectra_agree_with_exhaustive_scan() {
        for n in 1..=3 {
            let s = spec_finite_boolean(n).unwrap();
            let mut a = s.points.clone();
            a.sort();
            assert_eq!(a, maximal_ideals_exhaustive(n).unwrap());
        }
        assert!(spec_finite_boolean(6).is_err());
    }

    #[test]
    fn principal_ultrafilter_at_zero() {
        let m0 = Family::principal_maximal(2, 0).unwrap();
        let u = Ultrafilter::from_maximal(&m0).unwrap();
        let members: Vec<String> = u.family().members().map(|a| a.to_string()).collect();
        assert_eq!(members, vec!["{0}", "{0,1}"]);
        assert_eq!(u.principal_point(), Some(0));
        assert_eq!(u.to_maximal(), m0);
        assert!(Ultrafilter::from_maximal(&Family::empty(2)).is_err());
    }

    #[test]
    fn ring_map_counts() {
        assert_eq!(count_ring_maps(2, 1).unwrap(), 2);
        assert_eq!(count_ring_maps(1, 3).unwrap(), 1);
        assert_eq!(count_ring_maps(3, 2).unwrap(), 9);
    }

    #[test]
    fn ring_maps_are_preimage_maps() {
        let maps = ring_maps(2, 2).unwrap();
        for g in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            assert!(maps.contains(&preimage_map(2, &g)));
        }
    }
}
