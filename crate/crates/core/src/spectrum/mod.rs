//! Prime, minimal and maximal spectra of finite rings, and their Zariski
//! and flat topologies as explicit open families.

mod topology;

use serde::Serialize;

use crate::ring::{enumerate_ideals, Elem, FiniteRing, Ideal};
use crate::{Error, Result};

pub use topology::{image, mask_points, preimage, Comparison, FiniteTopology, MAX_POINTS};

/// Default cap on ring order for ideal enumeration.
pub const ENUMERATION_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SiteKind {
    Spec,
    Min,
    Max,
}

/// A set of prime ideals of one ring, sorted canonically.
#[derive(Clone, Debug)]
pub struct SpecSite {
    ring: FiniteRing,
    kind: SiteKind,
    points: Vec<Ideal>,
}

/// Every prime ideal of `ring`, up to [`ENUMERATION_CAP`].
pub fn enumerate_primes(ring: &FiniteRing) -> Result<SpecSite> {
    enumerate_primes_capped(ring, ENUMERATION_CAP)
}

pub fn enumerate_primes_capped(ring: &FiniteRing, cap: usize) -> Result<SpecSite> {
    if ring.order() > cap {
        return Err(Error::capacity(
            "ring for ideal enumeration",
            ring.order(),
            cap,
        ));
    }
    let points: Vec<Ideal> = enumerate_ideals(ring)
        .into_iter()
        .filter(|i| i.is_prime(ring))
        .collect();
    if points.len() > MAX_POINTS {
        return Err(Error::capacity("spectrum", points.len(), MAX_POINTS));
    }
    Ok(SpecSite {
        ring: ring.clone(),
        kind: SiteKind::Spec,
        points,
    })
}

/// Containment-minimal primes.
pub fn minimal_by_containment(primes: &[Ideal]) -> Vec<Ideal> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

/// A prime `P` is minimal iff for every `f ∈ P` some `g ∉ P` makes `fg`
/// nilpotent.
pub fn is_minimal_by_nilpotence(ring: &FiniteRing, prime: &Ideal) -> bool {
    let nil: Vec<bool> = ring.elements().map(|e| ring.is_nilpotent(e)).collect();
    prime.elements().all(|f| {
        ring.elements()
            .any(|g| !prime.contains(g) && nil[ring.mul(f, g).0])
    })
}

/// `Min(R)`, computed two independent ways that must agree.
pub fn min_primes(ring: &FiniteRing) -> Result<SpecSite> {
    let spec = enumerate_primes(ring)?;
    let by_containment = minimal_by_containment(&spec.points);
    let by_criterion: Vec<Ideal> = spec
        .points
        .iter()
        .filter(|p| is_minimal_by_nilpotence(ring, p))
        .cloned()
        .collect();
    if by_containment != by_criterion {
        return Err(Error::Consistency(format!(
            "minimal primes of {} disagree: {} by containment, {} by nilpotence criterion",
            ring.describe(),
            by_containment.len(),
            by_criterion.len()
        )));
    }
    Ok(SpecSite {
        ring: ring.clone(),
        kind: SiteKind::Min,
        points: by_containment,
    })
}

/// `Max(R)`: primes not strictly contained in another proper ideal.
pub fn max_ideals(ring: &FiniteRing) -> Result<SpecSite> {
    let spec = enumerate_primes(ring)?;
    let points = spec
        .points
        .iter()
        .filter(|p| !spec.points.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect();
    Ok(SpecSite {
        ring: ring.clone(),
        kind: SiteKind::Max,
        points,
    })
}

impl SpecSite {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn kind(&self) -> SiteKind {
        self.kind
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full_set(&self) -> u64 {
        if self.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Index of the point equal to `ideal`.
    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.points.iter().position(|p| p == ideal)
    }

    /// `D(f) = {P : f ∉ P}` as a point mask.
    pub fn d(&self, f: Elem) -> u64 {
        self.mask(|p| !p.contains(f))
    }

    /// `V(f) = {P : f ∈ P}`.
    pub fn v(&self, f: Elem) -> u64 {
        self.mask(|p| p.contains(f))
    }

    /// `V(I) = {P : I ⊆ P}`.
    pub fn v_ideal(&self, ideal: &Ideal) -> u64 {
        self.mask(|p| ideal.is_subset(p))
    }

    fn mask(&self, pred: impl Fn(&Ideal) -> bool) -> u64 {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| pred(p))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Topology with basis `{D(f) ∩ site}`.
    pub fn zariski_topology(&self) -> Result<FiniteTopology> {
        let basis: std::collections::BTreeSet<u64> =
            self.ring.elements().map(|f| self.d(f)).collect();
        FiniteTopology::from_basis(self.len(), basis)
    }

    /// Topology with subbasis `{V(f) ∩ site}`; finite intersections give
    /// `V(I)` for finitely generated `I`.
    pub fn flat_topology(&self) -> Result<FiniteTopology> {
        let sub: std::collections::BTreeSet<u64> =
            self.ring.elements().map(|f| self.v(f)).collect();
        FiniteTopology::from_subbasis(self.len(), sub)
    }

    /// Point lists with generator witnesses, for display.
    pub fn describe_points(&self) -> Vec<PointDescription> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| PointDescription {
                index: i,
                generators: p
                    .generators()
                    .iter()
                    .map(|&g| self.ring.fmt_elem(g))
                    .collect(),
                members: p.elements().map(|e| self.ring.fmt_elem(e)).collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointDescription {
    pub index: usize,
    pub generators: Vec<String>,
    pub members: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(site: &SpecSite) -> Vec<Vec<usize>> {
        site.points()
            .iter()
            .map(|p| p.elements().map(Elem::index).collect())
            .collect()
    }

    #[test]
    fn primes_of_small_rings() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert_eq!(
            members(&enumerate_primes(&z6).unwrap()),
            vec![vec![0, 2, 4], vec![0, 3]]
        );
        let z4 = FiniteRing::cyclic(4).unwrap();
        assert_eq!(members(&enumerate_primes(&z4).unwrap()), vec![vec![0, 2]]);
        let r = FiniteRing::product_pk(&[(2, 2), (3, 2)]).unwrap();
        assert_eq!(enumerate_primes(&r).unwrap().len(), 2);
    }

    #[test]
    fn minimal_primes_agree() {
        let z4 = FiniteRing::cyclic(4).unwrap();
        assert_eq!(members(&min_primes(&z4).unwrap()), vec![vec![0, 2]]);
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        assert_eq!(min_primes(&v4).unwrap().len(), 2);
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert_eq!(min_primes(&z6).unwrap().len(), 2);
        assert_eq!(max_ideals(&z6).unwrap().len(), 2);
    }

    #[test]
    fn zariski_points_are_open_on_boolean_min() {
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        let min = min_primes(&v4).unwrap();
        for x in 0..2 {
            let delta = v4.delta(x).unwrap();
            let d = min.d(delta);
            assert_eq!(d.count_ones(), 1);
            // the point D(Δ_x) is p_x = ker π_x
            let p = &min.points()[d.trailing_zeros() as usize];
            assert!(v4
                .elements()
                .all(|e| p.contains(e) == (v4.component(e, x) == 0)));
        }
        let z = min.zariski_topology().unwrap();
        assert_eq!(z, FiniteTopology::discrete(2).unwrap());
        assert_eq!(min.flat_topology().unwrap(), z);
    }

    #[test]
    fn single_point_spectra() {
        let z4 = FiniteRing::cyclic(4).unwrap();
        let spec = enumerate_primes(&z4).unwrap();
        assert_eq!(spec.zariski_topology().unwrap().open_count(), 2);
        let max = max_ideals(&z4).unwrap();
        assert_eq!(
            max.zariski_topology().unwrap(),
            max.flat_topology().unwrap()
        );
        let z6 = FiniteRing::cyclic(6).unwrap();
        let s6 = enumerate_primes(&z6).unwrap();
        assert_eq!(
            s6.zariski_topology().unwrap(),
            FiniteTopology::discrete(2).unwrap()
        );
        assert_eq!(s6.flat_topology().unwrap(), s6.zariski_topology().unwrap());
    }

    #[test]
    fn clopens_of_max_are_v_sets() {
        let r = FiniteRing::product_pk(&[(2, 2), (2, 2)]).unwrap();
        let max = max_ideals(&r).unwrap();
        let clopens = max.zariski_topology().unwrap().clopens();
        assert_eq!(clopens.len(), 4);
        let mut vs: Vec<u64> = [[1, 1], [2, 1], [1, 2], [2, 2]]
            .iter()
            .map(|c| max.v(r.from_components(c).unwrap()))
            .collect();
        vs.sort();
        assert_eq!(vs, clopens);
    }

    #[test]
    fn capacity_error() {
        let r = FiniteRing::product_pk(&[(2, 2), (3, 1)]).unwrap();
        assert!(matches!(
            enumerate_primes_capped(&r, 8),
            Err(Error::Capacity {
                size: 12,
                cap: 8,
                ..
            })
        ));
    }
}
