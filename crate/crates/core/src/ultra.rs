//! Ultra-ring ideals of product rings.
//!
//! For a product `R = ∏ R_x` over a finite label set `X` and a maximal ideal
//! `M` of `P(X)`, `M* = {f : Su(f) ∈ M}` and `M♭ = {f : Ω(f) ∈ M}`. With
//! `X` finite every `M` is some `m_x`, and the maps `M ↦ M*`, `M ↦ M♭`
//! identify `Spec P(X)` with `Min(Λ)` for products of fields and with
//! `Max(Γ)` for products of local atoms.

use serde::Serialize;

use crate::boolring::{Family, FinSubset};
use crate::ring::{
    is_ring_isomorphism, localize, quotient, Elem, FiniteRing, Ideal, LocalAtom, MultSet, Quotient,
};
use crate::spectrum::{enumerate_primes, image, max_ideals, min_primes, FiniteTopology, SpecSite};
use crate::stone::{basic_open_of, spec_finite_boolean, FiniteBooleanSpectrum};
use crate::{Error, Result};

/// `Su(f) = {x : f_x ≠ 0}` and `Ω(f) = {x : f_x ∉ m_x}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SupportProfile {
    pub su: FinSubset,
    pub omega: FinSubset,
}

fn factors(ring: &FiniteRing) -> Result<&[LocalAtom]> {
    ring.atoms()
        .map(|(a, _)| a)
        .ok_or_else(|| Error::invalid("supports need a product ring; table rings have no factors"))
}

pub fn support(ring: &FiniteRing, f: Elem) -> Result<SupportProfile> {
    let atoms = factors(ring)?;
    let comps = ring.components(f);
    let n = atoms.len();
    let su = FinSubset::from_points(n, (0..n).filter(|&x| comps[x] != 0))?;
    let omega = FinSubset::from_points(n, (0..n).filter(|&x| !atoms[x].in_maximal(comps[x])))?;
    Ok(SupportProfile { su, omega })
}

/// The principal maximal ideal `m_x = {A : x ∉ A}` of `P(X)`, `|X| = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalMax {
    pub n: usize,
    pub x: usize,
}

impl PrincipalMax {
    pub fn new(n: usize, x: usize) -> Result<Self> {
        if x >= n {
            return Err(Error::invalid(format!(
                "point {x} outside a universe of size {n}"
            )));
        }
        Ok(PrincipalMax { n, x })
    }

    pub fn contains(&self, a: FinSubset) -> bool {
        !a.contains(self.x)
    }

    pub fn family(&self) -> Result<Family> {
        Family::principal_maximal(self.n, self.x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UltraKind {
    Star,
    Flat,
}

/// `M*` or `M♭` as an ideal of a product ring.
#[derive(Clone, Debug)]
pub struct UltraIdeal {
    pub kind: UltraKind,
    pub at: PrincipalMax,
    pub ideal: Ideal,
}

fn pull_back(
    ring: &FiniteRing,
    kind: UltraKind,
    in_m: impl Fn(FinSubset) -> bool,
) -> Result<Ideal> {
    let mut members = Vec::new();
    for f in ring.elements() {
        let s = support(ring, f)?;
        let key = match kind {
            UltraKind::Star => s.su,
            UltraKind::Flat => s.omega,
        };
        if in_m(key) {
            members.push(f);
        }
    }
    Ideal::from_members(ring, &members)
}

fn principal_at(ring: &FiniteRing, m: PrincipalMax) -> Result<()> {
    let n = factors(ring)?.len();
    if m.n != n {
        return Err(Error::invalid(format!(
            "ideal of P(X) with |X| = {} on a ring with {n} factors",
            m.n
        )));
    }
    Ok(())
}

/// `M* = {f : Su(f) ∈ M}`, checked equal to `ker π_x` and to the ideal
/// generated by `1 − Δ_x`.
pub fn ideal_star(ring: &FiniteRing, m: PrincipalMax) -> Result<UltraIdeal> {
    principal_at(ring, m)?;
    let ideal = pull_back(ring, UltraKind::Star, |a| m.contains(a))?;
    let kernel: Vec<Elem> = ring
        .elements()
        .filter(|&f| ring.component(f, m.x) == 0)
        .collect();
    let generated = Ideal::generate(ring, &[ring.sub(ring.one(), ring.delta(m.x)?)]);
    if ideal.elements().ne(kernel.iter().copied()) || ideal != generated {
        return Err(Error::Consistency(format!(
            "M* at {} is not ker π_x = (1 − Δ_x)",
            m.x
        )));
    }
    Ok(UltraIdeal {
        kind: UltraKind::Star,
        at: m,
        ideal: generated,
    })
}

/// `M♭ = {f : Ω(f) ∈ M}`, checked equal to the unique maximal ideal
/// containing `ker π_x`, which is `π_x⁻¹(m_x)`.
pub fn ideal_flat(ring: &FiniteRing, m: PrincipalMax) -> Result<UltraIdeal> {
    principal_at(ring, m)?;
    let ideal = pull_back(ring, UltraKind::Flat, |a| m.contains(a))?;
    let star = ideal_star(ring, m)?.ideal;
    let max = max_ideals(ring)?;
    let over: Vec<&Ideal> = max.points().iter().filter(|p| star.is_subset(p)).collect();
    match over.as_slice() {
        [p] if **p == ideal => Ok(UltraIdeal {
            kind: UltraKind::Flat,
            at: m,
            ideal: ideal.with_canonical_generators(ring),
        }),
        _ => Err(Error::Consistency(format!(
            "M♭ at {} is not the maximal ideal over ker π_x",
            m.x
        ))),
    }
}

/// `R/M*` with the canonical comparison `f + M* ↦ f_x` into the factor
/// `R_x`, presented as a one-factor product ring.
#[derive(Clone, Debug)]
pub struct Ultraproduct {
    pub quotient: Quotient,
    pub factor: FiniteRing,
    /// `comparison[c]` is the image of class `c` in `factor`.
    pub comparison: Vec<Elem>,
}

impl Ultraproduct {
    /// The comparison map is well defined on classes and an isomorphism.
    pub fn comparison_is_isomorphism(&self, ring: &FiniteRing, x: usize) -> bool {
        let well_defined = ring.elements().all(|f| {
            let v = self
                .factor
                .from_components(&[ring.component(f, x)])
                .expect("one factor");
            self.comparison[self.quotient.project(f).0] == v
        });
        well_defined && is_ring_isomorphism(&self.quotient.ring, &self.factor, &self.comparison)
    }
}

pub fn ultraproduct(ring: &FiniteRing, m: PrincipalMax) -> Result<Ultraproduct> {
    let star = ideal_star(ring, m)?;
    let q = quotient(ring, &star.ideal)?;
    let atom = factors(ring)?[m.x];
    let factor = FiniteRing::product_of(&[atom])?;
    let comparison = q
        .representatives
        .iter()
        .map(|&f| factor.from_components(&[ring.component(f, m.x)]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ultraproduct {
        quotient: q,
        factor,
        comparison,
    })
}

/// `Γ/M♭ → R'/M*'` with `R' = ∏ Z/p_x` the product of residue fields and
/// `f + M♭ ↦ f̄ + M*'`, `f̄` the componentwise reduction.
#[derive(Clone, Debug)]
pub struct ResidueComparison {
    pub flat_quotient: Quotient,
    pub residue_ring: FiniteRing,
    pub star_quotient: Quotient,
    pub map: Vec<Elem>,
}

impl ResidueComparison {
    pub fn is_isomorphism(&self) -> bool {
        is_ring_isomorphism(
            &self.flat_quotient.ring,
            &self.star_quotient.ring,
            &self.map,
        ) && self.star_quotient.ring.is_field()
    }
}

pub fn residue_comparison(gamma: &FiniteRing, m: PrincipalMax) -> Result<ResidueComparison> {
    let atoms = factors(gamma)?;
    let flat = ideal_flat(gamma, m)?;
    let flat_quotient = quotient(gamma, &flat.ideal)?;
    let residue_atoms = atoms
        .iter()
        .map(|a| LocalAtom::field(a.p))
        .collect::<Result<Vec<_>>>()?;
    let (_, labels) = gamma.atoms().expect("checked above");
    let residue_ring = FiniteRing::product(residue_atoms, labels.to_vec())?;
    let star_quotient = quotient(&residue_ring, &ideal_star(&residue_ring, m)?.ideal)?;
    let reduce = |f: Elem| residue_ring.from_components(&gamma.components(f));
    let map = flat_quotient
        .representatives
        .iter()
        .map(|&f| Ok(star_quotient.project(reduce(f)?)))
        .collect::<Result<Vec<_>>>()?;
    // well defined: every f in a class lands on the same image
    for f in gamma.elements() {
        if map[flat_quotient.project(f).0] != star_quotient.project(reduce(f)?) {
            return Err(Error::Consistency(
                "f + M♭ ↦ f̄ + M* is not well defined".into(),
            ));
        }
    }
    Ok(ResidueComparison {
        flat_quotient,
        residue_ring,
        star_quotient,
        map,
    })
}

/// Which support function builds a correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportKind {
    Su,
    Omega,
}

/// A point map from `Spec P(X)` to a site of a product ring: `map[x]` is
/// the site index of the image of `m_x`.
#[derive(Clone, Debug)]
pub struct PointCorrespondence {
    pub kind: SupportKind,
    pub boolean: FiniteBooleanSpectrum,
    pub site: SpecSite,
    pub site_topology: FiniteTopology,
    pub map: Vec<usize>,
}

/// Largest `|X|` for [`phi`] and [`psi`].
pub const MAX_CORRESPONDENCE_UNIVERSE: usize = 5;

/// `φ: Spec P(X) → Min(Λ)`, `M ↦ M*`, for a product of fields `Λ`.
pub fn phi(lambda: &FiniteRing) -> Result<PointCorrespondence> {
    if !factors(lambda)?.iter().all(LocalAtom::is_field) {
        return Err(Error::invalid("φ needs a product of fields"));
    }
    correspondence(lambda, SupportKind::Su, min_primes(lambda)?)
}

/// `ψ: Spec P(X) → Max(Γ)`, `M ↦ M♭`, for a product of local atoms `Γ`.
pub fn psi(gamma: &FiniteRing) -> Result<PointCorrespondence> {
    correspondence(gamma, SupportKind::Omega, max_ideals(gamma)?)
}

fn correspondence(
    ring: &FiniteRing,
    kind: SupportKind,
    site: SpecSite,
) -> Result<PointCorrespondence> {
    let n = factors(ring)?.len();
    if n > MAX_CORRESPONDENCE_UNIVERSE {
        return Err(Error::capacity("label set", n, MAX_CORRESPONDENCE_UNIVERSE));
    }
    let boolean = spec_finite_boolean(n)?;
    let uk = match kind {
        SupportKind::Su => UltraKind::Star,
        SupportKind::Omega => UltraKind::Flat,
    };
    let map = boolean
        .points
        .iter()
        .map(|m| {
            let ideal = pull_back(ring, uk, |a| m.contains(a))?;
            site.position(&ideal).ok_or_else(|| {
                Error::Consistency(format!("image of {m} is not a point of the site"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let site_topology = site.zariski_topology()?;
    Ok(PointCorrespondence {
        kind,
        boolean,
        site,
        site_topology,
        map,
    })
}

impl PointCorrespondence {
    fn support_set(&self, f: Elem) -> FinSubset {
        let s = support(self.site.ring(), f).expect("product ring");
        match self.kind {
            SupportKind::Su => s.su,
            SupportKind::Omega => s.omega,
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.map.len() == self.site.len()
            && image(&self.map, self.boolean.topology.full_set()) == self.site.full_set()
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.boolean
            .topology
            .is_homeomorphism(&self.site_topology, &self.map)
    }

    /// `map⁻¹(site ∩ D(f)) = D(S(f))` with `S` the support function.
    pub fn pulls_back_basic_opens(&self) -> bool {
        self.site.ring().elements().all(|f| {
            crate::spectrum::preimage(&self.map, self.site.d(f))
                == basic_open_of(&self.boolean.points, self.support_set(f))
        })
    }

    /// `η(x)`: the unique site point in `D(Δ_x)`.
    pub fn eta(&self) -> Result<Vec<usize>> {
        let ring = self.site.ring();
        (0..self.boolean.n)
            .map(|x| {
                let d = self.site.d(ring.delta(x)?);
                if d.count_ones() == 1 {
                    Ok(d.trailing_zeros() as usize)
                } else {
                    Err(Error::Consistency(format!(
                        "D(Δ_{x}) has {} points",
                        d.count_ones()
                    )))
                }
            })
            .collect()
    }

    /// `m_x ↦ η(x)` for every `x`.
    pub fn is_eta_compatible(&self) -> Result<bool> {
        Ok(self.eta()? == self.map)
    }

    /// Inverse point map, site index to `x`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![usize::MAX; self.map.len()];
        for (x, &i) in self.map.iter().enumerate() {
            inv[i] = x;
        }
        inv
    }

    /// The extension `φ̃` of `g: X → Y` (Y discrete of size `y_size`) to the
    /// site: `φ̃(P)` is the unique point of `⋂_{f ∉ P} g(S(f))`.
    pub fn extend(&self, g: &[usize], y_size: usize) -> Result<Vec<usize>> {
        if g.len() != self.boolean.n || g.iter().any(|&y| y >= y_size) {
            return Err(Error::invalid("map must send every label into the target"));
        }
        let ring = self.site.ring();
        self.site
            .points()
            .iter()
            .map(|p| {
                let all = (1u64 << y_size) - 1;
                let meet = ring
                    .elements()
                    .filter(|&f| !p.contains(f))
                    .fold(all, |acc, f| {
                        acc & self
                            .support_set(f)
                            .points()
                            .fold(0u64, |m, x| m | 1 << g[x])
                    });
                if meet.count_ones() == 1 {
                    Ok(meet.trailing_zeros() as usize)
                } else {
                    Err(Error::Consistency(format!(
                        "extension meets {} target points",
                        meet.count_ones()
                    )))
                }
            })
            .collect()
    }

    /// Every continuous `h: site → Y` with `h ∘ η = g`, by exhausting all
    /// `|Y|^|site|` maps.
    pub fn factorizations(&self, g: &[usize], y_size: usize) -> Result<Vec<Vec<usize>>> {
        let eta = self.eta()?;
        let target = FiniteTopology::discrete(y_size)?;
        let k = self.site.len();
        let total = y_size
            .checked_pow(k as u32)
            .ok_or_else(|| Error::capacity("map space", usize::MAX, 1 << 20))?;
        if total > 1 << 20 {
            return Err(Error::capacity("map space", total, 1 << 20));
        }
        let mut out = Vec::new();
        for code in 0..total {
            let h: Vec<usize> = (0..k)
                .map(|i| code / y_size.pow(i as u32) % y_size)
                .collect();
            if (0..g.len()).all(|x| h[eta[x]] == g[x])
                && self.site_topology.is_continuous_map(&target, &h)
            {
                out.push(h);
            }
        }
        Ok(out)
    }
}

/// Points of `Min(∏ R/𝔭)`, `Spec(∏ κ(𝔭))` and `Max(∏ R_𝔭)`, each labeled
/// by the prime `𝔭` of `R` whose factor it sits over.
#[derive(Clone, Debug)]
pub struct ThreeSpaces {
    pub primes: Vec<Ideal>,
    pub sites: [SpecSite; 3],
    /// `labels[s][x]`: index in `sites[s]` of the point over prime `x`.
    pub labels: [Vec<usize>; 3],
}

impl ThreeSpaces {
    /// The label-preserving maps between the sites are homeomorphisms.
    pub fn are_canonically_homeomorphic(&self) -> Result<bool> {
        let tops = self
            .sites
            .iter()
            .map(SpecSite::zariski_topology)
            .collect::<Result<Vec<_>>>()?;
        for s in 0..3 {
            for t in 0..3 {
                let mut map = vec![0; self.primes.len()];
                for x in 0..self.primes.len() {
                    map[self.labels[s][x]] = self.labels[t][x];
                }
                if !tops[s].is_homeomorphism(&tops[t], &map) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn three_spaces(ring: &FiniteRing) -> Result<ThreeSpaces> {
    let primes = enumerate_primes(ring)?.points().to_vec();
    let mut domains = Vec::new();
    let mut residue_fields = Vec::new();
    let mut locals = Vec::new();
    for p in &primes {
        domains.push(quotient(ring, p)?.ring);
        let local = localize(ring, &MultSet::complement_of_prime(ring, p)?)?.ring;
        let max = max_ideals(&local)?;
        if max.len() != 1 {
            return Err(Error::Consistency(
                "a localization at a prime is not local".into(),
            ));
        }
        residue_fields.push(quotient(&local, &max.points()[0])?.ring);
        locals.push(local);
    }
    let a = FiniteRing::table_product(&domains)?;
    let b = FiniteRing::table_product(&residue_fields)?;
    let c = FiniteRing::table_product(&locals)?;
    let sites = [min_primes(&a)?, enumerate_primes(&b)?, max_ideals(&c)?];
    let fs = [&domains, &residue_fields, &locals];
    let mut labels: [Vec<usize>; 3] = Default::default();
    for s in 0..3 {
        for x in 0..primes.len() {
            let comps: Vec<Elem> = fs[s]
                .iter()
                .enumerate()
                .map(|(y, r)| if x == y { r.one() } else { r.zero() })
                .collect();
            let delta = FiniteRing::table_embed(fs[s], &comps);
            let d = sites[s].d(delta);
            if d.count_ones() != 1 {
                return Err(Error::Consistency(format!(
                    "D(Δ_{x}) has {} points",
                    d.count_ones()
                )));
            }
            labels[s].push(d.trailing_zeros() as usize);
        }
    }
    Ok(ThreeSpaces {
        primes,
        sites,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[usize]) -> FinSubset {
        FinSubset::from_points(n, pts.iter().copied()).unwrap()
    }

    #[test]
    fn supports_in_z4_squared() {
        let g = FiniteRing::product_pk(&[(2, 2), (2, 2)]).unwrap();
        let s = support(&g, g.from_components(&[2, 1]).unwrap()).unwrap();
        assert_eq!((s.su, s.omega), (set(2, &[0, 1]), set(2, &[1])));
        let s = support(&g, g.zero()).unwrap();
        assert!(s.su.is_empty() && s.omega.is_empty());
        let f = g.from_components(&[2, 2]).unwrap();
        assert!(support(&g, f).unwrap().omega.is_empty());
        assert!(g.jacobson_radical().contains(f));
        assert!(support(&FiniteRing::cyclic(4).unwrap(), Elem(1)).is_err());
    }

    #[test]
    fn star_and_flat() {
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        let star = ideal_star(&v4, PrincipalMax::new(2, 0).unwrap()).unwrap();
        let members: Vec<Vec<u64>> = star.ideal.elements().map(|e| v4.components(e)).collect();
        assert_eq!(members, vec![vec![0, 0], vec![0, 1]]);

        let g = FiniteRing::product_pk(&[(2, 2), (3, 2)]).unwrap();
        let flat = ideal_flat(&g, PrincipalMax::new(2, 1).unwrap()).unwrap();
        assert_eq!(flat.ideal.len(), 12);
        assert!(flat
            .ideal
            .elements()
            .all(|f| g.component(f, 1).is_multiple_of(3)));
        let star = ideal_star(&g, PrincipalMax::new(2, 1).unwrap()).unwrap();
        assert!(star.ideal.is_subset(&flat.ideal));
    }

    #[test]
    fn ultraproducts() {
        let lambda = FiniteRing::product_pk(&[(2, 1), (3, 1)]).unwrap();
        let u = ultraproduct(&lambda, PrincipalMax::new(2, 1).unwrap()).unwrap();
        assert!(u.quotient.ring.is_field());
        assert!(u.comparison_is_isomorphism(&lambda, 1));
        let g = FiniteRing::product_pk(&[(2, 2), (2, 2)]).unwrap();
        let u = ultraproduct(&g, PrincipalMax::new(2, 0).unwrap()).unwrap();
        assert!(u.quotient.ring.is_local() && !u.quotient.ring.is_domain());
        assert!(u.comparison_is_isomorphism(&g, 0));
        let r = residue_comparison(&g, PrincipalMax::new(2, 0).unwrap()).unwrap();
        assert!(r.is_isomorphism());
        assert_eq!(r.star_quotient.ring.order(), 2);
    }

    #[test]
    fn phi_and_psi_on_three_labels() {
        let lambda = FiniteRing::product_pk(&[(2, 1), (3, 1), (5, 1)]).unwrap();
        let p = phi(&lambda).unwrap();
        assert!(p.is_bijective() && p.is_homeomorphism() && p.pulls_back_basic_opens());
        assert!(p.is_eta_compatible().unwrap());
        let gamma = FiniteRing::product_pk(&[(2, 2), (3, 2), (5, 2)]).unwrap();
        let q = psi(&gamma).unwrap();
        assert!(q.is_bijective() && q.is_homeomorphism() && q.pulls_back_basic_opens());
        assert!(q.is_eta_compatible().unwrap());
        assert!(phi(&gamma).is_err());
    }

    #[test]
    fn universal_extension_is_unique() {
        let lambda = FiniteRing::product_pk(&[(2, 1), (3, 1), (5, 1)]).unwrap();
        let p = phi(&lambda).unwrap();
        let g = [0, 1, 1];
        let ext = p.extend(&g, 2).unwrap();
        assert_eq!(p.factorizations(&g, 2).unwrap(), vec![ext]);
    }

    #[test]
    fn three_spaces_of_z12() {
        let r = FiniteRing::cyclic(12).unwrap();
        let t = three_spaces(&r).unwrap();
        assert_eq!(t.primes.len(), 2);
        assert!(t.are_canonically_homeomorphic().unwrap());
    }
}
