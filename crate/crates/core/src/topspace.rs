//! Finite topological spaces.
//!
//! A finite space is the same thing as a preorder on its points: `x ≤ y`
//! iff `x ∈ cl{y}`, and the opens are the up-sets. The maximal ideals of
//! `P(X)` are the `m_y`, and `m_y` Zariski-converges to `x` iff every open
//! containing `x` contains `y`. The Stone-Čech compactification of a finite
//! space is its set of connected components with the discrete topology.
//!
//! The universal property is checked against discrete targets only. A
//! compact Hausdorff target receives a finite space through a finite image,
//! and a finite Hausdorff space is discrete, so nothing is lost.

use serde::{Deserialize, Serialize};

use crate::boolring::{Family, FinSubset, MAX_UNIVERSE};
use crate::ring::FiniteRing;
use crate::spectrum::{enumerate_primes, mask_points, preimage, FiniteTopology};
use crate::{Error, Result};

/// Largest space handled by [`enumerate_spaces`].
pub const MAX_ENUMERATED_POINTS: usize = 4;
/// Largest space handled by [`beta`].
pub const MAX_BETA_POINTS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpace {
    top: FiniteTopology,
}

impl FiniteSpace {
    pub fn new(top: FiniteTopology) -> Result<Self> {
        if top.points() > MAX_UNIVERSE {
            return Err(Error::capacity("finite space", top.points(), MAX_UNIVERSE));
        }
        Ok(FiniteSpace { top })
    }

    /// The space whose specialization preorder is generated by `pairs`,
    /// where `(a, b)` means `a ∈ cl{b}`.
    pub fn from_preorder(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::capacity("finite space", n, MAX_UNIVERSE));
        }
        let mut le = vec![vec![false; n]; n];
        for (x, row) in le.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "pair ({a}, {b}) outside {n} points"
                )));
            }
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        Self::from_relation(&le)
    }

    fn from_relation(le: &[Vec<bool>]) -> Result<Self> {
        let n = le.len();
        let full = (1u64 << n) - 1;
        let opens = (0..=full).filter(|&u| {
            mask_points(u)
                .into_iter()
                .all(|x| (0..n).all(|y| !le[x][y] || u >> y & 1 == 1))
        });
        Self::new(FiniteTopology::from_opens(n, opens)?)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::new(FiniteTopology::discrete(n)?)
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::new(FiniteTopology::indiscrete(n)?)
    }

    /// Opens `∅, {1}, {0, 1}`.
    pub fn sierpinski() -> Self {
        Self::new(FiniteTopology::from_opens(2, [0b00, 0b10, 0b11]).expect("valid")).expect("small")
    }

    /// Disjoint union, the points of `other` numbered after those of `self`.
    pub fn disjoint_union(&self, other: &FiniteSpace) -> Result<Self> {
        let shift = self.points();
        let opens: Vec<u64> = self
            .top
            .opens()
            .flat_map(|u| other.top.opens().map(move |v| u | v << shift))
            .collect();
        Self::new(FiniteTopology::from_opens(shift + other.points(), opens)?)
    }

    pub fn points(&self) -> usize {
        self.top.points()
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.top
    }

    /// `le[x][y]` iff `x ∈ cl{y}`.
    pub fn preorder(&self) -> Vec<Vec<bool>> {
        let n = self.points();
        (0..n)
            .map(|x| (0..n).map(|y| self.top.in_closure_of(x, y)).collect())
            .collect()
    }

    /// The preorder as sorted `(x, y)` pairs with `x ≠ y`.
    pub fn preorder_pairs(&self) -> Vec<(usize, usize)> {
        let le = self.preorder();
        let n = self.points();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && le[x][y])
            .collect()
    }

    fn subset(&self, mask: u64) -> FinSubset {
        FinSubset::new(self.points(), mask).expect("mask within the space")
    }

    /// The maximal ideal `m_y` of `P(X)`.
    pub fn maximal_ideal(&self, y: usize) -> Family {
        Family::principal_maximal(self.points(), y).expect("point in range")
    }

    /// Convergence from the definition: `M ∈ D(U)`, i.e. `U ∉ M`, for
    /// every open `U ∋ x`.
    pub fn family_converges(&self, m: &Family, x: usize) -> bool {
        self.top
            .opens()
            .filter(|u| u >> x & 1 == 1)
            .all(|u| !m.contains(self.subset(u)))
    }

    pub fn converges(&self, y: usize, x: usize) -> bool {
        self.family_converges(&self.maximal_ideal(y), x)
    }

    /// All `(y, x)` with `m_y → x`.
    pub fn convergence(&self) -> Vec<(usize, usize)> {
        let n = self.points();
        (0..n)
            .flat_map(|y| (0..n).map(move |x| (y, x)))
            .filter(|&(y, x)| self.converges(y, x))
            .collect()
    }

    /// `A` is open iff `m_y ∈ D(A)` whenever `m_y` converges to a point of `A`.
    pub fn open_via_convergence(&self, a: u64) -> bool {
        let n = self.points();
        mask_points(a).into_iter().all(|x| {
            (0..n)
                .filter(|&y| self.converges(y, x))
                .all(|y| !self.maximal_ideal(y).contains(self.subset(a)))
        })
    }

    /// `f` is continuous iff `P(f)*(m_y) = {B : f⁻¹(B) ∈ m_y}` converges to
    /// `f(x)` whenever `m_y` converges to `x`.
    pub fn continuous_via_convergence(&self, target: &FiniteSpace, f: &[usize]) -> Result<bool> {
        self.check_map(target, f)?;
        let n = self.points();
        let m = target.points();
        for y in 0..n {
            let my = self.maximal_ideal(y);
            let pushed = Family::filter(m, |b| my.contains(self.subset(preimage(f, b.bits()))))?;
            for x in (0..n).filter(|&x| self.converges(y, x)) {
                if !target.family_converges(&pushed, f[x]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_continuous(&self, target: &FiniteSpace, f: &[usize]) -> Result<bool> {
        self.check_map(target, f)?;
        Ok(self.top.is_continuous_map(&target.top, f))
    }

    fn check_map(&self, target: &FiniteSpace, f: &[usize]) -> Result<()> {
        if f.len() != self.points() || f.iter().any(|&y| y >= target.points()) {
            return Err(Error::invalid(
                "map does not send every point into the target",
            ));
        }
        Ok(())
    }

    /// All maps to `target`, as point lists.
    pub fn all_maps(&self, target_points: usize) -> impl Iterator<Item = Vec<usize>> {
        let n = self.points();
        let total = target_points.pow(n as u32);
        (0..total).map(move |code| {
            (0..n)
                .map(|i| code / target_points.pow(i as u32) % target_points)
                .collect()
        })
    }
}

/// Every topology on `n` labeled points, via all preorders, sorted.
pub fn enumerate_spaces(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > MAX_ENUMERATED_POINTS {
        return Err(Error::capacity(
            "space enumeration",
            n,
            MAX_ENUMERATED_POINTS,
        ));
    }
    let offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for code in 0u32..(1 << offdiag.len()) {
        let mut le = vec![vec![false; n]; n];
        for (x, row) in le.iter_mut().enumerate() {
            row[x] = true;
        }
        for (i, &(x, y)) in offdiag.iter().enumerate() {
            le[x][y] = code >> i & 1 == 1;
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if transitive {
            out.push(FiniteSpace::from_relation(&le)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `βX` for a finite space: a partition of the points with the projection
/// onto the (discrete) set of classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientWitness {
    pub partition: Vec<Vec<usize>>,
    pub projection: Vec<usize>,
}

impl QuotientWitness {
    fn from_projection(projection: Vec<usize>) -> Self {
        let k = projection.iter().max().map_or(0, |m| m + 1);
        let mut partition = vec![Vec::new(); k];
        for (x, &c) in projection.iter().enumerate() {
            partition[c].push(x);
        }
        QuotientWitness {
            partition,
            projection,
        }
    }

    pub fn classes(&self) -> usize {
        self.partition.len()
    }

    /// Quotient topology: class sets whose preimage is open.
    pub fn quotient_topology(&self, space: &FiniteSpace) -> Result<FiniteTopology> {
        let k = self.classes();
        let opens = (0..1u64 << k).filter(|&v| space.top.is_open(preimage(&self.projection, v)));
        FiniteTopology::from_opens(k, opens)
    }

    /// Every continuous map into a discrete space of at most `n` points is
    /// constant on classes, so factors (uniquely, as the projection is onto).
    pub fn factors_all_maps(&self, space: &FiniteSpace) -> Result<bool> {
        partition_factors_all(space, &self.projection)
    }
}

fn partition_factors_all(space: &FiniteSpace, projection: &[usize]) -> Result<bool> {
    let n = space.points();
    for k in 1..=n.max(1) {
        let target = FiniteSpace::discrete(k)?;
        for g in space.all_maps(k) {
            if space.is_continuous(&target, &g)? {
                let constant =
                    (0..n).all(|x| (0..n).all(|y| projection[x] != projection[y] || g[x] == g[y]));
                if !constant {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `βX` as the connected components of `X`.
pub fn beta(space: &FiniteSpace) -> Result<QuotientWitness> {
    if space.points() > MAX_BETA_POINTS {
        return Err(Error::capacity(
            "space for beta",
            space.points(),
            MAX_BETA_POINTS,
        ));
    }
    let comps = space.top.components();
    let mut projection = vec![0; space.points()];
    for (c, &mask) in comps.iter().enumerate() {
        for x in mask_points(mask) {
            projection[x] = c;
        }
    }
    Ok(QuotientWitness::from_projection(projection))
}

/// The relation `x ∼ y` iff every continuous map into a discrete space of
/// at most `n` points agrees on `x` and `y`, as a class projection.
pub fn similarity_classes(space: &FiniteSpace) -> Result<QuotientWitness> {
    let n = space.points();
    let mut same = vec![vec![true; n]; n];
    for k in 1..=n {
        let target = FiniteSpace::discrete(k)?;
        for g in space.all_maps(k) {
            if space.is_continuous(&target, &g)? {
                for x in 0..n {
                    for y in 0..n {
                        same[x][y] &= g[x] == g[y];
                    }
                }
            }
        }
    }
    Ok(QuotientWitness::from_projection(classes_of(&same)))
}

fn classes_of(same: &[Vec<bool>]) -> Vec<usize> {
    let n = same.len();
    let mut projection = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if projection[x] == usize::MAX {
            for y in x..n {
                if same[x][y] {
                    projection[y] = next;
                }
            }
            next += 1;
        }
    }
    projection
}

/// Set partitions of `{0, .., n-1}` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.iter().max().map_or(0, |m| m + 1);
        for c in 0..=top {
            prefix.push(c);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), n, &mut out);
    out
}

/// Every partition whose projection onto a discrete set of classes is
/// continuous and through which every continuous map into a small discrete
/// space factors. `βX` must be the only one.
pub fn universal_partitions(space: &FiniteSpace) -> Result<Vec<QuotientWitness>> {
    let mut out = Vec::new();
    for p in set_partitions(space.points()) {
        let k = p.iter().max().map_or(0, |m| m + 1);
        let discrete = FiniteSpace::discrete(k.max(1))?;
        if space.is_continuous(&discrete, &p)? && partition_factors_all(space, &p)? {
            out.push(QuotientWitness::from_projection(p));
        }
    }
    Ok(out)
}

/// `Clop(f): Clop(Y) → Clop(X)`, `V ↦ f⁻¹(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClopMap {
    pub target_clopens: Vec<u64>,
    pub images: Vec<u64>,
    pub source_points: usize,
    pub target_points: usize,
}

pub fn clop_functor(source: &FiniteSpace, target: &FiniteSpace, f: &[usize]) -> Result<ClopMap> {
    if !source.is_continuous(target, f)? {
        return Err(Error::invalid("Clop is only defined on continuous maps"));
    }
    let target_clopens = target.top.clopens();
    let images = target_clopens.iter().map(|&v| preimage(f, v)).collect();
    Ok(ClopMap {
        target_clopens,
        images,
        source_points: source.points(),
        target_points: target.points(),
    })
}

impl ClopMap {
    fn image_of(&self, v: u64) -> Option<u64> {
        self.target_clopens
            .iter()
            .position(|&c| c == v)
            .map(|i| self.images[i])
    }

    /// Preserves `+`, `·` and `1`.
    pub fn is_ring_map(&self) -> bool {
        let full_t = (1u64 << self.target_points) - 1;
        let full_s = (1u64 << self.source_points) - 1;
        self.image_of(full_t) == Some(full_s)
            && self
                .target_clopens
                .iter()
                .zip(&self.images)
                .all(|(&a, &fa)| {
                    self.target_clopens
                        .iter()
                        .zip(&self.images)
                        .all(|(&b, &fb)| {
                            self.image_of(a ^ b) == Some(fa ^ fb)
                                && self.image_of(a & b) == Some(fa & fb)
                        })
                })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.images.len()
    }
}

pub fn has_dense_image(target: &FiniteSpace, f: &[usize]) -> bool {
    let img = f.iter().fold(0u64, |m, &y| m | 1 << y);
    target.top.closure(img) == target.top.full_set()
}

/// `π₀(X)` against `Spec Clop(X)`.
#[derive(Clone, Debug, Serialize)]
pub struct Pi0Check {
    pub components: Vec<Vec<usize>>,
    pub clopen_count: usize,
    pub spec_points: usize,
    /// `bijection[c]`: the prime `{B : B ∩ C = ∅}` of component `c`, as
    /// an index into the enumerated spectrum.
    pub bijection: Vec<usize>,
    pub holds: bool,
}

/// Builds `Clop(X)` as a table ring, enumerates its primes, and matches
/// component `C` with `{B : B ∩ C = ∅}`. Both sides must be discrete.
pub fn pi0_spec_check(space: &FiniteSpace) -> Result<Pi0Check> {
    let clopens = space.top.clopens();
    let k = clopens.len();
    let index = |v: u64| {
        clopens
            .iter()
            .position(|&c| c == v)
            .expect("clopens form a ring")
    };
    let add: Vec<Vec<usize>> = clopens
        .iter()
        .map(|&a| clopens.iter().map(|&b| index(a ^ b)).collect())
        .collect();
    let mul: Vec<Vec<usize>> = clopens
        .iter()
        .map(|&a| clopens.iter().map(|&b| index(a & b)).collect())
        .collect();
    let ring = FiniteRing::from_tables(k, add, mul, index(0), index(space.top.full_set()))?;
    let spec = enumerate_primes(&ring)?;
    let comps = space.top.components();
    let mut bijection = Vec::new();
    for &c in &comps {
        let members: Vec<bool> = clopens.iter().map(|&b| b & c == 0).collect();
        let found = spec
            .points()
            .iter()
            .position(|p| ring.elements().all(|e| p.contains(e) == members[e.0]));
        match found {
            Some(i) => bijection.push(i),
            None => return Err(Error::Consistency(format!("component {c:#b} has no prime"))),
        }
    }
    let mut sorted = bijection.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let onto = sorted.len() == spec.len() && bijection.len() == spec.len();
    let discrete = spec.zariski_topology()? == FiniteTopology::discrete(spec.len())?;
    let components: Vec<Vec<usize>> = comps.iter().map(|&c| mask_points(c)).collect();
    Ok(Pi0Check {
        components,
        clopen_count: k,
        spec_points: spec.len(),
        bijection,
        holds: onto && discrete,
    })
}

/// Space file: `{"points": n, "opens": [[..], ..]}` or
/// `{"preorder": [[a, b], ..]}` with optional `"points"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preorder: Option<Vec<(usize, usize)>>,
}

impl SpaceDescription {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn build(&self) -> Result<FiniteSpace> {
        match (&self.opens, &self.preorder) {
            (Some(opens), None) => {
                let n = self
                    .points
                    .ok_or_else(|| Error::invalid("`points` is required with `opens`"))?;
                if n > MAX_UNIVERSE {
                    return Err(Error::capacity("finite space", n, MAX_UNIVERSE));
                }
                let masks = opens
                    .iter()
                    .map(|u| {
                        u.iter().try_fold(0u64, |m, &x| {
                            if x < n {
                                Ok(m | 1 << x)
                            } else {
                                Err(Error::invalid(format!("point {x} outside {n} points")))
                            }
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteSpace::new(FiniteTopology::from_opens(n, masks)?)
            }
            (None, Some(pairs)) => {
                let inferred = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
                let n = self.points.unwrap_or(inferred);
                FiniteSpace::from_preorder(n, pairs)
            }
            _ => Err(Error::invalid("give exactly one of `opens` and `preorder`")),
        }
    }

    pub fn of(space: &FiniteSpace) -> Self {
        SpaceDescription {
            points: Some(space.points()),
            opens: Some(space.top.to_lists()),
            preorder: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}
