use std::collections::BTreeSet;

use serde::Serialize;

use crate::{Error, Result};

/// Most points a materialized topology may have.
pub const MAX_POINTS: usize = 64;

fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn points_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// How one topology relates to another on the same point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// Strictly more opens.
    Finer,
    Coarser,
    Equal,
    Incomparable,
}

/// An explicit family of open sets on `{0, .., n-1}`, each a bit mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTopology {
    n: usize,
    opens: BTreeSet<u64>,
}

impl FiniteTopology {
    /// Validates the topology axioms.
    pub fn from_opens(n: usize, opens: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::capacity("topology point set", n, MAX_POINTS));
        }
        let opens: BTreeSet<u64> = opens.into_iter().collect();
        let all = full(n);
        if opens.iter().any(|&u| u & !all != 0) {
            return Err(Error::invalid(
                "open set mentions a point outside the space",
            ));
        }
        if !opens.contains(&0) || !opens.contains(&all) {
            return Err(Error::invalid(
                "opens must include the empty set and the whole space",
            ));
        }
        for &a in &opens {
            for &b in &opens {
                if !opens.contains(&(a | b)) || !opens.contains(&(a & b)) {
                    return Err(Error::invalid(
                        "opens are not closed under union and intersection",
                    ));
                }
            }
        }
        Ok(FiniteTopology { n, opens })
    }

    /// All unions of the given basis sets (plus `∅`).
    pub fn from_basis(n: usize, basis: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::capacity("topology point set", n, MAX_POINTS));
        }
        let mut opens: BTreeSet<u64> = BTreeSet::new();
        opens.insert(0);
        for b in basis {
            let extra: Vec<u64> = opens.iter().map(|&o| o | b).collect();
            opens.extend(extra);
        }
        opens.insert(full(n));
        Ok(FiniteTopology { n, opens })
    }

    /// Topology generated by a subbasis: all unions of finite intersections.
    pub fn from_subbasis(n: usize, subbasis: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut basis: BTreeSet<u64> = BTreeSet::new();
        basis.insert(full(n));
        for s in subbasis {
            let extra: Vec<u64> = basis.iter().map(|&b| b & s).collect();
            basis.extend(extra);
        }
        Self::from_basis(n, basis)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::from_basis(n, (0..n).map(|i| 1u64 << i))
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::from_opens(n, [0, full(n)])
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> u64 {
        full(self.n)
    }

    pub fn opens(&self) -> impl Iterator<Item = u64> + '_ {
        self.opens.iter().copied()
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, set: u64) -> bool {
        self.opens.contains(&set)
    }

    pub fn is_closed(&self, set: u64) -> bool {
        self.is_open(!set & self.full_set())
    }

    pub fn is_clopen(&self, set: u64) -> bool {
        self.is_open(set) && self.is_closed(set)
    }

    pub fn clopens(&self) -> Vec<u64> {
        self.opens().filter(|&u| self.is_closed(u)).collect()
    }

    /// Smallest open containing `x`.
    pub fn minimal_neighborhood(&self, x: usize) -> u64 {
        self.opens()
            .filter(|u| u >> x & 1 == 1)
            .fold(self.full_set(), |a, u| a & u)
    }

    pub fn closure(&self, set: u64) -> u64 {
        let all = self.full_set();
        self.opens()
            .map(|u| !u & all)
            .filter(|c| set & !c == 0)
            .fold(all, |a, c| a & c)
    }

    /// `x ∈ cl{y}`, i.e. every open containing `x` contains `y`.
    pub fn in_closure_of(&self, x: usize, y: usize) -> bool {
        self.closure(1 << y) >> x & 1 == 1
    }

    pub fn compare(&self, other: &FiniteTopology) -> Result<Comparison> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "point sets differ: {} vs {} points",
                self.n, other.n
            )));
        }
        let sup = other.opens.is_subset(&self.opens);
        let sub = self.opens.is_subset(&other.opens);
        Ok(match (sup, sub) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Finer,
            (false, true) => Comparison::Coarser,
            (false, false) => Comparison::Incomparable,
        })
    }

    pub fn is_hausdorff(&self) -> bool {
        let nbhd: Vec<u64> = (0..self.n).map(|x| self.minimal_neighborhood(x)).collect();
        (0..self.n).all(|x| (x + 1..self.n).all(|y| nbhd[x] & nbhd[y] == 0))
    }

    /// Connected components, each a point mask, sorted by least point.
    ///
    /// In a finite space the component of `x` is the union of the chains
    /// of specializations through it, so components are the classes of the
    /// relation generated by `x ∈ cl{y}`.
    pub fn components(&self) -> Vec<u64> {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(self.n);
        for y in 0..self.n {
            let cl = self.closure(1 << y);
            for x in points_of(cl) {
                uf.union(x, y);
            }
        }
        let labels = uf.into_labeling();
        let mut comps: Vec<u64> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match seen.iter().position(|&s| s == l) {
                Some(i) => comps[i] |= 1 << x,
                None => {
                    seen.push(l);
                    comps.push(1 << x);
                }
            }
        }
        comps
    }

    pub fn is_totally_disconnected(&self) -> bool {
        self.components().iter().all(|c| c.count_ones() == 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// `map` sends point `i` here to point `map[i]` of `target`; continuous
    /// iff every open of `target` pulls back to an open.
    pub fn is_continuous_map(&self, target: &FiniteTopology, map: &[usize]) -> bool {
        map.len() == self.n
            && map.iter().all(|&y| y < target.n)
            && target.opens().all(|v| self.is_open(preimage(map, v)))
    }

    /// Bijective, continuous, and open.
    pub fn is_homeomorphism(&self, target: &FiniteTopology, map: &[usize]) -> bool {
        if self.n != target.n || !self.is_continuous_map(target, map) {
            return false;
        }
        let mut hit = 0u64;
        for &y in map {
            hit |= 1 << y;
        }
        hit == target.full_set() && self.opens().all(|u| target.is_open(image(map, u)))
    }

    /// Opens as sorted point lists, in sorted order.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.opens().map(points_of).collect();
        v.sort();
        v
    }
}

/// `{i : map[i] ∈ set}`.
pub fn preimage(map: &[usize], set: u64) -> u64 {
    map.iter()
        .enumerate()
        .filter(|(_, &y)| set >> y & 1 == 1)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// `{map[i] : i ∈ set}`.
pub fn image(map: &[usize], set: u64) -> u64 {
    points_of(set).into_iter().fold(0, |m, i| m | 1 << map[i])
}

/// Points of a mask, ascending.
pub fn mask_points(mask: u64) -> Vec<usize> {
    points_of(mask)
}
