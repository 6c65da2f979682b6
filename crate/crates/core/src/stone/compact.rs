use serde::Serialize;

use super::spec_finite_boolean;
use crate::boolring::{AtomDecomposition, BoolRing, Family, FinSubset, UpSet, MAX_GENERATORS};
use crate::{Error, Result};

/// A point of `Spec(R')` for a subring `R'` of `P(N)` or `P(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StonePoint {
    /// `m_x ∩ R' = {A : x ∉ A}`.
    #[serde(rename = "principal")]
    Principal(usize),
    /// `{A : A ∩ C finite}` for an infinite atom `C`.
    #[serde(rename = "infinity_atom")]
    Infinity(UpSet),
    /// A maximal ideal of a finite power set ring, listed in full.
    #[serde(rename = "explicit")]
    Explicit(Family),
}

impl StonePoint {
    /// Whether the symbolic set `a` lies in the ideal this point denotes.
    pub fn ideal_contains(&self, a: &UpSet) -> Result<bool> {
        match self {
            StonePoint::Principal(x) => Ok(!a.contains(*x)),
            StonePoint::Infinity(c) => Ok(c.intersect(a).is_finite()),
            StonePoint::Explicit(_) => {
                Err(Error::invalid("explicit points hold finite subsets only"))
            }
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, StonePoint::Infinity(_))
    }
}

/// A basic open `D(A)`: the naturals in `A` and a flag per infinity point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicOpen {
    pub naturals: UpSet,
    pub infinity: Vec<bool>,
}

impl BasicOpen {
    pub fn is_empty(&self) -> bool {
        self.naturals.is_empty() && !self.infinity.iter().any(|&b| b)
    }
}

/// `Spec(R')` for `R'` generated by `Fin(N)` and finitely many ultimately
/// periodic sets: the naturals, embedded by `η(x) = m_x ∩ R'`, plus one
/// point per infinite atom of the generated algebra.
#[derive(Clone, Debug)]
pub struct Compactification {
    ring: BoolRing,
    decomposition: AtomDecomposition,
    infinity: Vec<UpSet>,
}

/// The compactification of `N` whose clopen trace is the ring generated by
/// `Fin(N)` and `generators`. No generators gives the one-point
/// compactification.
pub fn compactify(generators: Vec<UpSet>) -> Result<Compactification> {
    let ring = if generators.is_empty() {
        BoolRing::FinCofin
    } else {
        BoolRing::generated(generators)?
    };
    Compactification::of_ring(ring)
}

/// `αN = Spec` of the finite/cofinite ring.
pub fn alexandroff() -> Compactification {
    Compactification::of_ring(BoolRing::FinCofin).expect("one atom")
}

impl Compactification {
    pub fn of_ring(ring: BoolRing) -> Result<Self> {
        let decomposition = ring.decomposition()?;
        let infinity = decomposition.infinite_atoms().cloned().collect();
        Ok(Compactification {
            ring,
            decomposition,
            infinity,
        })
    }

    pub fn ring(&self) -> &BoolRing {
        &self.ring
    }

    pub fn decomposition(&self) -> &AtomDecomposition {
        &self.decomposition
    }

    /// Infinite atoms, in canonical order; one point at infinity each.
    pub fn infinity_atoms(&self) -> &[UpSet] {
        &self.infinity
    }

    pub fn points_at_infinity(&self) -> Vec<StonePoint> {
        self.infinity
            .iter()
            .cloned()
            .map(StonePoint::Infinity)
            .collect()
    }

    pub fn eta(&self, x: usize) -> StonePoint {
        StonePoint::Principal(x)
    }

    pub fn is_point(&self, p: &StonePoint) -> bool {
        match p {
            StonePoint::Principal(_) => true,
            StonePoint::Infinity(c) => self.infinity.contains(c),
            StonePoint::Explicit(_) => false,
        }
    }

    fn require_member(&self, a: &UpSet) -> Result<()> {
        if self.ring.contains(a)? {
            Ok(())
        } else {
            Err(Error::invalid(format!("{a} is not an element of the ring")))
        }
    }

    fn require_point(&self, p: &StonePoint) -> Result<()> {
        if self.is_point(p) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "{p:?} is not a point of this space"
            )))
        }
    }

    /// `D(A) = {x : x ∈ A} ∪ {∞_C : A ∩ C infinite}`.
    pub fn basic_open(&self, a: &UpSet) -> Result<BasicOpen> {
        self.require_member(a)?;
        Ok(BasicOpen {
            naturals: a.clone(),
            infinity: self
                .infinity
                .iter()
                .map(|c| !c.intersect(a).is_finite())
                .collect(),
        })
    }

    pub fn in_basic_open(&self, p: &StonePoint, a: &UpSet) -> Result<bool> {
        self.require_member(a)?;
        self.require_point(p)?;
        Ok(!p.ideal_contains(a)?)
    }

    /// Some `A ∈ R'` with `p ∈ D(A)` and `q ∈ D(1 + A)`.
    pub fn separate(&self, p: &StonePoint, q: &StonePoint) -> Result<UpSet> {
        self.require_point(p)?;
        self.require_point(q)?;
        let a = match (p, q) {
            _ if p == q => return Err(Error::invalid("a point cannot be separated from itself")),
            (StonePoint::Principal(x), _) => UpSet::finite(&[*x]),
            (StonePoint::Infinity(c), StonePoint::Principal(y)) => {
                c.difference(&UpSet::finite(&[*y]))
            }
            (StonePoint::Infinity(c), _) => c.clone(),
            (StonePoint::Explicit(_), _) => unreachable!("rejected by require_point"),
        };
        debug_assert!(self.ring.contains(&a).unwrap_or(false));
        Ok(a)
    }

    /// Checks that `a` separates `p` from `q`.
    pub fn separates(&self, p: &StonePoint, q: &StonePoint, a: &UpSet) -> Result<bool> {
        Ok(self.in_basic_open(p, a)? && self.in_basic_open(q, &a.complement())?)
    }

    /// `D(A)` and `D(1 + A)` partition the space, so `D(A)` is clopen.
    pub fn is_basic_clopen(&self, a: &UpSet) -> Result<bool> {
        let d = self.basic_open(a)?;
        let e = self.basic_open(&a.complement())?;
        Ok(d.naturals.is_disjoint(&e.naturals)
            && d.naturals.union(&e.naturals).is_naturals()
            && d.infinity.iter().zip(&e.infinity).all(|(x, y)| x != y))
    }

    /// A nonempty `D(A)` meets `η(N)`.
    pub fn basic_open_meets_image(&self, a: &UpSet) -> Result<bool> {
        let d = self.basic_open(a)?;
        Ok(d.is_empty() || d.naturals.least().is_some())
    }

    /// Whether `B ⊆ N` is the trace `K ∩ N` of a clopen `K`. The point
    /// `∞_C` has neighborhood basis `D(C ∖ F)`, `F` finite, so `B` extends
    /// to a clopen iff each infinite atom meets `B` or `N ∖ B` finitely.
    pub fn is_clopen_trace(&self, b: &UpSet) -> bool {
        self.infinity
            .iter()
            .all(|c| c.intersect(b).is_finite() || c.difference(b).is_finite())
    }

    /// The ring of clopen traces, presented by the infinite atoms.
    pub fn clopen_trace_ring(&self) -> Result<BoolRing> {
        if self.infinity.len() > MAX_GENERATORS {
            return Err(Error::capacity(
                "infinite atoms",
                self.infinity.len(),
                MAX_GENERATORS,
            ));
        }
        BoolRing::generated(self.infinity.clone())
    }
}

/// `m + rA = 1` with `m ∈ M`, certifying that `M` and `A` generate the ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalityWitness {
    pub m: UpSet,
    pub r: UpSet,
}

/// Certificate that the ideal `M` is maximal at `A`: for `A ∉ M` returns
/// `m = Aᶜ ∈ M` and `r = 1`, checked to satisfy `m + rA = 1`.
pub fn maximality_witness(
    ring: &BoolRing,
    point: &StonePoint,
    a: &UpSet,
) -> Result<MaximalityWitness> {
    if !ring.contains(a)? {
        return Err(Error::invalid(format!("{a} is not an element of the ring")));
    }
    if let StonePoint::Infinity(c) = point {
        if !ring.decomposition()?.infinite_atoms().any(|x| x == c) {
            return Err(Error::invalid(format!(
                "{c} is not an infinite atom of the ring"
            )));
        }
    }
    if point.ideal_contains(a)? {
        return Err(Error::invalid(format!("{a} already lies in the ideal")));
    }
    let m = a.complement();
    let r = UpSet::naturals();
    if !ring.contains(&m)?
        || !point.ideal_contains(&m)?
        || !m.sym_diff(&r.intersect(a)).is_naturals()
    {
        return Err(Error::Consistency(format!(
            "complement witness failed for {a}"
        )));
    }
    Ok(MaximalityWitness { m, r })
}

/// Outcome of [`check_cover`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverCheck {
    /// Indices into the presented list, ascending.
    Subcover(Vec<usize>),
    Uncovered(StonePoint),
}

/// Decides whether `{D(A_i)}` covers the space. A cover is reduced to a
/// subcover greedily: take the set covering most new infinity points, then
/// most new naturals below a window past every threshold and period.
pub fn check_cover(c: &Compactification, opens: &[UpSet]) -> Result<CoverCheck> {
    for a in opens {
        c.require_member(a)?;
    }
    let union = opens.iter().fold(UpSet::empty(), |u, a| u.union(a));
    if let Some(x) = union.complement().least() {
        return Ok(CoverCheck::Uncovered(StonePoint::Principal(x)));
    }
    let hits: Vec<Vec<bool>> = opens
        .iter()
        .map(|a| {
            c.infinity
                .iter()
                .map(|atom| !atom.intersect(a).is_finite())
                .collect()
        })
        .collect();
    for (k, atom) in c.infinity.iter().enumerate() {
        if !hits.iter().any(|h| h[k]) {
            return Ok(CoverCheck::Uncovered(StonePoint::Infinity(atom.clone())));
        }
    }

    let window = window_for(opens.iter().chain(&c.infinity));
    let mut order: Vec<usize> = (0..opens.len()).collect();
    order.sort_by(|&i, &j| opens[i].cmp(&opens[j]).then(i.cmp(&j)));
    let mut uncovered = UpSet::naturals();
    let mut pending = vec![true; c.infinity.len()];
    let mut chosen = Vec::new();
    while !uncovered.is_empty() || pending.iter().any(|&p| p) {
        let gain = |i: usize| {
            let inf = (0..pending.len())
                .filter(|&k| pending[k] && hits[i][k])
                .count();
            let nat = (0..window)
                .filter(|&x| uncovered.contains(x) && opens[i].contains(x))
                .count();
            (inf, nat)
        };
        // strict comparison keeps the first maximum in canonical order
        let mut best = order[0];
        for &i in &order[1..] {
            if gain(i) > gain(best) {
                best = i;
            }
        }
        if gain(best) == (0, 0) {
            return Err(Error::Consistency("greedy cover made no progress".into()));
        }
        chosen.push(best);
        uncovered = uncovered.difference(&opens[best]);
        for k in 0..pending.len() {
            pending[k] &= !hits[best][k];
        }
    }
    chosen.sort_unstable();
    Ok(CoverCheck::Subcover(chosen))
}

/// A bound `W` such that every nonempty Boolean combination of `sets` has a
/// member below `W`.
fn window_for<'a>(sets: impl Iterator<Item = &'a UpSet>) -> usize {
    let (t, l) = sets.fold((0usize, 1usize), |(t, l), s| {
        (t.max(s.threshold()), lcm(l, s.period()))
    });
    t + l
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Classifies the maximal ideals of the finite subalgebra of the
/// finite/cofinite ring made of subsets of `[0, level)` and their unions
/// with `{n ≥ level}`. The algebra is `P({0, .., level})`, the last point
/// standing for the tail; each maximal ideal is matched against the
/// principal points `0..level` and the point at infinity.
pub fn fincofin_truncation_points(level: usize) -> Result<Vec<StonePoint>> {
    let n = level + 1;
    let spec = spec_finite_boolean(n)?;
    let embed = |s: FinSubset| {
        let head: Vec<usize> = s.points().filter(|&x| x < level).collect();
        let fin = UpSet::finite(&head);
        if s.contains(level) {
            fin.union(&UpSet::at_least(level))
        } else {
            fin
        }
    };
    let mut candidates: Vec<StonePoint> = (0..level).map(StonePoint::Principal).collect();
    candidates.push(StonePoint::Infinity(UpSet::naturals()));
    spec.points
        .iter()
        .map(|m| {
            let matches: Vec<&StonePoint> = candidates
                .iter()
                .filter(|p| {
                    FinSubset::all(n)
                        .all(|s| p.ideal_contains(&embed(s)).ok() == Some(m.contains(s)))
                })
                .collect();
            match matches.as_slice() {
                [p] => Ok((*p).clone()),
                _ => Err(Error::Consistency(format!(
                    "maximal ideal {m} matches {} candidate points",
                    matches.len()
                ))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexandroff_neighborhoods_of_infinity() {
        let a = alexandroff();
        assert_eq!(a.infinity_atoms(), &[UpSet::naturals()]);
        let inf = &a.points_at_infinity()[0];
        assert!(a.in_basic_open(inf, &UpSet::at_least(3)).unwrap());
        assert!(!a.in_basic_open(inf, &UpSet::finite(&[0, 1])).unwrap());
        assert!(a.basic_open(&UpSet::evens()).is_err());
    }

    #[test]
    fn evens_give_two_points_at_infinity() {
        let c = compactify(vec![UpSet::evens()]).unwrap();
        assert_eq!(c.infinity_atoms().len(), 2);
        let finite = compactify(vec![UpSet::finite(&[0, 1, 2])]).unwrap();
        assert_eq!(finite.infinity_atoms().len(), 1);
    }

    #[test]
    fn witnesses() {
        let fc = BoolRing::FinCofin;
        let fin = StonePoint::Infinity(UpSet::naturals());
        let w = maximality_witness(&fc, &fin, &UpSet::at_least(3)).unwrap();
        assert_eq!(w.m, UpSet::finite(&[0, 1, 2]));
        let w = maximality_witness(&fc, &StonePoint::Principal(5), &UpSet::finite(&[5])).unwrap();
        assert_eq!(w.m, UpSet::cofinite(&[5]));
        assert!(maximality_witness(&fc, &StonePoint::Principal(5), &UpSet::finite(&[4])).is_err());
        let g = BoolRing::generated(vec![UpSet::evens()]).unwrap();
        let w =
            maximality_witness(&g, &StonePoint::Infinity(UpSet::evens()), &UpSet::evens()).unwrap();
        assert_eq!(w.m, UpSet::odds());
    }

    #[test]
    fn covers() {
        let a = alexandroff();
        let opens = [UpSet::finite(&[0]), UpSet::finite(&[1]), UpSet::at_least(1)];
        assert_eq!(
            check_cover(&a, &opens).unwrap(),
            CoverCheck::Subcover(vec![0, 2])
        );
        let c = compactify(vec![UpSet::evens()]).unwrap();
        let opens = [
            UpSet::evens().union(&UpSet::finite(&[1])),
            UpSet::odds().union(&UpSet::finite(&[0])),
        ];
        assert_eq!(
            check_cover(&c, &opens).unwrap(),
            CoverCheck::Subcover(vec![0, 1])
        );
        let missing = [UpSet::finite(&[0, 1, 2])];
        assert_eq!(
            check_cover(&a, &missing).unwrap(),
            CoverCheck::Uncovered(StonePoint::Principal(3))
        );
        assert!(check_cover(&a, &[UpSet::evens()]).is_err());
    }

    #[test]
    fn truncations_classify() {
        let pts = fincofin_truncation_points(3).unwrap();
        assert_eq!(pts.iter().filter(|p| p.is_infinity()).count(), 1);
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn clopen_traces() {
        let c = compactify(vec![UpSet::evens()]).unwrap();
        assert!(c.clopen_trace_ring().unwrap().same_ring(c.ring()).unwrap());
        assert!(c.is_clopen_trace(&UpSet::odds()));
        assert!(!c.is_clopen_trace(&UpSet::multiples_of(4).unwrap()));
    }
}
