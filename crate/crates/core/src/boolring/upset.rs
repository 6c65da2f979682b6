use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An ultimately periodic subset of the naturals.
///
/// Below `threshold` membership is read from `head`; from `threshold` on,
/// `n` is a member iff `residues[n mod period]`. Values are always kept in
/// canonical form (minimal period, then minimal threshold), so derived
/// equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpSet {
    threshold: usize,
    head: Vec<bool>,
    period: usize,
    residues: Vec<bool>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl UpSet {
    /// Builds and canonicalizes `(threshold, head, period, residues)`.
    pub fn new(
        threshold: usize,
        head: &[usize],
        period: usize,
        residues: &[usize],
    ) -> Result<Self> {
        if period == 0 {
            return Err(Error::invalid("period must be at least 1"));
        }
        let mut h = vec![false; threshold];
        for &x in head {
            if x >= threshold {
                return Err(Error::invalid(format!(
                    "head element {x} is not below threshold {threshold}"
                )));
            }
            h[x] = true;
        }
        let mut r = vec![false; period];
        for &x in residues {
            if x >= period {
                return Err(Error::invalid(format!(
                    "residue {x} is not below period {period}"
                )));
            }
            r[x] = true;
        }
        Ok(Self::from_parts(h, r))
    }

    fn from_parts(head: Vec<bool>, residues: Vec<bool>) -> Self {
        UpSet {
            threshold: head.len(),
            head,
            period: residues.len(),
            residues,
        }
        .canonicalize()
    }

    /// Minimal period, then minimal threshold. Idempotent.
    pub fn canonicalize(self) -> Self {
        let UpSet {
            mut threshold,
            mut head,
            period,
            residues,
        } = self;
        let mut p = period;
        for d in 1..=period {
            if period % d == 0 && (0..period).all(|r| residues[r] == residues[(r + d) % period]) {
                p = d;
                break;
            }
        }
        let residues: Vec<bool> = residues[..p].to_vec();
        while threshold > 0 && head[threshold - 1] == residues[(threshold - 1) % p] {
            threshold -= 1;
        }
        head.truncate(threshold);
        UpSet {
            threshold,
            head,
            period: p,
            residues,
        }
    }

    pub fn empty() -> Self {
        Self::from_parts(vec![], vec![false])
    }

    pub fn naturals() -> Self {
        Self::from_parts(vec![], vec![true])
    }

    pub fn finite(points: &[usize]) -> Self {
        let t = points.iter().max().map_or(0, |m| m + 1);
        let mut head = vec![false; t];
        for &x in points {
            head[x] = true;
        }
        Self::from_parts(head, vec![false])
    }

    pub fn cofinite(missing: &[usize]) -> Self {
        Self::finite(missing).complement()
    }

    /// `{n : n ≥ k}`.
    pub fn at_least(k: usize) -> Self {
        Self::from_parts(vec![false; k], vec![true])
    }

    /// `{n : n mod period = r}`.
    pub fn residue_class(period: usize, r: usize) -> Result<Self> {
        Self::new(0, &[], period, &[r])
    }

    pub fn multiples_of(period: usize) -> Result<Self> {
        Self::residue_class(period, 0)
    }

    pub fn evens() -> Self {
        Self::from_parts(vec![], vec![true, false])
    }

    pub fn odds() -> Self {
        Self::from_parts(vec![], vec![false, true])
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn head(&self) -> Vec<usize> {
        (0..self.threshold).filter(|&i| self.head[i]).collect()
    }

    pub fn residues(&self) -> Vec<usize> {
        (0..self.period).filter(|&i| self.residues[i]).collect()
    }

    pub fn contains(&self, n: usize) -> bool {
        if n < self.threshold {
            self.head[n]
        } else {
            self.residues[n % self.period]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.threshold == 0 && !self.residues[0] && self.period == 1
    }

    pub fn is_finite(&self) -> bool {
        self.residues.iter().all(|r| !r)
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues.iter().all(|&r| r)
    }

    pub fn is_naturals(&self) -> bool {
        self.threshold == 0 && self.is_cofinite()
    }

    /// Elements of a finite set, `None` for an infinite one.
    pub fn finite_elements(&self) -> Option<Vec<usize>> {
        self.is_finite().then(|| self.head())
    }

    /// Smallest member, if any.
    pub fn least(&self) -> Option<usize> {
        (0..self.threshold + self.period).find(|&n| self.contains(n))
    }

    /// Smallest member not below `k`, if any.
    pub fn least_from(&self, k: usize) -> Option<usize> {
        (k..k.max(self.threshold) + self.period).find(|&n| self.contains(n))
    }

    /// Applies a pointwise Boolean operation.
    pub fn combine(&self, other: &UpSet, op: impl Fn(bool, bool) -> bool) -> UpSet {
        let t = self.threshold.max(other.threshold);
        let l = lcm(self.period, other.period);
        let head = (0..t)
            .map(|n| op(self.contains(n), other.contains(n)))
            .collect();
        let residues = (0..l)
            .map(|r| {
                let n = t + (r + l - t % l) % l;
                op(self.contains(n), other.contains(n))
            })
            .collect();
        Self::from_parts(head, residues)
    }

    /// Ring addition.
    pub fn sym_diff(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a != b)
    }

    /// Ring multiplication.
    pub fn intersect(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn difference(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> UpSet {
        UpSet {
            threshold: self.threshold,
            head: self.head.iter().map(|b| !b).collect(),
            period: self.period,
            residues: self.residues.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &UpSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &UpSet) -> bool {
        self.intersect(other).is_empty()
    }

    /// Parses JSON (`{"head": .., "threshold": .., "period": .., "residues": ..}`,
    /// `{"finite": [..]}`, `{"cofinite": [..]}`) or a shorthand:
    /// `{0,1,2}`, `{}`, `{n>=3}`, `{n%6==1}`, `{n%6 in {1,5}}`,
    /// `{n>=4: n%2==1}`, `N\{0,3}`, `N`, `evens`, `odds`, each optionally
    /// prefixed with `!` for the complement, and unions joined by `∪`.
    /// Everything `Display` prints parses back.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.contains('∪') {
            return t.split('∪').try_fold(Self::empty(), |acc, part| {
                Ok(acc.union(&Self::parse(part)?))
            });
        }
        if let Some(rest) = t.strip_prefix('!') {
            return Ok(Self::parse(rest)?.complement());
        }
        let parse_err = |msg: String| Error::Parse {
            location: format!("set `{t}`"),
            message: msg,
        };
        match t {
            "N" => return Ok(Self::naturals()),
            "evens" => return Ok(Self::evens()),
            "odds" => return Ok(Self::odds()),
            _ => {}
        }
        if t.starts_with('{') && t.contains('"') {
            return serde_json::from_str(t).map_err(|e| parse_err(e.to_string()));
        }
        if let Some(missing) = t.strip_prefix("N\\") {
            return Ok(Self::parse(missing)?.complement());
        }
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| parse_err("expected braces".into()))?
            .trim();
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| parse_err(e.to_string()))
        };
        let nums = |s: &str| -> Result<Vec<usize>> {
            let s = s.trim();
            if s.is_empty() {
                Ok(Vec::new())
            } else {
                s.split(',').map(num).collect()
            }
        };
        // `n%p==r` or `n%p in {r,..}`
        let rule = |s: &str| -> Result<(usize, Vec<usize>)> {
            let rest = s
                .trim()
                .strip_prefix("n%")
                .ok_or_else(|| parse_err("expected n%p==r or n%p in {..}".into()))?;
            let (p, rs) = if let Some((p, r)) = rest.split_once("==") {
                (num(p)?, vec![num(r)?])
            } else if let Some((p, rs)) = rest.split_once(" in ") {
                let rs = rs
                    .trim()
                    .strip_prefix('{')
                    .and_then(|x| x.strip_suffix('}'));
                (
                    num(p)?,
                    nums(rs.ok_or_else(|| parse_err("expected {..} after `in`".into()))?)?,
                )
            } else {
                return Err(parse_err("expected n%p==r or n%p in {..}".into()));
            };
            if p == 0 || rs.iter().any(|&r| r >= p) {
                return Err(parse_err(format!("residues must lie in 0..{p}")));
            }
            Ok((p, rs))
        };
        if let Some(k) = inner.strip_prefix("n>=") {
            return match k.split_once(':') {
                Some((k, r)) => {
                    let (p, rs) = rule(r)?;
                    Self::new(num(k)?, &[], p, &rs)
                }
                None => Ok(Self::at_least(num(k)?)),
            };
        }
        if inner.starts_with("n%") {
            let (p, rs) = rule(inner)?;
            return Self::new(0, &[], p, &rs);
        }
        Ok(Self::finite(&nums(inner)?))
    }
}

impl fmt::Debug for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        if self.is_finite() {
            write!(f, "{{{}}}", list(self.head()))
        } else if self.is_cofinite() {
            let missing = self.complement().head();
            if missing.is_empty() {
                write!(f, "N")
            } else {
                write!(f, "N\\{{{}}}", list(missing))
            }
        } else {
            let residues = self.residues();
            let rule = match residues.as_slice() {
                [r] => format!("n%{}=={r}", self.period),
                _ => format!("n%{} in {{{}}}", self.period, list(residues)),
            };
            let head = self.head();
            if !head.is_empty() {
                write!(f, "{{{}}} ∪ ", list(head))?;
            }
            if self.threshold == 0 {
                write!(f, "{{{rule}}}")
            } else {
                write!(f, "{{n>={}: {rule}}}", self.threshold)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Full {
        head: Vec<usize>,
        threshold: usize,
        period: usize,
        residues: Vec<usize>,
    },
    Finite {
        finite: Vec<usize>,
    },
    Cofinite {
        cofinite: Vec<usize>,
    },
}

impl Serialize for UpSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr::Full {
            head: self.head(),
            threshold: self.threshold,
            period: self.period,
            residues: self.residues(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UpSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Full {
                head,
                threshold,
                period,
                residues,
            } => UpSet::new(threshold, &head, period, &residues).map_err(serde::de::Error::custom),
            Repr::Finite { finite } => Ok(UpSet::finite(&finite)),
            Repr::Cofinite { cofinite } => Ok(UpSet::cofinite(&cofinite)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let a = UpSet::new(4, &[0, 2], 2, &[0]).unwrap();
        assert_eq!(
            (a.threshold(), a.head(), a.period(), a.residues()),
            (0, vec![], 2, vec![0])
        );
        assert_eq!(a, UpSet::evens());
        let b = UpSet::new(0, &[], 4, &[0, 2]).unwrap();
        assert_eq!((b.period(), b.residues()), (2, vec![0]));
        let c = UpSet::new(1, &[0], 1, &[]).unwrap();
        assert_eq!(c.finite_elements(), Some(vec![0]));
        assert_eq!(c.clone().canonicalize(), c);
    }

    #[test]
    fn ring_operations() {
        assert!(UpSet::evens().sym_diff(&UpSet::odds()).is_naturals());
        let a = UpSet::new(3, &[1], 5, &[2, 4]).unwrap();
        assert!(a.sym_diff(&a).is_empty());
        let six = UpSet::evens().intersect(&UpSet::multiples_of(3).unwrap());
        assert_eq!(six, UpSet::multiples_of(6).unwrap());
        for n in 0..100 {
            assert_eq!(six.contains(n), n % 6 == 0);
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(UpSet::parse("{n>=3}").unwrap(), UpSet::cofinite(&[0, 1, 2]));
        assert_eq!(UpSet::parse("{0,5}").unwrap(), UpSet::finite(&[0, 5]));
        assert_eq!(UpSet::parse("{n%2==1}").unwrap(), UpSet::odds());
        assert_eq!(UpSet::parse("!evens").unwrap(), UpSet::odds());
        assert_eq!(
            UpSet::parse(r#"{"cofinite": [1]}"#).unwrap(),
            UpSet::cofinite(&[1])
        );
        assert_eq!(
            UpSet::parse(r#"{"head": [0,2], "threshold": 4, "period": 2, "residues": [0]}"#)
                .unwrap(),
            UpSet::evens()
        );
        assert!(UpSet::parse("{n%0==0}").is_err());
        assert!(UpSet::parse("{a}").is_err());
        assert!(
            UpSet::parse(r#"{"head": [5], "threshold": 4, "period": 2, "residues": [0]}"#).is_err()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(UpSet::evens().to_string(), "{n%2==0}");
        assert_eq!(
            UpSet::new(0, &[], 6, &[1, 5]).unwrap().to_string(),
            "{n%6 in {1,5}}"
        );
        assert_eq!(
            UpSet::new(5, &[1, 2], 2, &[1]).unwrap().to_string(),
            "{1,2} ∪ {n>=4: n%2==1}"
        );
        assert_eq!(UpSet::cofinite(&[0, 3]).to_string(), "N\\{0,3}");
        assert_eq!(UpSet::finite(&[]).to_string(), "{}");
    }

    #[test]
    fn display_parses_back() {
        let sets = [
            UpSet::evens(),
            UpSet::new(5, &[1, 2], 2, &[1]).unwrap(),
            UpSet::new(3, &[0], 6, &[1, 5]).unwrap(),
            UpSet::cofinite(&[0, 3]),
            UpSet::naturals(),
            UpSet::empty(),
            UpSet::finite(&[4, 9]),
        ];
        for a in sets {
            assert_eq!(UpSet::parse(&a.to_string()).unwrap(), a, "{a}");
        }
        assert_eq!(
            UpSet::parse("{0} ∪ odds").unwrap(),
            UpSet::odds().union(&UpSet::finite(&[0]))
        );
    }

    #[test]
    fn serde_round_trip() {
        let a = UpSet::new(3, &[1], 6, &[2, 3]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<UpSet>(&json).unwrap(), a);
    }

    #[test]
    fn min_helpers() {
        assert_eq!(UpSet::empty().least(), None);
        assert_eq!(UpSet::odds().least_from(4), Some(5));
        assert_eq!(UpSet::finite(&[2]).least_from(3), None);
    }
}
