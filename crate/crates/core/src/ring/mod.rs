//! Finite commutative rings.
//!
//! A [`FiniteRing`] is either a product of local atoms `Z/p^k` indexed by a
//! finite label set, or an explicit pair of Cayley tables. Elements are
//! [`Elem`] indices into `0..order`; for products the index is the
//! mixed-radix encoding of the component vector with the first component
//! most significant, so index order is lexicographic component order.

mod desc;
mod ideal;
mod localize;
mod quotient;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use desc::{RingDescription, TableDescription};
pub use ideal::{enumerate_ideals, Ideal};
pub use localize::{localize, Localization, MultSet};
pub use quotient::{quotient, Quotient};

/// Largest order accepted for a product-of-atoms ring.
pub const PRODUCT_CAP: usize = 4096;
/// Largest order accepted for a table ring.
pub const TABLE_CAP: usize = 256;

/// The local ring `Z/p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalAtom {
    pub p: u32,
    pub k: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl LocalAtom {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::invalid("atom exponent must be at least 1"));
        }
        let order = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if order > PRODUCT_CAP as u64 {
            return Err(Error::capacity(
                "local atom",
                order.min(usize::MAX as u64) as usize,
                PRODUCT_CAP,
            ));
        }
        Ok(LocalAtom { p, k })
    }

    /// The prime field `Z/p`.
    pub fn field(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.k)
    }

    pub fn is_field(&self) -> bool {
        self.k == 1
    }

    /// Whether a residue lies in the maximal ideal `(p)`.
    pub fn in_maximal(&self, v: u64) -> bool {
        v.is_multiple_of(self.p as u64)
    }
}

impl fmt::Display for LocalAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "Z/{}", self.p)
        } else {
            write!(f, "Z/{}^{}", self.p, self.k)
        }
    }
}

/// An element of a [`FiniteRing`], identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug)]
enum Backend {
    Product {
        atoms: Vec<LocalAtom>,
        labels: Vec<String>,
        // strides[i] = product of orders of atoms after i
        strides: Vec<usize>,
    },
    Table {
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        zero: usize,
        one: usize,
    },
}

/// A finite commutative ring with identity.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    backend: Backend,
    order: usize,
}

impl FiniteRing {
    /// The product ring `∏ atoms[i]`, one factor per label.
    pub fn product(atoms: Vec<LocalAtom>, labels: Vec<String>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::invalid("a product needs at least one factor"));
        }
        if atoms.len() != labels.len() {
            return Err(Error::invalid(format!(
                "{} atoms but {} labels",
                atoms.len(),
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::invalid("product labels must be distinct"));
        }
        let mut order: usize = 1;
        for a in &atoms {
            order = order.saturating_mul(a.order());
        }
        if order > PRODUCT_CAP {
            return Err(Error::capacity("product ring", order, PRODUCT_CAP));
        }
        let mut strides = vec![1; atoms.len()];
        for i in (0..atoms.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * atoms[i + 1].order();
        }
        Ok(FiniteRing {
            backend: Backend::Product {
                atoms,
                labels,
                strides,
            },
            order,
        })
    }

    /// Product with labels `a, b, c, ...` (or `x0, x1, ...` past 26 factors).
    pub fn product_of(atoms: &[LocalAtom]) -> Result<Self> {
        let labels = (0..atoms.len()).map(default_label).collect();
        Self::product(atoms.to_vec(), labels)
    }

    /// Convenience: product of atoms given as `(p, k)` pairs.
    pub fn product_pk(factors: &[(u32, u32)]) -> Result<Self> {
        let atoms = factors
            .iter()
            .map(|&(p, k)| LocalAtom::new(p, k))
            .collect::<Result<Vec<_>>>()?;
        Self::product_of(&atoms)
    }

    /// `Z/n` as a table ring with elements the residues `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("Z/0 is not finite"));
        }
        if n > TABLE_CAP {
            return Err(Error::capacity("table ring", n, TABLE_CAP));
        }
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        Ok(Self::from_tables_unchecked(n, add, mul, 0, 1 % n))
    }

    /// A table ring; all ring axioms are checked exhaustively.
    pub fn from_tables(
        n: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("table ring must have at least one element"));
        }
        if n > TABLE_CAP {
            return Err(Error::capacity("table ring", n, TABLE_CAP));
        }
        if add.len() != n || mul.len() != n || add.iter().chain(&mul).any(|r| r.len() != n) {
            return Err(Error::invalid(format!("tables must be {n}x{n}")));
        }
        if zero >= n || one >= n {
            return Err(Error::invalid("zero/one index out of range"));
        }
        let mut flat_add = Vec::with_capacity(n * n);
        let mut flat_mul = Vec::with_capacity(n * n);
        for row in &add {
            for &v in row {
                if v >= n {
                    return Err(Error::invalid(format!("table entry {v} out of range")));
                }
                flat_add.push(v as u16);
            }
        }
        for row in &mul {
            for &v in row {
                if v >= n {
                    return Err(Error::invalid(format!("table entry {v} out of range")));
                }
                flat_mul.push(v as u16);
            }
        }
        // negation must exist before we can build the ring
        for a in 0..n {
            if !(0..n).any(|b| flat_add[a * n + b] as usize == zero) {
                return Err(Error::invalid(format!(
                    "element {a} has no additive inverse"
                )));
            }
        }
        let ring = Self::from_tables_unchecked(n, flat_add, flat_mul, zero, one);
        ring.check_axioms()?;
        Ok(ring)
    }

    pub(crate) fn from_tables_unchecked(
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
    ) -> Self {
        let neg = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| add[a * n + b] as usize == zero)
                    .unwrap_or(zero) as u16
            })
            .collect();
        FiniteRing {
            backend: Backend::Table {
                add,
                mul,
                neg,
                zero,
                one,
            },
            order: n,
        }
    }

    /// Direct product of table-presentable rings, as a table ring.
    ///
    /// Components use the same most-significant-first encoding as
    /// product rings; [`FiniteRing::table_project`] recovers them.
    pub fn table_product(factors: &[FiniteRing]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("a product needs at least one factor"));
        }
        let order = factors
            .iter()
            .fold(1usize, |acc, r| acc.saturating_mul(r.order()));
        if order > TABLE_CAP {
            return Err(Error::capacity("table ring", order, TABLE_CAP));
        }
        let strides = product_strides(factors);
        let decode = |e: usize| -> Vec<usize> {
            factors
                .iter()
                .zip(&strides)
                .map(|(r, s)| (e / s) % r.order())
                .collect()
        };
        let encode = |c: &[usize]| -> usize { c.iter().zip(&strides).map(|(v, s)| v * s).sum() };
        let comps: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut buf = vec![0usize; factors.len()];
        for a in 0..order {
            for b in 0..order {
                for (i, r) in factors.iter().enumerate() {
                    buf[i] = r.add(Elem(comps[a][i]), Elem(comps[b][i])).0;
                }
                add[a * order + b] = encode(&buf) as u16;
                for (i, r) in factors.iter().enumerate() {
                    buf[i] = r.mul(Elem(comps[a][i]), Elem(comps[b][i])).0;
                }
                mul[a * order + b] = encode(&buf) as u16;
            }
        }
        let zero = encode(&factors.iter().map(|r| r.zero().0).collect::<Vec<_>>());
        let one = encode(&factors.iter().map(|r| r.one().0).collect::<Vec<_>>());
        Ok(Self::from_tables_unchecked(order, add, mul, zero, one))
    }

    /// Component `i` of `e` in a ring built by [`FiniteRing::table_product`].
    pub fn table_project(factors: &[FiniteRing], e: Elem, i: usize) -> Elem {
        let strides = product_strides(factors);
        Elem((e.0 / strides[i]) % factors[i].order())
    }

    /// Element of a [`FiniteRing::table_product`] with the given components.
    pub fn table_embed(factors: &[FiniteRing], comps: &[Elem]) -> Elem {
        let strides = product_strides(factors);
        Elem(comps.iter().zip(&strides).map(|(c, s)| c.0 * s).sum())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem)
    }

    pub fn is_product(&self) -> bool {
        matches!(self.backend, Backend::Product { .. })
    }

    /// Factors and labels of a product ring.
    pub fn atoms(&self) -> Option<(&[LocalAtom], &[String])> {
        match &self.backend {
            Backend::Product { atoms, labels, .. } => Some((atoms, labels)),
            Backend::Table { .. } => None,
        }
    }

    /// Component vector of `e`; for a table ring this is `[index]`.
    pub fn components(&self, e: Elem) -> Vec<u64> {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => atoms
                .iter()
                .zip(strides)
                .map(|(a, s)| ((e.0 / s) % a.order()) as u64)
                .collect(),
            Backend::Table { .. } => vec![e.0 as u64],
        }
    }

    /// Component `i` of an element of a product ring.
    pub fn component(&self, e: Elem, i: usize) -> u64 {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => {
                ((e.0 / strides[i]) % atoms[i].order()) as u64
            }
            Backend::Table { .. } => e.0 as u64,
        }
    }

    /// Element with the given components (reduced modulo each atom).
    pub fn from_components(&self, comps: &[u64]) -> Result<Elem> {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => {
                if comps.len() != atoms.len() {
                    return Err(Error::invalid(format!(
                        "expected {} components, got {}",
                        atoms.len(),
                        comps.len()
                    )));
                }
                Ok(Elem(
                    comps
                        .iter()
                        .zip(atoms)
                        .zip(strides)
                        .map(|((&c, a), s)| (c as usize % a.order()) * s)
                        .sum(),
                ))
            }
            Backend::Table { .. } => match comps {
                [i] if (*i as usize) < self.order => Ok(Elem(*i as usize)),
                _ => Err(Error::invalid(
                    "table element must be a single in-range index",
                )),
            },
        }
    }

    /// The Kronecker sequence `Δ_x`: one at factor `x`, zero elsewhere.
    pub fn delta(&self, x: usize) -> Result<Elem> {
        let (atoms, _) = self
            .atoms()
            .ok_or_else(|| Error::invalid("Kronecker deltas need a product ring"))?;
        if x >= atoms.len() {
            return Err(Error::invalid(format!("factor index {x} out of range")));
        }
        let comps: Vec<u64> = (0..atoms.len()).map(|y| u64::from(x == y)).collect();
        self.from_components(&comps)
    }

    pub fn zero(&self) -> Elem {
        match &self.backend {
            Backend::Product { .. } => Elem(0),
            Backend::Table { zero, .. } => Elem(*zero),
        }
    }

    pub fn one(&self) -> Elem {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => Elem(
                atoms
                    .iter()
                    .zip(strides)
                    .map(|(a, s)| (1 % a.order()) * s)
                    .sum(),
            ),
            Backend::Table { one, .. } => Elem(*one),
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => {
                let mut out = 0;
                for (at, s) in atoms.iter().zip(strides) {
                    let m = at.order();
                    out += (((a.0 / s) % m + (b.0 / s) % m) % m) * s;
                }
                Elem(out)
            }
            Backend::Table { add, .. } => Elem(add[a.0 * self.order + b.0] as usize),
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => {
                let mut out = 0;
                for (at, s) in atoms.iter().zip(strides) {
                    let m = at.order();
                    out += (((a.0 / s) % m) * ((b.0 / s) % m) % m) * s;
                }
                Elem(out)
            }
            Backend::Table { mul, .. } => Elem(mul[a.0 * self.order + b.0] as usize),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match &self.backend {
            Backend::Product { atoms, strides, .. } => {
                let mut out = 0;
                for (at, s) in atoms.iter().zip(strides) {
                    let m = at.order();
                    out += ((m - (a.0 / s) % m) % m) * s;
                }
                Elem(out)
            }
            Backend::Table { neg, .. } => Elem(neg[a.0] as usize),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u32) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Human-readable element: `(2,1)` for products, the index for tables.
    pub fn fmt_elem(&self, e: Elem) -> String {
        match &self.backend {
            Backend::Product { .. } => {
                let c: Vec<String> = self.components(e).iter().map(u64::to_string).collect();
                format!("({})", c.join(","))
            }
            Backend::Table { .. } => e.0.to_string(),
        }
    }

    /// Short description such as `Z/4 x Z/3^2` or `table(8)`.
    pub fn describe(&self) -> String {
        match &self.backend {
            Backend::Product { atoms, .. } => atoms
                .iter()
                .map(LocalAtom::to_string)
                .collect::<Vec<_>>()
                .join(" x "),
            Backend::Table { .. } => format!("table({})", self.order),
        }
    }

    /// Exhaustive check of the commutative ring axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let z = self.zero();
        let o = self.one();
        let els: Vec<Elem> = self.elements().collect();
        for &a in &els {
            if self.add(a, z) != a || self.mul(a, o) != a {
                return Err(Error::invalid(format!("identity law fails at {}", a.0)));
            }
            if self.add(a, self.neg(a)) != z {
                return Err(Error::invalid(format!("no additive inverse for {}", a.0)));
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::invalid(format!(
                        "commutativity fails at ({}, {})",
                        a.0, b.0
                    )));
                }
                let ab = self.add(a, b);
                let mab = self.mul(a, b);
                for &c in &els {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::invalid("additive associativity fails"));
                    }
                    if self.mul(mab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::invalid("multiplicative associativity fails"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(mab, self.mul(a, c)) {
                        return Err(Error::invalid("distributivity fails"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn unit_table(&self) -> Vec<bool> {
        let one = self.one();
        let mut units = vec![false; self.order];
        for a in self.elements() {
            if units[a.0] {
                continue;
            }
            if let Some(b) = self.elements().find(|&b| self.mul(a, b) == one) {
                units[a.0] = true;
                units[b.0] = true;
            }
        }
        units
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        let one = self.one();
        self.elements().any(|b| self.mul(a, b) == one)
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        let one = self.one();
        self.elements().find(|&b| self.mul(a, b) == one)
    }

    pub fn units(&self) -> Vec<Elem> {
        let t = self.unit_table();
        self.elements().filter(|e| t[e.0]).collect()
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        // a^n = 0 for some n ≤ order iff nilpotent
        let z = self.zero();
        let mut x = a;
        for _ in 0..=self.order {
            if x == z {
                return true;
            }
            x = self.mul(x, a);
        }
        false
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn nilradical(&self) -> Ideal {
        let nil: Vec<Elem> = self.elements().filter(|&e| self.is_nilpotent(e)).collect();
        Ideal::from_closed_members(self, &nil)
    }

    /// Jacobson radical by the unit criterion: `f ∈ J` iff `1 + fg` is a unit
    /// for every `g`.
    pub fn jacobson_radical(&self) -> Ideal {
        let units = self.unit_table();
        let one = self.one();
        let rad: Vec<Elem> = self
            .elements()
            .filter(|&f| {
                self.elements()
                    .all(|g| units[self.add(one, self.mul(f, g)).0])
            })
            .collect();
        Ideal::from_closed_members(self, &rad)
    }

    pub fn annihilator(&self, f: Elem) -> Ideal {
        let z = self.zero();
        let ann: Vec<Elem> = self.elements().filter(|&g| self.mul(f, g) == z).collect();
        Ideal::from_closed_members(self, &ann)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn is_field(&self) -> bool {
        !self.is_zero_ring() && {
            let units = self.unit_table();
            self.elements().all(|e| e == self.zero() || units[e.0])
        }
    }

    pub fn is_domain(&self) -> bool {
        let z = self.zero();
        !self.is_zero_ring()
            && self
                .elements()
                .all(|a| a == z || self.elements().all(|b| b == z || self.mul(a, b) != z))
    }

    /// Local: the non-units form an additive subgroup (hence the unique
    /// maximal ideal).
    pub fn is_local(&self) -> bool {
        if self.is_zero_ring() {
            return false;
        }
        let units = self.unit_table();
        let non: Vec<Elem> = self.elements().filter(|e| !units[e.0]).collect();
        non.iter()
            .all(|&a| non.iter().all(|&b| !units[self.add(a, b).0]))
    }

    pub fn is_reduced(&self) -> bool {
        self.elements()
            .all(|e| e == self.zero() || !self.is_nilpotent(e))
    }

    /// Every `f` has a `g` with `f = f²g`.
    pub fn is_absolutely_flat(&self) -> bool {
        self.elements().all(|f| {
            let f2 = self.mul(f, f);
            self.elements().any(|g| self.mul(f2, g) == f)
        })
    }

    /// Whether `R/J` is absolutely flat: every `f` has a `g` with
    /// `f - f²g ∈ J`.
    pub fn is_absolutely_flat_mod_jacobson(&self) -> bool {
        let jac = self.jacobson_radical();
        self.elements().all(|f| {
            let f2 = self.mul(f, f);
            self.elements()
                .any(|g| jac.contains(self.sub(f, self.mul(f2, g))))
        })
    }
}

/// Whether `map` (indexed by elements of `src`) is a unital ring
/// homomorphism `src → dst`.
pub fn is_ring_hom(src: &FiniteRing, dst: &FiniteRing, map: &[Elem]) -> bool {
    map.len() == src.order()
        && map.iter().all(|e| e.0 < dst.order())
        && map[src.one().0] == dst.one()
        && src.elements().all(|a| {
            src.elements().all(|b| {
                map[src.add(a, b).0] == dst.add(map[a.0], map[b.0])
                    && map[src.mul(a, b).0] == dst.mul(map[a.0], map[b.0])
            })
        })
}

/// A bijective unital ring homomorphism.
pub fn is_ring_isomorphism(src: &FiniteRing, dst: &FiniteRing, map: &[Elem]) -> bool {
    if src.order() != dst.order() || !is_ring_hom(src, dst, map) {
        return false;
    }
    let mut hit = vec![false; dst.order()];
    map.iter().all(|e| !std::mem::replace(&mut hit[e.0], true))
}

pub(crate) fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

fn product_strides(factors: &[FiniteRing]) -> Vec<usize> {
    let mut strides = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * factors[i + 1].order();
    }
    strides
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_two_fields_is_componentwise() {
        let r = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        assert_eq!(r.order(), 4);
        let a = r.from_components(&[1, 0]).unwrap();
        let b = r.from_components(&[1, 1]).unwrap();
        assert_eq!(r.components(r.add(a, b)), vec![0, 1]);
        assert_eq!(r.components(r.mul(a, b)), vec![1, 0]);
        r.check_axioms().unwrap();
    }

    #[test]
    fn single_atom_is_itself() {
        let r = FiniteRing::product_pk(&[(2, 2)]).unwrap();
        assert_eq!(r.order(), 4);
        let two = r.from_components(&[2]).unwrap();
        assert_eq!(r.mul(two, two), r.zero());
    }

    #[test]
    fn nilpotent_in_z4_times_z9() {
        let r = FiniteRing::product_pk(&[(2, 2), (3, 2)]).unwrap();
        assert_eq!(r.order(), 36);
        let f = r.from_components(&[2, 3]).unwrap();
        assert_ne!(f, r.zero());
        assert_eq!(r.mul(f, f), r.zero());
        // brute force: index of nilpotence is exactly 2
        assert!(r.is_nilpotent(f));
    }

    #[test]
    fn capacity_is_enforced() {
        let err = FiniteRing::product_pk(&[(2, 6), (2, 6), (2, 1)]).unwrap_err();
        assert!(matches!(
            err,
            Error::Capacity {
                size: 8192,
                cap: 4096,
                ..
            }
        ));
        assert!(LocalAtom::new(4, 1).is_err());
        assert!(LocalAtom::new(2, 0).is_err());
        assert!(matches!(
            FiniteRing::cyclic(300),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn radicals() {
        let z4 = FiniteRing::product_pk(&[(2, 2)]).unwrap();
        let j: Vec<u64> = z4
            .jacobson_radical()
            .elements()
            .map(|e| z4.components(e)[0])
            .collect();
        assert_eq!(j, vec![0, 2]);
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        assert_eq!(v4.jacobson_radical().len(), 1);
        let r = FiniteRing::product_pk(&[(2, 2), (3, 2)]).unwrap();
        assert_eq!(r.nilradical().len(), 6);
    }

    #[test]
    fn annihilator_is_generated_by_complementary_idempotent() {
        let r = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        let f = r.from_components(&[1, 0]).unwrap();
        let e = r.from_components(&[0, 1]).unwrap();
        assert_eq!(r.annihilator(f), Ideal::generate(&r, &[e]));
    }

    #[test]
    fn absolute_flatness_mod_jacobson() {
        assert!(FiniteRing::product_pk(&[(2, 2)])
            .unwrap()
            .is_absolutely_flat_mod_jacobson());
        let v4 = FiniteRing::product_pk(&[(2, 1), (2, 1)]).unwrap();
        assert!(v4.is_absolutely_flat());
        assert!(FiniteRing::product_pk(&[(2, 2), (3, 1), (5, 2)])
            .unwrap()
            .is_absolutely_flat_mod_jacobson());
        assert!(!FiniteRing::product_pk(&[(2, 2)])
            .unwrap()
            .is_absolutely_flat());
    }

    #[test]
    fn table_validation_rejects_bad_tables() {
        // multiplication not distributive
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteRing::from_tables(2, add, mul, 0, 1).is_err());
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let f2 = FiniteRing::from_tables(2, add, mul, 0, 1).unwrap();
        assert!(f2.is_field());
    }

    #[test]
    fn table_product_matches_componentwise() {
        let f = [
            FiniteRing::cyclic(2).unwrap(),
            FiniteRing::cyclic(3).unwrap(),
        ];
        let r = FiniteRing::table_product(&f).unwrap();
        r.check_axioms().unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.idempotents().len(), 4);
        for e in r.elements() {
            let a = FiniteRing::table_project(&f, e, 0);
            let b = FiniteRing::table_project(&f, e, 1);
            assert_eq!(e.0, a.0 * 3 + b.0);
        }
    }

    #[test]
    fn local_field_domain_predicates() {
        let z4 = FiniteRing::cyclic(4).unwrap();
        assert!(z4.is_local() && !z4.is_domain() && !z4.is_field());
        let z5 = FiniteRing::cyclic(5).unwrap();
        assert!(z5.is_local() && z5.is_domain() && z5.is_field());
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert!(!z6.is_local() && z6.is_reduced());
        assert_eq!(z6.units(), vec![Elem(1), Elem(5)]);
    }
}
