//! Deterministic corpora of small rings used by the property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{Elem, FiniteRing, LocalAtom};
use crate::Result;

#[derive(Clone, Debug)]
pub struct CorpusRing {
    pub name: String,
    pub ring: FiniteRing,
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Every `Z/p^k` of order at most `max_order`, smallest first.
pub fn atoms_up_to(max_order: usize) -> Vec<LocalAtom> {
    let mut out = Vec::new();
    for p in (2..=max_order as u32).filter(|&p| is_prime(p)) {
        let mut k = 1;
        while (p as usize).pow(k) <= max_order {
            out.push(LocalAtom::new(p, k).expect("prime"));
            k += 1;
        }
    }
    out.sort_by_key(|a| (a.order(), a.p));
    out
}

/// All products of local atoms (as multisets, nondecreasing by order) with
/// total order at most `max_order` and at most `max_factors` factors.
pub fn products(max_order: usize, max_factors: usize) -> Vec<CorpusRing> {
    let atoms = atoms_up_to(max_order);
    let mut out = Vec::new();
    let mut stack: Vec<LocalAtom> = Vec::new();
    fn go(
        atoms: &[LocalAtom],
        start: usize,
        order: usize,
        max_order: usize,
        max_factors: usize,
        stack: &mut Vec<LocalAtom>,
        out: &mut Vec<CorpusRing>,
    ) {
        if !stack.is_empty() {
            let ring = FiniteRing::product_of(stack).expect("within caps");
            out.push(CorpusRing {
                name: ring.describe(),
                ring,
            });
        }
        if stack.len() == max_factors {
            return;
        }
        for (i, a) in atoms.iter().enumerate().skip(start) {
            if order * a.order() <= max_order {
                stack.push(*a);
                go(
                    atoms,
                    i,
                    order * a.order(),
                    max_order,
                    max_factors,
                    stack,
                    out,
                );
                stack.pop();
            }
        }
    }
    go(&atoms, 0, 1, max_order, max_factors, &mut stack, &mut out);
    out.sort_by(|a, b| (a.ring.order(), &a.name).cmp(&(b.ring.order(), &b.name)));
    out
}

/// Products whose factors are all fields.
pub fn field_products(max_order: usize, max_factors: usize) -> Vec<CorpusRing> {
    products(max_order, max_factors)
        .into_iter()
        .filter(|c| {
            c.ring
                .atoms()
                .is_some_and(|(a, _)| a.iter().all(LocalAtom::is_field))
        })
        .collect()
}

/// `Z/m[x]/(x^d + c_{d-1} x^{d-1} + .. + c_0)`, elements encoded as
/// coefficient vectors with the constant term most significant.
pub fn polynomial_quotient(m: usize, tail: &[usize]) -> Result<FiniteRing> {
    let d = tail.len();
    let n = m.pow(d as u32);
    let decode =
        |e: usize| -> Vec<usize> { (0..d).map(|i| e / m.pow((d - 1 - i) as u32) % m).collect() };
    let encode = |c: &[usize]| -> usize { c.iter().fold(0, |acc, &v| acc * m + v) };
    let mul_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
        let mut prod = vec![0usize; 2 * d];
        for i in 0..d {
            for j in 0..d {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
            }
        }
        // x^d = -(c_0 + .. + c_{d-1} x^{d-1})
        for k in (d..2 * d).rev() {
            let c = prod[k];
            prod[k] = 0;
            for (i, &t) in tail.iter().enumerate() {
                prod[k - d + i] = (prod[k - d + i] + m * m - c * t % m) % m;
            }
        }
        prod.truncate(d);
        prod
    };
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        let ca = decode(a);
        for b in 0..n {
            let cb = decode(b);
            let s: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % m).collect();
            add[a][b] = encode(&s);
            mul[a][b] = encode(&mul_poly(&ca, &cb));
        }
    }
    let mut one = vec![0; d];
    one[0] = 1 % m;
    FiniteRing::from_tables(n, add, mul, 0, encode(&one))
}

/// `F_p ⋉ F_p^dim`: `(a, v)(b, w) = (ab, aw + bv)`, local with square-zero
/// maximal ideal.
pub fn trivial_extension(p: usize, dim: usize) -> Result<FiniteRing> {
    let n = p.pow(dim as u32 + 1);
    let decode =
        |e: usize| -> Vec<usize> { (0..=dim).map(|i| e / p.pow((dim - i) as u32) % p).collect() };
    let encode = |c: &[usize]| -> usize { c.iter().fold(0, |acc, &v| acc * p + v) };
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        let ca = decode(a);
        for b in 0..n {
            let cb = decode(b);
            let s: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            let mut t = vec![ca[0] * cb[0] % p];
            t.extend((1..=dim).map(|i| (ca[0] * cb[i] + cb[0] * ca[i]) % p));
            add[a][b] = encode(&s);
            mul[a][b] = encode(&t);
        }
    }
    FiniteRing::from_tables(
        n,
        add,
        mul,
        0,
        encode(&{
            let mut one = vec![0; dim + 1];
            one[0] = 1;
            one
        }),
    )
}

/// Table rings that are not products of `Z/p^k`, plus a few cyclic ones.
pub fn table_rings(max_order: usize) -> Result<Vec<CorpusRing>> {
    let mut out: Vec<CorpusRing> = Vec::new();
    let mut push = |name: &str, r: FiniteRing| {
        if r.order() <= max_order {
            out.push(CorpusRing {
                name: name.to_string(),
                ring: r,
            });
        }
    };
    for n in [6, 8, 12, 18, 24, 30, 36, 48, 60] {
        if n <= max_order {
            push(&format!("Z/{n} (table)"), FiniteRing::cyclic(n)?);
        }
    }
    push("F4", polynomial_quotient(2, &[1, 1])?);
    push("Z/2[x]/(x^2)", polynomial_quotient(2, &[0, 0])?);
    push("Z/3[x]/(x^2)", polynomial_quotient(3, &[0, 0])?);
    push("Z/2[x]/(x^3)", polynomial_quotient(2, &[0, 0, 0])?);
    push("Z/2[x]/(x^3+x+1)", polynomial_quotient(2, &[1, 1, 0])?);
    push("F9", polynomial_quotient(3, &[1, 0])?);
    push("Z/4[x]/(x^2+x+1)", polynomial_quotient(4, &[1, 1])?);
    push("Z/2[x]/(x^2+x)", polynomial_quotient(2, &[0, 1])?);
    push("Z/2[x,y]/(x,y)^2", trivial_extension(2, 2)?);
    push("Z/3[x,y]/(x,y)^2", trivial_extension(3, 2)?);
    push("Z/2[x,y,z]/(x,y,z)^2", trivial_extension(2, 3)?);
    if max_order >= 8 {
        let f4 = polynomial_quotient(2, &[1, 1])?;
        push(
            "F4 x Z/2 (table)",
            FiniteRing::table_product(&[f4.clone(), FiniteRing::cyclic(2)?])?,
        );
        if max_order >= 16 {
            let d = polynomial_quotient(2, &[0, 0])?;
            push("F4 x Z/2[x]/(x^2)", FiniteRing::table_product(&[f4, d])?);
        }
    }
    if max_order >= 32 {
        let d = polynomial_quotient(2, &[0, 0])?;
        push(
            "Z/2[x]/(x^2) x Z/2[x,y]/(x,y)^2",
            FiniteRing::table_product(&[d, trivial_extension(2, 2)?])?,
        );
    }
    out.sort_by(|a, b| (a.ring.order(), &a.name).cmp(&(b.ring.order(), &b.name)));
    Ok(out)
}

/// Products (up to six factors) followed by table rings.
pub fn rings(max_order: usize) -> Result<Vec<CorpusRing>> {
    let mut out = products(max_order, 6);
    out.extend(table_rings(max_order)?);
    Ok(out)
}

/// Isomorphic copies of corpus rings with element indices shuffled, drawn
/// from a seeded generator.
pub fn scrambled_rings(seed: u64, count: usize, max_order: usize) -> Result<Vec<CorpusRing>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = rings(max_order.min(64))?;
    let mut out = Vec::new();
    for i in 0..count {
        let pick = &base[rng.gen_range(0..base.len())];
        let n = pick.ring.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut add = vec![vec![0; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a]][perm[b]] = perm[pick.ring.add(Elem(a), Elem(b)).0];
                mul[perm[a]][perm[b]] = perm[pick.ring.mul(Elem(a), Elem(b)).0];
            }
        }
        let ring = FiniteRing::from_tables(
            n,
            add,
            mul,
            perm[pick.ring.zero().0],
            perm[pick.ring.one().0],
        )?;
        out.push(CorpusRing {
            name: format!("scrambled #{i} of {}", pick.name),
            ring,
        });
    }
    Ok(out)
}
