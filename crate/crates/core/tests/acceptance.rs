//! Acceptance criteria 1 to 9. Each criterion runs its property suite and
//! then an oracle written here, independent of the library's own checks.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.

use std::collections::BTreeMap;

use stonespec::boolring::FinSubset;
use stonespec::corpus;
use stonespec::ring::{Elem, FiniteRing, MultSet};
use stonespec::spectrum::{max_ideals, min_primes, Comparison};
use stonespec::stone::{maximal_ideals_exhaustive, spec_finite_boolean};
use stonespec::topspace::enumerate_spaces;
use stonespec::ultra::{ideal_flat, ideal_star, phi, psi, PrincipalMax};
use stonespec::verify::{self, Config, Record};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs one suite and requires every record to pass.
fn suite(id: &str) -> Result<Vec<Record>, String> {
    let report = verify::run(&[id], &Config::default()).map_err(|e| e.to_string())?;
    if let Some(f) = report.failures().next() {
        return Err(format!(
            "{} failed on {}: {}",
            f.property, f.instance, f.witness
        ));
    }
    ensure(!report.records.is_empty(), || {
        format!("suite {id} produced no records")
    })?;
    Ok(report.records)
}

fn count(records: &[Record], property_prefix: &str) -> usize {
    records
        .iter()
        .filter(|r| r.property.starts_with(property_prefix))
        .count()
}

fn rings_up_to(max: usize) -> Vec<corpus::CorpusRing> {
    corpus::rings(max).expect("corpus")
}

/// `π(f)` nilpotent in `S⁻¹R` iff `u·f^n = 0` for some `u ∈ S`, `n ≥ 1`.
fn nil_after_localizing(r: &FiniteRing, s: &MultSet, f: Elem) -> bool {
    let mut power = f;
    for _ in 0..=r.order() {
        if s.elements().any(|u| r.mul(u, power) == r.zero()) {
            return true;
        }
        power = r.mul(power, f);
    }
    false
}

fn localization_kernel() -> Outcome {
    let records = suite("localization-kernel")?;
    let mut sets = 0;
    for c in rings_up_to(24) {
        let r = &c.ring;
        for s in MultSet::enumerate_all(r) {
            let loc = stonespec::ring::localize(r, &s).map_err(|e| e.to_string())?;
            let contraction = loc.nil_contraction(r);
            for f in r.elements() {
                let by_product = s.elements().any(|g| r.is_nilpotent(r.mul(f, g)));
                let by_powers = nil_after_localizing(r, &s, f);
                ensure(
                    by_product == by_powers && by_powers == contraction.contains(f),
                    || format!("{}: element {} disagrees", c.name, r.fmt_elem(f)),
                )?;
            }
            sets += 1;
        }
    }
    // the literal kernel is smaller in general: Z/4 with S = {1}
    let z4 = FiniteRing::cyclic(4).map_err(|e| e.to_string())?;
    let trivial = MultSet::new(&z4, &[z4.one()]).map_err(|e| e.to_string())?;
    let loc = stonespec::ring::localize(&z4, &trivial).map_err(|e| e.to_string())?;
    ensure(
        loc.kernel(&z4).len() == 1 && loc.nil_contraction(&z4).len() == 2,
        || "Z/4 kernel check".into(),
    )?;
    Ok(format!(
        "{} rings, {sets} multiplicative sets, zero mismatches",
        records.len()
    ))
}

fn minimal_primes() -> Outcome {
    let records = suite("minimal-primes")?;
    // each Z/p^k is local with a single prime, so a product has one
    // minimal prime per factor
    let mut products = 0;
    for c in corpus::products(64, 6) {
        let n = c.ring.atoms().map(|(a, _)| a.len()).unwrap_or(0);
        let min = min_primes(&c.ring).map_err(|e| e.to_string())?;
        ensure(min.len() == n, || {
            format!("{}: {} minimal primes", c.name, min.len())
        })?;
        products += 1;
    }
    Ok(format!(
        "{} rings agree; {products} products have one minimal prime per factor",
        records.len()
    ))
}

fn zariski_vs_flat() -> Outcome {
    let records = suite("zariski-vs-flat")?;
    let rings = rings_up_to(64);
    ensure(
        count(&records, "Zariski = flat on Max") == rings.len(),
        || "Max comparison missing".into(),
    )?;
    let mut absolutely_flat = 0;
    for c in &rings {
        let min = min_primes(&c.ring).map_err(|e| e.to_string())?;
        let cmp = min
            .zariski_topology()
            .and_then(|z| z.compare(&min.flat_topology()?))
            .map_err(|e| e.to_string())?;
        ensure(matches!(cmp, Comparison::Finer | Comparison::Equal), || {
            format!("{}: Min {cmp:?}", c.name)
        })?;
        // R/J is a product of fields for every product of local rings
        if c.ring.is_product() {
            ensure(c.ring.is_absolutely_flat_mod_jacobson(), || {
                format!("{}: R/J not flat", c.name)
            })?;
            absolutely_flat += 1;
        }
        let max = max_ideals(&c.ring).map_err(|e| e.to_string())?;
        // Max of a finite ring is a finite T1 space, hence discrete
        let discrete =
            stonespec::spectrum::FiniteTopology::discrete(max.len()).map_err(|e| e.to_string())?;
        ensure(
            max.zariski_topology().map_err(|e| e.to_string())? == discrete,
            || format!("{}: Max not discrete", c.name),
        )?;
    }
    Ok(format!(
        "{} rings; {absolutely_flat} products with R/J absolutely flat",
        rings.len()
    ))
}

fn stone_cech_discrete() -> Outcome {
    let records = suite("stone-cech-discrete")?;
    let bijections = count(&records, "φ:") + count(&records, "ψ:");
    ensure(bijections >= 2 * 3 * 4, || {
        format!("only {bijections} correspondences checked")
    })?;
    // |X| = 3, |Y| = 2: all 8 maps factor uniquely through Min(Λ) and Max(Γ)
    let lambda = FiniteRing::product_pk(&[(2, 1), (3, 1), (5, 1)]).map_err(|e| e.to_string())?;
    let gamma = FiniteRing::product_pk(&[(2, 2), (3, 2), (2, 1)]).map_err(|e| e.to_string())?;
    let mut maps = 0;
    for corr in [phi(&lambda), psi(&gamma)] {
        let corr = corr.map_err(|e| e.to_string())?;
        for code in 0..8usize {
            let g: Vec<usize> = (0..3).map(|i| code >> i & 1).collect();
            let f = corr.factorizations(&g, 2).map_err(|e| e.to_string())?;
            ensure(f.len() == 1, || {
                format!("map {g:?} has {} factorizations", f.len())
            })?;
            let eta = corr.eta().map_err(|e| e.to_string())?;
            ensure((0..3).all(|x| f[0][eta[x]] == g[x]), || {
                format!("map {g:?} not extended")
            })?;
            maps += 1;
        }
    }
    Ok(format!(
        "{bijections} correspondences; all {} maps 3 → 2 factor uniquely through Min(Λ) and Max(Γ)",
        maps / 2
    ))
}

fn ultra_rings() -> Outcome {
    let records = suite("ultra-rings")?;
    let mut checked = 0;
    for c in corpus::products(64, 4) {
        let (atoms, _) = c.ring.atoms().expect("product");
        for (x, atom) in atoms.iter().enumerate() {
            let m = PrincipalMax::new(atoms.len(), x).map_err(|e| e.to_string())?;
            let star = ideal_star(&c.ring, m).map_err(|e| e.to_string())?;
            let flat = ideal_flat(&c.ring, m).map_err(|e| e.to_string())?;
            // |R/M*| = |R_x| and |R/M♭| = p
            ensure(star.ideal.len() * atom.order() == c.ring.order(), || {
                format!("{}: |M*| at {x}", c.name)
            })?;
            ensure(flat.ideal.len() * atom.p as usize == c.ring.order(), || {
                format!("{}: |M♭| at {x}", c.name)
            })?;
            checked += 1;
        }
    }
    let degenerate = count(&records, "fraction-field clause");
    Ok(format!(
        "{checked} ultra-rings; fraction-field clause degenerate on {degenerate} field products"
    ))
}

fn alexandroff() -> Outcome {
    let records = suite("alexandroff")?;
    let covers = count(&records, "presented covers");
    ensure(covers == 20, || format!("{covers} covers"))?;
    let levels = count(&records, "every maximal ideal of the finite/cofinite ring");
    ensure(levels >= 4, || format!("{levels} truncation levels"))?;
    let sampled = records
        .iter()
        .find(|r| r.property.starts_with("the point at infinity"))
        .ok_or("no maximality record")?;
    ensure(sampled.witness.starts_with("100 "), || {
        sampled.witness.clone()
    })?;
    Ok(format!(
        "100 witnesses, {levels} truncations, {covers} covers"
    ))
}

fn clopen_round_trip() -> Outcome {
    let records = suite("clopen-round-trip")?;
    let rings = count(&records, "R' → Spec(R') → Clop → R'");
    ensure(rings >= 10, || format!("{rings} generated rings"))?;
    let gens: Vec<usize> = verify::sample_generator_lists()
        .iter()
        .map(Vec::len)
        .collect();
    ensure(
        gens.iter().all(|&g| g <= 3) && (0..=3).all(|k| gens.contains(&k)),
        || format!("generator counts {gens:?}"),
    )?;
    let spaces = count(&records, "π₀(X) ≅ Spec Clop(X)");
    ensure(spaces == 29 + 355, || format!("{spaces} spaces"))?;
    Ok(format!(
        "{rings} rings round trip; π₀ ≅ Spec Clop on {spaces} spaces"
    ))
}

fn finite_stone_cech() -> Outcome {
    let records = suite("finite-stone-cech")?;
    let sizes: Vec<usize> = (1..=4)
        .map(|n| enumerate_spaces(n).map(|s| s.len()).unwrap_or(0))
        .collect();
    ensure(sizes == [1, 4, 29, 355], || {
        format!("space counts {sizes:?}")
    })?;
    let mut per_property: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &records {
        *per_property.entry(r.property.as_str()).or_default() += 1;
    }
    let beta = per_property
        .get("βX is the space of components, universal among discrete targets")
        .copied()
        .unwrap_or(0);
    let conv = per_property
        .get("openness via Zariski convergence matches the topology")
        .copied()
        .unwrap_or(0);
    ensure(beta == 389 && conv == 389, || {
        format!("{beta} β checks, {conv} convergence checks")
    })?;
    Ok(format!(
        "{beta} spaces; β, convergence and Clop oracles agree"
    ))
}

/// Every unital ring map `P(X) → P(Y)` by brute force over functions on
/// bit masks.
fn brute_force_homs(n: usize, m: usize) -> usize {
    let src = 1usize << n;
    let dst = 1u64 << m;
    let (zero, full_src, full_dst) = (0usize, src - 1, dst - 1);
    let free: Vec<usize> = (0..src).filter(|&a| a != zero && a != full_src).collect();
    let mut f = vec![0u64; src];
    f[full_src] = full_dst;
    let total = (dst as usize).pow(free.len() as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            for &a in &free {
                f[a] = (c % dst as usize) as u64;
                c /= dst as usize;
            }
            (0..src).all(|a| (0..src).all(|b| f[a ^ b] == f[a] ^ f[b] && f[a & b] == f[a] & f[b]))
        })
        .count()
}

fn counting() -> Outcome {
    suite("counting")?;
    for n in 1..=3usize {
        for m in 1..=3usize {
            let found = brute_force_homs(n, m);
            ensure(found == n.pow(m as u32), || {
                format!("|X| = {n}, |Y| = {m}: {found} maps")
            })?;
        }
    }
    for n in 1..=5 {
        let s = spec_finite_boolean(n).map_err(|e| e.to_string())?;
        ensure(s.points.len() == n, || {
            format!("|Spec P({n})| = {}", s.points.len())
        })?;
    }
    for n in 1..=4 {
        let all = maximal_ideals_exhaustive(n).map_err(|e| e.to_string())?;
        ensure(
            all.len() == n && all.iter().all(|m| m.len() == 1 << (n - 1)),
            || format!("scan at {n}"),
        )?;
        ensure(all.iter().all(|m| m.contains(FinSubset::empty(n))), || {
            "∅ missing".into()
        })?;
    }
    Ok("|Hom(P(X), P(Y))| = |X|^|Y| by brute force; |Spec P(X)| = |X| up to 5".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("localization kernel", localization_kernel),
        ("minimal primes", minimal_primes),
        ("Zariski vs flat", zariski_vs_flat),
        ("Stone-Čech of finite discrete spaces", stone_cech_discrete),
        ("ultra-rings", ultra_rings),
        ("Alexandroff compactification", alexandroff),
        ("clopen round trip", clopen_round_trip),
        ("finite-space Stone-Čech", finite_stone_cech),
        ("counting", counting),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
