//! Executable property suites, each addressable by a stable id.
//!
//! Every suite returns one [`Record`] per instance. Records are sorted
//! canonically, so a report is byte-identical across runs for the same
//! configuration; timings are kept out of the report itself.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolring::{BoolRing, Family, FinSubset, UpSet};
use crate::corpus::{self, CorpusRing};
use crate::ring::{localize, Elem, FiniteRing, Ideal, LocalAtom, MultSet, RingDescription};
use crate::spectrum::{
    enumerate_primes, max_ideals, min_primes, preimage, Comparison, FiniteTopology, SpecSite,
};
use crate::stone::{
    alexandroff, basic_open_of, check_cover, compactify, count_ring_maps, filter_basic_open,
    fincofin_truncation_points, maximal_ideals_exhaustive, maximality_witness, preimage_map,
    ring_maps, spec_finite_boolean, CoverCheck, StonePoint, Ultrafilter,
};
use crate::topspace::{
    beta, clop_functor, enumerate_spaces, has_dense_image, pi0_spec_check, similarity_classes,
    universal_partitions, FiniteSpace, SpaceDescription,
};
use crate::ultra::{
    ideal_flat, ideal_star, phi, psi, residue_comparison, support, three_spaces, ultraproduct,
    PointCorrespondence, PrincipalMax,
};
use crate::{Error, Result};

/// Caps and seed shared by all suites.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest ring order for ideal enumeration.
    pub max_ring: usize,
    /// Largest number of points for exhaustive space corpora.
    pub max_space: usize,
    pub seed: u64,
    /// Extra shuffled copies of corpus rings; zero keeps corpora exhaustive only.
    pub scrambled: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_ring: 64,
            max_space: 4,
            seed: 0,
            scrambled: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Record {
    pub suite: String,
    pub property: String,
    pub instance: String,
    pub pass: bool,
    pub witness: String,
    /// Input file content reproducing a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub suites: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }
}

type SuiteFn = fn(&Config) -> Vec<Record>;

/// Suite ids with their descriptions, in canonical order.
pub const SUITES: &[(&str, &str, SuiteFn)] = &[
    (
        "localization-kernel",
        "contraction of the nilradical of S⁻¹R",
        localization_kernel,
    ),
    (
        "minimal-primes",
        "minimal primes by containment and by the nilpotence criterion",
        minimal_primes,
    ),
    (
        "zariski-vs-flat",
        "Zariski and flat topologies on Min and Max",
        zariski_vs_flat,
    ),
    (
        "stone-cech-discrete",
        "Min of a product of fields and Max of a product of local rings",
        stone_cech_discrete,
    ),
    ("ultra-rings", "quotients by M* and M♭", ultra_rings),
    (
        "alexandroff",
        "one-point compactification of the naturals",
        alexandroff_suite,
    ),
    (
        "clopen-round-trip",
        "compactifications from subrings and π₀ of finite spaces",
        clopen_round_trip,
    ),
    (
        "finite-stone-cech",
        "Stone-Čech compactification of finite spaces",
        finite_stone_cech,
    ),
    (
        "counting",
        "ring maps between power set rings and points of Spec P(X)",
        counting,
    ),
    (
        "supports",
        "support and unit-locus identities in product rings",
        supports,
    ),
    (
        "three-spaces",
        "Min(∏R/p), Spec(∏κ(p)) and Max(∏R_p)",
        three_spaces_suite,
    ),
    (
        "ultrafilters",
        "maximal ideals of P(X) as ultrafilters",
        ultrafilters,
    ),
];

pub fn suite_ids() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.0)
}

/// Runs the named suites (`"all"` for every suite) in parallel.
pub fn run(selection: &[&str], cfg: &Config) -> Result<Report> {
    let chosen: Vec<&(&str, &str, SuiteFn)> = if selection.contains(&"all") {
        SUITES.iter().collect()
    } else {
        selection
            .iter()
            .map(|id| {
                SUITES.iter().find(|s| s.0 == *id).ok_or_else(|| {
                    Error::invalid(format!(
                        "unknown suite `{id}`; known: {}",
                        suite_ids().collect::<Vec<_>>().join(", ")
                    ))
                })
            })
            .collect::<Result<_>>()?
    };
    let results: Vec<(String, Vec<Record>, Duration)> = chosen
        .par_iter()
        .map(|(id, _, f)| {
            let start = Instant::now();
            let records = f(cfg);
            (id.to_string(), records, start.elapsed())
        })
        .collect();
    let mut records = Vec::new();
    let mut timings = Vec::new();
    for (id, r, t) in results {
        records.extend(r);
        timings.push((id, t));
    }
    records.sort();
    timings.sort();
    let passed = records.iter().filter(|r| r.pass).count();
    Ok(Report {
        summary: Summary {
            suites: chosen.len(),
            checks: records.len(),
            passed,
            failed: records.len() - passed,
        },
        records,
        timings,
    })
}

struct Recorder {
    suite: &'static str,
    records: Vec<Record>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder {
            suite,
            records: Vec::new(),
        }
    }

    fn push(
        &mut self,
        property: &str,
        instance: impl Into<String>,
        outcome: Result<(bool, String)>,
        reproduce: impl FnOnce() -> String,
    ) {
        let (pass, witness) = match outcome {
            Ok(v) => v,
            Err(e) => (false, e.to_string()),
        };
        self.records.push(Record {
            suite: self.suite.to_string(),
            property: property.to_string(),
            instance: instance.into(),
            pass,
            witness,
            reproduce: (!pass).then(reproduce),
        });
    }

    fn ring(&mut self, property: &str, c: &CorpusRing, outcome: Result<(bool, String)>) {
        let ring = c.ring.clone();
        self.push(property, c.name.clone(), outcome, move || {
            RingDescription::of(&ring).to_json()
        });
    }

    fn space(&mut self, property: &str, s: &FiniteSpace, outcome: Result<(bool, String)>) {
        let desc = SpaceDescription::of(s).to_json();
        let d2 = desc.clone();
        self.push(property, desc, outcome, move || d2);
    }

    fn plain(
        &mut self,
        property: &str,
        instance: impl Into<String>,
        outcome: Result<(bool, String)>,
    ) {
        let inst: String = instance.into();
        let i2 = inst.clone();
        self.push(property, inst, outcome, move || i2);
    }

    fn finish(self) -> Vec<Record> {
        self.records
    }
}

fn corpus(cfg: &Config, max: usize) -> Vec<CorpusRing> {
    let mut rings = corpus::rings(max).unwrap_or_default();
    if cfg.scrambled > 0 {
        rings.extend(corpus::scrambled_rings(cfg.seed, cfg.scrambled, max).unwrap_or_default());
    }
    rings
}

/// Brute-force nilpotence: some power is zero.
fn nilpotent_oracle(ring: &FiniteRing, a: Elem) -> bool {
    let mut x = a;
    for _ in 0..=ring.order() {
        if x == ring.zero() {
            return true;
        }
        x = ring.mul(x, a);
    }
    false
}

fn localization_kernel(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("localization-kernel");
    for c in corpus(cfg, cfg.max_ring.min(24)) {
        let outcome = (|| {
            let r = &c.ring;
            let nil: Vec<bool> = r.elements().map(|a| nilpotent_oracle(r, a)).collect();
            let sets = MultSet::enumerate_all(r);
            let mut mismatches = 0;
            let mut literal_differs = 0;
            for s in &sets {
                let loc = localize(r, s)?;
                let brute: Vec<Elem> = r
                    .elements()
                    .filter(|&f| s.elements().any(|g| nil[r.mul(f, g).0]))
                    .collect();
                if loc.nil_contraction(r).elements().ne(brute.iter().copied()) {
                    mismatches += 1;
                }
                if loc.kernel(r).elements().ne(brute.iter().copied()) {
                    literal_differs += 1;
                }
            }
            Ok((
                mismatches == 0,
                format!(
                    "{} multiplicative sets, {mismatches} mismatches; ker π itself differs for {literal_differs}",
                    sets.len()
                ),
            ))
        })();
        rec.ring(
            "π⁻¹(nil S⁻¹R) = {f : fg nilpotent for some g ∈ S}",
            &c,
            outcome,
        );
    }
    rec.finish()
}

fn minimal_primes(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("minimal-primes");
    for c in corpus(cfg, cfg.max_ring) {
        let outcome = min_primes(&c.ring)
            .map(|m| (true, format!("{} minimal primes, oracles agree", m.len())));
        rec.ring(
            "containment-minimal primes = primes meeting the nilpotence criterion",
            &c,
            outcome,
        );
    }
    rec.finish()
}

fn clopen_v_sets(site: &SpecSite) -> Result<(Vec<u64>, Vec<u64>)> {
    let clopens = site.zariski_topology()?.clopens();
    let vs: BTreeSet<u64> = site.ring().elements().map(|f| site.v(f)).collect();
    Ok((clopens, vs.into_iter().collect()))
}

fn zariski_vs_flat(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("zariski-vs-flat");
    for c in corpus(cfg, cfg.max_ring) {
        let r = &c.ring;
        let outcome = (|| {
            let min = min_primes(r)?;
            let cmp = min.zariski_topology()?.compare(&min.flat_topology()?)?;
            Ok((
                cmp == Comparison::Equal,
                format!("Min: Zariski {cmp:?} flat"),
            ))
        })();
        rec.ring(
            "on Min, Zariski is finer than flat, and equal as Min is compact",
            &c,
            outcome,
        );

        let outcome = (|| {
            let max = max_ideals(r)?;
            let same = max.zariski_topology()? == max.flat_topology()?;
            let flat = r.is_absolutely_flat_mod_jacobson();
            Ok((
                same == flat,
                format!("Zariski = flat on Max: {same}; R/J absolutely flat: {flat}"),
            ))
        })();
        rec.ring(
            "Zariski = flat on Max iff R/J is absolutely flat",
            &c,
            outcome,
        );

        if r.is_absolutely_flat_mod_jacobson() {
            let outcome = (|| {
                let max = max_ideals(r)?;
                let (clopens, vs) = clopen_v_sets(&max)?;
                Ok((
                    clopens == vs,
                    format!("{} clopens, {} sets Max ∩ V(f)", clopens.len(), vs.len()),
                ))
            })();
            rec.ring(
                "clopens of Max are exactly the sets Max ∩ V(f)",
                &c,
                outcome,
            );
        }

        if let Some((atoms, _)) = r.atoms() {
            if atoms.iter().all(LocalAtom::is_field) {
                let outcome = (|| {
                    let spec = enumerate_primes(r)?;
                    let max = max_ideals(r)?;
                    let min = min_primes(r)?;
                    let n = atoms.len();
                    let ok = spec.len() == n && max.len() == n && min.len() == n;
                    Ok((
                        ok,
                        format!(
                            "|Spec| = {}, |Max| = {}, |Min| = {}, {n} factors",
                            spec.len(),
                            max.len(),
                            min.len()
                        ),
                    ))
                })();
                rec.ring(
                    "in a product of fields every prime is maximal and minimal",
                    &c,
                    outcome,
                );
            }
        }
    }
    rec.finish()
}

fn pk(factors: &[(u32, u32)]) -> Result<CorpusRing> {
    let ring = FiniteRing::product_pk(factors)?;
    Ok(CorpusRing {
        name: ring.describe(),
        ring,
    })
}

type Factors = Vec<(u32, u32)>;

/// Three field products and three local-atom products per size.
fn stone_cech_pairs(n: usize) -> Vec<(Factors, Factors)> {
    let fields: [[(u32, u32); 4]; 3] = [
        [(2, 1), (3, 1), (5, 1), (7, 1)],
        [(2, 1), (2, 1), (2, 1), (2, 1)],
        [(3, 1), (2, 1), (3, 1), (2, 1)],
    ];
    let locals: [[(u32, u32); 4]; 3] = [
        [(2, 2), (2, 2), (2, 2), (2, 2)],
        [(2, 2), (3, 2), (2, 1), (3, 1)],
        [(2, 3), (3, 1), (2, 2), (2, 1)],
    ];
    let mut out: Vec<_> = fields
        .iter()
        .zip(&locals)
        .map(|(f, l)| (f[..n].to_vec(), l[..n].to_vec()))
        .collect();
    if n == 3 {
        out.push((vec![(2, 1), (3, 1), (5, 1)], vec![(2, 2), (3, 2), (5, 2)]));
    }
    out
}

fn correspondence_checks(p: &PointCorrespondence) -> Result<(bool, String)> {
    let bij = p.is_bijective();
    let homeo = p.is_homeomorphism();
    let opens = p.pulls_back_basic_opens();
    let eta = p.is_eta_compatible()?;
    Ok((
        bij && homeo && opens && eta,
        format!("bijective {bij}, homeomorphism {homeo}, basic opens pull back {opens}, η-compatible {eta}"),
    ))
}

fn universal_checks(p: &PointCorrespondence, x: usize) -> Result<(bool, String)> {
    let mut maps = 0;
    for y in 1..=4usize {
        for code in 0..y.pow(x as u32) {
            let g: Vec<usize> = (0..x).map(|i| code / y.pow(i as u32) % y).collect();
            let ext = p.extend(&g, y)?;
            let all = p.factorizations(&g, y)?;
            if all != vec![ext] {
                return Ok((
                    false,
                    format!("map {g:?} into {y} points has {} factorizations", all.len()),
                ));
            }
            maps += 1;
        }
    }
    Ok((
        true,
        format!("{maps} maps into discrete targets of 1..4 points factor uniquely"),
    ))
}

fn stone_cech_discrete(_cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("stone-cech-discrete");
    for n in 1..=4 {
        for (fields, locals) in stone_cech_pairs(n) {
            let (lambda, gamma) = match (pk(&fields), pk(&locals)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    rec.plain(
                        "construct corpus pair",
                        format!("{fields:?} / {locals:?}"),
                        Err(e),
                    );
                    continue;
                }
            };
            let ph = phi(&lambda.ring);
            let ps = psi(&gamma.ring);
            match &ph {
                Ok(p) => {
                    rec.ring(
                        "φ: Spec P(X) → Min(Λ), M ↦ M*, is an η-compatible homeomorphism",
                        &lambda,
                        correspondence_checks(p),
                    );
                    rec.ring(
                        "maps X → Y extend uniquely through Min(Λ)",
                        &lambda,
                        universal_checks(p, n),
                    );
                }
                Err(e) => rec.ring("φ", &lambda, Err(Error::Consistency(e.to_string()))),
            }
            match &ps {
                Ok(p) => {
                    rec.ring(
                        "ψ: Spec P(X) → Max(Γ), M ↦ M♭, is an η-compatible homeomorphism",
                        &gamma,
                        correspondence_checks(p),
                    );
                    rec.ring(
                        "maps X → Y extend uniquely through Max(Γ)",
                        &gamma,
                        universal_checks(p, n),
                    );
                }
                Err(e) => rec.ring("ψ", &gamma, Err(Error::Consistency(e.to_string()))),
            }
            if let (Ok(p), Ok(q)) = (&ph, &ps) {
                let outcome = (|| {
                    let inv = p.inverse();
                    let composite: Vec<usize> = inv.iter().map(|&x| q.map[x]).collect();
                    let (pe, qe) = (p.eta()?, q.eta()?);
                    let ok = (0..n).all(|x| composite[pe[x]] == qe[x])
                        && p.site_topology
                            .is_homeomorphism(&q.site_topology, &composite);
                    Ok((ok, format!("ψ∘φ⁻¹ = {composite:?}")))
                })();
                rec.plain(
                    "ψ∘φ⁻¹: Min(Λ) → Max(Γ) is a homeomorphism sending p_x to M_x",
                    format!("{} / {}", lambda.name, gamma.name),
                    outcome,
                );
            }
        }
    }
    rec.finish()
}

fn ultra_rings(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("ultra-rings");
    for c in corpus::products(cfg.max_ring, 4) {
        let r = &c.ring;
        let (atoms, _) = r.atoms().expect("product corpus");
        let n = atoms.len();
        for (x, &atom) in atoms.iter().enumerate() {
            let outcome = (|| {
                let m = PrincipalMax::new(n, x)?;
                let u = ultraproduct(r, m)?;
                let q = &u.quotient.ring;
                let kind_ok = q.is_field() == atom.is_field()
                    && q.is_domain() == atom.is_field()
                    && q.is_local();
                let iso = u.comparison_is_isomorphism(r, x);
                let residue = residue_comparison(r, m)?.is_isomorphism();
                let star = ideal_star(r, m)?;
                let flat = ideal_flat(r, m)?;
                let inclusion = star.ideal.is_subset(&flat.ideal);
                let max_ok = max_ideals(r)?.position(&flat.ideal).is_some();
                let min_ok = !atom.is_field() || min_primes(r)?.position(&star.ideal).is_some();
                let ok = kind_ok && iso && residue && inclusion && max_ok && min_ok;
                Ok((
                    ok,
                    format!(
                        "R/M* order {}: field {}, domain {}, local {}; f+M* ↦ f_x iso {iso}; Γ/M♭ ≅ residue field {residue}; M* ⊆ M♭ {inclusion}; M♭ maximal {max_ok}; M* minimal prime when fields {min_ok}",
                        q.order(),
                        q.is_field(),
                        q.is_domain(),
                        q.is_local()
                    ),
                ))
            })();
            rec.ring(&format!("ultra-ring at label {x}"), &c, outcome);
        }
        if atoms.iter().all(LocalAtom::is_field) {
            let outcome = (|| {
                for a in atoms {
                    let f = FiniteRing::product_of(&[*a])?;
                    let nonzero: Vec<Elem> = f.elements().filter(|&e| e != f.zero()).collect();
                    let loc = localize(&f, &MultSet::new(&f, &nonzero)?)?;
                    if loc.ring.order() != f.order() || loc.kernel(&f).len() != 1 {
                        return Ok((false, format!("fraction field of {a} is not {a}")));
                    }
                }
                Ok((
                    true,
                    "degenerate: each factor is a finite field and is its own fraction field"
                        .to_string(),
                ))
            })();
            rec.ring(
                "fraction-field clause for ultra-rings",
                &c,
                outcome,
            );
        }
    }
    rec.finish()
}

fn random_finite(rng: &mut ChaCha8Rng, bound: usize) -> UpSet {
    let pts: Vec<usize> = (0..bound).filter(|_| rng.gen_bool(0.3)).collect();
    UpSet::finite(&pts)
}

fn alexandroff_suite(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("alexandroff");
    let a = alexandroff();
    let fc = BoolRing::FinCofin;
    let inf = StonePoint::Infinity(UpSet::naturals());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let outcome = (|| {
        let mut ok = 0;
        for _ in 0..100 {
            let s = random_finite(&mut rng, 40).complement();
            let w = maximality_witness(&fc, &inf, &s)?;
            if !w.m.is_finite() || !w.m.sym_diff(&w.r.intersect(&s)).is_naturals() {
                return Ok((false, format!("bad witness for {s}")));
            }
            ok += 1;
        }
        Ok((
            ok == 100,
            format!("{ok} cofinite non-members certified by m = Aᶜ, r = 1"),
        ))
    })();
    rec.plain(
        "the point at infinity Fin(N) is maximal",
        "100 sampled cofinite sets",
        outcome,
    );

    let outcome = (|| {
        for x in 0..30 {
            let s = random_finite(&mut rng, 40).union(&UpSet::finite(&[x]));
            let w = maximality_witness(&fc, &StonePoint::Principal(x), &s)?;
            if w.m.contains(x) {
                return Ok((false, format!("witness for {x} contains {x}")));
            }
        }
        Ok((true, "30 principal points certified".into()))
    })();
    rec.plain(
        "principal points m_x ∩ R are maximal",
        "x in 0..30",
        outcome,
    );

    for level in 1..=4 {
        let outcome = fincofin_truncation_points(level).map(|pts| {
            let principal = pts
                .iter()
                .filter(|p| matches!(p, StonePoint::Principal(_)))
                .count();
            let infinite = pts.iter().filter(|p| p.is_infinity()).count();
            (
                principal == level && infinite == 1,
                format!("{principal} principal points, {infinite} point at infinity"),
            )
        });
        rec.plain(
            "every maximal ideal of the finite/cofinite ring is Fin(N) or some m_x",
            format!("subalgebra generated by subsets of [0,{level}) and the tail"),
            outcome,
        );
    }

    let samples: Vec<UpSet> = (0..40)
        .map(|i| {
            let s = random_finite(&mut rng, 30);
            if i % 2 == 0 {
                s
            } else {
                s.complement()
            }
        })
        .collect();
    let outcome = (|| {
        for s in &samples {
            if inf.ideal_contains(s)? != s.is_finite() {
                return Ok((false, format!("{s} misclassified")));
            }
            if !a.basic_open_meets_image(s)? || !a.is_basic_clopen(s)? {
                return Ok((false, format!("D({s}) fails density or is not clopen")));
            }
        }
        let mut pts: Vec<StonePoint> = (0..12).map(StonePoint::Principal).collect();
        pts.push(inf.clone());
        for p in &pts {
            for q in &pts {
                if p != q && !a.separates(p, q, &a.separate(p, q)?)? {
                    return Ok((false, format!("{p:?} and {q:?} not separated")));
                }
            }
        }
        Ok((
            true,
            format!(
                "{} basic opens dense and clopen; {} points pairwise separated",
                samples.len(),
                pts.len()
            ),
        ))
    })();
    rec.plain(
        "αN is Hausdorff and totally disconnected with N dense; Fin(N) is the point at infinity",
        "40 sampled ring elements",
        outcome,
    );

    for i in 0..20 {
        let k = rng.gen_range(1..5);
        let mut cover: Vec<UpSet> = (0..k).map(|_| random_finite(&mut rng, 12)).collect();
        if rng.gen_bool(0.7) {
            cover.push(UpSet::at_least(rng.gen_range(0..14)));
        }
        let outcome = (|| {
            let result = check_cover(&a, &cover)?;
            match &result {
                CoverCheck::Subcover(idx) => {
                    let chosen: Vec<&UpSet> = idx.iter().map(|&j| &cover[j]).collect();
                    let union = chosen.iter().fold(UpSet::empty(), |u, s| u.union(s));
                    let at_inf = chosen.iter().any(|s| s.is_cofinite());
                    Ok((union.is_naturals() && at_inf, format!("subcover {idx:?}")))
                }
                CoverCheck::Uncovered(p) => {
                    let missed = cover.iter().all(|s| !a.in_basic_open(p, s).unwrap_or(true));
                    Ok((missed, format!("uncovered point {p:?}")))
                }
            }
        })();
        let shown: Vec<String> = cover.iter().map(|s| s.to_string()).collect();
        rec.plain(
            "presented covers have finite subcovers or a verified uncovered point",
            format!("cover #{i:02}: {}", shown.join(" ")),
            outcome,
        );
    }
    rec.finish()
}

/// Generated rings used for compactification round trips.
pub fn sample_generator_lists() -> Vec<Vec<UpSet>> {
    let r = |p, rs: &[usize]| UpSet::new(0, &[], p, rs).expect("valid");
    vec![
        vec![],
        vec![UpSet::evens()],
        vec![UpSet::finite(&[0, 1, 2])],
        vec![r(3, &[0])],
        vec![r(4, &[1])],
        vec![UpSet::evens(), r(3, &[0])],
        vec![UpSet::evens(), UpSet::at_least(5)],
        vec![r(5, &[0, 1])],
        vec![UpSet::odds().union(&UpSet::finite(&[0])), r(6, &[1])],
        vec![UpSet::evens(), r(3, &[0]), r(5, &[0])],
        vec![r(4, &[0]), r(4, &[1]), UpSet::finite(&[7])],
        vec![
            r(2, &[1]).union(&UpSet::finite(&[2, 4])),
            r(6, &[1, 5]),
            r(7, &[3]),
        ],
    ]
}

fn clopen_round_trip(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("clopen-round-trip");
    for gens in sample_generator_lists() {
        let shown: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let outcome = (|| {
            let c = compactify(gens.clone())?;
            let back = c.clopen_trace_ring()?;
            let same = back.same_ring(c.ring())?;
            let traces = gens.iter().all(|g| c.is_clopen_trace(g));
            let pts = c.points_at_infinity();
            let mut separated = true;
            for p in &pts {
                for q in pts
                    .iter()
                    .chain([StonePoint::Principal(0), StonePoint::Principal(3)].iter())
                {
                    if p != q {
                        separated &= c.separates(p, q, &c.separate(p, q)?)?;
                    }
                }
            }
            Ok((
                same && traces && separated,
                format!(
                    "{} points at infinity; clopen traces give back the ring: {same}",
                    pts.len()
                ),
            ))
        })();
        rec.plain(
            "R' → Spec(R') → Clop → R' is the identity",
            format!("generators [{}]", shown.join(", ")),
            outcome,
        );
    }
    for n in 3..=cfg.max_space.min(4) {
        match enumerate_spaces(n) {
            Ok(spaces) => {
                for s in &spaces {
                    let outcome = pi0_spec_check(s).map(|c| {
                        (
                            c.holds,
                            format!(
                                "{} components ↔ {} points of Spec Clop",
                                c.components.len(),
                                c.spec_points
                            ),
                        )
                    });
                    rec.space("π₀(X) ≅ Spec Clop(X)", s, outcome);
                }
            }
            Err(e) => rec.plain("enumerate spaces", format!("{n} points"), Err(e)),
        }
    }
    rec.finish()
}

fn finite_stone_cech(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("finite-stone-cech");
    let small: Vec<FiniteSpace> = (1..=3.min(cfg.max_space))
        .flat_map(|n| enumerate_spaces(n).unwrap_or_default())
        .collect();
    for n in 1..=cfg.max_space.min(4) {
        let spaces = match enumerate_spaces(n) {
            Ok(s) => s,
            Err(e) => {
                rec.plain("enumerate spaces", format!("{n} points"), Err(e));
                continue;
            }
        };
        for s in &spaces {
            let outcome = (|| {
                let b = beta(s)?;
                let comps: Vec<u64> = s.topology().components();
                let by_comps = b
                    .partition
                    .iter()
                    .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
                    .collect::<Vec<_>>()
                    == comps;
                let unique = universal_partitions(s)? == vec![b.clone()];
                let sim = similarity_classes(s)? == b;
                let discrete = b.quotient_topology(s)? == FiniteTopology::discrete(b.classes())?;
                let ok = by_comps && unique && sim && discrete && b.factors_all_maps(s)?;
                Ok((
                    ok,
                    format!(
                        "{} classes; only universal partition {unique}; equals ∼ {sim}",
                        b.classes()
                    ),
                ))
            })();
            rec.space(
                "βX is the space of components, universal among discrete targets",
                s,
                outcome,
            );

            let outcome = {
                let n = s.points();
                let conv = (0..n)
                    .all(|y| (0..n).all(|x| s.converges(y, x) == s.topology().in_closure_of(x, y)));
                let full = s.topology().full_set();
                let bad: Vec<u64> = (0..=full)
                    .filter(|&a| s.open_via_convergence(a) != s.topology().is_open(a))
                    .collect();
                Ok((
                    conv && bad.is_empty(),
                    format!(
                        "convergence = closure {conv}; {} subsets disagree",
                        bad.len()
                    ),
                ))
            };
            rec.space(
                "openness via Zariski convergence matches the topology",
                s,
                outcome,
            );

            if n <= 3 {
                let outcome = (|| {
                    let mut maps = 0;
                    let mut dense = 0;
                    for t in &small {
                        for f in s.all_maps(t.points()) {
                            let direct = s.is_continuous(t, &f)?;
                            if s.continuous_via_convergence(t, &f)? != direct {
                                return Ok((
                                    false,
                                    format!(
                                        "map {f:?} to {} disagrees",
                                        SpaceDescription::of(t).to_json()
                                    ),
                                ));
                            }
                            if direct && has_dense_image(t, &f) {
                                let m = clop_functor(s, t, &f)?;
                                if !m.is_ring_map() || !m.is_injective() {
                                    return Ok((
                                        false,
                                        format!(
                                            "Clop of dense map {f:?} is not an injective ring map"
                                        ),
                                    ));
                                }
                                dense += 1;
                            }
                            maps += 1;
                        }
                    }
                    Ok((
                        true,
                        format!("{maps} maps agree; {dense} dense maps give injective Clop"),
                    ))
                })();
                rec.space("continuity via convergence matches preimages; Clop of a dense map is injective", s, outcome);

                let outcome = (|| {
                    let b = beta(s)?;
                    let proj =
                        clop_functor(s, &FiniteSpace::discrete(b.classes())?, &b.projection)?;
                    Ok((
                        proj.is_injective(),
                        format!(
                            "Clop(π₀ projection) on {} clopens",
                            proj.target_clopens.len()
                        ),
                    ))
                })();
                rec.space("Clop of the projection to βX is injective", s, outcome);
            }
        }
        let outcome = (|| {
            let d = FiniteSpace::discrete(n)?;
            let b = beta(&d)?;
            let spec = spec_finite_boolean(n)?;
            Ok((
                b.classes() == n && spec.points.len() == n,
                format!("β of discrete {n} points has {} points", b.classes()),
            ))
        })();
        rec.plain(
            "β of a discrete space is itself, matching Spec P(X)",
            format!("discrete, {n} points"),
            outcome,
        );
    }
    rec.finish()
}

fn counting(_cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("counting");
    for n in 1..=3usize {
        for m in 1..=3usize {
            let outcome = (|| {
                let maps = ring_maps(n, m)?;
                let expected = n.pow(m as u32);
                let mut from_functions = BTreeSet::new();
                for code in 0..expected {
                    let g: Vec<usize> = (0..m).map(|i| code / n.pow(i as u32) % n).collect();
                    from_functions.insert(preimage_map(n, &g));
                }
                let found: BTreeSet<Vec<FinSubset>> = maps.iter().cloned().collect();
                let ok = maps.len() == expected
                    && count_ring_maps(n, m)? == expected
                    && found == from_functions;
                Ok((
                    ok,
                    format!(
                        "{} ring maps, expected {expected}, each the preimage map of some Y → X",
                        maps.len()
                    ),
                ))
            })();
            rec.plain(
                "|Hom(P(X), P(Y))| = |X|^|Y|",
                format!("|X| = {n}, |Y| = {m}"),
                outcome,
            );
        }
    }
    for n in 1..=5usize {
        let outcome = (|| {
            let s = spec_finite_boolean(n)?;
            let discrete = s.topology == FiniteTopology::discrete(n)?;
            let mut ok = s.points.len() == n && discrete;
            let mut note = String::new();
            if n <= 4 {
                let mut sorted = s.points.clone();
                sorted.sort();
                let exhaustive = maximal_ideals_exhaustive(n)?;
                ok &= sorted == exhaustive;
                note = format!("; exhaustive scan finds {}", exhaustive.len());
            }
            Ok((
                ok,
                format!("{} points, discrete {discrete}{note}", s.points.len()),
            ))
        })();
        rec.plain(
            "|Spec P(X)| = |X| with the discrete topology",
            format!("|X| = {n}"),
            outcome,
        );
    }
    rec.finish()
}

fn supports(_cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("supports");
    let fields: [&[(u32, u32)]; 4] = [
        &[(5, 1), (5, 1), (5, 1), (5, 1)],
        &[(2, 1), (3, 1), (5, 1)],
        &[(7, 1), (11, 1)],
        &[(2, 1); 6],
    ];
    for f in fields {
        let Ok(c) = pk(f) else { continue };
        let outcome = (|| {
            let r = &c.ring;
            let su: Vec<u64> = r
                .elements()
                .map(|e| support(r, e).map(|s| s.su.bits()))
                .collect::<Result<_>>()?;
            let mul_ok = r
                .elements()
                .all(|a| r.elements().all(|b| su[r.mul(a, b).0] == su[a.0] & su[b.0]));
            let n = r.atoms().map_or(0, |(a, _)| a.len());
            let mut ann_ok = true;
            for e in r.elements() {
                let ann = r.annihilator(e);
                let idem = r.from_components(
                    &(0..n)
                        .map(|x| u64::from(su[e.0] >> x & 1 == 0))
                        .collect::<Vec<_>>(),
                )?;
                ann_ok &= r.is_idempotent(idem) && ann == Ideal::principal(r, idem);
            }
            let min = min_primes(r)?;
            let mut points_ok = true;
            for x in 0..n {
                let d = min.d(r.delta(x)?);
                let px: Vec<Elem> = r.elements().filter(|&e| r.component(e, x) == 0).collect();
                points_ok &= d.count_ones() == 1
                    && min.points()[d.trailing_zeros() as usize]
                        .elements()
                        .eq(px.iter().copied());
            }
            Ok((
                mul_ok && ann_ok && points_ok,
                format!("Su(fg) = Su(f) ∩ Su(g) {mul_ok}; Ann(f) = (idempotent off Su(f)) {ann_ok}; Min ∩ D(Δ_x) = {{p_x}} {points_ok}"),
            ))
        })();
        rec.ring("support identities in a product of fields", &c, outcome);
    }
    let locals: [&[(u32, u32)]; 4] = [
        &[(2, 2), (2, 2), (3, 2), (3, 2)],
        &[(2, 2), (3, 2), (5, 2)],
        &[(2, 3), (3, 1), (2, 2)],
        &[(7, 2), (5, 1)],
    ];
    for f in locals {
        let Ok(c) = pk(f) else { continue };
        let outcome = (|| {
            let r = &c.ring;
            let n = r.atoms().map_or(0, |(a, _)| a.len());
            let full = (1u64 << n) - 1;
            let prof: Vec<(u64, u64)> = r
                .elements()
                .map(|e| support(r, e).map(|s| (s.su.bits(), s.omega.bits())))
                .collect::<Result<_>>()?;
            let inside = prof.iter().all(|(s, o)| o & !s == 0);
            let mul_ok = r.elements().all(|a| {
                r.elements()
                    .all(|b| prof[r.mul(a, b).0].1 == prof[a.0].1 & prof[b.0].1)
            });
            let units = r.unit_table();
            let unit_ok = r.elements().all(|e| (prof[e.0].1 == full) == units[e.0]);
            let j = r.jacobson_radical();
            let j_ok = r.elements().all(|e| (prof[e.0].1 == 0) == j.contains(e));
            let max = max_ideals(r)?;
            let mut points_ok = true;
            for x in 0..n {
                let d = max.d(r.delta(x)?);
                points_ok &= d.count_ones() == 1;
            }
            Ok((
                inside && mul_ok && unit_ok && j_ok && points_ok,
                format!("Ω ⊆ Su {inside}; Ω(fg) = Ω(f) ∩ Ω(g) {mul_ok}; Ω = X iff unit {unit_ok}; Ω = ∅ iff f ∈ J {j_ok}; Max ∩ D(Δ_x) singletons {points_ok}"),
            ))
        })();
        rec.ring(
            "unit-locus identities in a product of local rings",
            &c,
            outcome,
        );
    }
    for n in 1..=3usize {
        let outcome = (|| {
            let lambda = FiniteRing::product_pk(&vec![(3, 1); n])?;
            let mut checked = 0;
            for mask in 0..1u64 << (1 << n) {
                let fam = Family::new(n, mask)?;
                if !fam.is_ideal() {
                    continue;
                }
                let members: Vec<Elem> = lambda
                    .elements()
                    .filter(|&e| {
                        support(&lambda, e)
                            .map(|s| fam.contains(s.su))
                            .unwrap_or(false)
                    })
                    .collect();
                if Ideal::from_members(&lambda, &members).is_err() {
                    return Ok((false, format!("pullback of {fam} is not an ideal")));
                }
                checked += 1;
            }
            Ok((
                true,
                format!("{checked} ideals of P(X) pull back to ideals"),
            ))
        })();
        rec.plain(
            "f ↦ Su(f) pulls ideals of P(X) back to ideals",
            format!("(Z/3)^{n}"),
            outcome,
        );
    }
    rec.finish()
}

fn three_spaces_suite(cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("three-spaces");
    for c in corpus(cfg, cfg.max_ring) {
        match three_spaces(&c.ring) {
            Ok(t) => {
                let outcome = t.are_canonically_homeomorphic().map(|ok| {
                    (
                        ok,
                        format!(
                            "{} primes; sites of sizes {:?}",
                            t.primes.len(),
                            t.sites.iter().map(SpecSite::len).collect::<Vec<_>>()
                        ),
                    )
                });
                rec.ring(
                    "Min(∏R/p) ≅ Spec(∏κ(p)) ≅ Max(∏R_p) canonically",
                    &c,
                    outcome,
                );
            }
            // products of localizations past the table cap are out of reach
            Err(Error::Capacity { .. }) => continue,
            Err(e) => rec.ring(
                "Min(∏R/p) ≅ Spec(∏κ(p)) ≅ Max(∏R_p) canonically",
                &c,
                Err(e),
            ),
        }
    }
    rec.finish()
}

fn ultrafilters(_cfg: &Config) -> Vec<Record> {
    let mut rec = Recorder::new("ultrafilters");
    for n in 1..=4usize {
        let outcome = (|| {
            let maxes = maximal_ideals_exhaustive(n)?;
            let filters = maxes
                .iter()
                .map(Ultrafilter::from_maximal)
                .collect::<Result<Vec<_>>>()?;
            let round = filters
                .iter()
                .zip(&maxes)
                .all(|(f, m)| f.to_maximal() == *m);
            let mut principal: Vec<usize> = filters
                .iter()
                .filter_map(Ultrafilter::principal_point)
                .collect();
            principal.sort_unstable();
            let all_principal = principal == (0..n).collect::<Vec<_>>();
            let opens = FinSubset::all(n)
                .all(|a| basic_open_of(&maxes, a) == filter_basic_open(&filters, a));
            let mut all_filters = 0;
            for mask in 0..1u64 << (1 << n) {
                if Ultrafilter::is_ultrafilter(&Family::new(n, mask)?) {
                    all_filters += 1;
                }
            }
            let ok = round && all_principal && opens && all_filters == n;
            Ok((ok, format!("{} maximal ideals ↔ {all_filters} ultrafilters, all principal {all_principal}; D(A) ↦ d(A) {opens}", maxes.len())))
        })();
        rec.plain(
            "M ↦ P(X) ∖ M is a homeomorphism onto the ultrafilters",
            format!("|X| = {n}"),
            outcome,
        );
    }
    rec.finish()
}

/// Preimage helper re-exported for callers building their own checks.
pub fn pull_back_mask(map: &[usize], set: u64) -> u64 {
    preimage(map, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run(&["nope"], &Config::default()).is_err());
    }

    #[test]
    fn counting_suite_passes() {
        let r = run(&["counting"], &Config::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.summary.suites, 1);
    }
}
