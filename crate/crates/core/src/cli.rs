//! Command-line front end.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::boolring::{BoolRing, Family, UpSet};
use crate::emit::{
    self, list, mask_list, point_label, table, topology_dot, topology_lines, Format, Payload,
};
use crate::ring::{localize, Elem, FiniteRing, Ideal, MultSet, Quotient, RingDescription};
use crate::spectrum::{
    enumerate_primes_capped, max_ideals, min_primes, Comparison, FiniteTopology, PointDescription,
    SiteKind, SpecSite,
};
use crate::stone::{
    check_cover, compactify, spec_finite_boolean, Compactification, CoverCheck, StonePoint,
    Ultrafilter,
};
use crate::topspace::{
    beta, pi0_spec_check, similarity_classes, universal_partitions, FiniteSpace, SpaceDescription,
};
use crate::ultra::{
    ideal_flat, ideal_star, residue_comparison, ultraproduct, PrincipalMax, UltraKind,
};
use crate::verify::{self, Config};
use crate::{Error, Result};

/// Exit status when every check passed.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stonespec",
    version,
    about = "Spectra, ultra-rings and compactifications, computed exactly"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOptions {
    /// Largest ring order for ideal enumeration.
    #[arg(long, global = true, env = "STONESPEC_MAX_RING", default_value_t = 64)]
    pub max_ring: usize,
    /// Largest finite space for exhaustive corpora.
    #[arg(long, global = true, env = "STONESPEC_MAX_SPACE", default_value_t = 4)]
    pub max_space: usize,
    #[arg(long, global = true, env = "STONESPEC_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Site {
    Spec,
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Star,
    Flat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the primes of a ring with generator witnesses.
    RingSpec {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Site::Spec)]
        site: Site,
    },
    /// Zariski and flat topologies on Spec, Min or Max of a ring.
    RingTopology {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Site::Min)]
        site: Site,
    },
    /// Localize a ring at the multiplicative set generated by elements, or
    /// at the complement of a prime.
    RingLocalize {
        #[arg(long)]
        file: PathBuf,
        /// Elements as `(a,b,..)` component tuples or element indices.
        #[arg(long, num_args = 1.., conflicts_with = "prime", required_unless_present = "prime")]
        gens: Vec<String>,
        /// Index of a prime in the `ring-spec` listing.
        #[arg(long)]
        prime: Option<usize>,
    },
    /// The ideal M* or M♭ at one factor of a product ring, its quotient,
    /// and the canonical comparison map.
    Ultra {
        #[arg(long)]
        ring: PathBuf,
        /// Factor label or position.
        #[arg(long)]
        at: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Spec of the power set ring of an n-point set, with its ultrafilters.
    StoneSpec {
        #[arg(long)]
        n: usize,
    },
    /// Compactification of the naturals from ultimately periodic generators.
    Compactify {
        /// A generator such as `evens`, `{n%3==0}` or `{0,1,2}`; repeatable.
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// A cover to test, sets separated by `;`; repeatable.
        #[arg(long)]
        cover: Vec<String>,
        /// Naturals shown explicitly.
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// Neighborhoods in the one-point compactification of the naturals.
    Alexandroff {
        /// A finite or cofinite set; repeatable.
        #[arg(long, required = true)]
        probe: Vec<String>,
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// The Stone-Čech compactification of a finite space.
    SpaceBeta {
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the finite-space checks on one space.
    SpaceCheck {
        #[arg(long)]
        file: PathBuf,
    },
    /// Run property suites.
    Verify {
        /// Suite id or `all`; repeatable.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        /// Extra seeded corpus rings with shuffled element order.
        #[arg(long, default_value_t = 0)]
        scrambled: usize,
        /// Print suite ids and exit.
        #[arg(long)]
        list: bool,
        /// Per-suite wall-clock times on stderr.
        #[arg(long)]
        timings: bool,
    },
}

/// Parses `args` (program name first), runs, prints, and returns the exit
/// status.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    run_from(std::env::args_os())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Consistency(_) => EXIT_CHECK_FAILED,
        Error::Invalid(_) | Error::Parse { .. } => EXIT_USAGE,
    }
}

/// Runs a parsed command, returning the rendered output and whether any
/// check failed.
pub fn execute(cli: &Cli) -> Result<(String, bool)> {
    let o = &cli.options;
    let out = |p: &dyn ErasedPayload| p.render(o.format);
    match &cli.command {
        Command::RingSpec { file, site } => {
            let ring = load_ring(file, o.max_ring)?;
            let s = site_of(&ring, *site, o.max_ring)?;
            let payload = RingSpecOut {
                ring: ring.describe(),
                site: s.kind(),
                topology: s.zariski_topology()?.to_lists(),
                points: s.describe_points(),
                hasse: s.zariski_topology()?,
            };
            Ok((out(&payload)?, false))
        }
        Command::RingTopology { file, site } => {
            let ring = load_ring(file, o.max_ring)?;
            let s = site_of(&ring, *site, o.max_ring)?;
            Ok((out(&ring_topology(&ring, &s)?)?, false))
        }
        Command::RingLocalize { file, gens, prime } => {
            let ring = load_ring(file, crate::ring::PRODUCT_CAP)?;
            let set = match prime {
                Some(i) => {
                    let spec = enumerate_primes_capped(&ring, o.max_ring)?;
                    let p = spec.points().get(*i).ok_or_else(|| {
                        Error::invalid(format!(
                            "prime index {i} out of range; ring has {} primes",
                            spec.len()
                        ))
                    })?;
                    MultSet::complement_of_prime(&ring, p)?
                }
                None => {
                    let elems = gens
                        .iter()
                        .map(|g| parse_elem(&ring, g))
                        .collect::<Result<Vec<_>>>()?;
                    MultSet::generated(&ring, &elems)
                }
            };
            Ok((out(&localization(&ring, &set)?)?, false))
        }
        Command::Ultra { ring, at, kind } => {
            let r = load_ring(ring, o.max_ring)?;
            Ok((out(&ultra(&r, at, *kind)?)?, false))
        }
        Command::StoneSpec { n } => Ok((out(&stone_spec(*n)?)?, false)),
        Command::Compactify {
            gens,
            cover,
            window,
        } => {
            let generators = gens
                .iter()
                .map(|g| UpSet::parse(g))
                .collect::<Result<Vec<_>>>()?;
            let c = compactify(generators)?;
            let payload = compactification(&c, cover, *window)?;
            Ok((out(&payload)?, false))
        }
        Command::Alexandroff { probe, window } => {
            let payload = alexandroff_probes(probe, *window)?;
            Ok((out(&payload)?, false))
        }
        Command::SpaceBeta { file } => {
            let space = load_space(file)?;
            Ok((out(&space_beta(&space)?)?, false))
        }
        Command::SpaceCheck { file } => {
            let space = load_space(file)?;
            let payload = space_check(&space)?;
            let failed = payload.checks.iter().any(|c| !c.pass);
            Ok((out(&payload)?, failed))
        }
        Command::Verify {
            suite,
            scrambled,
            list,
            timings,
        } => {
            if *list {
                let rows: Vec<Vec<String>> = verify::SUITES
                    .iter()
                    .map(|s| vec![s.0.to_string(), s.1.to_string()])
                    .collect();
                return Ok((table(&["suite", "checks"], &rows), false));
            }
            let cfg = Config {
                max_ring: o.max_ring,
                max_space: o.max_space,
                seed: o.seed,
                scrambled: *scrambled,
            };
            let ids: Vec<&str> = suite.iter().map(String::as_str).collect();
            let report = verify::run(&ids, &cfg)?;
            if *timings {
                for (id, t) in &report.timings {
                    eprintln!("{id}: {:.3}s", t.as_secs_f64());
                }
            }
            Ok((emit::emit(o.format, &report)?, !report.all_passed()))
        }
    }
}

/// Object-safe view of [`Payload`].
trait ErasedPayload {
    fn render(&self, format: Format) -> Result<String>;
}

impl<P: Payload> ErasedPayload for P {
    fn render(&self, format: Format) -> Result<String> {
        emit::emit(format, self)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn with_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { location, message } => Error::Parse {
            location: format!("{}, {location}", path.display()),
            message,
        },
        other => other,
    }
}

pub fn load_ring(path: &Path, cap: usize) -> Result<FiniteRing> {
    let ring = RingDescription::parse(&read(path)?)
        .and_then(|d| d.build())
        .map_err(|e| with_file(path, e))?;
    if ring.order() > cap {
        return Err(Error::Capacity {
            what: "ring order (--max-ring)",
            size: ring.order(),
            cap,
        });
    }
    Ok(ring)
}

pub fn load_space(path: &Path) -> Result<FiniteSpace> {
    SpaceDescription::parse(&read(path)?)
        .and_then(|d| d.build())
        .map_err(|e| with_file(path, e))
}

/// An element as `(a,b,..)` components or a plain index.
pub fn parse_elem(ring: &FiniteRing, text: &str) -> Result<Elem> {
    let t = text.trim();
    let bad = |m: String| Error::Parse {
        location: format!("element `{t}`"),
        message: m,
    };
    if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let comps = inner
            .split(',')
            .map(|c| c.trim().parse::<u64>().map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        return ring.from_components(&comps);
    }
    let i: usize = t
        .parse()
        .map_err(|e: std::num::ParseIntError| bad(e.to_string()))?;
    if i >= ring.order() {
        return Err(bad(format!(
            "index {i} outside a ring of order {}",
            ring.order()
        )));
    }
    Ok(Elem(i))
}

fn site_of(ring: &FiniteRing, site: Site, cap: usize) -> Result<SpecSite> {
    let spec = enumerate_primes_capped(ring, cap)?;
    match site {
        Site::Spec => Ok(spec),
        Site::Min => min_primes(ring),
        Site::Max => max_ideals(ring),
    }
}

fn members(ring: &FiniteRing, ideal: &Ideal) -> Vec<String> {
    ideal.elements().map(|e| ring.fmt_elem(e)).collect()
}

#[derive(Serialize)]
struct RingSpecOut {
    ring: String,
    site: SiteKind,
    points: Vec<PointDescription>,
    topology: Vec<Vec<usize>>,
    #[serde(skip)]
    hasse: FiniteTopology,
}

impl Payload for RingSpecOut {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .points
            .iter()
            .map(|p| {
                vec![
                    p.index.to_string(),
                    format!("({})", p.generators.join(", ")),
                    p.members.join(" "),
                ]
            })
            .collect();
        let mut out = format!(
            "{} {:?}: {} points\n",
            self.ring,
            self.site,
            self.points.len()
        );
        out.push_str(&table(&["point", "generators", "members"], &rows));
        out.push_str("Zariski opens:\n");
        out.push_str(&topology_lines(&self.hasse));
        out
    }

    fn dot(&self) -> Option<String> {
        let labels: Vec<String> = self
            .points
            .iter()
            .map(|p| format!("({})", p.generators.join(", ")))
            .collect();
        Some(topology_dot(&self.ring, &self.hasse, &labels))
    }
}

#[derive(Serialize)]
struct RingTopologyOut {
    ring: String,
    site: SiteKind,
    points: Vec<PointDescription>,
    zariski: Vec<Vec<usize>>,
    flat: Vec<Vec<usize>>,
    comparison: Comparison,
    clopens: Vec<Vec<usize>>,
    jacobson_quotient_absolutely_flat: bool,
    #[serde(skip)]
    zariski_topology: FiniteTopology,
}

fn ring_topology(ring: &FiniteRing, s: &SpecSite) -> Result<RingTopologyOut> {
    let z = s.zariski_topology()?;
    let f = s.flat_topology()?;
    let mut clopens: Vec<Vec<usize>> = z
        .clopens()
        .into_iter()
        .map(crate::spectrum::mask_points)
        .collect();
    clopens.sort();
    Ok(RingTopologyOut {
        ring: ring.describe(),
        site: s.kind(),
        points: s.describe_points(),
        zariski: z.to_lists(),
        flat: f.to_lists(),
        comparison: z.compare(&f)?,
        clopens,
        jacobson_quotient_absolutely_flat: ring.is_absolutely_flat_mod_jacobson(),
        zariski_topology: z,
    })
}

impl Payload for RingTopologyOut {
    fn table(&self) -> String {
        let mut out = format!(
            "{} {:?}: {} points\n",
            self.ring,
            self.site,
            self.points.len()
        );
        for p in &self.points {
            let _ = writeln!(out, "  {}: ({})", p.index, p.generators.join(", "));
        }
        let lines = |v: &Vec<Vec<usize>>| {
            v.iter()
                .map(|o| format!("  {}\n", list(o)))
                .collect::<String>()
        };
        let _ = write!(
            out,
            "Zariski opens:\n{}flat opens:\n{}",
            lines(&self.zariski),
            lines(&self.flat)
        );
        let _ = writeln!(out, "Zariski vs flat: {:?}", self.comparison);
        let _ = write!(out, "clopens:\n{}", lines(&self.clopens));
        let _ = writeln!(
            out,
            "R/J absolutely flat: {}",
            self.jacobson_quotient_absolutely_flat
        );
        out
    }

    fn dot(&self) -> Option<String> {
        let labels: Vec<String> = self
            .points
            .iter()
            .map(|p| format!("({})", p.generators.join(", ")))
            .collect();
        Some(topology_dot(&self.ring, &self.zariski_topology, &labels))
    }
}

#[derive(Serialize)]
struct LocalizationOut {
    ring: String,
    multiplicative_set: Vec<String>,
    localization_order: usize,
    /// Elements of `R` grouped by their image in `S⁻¹R`.
    fibres: Vec<Vec<String>>,
    kernel: Vec<String>,
    nil_contraction: Vec<String>,
}

fn localization(ring: &FiniteRing, s: &MultSet) -> Result<LocalizationOut> {
    let loc = localize(ring, s)?;
    let mut fibres: Vec<Vec<String>> = vec![Vec::new(); loc.ring.order()];
    for r in ring.elements() {
        fibres[loc.apply(r).0].push(ring.fmt_elem(r));
    }
    fibres.retain(|f| !f.is_empty());
    Ok(LocalizationOut {
        ring: ring.describe(),
        multiplicative_set: s.elements().map(|e| ring.fmt_elem(e)).collect(),
        localization_order: loc.ring.order(),
        fibres,
        kernel: members(ring, &loc.kernel(ring)),
        nil_contraction: members(ring, &loc.nil_contraction(ring)),
    })
}

impl Payload for LocalizationOut {
    fn table(&self) -> String {
        let mut out = format!(
            "{} localized at S = {{{}}}\n",
            self.ring,
            self.multiplicative_set.join(" ")
        );
        let _ = writeln!(out, "|S⁻¹R| = {}", self.localization_order);
        let rows: Vec<Vec<String>> = self
            .fibres
            .iter()
            .enumerate()
            .map(|(i, f)| vec![i.to_string(), f.join(" ")])
            .collect();
        out.push_str(&table(&["image", "preimage in R"], &rows));
        let _ = writeln!(out, "kernel: {{{}}}", self.kernel.join(" "));
        let _ = writeln!(
            out,
            "contraction of the nilradical: {{{}}}",
            self.nil_contraction.join(" ")
        );
        out
    }
}

#[derive(Serialize)]
struct QuotientTables {
    order: usize,
    /// A representative in `R` of each class.
    representatives: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

fn quotient_tables(ring: &FiniteRing, q: &Quotient) -> QuotientTables {
    let r = &q.ring;
    let grid = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
        r.elements()
            .map(|a| r.elements().map(|b| op(a, b).0).collect())
            .collect()
    };
    QuotientTables {
        order: r.order(),
        representatives: q
            .representatives
            .iter()
            .map(|&e| ring.fmt_elem(e))
            .collect(),
        add: grid(&|a, b| r.add(a, b)),
        mul: grid(&|a, b| r.mul(a, b)),
    }
}

#[derive(Serialize)]
struct MapEntry {
    class: usize,
    representative: String,
    image: String,
}

#[derive(Serialize)]
struct UltraOut {
    ring: String,
    label: String,
    position: usize,
    kind: UltraKind,
    generators: Vec<String>,
    members: Vec<String>,
    quotient: QuotientTables,
    quotient_is_field: bool,
    quotient_is_local: bool,
    /// `f + M* ↦ f_x` for star, `f + M♭ ↦ f̄ + M*` in the residue product for flat.
    canonical_map: Vec<MapEntry>,
    canonical_map_target: String,
    canonical_map_is_isomorphism: bool,
}

fn ultra(ring: &FiniteRing, at: &str, kind: Kind) -> Result<UltraOut> {
    let (atoms, labels) = ring
        .atoms()
        .ok_or_else(|| Error::invalid("ultra-ring ideals need a product ring description"))?;
    let x = labels
        .iter()
        .position(|l| l == at)
        .or_else(|| at.parse::<usize>().ok().filter(|&i| i < atoms.len()))
        .ok_or_else(|| {
            Error::invalid(format!(
                "no factor `{at}`; labels are {}",
                labels.join(", ")
            ))
        })?;
    let m = PrincipalMax::new(atoms.len(), x)?;
    let (ideal, q, entries, target, iso) = match kind {
        Kind::Star => {
            let u = ultraproduct(ring, m)?;
            let entries = u
                .quotient
                .representatives
                .iter()
                .enumerate()
                .map(|(c, &f)| MapEntry {
                    class: c,
                    representative: ring.fmt_elem(f),
                    image: u.factor.fmt_elem(u.comparison[c]),
                })
                .collect();
            let iso = u.comparison_is_isomorphism(ring, x);
            (
                ideal_star(ring, m)?.ideal,
                u.quotient,
                entries,
                u.factor.describe(),
                iso,
            )
        }
        Kind::Flat => {
            let rc = residue_comparison(ring, m)?;
            let entries = rc
                .flat_quotient
                .representatives
                .iter()
                .enumerate()
                .map(|(c, &f)| MapEntry {
                    class: c,
                    representative: ring.fmt_elem(f),
                    image: rc.residue_ring.fmt_elem(rc.star_quotient.lift(rc.map[c])),
                })
                .collect();
            let iso = rc.is_isomorphism();
            let target = format!("({})/M*", rc.residue_ring.describe());
            (
                ideal_flat(ring, m)?.ideal,
                rc.flat_quotient,
                entries,
                target,
                iso,
            )
        }
    };
    Ok(UltraOut {
        ring: ring.describe(),
        label: labels[x].clone(),
        position: x,
        kind: match kind {
            Kind::Star => UltraKind::Star,
            Kind::Flat => UltraKind::Flat,
        },
        generators: ideal
            .generators()
            .iter()
            .map(|&g| ring.fmt_elem(g))
            .collect(),
        members: members(ring, &ideal),
        quotient_is_field: q.ring.is_field(),
        quotient_is_local: q.ring.is_local(),
        quotient: quotient_tables(ring, &q),
        canonical_map: entries,
        canonical_map_target: target,
        canonical_map_is_isomorphism: iso,
    })
}

impl Payload for UltraOut {
    fn table(&self) -> String {
        let sym = match self.kind {
            UltraKind::Star => "M*",
            UltraKind::Flat => "M♭",
        };
        let mut out = format!(
            "{sym} at factor {} (position {}) of {}\n",
            self.label, self.position, self.ring
        );
        let _ = writeln!(out, "generators: ({})", self.generators.join(", "));
        let _ = writeln!(out, "members: {}", self.members.join(" "));
        let _ = writeln!(
            out,
            "R/{sym}: order {}, field {}, local {}",
            self.quotient.order, self.quotient_is_field, self.quotient_is_local
        );
        let grid = |t: &Vec<Vec<usize>>| {
            t.iter()
                .map(|r| {
                    format!(
                        "  {}\n",
                        r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                    )
                })
                .collect::<String>()
        };
        let _ = write!(
            out,
            "addition:\n{}multiplication:\n{}",
            grid(&self.quotient.add),
            grid(&self.quotient.mul)
        );
        let rows: Vec<Vec<String>> = self
            .canonical_map
            .iter()
            .map(|e| {
                vec![
                    e.class.to_string(),
                    e.representative.clone(),
                    e.image.clone(),
                ]
            })
            .collect();
        let _ = writeln!(out, "canonical map into {}:", self.canonical_map_target);
        out.push_str(&table(&["class", "representative", "image"], &rows));
        let _ = writeln!(out, "isomorphism: {}", self.canonical_map_is_isomorphism);
        out
    }
}

#[derive(Serialize)]
struct StonePointOut {
    x: usize,
    maximal_ideal: Family,
    ultrafilter: Family,
}

#[derive(Serialize)]
struct StoneSpecOut {
    n: usize,
    points: Vec<StonePointOut>,
    topology: Vec<Vec<usize>>,
    discrete: bool,
    #[serde(skip)]
    top: FiniteTopology,
}

fn stone_spec(n: usize) -> Result<StoneSpecOut> {
    let s = spec_finite_boolean(n)?;
    let points = s
        .points
        .iter()
        .enumerate()
        .map(|(x, m)| {
            Ok(StonePointOut {
                x,
                maximal_ideal: *m,
                ultrafilter: Ultrafilter::from_maximal(m)?.family(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(StoneSpecOut {
        n,
        points,
        topology: s.topology.to_lists(),
        discrete: s.topology == FiniteTopology::discrete(n)?,
        top: s.topology,
    })
}

impl Payload for StoneSpecOut {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .points
            .iter()
            .map(|p| {
                vec![
                    format!("m_{}", p.x),
                    p.maximal_ideal.to_string(),
                    p.ultrafilter.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "Spec P(X), |X| = {}: {} points, discrete {}\n",
            self.n,
            self.points.len(),
            self.discrete
        );
        out.push_str(&table(&["point", "maximal ideal", "ultrafilter"], &rows));
        out
    }

    fn dot(&self) -> Option<String> {
        let labels: Vec<String> = (0..self.n).map(|x| format!("m_{x}")).collect();
        Some(topology_dot("spec", &self.top, &labels))
    }
}

#[derive(Serialize)]
struct AtomOut {
    atom: String,
    infinite: bool,
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
enum CoverOut {
    Subcover {
        cover: Vec<String>,
        subcover: Vec<String>,
    },
    Uncovered {
        cover: Vec<String>,
        point: String,
    },
}

#[derive(Serialize)]
struct CompactificationOut {
    generators: Vec<String>,
    atoms: Vec<AtomOut>,
    points_at_infinity: Vec<String>,
    covers: Vec<CoverOut>,
    #[serde(skip)]
    space: Compactification,
    #[serde(skip)]
    window: usize,
}

fn parse_cover(text: &str) -> Result<Vec<UpSet>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(UpSet::parse)
        .collect()
}

fn compactification(
    c: &Compactification,
    covers: &[String],
    window: usize,
) -> Result<CompactificationOut> {
    let generators = c
        .ring()
        .generators()
        .unwrap_or(&[])
        .iter()
        .map(UpSet::to_string)
        .collect();
    let dec = c.decomposition();
    let atoms = dec
        .atoms
        .iter()
        .zip(&dec.infinite_flags)
        .map(|(a, &inf)| AtomOut {
            atom: a.to_string(),
            infinite: inf,
        })
        .collect();
    let mut outs = Vec::new();
    for text in covers {
        let sets = parse_cover(text)?;
        let shown: Vec<String> = sets.iter().map(UpSet::to_string).collect();
        outs.push(match check_cover(c, &sets)? {
            CoverCheck::Subcover(idx) => CoverOut::Subcover {
                subcover: idx.iter().map(|&i| shown[i].clone()).collect(),
                cover: shown,
            },
            CoverCheck::Uncovered(p) => CoverOut::Uncovered {
                cover: shown,
                point: point_label(&p),
            },
        });
    }
    Ok(CompactificationOut {
        generators,
        atoms,
        points_at_infinity: c.points_at_infinity().iter().map(point_label).collect(),
        covers: outs,
        space: c.clone(),
        window,
    })
}

impl Payload for CompactificationOut {
    fn table(&self) -> String {
        let mut out = format!(
            "ring generated by Fin(N) and [{}]\n",
            self.generators.join(", ")
        );
        let rows: Vec<Vec<String>> = self
            .atoms
            .iter()
            .map(|a| {
                vec![
                    a.atom.clone(),
                    if a.infinite {
                        "point at infinity"
                    } else {
                        "finite"
                    }
                    .to_string(),
                ]
            })
            .collect();
        out.push_str(&table(&["atom", "contributes"], &rows));
        for c in &self.covers {
            match c {
                CoverOut::Subcover { cover, subcover } => {
                    let _ = writeln!(
                        out,
                        "cover [{}]: finite subcover [{}]",
                        cover.join(", "),
                        subcover.join(", ")
                    );
                }
                CoverOut::Uncovered { cover, point } => {
                    let _ = writeln!(out, "cover [{}]: does not cover {point}", cover.join(", "));
                }
            }
        }
        out
    }

    fn dot(&self) -> Option<String> {
        Some(emit::compactification_dot(&self.space, self.window))
    }
}

#[derive(Serialize)]
struct ProbeOut {
    set: String,
    /// Naturals of `D(A)` below the window.
    naturals: Vec<usize>,
    contains_infinity: bool,
}

#[derive(Serialize)]
struct AlexandroffOut {
    window: usize,
    probes: Vec<ProbeOut>,
}

fn alexandroff_probes(probes: &[String], window: usize) -> Result<AlexandroffOut> {
    let c = crate::stone::alexandroff();
    let inf = StonePoint::Infinity(UpSet::naturals());
    let probes = probes
        .iter()
        .map(|text| {
            let a = UpSet::parse(text)?;
            if !BoolRing::FinCofin.contains(&a)? {
                return Err(Error::invalid(format!(
                    "{a} is neither finite nor cofinite"
                )));
            }
            let d = c.basic_open(&a)?;
            Ok(ProbeOut {
                set: a.to_string(),
                naturals: (0..window).filter(|&x| d.naturals.contains(x)).collect(),
                contains_infinity: c.in_basic_open(&inf, &a)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(AlexandroffOut { window, probes })
}

impl Payload for AlexandroffOut {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .probes
            .iter()
            .map(|p| {
                let more = if p.contains_infinity { " .." } else { "" };
                vec![
                    p.set.clone(),
                    format!("{}{more}", list(&p.naturals)),
                    if p.contains_infinity { "yes" } else { "no" }.to_string(),
                ]
            })
            .collect();
        table(&["A", "naturals in D(A)", "∞ in D(A)"], &rows)
    }
}

#[derive(Serialize)]
struct SpaceBetaOut {
    space: SpaceDescription,
    partition: Vec<Vec<usize>>,
    projection: Vec<usize>,
    convergence: Vec<(usize, usize)>,
    quotient_topology: Vec<Vec<usize>>,
    #[serde(skip)]
    top: FiniteTopology,
}

fn space_beta(space: &FiniteSpace) -> Result<SpaceBetaOut> {
    let b = beta(space)?;
    Ok(SpaceBetaOut {
        space: SpaceDescription::of(space),
        quotient_topology: b.quotient_topology(space)?.to_lists(),
        partition: b.partition,
        projection: b.projection,
        convergence: space.convergence(),
        top: space.topology().clone(),
    })
}

impl Payload for SpaceBetaOut {
    fn table(&self) -> String {
        let classes: Vec<String> = self.partition.iter().map(|c| list(c)).collect();
        let conv: Vec<String> = self
            .convergence
            .iter()
            .map(|(y, x)| format!("{y}→{x}"))
            .collect();
        format!(
            "points: {}\nβX classes: {}\nprojection: {:?}\nconvergence: {}\n",
            self.projection.len(),
            classes.join(" "),
            self.projection,
            conv.join(" ")
        )
    }

    fn dot(&self) -> Option<String> {
        let labels: Vec<String> = self
            .projection
            .iter()
            .enumerate()
            .map(|(x, c)| format!("{x} [class {c}]"))
            .collect();
        Some(topology_dot("space", &self.top, &labels))
    }
}

#[derive(Serialize)]
struct CheckOut {
    check: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct SpaceCheckOut {
    space: SpaceDescription,
    checks: Vec<CheckOut>,
}

fn space_check(space: &FiniteSpace) -> Result<SpaceCheckOut> {
    let b = beta(space)?;
    let sim = similarity_classes(space)?;
    let universal = universal_partitions(space)?;
    let pi0 = pi0_spec_check(space)?;
    let top = space.topology();
    let n = space.points();
    let bad_opens: Vec<String> = (0..=top.full_set())
        .filter(|&a| space.open_via_convergence(a) != top.is_open(a))
        .map(mask_list)
        .collect();
    let conv_ok = (0..n).all(|y| (0..n).all(|x| space.converges(y, x) == top.in_closure_of(x, y)));
    let checks = vec![
        CheckOut {
            check: "β classes = components = ∼ classes",
            pass: sim == b,
            detail: format!("{} classes", b.classes()),
        },
        CheckOut {
            check: "β is the only partition universal for discrete targets",
            pass: universal == vec![b.clone()],
            detail: format!("{} universal partitions", universal.len()),
        },
        CheckOut {
            check: "quotient factors every map into a discrete space",
            pass: b.factors_all_maps(space)?,
            detail: String::new(),
        },
        CheckOut {
            check: "π₀(X) ≅ Spec Clop(X)",
            pass: pi0.holds,
            detail: format!(
                "{} clopens, {} points of Spec",
                pi0.clopen_count, pi0.spec_points
            ),
        },
        CheckOut {
            check: "m_y converges to x iff x ∈ cl{y}",
            pass: conv_ok,
            detail: String::new(),
        },
        CheckOut {
            check: "open iff closed under convergence",
            pass: bad_opens.is_empty(),
            detail: bad_opens.join(" "),
        },
    ];
    Ok(SpaceCheckOut {
        space: SpaceDescription::of(space),
        checks,
    })
}

impl Payload for SpaceCheckOut {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    if c.pass { "PASS" } else { "FAIL" }.to_string(),
                    c.check.to_string(),
                    c.detail.clone(),
                ]
            })
            .collect();
        table(&["result", "check", "detail"], &rows)
    }
}
