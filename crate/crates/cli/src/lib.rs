//! Command dispatch for the `isotopy` binary.

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isotopy_core::alexander::{alexander_burau, alexander_from_braid, torus_knot_alexander};
use isotopy_core::braid::{closure_info, trefoil_braid, BraidWord, FamilyKind};
use isotopy_core::fox::closure_presentation;
use isotopy_core::quotients::{
    abelianization_invariants, distinguish_family, hom_count, is_degenerate_slope,
    surgery_quotient, FamilyPartition, FiniteGroupTable, HomCountReport, DEFAULT_HOM_BUDGET,
};
use isotopy_core::report::reproduce_paper;
use isotopy_core::surgery::{slope, torus_class, LinkSurgeryDescriptor, SlopeData, TorusClass};
use isotopy_core::swcount::{beta_sweep, BetaTable, SweepOptions};
use isotopy_core::{Error, LaurentPoly, Result};

/// Environment variable overriding the hom-count enumeration budget.
pub const BUDGET_ENV: &str = "ISOTOPY_HOM_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteChoice {
    Minor,
    Burau,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    Cable,
    TrefoilFiber,
}

#[derive(Debug, Parser)]
#[command(
    name = "isotopy",
    version,
    about = "Link invariants for braid-generated families of curves"
)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Maximum |G|^generators for hom counting (default from ISOTOPY_HOM_BUDGET, else 3600).
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial of a braid closure.
    Alex {
        /// Braid as a file path or inline text, e.g. "strands=3; 1 2 1 2".
        #[arg(long, required_unless_present = "torus", conflicts_with = "torus")]
        braid: Option<String>,
        /// Torus knot `p,q` via the closed form.
        #[arg(long)]
        torus: Option<String>,
        #[arg(long, value_enum, default_value = "minor")]
        route: RouteChoice,
    },
    /// Torres lower bounds and basic-class counts along a family.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyChoice,
        #[arg(long)]
        pmax: i64,
        #[arg(long, default_value_t = 1)]
        pmin: i64,
        /// Use the family K ∪ M ∪ γ_p with the meridian M.
        #[arg(long)]
        three_component: bool,
        /// Compute the full Alexander polynomial for p up to this value.
        #[arg(long, default_value_t = 4)]
        full_max_p: i64,
    },
    /// Surgery slope on link components.
    Slope {
        /// Linking matrix as JSON (inline or file).
        #[arg(long)]
        link: String,
        /// Fiber class as a JSON vector.
        #[arg(long)]
        m: String,
        /// Only this component (0-based); all components otherwise.
        #[arg(long)]
        component: Option<usize>,
    },
    /// Homology class of S¹ × γ from linking numbers.
    Homology(HomologyArgs),
    /// Surgery quotients and hom counts into finite groups.
    Pi1(Pi1Args),
    /// Full report: torus growth, Torres bounds, unknot controls, trefoil quotients.
    ReproducePaper,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    /// Linking numbers of γ with the link components, as a JSON vector.
    #[arg(long, required_unless_present = "braid", conflicts_with = "braid")]
    pub lk: Option<String>,
    /// Braid whose last closure component is γ; the others form the link.
    #[arg(long)]
    pub braid: Option<String>,
    /// Second vector to compare classes with.
    #[arg(long)]
    pub compare: Option<String>,
}

#[derive(Debug, Args)]
pub struct Pi1Args {
    /// Knot braid (default: the trefoil σ₁³).
    #[arg(long)]
    pub braid: Option<String>,
    /// Surgery slope `1/p`.
    #[arg(long, conflicts_with = "family")]
    pub surgery: Option<String>,
    /// Comma-separated targets: S<n>, A<n>, Z<n>.
    #[arg(long, default_value = "S3,S4,A5")]
    pub targets: String,
    /// Partition the quotients for p = 1..pmax by hom counts.
    #[arg(long, requires = "pmax")]
    pub family: bool,
    #[arg(long)]
    pub pmax: Option<i64>,
}

/// Result of one command, ready for printing.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

/// Reads a file when `arg` names one, otherwise returns `arg` itself.
fn inline_or_file(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    let text = inline_or_file(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn parse_braid(arg: &str) -> Result<BraidWord> {
    BraidWord::parse(inline_or_file(arg)?.trim())
}

fn parse_slope(s: &str) -> Result<i64> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("slope `{s}` is not of the form 1/p")))?;
    let num: i64 = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad slope numerator `{num}`")))?;
    let den: i64 = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad slope denominator `{den}`")))?;
    if num != 1 {
        return Err(Error::InvalidParameter(format!(
            "only slopes 1/p are supported, got {s}"
        )));
    }
    Ok(den)
}

fn parse_targets(s: &str) -> Result<Vec<FiniteGroupTable>> {
    s.split(',')
        .map(|t| FiniteGroupTable::by_name(t.trim()))
        .collect()
}

/// `--budget`, then the environment variable, then the default.
pub fn resolve_budget(flag: Option<u128>) -> Result<u128> {
    let budget = match flag {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v} is not a positive integer")))?,
            Err(_) => DEFAULT_HOM_BUDGET,
        },
    };
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    Ok(budget)
}

#[derive(Serialize)]
struct AlexRoute {
    route: &'static str,
    polynomial: String,
    terms: usize,
    poly: LaurentPoly,
}

#[derive(Serialize)]
struct AlexOutput {
    braid: String,
    components: usize,
    linking: Vec<Vec<i64>>,
    results: Vec<AlexRoute>,
    routes_agree: Option<bool>,
}

#[derive(Serialize)]
struct TorusOutput {
    p: i64,
    q: i64,
    route: &'static str,
    polynomial: String,
    terms: usize,
    poly: LaurentPoly,
}

fn run_torus(spec: &str) -> Result<Output> {
    let bad = || Error::Parse(format!("torus parameters `{spec}` are not of the form p,q"));
    let (p, q) = spec.split_once(',').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    let poly = torus_knot_alexander(p, q)?;
    let text = format!("T({p},{q})\nclosed-form: {poly}\n");
    let out = TorusOutput {
        p,
        q,
        route: "closed-form",
        polynomial: poly.to_string(),
        terms: poly.nonzero_term_count(),
        poly,
    };
    Ok(Output {
        text,
        json: to_json(&out),
    })
}

fn run_alex(braid: &str, route: RouteChoice) -> Result<Output> {
    let b = parse_braid(braid)?;
    let info = closure_info(&b);
    let mut results = Vec::new();
    if matches!(route, RouteChoice::Minor | RouteChoice::Both) {
        let r = alexander_from_braid(&b)?;
        results.push(AlexRoute {
            route: "minor-division",
            polynomial: r.poly.to_string(),
            terms: r.poly.nonzero_term_count(),
            poly: r.poly,
        });
    }
    if matches!(route, RouteChoice::Burau | RouteChoice::Both) {
        let p = alexander_burau(&b)?;
        results.push(AlexRoute {
            route: "burau",
            polynomial: p.to_string(),
            terms: p.nonzero_term_count(),
            poly: p,
        });
    }
    let routes_agree =
        (results.len() == 2).then(|| results[0].poly.equal_up_to_units(&results[1].poly));
    let out = AlexOutput {
        braid: b.to_string(),
        components: info.num_components(),
        linking: info.linking,
        results,
        routes_agree,
    };
    let mut text = format!("braid: {}\ncomponents: {}\n", out.braid, out.components);
    for r in &out.results {
        text.push_str(&format!("{}: {}\n", r.route, r.polynomial));
    }
    if let Some(a) = out.routes_agree {
        text.push_str(&format!("routes agree: {}\n", if a { "yes" } else { "no" }));
    }
    Ok(Output {
        text,
        json: to_json(&out),
    })
}

fn run_sweep(
    family: FamilyChoice,
    pmin: i64,
    pmax: i64,
    three: bool,
    full_max_p: i64,
) -> Result<Output> {
    let kind = match (family, three) {
        (FamilyChoice::TrefoilFiber, false) => FamilyKind::CircleSum,
        (FamilyChoice::TrefoilFiber, true) => FamilyKind::TrefoilFiber,
        (FamilyChoice::Cable, false) => FamilyKind::Cable,
        (FamilyChoice::Cable, true) => {
            return Err(Error::InvalidParameter(
                "the cable family has no three-component version".into(),
            ))
        }
    };
    let table: BetaTable = beta_sweep(
        kind,
        pmin..=pmax,
        SweepOptions {
            full_delta_max_p: full_max_p,
        },
    )?;
    let mut text = format!(
        "{:>4} {:>11} {:>6} {:>7}\n",
        "p", "lower bound", "beta", "torres"
    );
    for r in &table.rows {
        let beta = r.beta.map_or("-".to_string(), |b| b.to_string());
        let torres = match r.torres_verified {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        text.push_str(&format!(
            "{:>4} {:>11} {:>6} {:>7}\n",
            r.p, r.lower_bound, beta, torres
        ));
    }
    Ok(Output {
        text,
        json: to_json(&table),
    })
}

fn run_slope(link: &str, m: &str, component: Option<usize>) -> Result<Output> {
    let linking: Vec<Vec<i64>> = parse_json(link, "linking matrix")?;
    let m: Vec<i64> = parse_json(m, "fiber class")?;
    let desc = LinkSurgeryDescriptor::new(linking, m)?;
    let comps: Vec<usize> = match component {
        Some(i) => vec![i],
        None => (0..desc.num_components()).collect(),
    };
    let slopes = comps
        .into_iter()
        .map(|i| slope(&desc, i))
        .collect::<Result<Vec<SlopeData>>>()?;
    let mut text = String::new();
    for s in &slopes {
        text.push_str(&format!(
            "component {}: {}*sigma = {}*mu + {}*lambda, sigma = ({}, {})\n",
            s.component, s.divisibility, s.mu_coeff, s.lambda_coeff, s.sigma.0, s.sigma.1
        ));
    }
    Ok(Output {
        text,
        json: to_json(&slopes),
    })
}

#[derive(Serialize)]
struct HomologyOutput {
    class: TorusClass,
    nullhomologous: bool,
    equal_to_comparison: Option<bool>,
}

fn run_homology(args: &HomologyArgs) -> Result<Output> {
    let lk: Vec<i64> = match (&args.lk, &args.braid) {
        (Some(v), _) => parse_json(v, "linking vector")?,
        (None, Some(b)) => {
            let info = closure_info(&parse_braid(b)?);
            let n = info.num_components();
            if n < 2 {
                return Err(Error::TooFewComponents(n));
            }
            info.linking[n - 1][..n - 1].to_vec()
        }
        (None, None) => return Err(Error::Parse("need --lk or --braid".into())),
    };
    let class = torus_class(&lk, lk.len())?;
    let equal_to_comparison = match &args.compare {
        Some(c) => {
            let other: Vec<i64> = parse_json(c, "comparison vector")?;
            Some(isotopy_core::surgery::classes_equal(
                &class,
                &torus_class(&other, other.len())?,
            ))
        }
        None => None,
    };
    let terms: Vec<String> = class
        .coefficients
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, c)| format!("{c}*[S1 x mu(K{})]", j + 1))
        .collect();
    let mut text = format!(
        "class: {}\n",
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    );
    if let Some(e) = equal_to_comparison {
        text.push_str(&format!(
            "equal to comparison: {}\n",
            if e { "yes" } else { "no" }
        ));
    }
    let out = HomologyOutput {
        nullhomologous: class.is_nullhomologous(),
        class,
        equal_to_comparison,
    };
    Ok(Output {
        text,
        json: to_json(&out),
    })
}

#[derive(Serialize)]
struct QuotientOutput {
    slope: String,
    degenerate: bool,
    abelianization: Vec<u64>,
    homs: Vec<HomCountReport>,
}

fn run_pi1(args: &Pi1Args, budget: u128) -> Result<Output> {
    let knot = match &args.braid {
        Some(b) => parse_braid(b)?,
        None => trefoil_braid(),
    };
    let info = closure_info(&knot);
    if !info.is_knot() {
        return Err(Error::NotAKnot {
            components: info.num_components(),
        });
    }
    let targets = parse_targets(&args.targets)?;
    let g = closure_presentation(&knot);
    if args.family {
        let pmax = args.pmax.expect("clap enforces --pmax");
        if pmax < 1 {
            return Err(Error::InvalidParameter(format!(
                "pmax must be at least 1, got {pmax}"
            )));
        }
        let members = (1..=pmax)
            .map(|p| Ok((format!("1/{p}"), surgery_quotient(&g, 0, p)?)))
            .collect::<Result<Vec<_>>>()?;
        let part: FamilyPartition = distinguish_family(&members, &targets, budget)?;
        let mut text = format!("{:>6}", "slope");
        for t in &part.targets {
            text.push_str(&format!(" {t:>5}"));
        }
        text.push('\n');
        for m in &part.members {
            text.push_str(&format!("{:>6}", m.id));
            for c in &m.counts {
                text.push_str(&format!(" {c:>5}"));
            }
            text.push('\n');
        }
        text.push_str("blocks:");
        for b in &part.blocks {
            text.push_str(&format!(" {{{}}}", b.join(", ")));
        }
        text.push_str("\ndifferent blocks have non-isomorphic groups; a shared block is not a proof of isomorphism\n");
        return Ok(Output {
            text,
            json: to_json(&part),
        });
    }
    let (label, group, degenerate) = match &args.surgery {
        Some(s) => {
            let p = parse_slope(s)?;
            (
                format!("1/{p}"),
                surgery_quotient(&g, 0, p)?,
                is_degenerate_slope(p),
            )
        }
        None => ("complement".to_string(), g, false),
    };
    let homs = targets
        .iter()
        .map(|t| hom_count(&group, &label, t, budget))
        .collect::<Result<Vec<_>>>()?;
    let out = QuotientOutput {
        slope: label,
        degenerate,
        abelianization: abelianization_invariants(&group)?,
        homs,
    };
    let mut text = format!("group: {}\n", out.slope);
    if out.degenerate {
        text.push_str("note: p = 0 lies outside the 1/p surgery family\n");
    }
    text.push_str(&format!("H1 invariants: {:?}\n", out.abelianization));
    for h in &out.homs {
        text.push_str(&format!(
            "{}: {} homomorphisms, {} with nonabelian image\n",
            h.target, h.total, h.nonabelian
        ));
    }
    Ok(Output {
        text,
        json: to_json(&out),
    })
}

pub fn run(config: &RunConfig) -> Result<Output> {
    match &config.command {
        Command::Alex {
            braid,
            torus,
            route,
        } => match (braid, torus) {
            (Some(b), _) => run_alex(b, *route),
            (None, Some(t)) => run_torus(t),
            (None, None) => Err(Error::Parse("need --braid or --torus".into())),
        },
        Command::Sweep {
            family,
            pmax,
            pmin,
            three_component,
            full_max_p,
        } => run_sweep(*family, *pmin, *pmax, *three_component, *full_max_p),
        Command::Slope { link, m, component } => run_slope(link, m, *component),
        Command::Homology(args) => run_homology(args),
        Command::Pi1(args) => run_pi1(args, resolve_budget(config.budget)?),
        Command::ReproducePaper => {
            let r = reproduce_paper(resolve_budget(config.budget)?)?;
            Ok(Output {
                text: r.to_text(),
                json: to_json(&r),
            })
        }
    }
}

/// 0 on success, 1 for domain errors, 2 for unparseable input.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_parse() {
        2
    } else {
        1
    }
}
