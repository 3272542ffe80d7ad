//! Command-line front end. Exit codes: 0 success, 1 check failure,
//! 2 usage error, 3 computation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::affine::hilbert_affinized_jobs;
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::groebner::MonomialOrder;
use crate::hl::modified_hl;
use crate::lie::{Family, LieAlgebra, Weight};
use crate::qseries::CharacterQSeries;
use crate::verify::{self, CheckReport, ManifestCase, ManifestLine, ModelContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

pub const DEFAULT_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "qflag", version, about = "Affinized flag-variety coordinate rings: Gröbner bases, Hilbert series, Hall-Littlewood polynomials and identity checks")]
pub struct Cli {
    /// Truncation order in q.
    #[arg(long = "N", global = true)]
    pub truncation: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Built-in fixture name or path to a fixture file.
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Directory searched for `<name>.json` before the built-ins.
    #[arg(long, global = true)]
    pub fixture_dir: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis and leading-term ideal of a fixture.
    Groebner {
        /// Compare the leading-term ideal with the fixture's expectation.
        #[arg(long)]
        expect: bool,
        /// Comma-separated variable order replacing the fixture's.
        #[arg(long)]
        order: Option<String>,
    },
    /// Graded character of the affinized quotient at multidegree M.
    Hilbert {
        #[arg(long = "M", value_delimiter = ',', allow_hyphen_values = true)]
        m: Vec<i64>,
        /// Choose auxiliary variables greedily instead of the stored substitutions.
        #[arg(long)]
        greedy: bool,
    },
    /// Modified Hall-Littlewood polynomials M_{μλ}(q).
    Hl {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Run identity and conjecture checks.
    Check {
        selector: Selector,
        #[arg(long = "M1")]
        m1: Option<u32>,
        #[arg(long = "M2")]
        m2: Option<u32>,
        #[arg(long = "M", value_delimiter = ',')]
        m: Option<Vec<u32>>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "case")]
        case: Option<String>,
        #[arg(long, value_enum)]
        line: Option<LineArg>,
    },
    /// Built-in fixture corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Selector {
    Id35,
    Id36,
    Id313,
    Dim243,
    Euler,
    Manifest,
    Conj21,
    Conj51,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LineArg {
    Spinor,
    Vector,
    Mixed,
}

impl From<LineArg> for ManifestLine {
    fn from(l: LineArg) -> Self {
        match l {
            LineArg::Spinor => ManifestLine::Spinor,
            LineArg::Vector => ManifestLine::Vector,
            LineArg::Mixed => ManifestLine::Mixed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub order: Option<usize>,
    pub jobs: usize,
    pub format: Format,
    pub fixture_dir: Option<PathBuf>,
}

impl RunConfig {
    fn order_or(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }

    fn load(&self, name: &str) -> Result<Fixture> {
        Fixture::load_from(self.fixture_dir.as_deref(), name)
    }
}

/// What a command produced: its structured result, a text rendering and
/// whether every check in it passed.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub passed: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Domain(_) | Error::NotClaimed(_) | Error::Fixture(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let cfg = RunConfig { order: cli.truncation, jobs: cli.jobs.max(1), format: cli.format, fixture_dir: cli.fixture_dir.clone() };
    let (name, params) = describe(&cli);
    match dispatch(&cli, &cfg) {
        Ok(o) => {
            let _ = match cfg.format {
                Format::Text => write!(out, "{}", o.text),
                Format::Structured => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json!({"command": name, "params": params, "result": o.result})).unwrap()
                ),
            };
            if o.passed {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "qflag: {e}");
            exit_code(&e)
        }
    }
}

fn describe(cli: &Cli) -> (&'static str, Value) {
    let mut p = json!({"fixture": cli.fixture, "N": cli.truncation});
    let name = match &cli.command {
        Command::Groebner { expect, order } => {
            p["expect"] = json!(expect);
            p["order"] = json!(order);
            "groebner"
        }
        Command::Hilbert { m, greedy } => {
            p["M"] = json!(m);
            p["greedy"] = json!(greedy);
            "hilbert"
        }
        Command::Hl { algebra, lambda } => {
            p["algebra"] = json!(algebra);
            p["lambda"] = json!(lambda);
            "hl"
        }
        Command::Check { selector, m1, m2, m, algebra, case, line } => {
            p["selector"] = json!(format!("{selector:?}").to_lowercase());
            p["M1"] = json!(m1);
            p["M2"] = json!(m2);
            p["M"] = json!(m);
            p["algebra"] = json!(algebra);
            p["case"] = json!(case);
            p["line"] = json!(line.map(|l| format!("{l:?}").to_lowercase()));
            "check"
        }
        Command::Fixtures { .. } => "fixtures list",
    };
    if let Value::Object(map) = &mut p {
        map.retain(|_, v| !v.is_null());
    }
    (name, p)
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<Outcome> {
    let fixture = || -> Result<Fixture> {
        let name = cli.fixture.as_deref().ok_or_else(|| Error::Config("--fixture is required".into()))?;
        cfg.load(name)
    };
    match &cli.command {
        Command::Groebner { expect, order } => cmd_groebner(&fixture()?, order.as_deref(), *expect),
        Command::Hilbert { m, greedy } => cmd_hilbert(&fixture()?, m, *greedy, cfg),
        Command::Hl { algebra, lambda } => cmd_hl(algebra, lambda),
        Command::Check { selector, m1, m2, m, algebra, case, line } => {
            let req = CheckRequest {
                m1: *m1,
                m2: *m2,
                m: m.clone(),
                algebra: algebra.clone(),
                case: case.clone(),
                line: line.map(Into::into),
                fixture: cli.fixture.clone(),
            };
            cmd_check(*selector, &req, cfg)
        }
        Command::Fixtures { action: FixturesAction::List } => cmd_fixtures_list(),
    }
}

fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// `[{weight, series}]` sorted by Dynkin labels, `N+1` coefficients each.
pub fn series_json(s: &CharacterQSeries) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(w, q)| {
                let coeffs: Vec<Value> = (0..=s.order()).map(|k| coeff_json(q.coeff(k))).collect();
                json!({"weight": w.0, "series": coeffs})
            })
            .collect(),
    )
}

fn series_text(s: &CharacterQSeries) -> String {
    let mut t = String::new();
    for (w, q) in s.terms() {
        let coeffs: Vec<String> = (0..=s.order()).map(|k| q.coeff(k).to_string()).collect();
        t.push_str(&format!("{w}: {}\n", coeffs.join(" ")));
    }
    t
}

pub fn cmd_groebner(fx: &Fixture, order: Option<&str>, expect: bool) -> Result<Outcome> {
    let names = fx.names();
    let ord = match order {
        Some(spec) => {
            let seq: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).collect();
            MonomialOrder::from_names(&names, &seq)?
        }
        None => fx.order.clone(),
    };
    let gb = fx.groebner_with_order(&ord)?;
    let lt = crate::groebner::lt_ideal(&gb);
    let polys: Vec<String> = gb.polys.iter().map(|p| p.format(&names, &ord)).collect();
    let lts = lt.format(&names);
    let mut passed = true;
    let mut result = json!({"basis": polys, "leading_terms": lts});
    let mut text = format!("Gröbner basis of {} ({} elements):\n", fx.name(), polys.len());
    for p in &polys {
        text.push_str(&format!("  {p}\n"));
    }
    text.push_str(&format!("leading-term ideal ({} generators):\n  {}\n", lts.len(), lts.join(", ")));
    if expect {
        let want = fx.expected_lt()?;
        passed = want == lt;
        result["expected"] = json!(want.format(&names));
        result["matches"] = json!(passed);
        text.push_str(if passed { "matches expectation\n" } else { "DIFFERS from expectation\n" });
        if !passed {
            text.push_str(&format!("  expected: {}\n", want.format(&names).join(", ")));
        }
    }
    Ok(Outcome { result, text, passed })
}

pub fn cmd_hilbert(fx: &Fixture, m: &[i64], greedy: bool, cfg: &RunConfig) -> Result<Outcome> {
    let rank = fx.algebra.rank;
    if m.len() != rank {
        return Err(Error::Domain(format!("--M needs {rank} entries for {}", fx.name())));
    }
    let order = cfg.order_or(DEFAULT_ORDER);
    let q = if greedy { fx.quadratized_greedy()? } else { fx.quadratized()? };
    let series = if m.iter().any(|&x| x < 0) {
        CharacterQSeries::zero(order)
    } else {
        let mu: Vec<u32> = m.iter().map(|&x| x as u32).collect();
        hilbert_affinized_jobs(&q.model, &mu, order, cfg.jobs)
    };
    let pairs = q.model.pair_monomials();
    let mut result = json!({"pairs": pairs, "N": order, "series": series_json(&series)});
    let mut text = format!("{} quadratic pairs: {}\n", pairs.len(), pairs.join(", "));
    if series.is_empty() {
        result["note"] = json!("no compositions reach this multidegree");
        text.push_str("empty series: no compositions reach this multidegree\n");
    }
    text.push_str(&series_text(&series));
    Ok(Outcome { result, text, passed: true })
}

pub fn cmd_hl(algebra: &str, lambda: &[i64]) -> Result<Outcome> {
    let alg = LieAlgebra::named(algebra)?;
    let w = Weight(lambda.to_vec());
    if w.rank() != alg.rank || !w.is_dominant() {
        return Err(Error::Domain(format!("λ = {w} is not a dominant weight of {algebra}")));
    }
    if alg.family == Family::B {
        let m: Vec<u32> = lambda.iter().map(|&x| x as u32).collect();
        if !verify::conjecture_51_supported(&alg, &m) {
            return Err(Error::Domain(format!("λ = {w} uses a middle fundamental weight of {algebra}")));
        }
    }
    let table = modified_hl(&alg, &w)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for (mu, p) in &table {
        let coeffs: Vec<Value> = p.coeffs().iter().map(coeff_json).collect();
        rows.push(json!({"mu": mu.0, "poly": coeffs}));
        text.push_str(&format!("{mu}: {p}\n"));
    }
    Ok(Outcome { result: Value::Array(rows), text, passed: true })
}

pub fn cmd_fixtures_list() -> Result<Outcome> {
    let list = fixtures::list()?;
    let text = list.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
    Ok(Outcome { result: json!(list), text, passed: true })
}

/// Parameters shared by the check selectors; unset fields mean the full grid.
#[derive(Clone, Debug, Default)]
pub struct CheckRequest {
    pub m1: Option<u32>,
    pub m2: Option<u32>,
    pub m: Option<Vec<u32>>,
    pub algebra: Option<String>,
    pub case: Option<String>,
    pub line: Option<ManifestLine>,
    pub fixture: Option<String>,
}

type Job = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

fn pair_grid(req: &CheckRequest, max: u32) -> Vec<(u32, u32)> {
    match (req.m1, req.m2) {
        (Some(a), Some(b)) => vec![(a, b)],
        _ => (0..=max).flat_map(|a| (0..=max).map(move |b| (a, b))).collect(),
    }
}

fn cached(cfg: &RunConfig, name: &str, cache: &mut Vec<(String, std::sync::Arc<ModelContext>)>) -> Result<std::sync::Arc<ModelContext>> {
    if let Some((_, c)) = cache.iter().find(|(n, _)| n == name) {
        return Ok(c.clone());
    }
    let c = std::sync::Arc::new(ModelContext::from_fixture(cfg.load(name)?)?);
    cache.push((name.to_string(), c.clone()));
    Ok(c)
}

/// The jobs a selector expands to, in report order.
pub fn build_jobs(selector: Selector, req: &CheckRequest, cfg: &RunConfig) -> Result<Vec<Job>> {
    let id_n = cfg.order_or(verify::DEFAULT_IDENTITY_ORDER);
    let conj_n = cfg.order_or(verify::DEFAULT_CONJECTURE_ORDER);
    let mut jobs: Vec<Job> = Vec::new();
    let mut cache = Vec::new();
    let select = |s: Selector| selector == s || selector == Selector::All;
    if select(Selector::Id35) {
        for (a, b) in pair_grid(req, 5) {
            jobs.push(Box::new(move || Ok(verify::check_identity_35(a, b, id_n))));
        }
    }
    if select(Selector::Id36) {
        for (a, b) in pair_grid(req, 5) {
            jobs.push(Box::new(move || Ok(verify::check_identity_36(a, b, id_n))));
        }
    }
    if select(Selector::Id313) {
        let n = cfg.order_or(10);
        let grid = match (&req.m, selector) {
            (Some(m), Selector::Id313) => vec![m.clone()],
            _ => verify::identity_313_grid(),
        };
        for m in grid {
            jobs.push(Box::new(move || Ok(verify::check_identity_313_316(&m, n))));
        }
    }
    if select(Selector::Dim243) {
        for (a, b) in pair_grid(req, 5) {
            jobs.push(Box::new(move || verify::check_dim_243(a, b)));
        }
    }
    if select(Selector::Euler) {
        let names: Vec<String> = match (&req.fixture, selector) {
            (Some(f), Selector::Euler) => vec![f.clone()],
            _ => vec!["sl3".into(), "so5".into()],
        };
        for name in names {
            let fx = std::sync::Arc::new(cfg.load(&name)?);
            let grid = match (&req.m, selector) {
                (Some(m), Selector::Euler) => vec![m.clone()],
                _ => verify::bounded_vectors(fx.algebra.rank, 4, 4),
            };
            for m in grid {
                let fx = fx.clone();
                jobs.push(Box::new(move || verify::check_euler_poincare(&fx, &m)));
            }
        }
    }
    if select(Selector::Manifest) {
        let grid: Vec<(ManifestCase, Option<ManifestLine>, Vec<u32>)> = match selector {
            Selector::Manifest if req.m.is_some() || req.case.is_some() => {
                let case = req
                    .case
                    .as_deref()
                    .or(req.fixture.as_deref())
                    .ok_or_else(|| Error::Config("manifest check needs --case".into()))?;
                let m = req.m.clone().ok_or_else(|| Error::Config("manifest check needs --M".into()))?;
                vec![(ManifestCase::parse(case)?, req.line, m)]
            }
            _ => verify::manifest_grid(),
        };
        for (case, line, m) in grid {
            let ctx = cached(cfg, case.fixture_name(), &mut cache)?;
            // unclaimed points are rejected before any computation
            case.default_line(&m)?;
            jobs.push(Box::new(move || verify::check_manifest_in(&ctx, case, line, &m, conj_n)));
        }
    }
    if select(Selector::Conj21) {
        let names: Vec<String> = match (&req.fixture, selector) {
            (Some(f), Selector::Conj21) => vec![f.clone()],
            _ => vec!["sl3".into(), "sl4".into(), "so5".into()],
        };
        for name in names {
            let fx = cfg.load(&name)?;
            let res = fx.resolution().ok_or_else(|| Error::Fixture(format!("{name} has no resolution")))?;
            jobs.push(Box::new(move || verify::check_conjecture_21(&res, &fx.algebra, &fx.file.reps)));
        }
    }
    if select(Selector::Conj51) {
        let grid: Vec<(String, Vec<u32>)> = match selector {
            Selector::Conj51 if req.m.is_some() || req.algebra.is_some() => {
                let alg = req
                    .algebra
                    .clone()
                    .or(req.fixture.clone())
                    .ok_or_else(|| Error::Config("conj51 needs --algebra".into()))?;
                let m = req.m.clone().ok_or_else(|| Error::Config("conj51 needs --M".into()))?;
                vec![(alg, m)]
            }
            _ => verify::conjecture_51_grid().into_iter().map(|(a, m)| (a.to_string(), m)).collect(),
        };
        for (alg, m) in grid {
            let ctx = cached(cfg, &alg, &mut cache)?;
            jobs.push(Box::new(move || verify::check_conjecture_51_in(&ctx, &m, conj_n)));
        }
    }
    Ok(jobs)
}

/// Run jobs on `cfg.jobs` threads; reports keep the job order.
pub fn run_jobs(jobs: &[Job], cfg: &RunConfig) -> Result<Vec<CheckReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    pool.install(|| jobs.par_iter().map(|j| j()).collect())
}

pub fn cmd_check(selector: Selector, req: &CheckRequest, cfg: &RunConfig) -> Result<Outcome> {
    let jobs = build_jobs(selector, req, cfg)?;
    let reports = run_jobs(&jobs, cfg)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text: String = reports.iter().map(|r| r.line() + "\n").collect();
    text.push_str(&format!("{} checks, {} passed, {} failed\n", reports.len(), reports.len() - failed, failed));
    Ok(Outcome { result: serde_json::to_value(&reports)?, text, passed: failed == 0 })
}
