//! Command implementations behind the `riesz` binary.
//!
//! Every command returns an [`Outcome`] (exit code plus captured output), so
//! the binary is a thin shell and the commands are testable in-process.
//! Output is a pure function of the arguments, the input files and the seed.
//!
//! Exit codes: `0` success, `2` usage error (bad flags, descriptor, JSON or
//! literal), `3` a law or verification failure, `4` a precondition failure
//! (not a unit, decomposition hypotheses, …). `RIESZ_SEED` overrides `--seed`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::approx::{
    expr_error, expr_to_pl, sw_approximate_pl, sw_approximate_with, CoverStrategy, Domain, GeneratorSet, SampledTarget,
    SwOptions,
};
use crate::duality::{roundtrip_algebra, roundtrip_space, spectrum, FiniteSpace};
use crate::error::{ParseError, RieszError};
use crate::ideals::{enumerate_ideals, is_riesz_ideal};
use crate::lattice::laws::law_names;
use crate::lattice::{check_laws, ops, LawReport, RieszSpace};
use crate::rational::Rational;
use crate::spaces::{FinDim, FinVec, LexPlane, PlFunction, PlSpace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

/// Largest `n` for which `verify --space fin:n` also checks every support ideal.
const VERIFY_IDEALS_MAX_DIM: usize = 6;

/// A space instance named on the command line: `fin:<n>`, `lex` or `pl`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceDescriptor {
    Fin(usize),
    Lex,
    Pl,
}

impl FromStr for SpaceDescriptor {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "lex" => Ok(SpaceDescriptor::Lex),
            "pl" => Ok(SpaceDescriptor::Pl),
            _ => match s.strip_prefix("fin:").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => Ok(SpaceDescriptor::Fin(n)),
                _ => Err(ParseError::Descriptor(s.to_string())),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "riesz", version, about = "Exact Riesz spaces, Yosida duality and lattice approximation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Seed for randomized checks (overridden by RIESZ_SEED).
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Riesz space laws on seeded random cases.
    Verify {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
    /// Riesz decomposition of 0 <= x <= a + b with a, b >= 0.
    Decompose {
        #[arg(long)]
        space: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Unit norm of x with respect to a unit (`ones` for the standard unit).
    Norm {
        #[arg(long)]
        space: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "ones")]
        unit: String,
    },
    /// Spectrum of (R^n, u) in index order.
    Spectrum {
        #[arg(long)]
        space: String,
        #[arg(long, default_value = "ones")]
        unit: String,
    },
    /// Both duality round trips for (R^n, u) and the n-point space.
    Roundtrip {
        #[arg(long)]
        space: String,
        #[arg(long, default_value = "ones")]
        unit: String,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Lattice Stone–Weierstrass approximation on a uniform grid of [0, 1].
    Approx {
        #[arg(long)]
        grid: usize,
        /// JSON file: `{"values": [...]}`, `{"values": {label: ...}}` or a PL function `{"t", "v"}`.
        #[arg(long)]
        target: PathBuf,
        /// `unital-affine` or a generator-set JSON file.
        #[arg(long, default_value = "unital-affine")]
        gens: String,
        #[arg(long)]
        eps: String,
        /// Write the expression JSON here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Extract smaller covers greedily.
        #[arg(long)]
        greedy: bool,
        /// Decide the covers on all of [0, 1] (PL target, unital-affine generators).
        #[arg(long, conflicts_with = "greedy")]
        continuum: bool,
    },
    /// List the laws checked by `verify`.
    LawsList {
        #[arg(long)]
        space: Option<String>,
    },
}

/// Exit code and captured output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Outcome { code, stdout, stderr }
    }
}

/// A command failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<RieszError> for Failure {
    fn from(e: RieszError) -> Self {
        let code = match e {
            RieszError::Verification(_) => EXIT_VERIFY,
            _ => EXIT_PRECONDITION,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

pub type CmdResult = Result<Outcome, Failure>;

/// Parses `args` (including the program name) and runs the command.
/// `env_seed` is the value of `RIESZ_SEED`, if set.
pub fn run_args<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, env_seed),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, String::new(), text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli, env_seed: Option<&str>) -> Outcome {
    let result = (|| {
        let seed = match env_seed {
            Some(s) => {
                s.trim().parse::<u64>().map_err(|_| usage(format!("RIESZ_SEED=`{s}` is not an unsigned integer")))?
            }
            None => cli.seed,
        };
        let fmt = cli.format;
        match &cli.command {
            Command::Verify { space, cases } => cmd_verify(&space.parse()?, *cases, seed, fmt),
            Command::Decompose { space, x, a, b } => cmd_decompose(&space.parse()?, x, a, b, fmt),
            Command::Norm { space, x, unit } => cmd_norm(&space.parse()?, x, unit, fmt),
            Command::Spectrum { space, unit } => cmd_spectrum(&space.parse()?, unit, fmt),
            Command::Roundtrip { space, unit, cases } => cmd_roundtrip(&space.parse()?, unit, *cases, seed, fmt),
            Command::Approx { grid, target, gens, eps, out, greedy, continuum } => {
                let eps: Rational = eps.parse()?;
                let mode = match (*greedy, *continuum) {
                    (_, true) => ApproxMode::Continuum,
                    (true, _) => ApproxMode::Grid(CoverStrategy::Greedy),
                    _ => ApproxMode::Grid(CoverStrategy::All),
                };
                cmd_approx(*grid, target, gens, &eps, out.as_ref(), mode, fmt)
            }
            Command::LawsList { space } => {
                let space = space.as_deref().map(str::parse).transpose()?;
                cmd_laws_list(space, fmt)
            }
        }
    })();
    result.unwrap_or_else(|f| Outcome::fail(f.code, String::new(), format!("error: {}\n", f.message)))
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::from(ParseError::Json(format!("{what}: {e}"))))
}

/// Element literal for a space; `ones` names the standard unit.
trait CliSpace: RieszSpace
where
    Self::Elem: Serialize + DeserializeOwned,
{
    fn parse_elem(&self, what: &str, text: &str) -> Result<Self::Elem, Failure> {
        let x = if text.trim() == "ones" { self.standard_unit() } else { parse_json(what, text)? };
        self.check_member(&x)?;
        Ok(x)
    }
}

impl CliSpace for FinDim {}
impl CliSpace for LexPlane {}
impl CliSpace for PlSpace {}

/// Dispatches a generic body over the three space instances.
macro_rules! with_space {
    ($desc:expr, |$s:ident| $body:expr) => {
        match *$desc {
            SpaceDescriptor::Fin(n) => {
                let $s = FinDim::new(n)?;
                $body
            }
            SpaceDescriptor::Lex => {
                let $s = LexPlane;
                $body
            }
            SpaceDescriptor::Pl => {
                let $s = PlSpace;
                $body
            }
        }
    };
}

fn elem_json<E: Serialize>(x: &E) -> Value {
    serde_json::to_value(x).expect("elements serialize")
}

fn report_json<E: Serialize>(r: &LawReport<E>) -> Value {
    let cx = r.counterexample.as_ref().map(|c| {
        json!({
            "elements": c.case.elems.iter().map(elem_json).collect::<Vec<_>>(),
            "scalars": c.case.scalars.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lhs": c.lhs,
            "rhs": c.rhs,
        })
    });
    json!({ "law": r.law, "cases": r.cases, "passed": r.passed(), "counterexample": cx })
}

fn report_line<E: std::fmt::Debug>(out: &mut String, r: &LawReport<E>) {
    match &r.counterexample {
        None => writeln!(out, "PASS  {}  [{} cases]", r.law, r.cases),
        Some(c) => writeln!(
            out,
            "FAIL  {}  at case {}: elements {:?}, scalars {:?}: {} vs {}",
            r.law, r.cases, c.case.elems, c.case.scalars, c.lhs, c.rhs
        ),
    }
    .expect("writing to a string");
}

pub fn cmd_verify(desc: &SpaceDescriptor, cases: usize, seed: u64, fmt: Format) -> CmdResult {
    if cases == 0 {
        return Err(usage("--cases must be positive"));
    }
    with_space!(desc, |space| verify_space(&space, *desc, cases, seed, fmt))
}

fn verify_space<S>(space: &S, desc: SpaceDescriptor, cases: usize, seed: u64, fmt: Format) -> CmdResult
where
    S: RieszSpace,
    S::Elem: Serialize,
{
    let laws = check_laws(space, cases, seed);
    let mut extra: Vec<LawReport<FinVec>> = Vec::new();
    if let SpaceDescriptor::Fin(n) = desc {
        if n <= VERIFY_IDEALS_MAX_DIM {
            for (k, ideal) in enumerate_ideals(n)?.iter().enumerate() {
                let mut r = is_riesz_ideal(ideal, cases.min(200), seed.wrapping_add(k as u64))?;
                r.law = format!("{} [zero set {:?}]", r.law, ideal.zero_set);
                extra.push(r);
            }
        }
        let unit = FinDim::new(n)?.ones();
        let check = match roundtrip_algebra(n, &unit, cases.min(200), seed) {
            Ok(rt) => LawReport::pass("Yosida transform is a unit-preserving Riesz isomorphism", rt.samples),
            Err(RieszError::Verification(m)) => LawReport {
                law: format!("Yosida transform is a unit-preserving Riesz isomorphism ({m})"),
                cases: 0,
                counterexample: None,
            },
            Err(e) => return Err(e.into()),
        };
        extra.push(check);
    }
    let witness = ops::find_infinitesimal(space);
    let passed = laws.iter().all(LawReport::passed) && extra.iter().all(LawReport::passed);

    let stdout = match fmt {
        Format::Json => {
            let mut v = json!({
                "space": space.describe(),
                "seed": seed,
                "cases": cases,
                "laws": laws.iter().map(report_json).chain(extra.iter().map(report_json)).collect::<Vec<_>>(),
                "archimedean": space.is_archimedean(),
                "passed": passed,
            });
            if let Some(w) = &witness {
                v["infinitesimal"] = json!({
                    "epsilon": elem_json(&w.epsilon),
                    "bound": elem_json(&w.bound),
                    "certificate": w.certificate,
                });
            }
            render_json(&v)
        }
        Format::Human => {
            let mut out = format!("{} ({} cases per law, seed {})\n", space.describe(), cases, seed);
            for r in &laws {
                report_line(&mut out, r);
            }
            for r in &extra {
                report_line(&mut out, r);
            }
            if let Some(w) = &witness {
                let compact = |x: &S::Elem| {
                    serde_json::to_value(x)
                        .ok()
                        .and_then(|v| {
                            v.as_array().map(|a| {
                                let parts: Vec<&str> = a.iter().filter_map(Value::as_str).collect();
                                format!("({})", parts.join(","))
                            })
                        })
                        .unwrap_or_else(|| format!("{x:?}"))
                };
                writeln!(
                    out,
                    "non-Archimedean: witness {} (n·{} <= {} for every integer n; {})",
                    compact(&w.epsilon),
                    compact(&w.epsilon),
                    compact(&w.bound),
                    w.certificate
                )
                .expect("writing to a string");
            }
            let total = laws.len() + extra.len();
            let failed = laws.iter().filter(|r| !r.passed()).count() + extra.iter().filter(|r| !r.passed()).count();
            writeln!(out, "{}: {} of {} checks passed", if passed { "ok" } else { "FAILED" }, total - failed, total)
                .expect("writing to a string");
            out
        }
    };
    Ok(if passed { Outcome::ok(stdout) } else { Outcome::fail(EXIT_VERIFY, stdout, String::new()) })
}

pub fn cmd_decompose(desc: &SpaceDescriptor, x: &str, a: &str, b: &str, fmt: Format) -> CmdResult {
    with_space!(desc, |space| {
        let (x, a, b) = (space.parse_elem("x", x)?, space.parse_elem("a", a)?, space.parse_elem("b", b)?);
        let (ap, bp) = ops::riesz_decompose(&space, &x, &a, &b)?;
        Ok(Outcome::ok(match fmt {
            Format::Json => render_json(&json!({ "a_prime": elem_json(&ap), "b_prime": elem_json(&bp) })),
            Format::Human => format!("a' = {}\nb' = {}\n", elem_json(&ap), elem_json(&bp)),
        }))
    })
}

pub fn cmd_norm(desc: &SpaceDescriptor, x: &str, unit: &str, fmt: Format) -> CmdResult {
    with_space!(desc, |space| {
        let (x, u) = (space.parse_elem("x", x)?, space.parse_elem("unit", unit)?);
        let norm = ops::unit_norm(&space, &x, &u)?;
        Ok(Outcome::ok(match fmt {
            Format::Json => render_json(&json!({ "norm": norm.to_string() })),
            Format::Human => format!("{norm}\n"),
        }))
    })
}

fn fin_unit(desc: &SpaceDescriptor, unit: &str) -> Result<(usize, FinVec), Failure> {
    match *desc {
        SpaceDescriptor::Fin(n) => Ok((n, FinDim::new(n)?.parse_elem("unit", unit)?)),
        _ => Err(usage("this command needs a finite-dimensional space fin:<n>")),
    }
}

pub fn cmd_spectrum(desc: &SpaceDescriptor, unit: &str, fmt: Format) -> CmdResult {
    let (n, u) = fin_unit(desc, unit)?;
    let spec = spectrum(n, &u)?;
    let coeffs: Vec<String> = spec.iter().map(|p| p.coeff.to_string()).collect();
    Ok(Outcome::ok(match fmt {
        Format::Json => render_json(&json!({ "unit": elem_json(&u), "spectrum": spec, "coefficients": coeffs })),
        Format::Human => {
            let mut out = String::new();
            for p in &spec {
                writeln!(out, "phi_{}(x) = {} * x_{}", p.index, p.coeff, p.index).expect("writing to a string");
            }
            writeln!(out, "coefficients {}", serde_json::to_string(&coeffs).expect("strings serialize"))
                .expect("writing to a string");
            out
        }
    }))
}

pub fn cmd_roundtrip(desc: &SpaceDescriptor, unit: &str, cases: usize, seed: u64, fmt: Format) -> CmdResult {
    let (n, u) = fin_unit(desc, unit)?;
    let status = |r: Result<(), RieszError>| match r {
        Ok(()) => Ok(Ok(())),
        Err(RieszError::Verification(m)) => Ok(Err(m)),
        Err(e) => Err(Failure::from(e)),
    };
    let algebra = status(roundtrip_algebra(n, &u, cases, seed).map(|_| ()))?;
    let space = status(FiniteSpace::numbered(n).and_then(|x| roundtrip_space(&x)).map(|_| ()))?;
    let word = |r: &Result<(), String>| match r {
        Ok(()) => "ok".to_string(),
        Err(m) => format!("FAILED ({m})"),
    };
    let passed = algebra.is_ok() && space.is_ok();
    let stdout = match fmt {
        Format::Json => render_json(&json!({
            "n": n,
            "unit": elem_json(&u),
            "samples": cases,
            "c_phi_id": algebra.is_ok(),
            "phi_c_id": space.is_ok(),
            "errors": [algebra.as_ref().err(), space.as_ref().err()],
        })),
        Format::Human => format!("CΦ≅id: {}, ΦC≅id: {}\n", word(&algebra), word(&space)),
    };
    Ok(if passed { Outcome::ok(stdout) } else { Outcome::fail(EXIT_VERIFY, stdout, String::new()) })
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_target(domain: &Domain, text: &str) -> Result<(SampledTarget, Option<PlFunction>), Failure> {
    let v: Value = parse_json("target", text)?;
    if v.get("t").is_some() {
        let h: PlFunction = parse_json("target", text)?;
        return Ok((SampledTarget::from_pl(domain.clone(), &h)?, Some(h)));
    }
    let values = v.get("values").ok_or_else(|| usage("target needs `values` or a PL function `{\"t\", \"v\"}`"))?;
    let target = if values.is_object() {
        SampledTarget::from_labels(domain.clone(), &parse_json("target values", &values.to_string())?)?
    } else {
        SampledTarget::new(domain.clone(), parse_json("target values", &values.to_string())?)?
    };
    Ok((target, None))
}

/// How `approx` decides its covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxMode {
    /// On the grid points only.
    Grid(CoverStrategy),
    /// On all of `[0, 1]`.
    Continuum,
}

pub fn cmd_approx(
    grid: usize,
    target: &PathBuf,
    gens: &str,
    eps: &Rational,
    out: Option<&PathBuf>,
    mode: ApproxMode,
    fmt: Format,
) -> CmdResult {
    if grid == 0 {
        return Err(usage("--grid must be positive"));
    }
    let domain = Domain::uniform_grid(grid)?;
    let (target, pl_target) = load_target(&domain, &read_file(target)?)?;
    let affine = gens == "unital-affine";
    let gens = if affine {
        GeneratorSet::unital_affine(domain)?
    } else {
        GeneratorSet::from_json(domain, &read_file(&PathBuf::from(gens))?)?
    };
    let realizations = [PlFunction::constant(Rational::one()), PlFunction::identity()];
    let result = match (mode, &pl_target) {
        (ApproxMode::Grid(cover), _) => sw_approximate_with(&target, &gens, eps, &SwOptions { cover })?,
        (ApproxMode::Continuum, Some(h)) if affine => sw_approximate_pl(h, &gens, &realizations, eps)?,
        (ApproxMode::Continuum, _) => {
            return Err(usage("--continuum needs a PL target and --gens unital-affine"));
        }
    };
    let error = expr_error(&result.expr, &gens, &target)?;
    let pl_error = match (&pl_target, affine) {
        (Some(h), true) => {
            let realized = expr_to_pl(&result.expr, &realizations)?;
            Some(realized.sub(h).unit_norm(&PlFunction::constant(Rational::one()))?)
        }
        _ => None,
    };
    let expr_value = serde_json::to_value(&result.expr).expect("expressions serialize");
    if let Some(path) = out {
        std::fs::write(path, render_json(&expr_value))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let stdout = match fmt {
        Format::Json => {
            let mut v = json!({
                "grid": grid,
                "eps": eps.to_string(),
                "error": error.to_string(),
                "size": result.expr.size(),
                "generators": gens.names(),
            });
            if let Some(e) = &pl_error {
                v["pl_error"] = json!(e.to_string());
            }
            if out.is_none() {
                v["expr"] = expr_value;
            }
            render_json(&v)
        }
        Format::Human => {
            let mut s =
                format!("grid error {error} <= eps {eps} ({} points, expression size {})\n", grid, result.expr.size());
            if let Some(e) = &pl_error {
                writeln!(s, "sup error on [0,1]: {e}").expect("writing to a string");
            }
            match out {
                Some(p) => writeln!(s, "expression written to {}", p.display()),
                None => writeln!(s, "{}", serde_json::to_string(&expr_value).expect("expressions serialize")),
            }
            .expect("writing to a string");
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_laws_list(space: Option<SpaceDescriptor>, fmt: Format) -> CmdResult {
    let names: Vec<&str> = match space {
        None => law_names::<FinDim>(true),
        Some(d) => with_space!(&d, |s| law_names_for(&s)),
    };
    let all = law_names::<FinDim>(true);
    Ok(Outcome::ok(match fmt {
        Format::Json => render_json(&json!({ "laws": names })),
        Format::Human => {
            let general = law_names::<FinDim>(false);
            names
                .iter()
                .map(|n| {
                    let tag = if general.contains(n) || !all.contains(n) { "" } else { "  (Archimedean only)" };
                    format!("{n}{tag}\n")
                })
                .collect()
        }
    }))
}

fn law_names_for<S: RieszSpace>(space: &S) -> Vec<&'static str> {
    law_names::<S>(space.is_archimedean())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("riesz").chain(args.iter().copied()), None)
    }

    #[test]
    fn descriptors() {
        assert_eq!("fin:3".parse::<SpaceDescriptor>().unwrap(), SpaceDescriptor::Fin(3));
        assert_eq!("lex".parse::<SpaceDescriptor>().unwrap(), SpaceDescriptor::Lex);
        assert_eq!("pl".parse::<SpaceDescriptor>().unwrap(), SpaceDescriptor::Pl);
        for bad in ["fin:0", "fin:", "fin:-1", "R3", ""] {
            assert!(bad.parse::<SpaceDescriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn verify_examples() {
        let o = run(&["verify", "--space", "fin:3", "--cases", "100", "--seed", "7"]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
        let o = run(&["verify", "--space", "lex", "--cases", "100", "--seed", "7"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("non-Archimedean: witness (0,1)"), "{}", o.stdout);
        assert_eq!(run(&["verify", "--space", "fin:0"]).code, EXIT_USAGE);
        assert_eq!(run(&["verify"]).code, EXIT_USAGE);
    }

    #[test]
    fn spectrum_and_roundtrip() {
        let o = run(&["spectrum", "--space", "fin:3", "--unit", r#"["1","2","4"]"#]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains(r#"coefficients ["1","1/2","1/4"]"#), "{}", o.stdout);
        let o = run(&["roundtrip", "--space", "fin:4", "--unit", "ones"]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, "CΦ≅id: ok, ΦC≅id: ok\n");
        assert_eq!(run(&["spectrum", "--space", "fin:2", "--unit", r#"["1","0"]"#]).code, EXIT_PRECONDITION);
        assert_eq!(run(&["spectrum", "--space", "lex"]).code, EXIT_USAGE);
    }

    #[test]
    fn norm_and_decompose() {
        let o = run(&["norm", "--space", "fin:3", "--x", r#"["1","-2","1/2"]"#, "--format", "json"]);
        assert_eq!(o.stdout, "{\n  \"norm\": \"2\"\n}\n");
        let o = run(&["norm", "--space", "lex", "--x", r#"["0","5"]"#, "--unit", r#"["1","0"]"#]);
        assert_eq!(o.stdout, "0\n");
        let o = run(&["norm", "--space", "lex", "--x", r#"["0","5"]"#, "--unit", r#"["0","1"]"#]);
        assert_eq!(o.code, EXIT_PRECONDITION);
        let o = run(&["norm", "--space", "fin:2", "--x", "[1,2]"]);
        assert_eq!(o.code, EXIT_USAGE);
        let o = run(&[
            "decompose",
            "--space",
            "fin:2",
            "--x",
            r#"["3","1"]"#,
            "--a",
            r#"["2","0"]"#,
            "--b",
            r#"["2","2"]"#,
        ]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, "a' = [\"2\",\"0\"]\nb' = [\"1\",\"1\"]\n");
        let o = run(&["decompose", "--space", "fin:1", "--x", r#"["5"]"#, "--a", r#"["2"]"#, "--b", r#"["2"]"#]);
        assert_eq!(o.code, EXIT_PRECONDITION);
    }

    #[test]
    fn seed_override() {
        let args = ["riesz", "verify", "--space", "pl", "--cases", "5", "--seed", "1", "--format", "json"];
        let a = run_args(args, Some("9"));
        assert!(a.stdout.contains("\"seed\": 9"));
        assert_eq!(run_args(args, Some("x")).code, EXIT_USAGE);
    }

    #[test]
    fn laws_list() {
        let all = run(&["laws-list"]);
        let lex = run(&["laws-list", "--space", "lex", "--format", "json"]);
        assert_eq!(all.stdout.lines().count(), 22);
        assert!(all.stdout.contains("(Archimedean only)"));
        let v: Value = serde_json::from_str(&lex.stdout).unwrap();
        assert_eq!(v["laws"].as_array().unwrap().len(), 20);
    }
}
