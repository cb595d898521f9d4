//! Batch front end: reads JSON documents, runs one command, writes one JSON
//! document to stdout.
//!
//! Exit codes: 0 success, 1 certificate rejected by `verify`, 2 parse or I/O
//! error, 3 domain error, 4 no certificate within the budget, 5 resource
//! limit, 10 failed internal self-check.

pub mod doc;

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use thiserror::Error;

use nullcert::bounds::{self, BoundReport, TheoremId};
use nullcert::groebner::{algebraic_degree_for_lambda, GroebnerConfig, GroebnerError};
use nullcert::poly::{self, PolySystem};
use nullcert::polytope::{
    factorial, is_normal, unimodular_subdivision_pd, verify_unimodular_subdivision, GradedSet, LatticePolytope,
    NormalityVerdict,
};
use nullcert::serde_util::{format_rational, parse_rational};
use nullcert::solver::{
    minimal_degree_search_for, solve_for_target, solve_laurent, verify_certificate, Certificate, SolverConfig,
    SolverError, SupportPlan,
};
use nullcert::ExponentVector;

use doc::{CertificateDocument, LambdaDocument, PointsDocument, PointsKind, SystemDocument, VolumeInput, SCHEMA};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal self-check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Budget(_) => 5,
            CliError::Internal(_) => 10,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
            CliError::Budget(_) => "budget",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "schema": SCHEMA, "error": self.kind(), "message": self.to_string() })
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Budget { .. } => CliError::Budget(e.to_string()),
            SolverError::SelfCheck(m) => CliError::Internal(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::Budget(m) => CliError::Budget(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<bounds::BoundError> for CliError {
    fn from(e: bounds::BoundError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "nullcert", version, about = "Sparse effective Nullstellensatz toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form bound on a system.
    Bound(BoundArgs),
    /// Search for a certificate `p^D = sum g_i f_i`.
    Solve(SolveArgs),
    /// Check a certificate against a system.
    Verify {
        system: String,
        certificate: String,
    },
    /// Newton polytope (of a system) or hull (of points) and its volumes.
    Volume { input: String },
    /// Check `NA = pos(A) ∩ ZA` up to a grading level.
    Normality {
        input: String,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// The unimodular subdivision of the prism `P_d`.
    SubdividePd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Algebraic degree `delta(lambda)` for given or sampled matrices.
    Algdeg(AlgdegArgs),
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub system: String,
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: TheoremId,
    /// Algebraic degree, for thm4 / thm32.
    #[arg(long)]
    pub delta: Option<String>,
    /// Degree of the ideal, for main_lemma / thm_cm / cor12.
    #[arg(long = "deg-i")]
    pub deg_i: Option<String>,
    /// Dimension parameter `r` (defaults to the number of variables).
    #[arg(long)]
    pub r: Option<u64>,
    /// Euclidean volume of `P` as `p/q`, for thm21 / cor21 / thm22 / cor22.
    #[arg(long)]
    pub vol: Option<String>,
    /// Dimension of `P`, with `--vol` for thm22 / cor22.
    #[arg(long)]
    pub rho: Option<u64>,
    /// Points document for `P`; its volume and dimension are computed.
    #[arg(long)]
    pub polytope: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Degree,
    Polytope,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub system: String,
    #[arg(long, value_enum, default_value_t = Mode::Degree)]
    pub mode: Mode,
    /// `auto` or an integer: the degree bound, or the dilation factor.
    #[arg(long, default_value = "auto")]
    pub budget: String,
    /// Scan degrees upward from 0 and report the smallest feasible one.
    #[arg(long)]
    pub minimal: bool,
    /// Also write the certificate document here (`-` for stdout).
    #[arg(long)]
    pub emit: Option<String>,
    /// Localizer exponent (default 1 with a localizer, 0 without).
    #[arg(long)]
    pub exponent: Option<u64>,
    /// Points document for the base polytope in polytope mode.
    #[arg(long)]
    pub polytope: Option<String>,
}

#[derive(Debug, Args)]
pub struct AlgdegArgs {
    pub system: String,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sampled entries are integers in `[-range, range]`.
    #[arg(long, default_value_t = 3)]
    pub range: i64,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

/// The JSON written to stdout and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, code: 0 }
    }
}

pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(Path::new(path)).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

fn load<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse_big(name: &str, s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("--{name}: not an integer: {s:?}")))
}

fn required<T>(name: &str, v: Option<T>) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Domain(format!("this theorem needs --{name}")))
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Bound(a) => cmd_bound(&a),
        Command::Solve(a) => cmd_solve(&a),
        Command::Verify { system, certificate } => cmd_verify(&system, &certificate),
        Command::Volume { input } => cmd_volume(&input),
        Command::Normality { input, depth } => cmd_normality(&input, depth),
        Command::SubdividePd { n, d } => cmd_subdivide_pd(n, d),
        Command::Algdeg(a) => cmd_algdeg(&a),
    }
}

/// Run with process arguments, print, and return the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).unwrap());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            e.exit_code()
        }
    }
}

fn load_polytope(path: &str) -> Result<LatticePolytope, CliError> {
    load::<PointsDocument>(path)?.polytope()
}

fn localizer_degree(sys: &PolySystem) -> u64 {
    sys.localizer()
        .and_then(|p| p.total_degree())
        .unwrap_or(0)
        .max(0) as u64
}

fn system_degrees_nonempty(sys: &PolySystem) -> Result<Vec<u64>, CliError> {
    let d = bounds::system_degrees(sys);
    if d.is_empty() {
        return Err(CliError::Domain("every polynomial is zero".into()));
    }
    Ok(d)
}

fn polytope_volume(args: &BoundArgs, sys: &PolySystem) -> Result<(u64, BigRational, Option<LatticePolytope>), CliError> {
    if let Some(path) = &args.polytope {
        let p = load_polytope(path)?;
        if p.ambient_dim() != sys.nvars() {
            return Err(CliError::Domain("polytope and system have different ambient dimension".into()));
        }
        let rho = p.dim();
        let vol = BigRational::new(p.normalized_volume(), factorial(rho));
        return Ok((rho as u64, vol, Some(p)));
    }
    let vol = parse_rational(&required("vol", args.vol.clone())?).map_err(CliError::Parse)?;
    Ok((args.rho.unwrap_or(sys.nvars() as u64), vol, None))
}

fn cmd_bound(args: &BoundArgs) -> Result<Outcome, CliError> {
    let sys = load::<SystemDocument>(&args.system)?.to_system()?;
    let n = sys.nvars() as u64;
    let s = sys.len() as u64;
    let d = poly::max_degree(sys.polys()).max(0) as u64;
    let big = |name: &str, v: &Option<String>| -> Result<BigInt, CliError> { parse_big(name, &required(name, v.clone())?) };
    let mut report: BoundReport = match args.theorem {
        TheoremId::Thm1 => {
            if sys.is_laurent() {
                return Err(CliError::Domain("thm1 needs ordinary polynomials; use thm2".into()));
            }
            bounds::thm1_for_system(&sys)?
        }
        TheoremId::Thm2 => bounds::thm2_for_system(&sys)?,
        TheoremId::Thm3 => bounds::bound_thm3(&system_degrees_nonempty(&sys)?, n)?,
        TheoremId::Thm31 => bounds::bound_thm31(&system_degrees_nonempty(&sys)?, n)?,
        TheoremId::Thm4 => bounds::bound_thm4(n, s, d, &big("delta", &args.delta)?)?,
        TheoremId::Thm32 => bounds::bound_thm32(n, s, d, &big("delta", &args.delta)?)?,
        TheoremId::MainLemma => bounds::bound_main_lemma(args.r.unwrap_or(n), s, &big("deg-i", &args.deg_i)?)?,
        TheoremId::ThmCm => bounds::bound_thm_cm(args.r.unwrap_or(n), d, &big("deg-i", &args.deg_i)?)?,
        TheoremId::Cor12 => {
            let deg = match &args.deg_i {
                Some(v) => parse_big("deg-i", v)?,
                None => BigInt::from(1),
            };
            bounds::bound_cor12(args.r.unwrap_or(n), d, &deg)?
        }
        TheoremId::Thm21 | TheoremId::Cor21 => {
            let (rho, vol, p) = polytope_volume(args, &sys)?;
            if rho != n {
                return Err(CliError::Domain(format!("{} needs a full-dimensional P", args.theorem)));
            }
            let mut r = if args.theorem == TheoremId::Thm21 {
                bounds::bound_thm21(n, s, &vol, localizer_degree(&sys))?
            } else {
                bounds::bound_cor21(n, s, &vol, localizer_degree(&sys), d)?
            };
            if let (Some(p), Some(sb)) = (p, r.support.as_mut()) {
                sb.base = Some(p.summary());
            }
            r
        }
        TheoremId::Thm22 | TheoremId::Cor22 => {
            let (rho, vol, p) = polytope_volume(args, &sys)?;
            let mut r = if args.theorem == TheoremId::Thm22 {
                bounds::bound_thm22(n, s, rho, &vol)?
            } else {
                bounds::bound_cor22(n, s, rho, &vol, localizer_degree(&sys), d)?
            };
            if let (Some(p), Some(sb)) = (p, r.support.as_mut()) {
                sb.base = Some(p.summary());
            }
            r
        }
        TheoremId::BezoutAlgDeg => bounds::bound_bezout_algdeg(&system_degrees_nonempty(&sys)?, n)?,
    };
    if report.support.as_ref().is_some_and(|s| s.base.is_none()) && matches!(args.theorem, TheoremId::Thm1) {
        report.notes.push("support base is the Newton polytope of x_1, ..., x_n, f_1, ..., f_s".into());
    }
    let mut v = to_value(&report);
    v.as_object_mut().unwrap().insert("schema".into(), json!(SCHEMA));
    Ok(Outcome::ok(v))
}

fn certificate_json(sys: &PolySystem, vars: &[String], cert: &Certificate) -> Result<Value, CliError> {
    let doc = CertificateDocument::from_certificate(cert, vars.to_vec(), sys.is_laurent());
    // self-check on what is written, not only on the in-memory certificate
    let text = serde_json::to_string(&doc).map_err(|e| CliError::Internal(e.to_string()))?;
    let back: CertificateDocument = serde_json::from_str(&text).map_err(|e| CliError::Internal(e.to_string()))?;
    let reread = back.to_certificate(sys).map_err(|e| CliError::Internal(e.to_string()))?;
    let check = verify_certificate(sys, &reread);
    if !check.ok {
        return Err(CliError::Internal(check.diagnostic.unwrap_or_default()));
    }
    Ok(to_value(&doc))
}

fn no_certificate(mode: Mode, budget: &BigInt, reason: &str) -> Outcome {
    Outcome {
        json: json!({
            "schema": SCHEMA,
            "status": "no_certificate",
            "mode": format!("{mode:?}").to_lowercase(),
            "budget": budget.to_string(),
            "reason": reason,
        }),
        code: 4,
    }
}

fn to_u64_budget(v: &BigInt, what: &str) -> Result<u64, CliError> {
    v.to_u64()
        .ok_or_else(|| CliError::Budget(format!("{what} {v} does not fit in 64 bits")))
}

fn cmd_solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    let doc = load::<SystemDocument>(&args.system)?;
    let sys = doc.to_system()?;
    let cfg = SolverConfig::from_env();
    let exponent = args
        .exponent
        .unwrap_or(if sys.localizer().is_some() { 1 } else { 0 });
    let explicit = match args.budget.trim() {
        "auto" => None,
        b => Some(parse_big("budget", b)?),
    };
    let mut report: Option<BoundReport> = None;
    let mut d_min: Option<u64> = None;
    let (budget, cert) = match args.mode {
        Mode::Degree => {
            if sys.is_laurent() {
                return Err(CliError::Domain("degree mode needs ordinary polynomials".into()));
            }
            let budget = match explicit {
                Some(b) => b,
                None => {
                    let r = bounds::bound_thm3(&system_degrees_nonempty(&sys)?, sys.nvars() as u64)?;
                    let b = r.exponent_d.clone();
                    report = Some(r);
                    b
                }
            };
            let bound = to_u64_budget(&budget, "degree bound")?;
            if args.minimal {
                match minimal_degree_search_for(&sys, bound, exponent, &cfg) {
                    Ok((d, c)) => {
                        d_min = Some(d);
                        (budget, Some(c))
                    }
                    Err(SolverError::NoCertificateWithinBudget(_)) => (budget, None),
                    Err(e) => return Err(e.into()),
                }
            } else {
                let plan = SupportPlan::degree(&sys, bound, &cfg)?;
                (budget.clone(), solve_for_target(&sys, &plan, exponent, &cfg)?)
            }
        }
        Mode::Polytope => {
            if args.minimal {
                return Err(CliError::Domain("--minimal applies to degree mode".into()));
            }
            let (base, dilation, shift_dilation) = match (&args.polytope, explicit) {
                (Some(path), Some(t)) => {
                    let p = load_polytope(path)?;
                    (p, t.clone(), t)
                }
                (Some(path), None) => {
                    let p = load_polytope(path)?;
                    let r = if sys.is_laurent() {
                        bounds::thm22_for_polytope(&sys, &p)?
                    } else {
                        bounds::thm21_for_polytope(&sys, &p)?
                    };
                    let sb = r.support.clone().unwrap();
                    report = Some(r);
                    (p, sb.dilation.clone(), sb.shift_dilation.unwrap_or(sb.dilation))
                }
                (None, explicit) => {
                    let base = if sys.is_laurent() {
                        poly::newton_polytope(sys.polys()).map_err(|e| CliError::Domain(e.to_string()))?
                    } else {
                        bounds::thm1_polytope(&sys)?
                    };
                    match explicit {
                        Some(t) => (base, t.clone(), t),
                        None => {
                            let r = if sys.is_laurent() {
                                bounds::thm2_for_system(&sys)?
                            } else {
                                bounds::thm1_for_system(&sys)?
                            };
                            let sb = r.support.clone().unwrap();
                            report = Some(r);
                            (base, sb.dilation.clone(), sb.shift_dilation.unwrap_or(sb.dilation))
                        }
                    }
                }
            };
            if base.ambient_dim() != sys.nvars() {
                return Err(CliError::Domain("polytope and system have different ambient dimension".into()));
            }
            let t = to_u64_budget(&dilation, "dilation")?;
            let cert = if sys.is_laurent() {
                let st = to_u64_budget(&shift_dilation, "shift dilation")?;
                solve_laurent(&sys, t, &base, st, None, exponent, &cfg)?
            } else {
                let plan = SupportPlan::polytope(&sys, t, &base, None, &cfg)?;
                solve_for_target(&sys, &plan, exponent, &cfg)?
            };
            (dilation, cert)
        }
    };
    let Some(mut cert) = cert else {
        return Ok(no_certificate(args.mode, &budget, "the support plan admits no certificate"));
    };
    cert.provenance = report;
    let cert_json = certificate_json(&sys, &doc.vars, &cert)?;
    if let Some(path) = &args.emit {
        if path != "-" {
            let text = serde_json::to_string_pretty(&cert_json).unwrap();
            fs::write(path, text + "\n").map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
        }
    }
    let mut out = json!({
        "schema": SCHEMA,
        "status": "certificate",
        "mode": format!("{:?}", args.mode).to_lowercase(),
        "budget": budget.to_string(),
        "exponent_d": cert.exponent_d,
        "certificate": cert_json,
    });
    if let Some(d) = d_min {
        out["d_min"] = json!(d);
    }
    Ok(Outcome::ok(out))
}

fn cmd_verify(system: &str, certificate: &str) -> Result<Outcome, CliError> {
    let sys = load::<SystemDocument>(system)?.to_system()?;
    let cert = load::<CertificateDocument>(certificate)?.to_certificate(&sys)?;
    let v = verify_certificate(&sys, &cert);
    Ok(Outcome {
        json: json!({ "schema": SCHEMA, "ok": v.ok, "diagnostic": v.diagnostic }),
        code: if v.ok { 0 } else { 1 },
    })
}

fn cmd_volume(input: &str) -> Result<Outcome, CliError> {
    let (source, p) = match load::<VolumeInput>(input)? {
        VolumeInput::System(d) => {
            let sys = d.to_system()?;
            let p = poly::newton_polytope(sys.polys()).map_err(|e| CliError::Domain(e.to_string()))?;
            ("system", p)
        }
        VolumeInput::Points(d) => ("points", d.polytope()?),
    };
    let normalized = p.normalized_volume();
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "source": source,
        "ambient_dim": p.ambient_dim(),
        "rho": p.dim(),
        "vertices": p.vertices(),
        "hull_lattice_basis": p.hull_lattice_basis(),
        "euclidean_volume": format_rational(&p.euclidean_volume()),
        "normalized_volume": normalized.to_string(),
        "unmixed_volume": normalized.to_string(),
    })))
}

fn cmd_normality(input: &str, depth: u32) -> Result<Outcome, CliError> {
    let d = load::<PointsDocument>(input)?;
    let a = match d.kind {
        PointsKind::Polytope => GradedSet::of_polytope(&d.polytope()?),
        PointsKind::Graded => {
            let pts: Vec<ExponentVector> = d.points.iter().map(|p| ExponentVector::new(p.clone())).collect();
            match &d.grading {
                Some(w) => GradedSet::new(pts, ExponentVector::new(w.clone())),
                None => GradedSet::detect(pts),
            }
            .map_err(|e| CliError::Domain(e.to_string()))?
        }
    };
    let verdict = is_normal(&a, depth).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut v = to_value(&verdict);
    let obj = v.as_object_mut().unwrap();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("grading".into(), to_value(a.grading_witness()));
    obj.insert("points".into(), json!(a.points().len()));
    if let NormalityVerdict::NormalUpToDepth { .. } = verdict {
        obj.insert("normal".into(), json!(true));
    } else {
        obj.insert("normal".into(), json!(false));
    }
    Ok(Outcome::ok(v))
}

fn cmd_subdivide_pd(n: usize, d: u32) -> Result<Outcome, CliError> {
    let sub = unimodular_subdivision_pd(n, d).map_err(|e| CliError::Domain(e.to_string()))?;
    let p = nullcert::polytope::prism_pd(n, d as i64);
    let verified = verify_unimodular_subdivision(&p, &sub).map_err(|e| CliError::Domain(e.to_string()))?;
    if !verified {
        return Err(CliError::Internal("prism subdivision failed verification".into()));
    }
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "n": n,
        "d": d,
        "count": sub.len(),
        "verified": verified,
        "normalized_volume": p.normalized_volume().to_string(),
        "simplices": sub.simplices,
    })))
}

fn cmd_algdeg(args: &AlgdegArgs) -> Result<Outcome, CliError> {
    let sys = load::<SystemDocument>(&args.system)?.to_system()?;
    if sys.is_laurent() {
        return Err(CliError::Domain("algebraic degree needs ordinary polynomials".into()));
    }
    let s = sys.len();
    let mut lambdas: Vec<(String, Vec<Vec<BigRational>>)> = Vec::new();
    if let Some(path) = &args.lambda {
        lambdas.push(("file".into(), load::<LambdaDocument>(path)?.matrix()?));
    }
    if args.range < 0 {
        return Err(CliError::Domain("--range must be nonnegative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.samples {
        let m = (0..s)
            .map(|_| {
                (0..s)
                    .map(|_| BigRational::from_integer(rng.gen_range(-args.range..=args.range).into()))
                    .collect()
            })
            .collect();
        lambdas.push(("sample".into(), m));
    }
    if lambdas.is_empty() {
        return Err(CliError::Domain("give --lambda or --samples".into()));
    }
    let cfg = GroebnerConfig::default();
    let mut records = Vec::new();
    let mut best: Option<BigInt> = None;
    for (origin, lam) in &lambdas {
        let r = algebraic_degree_for_lambda(sys.polys(), sys.nvars(), lam, &cfg)?;
        let mut rec = json!({
            "origin": origin,
            "lambda": LambdaDocument::from_matrix(lam).lambda,
            "in_gamma": r.is_some(),
        });
        if let Some(a) = r {
            rec["t"] = json!(a.t);
            rec["delta"] = json!(a.delta.to_string());
            rec["partial_degrees"] = json!(a.profiles.iter().map(|p| p.degree.to_string()).collect::<Vec<_>>());
            rec["partial_dims"] = json!(a.profiles.iter().map(|p| p.dim).collect::<Vec<_>>());
            if best.as_ref().is_none_or(|b| a.delta < *b) {
                best = Some(a.delta);
            }
        }
        rec["running_min"] = json!(best.as_ref().map(|b| b.to_string()));
        records.push(rec);
    }
    let degrees = bounds::system_degrees(&sys);
    let bezout = if degrees.is_empty() || degrees.iter().all(Zero::is_zero) {
        None
    } else {
        Some(bounds::bezout_algdeg_bound(&degrees, sys.nvars() as u64)?.to_string())
    };
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "records": records,
        "min_delta": best.map(|b| b.to_string()),
        "bezout_bound": bezout,
        "note": "the minimum over the matrices tried is an upper bound on the algebraic degree",
    })))
}
