//! Batch verification front end: `yangian verify <suite>`.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2
//! on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exact_arith::{display_rat, parse_rat, serde_rat, Rat};
use crate::principal_gl::{checks as gl, MatrixDump};
use crate::rep_engine::{
    build_tensor_module, calibrate, casimir_invariance_check, coproduct_homomorphism_check, corollary52,
    dictionary_check, j_linearity_check, mixed_relation_check, verify_theorem51_with, Calibration, Convention,
    Corollary52Report, Dictionary, Irreducibility, Theorem51Report,
};
use crate::report::CheckReport;
use crate::yangian_core::checks as yc;
use crate::yangian_core::{EvaluationVariant, ExponentVariant, InverseVariant};

/// Random tables per presentation in the isomorphism suite.
pub const ROUND_TRIP_TABLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Principal basis product, commutator, gradation and invariant form.
    Lie,
    /// Action on the Fourier basis and its pairing.
    Fourier,
    /// The two expansions of the flip operator.
    Permutation,
    /// Round trip between the Cartan-Weyl and principal presentations.
    Isomorphism,
    /// Quantum Yang-Baxter equation for Yang's R-matrix.
    Qybe,
    /// RTT relation in the evaluation representation.
    Rtt,
    /// Componentwise principal relations on the evaluation module.
    PrincipalRelations,
    /// Closed-form Yangian action on the entangled basis.
    Theorem51,
    /// Irreducibility of the two-site tensor module.
    Corollary52,
    /// Every suite above.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lie => "lie",
            Suite::Fourier => "fourier",
            Suite::Permutation => "permutation",
            Suite::Isomorphism => "isomorphism",
            Suite::Qybe => "qybe",
            Suite::Rtt => "rtt",
            Suite::PrincipalRelations => "principal-relations",
            Suite::Theorem51 => "theorem51",
            Suite::Corollary52 => "corollary52",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "yangian", version, about = "Exact checks for the principal realization of the Yangian Y(gl(n))")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Matrix size for gl(n) suites.
    #[arg(long, default_value_t = 3, value_parser = parse_n)]
    pub n: usize,
    /// Level bound for generator tables.
    #[arg(long, default_value_t = 2, value_parser = parse_depth)]
    pub depth: usize,
    /// First evaluation parameter, `p/q`.
    #[arg(long, default_value = "1", value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub a: Rat,
    /// Second evaluation parameter, `p/q`.
    #[arg(long, default_value = "0", value_parser = parse_rat_arg, allow_hyphen_values = true)]
    pub b: Rat,
    /// Seed for randomized tables and negative controls.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Alternative reading: `corrected|as-printed` (isomorphism),
    /// `as-printed|theorem|rtt-derived` (principal-relations),
    /// `<superscript|subscript>/<shift>` (theorem51, corollary52).
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Write residual matrices of failed checks to this JSON file.
    #[arg(long)]
    pub dump: Option<PathBuf>,
}

fn parse_n(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err(format!("{s:?} is not an integer >= 2")),
    }
}

fn parse_depth(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(d) if d >= 1 => Ok(d),
        _ => Err(format!("{s:?} is not an integer >= 1")),
    }
}

fn parse_rat_arg(s: &str) -> std::result::Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// Variant selection after validation against the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantChoice {
    Inverse(InverseVariant),
    Exponent(ExponentVariant),
    Convention(Convention),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n: usize,
    pub depth: usize,
    pub a: Rat,
    pub b: Rat,
    pub seed: u64,
    pub variant: Option<VariantChoice>,
    pub output: OutputFormat,
}

impl SuiteConfig {
    pub fn new(suite: Suite, n: usize, depth: usize, a: Rat, b: Rat, seed: u64) -> Self {
        Self {
            suite,
            n,
            depth,
            a,
            b,
            seed,
            variant: None,
            output: OutputFormat::Text,
        }
    }

    /// Validates ranges and resolves `--variant` for the chosen suite.
    pub fn from_args(args: &VerifyArgs) -> std::result::Result<Self, String> {
        let mut cfg = Self::new(args.suite, args.n, args.depth, args.a.clone(), args.b.clone(), args.seed);
        cfg.output = args.output;
        cfg.variant = args
            .variant
            .as_deref()
            .map(|v| parse_variant(args.suite, v))
            .transpose()?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.n < 2 {
            return Err(format!("--n must be >= 2, got {}", self.n));
        }
        if self.depth < 1 {
            return Err(format!("--depth must be >= 1, got {}", self.depth));
        }
        Ok(())
    }
}

fn parse_variant(suite: Suite, v: &str) -> std::result::Result<VariantChoice, String> {
    match suite {
        Suite::Isomorphism => InverseVariant::parse(v)
            .map(VariantChoice::Inverse)
            .ok_or_else(|| format!("unknown isomorphism variant {v:?}; expected corrected or as-printed")),
        Suite::PrincipalRelations => ExponentVariant::parse(v).map(VariantChoice::Exponent).ok_or_else(|| {
            format!("unknown principal-relations variant {v:?}; expected as-printed, theorem or rtt-derived")
        }),
        Suite::Theorem51 | Suite::Corollary52 => v
            .parse::<Convention>()
            .map(VariantChoice::Convention)
            .map_err(|e| e.to_string()),
        other => Err(format!("suite {} takes no --variant", other.name())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub depth: usize,
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub b: Rat,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub calibration: Option<Calibration>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub theorem51: Vec<Theorem51Report>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub corollary52: Vec<Corollary52Report>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    fn new(cfg: &SuiteConfig) -> Self {
        Self {
            suite: cfg.suite,
            n: cfg.n,
            depth: cfg.depth,
            a: cfg.a.clone(),
            b: cfg.b.clone(),
            seed: cfg.seed,
            checks: Vec::new(),
            calibration: None,
            theorem51: Vec::new(),
            corollary52: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    fn tally(&mut self) {
        let outcomes = self
            .checks
            .iter()
            .map(|c| c.passed)
            .chain(self.theorem51.iter().map(Theorem51Report::passed))
            .chain(self.corollary52.iter().map(|c| c.consistent));
        let (mut p, mut f) = (0, 0);
        for ok in outcomes {
            if ok {
                p += 1;
            } else {
                f += 1;
            }
        }
        self.passed = p;
        self.failed = f;
    }

    pub fn success(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.success() {
            0
        } else {
            1
        }
    }
}

/// Runs one suite (or all of them) and tallies the outcome.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(cfg);
    let suites: Vec<Suite> = match cfg.suite {
        Suite::All => Suite::value_variants()
            .iter()
            .copied()
            .filter(|s| *s != Suite::All)
            .collect(),
        s => vec![s],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for suite in suites {
        run_one(suite, cfg, &mut rng, &mut report)?;
    }
    report.tally();
    Ok(report)
}

fn run_one(suite: Suite, cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut SuiteReport) -> Result<()> {
    let n = cfg.n;
    match suite {
        Suite::Lie => report.checks.extend([
            gl::product_law(n),
            gl::commutator_law(n),
            gl::cartan_action_law(n),
            gl::principal_cartan(n),
            gl::sigma_eigen(n),
            gl::sigma_automorphism(n, rng, 4),
            gl::invariant_form(n),
        ]),
        Suite::Fourier => report.checks.extend([gl::fourier_action(n), gl::fourier_pairing(n)]),
        Suite::Permutation => report.checks.push(gl::permutation_expansion(n)),
        Suite::Isomorphism => {
            let variant = match cfg.variant {
                Some(VariantChoice::Inverse(v)) => v,
                _ => InverseVariant::Corrected,
            };
            report
                .checks
                .push(yc::isomorphism_round_trip(n, cfg.depth, ROUND_TRIP_TABLES, variant, rng)?);
        }
        Suite::Qybe => report.checks.extend([yc::qybe_check(n), yc::qybe_negative_control(n, rng)]),
        Suite::Rtt => report.checks.extend(yc::rtt_checks(n)),
        Suite::PrincipalRelations => match cfg.variant {
            Some(VariantChoice::Exponent(v)) => report.checks.push(yc::principal_relations_check(
                n,
                EvaluationVariant::DerivedFromP,
                v,
                cfg.depth,
            )?),
            _ => {
                let survey = yc::relation_survey(n, cfg.depth)?;
                report.checks.push(survey.summary);
                report.checks.extend(survey.runs);
            }
        },
        Suite::Theorem51 => {
            let cal = calibration(report)?;
            let convention = convention_or(cfg, cal.convention);
            let module = build_tensor_module(cfg.a.clone(), cfg.b.clone(), cal.c.clone());
            report.checks.extend([
                dictionary_check(),
                coproduct_homomorphism_check(&module),
                casimir_invariance_check(&module),
                mixed_relation_check(&module),
                j_linearity_check(&module, rng, 4),
            ]);
            report.theorem51.push(verify_theorem51_with(
                &Dictionary::principal(),
                &cfg.a,
                &cfg.b,
                &cal.c,
                convention,
                cal.delta_reading,
            ));
        }
        Suite::Corollary52 => {
            let cal = calibration(report)?;
            let convention = convention_or(cfg, cal.convention);
            let module = build_tensor_module(cfg.a.clone(), cfg.b.clone(), cal.c.clone());
            report.corollary52.push(corollary52(&module, convention)?);
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
    Ok(())
}

fn convention_or(cfg: &SuiteConfig, fallback: Convention) -> Convention {
    match cfg.variant {
        Some(VariantChoice::Convention(c)) => c,
        _ => fallback,
    }
}

/// Calibrates once per report and records the outcome as a check.
fn calibration(report: &mut SuiteReport) -> Result<Calibration> {
    if let Some(cal) = &report.calibration {
        return Ok(cal.clone());
    }
    let mut check = CheckReport::new("calibration", 3);
    let cal = match calibrate() {
        Ok(cal) => cal,
        Err(e) => {
            check.record(&e, false);
            report.checks.push(check);
            return Err(e);
        }
    };
    check.record("unique surviving candidate", true);
    check.record("held-out sample", cal.cross_check.passed());
    let check = check.with_variant(cal.convention.to_string()).with_note(format!(
        "c = {}, deltas {}, {} candidates searched",
        display_rat(&cal.c),
        cal.delta_reading.name(),
        cal.candidates.len()
    ));
    report.checks.push(check);
    report.calibration = Some(cal.clone());
    Ok(cal)
}

/// Deterministic serialization of a report.
pub fn emit_report(report: &SuiteReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => text_report(report),
    }
}

fn text_report(r: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite {}  n={}  depth={}  a={}  b={}  seed={}",
        r.suite.name(),
        r.n,
        r.depth,
        display_rat(&r.a),
        display_rat(&r.b),
        r.seed
    );
    if !r.checks.is_empty() {
        let _ = writeln!(
            out,
            "{:<38} {:>2}  {:<22} {:<13} {:>7} {:>7}  RESULT",
            "CHECK", "N", "VARIANT", "EXPECT", "TESTED", "FAILED"
        );
        for c in &r.checks {
            let expect = serde_json::to_value(c.expectation).expect("serializes");
            let _ = writeln!(
                out,
                "{:<38} {:>2}  {:<22} {:<13} {:>7} {:>7}  {}",
                c.check,
                c.n,
                c.variant.as_deref().unwrap_or("-"),
                expect.as_str().unwrap_or("?"),
                c.indices_tested,
                c.failure_count(),
                status(c.passed)
            );
            if !c.passed {
                for f in c.failures.iter().take(5) {
                    let _ = writeln!(out, "    failure at {}", f.index);
                }
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "    {note}");
            }
        }
    }
    for t in &r.theorem51 {
        let _ = writeln!(
            out,
            "theorem51  a={} b={} c={} convention={} deltas={}  {}/{} entries hold  {}",
            display_rat(&t.a),
            display_rat(&t.b),
            display_rat(&t.c),
            t.convention,
            t.delta_reading.name(),
            t.entries.len() - t.failure_count(),
            t.entries.len(),
            status(t.passed())
        );
        for e in t.entries.iter().filter(|e| !e.pass).take(5) {
            let _ = writeln!(
                out,
                "    J(T_{}^({})) ψ_{}^({}): expected {}, found {}",
                e.i, e.j, e.k, e.m, e.expected_coeff, e.computed_coeff
            );
        }
    }
    for c in &r.corollary52 {
        let seeds: Vec<String> = c.entries.iter().map(|s| s.dim.to_string()).collect();
        let _ = writeln!(
            out,
            "corollary52  a={} b={} c={}  burnside={}  closures=[{}]  verdict={}  {}",
            display_rat(&c.a),
            display_rat(&c.b),
            display_rat(&c.c),
            c.burnside_dimension,
            seeds.join(","),
            verdict_text(&c.verdict),
            status(c.consistent)
        );
    }
    let _ = writeln!(out, "summary: {} passed, {} failed", r.passed, r.failed);
    out
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn verdict_text(v: &Irreducibility) -> String {
    match v {
        Irreducibility::Irreducible => "irreducible".into(),
        Irreducibility::Reducible { submodule_dims } => {
            let dims: Vec<String> = submodule_dims.iter().map(ToString::to_string).collect();
            format!("reducible(dim {})", dims.join(","))
        }
    }
}

#[derive(Serialize)]
struct DumpEntry<'a> {
    check: &'a str,
    index: &'a str,
    residual: &'a MatrixDump,
}

/// Residual matrices of failed checks as JSON.
pub fn residual_dumps(report: &SuiteReport) -> String {
    let entries: Vec<DumpEntry> = report
        .checks
        .iter()
        .flat_map(|c| {
            c.failures.iter().filter_map(move |f| {
                f.residual.as_ref().map(|residual| DumpEntry {
                    check: &c.check,
                    index: &f.index,
                    residual,
                })
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("dumps serialize");
    s.push('\n');
    s
}

/// Parses arguments, runs the command and returns `(exit code, stdout)`.
/// Usage errors and runtime errors go to stderr.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                return (0, text);
            }
            eprint!("{text}");
            return (2, String::new());
        }
    };
    let Command::Verify(args) = cli.command;
    let cfg = match SuiteConfig::from_args(&args) {
        Ok(cfg) => cfg,
        Err(msg) => {
            let err = Cli::command().error(clap::error::ErrorKind::InvalidValue, msg);
            eprint!("{}", err.render());
            return (2, String::new());
        }
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return (1, String::new());
        }
    };
    if let Some(path) = &args.dump {
        if let Err(e) = std::fs::write(path, residual_dumps(&report)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return (2, String::new());
        }
    }
    (report.exit_code(), emit_report(&report, cfg.output))
}
