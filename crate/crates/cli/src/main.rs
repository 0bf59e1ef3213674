//! `wulff`: construct planar Wulff shapes from positive integrands, combine
//! and dualize them, run the verification suite, and export JSON and SVG.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 hypothesis refusal (the statement under test does not apply to the
//! inputs), 3 input or usage error.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::Rng;
use serde::Serialize;
use wulff_core::integrand::{parse_spec, Integrand, IntegrandSpec};
use wulff_core::report::TrialReport;
use wulff_core::sampling::{random_cap_point, random_sphere_point, trial_rng};
use wulff_core::spherical::{verify_double_polar, verify_maehara, FiniteSphereSet};
use wulff_core::wulff::{
    dual_wulff, verify_corollary, verify_dual_boundary, verify_section4, verify_theorem1,
    wulff_direct, WulffResult,
};
use wulff_core::Error;

use svg::{Layer, RenderSpec, PALETTE};

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_REFUSED: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wulff",
    version,
    about = "Planar Wulff shapes: construction, duality, verification, figures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Wulff shape of an integrand by direct half-plane intersection.
    Wulff(BuildArgs),
    /// Build the dual Wulff shape via the unit sphere (lift, blow up, polar).
    Dual(BuildArgs),
    /// Build the Wulff shape of the pointwise maximum of two integrands.
    Max(PairBuildArgs),
    /// Build the Wulff shape of the pointwise minimum of two integrands.
    Min(PairBuildArgs),
    /// Run a verification check and write its JSON report.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Render the two input shapes and their max/min combinations as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Integrand: a DSL string ("const 1", "poly [(x,y),...]", "expr ...",
    /// "samples path"), or @FILE to read the DSL string from a file.
    #[arg(long)]
    gamma: String,
    /// Number of uniform support directions.
    #[arg(short = 'K', long = "directions", default_value_t = 720)]
    k: usize,
    /// Write the result JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render the shape to this SVG file.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 640)]
    height: u32,
}

#[derive(Args)]
struct PairBuildArgs {
    /// First integrand (DSL string or @FILE).
    #[arg(long)]
    gamma1: String,
    /// Second integrand (DSL string or @FILE).
    #[arg(long)]
    gamma2: String,
    #[arg(short = 'K', long = "directions", default_value_t = 720)]
    k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 640)]
    height: u32,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Wulff shape of the max is the hull of the union; of the min, the
    /// intersection. Refuses integrands that fail the convexity hypothesis.
    Theorem1(PairVerifyArgs),
    /// Dual-route restatements of the combination identities, plus
    /// containment diagnostics (one of which is a known refuted inclusion).
    Section4(PairVerifyArgs),
    /// For a polar-dual pair of Wulff shapes, the max combination is the
    /// polar dual of the min combination. Refuses non-dual pairs.
    Corollary(PairVerifyArgs),
    /// The inverted support graph traces the dual Wulff shape's boundary.
    DualBoundary(SingleVerifyArgs),
    /// Convex-integrand test: inverted graph on its own hull boundary.
    Convexity(SingleVerifyArgs),
    /// Sampled polar-identity equivalence on random hemispherical sets.
    Maehara(SampledVerifyArgs),
    /// Sampled double-polar identity on random hemispherical sets.
    DoublePolar(SampledVerifyArgs),
}

#[derive(Args)]
struct PairVerifyArgs {
    #[arg(long)]
    gamma1: String,
    #[arg(long)]
    gamma2: String,
    #[arg(short = 'K', long = "directions", default_value_t = 720)]
    k: usize,
    /// Override the geometric tolerance factor (default derives from K).
    #[arg(long)]
    tol: Option<f64>,
    /// Write the report JSON here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SingleVerifyArgs {
    #[arg(long)]
    gamma: String,
    #[arg(short = 'K', long = "directions", default_value_t = 720)]
    k: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SampledVerifyArgs {
    /// Number of random hemispherical generator sets.
    #[arg(long, default_value_t = 10)]
    sets: u64,
    /// Sampled points per set.
    #[arg(long, default_value_t = 10_000)]
    points: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    gamma1: String,
    #[arg(long)]
    gamma2: String,
    #[arg(short = 'K', long = "directions", default_value_t = 720)]
    k: usize,
    /// Output SVG path.
    #[arg(long)]
    svg: PathBuf,
    /// Draw four separate panels instead of one overlay.
    #[arg(long)]
    panels: bool,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 640)]
    height: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: if e.is_refusal() { EXIT_REFUSED } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::input(e.to_string())
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Wulff(args) => build(args, wulff_direct),
        Command::Dual(args) => build(args, dual_wulff),
        Command::Max(args) => build_pair(args, Integrand::pointwise_max),
        Command::Min(args) => build_pair(args, Integrand::pointwise_min),
        Command::Verify(which) => verify(which),
        Command::Render(args) => render(args),
    }
}

/// Resolves a --gamma value: literal DSL, @FILE indirection, and the samples
/// form, which names a file of "angle value" lines.
fn load_integrand(spec: &str) -> Result<Integrand, Failure> {
    let text = if let Some(path) = spec.strip_prefix('@') {
        fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read integrand file {path}: {e}")))?
    } else {
        spec.to_string()
    };
    match parse_spec(text.trim())? {
        IntegrandSpec::Ready(g) => Ok(g),
        IntegrandSpec::SamplesFile(path) => {
            let body = fs::read_to_string(&path)
                .map_err(|e| Failure::input(format!("cannot read samples file {path}: {e}")))?;
            Ok(Integrand::samples_from_text(&body)?)
        }
    }
}

/// Writes pretty JSON with a trailing newline to the path, or stdout.
fn emit_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::input(format!("serialization failed: {e}")))?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn write_svg_file(path: &Path, layers: &[Layer], spec: &RenderSpec, panels: bool) -> Result<(), Failure> {
    let body = if panels {
        svg::panels(layers, spec)
    } else {
        svg::overlay(layers, spec)
    };
    fs::write(path, body)?;
    Ok(())
}

fn build(args: BuildArgs, construct: fn(&Integrand, usize) -> wulff_core::Result<WulffResult>) -> Result<u8, Failure> {
    let g = load_integrand(&args.gamma)?;
    let result = construct(&g, args.k)?;
    emit_json(args.out.as_deref(), &result)?;
    if let Some(path) = &args.svg {
        let spec = RenderSpec::new(args.width, args.height).map_err(Failure::input)?;
        let layers = [Layer {
            shape: &result.shape,
            stroke: PALETTE[0],
            label: &result.gamma_id,
        }];
        write_svg_file(path, &layers, &spec, false)?;
    }
    Ok(0)
}

fn build_pair(
    args: PairBuildArgs,
    combine: fn(Integrand, Integrand) -> Integrand,
) -> Result<u8, Failure> {
    let g1 = load_integrand(&args.gamma1)?;
    let g2 = load_integrand(&args.gamma2)?;
    let combined = combine(g1, g2);
    let result = wulff_direct(&combined, args.k)?;
    emit_json(args.out.as_deref(), &result)?;
    if let Some(path) = &args.svg {
        let spec = RenderSpec::new(args.width, args.height).map_err(Failure::input)?;
        let layers = [Layer {
            shape: &result.shape,
            stroke: PALETTE[0],
            label: &result.gamma_id,
        }];
        write_svg_file(path, &layers, &spec, false)?;
    }
    Ok(0)
}

fn verify(which: VerifyCommand) -> Result<u8, Failure> {
    match which {
        VerifyCommand::Theorem1(args) => pair_report(args, verify_theorem1),
        VerifyCommand::Section4(args) => pair_report(args, verify_section4),
        VerifyCommand::Corollary(args) => pair_report(args, verify_corollary),
        VerifyCommand::DualBoundary(args) => {
            let g = load_integrand(&args.gamma)?;
            let report = verify_dual_boundary(&g, args.k, args.tol)?;
            emit_json(args.report.as_deref(), &report)?;
            eprintln!(
                "{}: {}",
                report.name,
                if report.pass { "pass" } else { "FAIL" }
            );
            Ok(if report.pass { 0 } else { EXIT_VERIFY_FAIL })
        }
        VerifyCommand::Convexity(args) => {
            let g = load_integrand(&args.gamma)?;
            let check = g.is_convex_integrand(args.k, args.tol)?;
            emit_json(args.report.as_deref(), &check)?;
            eprintln!(
                "convexity: {} (worst violation {:.3e})",
                if check.is_convex { "pass" } else { "FAIL" },
                check.worst_violation
            );
            Ok(if check.is_convex { 0 } else { EXIT_VERIFY_FAIL })
        }
        VerifyCommand::Maehara(args) => sampled_report(args, verify_maehara),
        VerifyCommand::DoublePolar(args) => sampled_report(args, verify_double_polar),
    }
}

fn pair_report(
    args: PairVerifyArgs,
    verifier: fn(
        &Integrand,
        &Integrand,
        usize,
        Option<f64>,
    ) -> wulff_core::Result<wulff_core::report::VerificationReport>,
) -> Result<u8, Failure> {
    let g1 = load_integrand(&args.gamma1)?;
    let g2 = load_integrand(&args.gamma2)?;
    let report = verifier(&g1, &g2, args.k, args.tol)?;
    emit_json(args.report.as_deref(), &report)?;
    eprintln!(
        "{}: {}",
        report.name,
        if report.pass { "pass" } else { "FAIL" }
    );
    Ok(if report.pass { 0 } else { EXIT_VERIFY_FAIL })
}

/// Seeded random generator set for the sampled spherical checks: 3 to 12
/// points in a cap of angular radius 0.2 to 1.4 around a random center.
fn random_hemispherical_set(seed: u64, index: u64) -> FiniteSphereSet {
    let mut rng = trial_rng(seed.wrapping_mul(0x5DEECE66D).wrapping_add(77), index);
    let center = random_sphere_point(&mut rng);
    let radius = rng.gen_range(0.2..1.4);
    let n = rng.gen_range(3..=12);
    FiniteSphereSet::new(
        (0..n)
            .map(|_| random_cap_point(&mut rng, &center, radius))
            .collect(),
    )
    .expect("cap points are nonzero unit vectors")
}

fn sampled_report(
    args: SampledVerifyArgs,
    verifier: fn(&FiniteSphereSet, u64, u64) -> wulff_core::Result<TrialReport>,
) -> Result<u8, Failure> {
    let mut reports = Vec::with_capacity(args.sets as usize);
    for i in 0..args.sets {
        let w = random_hemispherical_set(args.seed, i);
        reports.push(verifier(&w, args.points, args.seed.wrapping_add(i))?);
    }
    emit_json(args.report.as_deref(), &reports)?;
    let mismatches: u64 = reports.iter().map(|r| r.mismatches).sum();
    let pass = reports.iter().all(|r| r.pass);
    eprintln!(
        "{}: {} ({} sets, {} mismatches)",
        reports.first().map(|r| r.name.as_str()).unwrap_or("sampled"),
        if pass { "pass" } else { "FAIL" },
        args.sets,
        mismatches
    );
    Ok(if pass { 0 } else { EXIT_VERIFY_FAIL })
}

fn render(args: RenderArgs) -> Result<u8, Failure> {
    let g1 = load_integrand(&args.gamma1)?;
    let g2 = load_integrand(&args.gamma2)?;
    let w1 = wulff_direct(&g1, args.k)?;
    let w2 = wulff_direct(&g2, args.k)?;
    let wmax = wulff_direct(&Integrand::pointwise_max(g1.clone(), g2.clone()), args.k)?;
    let wmin = wulff_direct(&Integrand::pointwise_min(g1, g2), args.k)?;
    let spec = RenderSpec::new(args.width, args.height).map_err(Failure::input)?;
    let layers = [
        Layer { shape: &w1.shape, stroke: PALETTE[0], label: "W1" },
        Layer { shape: &w2.shape, stroke: PALETTE[1], label: "W2" },
        Layer { shape: &wmax.shape, stroke: PALETTE[2], label: "W max" },
        Layer { shape: &wmin.shape, stroke: PALETTE[3], label: "W min" },
    ];
    write_svg_file(&args.svg, &layers, &spec, args.panels)?;
    Ok(0)
}
