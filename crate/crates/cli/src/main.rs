//! Command-line harness: verification suites, Hamiltonian/Casimir matrix
//! export, and spectral-equivalence reports.

mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use uqsl12::algebra::HopfVariant;
use uqsl12::casimir::CasimirSpec;
use uqsl12::chain::{closed_form, l_site_hamiltonian, HamiltonianKind};
use uqsl12::glinalg::PolyMatrix;
use uqsl12::report::Report;
use uqsl12::ring::{ParamPoint, NVARS, VAR_NAMES};

const USAGE_EXIT: u8 = 2;
const SUITE_FAIL_EXIT: u8 = 1;

#[derive(Parser)]
#[command(
    name = "uqsl12",
    version,
    about = "Exact verification harness for the two-parameter quantum superalgebra U_qs(sl(1|2))"
)]
struct Cli {
    /// Seed for random points and primes in probabilistic checks
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Worker threads (overrides RAYON_NUM_THREADS)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the JSON report or matrix to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite
    Verify(VerifyArgs),
    /// Export an L-site Hamiltonian matrix
    Hamiltonian(HamiltonianArgs),
    /// Export a Casimir operator in the L-site representation
    Casimir(CasimirArgs),
    /// Compare the spectra of two chain Hamiltonians
    Spectra(SpectraArgs),
    /// Run every acceptance suite and write a consolidated report
    All(AllArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (qybe, chareq, dident, rll+, rll-, sdet, boson, dual,
    /// presentation, hopf, invariance, hecke, fermionic, similarity,
    /// commutant, centrality, quadratic, limits, frt, normalization,
    /// reflection)
    #[arg(long)]
    suite: String,

    /// Hamiltonian kind for kind-specific suites
    #[arg(long, value_enum)]
    kind: Option<KindArg>,

    /// Chain length for L-dependent suites
    #[arg(long)]
    sites: Option<usize>,

    /// Hopf variant for variant-specific suites
    #[arg(long, value_enum)]
    hopf: Option<HopfArg>,
}

#[derive(Args)]
struct HamiltonianArgs {
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Chain length (2..=7)
    #[arg(long)]
    sites: usize,

    /// Parameter assignments, e.g. q=3/2,s=1,q12=2 (defaults q=3/2, s=5/7,
    /// q_ij=1; a value with a decimal point switches to float mode)
    #[arg(long)]
    params: Option<String>,

    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct CasimirArgs {
    /// Casimir family: cl (classical C^cl_p), q (quantum C_p), frt (c^(k))
    #[arg(long, value_enum)]
    family: FamilyArg,

    /// Family index p (or k for frt)
    #[arg(long)]
    index: i64,

    /// Chain length (1..=7)
    #[arg(long, default_value_t = 2)]
    sites: usize,

    /// Hopf variant used for the coproduct (defaults to the family's match)
    #[arg(long, value_enum)]
    hopf: Option<HopfArg>,

    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Parameter assignments for mtx export (same syntax as hamiltonian)
    #[arg(long)]
    params: Option<String>,
}

#[derive(Args)]
struct SpectraArgs {
    #[arg(long, value_enum, default_value_t = KindArg::Fermionic)]
    a: KindArg,

    #[arg(long, value_enum, default_value_t = KindArg::Distinguished)]
    b: KindArg,

    /// Chain length (2..=6; 7 requires --long)
    #[arg(long)]
    sites: usize,

    /// Allow the long-running seven-site computation
    #[arg(long)]
    long: bool,

    /// Number of random primes (minimum 3)
    #[arg(long, default_value_t = 3)]
    primes: usize,

    /// Number of random exact q points (minimum 2)
    #[arg(long, default_value_t = 2)]
    points: usize,
}

#[derive(Args)]
struct AllArgs {
    /// Include the seven-site spectral leg
    #[arg(long)]
    long: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Classical,
    Fermionic,
    Distinguished,
    Fourparam,
}

impl From<KindArg> for HamiltonianKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Classical => HamiltonianKind::Classical,
            KindArg::Fermionic => HamiltonianKind::FermionicDeformed,
            KindArg::Distinguished => HamiltonianKind::DistinguishedDeformed,
            KindArg::Fourparam => HamiltonianKind::FourParam,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HopfArg {
    Classical,
    Standard,
    NaturalDist,
}

impl From<HopfArg> for HopfVariant {
    fn from(h: HopfArg) -> Self {
        match h {
            HopfArg::Classical => HopfVariant::ClassicalPrimitive,
            HopfArg::Standard => HopfVariant::FermionicStandard,
            HopfArg::NaturalDist => HopfVariant::DistinguishedNatural,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Mtx,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cl,
    Q,
    Frt,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_EXIT)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Verify(args) => {
            let report = suites::run_suite(
                &args.suite,
                args.kind.map(Into::into),
                args.sites,
                args.hopf.map(Into::into),
                cli.seed,
            )?;
            let params = json!({
                "seed": cli.seed,
                "suite": args.suite,
                "kind": args.kind.map(|k| HamiltonianKind::from(k).name()),
                "sites": args.sites,
                "hopf": args.hopf.map(|h| HopfVariant::from(h).name()),
            });
            emit_report(report, params, &cli.out)
        }
        Command::Hamiltonian(args) => {
            if !(2..=7).contains(&args.sites) {
                return Err("--sites must be between 2 and 7".into());
            }
            let kind: HamiltonianKind = args.kind.into();
            let m = l_site_hamiltonian(&closed_form(kind), args.sites)
                .map_err(|e| e.to_string())?;
            emit_matrix(&m, args.format, args.params.as_deref(), &cli.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Casimir(args) => {
            let (spec, default_hopf) = match args.family {
                FamilyArg::Cl => (
                    CasimirSpec::classical(args.index).map_err(|e| e.to_string())?,
                    HopfVariant::ClassicalPrimitive,
                ),
                FamilyArg::Q => (
                    CasimirSpec::quantum(args.index),
                    HopfVariant::FermionicStandard,
                ),
                FamilyArg::Frt => (
                    CasimirSpec::frt(args.index).map_err(|e| e.to_string())?,
                    HopfVariant::FermionicStandard,
                ),
            };
            let hopf = args.hopf.map(Into::into).unwrap_or(default_hopf);
            let m = uqsl12::casimir::casimir_rep(spec, args.sites, hopf)
                .map_err(|e| e.to_string())?;
            emit_matrix(&m, args.format, args.params.as_deref(), &cli.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectra(args) => {
            let cfg = uqsl12::chain::SpectralConfig {
                points: args.points,
                primes: args.primes,
                seed: cli.seed,
                long: args.long,
                ..uqsl12::chain::SpectralConfig::default()
            };
            let sr = uqsl12::chain::spectral_equivalence(
                args.a.into(),
                args.b.into(),
                args.sites,
                &cfg,
            )
            .map_err(|e| e.to_string())?;
            let params = json!({
                "seed": cli.seed,
                "sites": args.sites,
                "points": sr.points,
                "primes": sr.primes,
                "long": args.long,
                "a": sr.kind_a,
                "b": sr.kind_b,
            });
            emit_report(sr.to_report(), params, &cli.out)
        }
        Command::All(args) => {
            let report = suites::all_report(args.long, cli.seed);
            let params = json!({ "seed": cli.seed, "long": args.long });
            let out = cli
                .out
                .clone()
                .or_else(|| Some(PathBuf::from("uqsl12-report.json")));
            emit_report(report, params, &out)
        }
    }
}

/// Print the human summary to stdout and write the JSON report (to `out` if
/// given, to stdout otherwise); exit 1 when any case fails.
fn emit_report(
    mut report: Report,
    params: serde_json::Value,
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    report.params = params;
    println!(
        "suite {}: {} cases, {} failing",
        report.suite,
        report.cases.len(),
        report.failing().len()
    );
    if report.cases.len() <= 24 {
        for c in &report.cases {
            println!("  [{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        }
    } else {
        for name in report.failing() {
            println!("  [FAIL] {name}");
        }
    }
    let pass = report.all_pass();
    println!("RESULT: {}", if pass { "PASS" } else { "FAIL" });
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match out {
        Some(path) => {
            std::fs::write(path, json.as_bytes()).map_err(|e| e.to_string())?;
            println!("report written to {}", path.display());
        }
        None => print_payload(&json),
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(SUITE_FAIL_EXIT)
    })
}

/// Parse `q=3/2,s=1,...` into a parameter point. Defaults are the generic
/// exact point q=3/2, s=5/7, q_ij=1; any decimal value switches the whole
/// point to float mode.
fn parse_params(spec: Option<&str>) -> Result<ParamPoint, String> {
    let mut exact: [(i64, i64); NVARS] = [(3, 2), (5, 7), (1, 1), (1, 1), (1, 1)];
    let mut floats: Option<[f64; NVARS]> = None;
    let Some(spec) = spec else {
        return Ok(ParamPoint::exact(exact));
    };
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("bad parameter assignment '{item}'"))?;
        let var = VAR_NAMES
            .iter()
            .position(|&v| v == name.trim())
            .ok_or_else(|| format!("unknown parameter '{name}'"))?;
        let value = value.trim();
        if value.contains('.') {
            let f: f64 = value
                .parse()
                .map_err(|_| format!("bad float value '{value}'"))?;
            let fs = floats.get_or_insert_with(|| {
                std::array::from_fn(|i| exact[i].0 as f64 / exact[i].1 as f64)
            });
            fs[var] = f;
        } else {
            let (num, den) = match value.split_once('/') {
                Some((n, d)) => (
                    n.parse::<i64>()
                        .map_err(|_| format!("bad rational value '{value}'"))?,
                    d.parse::<i64>()
                        .map_err(|_| format!("bad rational value '{value}'"))?,
                ),
                None => (
                    value
                        .parse::<i64>()
                        .map_err(|_| format!("bad rational value '{value}'"))?,
                    1,
                ),
            };
            if den == 0 {
                return Err(format!("zero denominator in '{value}'"));
            }
            exact[var] = (num, den);
            if let Some(fs) = floats.as_mut() {
                fs[var] = num as f64 / den as f64;
            }
        }
    }
    Ok(match floats {
        Some(fs) => ParamPoint::Float(fs),
        None => ParamPoint::exact(exact),
    })
}

/// Emit a matrix: symbolic JSON by default, specialized JSON when parameters
/// are given, Matrix Market at the parameter point for mtx.
fn emit_matrix(
    m: &PolyMatrix,
    format: FormatArg,
    params: Option<&str>,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    let text = match format {
        FormatArg::Json if params.is_none() => {
            serde_json::to_string_pretty(m).map_err(|e| e.to_string())?
        }
        FormatArg::Json => {
            let at = parse_params(params)?;
            let entries: Vec<serde_json::Value> = match &at {
                ParamPoint::Exact(vals) => {
                    use num::traits::Zero;
                    let flat = m.eval_exact(vals).map_err(|e| e.to_string())?;
                    (0..m.rows)
                        .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
                        .filter(|&(i, j)| !flat[i * m.cols + j].is_zero())
                        .map(|(i, j)| json!([i + 1, j + 1, flat[i * m.cols + j].to_string()]))
                        .collect()
                }
                ParamPoint::Float(vals) => {
                    let flat = m.eval_float(vals).map_err(|e| e.to_string())?;
                    (0..m.rows)
                        .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
                        .filter(|&(i, j)| flat[i * m.cols + j] != 0.0)
                        .map(|(i, j)| json!([i + 1, j + 1, flat[i * m.cols + j]]))
                        .collect()
                }
            };
            serde_json::to_string_pretty(&json!({
                "rows": m.rows,
                "cols": m.cols,
                "entries": entries,
            }))
            .map_err(|e| e.to_string())?
        }
        FormatArg::Mtx => {
            let at = parse_params(params)?;
            m.matrix_market(&at).map_err(|e| e.to_string())?
        }
    };
    match out {
        Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| e.to_string())?,
        None => print_payload(&text),
    }
    Ok(())
}

/// Print a large payload, ignoring a closed pipe (e.g. output piped to head).
fn print_payload(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}
