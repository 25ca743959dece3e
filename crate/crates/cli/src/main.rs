//! `monores`: Betti numbers, linearity checks, gcd-type conditions and
//! Golod certificates for monomial ideals from the command line.
//!
//! Exit status: 0 success, 1 a checked statement was falsified, 2 usage or
//! input error, 3 a resource cap was hit.

mod cache;
mod commands;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use monores::io::{clutter_document, ideal_document, parse_clutter, parse_ideal};
use monores::orders::OrderSpec;
use monores::scan::Problem;
use monores::{Caps, Clutter, FieldSpec, MonomialIdeal};
use serde::Serialize;
use serde_json::{json, Value};

use cache::ResultCache;
use commands::{Context, Outcome};

#[derive(Parser)]
#[command(name = "monores", version, about = "Exact homological invariants of monomial ideals")]
struct Cli {
    /// Coefficient field: gf2, gf<p> for a prime p, or rational.
    #[arg(long, global = true, default_value = "gf2")]
    field: FieldSpec,
    /// Power of the input ideal (default 1; 2 for the clutter checks).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    s: Option<u32>,
    /// Largest power for certificate searches and scans (default 2).
    #[arg(long = "s-max", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    s_max: Option<u32>,
    /// Maximum number of lcm lattice elements.
    #[arg(long = "cap-lattice", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_lattice: Option<u64>,
    /// Maximum number of generators of powers and degree pieces.
    #[arg(long = "cap-gens", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_gens: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached results.
    #[arg(long = "cache-dir", global = true)]
    cache_dir: Option<PathBuf>,
    /// Seed of the random part of the scan stream.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Monomial orders to try: all, lex, deglex, degrevlex or weight:w1,w2,...
    #[arg(long, global = true, default_value = "all")]
    order: OrderSpec,
    /// Show Betti diagrams of S/I instead of I.
    #[arg(long, global = true)]
    quotient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Multigraded and graded Betti numbers of I^s.
    Betti { input: PathBuf },
    /// Minimal generators of I^s as an ideal document.
    Power { input: PathBuf },
    /// Does I^s have a linear resolution?
    CheckLinear { input: PathBuf },
    /// Is I^s componentwise linear?
    CheckCwl { input: PathBuf },
    /// The gcd condition and its support version.
    CheckGcd { input: PathBuf },
    /// Search for an order satisfying the strong gcd condition.
    CheckStrongGcd { input: PathBuf },
    /// Search for linear quotients of I^s, in any order and along monomial orders.
    CheckLinquot { input: PathBuf },
    /// Try to certify that S/I is Golod.
    GolodCert { input: PathBuf },
    /// Betti lower bounds for powers of a uniform clutter's edge ideal.
    #[command(name = "verify-thm34")]
    VerifyThm34 { input: PathBuf },
    /// Regularity lower bounds for powers of a uniform clutter's edge ideal.
    #[command(name = "verify-cor35")]
    VerifyCor35 { input: PathBuf },
    /// Gather evidence on the strong gcd conjecture or the Golod question.
    Scan {
        #[arg(long)]
        problem: Problem,
        /// Number of instances to examine.
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Dump the lcm lattice with lower covers.
    Lattice { input: PathBuf },
    /// Run built-in consistency checks.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Betti { .. } => "betti",
            Command::Power { .. } => "power",
            Command::CheckLinear { .. } => "check-linear",
            Command::CheckCwl { .. } => "check-cwl",
            Command::CheckGcd { .. } => "check-gcd",
            Command::CheckStrongGcd { .. } => "check-strong-gcd",
            Command::CheckLinquot { .. } => "check-linquot",
            Command::GolodCert { .. } => "golod-cert",
            Command::VerifyThm34 { .. } => "verify-thm34",
            Command::VerifyCor35 { .. } => "verify-cor35",
            Command::Scan { .. } => "scan",
            Command::Lattice { .. } => "lattice",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Serialize)]
struct Parameters {
    field: FieldSpec,
    s: Option<u32>,
    s_max: Option<u32>,
    order: OrderSpec,
    quotient: bool,
    seed: Option<u64>,
    problem: Option<Problem>,
    budget: Option<usize>,
}

#[derive(Serialize)]
struct Document<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input: &'a Value,
    parameters: &'a Parameters,
    caps: &'a Caps,
    warnings: &'a [String],
    falsified: bool,
    result: &'a Value,
}

enum Input {
    None,
    Ideal(MonomialIdeal),
    Clutter(Clutter),
}

impl Input {
    fn document(&self) -> Value {
        match self {
            Input::None => Value::Null,
            Input::Ideal(i) => json!({"ideal": ideal_document(i)}),
            Input::Clutter(c) => json!({"clutter": clutter_document(c)}),
        }
    }

    fn ideal(&self) -> &MonomialIdeal {
        match self {
            Input::Ideal(i) => i,
            _ => unreachable!("ideal commands read ideals"),
        }
    }

    fn clutter(&self) -> &Clutter {
        match self {
            Input::Clutter(c) => c,
            _ => unreachable!("clutter commands read clutters"),
        }
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Error classes mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Resource(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<monores::Error>() {
            Some(m) if m.is_resource() => Failure::Resource(e),
            _ => Failure::Usage(e),
        }
    }
}

impl From<monores::Error> for Failure {
    fn from(e: monores::Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut caps = Caps::default();
    if let Some(c) = cli.cap_lattice {
        caps.lattice_elements = c as usize;
    }
    if let Some(c) = cli.cap_gens {
        caps.generators = c as usize;
    }
    let ctx = Context {
        field: cli.field,
        caps,
        orders: cli.order.clone(),
        quotient: cli.quotient,
    };
    let command = cli.command.name();
    let mut warnings = Vec::new();
    let input = match &cli.command {
        Command::Scan { .. } | Command::Selftest => Input::None,
        Command::VerifyThm34 { input } | Command::VerifyCor35 { input } => {
            let text = read_text(input)?;
            Input::Clutter(parse_clutter(&text).with_context(|| format!("parsing {}", input.display()))?)
        }
        Command::Betti { input }
        | Command::Power { input }
        | Command::CheckLinear { input }
        | Command::CheckCwl { input }
        | Command::CheckGcd { input }
        | Command::CheckStrongGcd { input }
        | Command::CheckLinquot { input }
        | Command::GolodCert { input }
        | Command::Lattice { input } => {
            let text = read_text(input)?;
            let parsed = parse_ideal(&text).with_context(|| format!("parsing {}", input.display()))?;
            warnings = parsed.warnings;
            Input::Ideal(parsed.value)
        }
    };
    let clutter_default = matches!(cli.command, Command::VerifyThm34 { .. } | Command::VerifyCor35 { .. });
    let s = cli.s.unwrap_or(if clutter_default { 2 } else { 1 });
    let s_max = cli.s_max.unwrap_or(s.max(2));
    let (problem, budget) = match &cli.command {
        Command::Scan { problem, budget } => (Some(*problem), Some(*budget)),
        _ => (None, None),
    };
    let parameters = Parameters {
        field: ctx.field,
        s: matches!(
            cli.command,
            Command::Betti { .. }
                | Command::Power { .. }
                | Command::CheckLinear { .. }
                | Command::CheckCwl { .. }
                | Command::CheckLinquot { .. }
                | Command::VerifyThm34 { .. }
                | Command::VerifyCor35 { .. }
                | Command::GolodCert { .. }
        )
        .then_some(s),
        s_max: matches!(cli.command, Command::GolodCert { .. } | Command::Scan { .. }).then_some(s_max),
        order: ctx.orders.clone(),
        quotient: ctx.quotient,
        seed: problem.map(|_| cli.seed),
        problem,
        budget,
    };
    if s_max < s && matches!(cli.command, Command::GolodCert { .. }) {
        return Err(Failure::Usage(anyhow::anyhow!("--s-max must be at least --s")));
    }
    let input_doc = input.document();
    let cacheable = !matches!(cli.command, Command::Scan { .. } | Command::Selftest);
    let cache = match (&cli.cache_dir, cacheable) {
        (Some(dir), true) => Some(ResultCache::open(dir)?),
        _ => None,
    };
    let key = ResultCache::key(&json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input": input_doc,
        "parameters": parameters,
        "caps": ctx.caps,
    }));
    let cached: Option<Outcome> = cache.as_ref().and_then(|c| c.get(&key));
    let outcome = match cached {
        Some(o) => o,
        None => {
            let o = match &cli.command {
                Command::Betti { .. } => commands::betti(input.ideal(), s, &ctx)?,
                Command::Power { .. } => commands::power(input.ideal(), s, &ctx)?,
                Command::CheckLinear { .. } => commands::check_linear(input.ideal(), s, &ctx)?,
                Command::CheckCwl { .. } => commands::check_cwl(input.ideal(), s, &ctx)?,
                Command::CheckGcd { .. } => commands::check_gcd(input.ideal(), &ctx)?,
                Command::CheckStrongGcd { .. } => commands::check_strong_gcd(input.ideal(), &ctx)?,
                Command::CheckLinquot { .. } => commands::check_linquot(input.ideal(), s, &ctx)?,
                Command::GolodCert { .. } => {
                    let lo = cli.s.unwrap_or(1);
                    commands::golod_cert(input.ideal(), lo..=s_max, &ctx)?
                }
                Command::VerifyThm34 { .. } => commands::verify_thm34(input.clutter(), s, &ctx)?,
                Command::VerifyCor35 { .. } => commands::verify_cor35(input.clutter(), s, &ctx)?,
                Command::Scan { problem, budget } => commands::scan(*problem, *budget, cli.seed, s_max, &ctx),
                Command::Lattice { .. } => commands::lattice(input.ideal(), &ctx)?,
                Command::Selftest => commands::selftest(&ctx),
            };
            if let Some(c) = &cache {
                c.put(&key, &o)?;
            }
            o
        }
    };
    match cli.format {
        Format::Text => {
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", outcome.text);
        }
        Format::Structured => {
            let doc = Document {
                tool: "monores",
                version: env!("CARGO_PKG_VERSION"),
                command,
                input: &input_doc,
                parameters: &parameters,
                caps: &ctx.caps,
                warnings: &warnings,
                falsified: outcome.falsified,
                result: &outcome.result,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("documents serialise"));
        }
    }
    Ok(outcome.falsified)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
