use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use adler19_cli::{
    emit_human, emit_json, parse_config, parse_lambda_list, parse_prime_list, run, RunOptions,
    Suite,
};

/// Exact verification suites for the group-invariant cubic sevenfold:
/// cyclotomic arithmetic, the certified 9-dimensional representation,
/// character decompositions, Jacobian-ring dimensions, and the
/// period-lattice tower with its principal polarization.
#[derive(Parser, Debug)]
#[command(name = "adler19", version)]
struct Cli {
    /// Suite to run: arithmetic, group, characters, jacobian, lattice,
    /// pencil, or all.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Comma-separated pencil parameters, each an integer or n/d.
    #[arg(long)]
    lambda: Option<String>,

    /// Comma-separated primes for the smoothness certificates.
    #[arg(long)]
    prime: Option<String>,

    /// Run the heavy checks (degree-10 smoothness, tensor projector,
    /// unitarity sweep) instead of skipping them.
    #[arg(long)]
    heavy: bool,

    /// Output format: human or json.
    #[arg(long, default_value = "human")]
    format: String,

    /// Write the report to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Optional configuration file with `key = value` lines for the same
    /// options (suite, lambda, prime, heavy, format, out).
    #[arg(long)]
    config: Option<PathBuf>,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    if let Some(path) = cli.config.clone() {
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return fail(format!("{}: {e}", path.display())),
        };
        match parse_config(&text) {
            Ok(raw) => {
                if let Some(s) = raw.suite {
                    cli.suite = s;
                }
                cli.lambda = raw.lambda.or(cli.lambda);
                cli.prime = raw.prime.or(cli.prime);
                if let Some(h) = raw.heavy {
                    cli.heavy = h;
                }
                if let Some(f) = raw.format {
                    cli.format = f;
                }
                cli.out = raw.out.map(PathBuf::from).or(cli.out);
            }
            Err(e) => return fail(e),
        }
    }
    let Some(suite) = Suite::parse(&cli.suite) else {
        return fail(format!(
            "unknown suite `{}` (choose arithmetic, group, characters, jacobian, lattice, pencil, all)",
            cli.suite
        ));
    };
    let defaults = RunOptions::default();
    let lambdas = match cli.lambda.as_deref().map(parse_lambda_list) {
        Some(Ok(v)) => v,
        Some(Err(e)) => return fail(e),
        None => defaults.lambdas,
    };
    let primes = match cli.prime.as_deref().map(parse_prime_list) {
        Some(Ok(v)) => v,
        Some(Err(e)) => return fail(e),
        None => defaults.primes,
    };
    let options = RunOptions { suite, lambdas, primes, heavy: cli.heavy };
    let report = run(&options);
    let rendered = match cli.format.as_str() {
        "human" => emit_human(&report),
        "json" => emit_json(&report),
        other => return fail(format!("unknown format `{other}` (choose human or json)")),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, rendered) {
                return fail(format!("writing {}: {e}", path.display()));
            }
        }
        None => print!("{rendered}"),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
