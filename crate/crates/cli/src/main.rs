use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use ncsphere::config::{RunOptions, SuiteConfig, SuiteName};
use ncsphere::{cache, run_suite};

/// Run a verification suite and report per-case verdicts.
#[derive(Parser, Debug)]
#[command(name = "ncsphere", version)]
struct Cli {
    suite: SuiteName,
    /// Dimension N.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Degree bound D for ideal spans.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// Level cap K for filtered groups.
    #[arg(long, default_value_t = 6)]
    cap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random matrices per sampled case.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Write the JSON report here; `-` prints JSON instead of text.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    /// Include exploratory levels (ignored by `all`).
    #[arg(long)]
    explore: bool,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ERROR: u8 = 3;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let config = SuiteConfig {
        n: cli.n,
        degree: cli.degree,
        cap: cli.cap,
        samples: cli.samples,
        seed: cli.seed,
        explore: cli.explore,
    };
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE);
    }
    let options = RunOptions {
        cache_dir: (!cli.no_cache).then(cache::default_dir),
        jobs: cli.jobs,
    };
    let report = match run_suite(cli.suite, &config, &options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match cli.out.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            print!("{}", report.to_text());
            if let Err(e) = std::fs::write(p, report.to_json()) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(EXIT_ERROR);
            }
        }
        None => print!("{}", report.to_text()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
