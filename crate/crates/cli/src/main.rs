use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use qhankel_cli::cache::ResultCache;
use qhankel_cli::compute::{cmd_compute, cmd_matrix, cmd_partitions, cmd_triangle_rows, ComputeRoute, MatrixKind};
use qhankel_cli::oeis;
use qhankel_cli::suites::{self, Suite, SuiteParams};
use qhankel_cli::{CliError, Format, OeisMode, Object, RunConfig, VerifyReport};
use qhankel_core::hankel::{CofactorOracle, DEFAULT_ORACLE_BOUND};

/// Hankel determinants of q-exponential polynomials: compute objects and
/// verify the identities between them.
#[derive(Debug, Parser)]
#[command(name = "qhankel", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON result cache for determinant routes (overrides $QHANKEL_CACHE).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Sweep n from --n through this value.
    #[arg(long, allow_negative_numbers = true)]
    to: Option<i64>,
    /// Evaluate at this integer instead of printing the polynomial.
    #[arg(long = "q", allow_negative_numbers = true)]
    q0: Option<i64>,
    #[arg(long, value_enum)]
    route: Option<ComputeRoute>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// r_{m,n}(q) = d_{m,n} / d_{m-1,n}-style ratio of Hankel determinants.
    R(ComputeArgs),
    /// u(n, q), the coefficients of 1/f(x).
    U(ComputeArgs),
    /// d_{m,n} = det(q^C(m+i+j, 2)).
    D(ComputeArgs),
    /// det V_{k,n}.
    V {
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        args: ComputeArgs,
    },
    /// q-Pascal entry <n k>, or the first --rows rows.
    Triangle {
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, conflicts_with_all = ["n", "k"])]
        rows: Option<usize>,
    },
    /// Print a Hankel matrix.
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Partitions of n with first part k and their weights.
    Partitions {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
    },
    /// Run a verification suite.
    Verify {
        /// eq4, thm1, thm2, thm3, condensation, andrews-wimp, appendix, conjecture or all.
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        /// Largest matrix the cofactor oracle will expand.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
    /// Check r_{1,n}(2) against OEIS A114604.
    Oeis {
        /// Fetch the b-file over HTTP instead of using embedded constants.
        #[arg(long)]
        online: bool,
        /// Base URL for --online (overrides $QHANKEL_OEIS_URL).
        #[arg(long, requires = "online")]
        base_url: Option<String>,
        /// Read the b-file from disk.
        #[arg(long, conflicts_with = "online")]
        bfile: Option<PathBuf>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn base_config(cli: &Cli) -> RunConfig {
    RunConfig {
        format: cli.format,
        cache_path: ResultCache::resolve(cli.cache.as_deref()),
        ..RunConfig::default()
    }
}

fn with_args(mut cfg: RunConfig, a: &ComputeArgs) -> RunConfig {
    cfg.m = a.m;
    cfg.n = a.n;
    cfg.q0 = a.q0;
    cfg
}

enum Outcome {
    Output(String),
    Report(VerifyReport),
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = base_config(cli);
    let out = match &cli.command {
        Command::R(a) => cmd_compute(Object::R, a.route, a.to, &with_args(cfg, a))?,
        Command::U(a) => cmd_compute(Object::U, a.route, a.to, &with_args(cfg, a))?,
        Command::D(a) => cmd_compute(Object::D, a.route, a.to, &with_args(cfg, a))?,
        Command::V { k, args } => {
            let mut cfg = with_args(cfg, args);
            cfg.k = Some(*k);
            cmd_compute(Object::V, args.route, args.to, &cfg)?
        }
        Command::Triangle { n, k, rows } => match rows {
            Some(rows) => cmd_triangle_rows(*rows, &cfg),
            None => {
                let cfg = RunConfig { n: *n, k: *k, ..cfg };
                cmd_compute(Object::Triangle, None, None, &cfg)?
            }
        },
        Command::Matrix { kind, m, n, k } => {
            let cfg = RunConfig {
                m: *m,
                n: Some(*n),
                k: *k,
                ..cfg
            };
            cmd_matrix(*kind, &cfg)?
        }
        Command::Partitions { n, k } => cmd_partitions(&RunConfig {
            n: Some(*n),
            k: Some(*k),
            ..cfg
        })?,
        Command::Verify {
            suite,
            max_n,
            max_m,
            oracle_bound,
        } => {
            let cfg = RunConfig {
                max_n: *max_n,
                max_m: *max_m,
                oracle_bound: *oracle_bound,
                ..cfg
            };
            cfg.validate()?;
            let suite: Suite = suite.parse()?;
            let params = SuiteParams {
                max_n: cfg.max_n,
                max_m: cfg.max_m,
                oracle: CofactorOracle::new(cfg.oracle_bound),
            };
            return Ok(Outcome::Report(suites::run(suite, &params)));
        }
        Command::Oeis {
            online,
            base_url,
            bfile,
            max_n,
        } => {
            let mode = if *online { OeisMode::Online } else { OeisMode::Embedded };
            let report = match (mode, bfile) {
                (_, Some(path)) => oeis::check_bfile_path(path, *max_n)?,
                (OeisMode::Online, None) => {
                    oeis::check_online(&oeis::resolve_base_url(base_url.as_deref()), *max_n)?
                }
                (OeisMode::Embedded, None) => oeis::check_embedded(*max_n)?,
            };
            return Ok(Outcome::Report(report));
        }
    };
    Ok(Outcome::Output(out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = execute(&cli);
    let mut stdout = std::io::stdout().lock();
    let code = match result {
        Ok(Outcome::Output(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Ok(Outcome::Report(report)) => {
            let _ = stdout.write_all(report.render(cli.format).as_bytes());
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("qhankel: {e}");
            e.exit_code()
        }
    };
    let _ = stdout.flush();
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
