use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use annulus_cli::gen::{generate, Dist};
use annulus_cli::{
    bench, config_from_env, instance, report, solve, svg, verify, ShapeArg, VERIFY_MAX_N,
};

#[derive(Parser)]
#[command(
    name = "annulus",
    version,
    about = "Minimum-width color-spanning annuli"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance file.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        shape: ShapeArg,
        /// Cross-check against the brute-force oracle (n <= 25); exit 2 on mismatch.
        #[arg(long)]
        verify: bool,
        /// Write an SVG rendering here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print a seeded random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "uniform")]
        dist: Dist,
        /// Write to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the solvers on uniform instances and fit a log-log slope.
    Bench {
        #[arg(long, value_enum, default_value = "square")]
        shape: ShapeArg,
        #[arg(long, value_delimiter = ',', default_values_t = vec![100, 200, 400, 800])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        k: u32,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Solve {
            input,
            shape,
            verify: check,
            svg: svg_path,
            threads,
        } => {
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let ps =
                instance::parse(&text).with_context(|| format!("parsing {}", input.display()))?;
            let cfg = config_from_env(threads)?;
            let mut sols = Vec::new();
            let mut failed = false;
            for s in shape.expand() {
                let sol = solve(s, &ps, &cfg);
                print!("{}", report(s, &sol));
                if check {
                    if ps.len() > VERIFY_MAX_N {
                        println!("  verify skipped (n = {} > {VERIFY_MAX_N})", ps.len());
                    } else if let Err(m) = verify(s, &ps, &sol, &cfg) {
                        eprintln!(
                            "verify failed for {}: solver {} oracle {}",
                            s.name(),
                            m.solver,
                            m.oracle
                        );
                        eprint!("{}", instance::serialize(&ps));
                        failed = true;
                    } else {
                        println!("  verify ok");
                    }
                }
                sols.push(sol);
            }
            if let Some(path) = svg_path {
                std::fs::write(&path, svg::render(&ps, &sols))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Gen {
            n,
            k,
            seed,
            dist,
            output,
        } => {
            let text = instance::serialize(&generate(n, k, seed, dist)?);
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench {
            shape,
            sizes,
            k,
            reps,
            seed,
        } => {
            anyhow::ensure!(reps > 0, "reps must be positive");
            for s in shape.expand() {
                let rows = bench::run(s, &sizes, k, reps, seed)?;
                print!("{}", bench::csv(&rows));
                if let Some(slope) = bench::loglog_slope(&rows) {
                    println!("# slope {} {slope:.3}", s.name());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
