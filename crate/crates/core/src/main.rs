use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uhg::census::census;
use uhg::render::{render, Viewport};
use uhg::script::{evaluate, parse, Program};
use uhg::theorems::{registry, run_check};
use uhg::FieldCtx;

#[derive(Parser)]
#[command(name = "uhg", version, about = "Exact universal hyperbolic geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check theorems on random exact configurations.
    Check {
        /// Theorem id, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `rational` or `fp:P` for an odd prime P.
        #[arg(long, default_value = "rational", value_parser = field)]
        field: FieldCtx,
    },
    /// Evaluate a construction script.
    Eval { file: PathBuf },
    /// Evaluate a construction script and draw it as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Center and half-width in null-circle radii: `cx,cy,hw`.
        #[arg(long, default_value = "0,0,2.5", allow_hyphen_values = true)]
        viewport: Viewport,
    },
    /// Count points, null points and circles over F_P.
    Census {
        #[arg(long, value_parser = field)]
        field: FieldCtx,
        #[arg(long)]
        circles: bool,
    },
}

fn field(s: &str) -> Result<FieldCtx, String> {
    s.parse::<FieldCtx>().map_err(|e| e.to_string())
}

const USAGE: u8 = 2;

fn load(path: &Path) -> Result<Program, ExitCode> {
    let src = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        ExitCode::from(USAGE)
    })?;
    parse(&src).map_err(|diags| {
        for d in diags {
            eprintln!("{}:{d}", path.display());
        }
        ExitCode::from(USAGE)
    })
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Check { theorem, trials, seed, field } => {
            let ids: Vec<&str> = if theorem == "all" {
                registry().iter().map(|t| t.id).collect()
            } else {
                vec![theorem.as_str()]
            };
            let mut ok = true;
            for id in ids {
                let report = run_check(id, trials, seed, field).map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(USAGE)
                })?;
                ok &= report.ok();
                print!("{report}");
            }
            Ok(status(ok))
        }
        Command::Eval { file } => {
            let ev = evaluate(&load(&file)?);
            print!("{ev}");
            Ok(status(ev.ok()))
        }
        Command::Render { file, output, viewport } => {
            let program = load(&file)?;
            let ev = evaluate(&program);
            let svg = render(&program, &ev, viewport).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(USAGE)
            })?;
            std::fs::write(&output, svg).map_err(|e| {
                eprintln!("{}: {e}", output.display());
                ExitCode::FAILURE
            })?;
            if !ev.ok() {
                eprint!("{ev}");
            }
            Ok(status(ev.ok()))
        }
        Command::Census { field, circles } => {
            if field.is_rational() {
                eprintln!("error: census needs a finite field fp:P");
                return Err(ExitCode::from(USAGE));
            }
            let c = census(field, circles).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            })?;
            print!("{c}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
