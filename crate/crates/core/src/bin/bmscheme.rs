//! Command-line front end.
//!
//! Exit codes: 0 success, 1 discrepancy between detection routes, 2 input
//! error, 3 precondition failure (class 1, repeated dual eigenvalues for a
//! selected `e`). With several inputs the most severe applies, in the order
//! 2, 3, 1.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bmscheme::report::{analyze, AnalysisOptions, Selection};
use bmscheme::spectral::{DEFAULT_SEED, DEFAULT_TOL};
use bmscheme::{catalog, io, Error};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bmscheme", version, about = "Spectral analysis of symmetric association schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse scheme files and/or catalog schemes
    Analyze(AnalyzeArgs),
    /// Write a catalog scheme to a file
    Dump { name: String, path: PathBuf },
    /// List the reference catalog names
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Scheme files
    paths: Vec<PathBuf>,
    /// Catalog scheme, e.g. `petersen`, `hamming:3,2`; repeatable
    #[arg(long)]
    catalog: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    seed: u64,
    /// Distinguished index, or `all`
    #[arg(long, default_value = "all", value_parser = parse_selection)]
    e: Selection,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 6)]
    digits: u32,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    if s == "all" {
        return Ok(Selection::All);
    }
    s.parse().map(Selection::One).map_err(|_| format!("expected an index or `all`, got `{s}`"))
}

enum Input {
    File(PathBuf),
    Catalog(String),
}

fn classify(err: &Error) -> u8 {
    match err {
        Error::ClassTooSmall(_) | Error::NotDistinct(..) => 3,
        _ => 2,
    }
}

fn run_one(input: &Input, options: &AnalysisOptions, format: Format) -> (u8, String) {
    let loaded = match input {
        Input::File(path) => io::load_scheme(path)
            .map(|s| (s.name.unwrap_or_else(|| path.display().to_string()), s.table))
            .map_err(|e| (format!("{}: {e}", path.display()), e)),
        Input::Catalog(name) => catalog::by_name(name)
            .map(|c| (c.name, c.table))
            .map_err(|e| (format!("{name}: {e}"), e)),
    };
    let (name, table) = match loaded {
        Ok(v) => v,
        Err((msg, e)) => return (classify(&e), msg),
    };
    match analyze(&name, &table, options) {
        Ok(report) => {
            let text = match format {
                Format::Text => report.to_text(),
                Format::Machine => report.to_machine(),
            };
            (report.exit_code() as u8, text)
        }
        Err(e) => {
            let hint = if matches!(e, Error::ClassTooSmall(_)) { " (class d >= 2 required)" } else { "" };
            (classify(&e), format!("{name}: {e}{hint}"))
        }
    }
}

fn severity(code: u8) -> u8 {
    match code {
        2 => 3,
        3 => 2,
        1 => 1,
        _ => 0,
    }
}

fn analyze_command(args: AnalyzeArgs) -> u8 {
    let options = AnalysisOptions {
        tol: args.tol,
        seed: args.seed,
        e: args.e,
        digits: args.digits,
        ..Default::default()
    };
    let inputs: Vec<Input> = args
        .paths
        .into_iter()
        .map(Input::File)
        .chain(args.catalog.into_iter().map(Input::Catalog))
        .collect();
    if inputs.is_empty() {
        eprintln!("nothing to analyze: pass scheme files or --catalog NAME");
        return 2;
    }
    let results: Vec<(u8, String)> = std::thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|input| scope.spawn(|| run_one(input, &options, args.format)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("analysis thread panicked")).collect()
    });

    let stdout = std::io::stdout();
    let mut worst = 0u8;
    for (code, text) in results {
        if code == 0 || code == 1 {
            let mut lock = stdout.lock();
            let _ = lock.write_all(text.as_bytes());
            let _ = lock.flush();
        } else {
            eprintln!("error: {text}");
        }
        if severity(code) > severity(worst) {
            worst = code;
        }
    }
    worst
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(args) => analyze_command(args),
        Command::Dump { name, path } => match io::dump_catalog(&name, &path) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::List => {
            for name in catalog::reference_names() {
                println!("{name}");
            }
            0
        }
    };
    ExitCode::from(code)
}
