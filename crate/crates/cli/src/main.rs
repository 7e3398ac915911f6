//! `balcert`: list the catalog, analyze a pair, verify a certificate file,
//! sweep the catalog.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! invariant breach.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use balanced_lie::certkit::{self, sweep::write_atomic, OutputFormat};
use balanced_lie::pairs::InnerPair;
use balanced_lie::par::Execution;
use balanced_lie::Error;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "balcert", version, about = "Balanced metrics and certificates for inner symmetric pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog pairs up to a rank bound
    Catalog {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full pipeline on one pair and write its certificate
    Analyze {
        /// pair name, e.g. "su(3,2)", "g2(2)", "e8(-24)"
        pair: String,
        /// output file, or an existing directory (default: ./<pair>.json)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-verify a certificate file from its raw data
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Analyze every catalog pair up to a rank bound
    Sweep {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value = "certificates")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// run pairs one after another instead of on the thread pool
        #[arg(long)]
        sequential: bool,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("balcert: {msg}");
    ExitCode::from(code)
}

fn catalog(max_rank: usize, format: Format) -> ExitCode {
    match certkit::catalog_listing(max_rank, format.into()) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_INTERNAL, e),
    }
}

fn analyze(name: &str, out: Option<&Path>, format: Format) -> ExitCode {
    let pair = match InnerPair::from_name(name) {
        Ok(p) => p,
        Err(e @ Error::UnknownPair(_)) => return fail(EXIT_USAGE, e),
        Err(e) => return fail(EXIT_INTERNAL, e),
    };
    let cert = match certkit::analyze(&pair) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_INTERNAL, format!("{}: {e}", pair.name())),
    };
    let file_name = format!("{}.json", certkit::slug(&pair.name()));
    let path = match out {
        Some(p) if p.is_dir() => p.join(file_name),
        Some(p) => p.to_path_buf(),
        None => PathBuf::from(file_name),
    };
    if let Err(e) = write_atomic(&path, cert.to_json().as_bytes()) {
        return fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()));
    }
    let all = cert.balanced_verdict && cert.pluriclosed_verdict && cert.chern_verdict;
    match format {
        Format::Text => println!(
            "{}: mode {}, balanced {}, pluriclosed obstructed {}, chern flat {} -> {}",
            cert.pair.name,
            serde_json::to_value(cert.ordering.mode).expect("mode serializes").as_str().unwrap_or("?"),
            cert.balanced_verdict,
            cert.pluriclosed_verdict,
            cert.chern_verdict,
            path.display()
        ),
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "pair": cert.pair.name,
                "mode": cert.ordering.mode,
                "balanced": cert.balanced_verdict,
                "pluriclosed": cert.pluriclosed_verdict,
                "chern": cert.chern_verdict,
                "file": path.display().to_string(),
            })
        ),
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn verify(path: &Path, format: Format) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_USAGE, format!("cannot read {}: {e}", path.display())),
    };
    let result = certkit::verify_text(&text);
    match format {
        Format::Text => match &result {
            Ok(r) => println!("ok {} ({} positive roots)", r.pair, r.positive_roots),
            Err(f) => println!("FAIL {f}"),
        },
        Format::Json => {
            let v = match &result {
                Ok(r) => serde_json::json!({ "ok": true, "pair": r.pair }),
                Err(f) => serde_json::json!({ "ok": false, "reason": f.code, "detail": f.detail }),
            };
            println!("{v}");
        }
    }
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(_) => ExitCode::from(EXIT_VERIFY),
    }
}

fn sweep(max_rank: usize, out: &Path, format: Format, sequential: bool) -> ExitCode {
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let rows = match certkit::sweep(max_rank, Some(out), exec) {
        Ok(rows) => rows,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let json = matches!(format, Format::Json);
    let summary = if json { certkit::summary_jsonl(&rows) } else { certkit::summary_text(&rows) };
    let summary_path = certkit::sweep::summary_path(out, json);
    if let Err(e) = write_atomic(&summary_path, summary.as_bytes()) {
        return fail(EXIT_USAGE, format!("cannot write {}: {e}", summary_path.display()));
    }
    print!("{summary}");
    if rows.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog { max_rank, format } => catalog(max_rank, format),
        Command::Analyze { pair, out, format } => analyze(&pair, out.as_deref(), format),
        Command::Verify { path, format } => verify(&path, format),
        Command::Sweep { max_rank, out, format, sequential } => sweep(max_rank, &out, format, sequential),
    }
}
