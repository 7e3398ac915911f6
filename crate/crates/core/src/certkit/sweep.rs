//! The analysis pipeline and batch runs over the catalog.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use num_traits::Zero;
use serde::Serialize;

use super::format::{
    AnalysisCertificate, MetricEntry, OrderingRecord, PairRecord, Provenance, SCHEMA_VERSION,
};
use crate::balanced::solve_for;
use crate::chern::chern_report;
use crate::error::Error;
use crate::ordering::{find_admissible_ordering, OrderingMode};
use crate::pairs::{catalog, InnerPair};
use crate::par::{self, Execution};
use crate::pluriclosed::{build_certificate, verify_certificate};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// A pipeline failure, tagged with the stage that raised it.
#[derive(Debug)]
pub struct AnalyzeError {
    pub stage: &'static str,
    pub error: Error,
}

impl fmt::Display for AnalyzeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.error)
    }
}

impl std::error::Error for AnalyzeError {}

fn at(stage: &'static str) -> impl Fn(Error) -> AnalyzeError {
    move |error| AnalyzeError { stage, error }
}

pub fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

pub fn analyze(pair: &InnerPair) -> Result<AnalysisCertificate, AnalyzeError> {
    analyze_at(pair, now_unix())
}

/// Full pipeline with a fixed timestamp; byte-identical output for equal
/// inputs.
pub fn analyze_at(pair: &InnerPair, timestamp: u64) -> Result<AnalysisCertificate, AnalyzeError> {
    let ordering = find_admissible_ordering(pair).map_err(at("ordering"))?;
    let balanced = solve_for(&ordering, pair).map_err(at("balanced"))?;
    let pluri = build_certificate(&ordering, pair).map_err(at("pluriclosed"))?;
    verify_certificate(&pluri, pair).map_err(|f| AnalyzeError {
        stage: "pluriclosed",
        error: Error::Invariant(format!("built certificate rejected: {f}")),
    })?;
    let pi = ordering.simple_system();
    let report = chern_report(balanced.metric(), pi, pair).map_err(at("chern"))?;
    let chern_ok = report.scalar_curvature.is_zero() && report.delta_nonzero;

    let entry = pair.entry();
    Ok(AnalysisCertificate {
        schema_version: SCHEMA_VERSION,
        pair: PairRecord {
            name: entry.name,
            family: entry.family,
            rank: entry.rank,
            painted_node: entry.painted_node,
            dim_g: entry.dim_g,
            dim_k: entry.dim_k,
        },
        ordering: OrderingRecord {
            mode: ordering.mode(),
            simple_roots: pi.simples().to_vec(),
        },
        metric: balanced
            .metric()
            .iter()
            .map(|(root, g)| MetricEntry { root: root.clone(), g: g.clone() })
            .collect(),
        balanced_verdict: true,
        pluriclosed_verdict: true,
        chern_verdict: chern_ok,
        pluriclosed_certificate: pluri,
        chern_report: report,
        provenance: Provenance {
            tool_version: TOOL_VERSION.into(),
            timestamp,
        },
    })
}

/// `e8(-24)` → `e8_m24`, `so(8)*` → `so_8_star`.
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        let piece = match c {
            '-' | '−' => "m".to_string(),
            '*' => {
                if !out.ends_with('_') {
                    out.push('_');
                }
                "star".to_string()
            }
            c if c.is_ascii_alphanumeric() => c.to_ascii_lowercase().to_string(),
            _ => "_".to_string(),
        };
        if piece == "_" && (out.is_empty() || out.ends_with('_')) {
            continue;
        }
        out.push_str(&piece);
    }
    out.trim_end_matches('_').to_string()
}

/// Write to a sibling temporary file, then rename over `path`.
pub fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let file_name = path
        .file_name()
        .ok_or_else(|| std::io::Error::new(std::io::ErrorKind::InvalidInput, "path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}.tmp", file_name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub pair: String,
    pub rank: usize,
    pub dim_g: usize,
    pub dim_k: usize,
    pub mode: Option<OrderingMode>,
    pub positive_roots: usize,
    pub balanced: bool,
    pub pluriclosed: bool,
    pub chern: bool,
    pub wall_ms: u64,
    pub file: Option<String>,
    pub error: Option<String>,
}

impl SummaryRow {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.balanced && self.pluriclosed && self.chern
    }
}

fn run_one(pair: &InnerPair, out_dir: Option<&Path>, timestamp: u64) -> SummaryRow {
    let start = Instant::now();
    let entry = pair.entry();
    let mut row = SummaryRow {
        pair: entry.name.clone(),
        rank: entry.rank,
        dim_g: entry.dim_g,
        dim_k: entry.dim_k,
        mode: None,
        positive_roots: pair.root_system().roots().len() / 2,
        balanced: false,
        pluriclosed: false,
        chern: false,
        wall_ms: 0,
        file: None,
        error: None,
    };
    match analyze_at(pair, timestamp) {
        Ok(cert) => {
            row.mode = Some(cert.ordering.mode);
            row.balanced = cert.balanced_verdict;
            row.pluriclosed = cert.pluriclosed_verdict;
            row.chern = cert.chern_verdict;
            if let Some(dir) = out_dir {
                let path = dir.join(format!("{}.json", slug(&entry.name)));
                match write_atomic(&path, cert.to_json().as_bytes()) {
                    Ok(()) => row.file = Some(path.display().to_string()),
                    Err(e) => row.error = Some(format!("write {}: {e}", path.display())),
                }
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row.wall_ms = start.elapsed().as_millis() as u64;
    row
}

/// Analyse every catalog pair of rank at most `max_rank`; certificates go to
/// `out_dir` when given. Rows are in catalog order regardless of `exec`.
pub fn sweep(max_rank: usize, out_dir: Option<&Path>, exec: Execution) -> Result<Vec<SummaryRow>, AnalyzeError> {
    let pairs = catalog(max_rank).map_err(at("pairs"))?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| AnalyzeError {
            stage: "io",
            error: Error::Parameter(format!("cannot create {}: {e}", dir.display())),
        })?;
    }
    let timestamp = now_unix();
    Ok(par::map(exec, &pairs, |p| run_one(p, out_dir, timestamp)))
}

pub fn summary_text(rows: &[SummaryRow]) -> String {
    let header = ["pair", "rank", "dim g", "dim k", "mode", "|R+|", "balanced", "pluriclosed", "chern", "ms", "status"];
    let mode = |m: &Option<OrderingMode>| match m {
        Some(OrderingMode::LemmaL1) => "lemma_l1",
        Some(OrderingMode::So12nSpecial) => "so_1_2n_special",
        None => "-",
    };
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut table: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in rows {
        table.push(vec![
            r.pair.clone(),
            r.rank.to_string(),
            r.dim_g.to_string(),
            r.dim_k.to_string(),
            mode(&r.mode).into(),
            r.positive_roots.to_string(),
            yes(r.balanced).into(),
            yes(r.pluriclosed).into(),
            yes(r.chern).into(),
            r.wall_ms.to_string(),
            r.error.clone().unwrap_or_else(|| "ok".into()),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|i| table.iter().map(|row| row[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    let failed = rows.iter().filter(|r| !r.ok()).count();
    out.push_str(&format!("{} pairs, {} failed\n", rows.len(), failed));
    out
}

pub fn summary_jsonl(rows: &[SummaryRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("summary row serializes") + "\n")
        .collect()
}

pub fn summary_path(out_dir: &Path, json: bool) -> PathBuf {
    out_dir.join(if json { "summary.jsonl" } else { "summary.txt" })
}
