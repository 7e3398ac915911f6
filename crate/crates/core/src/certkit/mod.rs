//! Certificates on disk: format, pipeline, batch sweep and the independent
//! verifier. The command-line front end is a thin layer over this module.

pub mod format;
pub mod sweep;
pub mod verify;

use serde::Serialize;

pub use format::{AnalysisCertificate, FormatError, SCHEMA_VERSION};
pub use sweep::{analyze, analyze_at, slug, summary_jsonl, summary_text, sweep, AnalyzeError, SummaryRow};
pub use verify::{verify, verify_text, VerifyFault, VerifyReport};

use crate::error::Result;
use crate::pairs::{catalog, CatalogEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct CatalogListing {
    max_rank: usize,
    count: usize,
    pairs: Vec<CatalogEntry>,
}

/// Catalog listing as an aligned table or a JSON document.
pub fn catalog_listing(max_rank: usize, format: OutputFormat) -> Result<String> {
    let entries: Vec<CatalogEntry> = catalog(max_rank)?.iter().map(|p| p.entry()).collect();
    Ok(match format {
        OutputFormat::Json => {
            let listing = CatalogListing { max_rank, count: entries.len(), pairs: entries };
            serde_json::to_string_pretty(&listing).expect("listing serializes") + "\n"
        }
        OutputFormat::Text => {
            let mut rows = vec![["pair", "family", "rank", "dim g", "dim k", "k", "node"].map(String::from).to_vec()];
            for e in &entries {
                rows.push(vec![
                    e.name.clone(),
                    e.family.clone(),
                    e.rank.to_string(),
                    e.dim_g.to_string(),
                    e.dim_k.to_string(),
                    e.k.clone(),
                    e.painted_node.to_string(),
                ]);
            }
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for r in &rows {
                let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
            out.push_str(&format!("{} pairs with rank ≤ {max_rank}\n", entries.len()));
            out
        }
    })
}
