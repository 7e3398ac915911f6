//! End-to-end verification of an [`AnalysisCertificate`].
//!
//! Only the root system, the pair grading and the [`crate::check`]
//! recomputations are used; stored verdicts are compared against recomputed
//! ones, never believed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::format::{AnalysisCertificate, FormatError};
use crate::check;
use crate::ordering::OrderingMode;
use crate::pairs::InnerPair;
use crate::pluriclosed::{self, Branch};
use crate::rootsys::{RootSystem, SimpleSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFault {
    pub code: &'static str,
    pub detail: String,
}

impl VerifyFault {
    fn new(code: &'static str, detail: impl Into<String>) -> Self {
        Self { code, detail: detail.into() }
    }
}

impl fmt::Display for VerifyFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() || self.detail == self.code {
            f.write_str(self.code)
        } else {
            write!(f, "{}: {}", self.code, self.detail)
        }
    }
}

impl From<FormatError> for VerifyFault {
    fn from(e: FormatError) -> Self {
        let detail = match &e {
            FormatError::Parse(d) | FormatError::Schema(d) => d.clone(),
        };
        Self::new(e.code(), detail)
    }
}

/// What a successful verification established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub pair: String,
    pub positive_roots: usize,
}

/// Noncompact simple roots pair up under addition.
fn paired(rs: &RootSystem, pi: &SimpleSystem, pair: &InnerPair) -> bool {
    let nc: Vec<_> = pi
        .simples()
        .iter()
        .filter(|s| matches!(pair.is_compact(s), Ok(false)))
        .collect();
    nc.iter().all(|a| nc.iter().any(|b| rs.is_root(&(*a + *b))))
}

pub fn verify_text(text: &str) -> Result<VerifyReport, VerifyFault> {
    let cert = AnalysisCertificate::from_json(text)?;
    verify(&cert)
}

pub fn verify(cert: &AnalysisCertificate) -> Result<VerifyReport, VerifyFault> {
    let pair = InnerPair::from_name(&cert.pair.name).map_err(|e| VerifyFault::new("unknown pair", e.to_string()))?;
    let rs = pair.root_system();

    let p = &cert.pair;
    let expected = (
        pair.name(),
        rs.family().to_string(),
        pair.rank(),
        pair.painted_node(),
        pair.expected_dim_g(),
        pair.expected_dim_k(),
    );
    let stored = (p.name.clone(), p.family.clone(), p.rank, p.painted_node, p.dim_g, p.dim_k);
    if expected != stored {
        return Err(VerifyFault::new(
            "pair mismatch",
            format!("stored {stored:?}, recomputed {expected:?}"),
        ));
    }

    let simple_roots = &cert.ordering.simple_roots;
    let pi = check::ordering_from_roots(rs, simple_roots).map_err(|e| VerifyFault::new("invalid ordering", e))?;
    let mode_ok = match cert.ordering.mode {
        OrderingMode::So12nSpecial => pair.kind().is_so_1_2n() && &pi == rs.base(),
        OrderingMode::LemmaL1 => !pair.kind().is_so_1_2n() && paired(rs, &pi, &pair),
    };
    if !mode_ok {
        return Err(VerifyFault::new(
            "mode mismatch",
            format!("ordering does not satisfy mode {:?}", cert.ordering.mode),
        ));
    }

    let mut metric = BTreeMap::new();
    for e in &cert.metric {
        if metric.insert(e.root.clone(), e.g.clone()).is_some() {
            return Err(VerifyFault::new("metric domain mismatch", format!("duplicate root {}", e.root)));
        }
    }
    check::check_metric(&pair, simple_roots, &metric).map_err(|f| VerifyFault::new(f.code(), f.to_string()))?;

    let pc = &cert.pluriclosed_certificate;
    if &pc.simple_roots != simple_roots {
        return Err(VerifyFault::new("invalid ordering", "pluriclosed certificate uses another ordering"));
    }
    let branch_ok = match pc.branch {
        Branch::So12n => pair.kind().is_so_1_2n(),
        Branch::Generic => !pair.kind().is_so_1_2n(),
    };
    if !branch_ok {
        return Err(VerifyFault::new("mode mismatch", format!("branch {:?} for {}", pc.branch, pair.name())));
    }
    pluriclosed::verify_certificate(pc, &pair).map_err(|f| VerifyFault::new(f.code(), f.to_string()))?;

    let delta = check::positive_root_sum(rs, simple_roots).map_err(|e| VerifyFault::new("invalid ordering", e))?;
    let imbalance =
        check::imbalance_vector(&pair, &metric).map_err(|r| VerifyFault::new("metric domain mismatch", r.to_string()))?;
    let scalar = check::chern_scalar_from(&imbalance, &delta);
    let report = &cert.chern_report;
    let delta_nonzero = !delta.is_zero();
    if report.delta != delta
        || report.scalar_curvature != scalar
        || report.delta_nonzero != delta_nonzero
        || report.kodaira_flag != delta_nonzero
    {
        return Err(VerifyFault::new("chern report mismatch", "stored report differs from recomputation"));
    }
    if !scalar.is_zero() {
        return Err(VerifyFault::new("chern scalar nonzero", scalar.to_string()));
    }
    if !delta_nonzero {
        return Err(VerifyFault::new("delta vanishes", ""));
    }

    // Every check above passed, so all recomputed verdicts are true.
    if !(cert.balanced_verdict && cert.pluriclosed_verdict && cert.chern_verdict) {
        return Err(VerifyFault::new("verdict mismatch", "a stored verdict is false"));
    }
    Ok(VerifyReport {
        pair: pair.name(),
        positive_roots: metric.len(),
    })
}
