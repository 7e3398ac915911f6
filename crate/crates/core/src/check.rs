//! Independent re-verification of stored results.
//!
//! Everything here is recomputed from raw data (root coordinates, rational
//! coefficients) using only the root system and the compactness grading. No
//! solver, ordering search or certificate builder is consulted, so a stored
//! verdict is never trusted.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::pairs::InnerPair;
use crate::rational::{self, Rational};
use crate::rootsys::{RootSystem, RootVector, SimpleSystem};

/// Why a pluriclosed certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFault {
    InvalidOrdering(String),
    RootNotInSystem(RootVector),
    RelationMismatch { index: usize },
    EliminationFailed,
    ConclusionMismatch,
    SignPatternViolated(String),
}

impl CertificateFault {
    pub fn code(&self) -> &'static str {
        match self {
            CertificateFault::InvalidOrdering(_) => "invalid ordering",
            CertificateFault::RootNotInSystem(_) => "root not in system",
            CertificateFault::RelationMismatch { .. } => "relation mismatch",
            CertificateFault::EliminationFailed => "elimination failed",
            CertificateFault::ConclusionMismatch => "conclusion mismatch",
            CertificateFault::SignPatternViolated(_) => "sign pattern violated",
        }
    }
}

impl fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFault::InvalidOrdering(why) => write!(f, "{}: {why}", self.code()),
            CertificateFault::RootNotInSystem(r) => write!(f, "{}: {r}", self.code()),
            CertificateFault::RelationMismatch { index } => write!(f, "{} at relation {index}", self.code()),
            CertificateFault::SignPatternViolated(why) => write!(f, "{}: {why}", self.code()),
            _ => f.write_str(self.code()),
        }
    }
}

/// Why a metric was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricFault {
    InvalidOrdering(String),
    DomainMismatch,
    PositivityViolated(RootVector),
    BalancedIdentityFailed(RootVector),
}

impl MetricFault {
    pub fn code(&self) -> &'static str {
        match self {
            MetricFault::InvalidOrdering(_) => "invalid ordering",
            MetricFault::DomainMismatch => "metric domain mismatch",
            MetricFault::PositivityViolated(_) => "positivity violated",
            MetricFault::BalancedIdentityFailed(_) => "balanced identity failed",
        }
    }
}

impl fmt::Display for MetricFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricFault::InvalidOrdering(why) => write!(f, "{}: {why}", self.code()),
            MetricFault::DomainMismatch => f.write_str(self.code()),
            MetricFault::PositivityViolated(r) => write!(f, "{} at {r}", self.code()),
            MetricFault::BalancedIdentityFailed(v) => write!(f, "{}: imbalance {v}", self.code()),
        }
    }
}

/// The data of one pluriclosed relation as stored: left side `h(H_α,H_β)`,
/// right side a coefficient map over the `a`-variables of positive roots.
pub struct RelationData<'a> {
    pub alpha: &'a RootVector,
    pub beta: &'a RootVector,
    pub right: &'a BTreeMap<RootVector, Rational>,
}

/// A stored sign claim: `sign(a_root)` or `sign(h(H_root,H_root))`.
pub struct SignClaim<'a> {
    pub hdiag: bool,
    pub root: &'a RootVector,
    pub sign: i8,
}

pub struct CertificateData<'a> {
    pub simple_roots: &'a [RootVector],
    pub relations: Vec<RelationData<'a>>,
    pub combination: &'a [Rational],
    pub gamma: &'a RootVector,
    pub conclusion: &'a BTreeMap<RootVector, Rational>,
    pub signs: Vec<SignClaim<'a>>,
}

/// Builds the simple system named by `simple_roots`, checking membership and
/// the simple-system axioms.
pub fn ordering_from_roots(rs: &RootSystem, simple_roots: &[RootVector]) -> Result<SimpleSystem, String> {
    if let Some(r) = simple_roots.iter().find(|r| !rs.is_root(r)) {
        return Err(format!("{r} is not a root"));
    }
    SimpleSystem::new(rs, simple_roots.to_vec()).map_err(|e| e.to_string())
}

/// α-string through β: the exponents `p ≤ 0 ≤ q` with `β + nα ∈ R` for
/// `p ≤ n ≤ q`. Walked directly over root membership.
fn string_bounds(rs: &RootSystem, alpha: &RootVector, beta: &RootVector) -> (i64, i64) {
    let mut p = 0;
    while rs.is_root(&beta.add_scaled(&rational::int(p - 1), alpha)) {
        p -= 1;
    }
    let mut q = 0;
    while rs.is_root(&beta.add_scaled(&rational::int(q + 1), alpha)) {
        q += 1;
    }
    (p, q)
}

fn structure_square(rs: &RootSystem, alpha: &RootVector, beta: &RootVector) -> Rational {
    let (p, q) = string_bounds(rs, alpha, beta);
    rational::frac(q * (1 - p), 2) * alpha.norm_sq()
}

/// Right side of the pluriclosed equation for the positive pair `(α, β)`,
/// with `a_{−γ} = a_γ` folded in.
pub fn pluriclosed_right_side(
    rs: &RootSystem,
    pi: &SimpleSystem,
    alpha: &RootVector,
    beta: &RootVector,
) -> BTreeMap<RootVector, Rational> {
    let mut out: BTreeMap<RootVector, Rational> = BTreeMap::new();
    let mut add = |root: &RootVector, c: Rational| {
        *out.entry(root.clone()).or_insert_with(Rational::zero) += c;
    };
    let sum = alpha + beta;
    if rs.is_root(&sum) {
        let n2 = structure_square(rs, alpha, beta);
        add(&sum, n2.clone());
        add(alpha, -n2.clone());
        add(beta, -n2);
    }
    let diff = alpha - beta;
    if rs.is_root(&diff) {
        let n2 = structure_square(rs, alpha, &-beta);
        let positive = pi.is_positive(&diff).unwrap_or(false);
        let (rep, eps) = if positive { (diff, rational::int(1)) } else { (-&diff, rational::int(-1)) };
        add(&rep, n2.clone());
        add(beta, &eps * &n2);
        add(alpha, -(eps * n2));
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `(αβᵀ + βαᵀ)/2` as a dense matrix.
fn sym_tensor(alpha: &RootVector, beta: &RootVector) -> Vec<Vec<Rational>> {
    let a = alpha.coords();
    let b = beta.coords();
    let half = rational::frac(1, 2);
    (0..a.len())
        .map(|i| {
            (0..a.len())
                .map(|j| (&a[i] * &b[j] + &b[i] * &a[j]) * &half)
                .collect()
        })
        .collect()
}

pub fn check_pluriclosed(pair: &InnerPair, cert: &CertificateData<'_>) -> Result<(), CertificateFault> {
    let rs = pair.root_system();
    let pi = ordering_from_roots(rs, cert.simple_roots).map_err(CertificateFault::InvalidOrdering)?;

    let positive_root = |r: &RootVector| -> Result<(), CertificateFault> {
        if rs.is_root(r) && pi.is_positive(r).unwrap_or(false) {
            Ok(())
        } else {
            Err(CertificateFault::RootNotInSystem(r.clone()))
        }
    };
    for rel in &cert.relations {
        positive_root(rel.alpha)?;
        positive_root(rel.beta)?;
        for r in rel.right.keys() {
            positive_root(r)?;
        }
    }
    positive_root(cert.gamma)?;
    for r in cert.conclusion.keys() {
        positive_root(r)?;
    }
    for s in &cert.signs {
        positive_root(s.root)?;
    }

    for (index, rel) in cert.relations.iter().enumerate() {
        if rel.alpha == rel.beta {
            return Err(CertificateFault::RelationMismatch { index });
        }
        let expected = pluriclosed_right_side(rs, &pi, rel.alpha, rel.beta);
        let stored: BTreeMap<_, _> = rel
            .right
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (r.clone(), c.clone()))
            .collect();
        if expected != stored {
            return Err(CertificateFault::RelationMismatch { index });
        }
    }

    if cert.combination.len() != cert.relations.len() || cert.relations.is_empty() {
        return Err(CertificateFault::EliminationFailed);
    }
    let dim = rs.ambient_dim();
    let mut left = vec![vec![Rational::zero(); dim]; dim];
    let mut right: BTreeMap<RootVector, Rational> = BTreeMap::new();
    for (c, rel) in cert.combination.iter().zip(&cert.relations) {
        for (row, srow) in left.iter_mut().zip(sym_tensor(rel.alpha, rel.beta)) {
            for (x, s) in row.iter_mut().zip(srow) {
                *x += c * s;
            }
        }
        for (r, k) in rel.right {
            *right.entry(r.clone()).or_insert_with(Rational::zero) += c * k;
        }
    }
    right.retain(|_, c| !c.is_zero());
    if left != sym_tensor(cert.gamma, cert.gamma) {
        return Err(CertificateFault::EliminationFailed);
    }
    let conclusion: BTreeMap<_, _> = cert
        .conclusion
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| (r.clone(), c.clone()))
        .collect();
    if conclusion != right || conclusion.is_empty() {
        return Err(CertificateFault::ConclusionMismatch);
    }

    // Stored sign claims must be exactly the ones forced by compactness.
    let mut expected: BTreeMap<(bool, RootVector), i8> = BTreeMap::new();
    expected.insert((true, cert.gamma.clone()), -1);
    for r in conclusion.keys() {
        let compact = pair
            .is_compact(r)
            .map_err(|_| CertificateFault::RootNotInSystem(r.clone()))?;
        expected.insert((false, r.clone()), if compact { -1 } else { 1 });
    }
    let mut stored: BTreeMap<(bool, RootVector), i8> = BTreeMap::new();
    for s in &cert.signs {
        if stored.insert((s.hdiag, s.root.clone()), s.sign).is_some() {
            return Err(CertificateFault::SignPatternViolated(format!("duplicate claim on {}", s.root)));
        }
    }
    if stored != expected {
        return Err(CertificateFault::SignPatternViolated(
            "claims differ from the compactness grading".into(),
        ));
    }
    for (r, c) in &conclusion {
        let sign = expected[&(false, r.clone())];
        if !(c * rational::int(sign.into())).is_positive() {
            return Err(CertificateFault::SignPatternViolated(format!("term a_{r} is not forced positive")));
        }
    }
    Ok(())
}

/// Positivity, domain and the balanced identity for a stored metric.
pub fn check_metric(
    pair: &InnerPair,
    simple_roots: &[RootVector],
    metric: &BTreeMap<RootVector, Rational>,
) -> Result<(), MetricFault> {
    let rs = pair.root_system();
    let pi = ordering_from_roots(rs, simple_roots).map_err(MetricFault::InvalidOrdering)?;
    let positive: Vec<&RootVector> = rs
        .roots()
        .iter()
        .filter(|r| pi.is_positive(r).unwrap_or(false))
        .collect();
    if positive.len() != metric.len() || positive.iter().any(|r| !metric.contains_key(*r)) {
        return Err(MetricFault::DomainMismatch);
    }
    if let Some((r, _)) = metric.iter().find(|(_, g)| !g.is_positive()) {
        return Err(MetricFault::PositivityViolated(r.clone()));
    }
    let imbalance = imbalance_vector(pair, metric).map_err(|_| MetricFault::DomainMismatch)?;
    if !imbalance.is_zero() {
        return Err(MetricFault::BalancedIdentityFailed(imbalance));
    }
    Ok(())
}

/// `Σ_{R_p⁺} g_α α − Σ_{R_k⁺} g_α α`.
pub fn imbalance_vector(
    pair: &InnerPair,
    metric: &BTreeMap<RootVector, Rational>,
) -> Result<RootVector, RootVector> {
    let rs = pair.root_system();
    let mut acc = RootVector::zero(rs.ambient_dim());
    for (r, g) in metric {
        let compact = pair.is_compact(r).map_err(|_| r.clone())?;
        let coeff = if compact { -g.clone() } else { g.clone() };
        acc.add_assign_scaled(&coeff, r);
    }
    Ok(acc)
}

/// Sum of the positive roots of the simple system named by `simple_roots`.
pub fn positive_root_sum(rs: &RootSystem, simple_roots: &[RootVector]) -> Result<RootVector, String> {
    let pi = ordering_from_roots(rs, simple_roots)?;
    let mut acc = RootVector::zero(rs.ambient_dim());
    for r in rs.roots() {
        if pi.is_positive(r).unwrap_or(false) {
            acc.add_assign_scaled(&rational::int(1), r);
        }
    }
    Ok(acc)
}

/// Chern scalar up to the fixed positive normalization:
/// `2⟨imbalance, δ⟩`.
pub fn chern_scalar_from(imbalance: &RootVector, delta: &RootVector) -> Rational {
    rational::int(2) * imbalance.dot(delta)
}
