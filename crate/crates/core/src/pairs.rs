//! Inner symmetric pairs `(g, k)` of non-compact type with `g` simple and
//! even dimensional, and the Z₂ grading of the roots into compact and
//! noncompact ones.
//!
//! A grading is stored as painted-node data on the fixed standard base. The
//! compactness of an arbitrary root is the parity of the sum of its painted
//! coefficients, which is additive and hence compatible with
//! `[k,k] ⊆ k`, `[k,p] ⊆ p`, `[p,p] ⊆ k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, RootSystem, RootVector, SimpleSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Compactness {
    Compact,
    Noncompact,
}

impl Compactness {
    pub fn is_compact(self) -> bool {
        self == Compactness::Compact
    }

    fn from_parity(odd: bool) -> Self {
        if odd {
            Compactness::Noncompact
        } else {
            Compactness::Compact
        }
    }
}

/// Compact/noncompact labels on the standard simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactnessGrading {
    painted: Vec<bool>,
}

impl CompactnessGrading {
    /// Grading with exactly one painted node (1-based index).
    pub fn single(rank: usize, node: usize) -> Self {
        assert!((1..=rank).contains(&node), "painted node out of range");
        let mut painted = vec![false; rank];
        painted[node - 1] = true;
        Self { painted }
    }

    pub fn base_labels(&self) -> Vec<Compactness> {
        self.painted.iter().map(|&p| Compactness::from_parity(p)).collect()
    }

    pub fn painted_nodes(&self) -> Vec<usize> {
        (1..=self.painted.len()).filter(|&i| self.painted[i - 1]).collect()
    }

    pub fn compactness(&self, rs: &RootSystem, root: &RootVector) -> Result<Compactness> {
        let coeffs = rs.base().decompose(root)?;
        let odd = coeffs
            .iter()
            .zip(&self.painted)
            .filter(|(_, &p)| p)
            .map(|(c, _)| c.rem_euclid(2))
            .sum::<i64>()
            % 2
            == 1;
        Ok(Compactness::from_parity(odd))
    }
}

/// One row of the table of inner pairs, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// su(p,q), p + q odd
    Su { p: usize, q: usize },
    /// so(2p+1, 2q), p + q even
    SoOdd { p: usize, q: usize },
    /// sp(2n, ℝ) in the rank-2n convention
    SpReal { n: usize },
    /// sp(p,q), p + q even
    Sp { p: usize, q: usize },
    /// so(4n)*
    SoStar { n: usize },
    /// so(2p, 2q), p + q even ≥ 4
    SoEven { p: usize, q: usize },
    G2,
    F4Minus20,
    F4Plus4,
    E6Plus2,
    E6Minus14,
    E8Plus8,
    E8Minus24,
}

fn so_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn sp_dim(n: usize) -> usize {
    n * (2 * n + 1)
}

impl PairKind {
    pub fn family(&self) -> Family {
        match self {
            PairKind::Su { .. } => Family::A,
            PairKind::SoOdd { .. } => Family::B,
            PairKind::SpReal { .. } | PairKind::Sp { .. } => Family::C,
            PairKind::SoStar { .. } | PairKind::SoEven { .. } => Family::D,
            PairKind::G2 => Family::G2,
            PairKind::F4Minus20 | PairKind::F4Plus4 => Family::F4,
            PairKind::E6Plus2 | PairKind::E6Minus14 => Family::E6,
            PairKind::E8Plus8 | PairKind::E8Minus24 => Family::E8,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            PairKind::Su { p, q } => p + q - 1,
            PairKind::SoOdd { p, q } | PairKind::Sp { p, q } | PairKind::SoEven { p, q } => p + q,
            PairKind::SpReal { n } | PairKind::SoStar { n } => 2 * n,
            PairKind::G2 => 2,
            PairKind::F4Minus20 | PairKind::F4Plus4 => 4,
            PairKind::E6Plus2 | PairKind::E6Minus14 => 6,
            PairKind::E8Plus8 | PairKind::E8Minus24 => 8,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            PairKind::Su { p, q } => format!("su({p},{q})"),
            PairKind::SoOdd { p, q } => format!("so({},{})", 2 * p + 1, 2 * q),
            PairKind::SpReal { n } => format!("sp({},R)", 2 * n),
            PairKind::Sp { p, q } => format!("sp({p},{q})"),
            PairKind::SoStar { n } => format!("so({})*", 4 * n),
            PairKind::SoEven { p, q } => format!("so({},{})", 2 * p, 2 * q),
            PairKind::G2 => "g2(2)".into(),
            PairKind::F4Minus20 => "f4(-20)".into(),
            PairKind::F4Plus4 => "f4(4)".into(),
            PairKind::E6Plus2 => "e6(2)".into(),
            PairKind::E6Minus14 => "e6(-14)".into(),
            PairKind::E8Plus8 => "e8(8)".into(),
            PairKind::E8Minus24 => "e8(-24)".into(),
        }
    }

    /// The maximal compact subalgebra, as listed in the table.
    pub fn k_name(&self) -> String {
        match *self {
            PairKind::Su { p, q } => format!("su({p})+su({q})+R"),
            PairKind::SoOdd { p, q } => format!("so({})+so({})", 2 * p + 1, 2 * q),
            PairKind::SpReal { n } | PairKind::SoStar { n } => format!("su({})+R", 2 * n),
            PairKind::Sp { p, q } => format!("sp({p})+sp({q})"),
            PairKind::SoEven { p, q } => format!("so({})+so({})", 2 * p, 2 * q),
            PairKind::G2 => "su(2)+su(2)".into(),
            PairKind::F4Minus20 => "so(9)".into(),
            PairKind::F4Plus4 => "su(2)+sp(3)".into(),
            PairKind::E6Plus2 => "su(2)+su(6)".into(),
            PairKind::E6Minus14 => "so(10)+R".into(),
            PairKind::E8Plus8 => "so(16)".into(),
            PairKind::E8Minus24 => "su(2)+e7".into(),
        }
    }

    /// `dim g` from the classical dimension formulas.
    pub fn dim_g(&self) -> usize {
        let r = self.rank();
        match self.family() {
            Family::A => (r + 1) * (r + 1) - 1,
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E8 => 248,
        }
    }

    /// `dim k` read off the subalgebra column.
    pub fn dim_k(&self) -> usize {
        match *self {
            PairKind::Su { p, q } => p * p + q * q - 1,
            PairKind::SoOdd { p, q } => so_dim(2 * p + 1) + so_dim(2 * q),
            PairKind::SpReal { n } | PairKind::SoStar { n } => 4 * n * n,
            PairKind::Sp { p, q } => sp_dim(p) + sp_dim(q),
            PairKind::SoEven { p, q } => so_dim(2 * p) + so_dim(2 * q),
            PairKind::G2 => 3 + 3,
            PairKind::F4Minus20 => so_dim(9),
            PairKind::F4Plus4 => 3 + sp_dim(3),
            PairKind::E6Plus2 => 3 + 35,
            PairKind::E6Minus14 => so_dim(10) + 1,
            PairKind::E8Plus8 => so_dim(16),
            PairKind::E8Minus24 => 3 + 133,
        }
    }

    /// Painted node fixed by convention, if any. For the exceptional rows
    /// these are the nodes of the standard (Bourbaki-numbered) base; for
    /// `so(4n)*` the node is left to inference.
    pub fn preferred_node(&self) -> Option<usize> {
        match *self {
            PairKind::Su { p, .. } => Some(p),
            PairKind::SoOdd { q, .. } => Some(q),
            PairKind::SpReal { n } => Some(2 * n),
            PairKind::Sp { p, .. } => Some(p),
            PairKind::SoStar { .. } => None,
            PairKind::SoEven { p, .. } => Some(p),
            PairKind::G2 => Some(2),
            PairKind::F4Minus20 => Some(4),
            PairKind::F4Plus4 => Some(1),
            PairKind::E6Plus2 => Some(2),
            PairKind::E6Minus14 => Some(1),
            PairKind::E8Plus8 => Some(1),
            PairKind::E8Minus24 => Some(8),
        }
    }

    /// `(so(1,2n), so(2n))`, the one family without an ordering whose
    /// noncompact simple roots pair up.
    pub fn is_so_1_2n(&self) -> bool {
        matches!(self, PairKind::SoOdd { p: 0, .. })
    }

    /// Table conditions for the row, ignoring the rank bound.
    fn validate(&self) -> Result<()> {
        let reject = |why: &str| Err(Error::UnknownPair(format!("{}: not in catalog ({why})", self.name())));
        match *self {
            PairKind::Su { p, q } => {
                if p < 1 || q < 1 {
                    return reject("p, q must be at least 1");
                }
                if (p + q) % 2 == 0 {
                    return reject("p+q must be odd");
                }
            }
            PairKind::SoOdd { q, p } => {
                if q < 1 {
                    return reject("q must be at least 1");
                }
                if (p + q) % 2 != 0 {
                    return reject("p+q must be even");
                }
            }
            PairKind::SpReal { n } if n < 1 => return reject("n must be at least 1"),
            PairKind::Sp { p, q } => {
                if p < 1 || q < 1 {
                    return reject("p, q must be at least 1");
                }
                if (p + q) % 2 != 0 {
                    return reject("p+q must be even");
                }
            }
            PairKind::SoStar { n } if n < 2 => return reject("n must be at least 2"),
            PairKind::SoEven { p, q } => {
                if p < 1 || q < 1 {
                    return reject("p, q must be at least 1");
                }
                if (p + q) % 2 != 0 || p + q < 4 {
                    return reject("p+q must be even and at least 4");
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Rows isomorphic to another row of lower table position; they are
    /// accepted by name but mapped to that row.
    fn canonical(self) -> PairKind {
        match self {
            // sp(2,ℝ) in the rank convention is so(3,2); sp(1,1) is so(1,4)
            PairKind::SpReal { n: 1 } => PairKind::SoOdd { p: 1, q: 1 },
            PairKind::Sp { p: 1, q: 1 } => PairKind::SoOdd { p: 0, q: 2 },
            PairKind::Sp { p, q } if p > q => PairKind::Sp { p: q, q: p },
            PairKind::SoEven { p, q } if p > q => PairKind::SoEven { p: q, q: p },
            other => other,
        }
    }

    /// Parse a pair name such as `su(2,1)`, `so(1,4)`, `sp(4,R)`, `so(8)*`,
    /// `e8(-24)`.
    pub fn parse(name: &str) -> Result<PairKind> {
        let s: String = name
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect::<String>()
            .replace('ℝ', "R")
            .to_ascii_lowercase();
        let unknown = || Error::UnknownPair(format!("{name}: not in catalog (unrecognized name)"));
        let exceptional = match s.as_str() {
            "g2(2)" | "g2" => Some(PairKind::G2),
            "f4(-20)" => Some(PairKind::F4Minus20),
            "f4(4)" => Some(PairKind::F4Plus4),
            "e6(2)" => Some(PairKind::E6Plus2),
            "e6(-14)" => Some(PairKind::E6Minus14),
            "e8(8)" => Some(PairKind::E8Plus8),
            "e8(-24)" => Some(PairKind::E8Minus24),
            _ => None,
        };
        if let Some(k) = exceptional {
            return Ok(k);
        }
        if let Some(rest) = s.strip_prefix("so(").and_then(|r| r.strip_suffix(")*")) {
            let m: usize = rest.parse().map_err(|_| unknown())?;
            if !m.is_multiple_of(4) {
                return Err(Error::UnknownPair(format!("{name}: not in catalog (so(m)* needs 4 | m)")));
            }
            let kind = PairKind::SoStar { n: m / 4 };
            kind.validate()?;
            return Ok(kind);
        }
        let (head, args) = s.split_once('(').ok_or_else(unknown)?;
        let args = args.strip_suffix(')').ok_or_else(unknown)?;
        let (a, b) = args.split_once(',').ok_or_else(unknown)?;
        let kind = match head {
            "su" => PairKind::Su {
                p: a.parse().map_err(|_| unknown())?,
                q: b.parse().map_err(|_| unknown())?,
            },
            "sp" if b == "r" => {
                let m: usize = a.parse().map_err(|_| unknown())?;
                if !m.is_multiple_of(2) || m == 0 {
                    return Err(Error::UnknownPair(format!(
                        "{name}: not in catalog (odd rank gives odd dimension)"
                    )));
                }
                PairKind::SpReal { n: m / 2 }
            }
            "sp" => PairKind::Sp {
                p: a.parse().map_err(|_| unknown())?,
                q: b.parse().map_err(|_| unknown())?,
            },
            "so" => {
                let x: usize = a.parse().map_err(|_| unknown())?;
                let y: usize = b.parse().map_err(|_| unknown())?;
                match (x % 2, y % 2) {
                    (1, 0) => PairKind::SoOdd { p: x / 2, q: y / 2 },
                    (0, 1) => PairKind::SoOdd { p: y / 2, q: x / 2 },
                    (0, 0) => PairKind::SoEven { p: x / 2, q: y / 2 },
                    _ => {
                        return Err(Error::UnknownPair(format!(
                            "{name}: not in catalog (so(odd,odd) is not of inner type)"
                        )))
                    }
                }
            }
            _ => return Err(unknown()),
        };
        kind.validate()?;
        Ok(kind.canonical())
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A catalog entry: root system, grading and the expected dimensions.
#[derive(Debug, Clone)]
pub struct InnerPair {
    kind: PairKind,
    root_system: Arc<RootSystem>,
    grading: CompactnessGrading,
    painted_node: usize,
}

impl InnerPair {
    pub fn new(kind: PairKind) -> Result<Self> {
        kind.validate()?;
        let rs = Arc::new(build_root_system(kind.family(), kind.rank())?);
        Self::with_root_system(kind, rs)
    }

    /// `so(1,2n)` for any `n ≥ 2`. For odd `n` the algebra is odd
    /// dimensional and not a table row, but the root data and grading are
    /// the same as for even `n`.
    pub fn so_1_2n_any(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("so(1,2n) needs n ≥ 2, got {n}")));
        }
        let kind = PairKind::SoOdd { p: 0, q: n };
        let rs = Arc::new(build_root_system(kind.family(), kind.rank())?);
        let (grading, painted_node) = infer_grading(kind, &rs)?;
        Ok(Self {
            kind,
            root_system: rs,
            grading,
            painted_node,
        })
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(PairKind::parse(name)?)
    }

    fn with_root_system(kind: PairKind, rs: Arc<RootSystem>) -> Result<Self> {
        let (grading, painted_node) = infer_grading(kind, &rs)?;
        let pair = Self {
            kind,
            root_system: rs,
            grading,
            painted_node,
        };
        let dim_g = pair.rank() + pair.root_system.roots().len();
        if dim_g != kind.dim_g() || !dim_g.is_multiple_of(2) {
            return Err(Error::Grading {
                pair: kind.name(),
                reason: format!("rank + |R| = {dim_g}, expected even {}", kind.dim_g()),
            });
        }
        Ok(pair)
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.name()
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn grading(&self) -> &CompactnessGrading {
        &self.grading
    }

    /// 1-based index of the painted node in the standard base.
    pub fn painted_node(&self) -> usize {
        self.painted_node
    }

    pub fn painted_root(&self) -> &RootVector {
        &self.root_system.base().simples()[self.painted_node - 1]
    }

    pub fn expected_dim_g(&self) -> usize {
        self.kind.dim_g()
    }

    pub fn expected_dim_k(&self) -> usize {
        self.kind.dim_k()
    }

    pub fn compactness(&self, root: &RootVector) -> Result<Compactness> {
        self.grading.compactness(&self.root_system, root)
    }

    pub fn is_compact(&self, root: &RootVector) -> Result<bool> {
        Ok(self.compactness(root)?.is_compact())
    }

    /// Number of compact roots.
    pub fn compact_root_count(&self) -> usize {
        count_compact(&self.root_system, &self.grading)
    }

    /// Positive roots of `ordering` split into compact and noncompact.
    pub fn split_positive(
        &self,
        ordering: &SimpleSystem,
    ) -> Result<(Vec<RootVector>, Vec<RootVector>)> {
        let mut compact = Vec::new();
        let mut noncompact = Vec::new();
        for root in ordering.positive_roots() {
            if self.is_compact(root)? {
                compact.push(root.clone());
            } else {
                noncompact.push(root.clone());
            }
        }
        Ok((compact, noncompact))
    }

    pub fn entry(&self) -> CatalogEntry {
        CatalogEntry {
            name: self.name(),
            family: self.kind.family().to_string(),
            rank: self.rank(),
            dim_g: self.expected_dim_g(),
            dim_k: self.expected_dim_k(),
            k: self.kind.k_name(),
            painted_node: self.painted_node,
            painted_root: self.painted_root().clone(),
        }
    }
}

fn count_compact(rs: &RootSystem, grading: &CompactnessGrading) -> usize {
    rs.roots()
        .iter()
        .filter(|r| grading.compactness(rs, r).map(Compactness::is_compact).unwrap_or(false))
        .count()
}

/// Painted node for a row: among the single-node gradings whose compact
/// roots reproduce `dim k`, take the conventional node if the row fixes one
/// (it must be a candidate), otherwise the last candidate in base order.
pub fn infer_grading(kind: PairKind, rs: &RootSystem) -> Result<(CompactnessGrading, usize)> {
    let rank = rs.rank();
    let candidates: Vec<usize> = (1..=rank)
        .filter(|&node| {
            let g = CompactnessGrading::single(rank, node);
            rank + count_compact(rs, &g) == kind.dim_k()
        })
        .collect();
    let fail = |reason: String| Error::Grading {
        pair: kind.name(),
        reason,
    };
    let node = match kind.preferred_node() {
        Some(n) if candidates.contains(&n) => n,
        Some(n) => {
            return Err(fail(format!(
                "conventional painted node {n} does not reproduce dim k = {} (candidates {candidates:?})",
                kind.dim_k()
            )))
        }
        None => *candidates
            .last()
            .ok_or_else(|| fail(format!("no painted node reproduces dim k = {}", kind.dim_k())))?,
    };
    Ok((CompactnessGrading::single(rank, node), node))
}

/// Serializable catalog listing row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub family: String,
    pub rank: usize,
    pub dim_g: usize,
    pub dim_k: usize,
    pub k: String,
    pub painted_node: usize,
    pub painted_root: RootVector,
}

/// Table rows instantiated at every admissible parameter with rank at most
/// `max_rank`, in table order. Isomorphic duplicates (the rank-2 `C` rows,
/// and `p > q` for the symmetric rows) are listed once.
pub fn catalog_kinds(max_rank: usize) -> Vec<PairKind> {
    let mut out = Vec::new();
    let even_ranks = || (2..=max_rank).filter(|r| r % 2 == 0);
    for r in even_ranks() {
        let n = r + 1;
        for q in 1..=n / 2 {
            out.push(PairKind::Su { p: n - q, q });
        }
    }
    for r in even_ranks() {
        for p in 0..r {
            out.push(PairKind::SoOdd { p, q: r - p });
        }
    }
    for r in even_ranks().filter(|&r| r >= 4) {
        out.push(PairKind::SpReal { n: r / 2 });
    }
    for r in even_ranks().filter(|&r| r >= 4) {
        for p in 1..=r / 2 {
            out.push(PairKind::Sp { p, q: r - p });
        }
    }
    for r in even_ranks().filter(|&r| r >= 4) {
        out.push(PairKind::SoStar { n: r / 2 });
    }
    for r in even_ranks().filter(|&r| r >= 4) {
        for p in 1..=r / 2 {
            out.push(PairKind::SoEven { p, q: r - p });
        }
    }
    let exceptional = [
        PairKind::G2,
        PairKind::F4Minus20,
        PairKind::F4Plus4,
        PairKind::E6Plus2,
        PairKind::E6Minus14,
        PairKind::E8Plus8,
        PairKind::E8Minus24,
    ];
    out.extend(exceptional.into_iter().filter(|k| k.rank() <= max_rank));
    out
}

/// Instantiated catalog; root systems are shared between rows of the same
/// family and rank.
pub fn catalog(max_rank: usize) -> Result<Vec<InnerPair>> {
    let kinds = catalog_kinds(max_rank);
    let mut systems: BTreeMap<(Family, usize), Arc<RootSystem>> = BTreeMap::new();
    for k in &kinds {
        if let std::collections::btree_map::Entry::Vacant(e) = systems.entry((k.family(), k.rank())) {
            e.insert(Arc::new(build_root_system(k.family(), k.rank())?));
        }
    }
    kinds
        .into_iter()
        .map(|k| InnerPair::with_root_system(k, systems[&(k.family(), k.rank())].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> RootVector {
        RootVector::from_ints(c)
    }

    #[test]
    fn rank_two_catalog() {
        let names: Vec<_> = catalog_kinds(2).iter().map(PairKind::name).collect();
        assert_eq!(names, ["su(2,1)", "so(1,4)", "so(3,2)", "g2(2)"]);
        assert!(catalog_kinds(1).is_empty());
    }

    #[test]
    fn e8_split_form_dims() {
        let pair = InnerPair::from_name("e8(8)").unwrap();
        assert_eq!(pair.expected_dim_k(), 120);
        assert_eq!(pair.rank() + pair.compact_root_count(), 120);
        assert_eq!(pair.painted_node(), 1);
    }

    #[test]
    fn su22_rejected() {
        let err = PairKind::parse("su(2,2)").unwrap_err().to_string();
        assert!(err.contains("p+q must be odd"), "{err}");
        assert!(PairKind::parse("so(2,2)").is_err());
        assert!(PairKind::parse("sl(3,R)").is_err());
    }

    #[test]
    fn aliases_map_to_rows() {
        assert_eq!(PairKind::parse("so(2,3)").unwrap(), PairKind::SoOdd { p: 1, q: 1 });
        assert_eq!(PairKind::parse("sp(1,1)").unwrap(), PairKind::SoOdd { p: 0, q: 2 });
        assert_eq!(PairKind::parse("sp(2,R)").unwrap(), PairKind::SoOdd { p: 1, q: 1 });
        assert_eq!(PairKind::parse("so(8)*").unwrap(), PairKind::SoStar { n: 2 });
        assert_eq!(PairKind::parse("E8(−24)").unwrap(), PairKind::E8Minus24);
        assert_eq!(PairKind::parse("su(1,2)").unwrap(), PairKind::Su { p: 1, q: 2 });
    }

    #[test]
    fn names_round_trip_through_parse() {
        for k in catalog_kinds(8) {
            assert_eq!(PairKind::parse(&k.name()).unwrap(), k, "{k}");
        }
    }

    #[test]
    fn su21_compactness() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        assert_eq!(pair.painted_root(), &v(&[0, 1, -1]));
        assert_eq!(pair.compactness(&v(&[1, -1, 0])).unwrap(), Compactness::Compact);
        assert_eq!(pair.compactness(&v(&[1, 0, -1])).unwrap(), Compactness::Noncompact);
        assert!(pair.compactness(&v(&[2, 0, -2])).is_err());
    }

    #[test]
    fn exceptional_painted_nodes() {
        for (name, node) in [("f4(-20)", 4), ("e6(2)", 2), ("g2(2)", 2), ("f4(4)", 1), ("e6(-14)", 1), ("e8(-24)", 8)] {
            assert_eq!(InnerPair::from_name(name).unwrap().painted_node(), node, "{name}");
        }
        let so14 = InnerPair::from_name("so(1,4)").unwrap();
        assert_eq!(so14.painted_root(), &v(&[0, 1]));
    }

    #[test]
    fn split_positive_examples() {
        let su21 = InnerPair::from_name("su(2,1)").unwrap();
        let (k, p) = su21.split_positive(su21.root_system().base()).unwrap();
        assert_eq!(k, vec![v(&[1, -1, 0])]);
        assert_eq!(p, vec![v(&[0, 1, -1]), v(&[1, 0, -1])]);

        let so14 = InnerPair::from_name("so(1,4)").unwrap();
        let (k, p) = so14.split_positive(so14.root_system().base()).unwrap();
        assert_eq!(k, vec![v(&[1, -1]), v(&[1, 1])]);
        assert_eq!(p, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn so_star_node_is_inferred() {
        let pair = InnerPair::from_name("so(8)*").unwrap();
        assert_eq!(pair.painted_node(), 4);
        assert_eq!(pair.rank() + pair.compact_root_count(), 16);
    }

    #[test]
    fn grading_is_negation_invariant() {
        let pair = InnerPair::from_name("f4(4)").unwrap();
        for r in pair.root_system().roots() {
            assert_eq!(pair.compactness(r).unwrap(), pair.compactness(&-r).unwrap());
        }
    }
}
