//! Choice of the invariant complex structure, i.e. of a simple system Π.
//!
//! For every pair except `so(1,2n)` we look for Π whose noncompact simple
//! roots pair up: each ψ ∈ Π_nc has a partner ψ' ∈ Π_nc with ψ + ψ' ∈ R.
//! The search tries the standard base, then its reflections about each
//! noncompact simple root, then a breadth-first walk over the Weyl chambers
//! bounded by word length `rank + 2`. For `so(1,2n)` no such Π exists and the
//! standard base is used with a dedicated metric.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::InnerPair;
use crate::rootsys::{RootVector, SimpleSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderingMode {
    /// Π_nc pairs up
    LemmaL1,
    /// `so(1,2n)` with the standard base
    #[serde(rename = "so_1_2n_special")]
    So12nSpecial,
}

/// Indices of the compact and noncompact simple roots of `pi`.
pub fn partition(pair: &InnerPair, pi: &SimpleSystem) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut compact = Vec::new();
    let mut noncompact = Vec::new();
    for (i, s) in pi.simples().iter().enumerate() {
        if pair.is_compact(s)? {
            compact.push(i);
        } else {
            noncompact.push(i);
        }
    }
    Ok((compact, noncompact))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleOrdering {
    simple_system: SimpleSystem,
    compact_idx: Vec<usize>,
    noncompact_idx: Vec<usize>,
    mode: OrderingMode,
}

impl AdmissibleOrdering {
    /// Checks the invariants of `mode` before accepting `pi`.
    pub fn new(pair: &InnerPair, pi: SimpleSystem, mode: OrderingMode) -> Result<Self> {
        let (compact_idx, noncompact_idx) = partition(pair, &pi)?;
        match mode {
            OrderingMode::LemmaL1 => {
                if !satisfies_l1_property(&pi, pair)? {
                    return Err(Error::InvalidSimpleSystem(format!(
                        "{}: noncompact simple roots do not pair up",
                        pair.name()
                    )));
                }
            }
            OrderingMode::So12nSpecial => {
                if !pair.kind().is_so_1_2n() || &pi != pair.root_system().base() {
                    return Err(Error::InvalidSimpleSystem(format!(
                        "{}: special mode needs so(1,2n) with its standard base",
                        pair.name()
                    )));
                }
            }
        }
        Ok(Self {
            simple_system: pi,
            compact_idx,
            noncompact_idx,
            mode,
        })
    }

    pub fn simple_system(&self) -> &SimpleSystem {
        &self.simple_system
    }

    pub fn mode(&self) -> OrderingMode {
        self.mode
    }

    /// φ_1, …, φ_k
    pub fn pi_c(&self) -> Vec<RootVector> {
        self.compact_idx
            .iter()
            .map(|&i| self.simple_system.simples()[i].clone())
            .collect()
    }

    /// ψ_1, …, ψ_l
    pub fn pi_nc(&self) -> Vec<RootVector> {
        self.noncompact_idx
            .iter()
            .map(|&i| self.simple_system.simples()[i].clone())
            .collect()
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        self.simple_system.positive_roots()
    }
}

/// Coordinates of a root along Π_c (`n_j`) and Π_nc (`m_j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinates {
    pub compact: Vec<i64>,
    pub noncompact: Vec<i64>,
}

pub fn decompose_over(ordering: &AdmissibleOrdering, root: &RootVector) -> Result<Coordinates> {
    decompose_split(&ordering.simple_system, &ordering.compact_idx, &ordering.noncompact_idx, root)
}

pub(crate) fn decompose_split(
    pi: &SimpleSystem,
    compact_idx: &[usize],
    noncompact_idx: &[usize],
    root: &RootVector,
) -> Result<Coordinates> {
    let c = pi.decompose(root)?;
    Ok(Coordinates {
        compact: compact_idx.iter().map(|&i| c[i]).collect(),
        noncompact: noncompact_idx.iter().map(|&i| c[i]).collect(),
    })
}

/// True iff every noncompact simple root has a noncompact simple partner
/// whose sum with it is a root.
pub fn satisfies_l1_property(pi: &SimpleSystem, pair: &InnerPair) -> Result<bool> {
    let rs = pair.root_system();
    let (_, nc) = partition(pair, pi)?;
    let simples = pi.simples();
    Ok(nc.iter().all(|&i| {
        nc.iter()
            .any(|&j| rs.is_root(&(&simples[i] + &simples[j])))
    }))
}

pub fn find_admissible_ordering(pair: &InnerPair) -> Result<AdmissibleOrdering> {
    let rs = pair.root_system();
    let standard = rs.base().clone();
    if pair.kind().is_so_1_2n() {
        return AdmissibleOrdering::new(pair, standard, OrderingMode::So12nSpecial);
    }
    if satisfies_l1_property(&standard, pair)? {
        return AdmissibleOrdering::new(pair, standard, OrderingMode::LemmaL1);
    }
    let (_, nc) = partition(pair, &standard)?;
    for &i in &nc {
        let mirror = &standard.simples()[i];
        let candidate = standard.reflected(rs, mirror)?;
        if satisfies_l1_property(&candidate, pair)? {
            return AdmissibleOrdering::new(pair, candidate, OrderingMode::LemmaL1);
        }
    }

    let max_len = rs.rank() + 2;
    let mut seen: HashSet<Vec<RootVector>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(standard.key());
    queue.push_back((standard, 0usize));
    while let Some((pi, len)) = queue.pop_front() {
        if len >= max_len {
            continue;
        }
        for s in pi.simples() {
            let next = pi.reflected(rs, s)?;
            if !seen.insert(next.key()) {
                continue;
            }
            if satisfies_l1_property(&next, pair)? {
                return AdmissibleOrdering::new(pair, next, OrderingMode::LemmaL1);
            }
            queue.push_back((next, len + 1));
        }
    }
    Err(Error::OrderingSearchExhausted {
        pair: pair.name(),
        words: seen.len(),
    })
}

/// A noncompact positive non-simple root with nonzero coordinate along the
/// `j`-th compact simple root (0-based into Π_c); the lexicographically
/// smallest one.
pub fn lemma_l2_witness(
    ordering: &AdmissibleOrdering,
    pair: &InnerPair,
    j: usize,
) -> Result<RootVector> {
    l2_witness_in(
        &ordering.simple_system,
        &ordering.compact_idx,
        pair,
        j,
    )?
    .ok_or_else(|| {
        Error::Invariant(format!(
            "{}: no noncompact positive root has a nonzero coordinate along compact simple #{j}",
            pair.name()
        ))
    })
}

pub(crate) fn l2_witness_in(
    pi: &SimpleSystem,
    compact_idx: &[usize],
    pair: &InnerPair,
    j: usize,
) -> Result<Option<RootVector>> {
    let col = *compact_idx
        .get(j)
        .ok_or_else(|| Error::Parameter(format!("compact simple index {j} out of range")))?;
    for root in pi.positive_roots() {
        if pi.is_simple(root) || pair.is_compact(root)? {
            continue;
        }
        if pi.decompose(root)?[col] != 0 {
            return Ok(Some(root.clone()));
        }
    }
    Ok(None)
}
