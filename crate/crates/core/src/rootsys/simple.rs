use std::collections::HashMap;

use super::linalg;
use super::{RootSystem, RootVector};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A base of the root system: an ordering of the roots, with the integer
/// decomposition of every root over the simple roots cached.
#[derive(Clone, Debug)]
pub struct SimpleSystem {
    simples: Vec<RootVector>,
    coefficients: HashMap<RootVector, Vec<i64>>,
    /// Positive roots, lexicographically sorted.
    positive: Vec<RootVector>,
}

impl SimpleSystem {
    pub fn new(rs: &RootSystem, simples: Vec<RootVector>) -> Result<Self> {
        Self::from_roots(rs.roots(), rs.rank(), simples)
    }

    pub(crate) fn from_roots(
        roots: &[RootVector],
        rank: usize,
        simples: Vec<RootVector>,
    ) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidSimpleSystem(why));
        if simples.len() != rank {
            return bad(format!("{} simple roots for rank {rank}", simples.len()));
        }
        let gram: linalg::Matrix = simples
            .iter()
            .map(|a| simples.iter().map(|b| a.dot(b)).collect())
            .collect();
        let Some(gram_inv) = linalg::inverse(&gram) else {
            return bad("simple roots are linearly dependent".into());
        };
        let mut coefficients = HashMap::with_capacity(roots.len());
        let mut positive = Vec::with_capacity(roots.len() / 2);
        for root in roots {
            let pairings: Vec<Rational> = simples.iter().map(|s| root.dot(s)).collect();
            let c = linalg::mat_vec(&gram_inv, &pairings);
            let mut rebuilt = RootVector::zero(root.ambient_dim());
            for (ci, s) in c.iter().zip(&simples) {
                rebuilt.add_assign_scaled(ci, s);
            }
            if &rebuilt != root {
                return bad(format!("{root} is outside the span of the simple roots"));
            }
            if c.iter().any(|x| !x.is_integer()) {
                return bad(format!("{root} has non-integral coordinates"));
            }
            let ints: Vec<i64> = c
                .iter()
                .map(|x| i64::try_from(x.to_integer()).expect("root coefficient fits in i64"))
                .collect();
            let nonneg = ints.iter().all(|&x| x >= 0);
            let nonpos = ints.iter().all(|&x| x <= 0);
            if !nonneg && !nonpos {
                return bad(format!("{root} has coefficients of mixed sign"));
            }
            if nonneg {
                positive.push(root.clone());
            }
            coefficients.insert(root.clone(), ints);
        }
        positive.sort();
        Ok(Self {
            simples,
            coefficients,
            positive,
        })
    }

    pub fn simples(&self) -> &[RootVector] {
        &self.simples
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    /// Integer coordinates of `root` over the simple roots, in order.
    pub fn decompose(&self, root: &RootVector) -> Result<&[i64]> {
        self.coefficients
            .get(root)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::NotARoot(root.clone()))
    }

    pub fn is_positive(&self, root: &RootVector) -> Result<bool> {
        Ok(self.decompose(root)?.iter().all(|&c| c >= 0))
    }

    pub fn is_simple(&self, root: &RootVector) -> bool {
        self.simples.contains(root)
    }

    /// Image of the whole system under the reflection about `mirror`.
    pub fn reflected(&self, rs: &RootSystem, mirror: &RootVector) -> Result<Self> {
        let simples = self
            .simples
            .iter()
            .map(|s| super::reflect(s, mirror))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs, simples)
    }

    /// The opposite ordering, `-Π`.
    pub fn negated(&self, rs: &RootSystem) -> Result<Self> {
        Self::new(rs, self.simples.iter().map(|s| -s).collect())
    }

    /// Sorted simple roots; equal keys mean equal orderings.
    pub fn key(&self) -> Vec<RootVector> {
        let mut k = self.simples.clone();
        k.sort();
        k
    }

    /// Sum of the positive roots.
    pub fn positive_sum(&self) -> RootVector {
        let dim = self.simples[0].ambient_dim();
        self.positive.iter().fold(RootVector::zero(dim), |acc, r| &acc + r)
    }

    /// Height of a root in this ordering (sum of its coordinates).
    pub fn height(&self, root: &RootVector) -> Result<i64> {
        Ok(self.decompose(root)?.iter().sum())
    }
}

impl PartialEq for SimpleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.simples == other.simples
    }
}

impl Eq for SimpleSystem {}
