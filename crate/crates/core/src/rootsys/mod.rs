//! Irreducible reduced root systems in ε-coordinates.
//!
//! All computations use the Euclidean inner product of the ambient
//! coordinates. The Killing form restricted to the real span of the roots is
//! a positive multiple of this product (the factor depends only on the
//! algebra), and every quantity the crate asserts on is an equality with zero
//! or a strict sign, so the factor is never needed.

mod cartan;
pub mod linalg;
mod simple;
mod vector;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cartan::{root_count, standard_cartan};
pub use simple::SimpleSystem;
pub use vector::RootVector;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E8,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G",
            Family::F4 => "F",
            Family::E6 | Family::E8 => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "G2" | "G" => Family::G2,
            "F4" | "F" => Family::F4,
            "E6" => Family::E6,
            "E8" => Family::E8,
            other => return Err(Error::Parameter(format!("unknown family {other:?}"))),
        })
    }
}

/// An immutable root system together with its standard base.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<RootVector>,
    lookup: HashSet<RootVector>,
    base: SimpleSystem,
}

/// Build the root system of `family` at `rank` from its standard base by
/// closing under simple reflections.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let invalid = |reason: &str| Error::InvalidRootSystem {
        family: family.to_string(),
        rank,
        reason: reason.to_owned(),
    };
    let fixed = |r: usize| {
        if rank == r {
            Ok(())
        } else {
            Err(invalid(&format!("rank is fixed at {r}")))
        }
    };
    match family {
        Family::A | Family::C if rank < 1 => return Err(invalid("rank must be at least 1")),
        Family::B if rank < 2 => return Err(invalid("rank must be at least 2")),
        Family::D if rank < 3 => return Err(invalid("rank must be at least 3")),
        Family::G2 => fixed(2)?,
        Family::F4 => fixed(4)?,
        Family::E6 => fixed(6)?,
        Family::E8 => fixed(8)?,
        _ => {}
    }

    let base = standard_base(family, rank);
    let ambient_dim = base[0].ambient_dim();

    let mut lookup: HashSet<RootVector> = base.iter().cloned().collect();
    let mut queue: VecDeque<RootVector> = base.iter().cloned().collect();
    while let Some(root) = queue.pop_front() {
        for s in &base {
            let image = reflect(&root, s)?;
            if lookup.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<RootVector> = lookup.iter().cloned().collect();
    roots.sort();

    if roots.len() != root_count(family, rank) {
        return Err(invalid(&format!(
            "closure produced {} roots, expected {}",
            roots.len(),
            root_count(family, rank)
        )));
    }
    let base = SimpleSystem::from_roots(&roots, rank, base)?;
    let rs = RootSystem {
        family,
        rank,
        ambient_dim,
        roots,
        lookup,
        base,
    };
    if rs.cartan_matrix() != standard_cartan(family, rank) {
        return Err(invalid("Cartan matrix of the base is not the standard one"));
    }
    Ok(rs)
}

fn standard_base(family: Family, rank: usize) -> Vec<RootVector> {
    let e = RootVector::unit;
    let chain = |dim: usize, n: usize| -> Vec<RootVector> {
        (0..n).map(|i| &e(dim, i) - &e(dim, i + 1)).collect()
    };
    match family {
        Family::A => chain(rank + 1, rank),
        Family::B => {
            let mut b = chain(rank, rank - 1);
            b.push(e(rank, rank - 1));
            b
        }
        Family::C => {
            let mut b = chain(rank, rank - 1);
            b.push(e(rank, rank - 1).scale(&rational::int(2)));
            b
        }
        Family::D => {
            let mut b = chain(rank, rank - 1);
            b.push(&e(rank, rank - 2) + &e(rank, rank - 1));
            b
        }
        // α short, β long
        Family::G2 => vec![
            RootVector::from_ints(&[1, -1, 0]),
            RootVector::from_ints(&[-2, 1, 1]),
        ],
        Family::F4 => vec![
            RootVector::from_ints(&[0, 1, -1, 0]),
            RootVector::from_ints(&[0, 0, 1, -1]),
            RootVector::from_ints(&[0, 0, 0, 1]),
            RootVector::from_halves(&[1, -1, -1, -1]),
        ],
        Family::E8 | Family::E6 => {
            let mut b = vec![
                RootVector::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                &e(8, 0) + &e(8, 1),
            ];
            // α_j = ε_{j-1} - ε_{j-2}, j = 3..8 (1-based ε)
            for j in 3..=8 {
                b.push(&e(8, j - 2) - &e(8, j - 3));
            }
            b.truncate(rank);
            b
        }
    }
}

/// `v - 2⟨v,m⟩/⟨m,m⟩ · m`
pub fn reflect(v: &RootVector, mirror: &RootVector) -> Result<RootVector> {
    if mirror.is_zero() {
        return Err(Error::ZeroMirror);
    }
    let t = -(rational::int(2) * v.dot(mirror) / mirror.norm_sq());
    Ok(v.add_scaled(&t, mirror))
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All roots, lexicographically sorted.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn base(&self) -> &SimpleSystem {
        &self.base
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        v.ambient_dim() == self.ambient_dim && self.lookup.contains(v)
    }

    fn require_root(&self, v: &RootVector) -> Result<()> {
        if self.is_root(v) {
            Ok(())
        } else {
            Err(Error::NotARoot(v.clone()))
        }
    }

    /// `(p, q)` with `β + nα ∈ R` exactly for `p ≤ n ≤ q`.
    pub fn root_string(&self, alpha: &RootVector, beta: &RootVector) -> Result<(i64, i64)> {
        self.require_root(alpha)?;
        self.require_root(beta)?;
        if alpha == beta || alpha == &-beta {
            return Err(Error::ProportionalRoots(alpha.clone(), beta.clone()));
        }
        let mut p = 0;
        let mut cur = beta - alpha;
        while self.is_root(&cur) {
            p -= 1;
            cur = &cur - alpha;
        }
        let mut q = 0;
        let mut cur = beta + alpha;
        while self.is_root(&cur) {
            q += 1;
            cur = &cur + alpha;
        }
        Ok((p, q))
    }

    /// `N²_{α,β} = q(1 - p)/2 · ‖α‖²` for the α-string through β.
    pub fn n_squared(&self, alpha: &RootVector, beta: &RootVector) -> Result<Rational> {
        let (p, q) = self.root_string(alpha, beta)?;
        Ok(rational::frac(q * (1 - p), 2) * alpha.norm_sq())
    }

    /// `2⟨α,β⟩/⟨β,β⟩`.
    pub fn cartan_integer(alpha: &RootVector, beta: &RootVector) -> Rational {
        rational::int(2) * alpha.dot(beta) / beta.norm_sq()
    }

    /// Cartan matrix of the standard base, `a_ij = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_of(self.base.simples())
    }

    /// Every simple system of `R`, by breadth-first traversal of the Weyl
    /// chambers starting from the standard one. Refuses when more than
    /// `limit` chambers would be visited.
    pub fn chambers(&self, limit: usize) -> Result<Vec<SimpleSystem>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(self.base.key());
        queue.push_back(self.base.clone());
        while let Some(pi) = queue.pop_front() {
            for s in pi.simples() {
                let next = pi.reflected(self, s)?;
                if seen.insert(next.key()) {
                    if seen.len() > limit {
                        return Err(Error::Parameter(format!(
                            "more than {limit} Weyl chambers"
                        )));
                    }
                    queue.push_back(next);
                }
            }
            out.push(pi);
        }
        Ok(out)
    }
}

pub fn cartan_of(simples: &[RootVector]) -> Vec<Vec<i64>> {
    simples
        .iter()
        .map(|a| {
            simples
                .iter()
                .map(|b| {
                    let c = RootSystem::cartan_integer(a, b);
                    i64::try_from(c.to_integer()).expect("small Cartan integer")
                })
                .collect()
        })
        .collect()
}
