//! Chern–Ricci data of an invariant metric.
//!
//! δ is represented by its dual coordinate vector, the sum of the positive
//! roots, so every pairing with δ is a dot product. The Ricci form is
//! `ρ(x, y) = B([x, y], δ)`; on root vectors it is nonzero only on
//! `(E_α, E_{−α})`, where it equals `⟨α, δ⟩`. The scalar curvature is
//! reported up to a fixed positive factor; only its vanishing matters.

use serde::{Deserialize, Serialize};

use crate::balanced::DiagonalMetric;
use crate::error::{Error, Result};
use crate::pairs::InnerPair;
use crate::rational::{self, Rational};
use crate::rootsys::{RootVector, SimpleSystem};

use num_traits::Zero;

pub fn weyl_delta(pi: &SimpleSystem) -> RootVector {
    pi.positive_sum()
}

/// `⟨α, δ⟩`, the value `ρ(E_α, E_{−α})`.
pub fn ricci_value(alpha: &RootVector, pi: &SimpleSystem) -> Result<Rational> {
    // decompose rejects non-roots
    pi.decompose(alpha)?;
    Ok(alpha.dot(&weyl_delta(pi)))
}

/// `2⟨Σ_{R_p⁺} g_α α − Σ_{R_k⁺} g_α α, δ⟩`.
pub fn chern_scalar(metric: &DiagonalMetric, pi: &SimpleSystem, pair: &InnerPair) -> Result<Rational> {
    Ok(rational::int(2) * metric.imbalance(pair)?.dot(&weyl_delta(pi)))
}

/// An element of the weight-graded model of `g`: the Cartan part or one
/// root space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Toral,
    Root(RootVector),
}

/// `ρ(x, y) = B([x, y], δ)` on weight vectors, normalised so that
/// `[E_α, E_{−α}] = H_α`. The bracket lands in the Cartan part only for
/// opposite roots; `B` pairs the Cartan part trivially with root spaces.
pub fn ricci_form(x: &Weight, y: &Weight, pi: &SimpleSystem) -> Result<Rational> {
    match (x, y) {
        (Weight::Root(a), Weight::Root(b)) => {
            if (a + b).is_zero() {
                ricci_value(a, pi)
            } else {
                Ok(Rational::zero())
            }
        }
        _ => Ok(Rational::zero()),
    }
}

/// Regression over every pair of weights: ρ vanishes unless the weights are
/// opposite roots, is antisymmetric, and `⟨α, δ⟩` agrees with the trace
/// `Σ_{β ∈ R⁺} ⟨α, β⟩`.
pub fn ricci_structure_check(pi: &SimpleSystem, pair: &InnerPair) -> Result<bool> {
    let rs = pair.root_system();
    let mut weights = vec![Weight::Toral];
    weights.extend(rs.roots().iter().cloned().map(Weight::Root));
    for x in &weights {
        for y in &weights {
            let v = ricci_form(x, y, pi)?;
            if v != -ricci_form(y, x, pi)? {
                return Ok(false);
            }
            let opposite = matches!((x, y), (Weight::Root(a), Weight::Root(b)) if (a + b).is_zero());
            if !opposite && !v.is_zero() {
                return Ok(false);
            }
        }
    }
    for alpha in rs.roots() {
        let trace = pi
            .positive_roots()
            .iter()
            .fold(Rational::zero(), |acc, b| acc + alpha.dot(b));
        if trace != ricci_value(alpha, pi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernReport {
    pub delta: RootVector,
    #[serde(with = "rational::serde_rational")]
    pub scalar_curvature: Rational,
    pub delta_nonzero: bool,
    /// Kodaira dimension −∞ follows once δ ≠ 0.
    pub kodaira_flag: bool,
}

pub fn chern_report(metric: &DiagonalMetric, pi: &SimpleSystem, pair: &InnerPair) -> Result<ChernReport> {
    if !metric.is_positive() {
        return Err(Error::Parameter("Chern scalar needs a positive metric".into()));
    }
    let delta = weyl_delta(pi);
    let scalar_curvature = chern_scalar(metric, pi, pair)?;
    let delta_nonzero = !delta.is_zero();
    Ok(ChernReport {
        delta,
        scalar_curvature,
        delta_nonzero,
        kodaira_flag: delta_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balanced::{assemble_system, DiagonalMetric};
    use crate::ordering::find_admissible_ordering;
    use crate::rational::int;

    fn v(c: &[i64]) -> RootVector {
        RootVector::from_ints(c)
    }

    #[test]
    fn a2_delta_and_ricci() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let base = pair.root_system().base();
        assert_eq!(weyl_delta(base), v(&[2, 0, -2]));
        assert_eq!(ricci_value(&v(&[1, 0, -1]), base).unwrap(), int(4));
        assert_eq!(ricci_value(&v(&[-1, 0, 1]), base).unwrap(), int(-4));
        assert!(ricci_value(&v(&[1, 1, 0]), base).is_err());
        let neg = base.negated(pair.root_system()).unwrap();
        assert_eq!(weyl_delta(&neg), -&weyl_delta(base));
    }

    #[test]
    fn a2_ricci_pattern() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let base = pair.root_system().base();
        let (a1, a2) = (base.simples()[0].clone(), base.simples()[1].clone());
        assert_eq!(ricci_form(&Weight::Root(a1.clone()), &Weight::Root(a2), base).unwrap(), int(0));
        assert_eq!(ricci_form(&Weight::Toral, &Weight::Toral, base).unwrap(), int(0));
        assert_eq!(ricci_form(&Weight::Root(a1.clone()), &Weight::Root(-&a1), base).unwrap(), int(2));
        assert!(ricci_structure_check(base, &pair).unwrap());
    }

    #[test]
    fn su21_uniform_metric_has_nonzero_scalar() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let base = pair.root_system().base();
        let g = DiagonalMetric::uniform(base, int(1));
        // imbalance (ε2−ε3)+(ε1−ε3)−(ε1−ε2) = 2ε2 − 2ε3, paired with (2,0,−2)
        assert_eq!(chern_scalar(&g, base, &pair).unwrap(), int(8));
        let t = rational::frac(5, 3);
        assert_eq!(
            chern_scalar(&g.scaled(&t), base, &pair).unwrap(),
            t * chern_scalar(&g, base, &pair).unwrap()
        );
    }

    #[test]
    fn g2_balanced_metric_is_chern_flat() {
        let pair = InnerPair::from_name("g2(2)").unwrap();
        let ord = find_admissible_ordering(&pair).unwrap();
        let sys = assemble_system(ord.simple_system(), &pair).unwrap();
        let m = sys.solve_constructive(&pair).unwrap().balanced().unwrap();
        let report = chern_report(m.metric(), ord.simple_system(), &pair).unwrap();
        assert!(report.scalar_curvature.is_zero());
        assert!(report.delta_nonzero && report.kodaira_flag);
    }
}
