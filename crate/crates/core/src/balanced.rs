//! Balanced metrics.
//!
//! A diagonal invariant metric is given by one coefficient `g_α = 1/h_α² > 0`
//! per positive root. It is balanced exactly when
//!
//! ```text
//!     Σ_{α ∈ R_k⁺} g_α α  =  Σ_{α ∈ R_p⁺} g_α α
//! ```
//!
//! as vectors. The toral part of the metric never enters.
//!
//! Written over a simple system Π = Π_c ∪ Π_nc this becomes one relation per
//! simple root, giving the coefficient of each simple root in terms of the
//! coefficients of the non-simple positive roots:
//!
//! ```text
//!     g_j = Σ_{R_p⁺ \ Π} g_α n_j(α) − Σ_{A_k} g_α n_j(α)          (φ_j ∈ Π_c)
//!     h_j = Σ_{R_k⁺ \ Π} g_α m_j(α) − Σ_{R_p⁺ \ Π} g_α m_j(α)     (ψ_j ∈ Π_nc)
//! ```
//!
//! where Σ_k are the compact non-simple positive roots in the span of Π_nc and
//! A_k the remaining compact non-simple positive roots.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordering::{decompose_split, partition, AdmissibleOrdering, Coordinates, OrderingMode};
use crate::pairs::InnerPair;
use crate::par::{self, Execution};
use crate::rational::{self, Rational};
use crate::rootsys::{RootVector, SimpleSystem};

/// Coefficients `g_α` indexed by positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMetric {
    coefficients: BTreeMap<RootVector, Rational>,
}

impl DiagonalMetric {
    pub fn new(coefficients: BTreeMap<RootVector, Rational>) -> Self {
        Self { coefficients }
    }

    /// `g ≡ value` on the positive roots of `pi`.
    pub fn uniform(pi: &SimpleSystem, value: Rational) -> Self {
        Self::new(
            pi.positive_roots()
                .iter()
                .map(|r| (r.clone(), value.clone()))
                .collect(),
        )
    }

    pub fn get(&self, root: &RootVector) -> Option<&Rational> {
        self.coefficients.get(root)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RootVector, &Rational)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn min_coefficient(&self) -> Option<&Rational> {
        self.coefficients.values().min()
    }

    pub fn is_positive(&self) -> bool {
        self.coefficients.values().all(Signed::is_positive)
    }

    pub fn scaled(&self, t: &Rational) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .map(|(r, g)| (r.clone(), g * t))
                .collect(),
        )
    }

    /// `Σ_{R_p⁺} g_α α − Σ_{R_k⁺} g_α α`; zero iff the metric is balanced.
    pub fn imbalance(&self, pair: &InnerPair) -> Result<RootVector> {
        let mut acc = RootVector::zero(pair.root_system().ambient_dim());
        for (root, g) in &self.coefficients {
            let signed = if pair.is_compact(root)? { -g.clone() } else { g.clone() };
            acc.add_assign_scaled(&signed, root);
        }
        Ok(acc)
    }
}

/// The balanced identity as an exact vector equality. Independent of any
/// solver; usable on hand-made inputs.
pub fn verify_balanced(metric: &DiagonalMetric, pair: &InnerPair) -> Result<bool> {
    Ok(metric.imbalance(pair)?.is_zero())
}

/// A metric that has been checked to be strictly positive and balanced for
/// its ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedMetric {
    metric: DiagonalMetric,
    ordering: SimpleSystem,
}

impl BalancedMetric {
    /// Re-evaluates positivity, domain and the identity; never trusts the
    /// caller.
    pub fn certify(metric: DiagonalMetric, ordering: SimpleSystem, pair: &InnerPair) -> Result<Self> {
        let domain_ok = metric.len() == ordering.positive_roots().len()
            && ordering.positive_roots().iter().all(|r| metric.get(r).is_some());
        if !domain_ok {
            return Err(Error::Invariant(format!(
                "{}: metric is not indexed by the positive roots of its ordering",
                pair.name()
            )));
        }
        if !metric.is_positive() {
            return Err(Error::Invariant(format!("{}: metric has a non-positive coefficient", pair.name())));
        }
        if !verify_balanced(&metric, pair)? {
            return Err(Error::Invariant(format!("{}: balanced identity fails", pair.name())));
        }
        Ok(Self { metric, ordering })
    }

    pub fn metric(&self) -> &DiagonalMetric {
        &self.metric
    }

    pub fn ordering(&self) -> &SimpleSystem {
        &self.ordering
    }

    pub fn into_parts(self) -> (DiagonalMetric, SimpleSystem) {
        (self.metric, self.ordering)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimpleKind {
    Compact,
    Noncompact,
}

/// One relation: the coefficient of the simple root `target` equals
/// `Σ plus − Σ minus`, each term being `coefficient · g_root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub kind: SimpleKind,
    /// index into Π_c or Π_nc
    pub index: usize,
    pub target: RootVector,
    pub plus: Vec<(RootVector, i64)>,
    pub minus: Vec<(RootVector, i64)>,
}

impl Relation {
    pub fn evaluate(&self, g: &BTreeMap<RootVector, Rational>) -> Rational {
        let sum = |terms: &[(RootVector, i64)]| {
            terms.iter().fold(Rational::zero(), |acc, (r, c)| {
                acc + g.get(r).cloned().unwrap_or_else(Rational::zero) * rational::int(*c)
            })
        };
        sum(&self.plus) - sum(&self.minus)
    }

    pub fn label(&self) -> String {
        match self.kind {
            SimpleKind::Compact => format!("g_{} (φ = {})", self.index + 1, self.target),
            SimpleKind::Noncompact => format!("h_{} (ψ = {})", self.index + 1, self.target),
        }
    }
}

/// The relations for one ordering, with the Σ_k / A_k split.
#[derive(Debug, Clone)]
pub struct BalancedSystem {
    ordering: SimpleSystem,
    phi: Vec<RootVector>,
    psi: Vec<RootVector>,
    sigma_k: Vec<RootVector>,
    a_k: Vec<RootVector>,
    noncompact_nonsimple: Vec<RootVector>,
    coords: BTreeMap<RootVector, Coordinates>,
    relations: Vec<Relation>,
}

pub fn assemble_system(ordering: &SimpleSystem, pair: &InnerPair) -> Result<BalancedSystem> {
    let (c_idx, nc_idx) = partition(pair, ordering)?;
    let simples = ordering.simples();
    let phi: Vec<_> = c_idx.iter().map(|&i| simples[i].clone()).collect();
    let psi: Vec<_> = nc_idx.iter().map(|&i| simples[i].clone()).collect();

    let mut coords = BTreeMap::new();
    let mut sigma_k = Vec::new();
    let mut a_k = Vec::new();
    let mut noncompact_nonsimple = Vec::new();
    for root in ordering.positive_roots() {
        let c = decompose_split(ordering, &c_idx, &nc_idx, root)?;
        if !ordering.is_simple(root) {
            if pair.is_compact(root)? {
                if c.compact.iter().all(|&n| n == 0) {
                    sigma_k.push(root.clone());
                } else {
                    a_k.push(root.clone());
                }
            } else {
                noncompact_nonsimple.push(root.clone());
            }
        }
        coords.insert(root.clone(), c);
    }

    let terms = |set: &[RootVector], pick: &dyn Fn(&Coordinates) -> i64| -> Vec<(RootVector, i64)> {
        set.iter()
            .filter_map(|r| {
                let c = pick(&coords[r]);
                (c != 0).then(|| (r.clone(), c))
            })
            .collect()
    };
    let compact_nonsimple: Vec<_> = {
        let mut v: Vec<_> = sigma_k.iter().chain(&a_k).cloned().collect();
        v.sort();
        v
    };
    let mut relations = Vec::with_capacity(simples.len());
    for (j, target) in phi.iter().enumerate() {
        relations.push(Relation {
            kind: SimpleKind::Compact,
            index: j,
            target: target.clone(),
            plus: terms(&noncompact_nonsimple, &|c| c.compact[j]),
            minus: terms(&a_k, &|c| c.compact[j]),
        });
    }
    for (j, target) in psi.iter().enumerate() {
        relations.push(Relation {
            kind: SimpleKind::Noncompact,
            index: j,
            target: target.clone(),
            plus: terms(&compact_nonsimple, &|c| c.noncompact[j]),
            minus: terms(&noncompact_nonsimple, &|c| c.noncompact[j]),
        });
    }
    Ok(BalancedSystem {
        ordering: ordering.clone(),
        phi,
        psi,
        sigma_k,
        a_k,
        noncompact_nonsimple,
        coords,
        relations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InfeasibleReason {
    /// The relation has no positive term at all, so its right-hand side is
    /// non-positive for every positive choice of the other coefficients.
    ForcedNonPositive,
    /// Positive terms exist but none can be raised by the constructive
    /// scheme (they all lie in A_k, which it pins to 1).
    NoAdjustableWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infeasibility {
    pub relation: Relation,
    pub reason: InfeasibleReason,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let why = match self.reason {
            InfeasibleReason::ForcedNonPositive => "right-hand side is forced non-positive",
            InfeasibleReason::NoAdjustableWitness => "no adjustable witness root",
        };
        write!(f, "relation {}: {why}", self.relation.label())
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Balanced(BalancedMetric),
    Infeasible(Infeasibility),
}

impl SolveOutcome {
    pub fn balanced(self) -> Option<BalancedMetric> {
        match self {
            SolveOutcome::Balanced(m) => Some(m),
            SolveOutcome::Infeasible(_) => None,
        }
    }
}

impl BalancedSystem {
    pub fn ordering(&self) -> &SimpleSystem {
        &self.ordering
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn sigma_k(&self) -> &[RootVector] {
        &self.sigma_k
    }

    pub fn a_k(&self) -> &[RootVector] {
        &self.a_k
    }

    pub fn pi_c(&self) -> &[RootVector] {
        &self.phi
    }

    pub fn pi_nc(&self) -> &[RootVector] {
        &self.psi
    }

    /// One unknown per positive root.
    pub fn unknown_count(&self) -> usize {
        self.coords.len()
    }

    fn coordinate(&self, root: &RootVector, rel: &Relation) -> i64 {
        let c = &self.coords[root];
        match rel.kind {
            SimpleKind::Compact => c.compact[rel.index],
            SimpleKind::Noncompact => c.noncompact[rel.index],
        }
    }

    /// Raise `g[witness]` by the least integer making `rel` evaluate to at
    /// least 1.
    fn bump(&self, g: &mut BTreeMap<RootVector, Rational>, rel: &Relation, witness: &RootVector) {
        let value = rel.evaluate(g);
        if value >= Rational::one() {
            return;
        }
        let per_unit = rational::int(self.coordinate(witness, rel));
        let step = ((Rational::one() - value) / per_unit).ceil();
        *g.get_mut(witness).expect("witness has a coefficient") += step;
    }

    fn close(&self, g: BTreeMap<RootVector, Rational>, pair: &InnerPair) -> Result<BalancedMetric> {
        let mut g = g;
        for rel in &self.relations {
            let value = rel.evaluate(&g);
            g.insert(rel.target.clone(), value);
        }
        BalancedMetric::certify(DiagonalMetric::new(g), self.ordering.clone(), pair)
    }

    /// Constructive positive solution: pin A_k to 1, raise noncompact
    /// non-simple coefficients until every `g_j ≥ 1`, then raise Σ_k
    /// coefficients until every `h_j ≥ 1`. The result is re-verified.
    pub fn solve_constructive(&self, pair: &InnerPair) -> Result<SolveOutcome> {
        let mut g: BTreeMap<RootVector, Rational> = self
            .sigma_k
            .iter()
            .chain(&self.a_k)
            .chain(&self.noncompact_nonsimple)
            .map(|r| (r.clone(), Rational::one()))
            .collect();

        let (compact_rels, noncompact_rels) = self.relations.split_at(self.phi.len());
        // Raising a noncompact coefficient never lowers any g_j, so a few
        // passes reach the fixpoint.
        for _ in 0..=self.relations.len() {
            let mut changed = false;
            for rel in compact_rels {
                if rel.evaluate(&g) >= Rational::one() {
                    continue;
                }
                let Some((witness, _)) = rel.plus.first() else {
                    return Ok(SolveOutcome::Infeasible(Infeasibility {
                        relation: rel.clone(),
                        reason: InfeasibleReason::ForcedNonPositive,
                    }));
                };
                self.bump(&mut g, rel, witness);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        for rel in noncompact_rels {
            if rel.evaluate(&g) >= Rational::one() {
                continue;
            }
            let witness = rel
                .plus
                .iter()
                .map(|(r, _)| r)
                .find(|r| self.sigma_k.binary_search(r).is_ok());
            let Some(witness) = witness else {
                let reason = if rel.plus.is_empty() {
                    InfeasibleReason::ForcedNonPositive
                } else {
                    InfeasibleReason::NoAdjustableWitness
                };
                return Ok(SolveOutcome::Infeasible(Infeasibility {
                    relation: rel.clone(),
                    reason,
                }));
            };
            self.bump(&mut g, rel, &witness.clone());
        }
        if compact_rels.iter().any(|rel| rel.evaluate(&g) < Rational::one()) {
            return Err(Error::Invariant("raising Σ_k coefficients changed a g_j".into()));
        }
        self.close(g, pair).map(SolveOutcome::Balanced)
    }

    /// Another member of the solution family: multiply the Σ_k coefficients
    /// by `t ≥ 1` and recompute the `h_j`.
    pub fn family_member(
        &self,
        metric: &BalancedMetric,
        t: &Rational,
        pair: &InnerPair,
    ) -> Result<BalancedMetric> {
        if t < &Rational::one() {
            return Err(Error::Parameter(format!("family parameter {t} must be at least 1")));
        }
        let mut g: BTreeMap<RootVector, Rational> = metric
            .metric()
            .iter()
            .filter(|(r, _)| !self.ordering.is_simple(r))
            .map(|(r, v)| (r.clone(), v.clone()))
            .collect();
        for r in &self.sigma_k {
            if let Some(v) = g.get_mut(r) {
                *v *= t;
            }
        }
        self.close(g, pair)
    }
}

/// The balanced metric used by the pipeline: the constructive scheme for
/// paired orderings, the closed form with `(x, y) = (1, 2)` for `so(1,2n)`.
pub fn solve_for(ordering: &AdmissibleOrdering, pair: &InnerPair) -> Result<BalancedMetric> {
    match ordering.mode() {
        OrderingMode::So12nSpecial => so1_2n_metric(pair, &rational::int(1), &rational::int(2)),
        OrderingMode::LemmaL1 => {
            match assemble_system(ordering.simple_system(), pair)?.solve_constructive(pair)? {
                SolveOutcome::Balanced(m) => Ok(m),
                SolveOutcome::Infeasible(why) => Err(Error::Invariant(format!("{}: {why}", pair.name()))),
            }
        }
    }
}

/// The closed-form balanced metric on `so(1,2n)` with its standard base:
/// `g = x` on `ε_i − ε_j`, `g = y` on `ε_i + ε_j`, and `g_{ε_i} = z_i` read
/// off from the identity. Positive exactly when `y > x > 0`.
pub fn solve_so1_2n(n: usize, x: &Rational, y: &Rational) -> Result<BalancedMetric> {
    if n < 2 {
        return Err(Error::Parameter(format!("so(1,2n) needs n ≥ 2, got {n}")));
    }
    let pair = InnerPair::so_1_2n_any(n)?;
    so1_2n_metric(&pair, x, y)
}

pub(crate) fn so1_2n_metric(pair: &InnerPair, x: &Rational, y: &Rational) -> Result<BalancedMetric> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::Parameter("x and y must be positive".into()));
    }
    let rs = pair.root_system();
    let n = rs.rank();
    let base = rs.base().clone();
    let mut g = BTreeMap::new();
    let mut compact_sum = RootVector::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let ei = RootVector::unit(n, i);
            let ej = RootVector::unit(n, j);
            let minus = &ei - &ej;
            let plus = &ei + &ej;
            compact_sum.add_assign_scaled(x, &minus);
            compact_sum.add_assign_scaled(y, &plus);
            g.insert(minus, x.clone());
            g.insert(plus, y.clone());
        }
    }
    for (i, z) in compact_sum.coords().iter().enumerate() {
        if !z.is_positive() {
            return Err(Error::NonPositiveCoefficient {
                index: i + 1,
                value: rational::to_canonical_string(z),
            });
        }
        g.insert(RootVector::unit(n, i), z.clone());
    }
    BalancedMetric::certify(DiagonalMetric::new(g), base, pair)
}

/// All simple systems for which `g ≡ 1` is balanced. Enumerates every Weyl
/// chamber, so it refuses ranks above `exhaustive_rank_bound`.
pub fn scan_binvariant(
    pair: &InnerPair,
    exhaustive_rank_bound: usize,
    exec: Execution,
) -> Result<Vec<SimpleSystem>> {
    if pair.rank() > exhaustive_rank_bound {
        return Err(Error::RankAboveBound {
            rank: pair.rank(),
            bound: exhaustive_rank_bound,
        });
    }
    let chambers = pair.root_system().chambers(usize::MAX)?;
    let hits = par::map(exec, &chambers, |pi| {
        verify_balanced(&DiagonalMetric::uniform(pi, Rational::one()), pair)
    });
    let mut out = Vec::new();
    for (pi, hit) in chambers.into_iter().zip(hits) {
        if hit? {
            out.push(pi);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::find_admissible_ordering;
    use crate::rational::int;

    fn v(c: &[i64]) -> RootVector {
        RootVector::from_ints(c)
    }

    #[test]
    fn su21_standard_is_infeasible() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let sys = assemble_system(pair.root_system().base(), &pair).unwrap();
        assert!(sys.sigma_k().is_empty());
        let h1 = sys.relations().iter().find(|r| r.kind == SimpleKind::Noncompact).unwrap();
        assert!(h1.plus.is_empty());
        match sys.solve_constructive(&pair).unwrap() {
            SolveOutcome::Infeasible(inf) => {
                assert_eq!(inf.reason, InfeasibleReason::ForcedNonPositive);
                assert_eq!(inf.relation.target, v(&[0, 1, -1]));
            }
            SolveOutcome::Balanced(_) => panic!("standard su(2,1) ordering must be infeasible"),
        }
    }

    #[test]
    fn g2_system_shape_and_solution() {
        let pair = InnerPair::from_name("g2(2)").unwrap();
        let ord = find_admissible_ordering(&pair).unwrap();
        let sys = assemble_system(ord.simple_system(), &pair).unwrap();
        assert_eq!(sys.relations().len(), 2);
        assert_eq!(sys.unknown_count(), 6);
        let metric = sys.solve_constructive(&pair).unwrap().balanced().unwrap();
        assert!(metric.metric().is_positive());
        assert!(verify_balanced(metric.metric(), &pair).unwrap());
    }

    #[test]
    fn uniform_metric_examples() {
        let su12 = InnerPair::from_name("su(1,2)").unwrap();
        let rs = su12.root_system();
        // positives {ε2−ε1, ε2−ε3, ε1−ε3}: simple roots ε2−ε1, ε1−ε3
        let pi = SimpleSystem::new(rs, vec![v(&[-1, 1, 0]), v(&[1, 0, -1])]).unwrap();
        assert!(verify_balanced(&DiagonalMetric::uniform(&pi, int(1)), &su12).unwrap());

        let su21 = InnerPair::from_name("su(2,1)").unwrap();
        let std = su21.root_system().base();
        assert!(!verify_balanced(&DiagonalMetric::uniform(std, int(1)), &su21).unwrap());
    }

    #[test]
    fn so1_2n_closed_form() {
        let m = solve_so1_2n(2, &int(1), &int(2)).unwrap();
        assert_eq!(m.metric().get(&v(&[1, 0])), Some(&int(3)));
        assert_eq!(m.metric().get(&v(&[0, 1])), Some(&int(1)));
        match solve_so1_2n(2, &int(1), &int(1)) {
            Err(Error::NonPositiveCoefficient { index, .. }) => assert_eq!(index, 2),
            other => panic!("expected rejection, got {other:?}"),
        }
        // the inequality printed with the formula (x > y) is rejected
        assert!(solve_so1_2n(3, &int(2), &int(1)).is_err());
        assert!(solve_so1_2n(3, &int(1), &int(2)).is_ok());
    }

    #[test]
    fn scan_refuses_above_bound() {
        let pair = InnerPair::from_name("su(3,2)").unwrap();
        assert!(matches!(
            scan_binvariant(&pair, 2, Execution::Sequential),
            Err(Error::RankAboveBound { rank: 4, bound: 2 })
        ));
    }

    #[test]
    fn su12_scan_contains_e2_e1_e3_chamber() {
        let pair = InnerPair::from_name("su(1,2)").unwrap();
        let hits = scan_binvariant(&pair, 4, Execution::Sequential).unwrap();
        let chamber = vec![v(&[-1, 1, 0]), v(&[1, 0, -1])];
        assert!(hits.iter().any(|pi| pi.key() == {
            let mut k = chamber.clone();
            k.sort();
            k
        }));
        for pi in &hits {
            assert!(verify_balanced(&DiagonalMetric::uniform(pi, int(1)), &pair).unwrap());
        }
    }

    #[test]
    fn family_member_stays_balanced() {
        let pair = InnerPair::from_name("su(3,2)").unwrap();
        let ord = find_admissible_ordering(&pair).unwrap();
        let sys = assemble_system(ord.simple_system(), &pair).unwrap();
        let m = sys.solve_constructive(&pair).unwrap().balanced().unwrap();
        let m5 = sys.family_member(&m, &int(5), &pair).unwrap();
        assert!(verify_balanced(m5.metric(), &pair).unwrap());
        assert!(sys.family_member(&m, &rational::frac(1, 2), &pair).is_err());
    }
}
