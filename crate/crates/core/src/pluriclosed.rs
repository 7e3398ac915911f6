//! Obstruction to invariant pluriclosed metrics.
//!
//! For an invariant metric write `a_α = h(E_α, E_{−α})`; then `a_α < 0` on
//! compact roots, `a_α > 0` on noncompact ones and `h(H_γ,H_γ) < 0`. The
//! pluriclosed condition gives, for positive `α ≠ β`,
//!
//! ```text
//! h(H_α,H_β) = N²_{α,β}(a_{α+β} − a_α − a_β)
//!            + N²_{α,−β} ε_{α−β}(ε_{α−β} a_{α−β} + a_β − a_α)
//! ```
//!
//! A certificate is a short linear combination of such relations whose left
//! side collapses to a single `h(H_γ,H_γ)` while every term on the right is
//! forced positive. Terms `a_{−γ}` are identified with `a_γ`, and the sign
//! `ε_{α−β}` is folded into the coefficients of `a_α`, `a_β`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::check::{self, CertificateData, CertificateFault, RelationData, SignClaim};
use crate::error::{Error, Result};
use crate::ordering::{AdmissibleOrdering, OrderingMode};
use crate::pairs::InnerPair;
use crate::rational::{self, Rational};
use crate::rootsys::{RootSystem, RootVector, SimpleSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableKind {
    /// `a_γ = h(E_γ, E_{−γ})`
    A,
    /// `h(H_γ, H_γ)`
    Hdiag,
}

/// A variable together with the sign forced on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignVariable {
    pub kind: VariableKind,
    pub root: RootVector,
    /// `+1` or `−1`
    pub sign: i8,
}

impl SignVariable {
    pub fn a(root: RootVector, pair: &InnerPair) -> Result<Self> {
        let sign = if pair.is_compact(&root)? { -1 } else { 1 };
        Ok(Self { kind: VariableKind::A, root, sign })
    }

    pub fn hdiag(root: RootVector) -> Self {
        Self { kind: VariableKind::Hdiag, root, sign: -1 }
    }
}

/// `coefficient · a_root`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub root: RootVector,
    #[serde(with = "rational::serde_rational")]
    pub coefficient: Rational,
}

fn terms_from(map: BTreeMap<RootVector, Rational>) -> Vec<Term> {
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(root, coefficient)| Term { root, coefficient })
        .collect()
}

fn map_from(terms: &[Term]) -> BTreeMap<RootVector, Rational> {
    let mut out = BTreeMap::new();
    for t in terms {
        *out.entry(t.root.clone()).or_insert_with(Rational::zero) += &t.coefficient;
    }
    out
}

/// `h(H_alpha, H_beta) = Σ right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluriclosedRelation {
    pub alpha: RootVector,
    pub beta: RootVector,
    pub right: Vec<Term>,
}

impl PluriclosedRelation {
    pub fn coefficient(&self, root: &RootVector) -> Rational {
        self.right
            .iter()
            .filter(|t| &t.root == root)
            .fold(Rational::zero(), |acc, t| acc + &t.coefficient)
    }

    pub fn is_trivial(&self) -> bool {
        self.right.iter().all(|t| t.coefficient.is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "generic")]
    Generic,
    #[serde(rename = "so_1_2n")]
    So12n,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedRoot {
    pub name: String,
    pub root: RootVector,
}

/// `h(H_gamma, H_gamma) = Σ right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub gamma: RootVector,
    pub right: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluriclosedCertificate {
    pub branch: Branch,
    pub simple_roots: Vec<RootVector>,
    pub roots: Vec<NamedRoot>,
    pub relations: Vec<PluriclosedRelation>,
    #[serde(with = "rational::serde_rational_vec")]
    pub combination: Vec<Rational>,
    pub conclusion: Conclusion,
    pub sign_constraints: Vec<SignVariable>,
}

/// `+1` if `gamma` is positive for `pi`, else `−1`.
pub fn epsilon(gamma: &RootVector, pi: &SimpleSystem) -> Result<i8> {
    Ok(if pi.is_positive(gamma)? { 1 } else { -1 })
}

fn require_positive(rs: &RootSystem, pi: &SimpleSystem, r: &RootVector) -> Result<()> {
    if !rs.is_root(r) {
        return Err(Error::NotARoot(r.clone()));
    }
    if !pi.is_positive(r)? {
        return Err(Error::InvalidRelation(format!("{r} is not positive for the ordering")));
    }
    Ok(())
}

/// The pluriclosed relation for the positive pair `(alpha, beta)`.
pub fn instantiate_relation(
    alpha: &RootVector,
    beta: &RootVector,
    pi: &SimpleSystem,
    pair: &InnerPair,
) -> Result<PluriclosedRelation> {
    let rs = pair.root_system();
    require_positive(rs, pi, alpha)?;
    require_positive(rs, pi, beta)?;
    if alpha == beta {
        return Err(Error::InvalidRelation(format!("diagonal pair ({alpha}, {alpha})")));
    }
    let mut right: BTreeMap<RootVector, Rational> = BTreeMap::new();
    let mut add = |r: &RootVector, c: Rational| {
        *right.entry(r.clone()).or_insert_with(Rational::zero) += c;
    };
    let sum = alpha + beta;
    if rs.is_root(&sum) {
        let n2 = rs.n_squared(alpha, beta)?;
        add(&sum, n2.clone());
        add(alpha, -n2.clone());
        add(beta, -n2);
    }
    let diff = alpha - beta;
    if rs.is_root(&diff) {
        let n2 = rs.n_squared(alpha, &-beta)?;
        let eps = epsilon(&diff, pi)?;
        let positive_rep = if eps > 0 { diff } else { -&diff };
        let eps = rational::int(eps.into());
        // ε·(ε a_{α−β} + a_β − a_α) with ε² = 1
        add(&positive_rep, n2.clone());
        add(beta, &eps * &n2);
        add(alpha, -(eps * n2));
    }
    Ok(PluriclosedRelation {
        alpha: alpha.clone(),
        beta: beta.clone(),
        right: terms_from(right),
    })
}

/// For simple roots `ψ1 ≠ ψ2`, not both `ψ1 + 2ψ2` and `ψ2 + 2ψ1` are roots.
pub fn double_sums_exclusive(rs: &RootSystem, pi: &SimpleSystem) -> bool {
    let s = pi.simples();
    s.iter().enumerate().all(|(i, a)| {
        s.iter().skip(i + 1).all(|b| {
            let two = rational::int(2);
            !(rs.is_root(&b.add_scaled(&two, a)) && rs.is_root(&a.add_scaled(&two, b)))
        })
    })
}

/// `(ψ1, ψ2, φ)` with `ψ1, ψ2 ∈ Π_nc`, `φ = ψ1 + ψ2 ∈ R_k` and
/// `φ + ψ1 ∉ R`. The first such pair in simple-root order.
pub fn find_noncompact_interacting_pair(
    ordering: &AdmissibleOrdering,
    pair: &InnerPair,
) -> Result<(RootVector, RootVector, RootVector)> {
    if ordering.mode() != OrderingMode::LemmaL1 {
        return Err(Error::Parameter("interacting pair needs an ordering with paired Π_nc".into()));
    }
    let rs = pair.root_system();
    let nc = ordering.pi_nc();
    for (i, a) in nc.iter().enumerate() {
        for b in nc.iter().skip(i + 1) {
            let phi = a + b;
            if !rs.is_root(&phi) {
                continue;
            }
            if !pair.is_compact(&phi)? {
                return Err(Error::Invariant(format!("{a} + {b} is a noncompact root")));
            }
            for (p1, p2) in [(a, b), (b, a)] {
                if !rs.is_root(&(&phi + p1)) {
                    return Ok((p1.clone(), p2.clone(), phi));
                }
            }
            return Err(Error::Invariant(format!(
                "both {a} + 2{b} and {b} + 2{a} are roots"
            )));
        }
    }
    Err(Error::Invariant(format!(
        "{}: no two noncompact simple roots sum to a root",
        pair.name()
    )))
}

fn named(name: &str, root: &RootVector) -> NamedRoot {
    NamedRoot { name: name.into(), root: root.clone() }
}

pub fn build_certificate(ordering: &AdmissibleOrdering, pair: &InnerPair) -> Result<PluriclosedCertificate> {
    let pi = ordering.simple_system();
    let (branch, roots, relations, gamma) = match ordering.mode() {
        OrderingMode::LemmaL1 => {
            let (psi1, psi2, phi) = find_noncompact_interacting_pair(ordering, pair)?;
            let first = instantiate_relation(&psi1, &psi2, pi, pair)?;
            let second = instantiate_relation(&phi, &psi1, pi, pair)?;
            let roots = vec![named("psi1", &psi1), named("psi2", &psi2), named("phi", &phi)];
            (Branch::Generic, roots, vec![first, second], psi1)
        }
        OrderingMode::So12nSpecial => {
            let n = pair.rank();
            let e1 = RootVector::unit(n, 0);
            let e2 = RootVector::unit(n, 1);
            let phi1 = &e1 + &e2;
            let phi2 = &e1 - &e2;
            let first = instantiate_relation(&e1, &e2, pi, pair)?;
            let second = instantiate_relation(&phi1, &e1, pi, pair)?;
            let roots = vec![
                named("psi1", &e1),
                named("psi2", &e2),
                named("phi1", &phi1),
                named("phi2", &phi2),
            ];
            (Branch::So12n, roots, vec![first, second], e1)
        }
    };
    // h(H_φ,H_ψ1) − h(H_ψ1,H_ψ2) = h(H_ψ1,H_ψ1) since φ = ψ1 + ψ2
    let combination = vec![rational::int(-1), rational::int(1)];
    let mut right: BTreeMap<RootVector, Rational> = BTreeMap::new();
    for (c, rel) in combination.iter().zip(&relations) {
        for t in &rel.right {
            *right.entry(t.root.clone()).or_insert_with(Rational::zero) += c * &t.coefficient;
        }
    }
    let right = terms_from(right);
    let mut sign_constraints = vec![SignVariable::hdiag(gamma.clone())];
    for t in &right {
        let var = SignVariable::a(t.root.clone(), pair)?;
        if !(&t.coefficient * rational::int(var.sign.into())).is_positive() {
            return Err(Error::Invariant(format!(
                "{}: term a_{} has the wrong sign in the conclusion",
                pair.name(),
                t.root
            )));
        }
        sign_constraints.push(var);
    }
    Ok(PluriclosedCertificate {
        branch,
        simple_roots: pi.simples().to_vec(),
        roots,
        relations,
        combination,
        conclusion: Conclusion { gamma, right },
        sign_constraints,
    })
}

/// Re-derives every relation from root strings, checks the elimination and
/// the sign pattern. Uses only the root system and the grading.
pub fn verify_certificate(cert: &PluriclosedCertificate, pair: &InnerPair) -> Result<(), CertificateFault> {
    let rights: Vec<_> = cert.relations.iter().map(|r| map_from(&r.right)).collect();
    let conclusion = map_from(&cert.conclusion.right);
    let data = CertificateData {
        simple_roots: &cert.simple_roots,
        relations: cert
            .relations
            .iter()
            .zip(&rights)
            .map(|(r, right)| RelationData { alpha: &r.alpha, beta: &r.beta, right })
            .collect(),
        combination: &cert.combination,
        gamma: &cert.conclusion.gamma,
        conclusion: &conclusion,
        signs: cert
            .sign_constraints
            .iter()
            .map(|s| SignClaim {
                hdiag: s.kind == VariableKind::Hdiag,
                root: &s.root,
                sign: s.sign,
            })
            .collect(),
    };
    check::check_pluriclosed(pair, &data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::find_admissible_ordering;
    use crate::rational::int;

    fn cert_for(name: &str) -> (InnerPair, PluriclosedCertificate) {
        let pair = InnerPair::from_name(name).unwrap();
        let ord = find_admissible_ordering(&pair).unwrap();
        let cert = build_certificate(&ord, &pair).unwrap();
        (pair, cert)
    }

    #[test]
    fn epsilon_on_simple_roots() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let base = pair.root_system().base();
        for s in base.simples() {
            assert_eq!(epsilon(s, base).unwrap(), 1);
            assert_eq!(epsilon(&-s, base).unwrap(), -1);
        }
    }

    #[test]
    fn orthogonal_pair_gives_trivial_relation() {
        let pair = InnerPair::from_name("so(3,2)").unwrap();
        let base = pair.root_system().base();
        // ε1+ε2 and ε1−ε2 in B2: sum 2ε1 and difference 2ε2 are not roots
        let rel = instantiate_relation(
            &RootVector::from_ints(&[1, 1]),
            &RootVector::from_ints(&[1, -1]),
            base,
            &pair,
        )
        .unwrap();
        assert!(rel.is_trivial());
    }

    #[test]
    fn so14_relations() {
        let pair = InnerPair::from_name("so(1,4)").unwrap();
        let base = pair.root_system().base();
        let (psi1, psi2) = (RootVector::from_ints(&[1, 0]), RootVector::from_ints(&[0, 1]));
        let (phi1, phi2) = (&psi1 + &psi2, &psi1 - &psi2);
        let rel = instantiate_relation(&psi1, &psi2, base, &pair).unwrap();
        // N²(a_φ1 − a_ψ1 − a_ψ2) + N²(a_φ2 + a_ψ2 − a_ψ1), all N² = 1
        assert_eq!(rel.coefficient(&phi1), int(1));
        assert_eq!(rel.coefficient(&phi2), int(1));
        assert_eq!(rel.coefficient(&psi1), int(-2));
        assert_eq!(rel.coefficient(&psi2), int(0));

        let rs = pair.root_system();
        assert!(!rs.is_root(&(&phi1 + &psi1)));
        let rel = instantiate_relation(&phi1, &psi1, base, &pair).unwrap();
        assert_eq!(rel.right.len(), 3);
        assert_eq!(rel.coefficient(&psi2), int(1));
        assert_eq!(rel.coefficient(&psi1), int(1));
        assert_eq!(rel.coefficient(&phi1), int(-1));

        assert_eq!(rs.n_squared(&psi1, &psi2).unwrap(), rs.n_squared(&psi1, &-&psi2).unwrap());
        assert_eq!(rs.n_squared(&phi1, &-&psi1).unwrap(), rs.n_squared(&psi1, &psi2).unwrap());
    }

    #[test]
    fn diagonal_pair_rejected() {
        let pair = InnerPair::from_name("su(2,1)").unwrap();
        let base = pair.root_system().base();
        let a = &base.simples()[0];
        assert!(instantiate_relation(a, a, base, &pair).is_err());
        assert!(instantiate_relation(&-a, &base.simples()[1], base, &pair).is_err());
    }

    #[test]
    fn so14_certificate() {
        let (pair, cert) = cert_for("so(1,4)");
        assert_eq!(cert.branch, Branch::So12n);
        let get = |name: &str| cert.roots.iter().find(|r| r.name == name).unwrap().root.clone();
        let expected: BTreeMap<_, _> = [
            (get("psi2"), int(1)),
            (get("psi1"), int(3)),
            (get("phi1"), int(-2)),
            (get("phi2"), int(-1)),
        ]
        .into();
        assert_eq!(map_from(&cert.conclusion.right), expected);
        assert_eq!(cert.conclusion.gamma, get("psi1"));
        verify_certificate(&cert, &pair).unwrap();
    }

    #[test]
    fn g2_certificate() {
        let (pair, cert) = cert_for("g2(2)");
        assert_eq!(cert.branch, Branch::Generic);
        let rs = pair.root_system();
        let get = |name: &str| cert.roots.iter().find(|r| r.name == name).unwrap().root.clone();
        let (psi1, psi2, phi) = (get("psi1"), get("psi2"), get("phi"));
        assert_eq!(phi, rs.base().simples()[0]);
        assert!(!rs.is_root(&(&phi + &psi1)));
        let n = rs.n_squared(&psi1, &psi2).unwrap() + rs.n_squared(&phi, &-&psi1).unwrap();
        let expected: BTreeMap<_, _> = [(psi1.clone(), n.clone()), (psi2, n.clone()), (phi, -n)].into();
        assert_eq!(map_from(&cert.conclusion.right), expected);
        assert_eq!(cert.conclusion.gamma, psi1);
        verify_certificate(&cert, &pair).unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let (pair, cert) = cert_for("su(3,2)");
        verify_certificate(&cert, &pair).unwrap();

        let mut bad = cert.clone();
        bad.combination[0] += int(1);
        assert_eq!(verify_certificate(&bad, &pair).unwrap_err().code(), "elimination failed");

        let mut bad = cert.clone();
        bad.sign_constraints[1].sign = -bad.sign_constraints[1].sign;
        assert_eq!(verify_certificate(&bad, &pair).unwrap_err().code(), "sign pattern violated");

        let mut bad = cert.clone();
        bad.relations[0].right[0].coefficient += int(1);
        assert_eq!(verify_certificate(&bad, &pair).unwrap_err().code(), "relation mismatch");

        let mut bad = cert.clone();
        bad.conclusion.right[0].coefficient += int(1);
        assert_eq!(verify_certificate(&bad, &pair).unwrap_err().code(), "conclusion mismatch");

        let mut bad = cert.clone();
        bad.simple_roots.swap(0, 1);
        bad.simple_roots[0] = -&bad.simple_roots[0];
        assert!(verify_certificate(&bad, &pair).is_err());
    }

    #[test]
    fn double_sums_on_standard_bases() {
        for pair in crate::pairs::catalog(8).unwrap() {
            let rs = pair.root_system();
            assert!(double_sums_exclusive(rs, rs.base()), "{}", pair.name());
        }
    }
}
