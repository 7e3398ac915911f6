use std::sync::OnceLock;

use balanced_lie::balanced::{assemble_system, DiagonalMetric};
use balanced_lie::certkit::{analyze_at, verify, AnalysisCertificate};
use balanced_lie::chern::{chern_scalar, ricci_value, weyl_delta};
use balanced_lie::ordering::find_admissible_ordering;
use balanced_lie::pairs::{catalog, InnerPair};
use balanced_lie::rational::{frac, int, parse_canonical, to_canonical_string};
use balanced_lie::rootsys::reflect;
use balanced_lie::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_catalog() -> &'static [InnerPair] {
    static PAIRS: OnceLock<Vec<InnerPair>> = OnceLock::new();
    PAIRS.get_or_init(|| catalog(4).unwrap())
}

fn certificates() -> &'static [AnalysisCertificate] {
    static CERTS: OnceLock<Vec<AnalysisCertificate>> = OnceLock::new();
    CERTS.get_or_init(|| small_catalog().iter().map(|p| analyze_at(p, 0).unwrap()).collect())
}

fn pair_index() -> impl Strategy<Value = usize> {
    0..small_catalog().len()
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..50, 1i64..20).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_permute_roots(i in pair_index(), a in 0usize..64, b in 0usize..64) {
        let rs = small_catalog()[i].root_system();
        let roots = rs.roots();
        let (alpha, beta) = (&roots[a % roots.len()], &roots[b % roots.len()]);
        let image = reflect(beta, alpha).unwrap();
        prop_assert!(rs.is_root(&image));
        prop_assert_eq!(image.norm_sq(), beta.norm_sq());
        prop_assert_eq!(&reflect(&image, alpha).unwrap(), beta);
    }

    #[test]
    fn ricci_is_odd(i in pair_index(), a in 0usize..64) {
        let pair = &small_catalog()[i];
        let roots = pair.root_system().roots();
        let alpha = &roots[a % roots.len()];
        let pi = pair.root_system().base();
        prop_assert_eq!(ricci_value(&-alpha, pi).unwrap(), -ricci_value(alpha, pi).unwrap());
    }

    #[test]
    fn delta_flips_with_the_ordering(i in pair_index()) {
        let rs = small_catalog()[i].root_system();
        let neg = rs.base().negated(rs).unwrap();
        prop_assert_eq!(weyl_delta(&neg), -&weyl_delta(rs.base()));
    }

    #[test]
    fn chern_scalar_is_linear(i in pair_index(), g in positive_rational(), t in positive_rational()) {
        let pair = &small_catalog()[i];
        let pi = pair.root_system().base();
        let metric = DiagonalMetric::uniform(pi, g);
        let s = chern_scalar(&metric, pi, pair).unwrap();
        prop_assert_eq!(chern_scalar(&metric.scaled(&t), pi, pair).unwrap(), t * s);
    }

    #[test]
    fn family_members_stay_balanced(i in pair_index(), t in (0i64..40, 1i64..7)) {
        let pair = &small_catalog()[i];
        let ord = find_admissible_ordering(pair).unwrap();
        prop_assume!(!pair.kind().is_so_1_2n());
        let sys = assemble_system(ord.simple_system(), pair).unwrap();
        let m = sys.solve_constructive(pair).unwrap().balanced().unwrap();
        let t = Rational::one() + frac(t.0, t.1);
        let member = sys.family_member(&m, &t, pair).unwrap();
        prop_assert!(member.metric().imbalance(pair).unwrap().is_zero());
        prop_assert!(member.metric().is_positive());
    }

    #[test]
    fn scaled_metrics_verify(i in pair_index(), t in positive_rational()) {
        let mut c = certificates()[i].clone();
        for e in &mut c.metric {
            e.g *= &t;
        }
        // the balanced identity and s = 0 are homogeneous in g
        prop_assert!(verify(&c).is_ok());
    }

    #[test]
    fn single_coefficient_changes_are_caught(i in pair_index(), k in 0usize..200, d in 1i64..5) {
        let mut c = certificates()[i].clone();
        let k = k % c.metric.len();
        c.metric[k].g += int(d);
        prop_assert!(verify(&c).is_err());
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = frac(n, d);
        let s = to_canonical_string(&q);
        prop_assert_eq!(parse_canonical(&s).unwrap(), q);
        prop_assert!(s.contains('/'));
    }
}

#[test]
fn zero_uniform_metric_is_not_positive() {
    let pair = InnerPair::from_name("su(2,1)").unwrap();
    let m = DiagonalMetric::uniform(pair.root_system().base(), Rational::zero());
    assert!(!m.is_positive());
}
