use balanced_lie::balanced::{assemble_system, solve_for, verify_balanced, SolveOutcome};
use balanced_lie::certkit::{analyze_at, verify, AnalysisCertificate};
use balanced_lie::chern::{chern_report, ricci_structure_check};
use balanced_lie::ordering::{find_admissible_ordering, satisfies_l1_property, OrderingMode};
use balanced_lie::pairs::catalog;
use balanced_lie::pluriclosed::{build_certificate, double_sums_exclusive, verify_certificate, Branch};
use num_traits::Zero;

#[test]
fn full_catalog_pipeline() {
    let pairs = catalog(8).unwrap();
    assert_eq!(pairs.len(), 61);
    for pair in &pairs {
        let name = pair.name();
        let ord = find_admissible_ordering(pair).unwrap();
        match ord.mode() {
            OrderingMode::LemmaL1 => assert!(satisfies_l1_property(ord.simple_system(), pair).unwrap(), "{name}"),
            OrderingMode::So12nSpecial => assert!(pair.kind().is_so_1_2n(), "{name}"),
        }
        let m = solve_for(&ord, pair).unwrap();
        assert!(m.metric().is_positive(), "{name}");
        assert!(verify_balanced(m.metric(), pair).unwrap(), "{name}");

        let cert = build_certificate(&ord, pair).unwrap();
        assert_eq!(cert.branch == Branch::So12n, pair.kind().is_so_1_2n(), "{name}");
        verify_certificate(&cert, pair).unwrap();

        let report = chern_report(m.metric(), ord.simple_system(), pair).unwrap();
        assert!(report.scalar_curvature.is_zero() && report.delta_nonzero, "{name}");
        assert!(double_sums_exclusive(pair.root_system(), ord.simple_system()), "{name}");
    }
}

#[test]
fn ricci_pattern_small_ranks() {
    for pair in catalog(4).unwrap() {
        let ord = find_admissible_ordering(&pair).unwrap();
        assert!(ricci_structure_check(ord.simple_system(), &pair).unwrap(), "{}", pair.name());
    }
}

#[test]
fn standard_orderings_of_su_are_infeasible() {
    for name in ["su(2,1)", "su(3,2)", "su(4,3)"] {
        let pair = balanced_lie::pairs::InnerPair::from_name(name).unwrap();
        let sys = assemble_system(pair.root_system().base(), &pair).unwrap();
        assert!(matches!(sys.solve_constructive(&pair).unwrap(), SolveOutcome::Infeasible(_)), "{name}");
    }
}

#[test]
fn certificates_round_trip_and_verify() {
    for pair in catalog(4).unwrap() {
        let c = analyze_at(&pair, 0).unwrap();
        let text = c.to_json();
        let back = AnalysisCertificate::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
        verify(&back).unwrap();
    }
}
