mod common;

use common::mock::{mock, tagged_cokernel};
use exactcat::category::{classify, pullback, Justification};
use exactcat::engine::{
    decide_semistable_cokernel, probe_semistable_cokernel, probe_semistable_kernel, refutation_holds, run_suite,
    DecisionPolicy, ProbeConfig, Refutation, Status, Suite, Verdict,
};

#[test]
fn tagged_projection_is_not_a_cokernel() {
    let cat = mock();
    let p = cat.mor(2, 3, &[1, 0, 0, 0, 1, 0]);
    assert!(tagged_cokernel(&p));
    let profile = classify(&cat, &p);
    assert!(profile.epi && !profile.is_cokernel);
}

#[test]
fn pullback_of_an_accepted_cokernel_is_rejected() {
    let cat = mock();
    let g = cat.mor(1, 2, &[1, 0]);
    assert!(classify(&cat, &g).is_cokernel);
    let t = cat.mor(1, 2, &[0, 1]);
    let sq = pullback(&cat, &g, &t).unwrap();
    assert!(tagged_cokernel(&sq.p_t));
    assert!(!classify(&cat, &sq.p_t).is_cokernel);
}

#[test]
fn probe_refutes_with_a_self_certifying_square() {
    let cat = mock();
    let g = cat.mor(1, 2, &[1, 0]);
    let v = probe_semistable_cokernel(&cat, &g, &ProbeConfig::default()).unwrap();
    let Verdict::No(r @ Refutation::Pullback(_)) = &v else {
        panic!("expected a pullback refutation, got {v:?}");
    };
    assert!(refutation_holds(&cat, r));

    let f = cat.mor(2, 1, &[1, 0]);
    let v = probe_semistable_kernel(&cat, &f, &ProbeConfig::default()).unwrap();
    assert!(matches!(&v, Verdict::No(r @ Refutation::Pushout(_)) if refutation_holds(&cat, r)));
}

#[test]
fn structural_rules_answer_before_the_probe() {
    // every surjection of vector spaces splits, so the retraction rule fires
    let cat = mock();
    let g = cat.mor(1, 2, &[1, 0]);
    let v = decide_semistable_cokernel(&cat, &g, &DecisionPolicy::rules_only()).unwrap();
    assert_eq!(v, Verdict::Yes(Justification::Retraction));
    let v = decide_semistable_cokernel(&cat, &g, &DecisionPolicy::probe_only(ProbeConfig::default())).unwrap();
    assert!(v.is_no());
}

#[test]
fn axiom_suite_reports_reproducible_violations() {
    let cat = mock();
    let cfg = ProbeConfig { samples: 140, ..ProbeConfig::default() };
    let report = run_suite(&cat, Suite::Axioms, &cfg);
    assert_eq!(report.status, Status::Violations);
    assert!(!report.violations.is_empty());
    for v in &report.violations {
        assert!(v.recheck.is_some(), "{v:?}");
        assert!(v.reproduces(&cat).unwrap(), "{v:?}");
    }
}
