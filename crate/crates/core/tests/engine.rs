mod common;

use common::mock::mock;
use exactcat::category::{classify, is_pullback_square, Category};
use exactcat::engine::{
    decide_semistable_cokernel, in_maximal_exact, is_split_exact, run_suite, run_suite_with, verdict_to_json,
    DecisionPolicy, DiagramTrace, ExactPair, ProbeConfig, Recheck, Status, Suite, Verdict,
};
use exactcat::instances::{finvectq, latticez, monopairsq, Dim, MonoPairsQ};

fn cfg(samples: usize) -> ProbeConfig {
    ProbeConfig { samples, ..ProbeConfig::default() }
}

#[test]
fn zero_samples_pass_vacuously() {
    for suite in Suite::ALL {
        let r = run_suite(&finvectq(), suite, &cfg(0));
        assert_eq!(r.cases, 0);
        assert!(r.violations.is_empty(), "{suite}");
        assert_eq!(r.status, Status::Ok);
    }
}

#[test]
fn suite_names_round_trip() {
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    assert!("nope".parse::<Suite>().is_err());
}

#[test]
fn report_json_has_the_documented_fields() {
    let r = run_suite(&latticez(), Suite::Structure, &cfg(10));
    let v = r.to_json();
    for key in ["suite", "config", "cases", "violations", "unknown", "witnesses", "verdicts", "status"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["suite"], "structure");
    assert_eq!(v["witnesses"][0]["kind"], "non-abelian");
    assert_eq!(r.to_json_string(), run_suite(&latticez(), Suite::Structure, &cfg(10)).to_json_string());
}

#[test]
fn split_pairs() {
    let c = finvectq();
    let bp = c.biproduct(&Dim(1), &Dim(2));
    assert!(is_split_exact(&c, &ExactPair::new(&c, bp.inj_left, bp.proj_right).unwrap()));
    let pair = ExactPair::new(&c, c.mor(2, 1, &[1, -1]), c.mor(1, 2, &[1, 1])).unwrap();
    assert!(is_split_exact(&c, &pair));
    // zero followed by zero is not a kernel-cokernel pair
    let z = ExactPair::new(&c, c.zero_morphism(&Dim(1), &Dim(1)), c.zero_morphism(&Dim(1), &Dim(1))).unwrap();
    assert!(!is_split_exact(&c, &z));
}

#[test]
fn degenerate_second_pair_gives_a_trivial_pullback() {
    // with g' = id, f' = 0 and k is the kernel of g itself
    let c = finvectq();
    let g = c.mor(1, 2, &[1, 1]);
    let f2 = c.zero_morphism(&Dim(0), &Dim(1));
    let k = c.kernel(&g).inclusion;
    let alpha = c.lift(&f2, &c.compose(&k, &g).unwrap()).unwrap();
    assert!(is_pullback_square(&c, &g, &f2, &k, &alpha).unwrap());
}

#[test]
fn verdict_json() {
    let c = finvectq();
    let id = c.identity(&Dim(1));
    let v = decide_semistable_cokernel(&c, &id, &DecisionPolicy::default()).unwrap();
    assert_eq!(serde_json::to_string(&verdict_to_json(&c, &v)).unwrap(), r#"{"justification":"iso","verdict":"yes"}"#);
    let u: Verdict<Dim, _> = Verdict::Unknown { budget: 7 };
    assert_eq!(verdict_to_json(&c, &u)["budget"], 7);
}

#[test]
fn rules_can_be_switched_off() {
    let with = run_suite_with(&latticez(), Suite::Coherence, &cfg(20), true);
    let without = run_suite_with(&latticez(), Suite::Coherence, &cfg(20), false);
    assert_eq!(with.vacuous, 0);
    assert_eq!(without.vacuous, 20);
    assert!(!without.instance_rules);
}

#[test]
fn monopairs_cokernels_split_so_rules_are_never_needed() {
    let cat = MonoPairsQ::probe_only();
    let r = run_suite(&cat, Suite::Maximality, &cfg(60));
    assert_eq!(r.verdicts.yes, 60);
    assert_eq!(r.unknown, 0);
    let cat = monopairsq();
    let r = run_suite(&cat, Suite::Coherence, &cfg(30));
    assert_eq!(r.status, Status::Ok);
}

#[test]
fn recheck_does_not_fire_on_honest_data() {
    let c = finvectq();
    let mut d = DiagramTrace::new();
    d.put(&c, "g", &c.mor(1, 2, &[1, 1])).put(&c, "f", &c.mor(2, 1, &[1, -1]));
    assert!(!Recheck::NotCokernel { morphism: "g".into() }.reproduces(&c, &d).unwrap());
    assert!(!Recheck::NotKernelCokernelPair { f: "f".into(), g: "g".into() }.reproduces(&c, &d).unwrap());
    assert!(Recheck::NotKernel { morphism: "missing".into() }.reproduces(&c, &d).is_err());
}

#[test]
fn mock_violations_are_self_certifying_in_every_suite() {
    let cat = mock();
    let mut seen = Vec::new();
    for suite in Suite::ALL {
        let r = run_suite(&cat, suite, &cfg(80));
        for v in r.violations.iter().filter(|v| v.recheck.is_some()) {
            assert!(v.reproduces(&cat).unwrap(), "{suite}: {v:?}");
            seen.push((suite, v.check.clone()));
        }
    }
    assert!(seen.iter().any(|(s, c)| *s == Suite::Kelly && c == "c"), "{seen:?}");
    assert!(seen.iter().any(|(s, _)| *s == Suite::Theorem));
    assert!(seen.iter().any(|(s, c)| *s == Suite::Maximality && c == "split-in-maximal"));
}

#[test]
fn mock_profile_breaks_only_the_recognizer() {
    let cat = mock();
    let p = cat.mor(2, 3, &[1, 0, 0, 0, 1, 0]);
    let profile = classify(&cat, &p);
    assert!(profile.strict && profile.epi && !profile.is_cokernel);
    assert_eq!(profile.inconsistencies(), vec!["strict & epi => cokernel"]);
    let pair = ExactPair::new(&cat, cat.kernel(&p).inclusion, p).unwrap();
    assert_eq!(
        in_maximal_exact(&cat, &pair, &DecisionPolicy::default()),
        Verdict::No(exactcat::engine::Refutation::NotKernelCokernelPair)
    );
}
