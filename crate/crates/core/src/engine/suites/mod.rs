//! Randomized property suites. Each case derives its randomness from
//! `(seed, suite, case index)` and cases run in parallel; results are
//! collected in index order, so a report depends only on its inputs.

mod axioms;
mod coherence;
mod kelly;
mod lemma;
mod maximality;
mod structure;
mod theorem;
mod universal;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::Value;

use super::pair::ExactPairOf;
use super::report::{DiagramTrace, Recheck, Report, Status, VerdictCounts, Violation};
use super::verdict::{
    in_maximal_exact, pullback_to_json, pushout_to_json, DecisionPolicy, ProbeConfig, Refutation, Verdict, VerdictOf,
    DEFAULT_PROBE_BUDGET,
};
use crate::category::{Category, Side};
use crate::error::Error;
use crate::instances::sampling::{draw_exact_pair, exact_pair_from, rng_for, streams, SampleRng, SamplerConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Kernel, cokernel, biproduct, pullback and pushout universal properties.
    Universal,
    /// Transport of kernels along pullbacks and cokernels along pushouts.
    Lemma,
    /// Exact-category axioms and closure under isomorphisms.
    Axioms,
    /// Reconstruction of the diagrams behind closure under composition.
    Theorem,
    /// Stability of semi-stable (co)kernels under composition and cancellation.
    Kelly,
    /// Split pairs are never refuted.
    Maximality,
    /// Abelian, semi-abelian and quasi-abelian probes.
    Structure,
    /// Instance rules never contradicted by probes.
    Coherence,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Universal,
        Suite::Lemma,
        Suite::Axioms,
        Suite::Theorem,
        Suite::Kelly,
        Suite::Maximality,
        Suite::Structure,
        Suite::Coherence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Universal => "universal",
            Suite::Lemma => "lemma",
            Suite::Axioms => "axioms",
            Suite::Theorem => "theorem",
            Suite::Kelly => "kelly",
            Suite::Maximality => "maximality",
            Suite::Structure => "structure",
            Suite::Coherence => "coherence",
        }
    }

    fn stream(self) -> u64 {
        streams::SUITE + Suite::ALL.iter().position(|&s| s == self).unwrap() as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::parse("suite", format!("unknown suite {s:?}")))
    }
}

pub(crate) struct Ctx<'a, C: Category + ?Sized> {
    pub cat: &'a C,
    pub cfg: ProbeConfig,
    pub scfg: SamplerConfig,
    pub policy: DecisionPolicy,
    suite: Suite,
}

impl<C: Category + ?Sized> Ctx<'_, C> {
    pub fn rng(&self, index: usize) -> SampleRng {
        rng_for(self.cfg.seed, self.suite.stream(), index as u64)
    }

    pub fn object(&self, rng: &mut SampleRng) -> C::Obj {
        self.cat.sample_object(rng, &self.scfg)
    }

    pub fn morphism(&self, rng: &mut SampleRng, dom: &C::Obj, cod: &C::Obj) -> C::Mor {
        self.cat.sample_morphism(rng, dom, cod, &self.scfg)
    }

    pub fn exact_pair(&self, rng: &mut SampleRng) -> ExactPairOf<C> {
        draw_exact_pair(self.cat, rng, &self.scfg)
    }

    /// A kernel-cokernel pair whose middle object is `y`.
    pub fn exact_pair_through(&self, rng: &mut SampleRng, y: &C::Obj) -> ExactPairOf<C> {
        let w = self.object(rng);
        let g0 = self.morphism(rng, y, &w);
        exact_pair_from(self.cat, &g0)
    }

    pub fn has_rule(&self, side: Side) -> bool {
        self.policy.instance_rules && self.cat.semistability_rule(side).is_some()
    }
}

/// What one case contributes to a report.
#[derive(Default)]
pub(crate) struct Outcome {
    pub violations: Vec<Violation>,
    pub unknown: usize,
    pub vacuous: bool,
    pub verdicts: VerdictCounts,
    pub witnesses: Vec<Value>,
    pub contradiction: bool,
    pub tallies: BTreeMap<String, usize>,
}

impl Outcome {
    pub fn fail(&mut self, check: &str, message: impl Into<String>, diagram: &DiagramTrace, recheck: Option<Recheck>) {
        self.violations.push(Violation {
            case: None,
            check: check.to_string(),
            message: message.into(),
            diagram: diagram.clone(),
            recheck,
        });
    }

    /// Records a failed check unless `ok`.
    pub fn expect(&mut self, ok: bool, check: &str, message: &str, diagram: &DiagramTrace, recheck: Option<Recheck>) {
        if !ok {
            self.fail(check, message, diagram, recheck);
        }
    }

    pub fn tally(&mut self, key: &str) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
    }

    pub fn count<O, M>(&mut self, v: &Verdict<O, M>) {
        match v {
            Verdict::Yes(_) => self.verdicts.yes += 1,
            Verdict::No(_) => self.verdicts.no += 1,
            Verdict::Unknown { .. } => {
                self.verdicts.unknown += 1;
                self.unknown += 1;
            }
        }
    }

    /// Checks that `(f, g)` (stored in `diagram` under the given names) is in
    /// the maximal exact structure. `No` is a violation, `Unknown` is tallied.
    pub fn expect_member<C: Category + ?Sized>(
        &mut self,
        ctx: &Ctx<'_, C>,
        check: &str,
        pair: &ExactPairOf<C>,
        diagram: &DiagramTrace,
        names: (&str, &str),
    ) -> VerdictOf<C> {
        let v = in_maximal_exact(ctx.cat, pair, &ctx.policy);
        self.count(&v);
        if let Verdict::No(r) = &v {
            let mut d = diagram.clone();
            let recheck = refutation_recheck(ctx.cat, r, &mut d, names);
            self.fail(check, "pair is not in the maximal exact structure", &d, Some(recheck));
        }
        v
    }
}

/// Adds the refuting square (if any) to `diagram` and names what to re-check.
pub(crate) fn refutation_recheck<C: Category + ?Sized>(
    cat: &C,
    r: &Refutation<C::Obj, C::Mor>,
    diagram: &mut DiagramTrace,
    (f, g): (&str, &str),
) -> Recheck {
    match r {
        Refutation::NotKernelCokernelPair => Recheck::NotKernelCokernelPair { f: f.into(), g: g.into() },
        Refutation::Pullback(sq) => {
            diagram.put_value("probe", pullback_to_json(cat, sq));
            diagram.put(cat, "probe.g", &sq.g).put(cat, "probe.t", &sq.t).put(cat, "probe.p_T", &sq.p_t);
            Recheck::PullbackLeg { g: "probe.g".into(), t: "probe.t".into(), p_t: "probe.p_T".into() }
        }
        Refutation::Pushout(sq) => {
            diagram.put_value("probe", pushout_to_json(cat, sq));
            diagram.put(cat, "probe.f", &sq.f).put(cat, "probe.t", &sq.t).put(cat, "probe.s_T", &sq.s_t);
            Recheck::PushoutLeg { f: "probe.f".into(), t: "probe.t".into(), s_t: "probe.s_T".into() }
        }
    }
}

/// Runs `suite` with the instance rules enabled.
pub fn run_suite<C: Category + ?Sized>(cat: &C, suite: Suite, cfg: &ProbeConfig) -> Report {
    run_suite_with(cat, suite, cfg, true)
}

pub fn run_suite_with<C: Category + ?Sized>(cat: &C, suite: Suite, cfg: &ProbeConfig, instance_rules: bool) -> Report {
    let policy =
        DecisionPolicy { structural_rules: true, instance_rules, probe: Some(cfg.with_samples(DEFAULT_PROBE_BUDGET)) };
    let ctx = Ctx { cat, cfg: *cfg, scfg: cfg.sampler(), policy, suite };
    let case: fn(&Ctx<'_, C>, usize) -> Outcome = match suite {
        Suite::Universal => universal::case,
        Suite::Lemma => lemma::case,
        Suite::Axioms => axioms::case,
        Suite::Theorem => theorem::case,
        Suite::Kelly => kelly::case,
        Suite::Maximality => maximality::case,
        Suite::Structure => structure::case,
        Suite::Coherence => coherence::case,
    };
    let outcomes: Vec<Outcome> = (0..cfg.samples).into_par_iter().map(|i| case(&ctx, i)).collect();
    let fixed = match suite {
        Suite::Structure => Some(structure::fixed(&ctx)),
        _ => None,
    };

    let mut report = Report {
        suite: suite.name().to_string(),
        category: cat.name().to_string(),
        config: *cfg,
        instance_rules,
        status: Status::Ok,
        cases: cfg.samples,
        vacuous: 0,
        violations: Vec::new(),
        unknown: 0,
        verdicts: VerdictCounts::default(),
        witnesses: Vec::new(),
        findings: BTreeMap::new(),
    };
    let mut contradiction = false;
    let mut tallies: BTreeMap<String, usize> = BTreeMap::new();
    let indexed = outcomes.into_iter().enumerate().map(|(i, o)| (Some(i), o));
    for (case, o) in fixed.into_iter().map(|o| (None, o)).chain(indexed) {
        report.violations.extend(o.violations.into_iter().map(|v| Violation { case, ..v }));
        report.unknown += o.unknown;
        report.vacuous += usize::from(o.vacuous);
        report.verdicts.yes += o.verdicts.yes;
        report.verdicts.no += o.verdicts.no;
        report.verdicts.unknown += o.verdicts.unknown;
        report.witnesses.extend(o.witnesses);
        contradiction |= o.contradiction;
        for (k, n) in o.tallies {
            *tallies.entry(k).or_default() += n;
        }
    }
    report.findings = tallies.into_iter().map(|(k, n)| (k, Value::from(n))).collect();
    if suite == Suite::Structure {
        structure::summarize(&mut report, cat);
    }
    report.status = if contradiction {
        Status::RuleContradiction
    } else if report.violations.is_empty() {
        Status::Ok
    } else {
        Status::Violations
    };
    report
}
