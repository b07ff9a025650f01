//! Semi-stability verdicts.
//!
//! A cokernel `g` is semi-stable when every pullback `p_T` of `g` is again a
//! cokernel; dually for kernels and pushouts. The quantifier ranges over all
//! morphisms `t`, so a verdict is one of: `Yes` backed by a rule, `No` backed
//! by a concrete failing square, or `Unknown` after a bounded search.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::pair::{is_kernel_cokernel_pair, ExactPairOf};
use crate::category::{
    classify, is_coretraction, is_iso, is_retraction, pullback, pushout, Category, Justification, PullbackSquare,
    PushoutSquare, Side,
};
use crate::error::{Error, Result};
use crate::instances::sampling::{rng_for, streams, SamplerConfig};

/// Probe budget used by suites when no rule decides a question.
pub const DEFAULT_PROBE_BUDGET: usize = 16;

const MAX_SHRINK_STEPS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_dim: usize,
    pub max_entry: i64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { seed: crate::DEFAULT_SEED, samples: 100, max_dim: 3, max_entry: 3 }
    }
}

impl ProbeConfig {
    pub fn sampler(&self) -> SamplerConfig {
        SamplerConfig { max_dim: self.max_dim, max_entry: self.max_entry, seed: self.seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_dim == 0 {
            return Err(Error::parse("max_dim", "must be at least 1"));
        }
        if self.max_entry < 1 {
            return Err(Error::parse("max_entry", "must be at least 1"));
        }
        Ok(())
    }

    pub fn with_samples(self, samples: usize) -> Self {
        ProbeConfig { samples, ..self }
    }
}

/// Why a semi-stability or membership claim fails.
#[derive(Clone, Debug, PartialEq)]
pub enum Refutation<O, M> {
    NotKernelCokernelPair,
    /// The pullback leg `p_T` is not a cokernel.
    Pullback(PullbackSquare<O, M>),
    /// The pushout leg `s_T` is not a kernel.
    Pushout(PushoutSquare<O, M>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<O, M> {
    Yes(Justification),
    No(Refutation<O, M>),
    /// No rule applied and `budget` probes found nothing.
    Unknown {
        budget: usize,
    },
}

pub type RefutationOf<C> = Refutation<<C as Category>::Obj, <C as Category>::Mor>;
pub type VerdictOf<C> = Verdict<<C as Category>::Obj, <C as Category>::Mor>;

impl<O, M> Verdict<O, M> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }
}

/// Which shortcuts a decision may take before falling back to probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecisionPolicy {
    /// Isomorphisms, retractions and coretractions.
    pub structural_rules: bool,
    pub instance_rules: bool,
    /// Probe budget once no rule applies; `None` answers `Unknown` at once.
    pub probe: Option<ProbeConfig>,
}

impl Default for DecisionPolicy {
    fn default() -> Self {
        DecisionPolicy {
            structural_rules: true,
            instance_rules: true,
            probe: Some(ProbeConfig::default().with_samples(DEFAULT_PROBE_BUDGET)),
        }
    }
}

impl DecisionPolicy {
    pub fn rules_only() -> Self {
        DecisionPolicy { probe: None, ..Self::default() }
    }

    pub fn probe_only(cfg: ProbeConfig) -> Self {
        DecisionPolicy { structural_rules: false, instance_rules: false, probe: Some(cfg) }
    }
}

pub fn decide_semistable_cokernel<C: Category + ?Sized>(
    cat: &C,
    g: &C::Mor,
    policy: &DecisionPolicy,
) -> Result<VerdictOf<C>> {
    if !classify(cat, g).is_cokernel {
        return Err(Error::NotACokernel);
    }
    if policy.structural_rules {
        if is_iso(cat, g) {
            return Ok(Verdict::Yes(Justification::Iso));
        }
        if is_retraction(cat, g) {
            return Ok(Verdict::Yes(Justification::Retraction));
        }
    }
    if policy.instance_rules {
        if let Some(j) = cat.semistability_rule(Side::Cokernel) {
            return Ok(Verdict::Yes(j));
        }
    }
    match &policy.probe {
        Some(cfg) => probe_semistable_cokernel(cat, g, cfg),
        None => Ok(Verdict::Unknown { budget: 0 }),
    }
}

pub fn decide_semistable_kernel<C: Category + ?Sized>(
    cat: &C,
    f: &C::Mor,
    policy: &DecisionPolicy,
) -> Result<VerdictOf<C>> {
    if !classify(cat, f).is_kernel {
        return Err(Error::NotAKernel);
    }
    if policy.structural_rules {
        if is_iso(cat, f) {
            return Ok(Verdict::Yes(Justification::Iso));
        }
        if is_coretraction(cat, f) {
            return Ok(Verdict::Yes(Justification::Coretraction));
        }
    }
    if policy.instance_rules {
        if let Some(j) = cat.semistability_rule(Side::Kernel) {
            return Ok(Verdict::Yes(j));
        }
    }
    match &policy.probe {
        Some(cfg) => probe_semistable_kernel(cat, f, cfg),
        None => Ok(Verdict::Unknown { budget: 0 }),
    }
}

fn pullback_leg_fails<C: Category + ?Sized>(cat: &C, g: &C::Mor, t: &C::Mor) -> Option<PullbackSquare<C::Obj, C::Mor>> {
    let sq = pullback(cat, g, t).ok()?;
    (!classify(cat, &sq.p_t).is_cokernel).then_some(sq)
}

fn pushout_leg_fails<C: Category + ?Sized>(cat: &C, f: &C::Mor, t: &C::Mor) -> Option<PushoutSquare<C::Obj, C::Mor>> {
    let sq = pushout(cat, f, t).ok()?;
    (!classify(cat, &sq.s_t).is_kernel).then_some(sq)
}

/// Greedily replaces `t` by smaller variants that still fail.
fn minimize<C: Category + ?Sized, W>(cat: &C, mut t: C::Mor, mut w: W, fails: impl Fn(&C::Mor) -> Option<W>) -> W {
    for _ in 0..MAX_SHRINK_STEPS {
        let next = cat.shrink(&t).into_iter().find_map(|cand| fails(&cand).map(|w| (cand, w)));
        match next {
            Some((cand, cw)) => {
                t = cand;
                w = cw;
            }
            None => break,
        }
    }
    w
}

/// Samples `cfg.samples` morphisms `t: T → cod g` and pulls `g` back along
/// each. Returns `No` with a minimized square at the first `p_T` that is not
/// a cokernel, `Unknown` otherwise. Never answers `Yes`.
pub fn probe_semistable_cokernel<C: Category + ?Sized>(cat: &C, g: &C::Mor, cfg: &ProbeConfig) -> Result<VerdictOf<C>> {
    if !classify(cat, g).is_cokernel {
        return Err(Error::NotACokernel);
    }
    let scfg = cfg.sampler();
    let z = cat.cod(g);
    for i in 0..cfg.samples {
        let mut rng = rng_for(cfg.seed, streams::PROBE, i as u64);
        let obj = cat.sample_object(&mut rng, &scfg);
        let t = cat.sample_morphism(&mut rng, &obj, &z, &scfg);
        if let Some(sq) = pullback_leg_fails(cat, g, &t) {
            let sq = minimize(cat, t, sq, |c| pullback_leg_fails(cat, g, c));
            return Ok(Verdict::No(Refutation::Pullback(sq)));
        }
    }
    Ok(Verdict::Unknown { budget: cfg.samples })
}

/// Dual of [`probe_semistable_cokernel`]: pushes `f` out along sampled
/// `t: dom f → T` and checks that `s_T` is a kernel.
pub fn probe_semistable_kernel<C: Category + ?Sized>(cat: &C, f: &C::Mor, cfg: &ProbeConfig) -> Result<VerdictOf<C>> {
    if !classify(cat, f).is_kernel {
        return Err(Error::NotAKernel);
    }
    let scfg = cfg.sampler();
    let x = cat.dom(f);
    for i in 0..cfg.samples {
        let mut rng = rng_for(cfg.seed, streams::PROBE, i as u64);
        let obj = cat.sample_object(&mut rng, &scfg);
        let t = cat.sample_morphism(&mut rng, &x, &obj, &scfg);
        if let Some(sq) = pushout_leg_fails(cat, f, &t) {
            let sq = minimize(cat, t, sq, |c| pushout_leg_fails(cat, f, c));
            return Ok(Verdict::No(Refutation::Pushout(sq)));
        }
    }
    Ok(Verdict::Unknown { budget: cfg.samples })
}

/// Membership in the class of kernel-cokernel pairs whose kernel and
/// cokernel are both semi-stable.
pub fn in_maximal_exact<C: Category + ?Sized>(cat: &C, pair: &ExactPairOf<C>, policy: &DecisionPolicy) -> VerdictOf<C> {
    if !is_kernel_cokernel_pair(cat, pair) {
        return Verdict::No(Refutation::NotKernelCokernelPair);
    }
    let (Ok(vk), Ok(vc)) =
        (decide_semistable_kernel(cat, &pair.f, policy), decide_semistable_cokernel(cat, &pair.g, policy))
    else {
        return Verdict::No(Refutation::NotKernelCokernelPair);
    };
    match (vk, vc) {
        (Verdict::No(r), _) | (_, Verdict::No(r)) => Verdict::No(r),
        (Verdict::Yes(k), Verdict::Yes(c)) => {
            Verdict::Yes(Justification::Pair { kernel: Box::new(k), cokernel: Box::new(c) })
        }
        (a, b) => {
            let budget = |v: &VerdictOf<C>| match v {
                Verdict::Unknown { budget } => *budget,
                _ => 0,
            };
            Verdict::Unknown { budget: budget(&a) + budget(&b) }
        }
    }
}

/// Re-evaluates a square refutation without any sampling: rebuilds the
/// square from its defining span or cospan and classifies the leg again.
/// `NotKernelCokernelPair` needs the pair and is re-checked with
/// [`is_kernel_cokernel_pair`] instead, so it returns `false` here.
pub fn refutation_holds<C: Category + ?Sized>(cat: &C, r: &RefutationOf<C>) -> bool {
    match r {
        Refutation::NotKernelCokernelPair => false,
        Refutation::Pullback(sq) => {
            pullback(cat, &sq.g, &sq.t).is_ok_and(|fresh| fresh.p_t == sq.p_t) && !classify(cat, &sq.p_t).is_cokernel
        }
        Refutation::Pushout(sq) => {
            pushout(cat, &sq.f, &sq.t).is_ok_and(|fresh| fresh.s_t == sq.s_t) && !classify(cat, &sq.s_t).is_kernel
        }
    }
}

pub fn pullback_to_json<C: Category + ?Sized>(cat: &C, sq: &PullbackSquare<C::Obj, C::Mor>) -> Value {
    json!({
        "g": cat.morphism_to_json(&sq.g),
        "t": cat.morphism_to_json(&sq.t),
        "P": cat.object_to_json(&sq.apex),
        "p_Y": cat.morphism_to_json(&sq.p_y),
        "p_T": cat.morphism_to_json(&sq.p_t),
    })
}

pub fn pushout_to_json<C: Category + ?Sized>(cat: &C, sq: &PushoutSquare<C::Obj, C::Mor>) -> Value {
    json!({
        "f": cat.morphism_to_json(&sq.f),
        "t": cat.morphism_to_json(&sq.t),
        "S": cat.object_to_json(&sq.apex),
        "s_Y": cat.morphism_to_json(&sq.s_y),
        "s_T": cat.morphism_to_json(&sq.s_t),
    })
}

pub fn refutation_to_json<C: Category + ?Sized>(cat: &C, r: &RefutationOf<C>) -> Value {
    match r {
        Refutation::NotKernelCokernelPair => json!({ "kind": "not-kernel-cokernel-pair" }),
        Refutation::Pullback(sq) => json!({ "kind": "pullback", "square": pullback_to_json(cat, sq) }),
        Refutation::Pushout(sq) => json!({ "kind": "pushout", "square": pushout_to_json(cat, sq) }),
    }
}

pub fn verdict_to_json<C: Category + ?Sized>(cat: &C, v: &VerdictOf<C>) -> Value {
    match v {
        Verdict::Yes(j) => json!({ "verdict": "yes", "justification": j }),
        Verdict::No(r) => json!({ "verdict": "no", "refutation": refutation_to_json(cat, r) }),
        Verdict::Unknown { budget } => json!({ "verdict": "unknown", "budget": budget }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ExactPair;
    use crate::instances::{finvectq, latticez, Dim, Rank};

    #[test]
    fn identity_is_semistable_both_ways() {
        let c = latticez();
        let id = c.identity(&Rank(2));
        let p = DecisionPolicy::default();
        assert_eq!(decide_semistable_cokernel(&c, &id, &p).unwrap(), Verdict::Yes(Justification::Iso));
        assert_eq!(decide_semistable_kernel(&c, &id, &p).unwrap(), Verdict::Yes(Justification::Iso));
    }

    #[test]
    fn biproduct_legs() {
        let c = latticez();
        let bp = c.biproduct(&Rank(1), &Rank(2));
        let p = DecisionPolicy::default();
        assert_eq!(decide_semistable_cokernel(&c, &bp.proj_left, &p).unwrap(), Verdict::Yes(Justification::Retraction));
        assert_eq!(decide_semistable_kernel(&c, &bp.inj_left, &p).unwrap(), Verdict::Yes(Justification::Coretraction));
        let pair = ExactPair::new(&c, bp.inj_left.clone(), bp.proj_right.clone()).unwrap();
        assert!(in_maximal_exact(&c, &pair, &p).is_yes());
    }

    #[test]
    fn doubling_is_neither() {
        let c = latticez();
        let two = c.mor(1, 1, &[2]);
        let p = DecisionPolicy::default();
        assert_eq!(decide_semistable_cokernel(&c, &two, &p), Err(Error::NotACokernel));
        assert_eq!(decide_semistable_kernel(&c, &two, &p), Err(Error::NotAKernel));
    }

    #[test]
    fn abelian_probes_find_nothing() {
        let c = finvectq();
        let cfg = ProbeConfig::default();
        assert_eq!(
            probe_semistable_cokernel(&c, &c.mor(1, 2, &[1, 1]), &cfg).unwrap(),
            Verdict::Unknown { budget: 100 }
        );
        assert_eq!(probe_semistable_kernel(&c, &c.mor(2, 1, &[1, 0]), &cfg).unwrap(), Verdict::Unknown { budget: 100 });
        assert_eq!(
            probe_semistable_cokernel(&c, &c.identity(&Dim(2)), &cfg).unwrap(),
            Verdict::Unknown { budget: 100 }
        );
    }

    #[test]
    fn membership_examples() {
        let c = finvectq();
        let p = DecisionPolicy::default();
        let pair = ExactPair::new(&c, c.mor(2, 1, &[1, -1]), c.mor(1, 2, &[1, 1])).unwrap();
        assert!(in_maximal_exact(&c, &pair, &p).is_yes());

        let l = latticez();
        let pair =
            ExactPair::new(&l, l.zero_morphism(&Rank(0), &Rank(1)), l.zero_morphism(&Rank(1), &Rank(0))).unwrap();
        assert_eq!(in_maximal_exact(&l, &pair, &p), Verdict::No(Refutation::NotKernelCokernelPair));
    }
}
