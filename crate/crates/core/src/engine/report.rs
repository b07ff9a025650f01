use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::pair::{is_kernel_cokernel_pair, ExactPair};
use super::verdict::ProbeConfig;
use crate::category::{
    classify, factor_through_cokernel, factor_through_kernel, is_epi, is_iso, is_mono, is_pullback_square,
    is_pushout_square, pullback, pushout, Category,
};
use crate::error::{Error, Result};

/// Named morphisms and objects of one sampled configuration, serialized.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagramTrace(pub BTreeMap<String, Value>);

impl DiagramTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put<C: Category + ?Sized>(&mut self, cat: &C, name: &str, m: &C::Mor) -> &mut Self {
        self.0.insert(name.to_string(), cat.morphism_to_json(m));
        self
    }

    pub fn put_value(&mut self, name: &str, v: Value) -> &mut Self {
        self.0.insert(name.to_string(), v);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.0.get(name)
    }

    pub fn morphism<C: Category + ?Sized>(&self, cat: &C, name: &str) -> Result<C::Mor> {
        let v = self.0.get(name).ok_or_else(|| Error::parse(name, "not in diagram"))?;
        cat.morphism_from_json(v)
    }
}

/// A failure that can be reproduced from the recorded diagram alone. Fields
/// name entries of the [`DiagramTrace`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recheck {
    NotCokernel {
        morphism: String,
    },
    NotKernel {
        morphism: String,
    },
    NotKernelCokernelPair {
        f: String,
        g: String,
    },
    /// `p_t` is the pullback leg of `(g, t)` and is not a cokernel.
    PullbackLeg {
        g: String,
        t: String,
        p_t: String,
    },
    /// `s_t` is the pushout leg of `(f, t)` and is not a kernel.
    PushoutLeg {
        f: String,
        t: String,
        s_t: String,
    },
    /// `m` is not a kernel of `of`.
    NotKernelOf {
        m: String,
        of: String,
    },
    /// `m` is not a cokernel of `of`.
    NotCokernelOf {
        m: String,
        of: String,
    },
    NotPullback {
        g: String,
        t: String,
        p_y: String,
        p_t: String,
    },
    NotPushout {
        f: String,
        t: String,
        s_y: String,
        s_t: String,
    },
    NotMonoAndEpi {
        morphism: String,
    },
    NotEqual {
        lhs: String,
        rhs: String,
    },
}

impl Recheck {
    /// Re-evaluates the failure on the morphisms stored in `diagram`.
    /// `Ok(true)` means the failure is reproduced.
    pub fn reproduces<C: Category + ?Sized>(&self, cat: &C, diagram: &DiagramTrace) -> Result<bool> {
        let m = |name: &String| diagram.morphism(cat, name);
        Ok(match self {
            Recheck::NotCokernel { morphism } => !classify(cat, &m(morphism)?).is_cokernel,
            Recheck::NotKernel { morphism } => !classify(cat, &m(morphism)?).is_kernel,
            Recheck::NotKernelCokernelPair { f, g } => !is_kernel_cokernel_pair(cat, &ExactPair { f: m(f)?, g: m(g)? }),
            Recheck::PullbackLeg { g, t, p_t } => {
                let p_t = m(p_t)?;
                pullback(cat, &m(g)?, &m(t)?)?.p_t == p_t && !classify(cat, &p_t).is_cokernel
            }
            Recheck::PushoutLeg { f, t, s_t } => {
                let s_t = m(s_t)?;
                pushout(cat, &m(f)?, &m(t)?)?.s_t == s_t && !classify(cat, &s_t).is_kernel
            }
            Recheck::NotKernelOf { m: k, of } => {
                let kd = cat.kernel(&m(of)?);
                !factor_through_kernel(cat, &kd, &m(k)?).is_ok_and(|u| is_iso(cat, &u))
            }
            Recheck::NotCokernelOf { m: q, of } => {
                let cd = cat.cokernel(&m(of)?);
                !factor_through_cokernel(cat, &cd, &m(q)?).is_ok_and(|u| is_iso(cat, &u))
            }
            Recheck::NotPullback { g, t, p_y, p_t } => !is_pullback_square(cat, &m(g)?, &m(t)?, &m(p_y)?, &m(p_t)?)?,
            Recheck::NotPushout { f, t, s_y, s_t } => !is_pushout_square(cat, &m(f)?, &m(t)?, &m(s_y)?, &m(s_t)?)?,
            Recheck::NotMonoAndEpi { morphism } => {
                let x = m(morphism)?;
                !(is_mono(cat, &x) && is_epi(cat, &x))
            }
            Recheck::NotEqual { lhs, rhs } => m(lhs)? != m(rhs)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// Sample index, or `None` for fixed checks.
    pub case: Option<usize>,
    pub check: String,
    pub message: String,
    pub diagram: DiagramTrace,
    pub recheck: Option<Recheck>,
}

impl Violation {
    /// Whether the recorded failure is reproduced without sampling. `false`
    /// if there is nothing to re-check.
    pub fn reproduces<C: Category + ?Sized>(&self, cat: &C) -> Result<bool> {
        match &self.recheck {
            Some(r) => r.reproduces(cat, &self.diagram),
            None => Ok(false),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violations,
    /// A probe refuted a claim that an instance rule had accepted.
    RuleContradiction,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub category: String,
    pub config: ProbeConfig,
    pub instance_rules: bool,
    pub status: Status,
    pub cases: usize,
    /// Cases whose premises did not hold, so nothing was checked.
    pub vacuous: usize,
    pub violations: Vec<Violation>,
    /// Checks that ended in an `Unknown` verdict.
    pub unknown: usize,
    pub verdicts: VerdictCounts,
    pub witnesses: Vec<Value>,
    pub findings: BTreeMap<String, Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Ok
    }

    /// The report as a JSON value with object keys in sorted order.
    pub fn to_json(&self) -> Value {
        // serde_json's default map is ordered by key
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }
}
