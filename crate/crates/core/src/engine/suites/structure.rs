//! Three probes that place an instance between abelian and quasi-abelian:
//! a mono+epi non-iso morphism witnesses non-abelianness; `f̄` must be mono
//! and epi for every sampled `f`; no sampled kernel-cokernel pair may be
//! refuted.

use serde_json::{json, Value};

use super::{Ctx, Outcome};
use crate::category::{classify, induced_strict_map, is_epi, is_mono, Category, MorphismProfile};
use crate::engine::report::{DiagramTrace, Recheck, Report};

const NON_ABELIAN: &str = "non-abelian";

fn witness<C: Category + ?Sized>(cat: &C, f: &C::Mor, profile: &MorphismProfile) -> Value {
    json!({
        "kind": NON_ABELIAN,
        "morphism": cat.morphism_to_json(f),
        "profile": serde_json::to_value(profile).expect("profile serializes"),
    })
}

fn non_abelian(p: &MorphismProfile) -> bool {
    p.mono && p.epi && !p.iso
}

pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let (x, y) = (ctx.object(&mut rng), ctx.object(&mut rng));
    let f = ctx.morphism(&mut rng, &x, &y);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &f);

    if non_abelian(&classify(cat, &f)) {
        out.tally(NON_ABELIAN);
    }

    match induced_strict_map(cat, &f) {
        Ok(s) => {
            d.put(cat, "fbar", &s.fbar);
            let ok = is_mono(cat, &s.fbar) && is_epi(cat, &s.fbar);
            let recheck = Recheck::NotMonoAndEpi { morphism: "fbar".into() };
            out.expect(ok, "semi-abelian", "fbar is not both mono and epi", &d, Some(recheck));
        }
        Err(e) => out.fail("semi-abelian", format!("fbar: {e}"), &d, None),
    }

    let pair = ctx.exact_pair(&mut rng);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &pair.f).put(cat, "g", &pair.g);
    out.expect_member(ctx, "quasi-abelian", &pair, &d, ("f", "g"));
    out
}

/// Classifies the instance's canonical witness, if it ships one.
pub(super) fn fixed<C: Category + ?Sized>(ctx: &Ctx<'_, C>) -> Outcome {
    let cat = ctx.cat;
    let mut out = Outcome::default();
    let Some(f) = cat.canonical_witness() else {
        return out;
    };
    let profile = classify(cat, &f);
    out.witnesses.push(witness(cat, &f, &profile));
    let mut d = DiagramTrace::new();
    d.put(cat, "witness", &f);
    out.expect(non_abelian(&profile), "witness", "canonical witness is not mono, epi and non-iso", &d, None);
    out
}

pub(super) fn summarize<C: Category + ?Sized>(report: &mut Report, _cat: &C) {
    let sampled = report.findings.get(NON_ABELIAN).and_then(Value::as_u64).unwrap_or(0);
    let abelian = sampled == 0 && report.witnesses.is_empty();
    let count = |check: &str| report.violations.iter().filter(|v| v.check == check).count();
    let semi = count("semi-abelian");
    let quasi = count("quasi-abelian");
    report.findings.insert("abelian".into(), Value::from(abelian));
    report.findings.insert("semi_abelian_violations".into(), Value::from(semi));
    report.findings.insert("quasi_abelian_violations".into(), Value::from(quasi));
}
