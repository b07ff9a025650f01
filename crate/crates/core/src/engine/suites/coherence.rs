use super::{refutation_recheck, Ctx, Outcome};
use crate::category::{Category, Side};
use crate::engine::report::DiagramTrace;
use crate::engine::verdict::{probe_semistable_cokernel, probe_semistable_kernel, Verdict, DEFAULT_PROBE_BUDGET};

/// Probes both halves of a sampled kernel-cokernel pair whenever an instance
/// rule would accept them without search. A refutation contradicts the rule.
pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let pair = ctx.exact_pair(&mut rng);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &pair.f).put(cat, "g", &pair.g);
    let cfg = ctx.cfg.with_samples(DEFAULT_PROBE_BUDGET);
    let cfg = crate::engine::verdict::ProbeConfig { seed: ctx.cfg.seed.wrapping_add(index as u64), ..cfg };

    let mut checked = false;
    for side in [Side::Kernel, Side::Cokernel] {
        if !ctx.has_rule(side) {
            continue;
        }
        let (v, name) = match side {
            Side::Kernel => (probe_semistable_kernel(cat, &pair.f, &cfg), "f"),
            Side::Cokernel => (probe_semistable_cokernel(cat, &pair.g, &cfg), "g"),
        };
        let Ok(v) = v else { continue };
        checked = true;
        out.count(&v);
        if let Verdict::No(r) = &v {
            let recheck = refutation_recheck(cat, r, &mut d, (name, name));
            out.fail("rule-contradiction", format!("probe refutes the rule for {name}"), &d, Some(recheck));
            out.contradiction = true;
        }
    }
    out.vacuous = !checked;
    out
}
