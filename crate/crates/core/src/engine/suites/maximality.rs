use super::{Ctx, Outcome};
use crate::category::{inverse, Category};
use crate::engine::pair::{is_kernel_cokernel_pair, is_split_exact, ExactPair};
use crate::engine::report::{DiagramTrace, Recheck};
use crate::engine::verdict::{in_maximal_exact, Verdict};

/// Split pairs form the smallest exact structure, so no split pair may be
/// refuted. Half of the cases conjugate a biproduct pair to make sure split
/// pairs are sampled in every instance.
pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let pair = if index.is_multiple_of(2) {
        ctx.exact_pair(&mut rng)
    } else {
        let (x, z) = (ctx.object(&mut rng), ctx.object(&mut rng));
        let bp = cat.biproduct(&x, &z);
        let a = cat.sample_automorphism(&mut rng, &bp.obj, &ctx.scfg);
        let inv = inverse(cat, &a).expect("sampled automorphism is invertible");
        let f = cat.compose(&bp.inj_left, &a).expect("composable");
        let g = cat.compose(&inv, &bp.proj_right).expect("composable");
        ExactPair { f, g }
    };
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &pair.f).put(cat, "g", &pair.g);
    let recheck = Recheck::NotKernelCokernelPair { f: "f".into(), g: "g".into() };
    out.expect(
        is_kernel_cokernel_pair(cat, &pair),
        "sampled-pair",
        "sample is not a kernel-cokernel pair",
        &d,
        Some(recheck),
    );

    let split = is_split_exact(cat, &pair);
    if split {
        out.tally("split");
    }
    let v = in_maximal_exact(cat, &pair, &ctx.policy);
    out.count(&v);
    if let Verdict::No(r) = &v {
        if split {
            let recheck = super::refutation_recheck(cat, r, &mut d, ("f", "g"));
            out.fail("split-in-maximal", "split pair refuted", &d, Some(recheck));
        }
    }
    out
}
