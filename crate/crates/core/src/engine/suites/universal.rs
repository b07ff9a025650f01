use super::{Ctx, Outcome};
use crate::category::{
    classify, factor_through_cokernel, factor_through_kernel, is_epi, is_mono, pullback, pullback_mediate, pushout,
    pushout_mediate, Category,
};
use crate::engine::report::DiagramTrace;

pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let (x, y) = (ctx.object(&mut rng), ctx.object(&mut rng));
    let f = ctx.morphism(&mut rng, &x, &y);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &f);

    // kernel
    let kd = cat.kernel(&f);
    d.put(cat, "ker", &kd.inclusion);
    let composite = cat.compose(&kd.inclusion, &f);
    out.expect(composite.is_ok_and(|c| cat.is_zero_morphism(&c)), "kernel-composite", "f∘i ≠ 0", &d, None);
    out.expect(is_mono(cat, &kd.inclusion), "kernel-mono", "kernel inclusion is not mono", &d, None);
    let w = ctx.object(&mut rng);
    let u = ctx.morphism(&mut rng, &w, &kd.obj);
    let h = cat.compose(&u, &kd.inclusion).expect("composable");
    let unique = factor_through_kernel(cat, &kd, &h).is_ok_and(|v| v == u);
    out.expect(unique, "kernel-factor-unique", "i∘u does not factor back to u", &d, None);
    let h2 = ctx.morphism(&mut rng, &w, &x);
    let kills = cat.is_zero_morphism(&cat.compose(&h2, &f).expect("composable"));
    match factor_through_kernel(cat, &kd, &h2) {
        Ok(v) => out.expect(
            kills && cat.compose(&v, &kd.inclusion).is_ok_and(|c| c == h2),
            "kernel-factor-exists",
            "factorization of a morphism with f∘h ≠ 0, or wrong factorization",
            &d,
            None,
        ),
        Err(_) => out.expect(!kills, "kernel-factor-exists", "f∘h = 0 but h does not factor", &d, None),
    }

    // cokernel
    let cd = cat.cokernel(&f);
    d.put(cat, "cok", &cd.projection);
    let composite = cat.compose(&f, &cd.projection);
    out.expect(composite.is_ok_and(|c| cat.is_zero_morphism(&c)), "cokernel-composite", "q∘f ≠ 0", &d, None);
    out.expect(is_epi(cat, &cd.projection), "cokernel-epi", "cokernel projection is not epi", &d, None);
    let w = ctx.object(&mut rng);
    let u = ctx.morphism(&mut rng, &cd.obj, &w);
    let h = cat.compose(&cd.projection, &u).expect("composable");
    let unique = factor_through_cokernel(cat, &cd, &h).is_ok_and(|v| v == u);
    out.expect(unique, "cokernel-factor-unique", "u∘q does not factor back to u", &d, None);
    let h2 = ctx.morphism(&mut rng, &y, &w);
    let kills = cat.is_zero_morphism(&cat.compose(&f, &h2).expect("composable"));
    match factor_through_cokernel(cat, &cd, &h2) {
        Ok(v) => out.expect(
            kills && cat.compose(&cd.projection, &v).is_ok_and(|c| c == h2),
            "cokernel-factor-exists",
            "factorization of a morphism with h∘f ≠ 0, or wrong factorization",
            &d,
            None,
        ),
        Err(_) => out.expect(!kills, "cokernel-factor-exists", "h∘f = 0 but h does not factor", &d, None),
    }

    // biproduct
    let bp = cat.biproduct(&x, &y);
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).expect("composable");
    let laws = c(&bp.inj_left, &bp.proj_left) == cat.identity(&x)
        && c(&bp.inj_right, &bp.proj_right) == cat.identity(&y)
        && cat.is_zero_morphism(&c(&bp.inj_left, &bp.proj_right))
        && cat.is_zero_morphism(&c(&bp.inj_right, &bp.proj_left))
        && cat.add(&c(&bp.proj_left, &bp.inj_left), &c(&bp.proj_right, &bp.inj_right)).ok()
            == Some(cat.identity(&bp.obj));
    out.expect(laws, "biproduct", "biproduct identities fail", &d, None);

    // profile implications
    let bad = classify(cat, &f).inconsistencies();
    out.expect(bad.is_empty(), "profile", &bad.join(", "), &d, None);

    // pullback of (f, t) and the mediator of a cone through it
    let obj = ctx.object(&mut rng);
    let t = ctx.morphism(&mut rng, &obj, &y);
    let sq = pullback(cat, &f, &t).expect("common codomain");
    d.put(cat, "pb.t", &t).put(cat, "pb.p_Y", &sq.p_y).put(cat, "pb.p_T", &sq.p_t);
    let commutes = c(&sq.p_y, &f) == c(&sq.p_t, &t);
    out.expect(commutes, "pullback-commutes", "g∘p_Y ≠ t∘p_T", &d, None);
    let w = ctx.object(&mut rng);
    let m = ctx.morphism(&mut rng, &w, &sq.apex);
    let mediated = pullback_mediate(cat, &sq, &c(&m, &sq.p_y), &c(&m, &sq.p_t)).is_ok_and(|v| v == m);
    out.expect(mediated, "pullback-universal", "cone through P does not mediate back", &d, None);

    // pushout of (f, t)
    let obj = ctx.object(&mut rng);
    let t = ctx.morphism(&mut rng, &x, &obj);
    let sq = pushout(cat, &f, &t).expect("common domain");
    d.put(cat, "po.t", &t).put(cat, "po.s_Y", &sq.s_y).put(cat, "po.s_T", &sq.s_t);
    let commutes = c(&f, &sq.s_y) == c(&t, &sq.s_t);
    out.expect(commutes, "pushout-commutes", "s_Y∘f ≠ s_T∘t", &d, None);
    let w = ctx.object(&mut rng);
    let m = ctx.morphism(&mut rng, &sq.apex, &w);
    let mediated = pushout_mediate(cat, &sq, &c(&sq.s_y, &m), &c(&sq.s_t, &m)).is_ok_and(|v| v == m);
    out.expect(mediated, "pushout-universal", "cocone from S does not mediate back", &d, None);

    out
}
