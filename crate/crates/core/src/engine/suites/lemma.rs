use super::{Ctx, Outcome};
use crate::category::{
    cokernel_transport, factor_through_cokernel, factor_through_kernel, is_iso, kernel_transport, Category,
};
use crate::engine::report::{DiagramTrace, Recheck};

/// Pulling `g` back along `t` carries `ker g` to a kernel of `p_T`; pushing
/// `f` out along `t` carries `cok f` to a cokernel of `s_T`.
pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();

    let (y, z, obj) = (ctx.object(&mut rng), ctx.object(&mut rng), ctx.object(&mut rng));
    let g = ctx.morphism(&mut rng, &y, &z);
    let t = ctx.morphism(&mut rng, &obj, &z);
    let mut d = DiagramTrace::new();
    d.put(cat, "g", &g).put(cat, "t", &t);
    match kernel_transport(cat, &g, &t) {
        Ok((sq, j)) => {
            d.put(cat, "p_Y", &sq.p_y).put(cat, "p_T", &sq.p_t).put(cat, "j", &j);
            let kd = cat.kernel(&sq.p_t);
            let ok = factor_through_kernel(cat, &kd, &j).is_ok_and(|u| is_iso(cat, &u));
            let recheck = Recheck::NotKernelOf { m: "j".into(), of: "p_T".into() };
            out.expect(ok, "kernel-transport", "transported kernel is not a kernel of p_T", &d, Some(recheck));
        }
        Err(e) => out.fail("kernel-transport", e.to_string(), &d, None),
    }

    let (x, y, obj) = (ctx.object(&mut rng), ctx.object(&mut rng), ctx.object(&mut rng));
    let f = ctx.morphism(&mut rng, &x, &y);
    let t = ctx.morphism(&mut rng, &x, &obj);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &f).put(cat, "t", &t);
    match cokernel_transport(cat, &f, &t) {
        Ok((sq, c)) => {
            d.put(cat, "s_Y", &sq.s_y).put(cat, "s_T", &sq.s_t).put(cat, "c", &c);
            let cd = cat.cokernel(&sq.s_t);
            let ok = factor_through_cokernel(cat, &cd, &c).is_ok_and(|u| is_iso(cat, &u));
            let recheck = Recheck::NotCokernelOf { m: "c".into(), of: "s_T".into() };
            out.expect(ok, "cokernel-transport", "transported cokernel is not a cokernel of s_T", &d, Some(recheck));
        }
        Err(e) => out.fail("cokernel-transport", e.to_string(), &d, None),
    }
    out
}
