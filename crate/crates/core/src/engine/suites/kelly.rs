//! For `h = g∘f`:
//! (a) `f`, `g` semi-stable cokernels ⇒ `h` is one;
//! (b) `f`, `g` semi-stable kernels ⇒ `h` is one;
//! (c) `h` a semi-stable cokernel ⇒ `g` is one;
//! (d) `h` a semi-stable kernel ⇒ `f` is one.
//! A contradiction needs a decided `Yes` premise and a decided failure of
//! the conclusion; `Unknown` is compatible with everything.

use super::{refutation_recheck, Ctx, Outcome};
use crate::category::{Category, Side};
use crate::engine::report::{DiagramTrace, Recheck};
use crate::engine::verdict::{decide_semistable_cokernel, decide_semistable_kernel, Verdict, VerdictOf};

enum Status<C: Category + ?Sized> {
    Decided(VerdictOf<C>),
    /// Not a cokernel (or kernel) at all.
    Inapplicable,
}

impl<C: Category + ?Sized> Status<C> {
    fn yes(&self) -> bool {
        matches!(self, Status::Decided(Verdict::Yes(_)))
    }

    fn fails(&self) -> bool {
        matches!(self, Status::Decided(Verdict::No(_)) | Status::Inapplicable)
    }
}

fn status<C: Category + ?Sized>(ctx: &Ctx<'_, C>, side: Side, m: &C::Mor, out: &mut Outcome) -> Status<C> {
    let v = match side {
        Side::Cokernel => decide_semistable_cokernel(ctx.cat, m, &ctx.policy),
        Side::Kernel => decide_semistable_kernel(ctx.cat, m, &ctx.policy),
    };
    match v {
        Ok(v) => {
            out.count(&v);
            Status::Decided(v)
        }
        Err(_) => Status::Inapplicable,
    }
}

pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).expect("composable");

    // a third of the cases compose cokernels, a third kernels
    let (f, g) = match index % 3 {
        0 => {
            let (x, y, z) = (ctx.object(&mut rng), ctx.object(&mut rng), ctx.object(&mut rng));
            (ctx.morphism(&mut rng, &x, &y), ctx.morphism(&mut rng, &y, &z))
        }
        1 => {
            let (w, x) = (ctx.object(&mut rng), ctx.object(&mut rng));
            let f = cat.cokernel(&ctx.morphism(&mut rng, &w, &x)).projection;
            let w2 = ctx.object(&mut rng);
            let g = cat.cokernel(&ctx.morphism(&mut rng, &w2, &cat.cod(&f))).projection;
            (f, g)
        }
        _ => {
            let (z, w) = (ctx.object(&mut rng), ctx.object(&mut rng));
            let g = cat.kernel(&ctx.morphism(&mut rng, &z, &w)).inclusion;
            let w2 = ctx.object(&mut rng);
            let f = cat.kernel(&ctx.morphism(&mut rng, &cat.dom(&g), &w2)).inclusion;
            (f, g)
        }
    };
    let h = c(&f, &g);
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &f).put(cat, "g", &g).put(cat, "h", &h);

    for side in [Side::Cokernel, Side::Kernel] {
        let sf = status(ctx, side, &f, &mut out);
        let sg = status(ctx, side, &g, &mut out);
        let sh = status(ctx, side, &h, &mut out);
        let (cancelled, cancel_name, clause_ab, clause_cd) = match side {
            Side::Cokernel => (&sg, "g", "a", "c"),
            Side::Kernel => (&sf, "f", "b", "d"),
        };
        if sf.yes() && sg.yes() {
            out.tally(clause_ab);
            if sh.fails() {
                let recheck = failure_recheck(ctx, side, &sh, "h", &mut d);
                out.fail(clause_ab, "composite of semi-stable maps is not semi-stable", &d, Some(recheck));
            }
        }
        if sh.yes() {
            out.tally(clause_cd);
            if cancelled.fails() {
                let recheck = failure_recheck(ctx, side, cancelled, cancel_name, &mut d);
                out.fail(clause_cd, format!("h is semi-stable but {cancel_name} is not"), &d, Some(recheck));
            }
        }
    }
    out
}

fn failure_recheck<C: Category + ?Sized>(
    ctx: &Ctx<'_, C>,
    side: Side,
    s: &Status<C>,
    name: &str,
    d: &mut DiagramTrace,
) -> Recheck {
    match (s, side) {
        (Status::Decided(Verdict::No(r)), _) => refutation_recheck(ctx.cat, r, d, (name, name)),
        (_, Side::Cokernel) => Recheck::NotCokernel { morphism: name.into() },
        (_, Side::Kernel) => Recheck::NotKernel { morphism: name.into() },
    }
}
