//! Rebuilds, for sampled pairs `(f, g)` and `(f', g')` in the structure with
//! `g'∘g` defined, the diagrams showing that `(ker(g'∘g), g'∘g)` is again in
//! the structure, and checks each step exactly.
//!
//! With `k = ker(g'∘g): K → Y` and `α: K → X'` the unique map with
//! `f'∘α = g∘k`:
//! - the square `g∘k = f'∘α` is a pullback;
//! - for a pullback `(P, p_R, p_Y)` of `g` along `r`, the pair
//!   `((−p_R; p_Y), [r g])` is in the structure, the square
//!   `(−p_R; p_Y)∘u = ω_Y∘f` (with `u: X → P` the transported kernel) is a
//!   pushout, and the pullback square is also a pushout;
//! - the square `ω_Z∘f' = r∘ω_X'` with `r = [[f', 0], [0, id_Y]]` is a pushout;
//! - `r∘p = σ∘k` for `p = (−α; k)` and `σ = (−g; id_Y)`.
//!
//! Each case also checks the pasting property of pullbacks.

use super::{Ctx, Outcome};
use crate::category::{
    copair, factor_through_kernel, is_pullback_square, is_pushout_square, pair_into, pullback, Category,
};
use crate::engine::pair::{ExactPair, ExactPairOf};
use crate::engine::report::{DiagramTrace, Recheck};
use crate::engine::verdict::in_maximal_exact;
use crate::instances::sampling::SampleRng;

pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    pasting(ctx, &mut rng, &mut out);

    let first = ctx.exact_pair(&mut rng);
    let second = ctx.exact_pair_through(&mut rng, &cat.cod(&first.g));
    let mut d = DiagramTrace::new();
    d.put(cat, "f", &first.f).put(cat, "g", &first.g).put(cat, "f'", &second.f).put(cat, "g'", &second.g);
    let member = |p: &ExactPairOf<C>| in_maximal_exact(cat, p, &ctx.policy).is_yes();
    if !member(&first) || !member(&second) {
        out.vacuous = true;
        return out;
    }
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).expect("composable");
    let (f, g, f2, g2) = (&first.f, &first.g, &second.f, &second.g);

    let h = c(g, g2);
    let kd = cat.kernel(&h);
    let k = kd.inclusion.clone();
    d.put(cat, "k", &k);
    let gk = c(&k, g);
    let Some(alpha) = cat.lift(f2, &gk) else {
        out.fail("alpha", "g∘k does not factor through f'", &d, None);
        return out;
    };
    d.put(cat, "alpha", &alpha);
    out.expect(c(&alpha, f2) == gk, "alpha", "f'∘α ≠ g∘k", &d, None);

    // the kernel of g'∘g is a pullback of f' along g
    let ok = is_pullback_square(cat, g, f2, &k, &alpha).unwrap_or(false);
    let recheck = Recheck::NotPullback { g: "g".into(), t: "f'".into(), p_y: "k".into(), p_t: "alpha".into() };
    out.expect(ok, "kernel-pullback", "g∘k = f'∘α is not a pullback", &d, Some(recheck));

    out.expect_member(ctx, "E1op", &ExactPair { f: k.clone(), g: h.clone() }, &d, ("k", "g'∘g"));
    d.put(cat, "g'∘g", &h);

    // the pair built from the pullback of g along r = f'
    let bp = cat.biproduct(&cat.dom(f2), &cat.dom(g));
    let p = pair_into(cat, &bp, &cat.neg(&alpha), &k).expect("common domain");
    let q = copair(cat, &bp, f2, g).expect("common codomain");
    d.put(cat, "p", &p).put(cat, "q", &q);
    match ExactPair::new(cat, p.clone(), q.clone()) {
        Ok(pq) => {
            out.expect_member(ctx, "pullback-pair", &pq, &d, ("p", "q"));
        }
        Err(e) => out.fail("pullback-pair", format!("q∘p: {e}"), &d, None),
    }
    match factor_through_kernel(cat, &kd, f) {
        Ok(u) => {
            d.put(cat, "u", &u).put(cat, "omega_Y", &bp.inj_right);
            let ok = is_pushout_square(cat, f, &u, &bp.inj_right, &p).unwrap_or(false);
            let recheck = Recheck::NotPushout { f: "f".into(), t: "u".into(), s_y: "omega_Y".into(), s_t: "p".into() };
            out.expect(ok, "kernel-pushout", "p∘u = ω_Y∘f is not a pushout", &d, Some(recheck));
        }
        Err(e) => out.fail("kernel-pushout", format!("f does not factor through k: {e}"), &d, None),
    }
    let ok = is_pushout_square(cat, &alpha, &k, f2, g).unwrap_or(false);
    let recheck = Recheck::NotPushout { f: "alpha".into(), t: "k".into(), s_y: "f'".into(), s_t: "g".into() };
    out.expect(ok, "pullback-is-pushout", "g∘k = f'∘α is not a pushout", &d, Some(recheck));

    // the same pair along a sampled r
    let obj = ctx.object(&mut rng);
    let r = ctx.morphism(&mut rng, &obj, &cat.cod(g));
    let sq = pullback(cat, g, &r).expect("common codomain");
    let bpr = cat.biproduct(&obj, &cat.dom(g));
    let pr = pair_into(cat, &bpr, &cat.neg(&sq.p_t), &sq.p_y).expect("common domain");
    let qr = copair(cat, &bpr, &r, g).expect("common codomain");
    let mut dr = d.clone();
    dr.put(cat, "r", &r).put(cat, "(-p_R; p_Y)", &pr).put(cat, "[r g]", &qr);
    match ExactPair::new(cat, pr, qr) {
        Ok(pair) => {
            out.expect_member(ctx, "pullback-pair", &pair, &dr, ("(-p_R; p_Y)", "[r g]"));
        }
        Err(e) => out.fail("pullback-pair", format!("[r g]∘(-p_R; p_Y): {e}"), &dr, None),
    }

    // block map r
    let bz = cat.biproduct(&cat.cod(f2), &cat.dom(g));
    let r3 = pair_into(cat, &bz, &c(&bp.proj_left, f2), &bp.proj_right).expect("common domain");
    d.put(cat, "r", &r3).put(cat, "omega_X'", &bp.inj_left).put(cat, "omega_Z", &bz.inj_left);
    let ok = is_pushout_square(cat, f2, &bp.inj_left, &bz.inj_left, &r3).unwrap_or(false);
    let recheck = Recheck::NotPushout { f: "f'".into(), t: "omega_X'".into(), s_y: "omega_Z".into(), s_t: "r".into() };
    out.expect(ok, "block-pushout", "ω_Z∘f' = r∘ω_X' is not a pushout", &d, Some(recheck));

    // r∘p = σ∘k
    let sigma = pair_into(cat, &bz, &cat.neg(g), &cat.identity(&cat.dom(g))).expect("common domain");
    let (lhs, rhs) = (c(&p, &r3), c(&k, &sigma));
    d.put(cat, "sigma", &sigma).put(cat, "r∘p", &lhs).put(cat, "σ∘k", &rhs);
    let recheck = Recheck::NotEqual { lhs: "r∘p".into(), rhs: "σ∘k".into() };
    out.expect(lhs == rhs, "r∘p=σ∘k", "r∘p ≠ σ∘k", &d, Some(recheck));
    out
}

/// Given a pullback square on the right, a square on the left is a pullback
/// iff the outer rectangle is.
fn pasting<C: Category + ?Sized>(ctx: &Ctx<'_, C>, rng: &mut SampleRng, out: &mut Outcome) {
    let cat = ctx.cat;
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).expect("composable");
    let (y2, z2, z) = (ctx.object(rng), ctx.object(rng), ctx.object(rng));
    let g2 = ctx.morphism(rng, &y2, &z2);
    let cz = ctx.morphism(rng, &z, &z2);
    let right = pullback(cat, &g2, &cz).expect("common codomain");
    let x2 = ctx.object(rng);
    let f2 = ctx.morphism(rng, &x2, &y2);
    let left = pullback(cat, &right.p_y, &f2).expect("common codomain");
    let w = ctx.object(rng);
    let m = ctx.morphism(rng, &w, &left.apex);
    for (tag, m) in [("identity", cat.identity(&left.apex)), ("sampled", m)] {
        let (top, a) = (c(&m, &left.p_y), c(&m, &left.p_t));
        let inner = is_pullback_square(cat, &right.p_y, &f2, &top, &a).unwrap_or(false);
        let outer = is_pullback_square(cat, &c(&f2, &g2), &cz, &a, &c(&top, &right.p_t)).unwrap_or(false);
        let mut d = DiagramTrace::new();
        d.put(cat, "g'", &g2).put(cat, "c", &cz).put(cat, "b", &right.p_y).put(cat, "f'", &f2).put(cat, "m", &m);
        out.expect(inner == outer, "pasting", &format!("left square and rectangle disagree ({tag} cone)"), &d, None);
        if tag == "identity" {
            out.expect(inner, "pasting", "constructed left square is not a pullback", &d, None);
        }
    }
}
