use super::{Ctx, Outcome};
use crate::category::{cokernel_transport, inverse, kernel_transport, Category};
use crate::engine::pair::{ExactPair, ExactPairOf};
use crate::engine::report::DiagramTrace;
use crate::engine::verdict::in_maximal_exact;

const AXIOMS: [&str; 7] = ["E0", "E0op", "E1", "E1op", "E2", "E2op", "iso-closure"];

/// Case `i` checks axiom `i mod 7`. Premises are sampled kernel-cokernel
/// pairs; a case whose premise is not in the structure is vacuous.
pub(super) fn case<C: Category + ?Sized>(ctx: &Ctx<'_, C>, index: usize) -> Outcome {
    let cat = ctx.cat;
    let mut rng = ctx.rng(index);
    let mut out = Outcome::default();
    let axiom = AXIOMS[index % AXIOMS.len()];
    out.tally(axiom);
    let mut d = DiagramTrace::new();
    let member = |p: &ExactPairOf<C>| in_maximal_exact(cat, p, &ctx.policy).is_yes();
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).expect("composable");

    let conclusion: ExactPairOf<C> = match axiom {
        "E0" => {
            let x = ctx.object(&mut rng);
            ExactPair { f: cat.identity(&x), g: cat.zero_morphism(&x, &cat.zero_object()) }
        }
        "E0op" => {
            let x = ctx.object(&mut rng);
            ExactPair { f: cat.zero_morphism(&cat.zero_object(), &x), g: cat.identity(&x) }
        }
        "E1" => {
            let outer = ctx.exact_pair(&mut rng);
            let inner = ctx.exact_pair_through(&mut rng, &cat.dom(&outer.f));
            d.put(cat, "f", &inner.f).put(cat, "f'", &outer.f);
            if !member(&inner) || !member(&outer) {
                out.vacuous = true;
                return out;
            }
            let h = c(&inner.f, &outer.f);
            let q = cat.cokernel(&h).projection;
            ExactPair { f: h, g: q }
        }
        "E1op" => {
            let first = ctx.exact_pair(&mut rng);
            let second = ctx.exact_pair_through(&mut rng, &cat.cod(&first.g));
            d.put(cat, "g", &first.g).put(cat, "g'", &second.g);
            if !member(&first) || !member(&second) {
                out.vacuous = true;
                return out;
            }
            let h = c(&first.g, &second.g);
            let k = cat.kernel(&h).inclusion;
            ExactPair { f: k, g: h }
        }
        "E2" => {
            let pair = ctx.exact_pair(&mut rng);
            let obj = ctx.object(&mut rng);
            let t = ctx.morphism(&mut rng, &cat.dom(&pair.f), &obj);
            d.put(cat, "f", &pair.f).put(cat, "g", &pair.g).put(cat, "t", &t);
            if !member(&pair) {
                out.vacuous = true;
                return out;
            }
            let (sq, q) = cokernel_transport(cat, &pair.f, &t).expect("common domain");
            d.put(cat, "s_Y", &sq.s_y);
            ExactPair { f: sq.s_t, g: q }
        }
        "E2op" => {
            let pair = ctx.exact_pair(&mut rng);
            let obj = ctx.object(&mut rng);
            let t = ctx.morphism(&mut rng, &obj, &cat.cod(&pair.g));
            d.put(cat, "f", &pair.f).put(cat, "g", &pair.g).put(cat, "t", &t);
            if !member(&pair) {
                out.vacuous = true;
                return out;
            }
            let (sq, k) = kernel_transport(cat, &pair.g, &t).expect("common codomain");
            d.put(cat, "p_Y", &sq.p_y);
            ExactPair { f: k, g: sq.p_t }
        }
        _ => {
            let pair = ctx.exact_pair(&mut rng);
            d.put(cat, "f", &pair.f).put(cat, "g", &pair.g);
            if !member(&pair) {
                out.vacuous = true;
                return out;
            }
            let iso = |obj: &C::Obj, rng: &mut _| cat.sample_automorphism(rng, obj, &ctx.scfg);
            let a_x = iso(&cat.dom(&pair.f), &mut rng);
            let a_y = iso(&cat.cod(&pair.f), &mut rng);
            let a_z = iso(&cat.cod(&pair.g), &mut rng);
            let inv = |a: &C::Mor| inverse(cat, a).expect("sampled automorphism is invertible");
            d.put(cat, "i_X", &a_x).put(cat, "i_Y", &a_y).put(cat, "i_Z", &a_z);
            ExactPair { f: c(&c(&inv(&a_x), &pair.f), &a_y), g: c(&c(&inv(&a_y), &pair.g), &a_z) }
        }
    };
    d.put(cat, "conclusion.f", &conclusion.f).put(cat, "conclusion.g", &conclusion.g);
    out.expect_member(ctx, axiom, &conclusion, &d, ("conclusion.f", "conclusion.g"));
    out
}
