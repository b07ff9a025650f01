use crate::category::{factor_through_cokernel, factor_through_kernel, is_iso, Category};
use crate::error::{Error, Result};

/// A composable pair `X --f--> Y --g--> Z` with `g∘f = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactPair<M> {
    pub f: M,
    pub g: M,
}

pub type ExactPairOf<C> = ExactPair<<C as Category>::Mor>;

impl<M: Clone> ExactPair<M> {
    pub fn new<C: Category<Mor = M> + ?Sized>(cat: &C, f: M, g: M) -> Result<Self> {
        let h = cat.compose(&f, &g).map_err(|_| Error::mismatch("pair", "cod(f) != dom(g)"))?;
        if !cat.is_zero_morphism(&h) {
            return Err(Error::NonZeroComposite("pair"));
        }
        Ok(ExactPair { f, g })
    }
}

/// Whether `f` is a kernel of `g` and `g` a cokernel of `f`: the canonical
/// maps `dom f → ker g` and `cok f → cod g` are isomorphisms. An instance's
/// recognizer override can veto either half.
pub fn is_kernel_cokernel_pair<C: Category + ?Sized>(cat: &C, pair: &ExactPairOf<C>) -> bool {
    if cat.recognizes_kernel(&pair.f) == Some(false) || cat.recognizes_cokernel(&pair.g) == Some(false) {
        return false;
    }
    let ker = cat.kernel(&pair.g);
    let cok = cat.cokernel(&pair.f);
    let into_kernel = factor_through_kernel(cat, &ker, &pair.f);
    let out_of_cokernel = factor_through_cokernel(cat, &cok, &pair.g);
    matches!((into_kernel, out_of_cokernel), (Ok(u), Ok(v)) if is_iso(cat, &u) && is_iso(cat, &v))
}

/// Whether `g` has a section `s` such that `[f s]: X ⊕ Z → Y` is an
/// isomorphism.
pub fn is_split_exact<C: Category + ?Sized>(cat: &C, pair: &ExactPairOf<C>) -> bool {
    let z = cat.cod(&pair.g);
    let Some(s) = cat.lift(&pair.g, &cat.identity(&z)) else {
        return false;
    };
    let bp = cat.biproduct(&cat.dom(&pair.f), &z);
    crate::category::copair(cat, &bp, &pair.f, &s).is_ok_and(|m| is_iso(cat, &m))
}
