use super::{BiproductOf, Category, CokernelOf, KernelOf};
use crate::error::{Error, Result};

/// Pullback of the cospan `Y --g--> Z <--t-- T`.
///
/// Built as the kernel of `d = g∘π_Y − t∘π_T` on `Y ⊕ T`.
#[derive(Clone, Debug, PartialEq)]
pub struct PullbackSquare<O, M> {
    pub g: M,
    pub t: M,
    pub apex: O,
    pub p_y: M,
    pub p_t: M,
    pub(crate) biproduct: super::Biproduct<O, M>,
    pub(crate) kernel: super::KernelData<O, M>,
}

/// Pushout of the span `Y <--f-- X --t--> T`.
///
/// Built as the cokernel of `d = ω_Y∘f − ω_T∘t` into `Y ⊕ T`.
#[derive(Clone, Debug, PartialEq)]
pub struct PushoutSquare<O, M> {
    pub f: M,
    pub t: M,
    pub apex: O,
    pub s_y: M,
    pub s_t: M,
    pub(crate) biproduct: super::Biproduct<O, M>,
    pub(crate) cokernel: super::CokernelData<O, M>,
}

pub type PullbackOf<C> = PullbackSquare<<C as Category>::Obj, <C as Category>::Mor>;
pub type PushoutOf<C> = PushoutSquare<<C as Category>::Obj, <C as Category>::Mor>;

/// The factorization `f = image ∘ fbar ∘ coimage` through
/// `cok ker f --fbar--> ker cok f`.
#[derive(Clone, Debug, PartialEq)]
pub struct StrictFactorization<M> {
    pub fbar: M,
    /// `dom f → cok ker f`.
    pub coimage: M,
    /// `ker cok f → cod f`.
    pub image: M,
}

pub fn compose<C: Category + ?Sized>(cat: &C, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
    cat.compose(f, g)
}

pub fn sub<C: Category + ?Sized>(cat: &C, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
    cat.add(f, &cat.neg(g))
}

/// `(f; g): W → X ⊕ Y`, i.e. `ω_X∘f + ω_Y∘g`.
pub fn pair_into<C: Category + ?Sized>(cat: &C, bp: &BiproductOf<C>, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
    cat.add(&cat.compose(f, &bp.inj_left)?, &cat.compose(g, &bp.inj_right)?)
}

/// `[f g]: X ⊕ Y → W`, i.e. `f∘π_X + g∘π_Y`.
pub fn copair<C: Category + ?Sized>(cat: &C, bp: &BiproductOf<C>, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
    cat.add(&cat.compose(&bp.proj_left, f)?, &cat.compose(&bp.proj_right, g)?)
}

/// The unique `u` with `inclusion ∘ u = h`. Fails if `of ∘ h ≠ 0`.
pub fn factor_through_kernel<C: Category + ?Sized>(cat: &C, kd: &KernelOf<C>, h: &C::Mor) -> Result<C::Mor> {
    if !cat.is_zero_morphism(&cat.compose(h, &kd.of)?) {
        return Err(Error::NonZeroComposite("factor_through_kernel"));
    }
    cat.lift(&kd.inclusion, h).ok_or(Error::NonZeroComposite("factor_through_kernel"))
}

/// The unique `u` with `u ∘ projection = h`. Fails if `h ∘ of ≠ 0`.
pub fn factor_through_cokernel<C: Category + ?Sized>(cat: &C, cd: &CokernelOf<C>, h: &C::Mor) -> Result<C::Mor> {
    if !cat.is_zero_morphism(&cat.compose(&cd.of, h)?) {
        return Err(Error::NonZeroComposite("factor_through_cokernel"));
    }
    cat.extend(&cd.projection, h).ok_or(Error::NonZeroComposite("factor_through_cokernel"))
}

pub fn pullback<C: Category + ?Sized>(cat: &C, g: &C::Mor, t: &C::Mor) -> Result<PullbackOf<C>> {
    if cat.cod(g) != cat.cod(t) {
        return Err(Error::mismatch("pullback", "cod(g) != cod(t)"));
    }
    let bp = cat.biproduct(&cat.dom(g), &cat.dom(t));
    let d = sub(cat, &cat.compose(&bp.proj_left, g)?, &cat.compose(&bp.proj_right, t)?)?;
    let kernel = cat.kernel(&d);
    let p_y = cat.compose(&kernel.inclusion, &bp.proj_left)?;
    let p_t = cat.compose(&kernel.inclusion, &bp.proj_right)?;
    Ok(PullbackSquare { g: g.clone(), t: t.clone(), apex: kernel.obj.clone(), p_y, p_t, biproduct: bp, kernel })
}

pub fn pushout<C: Category + ?Sized>(cat: &C, f: &C::Mor, t: &C::Mor) -> Result<PushoutOf<C>> {
    if cat.dom(f) != cat.dom(t) {
        return Err(Error::mismatch("pushout", "dom(f) != dom(t)"));
    }
    let bp = cat.biproduct(&cat.cod(f), &cat.cod(t));
    let d = sub(cat, &cat.compose(f, &bp.inj_left)?, &cat.compose(t, &bp.inj_right)?)?;
    let cokernel = cat.cokernel(&d);
    let s_y = cat.compose(&bp.inj_left, &cokernel.projection)?;
    let s_t = cat.compose(&bp.inj_right, &cokernel.projection)?;
    Ok(PushoutSquare { f: f.clone(), t: t.clone(), apex: cokernel.obj.clone(), s_y, s_t, biproduct: bp, cokernel })
}

/// The unique `m` with `p_y∘m = l_y` and `p_t∘m = l_t`.
pub fn pullback_mediate<C: Category + ?Sized>(
    cat: &C,
    sq: &PullbackOf<C>,
    l_y: &C::Mor,
    l_t: &C::Mor,
) -> Result<C::Mor> {
    if cat.dom(l_y) != cat.dom(l_t) || cat.compose(l_y, &sq.g)? != cat.compose(l_t, &sq.t)? {
        return Err(Error::NonCommuting("pullback_mediate"));
    }
    let h = pair_into(cat, &sq.biproduct, l_y, l_t)?;
    factor_through_kernel(cat, &sq.kernel, &h)
}

/// The unique `m` with `m∘s_y = l_y` and `m∘s_t = l_t`.
pub fn pushout_mediate<C: Category + ?Sized>(cat: &C, sq: &PushoutOf<C>, l_y: &C::Mor, l_t: &C::Mor) -> Result<C::Mor> {
    if cat.cod(l_y) != cat.cod(l_t) || cat.compose(&sq.f, l_y)? != cat.compose(&sq.t, l_t)? {
        return Err(Error::NonCommuting("pushout_mediate"));
    }
    let h = copair(cat, &sq.biproduct, l_y, l_t)?;
    factor_through_cokernel(cat, &sq.cokernel, &h)
}

/// A two-sided inverse of `f`, if one exists.
pub fn inverse<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> Option<C::Mor> {
    let (x, y) = (cat.dom(f), cat.cod(f));
    let u = cat.lift(f, &cat.identity(&y))?;
    let back = cat.compose(f, &u).ok()?;
    (back == cat.identity(&x)).then_some(u)
}

pub fn is_iso<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> bool {
    inverse(cat, f).is_some()
}

/// Whether a section `s` with `g∘s = id` exists.
pub fn is_retraction<C: Category + ?Sized>(cat: &C, g: &C::Mor) -> bool {
    cat.lift(g, &cat.identity(&cat.cod(g))).is_some()
}

/// Whether a retraction `r` with `r∘f = id` exists.
pub fn is_coretraction<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> bool {
    cat.extend(f, &cat.identity(&cat.dom(f))).is_some()
}

pub fn is_mono<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> bool {
    cat.is_zero_object(&cat.kernel(f).obj)
}

pub fn is_epi<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> bool {
    cat.is_zero_object(&cat.cokernel(f).obj)
}

pub fn induced_strict_map<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> Result<StrictFactorization<C::Mor>> {
    let ker = cat.kernel(f);
    let cok = cat.cokernel(f);
    let coim = cat.cokernel(&ker.inclusion);
    let im = cat.kernel(&cok.projection);
    let through_image = factor_through_kernel(cat, &im, f)?;
    let fbar = factor_through_cokernel(cat, &coim, &through_image)?;
    Ok(StrictFactorization { fbar, coimage: coim.projection, image: im.inclusion })
}

/// Whether the commuting square `g∘p_y = t∘p_t` is a pullback of `(g, t)`:
/// its comparison map into the constructed pullback is an isomorphism.
pub fn is_pullback_square<C: Category + ?Sized>(
    cat: &C,
    g: &C::Mor,
    t: &C::Mor,
    p_y: &C::Mor,
    p_t: &C::Mor,
) -> Result<bool> {
    let sq = pullback(cat, g, t)?;
    match pullback_mediate(cat, &sq, p_y, p_t) {
        Ok(m) => Ok(is_iso(cat, &m)),
        Err(Error::NonCommuting(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether the commuting square `s_y∘f = s_t∘t` is a pushout of `(f, t)`.
pub fn is_pushout_square<C: Category + ?Sized>(
    cat: &C,
    f: &C::Mor,
    t: &C::Mor,
    s_y: &C::Mor,
    s_t: &C::Mor,
) -> Result<bool> {
    let sq = pushout(cat, f, t)?;
    match pushout_mediate(cat, &sq, s_y, s_t) {
        Ok(m) => Ok(is_iso(cat, &m)),
        Err(Error::NonCommuting(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Whether two monomorphisms with a common codomain represent the same subobject.
pub fn same_subobject<C: Category + ?Sized>(cat: &C, a: &C::Mor, b: &C::Mor) -> bool {
    if cat.cod(a) != cat.cod(b) {
        return false;
    }
    match cat.lift(b, a) {
        Some(u) => is_iso(cat, &u) && cat.compose(&u, b).is_ok_and(|c| &c == a),
        None => false,
    }
}

/// Whether two epimorphisms with a common domain represent the same quotient.
pub fn same_quotient<C: Category + ?Sized>(cat: &C, a: &C::Mor, b: &C::Mor) -> bool {
    if cat.dom(a) != cat.dom(b) {
        return false;
    }
    match cat.extend(b, a) {
        Some(u) => is_iso(cat, &u) && cat.compose(b, &u).is_ok_and(|c| &c == a),
        None => false,
    }
}

/// Transport of `ker g` along a pullback: `j: ker g → P` with `p_y∘j = i_g`
/// and `p_t∘j = 0`; `j` is a kernel of `p_t`.
pub fn kernel_transport<C: Category + ?Sized>(cat: &C, g: &C::Mor, t: &C::Mor) -> Result<(PullbackOf<C>, C::Mor)> {
    let sq = pullback(cat, g, t)?;
    let ker = cat.kernel(g);
    let zero = cat.zero_morphism(&ker.obj, &cat.dom(t));
    let j = pullback_mediate(cat, &sq, &ker.inclusion, &zero)?;
    Ok((sq, j))
}

/// Transport of `cok f` along a pushout: `c: S → cok f` with `c∘s_y = c_f`
/// and `c∘s_t = 0`; `c` is a cokernel of `s_t`.
pub fn cokernel_transport<C: Category + ?Sized>(cat: &C, f: &C::Mor, t: &C::Mor) -> Result<(PushoutOf<C>, C::Mor)> {
    let sq = pushout(cat, f, t)?;
    let cok = cat.cokernel(f);
    let zero = cat.zero_morphism(&cat.cod(t), &cok.obj);
    let c = pushout_mediate(cat, &sq, &cok.projection, &zero)?;
    Ok((sq, c))
}
