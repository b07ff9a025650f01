use serde::{Deserialize, Serialize};

use super::constructions::{factor_through_cokernel, factor_through_kernel, is_iso};
use super::Category;

/// The six basic properties of a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismProfile {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
    pub is_kernel: bool,
    pub is_cokernel: bool,
    pub strict: bool,
}

impl MorphismProfile {
    /// The implications that hold in every additive category with kernels
    /// and cokernels. Returns the names of the ones that fail.
    pub fn inconsistencies(&self) -> Vec<&'static str> {
        let mut bad = Vec::new();
        let mut need = |ok: bool, name: &'static str| {
            if !ok {
                bad.push(name);
            }
        };
        need(!self.iso || (self.mono && self.epi && self.is_kernel && self.is_cokernel && self.strict), "iso => all");
        need(!self.is_kernel || self.mono, "kernel => mono");
        need(!self.is_cokernel || self.epi, "cokernel => epi");
        need(!(self.strict && self.mono) || self.is_kernel, "strict & mono => kernel");
        need(!(self.strict && self.epi) || self.is_cokernel, "strict & epi => cokernel");
        bad
    }
}

/// Mono/epi are read off the kernel/cokernel objects; `is_kernel` asks whether
/// the canonical factorization of `f` through `ker cok f` is an isomorphism,
/// `is_cokernel` dually; `strict` asks whether `cok ker f → ker cok f` is one.
pub fn classify<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> MorphismProfile {
    let ker = cat.kernel(f);
    let cok = cat.cokernel(f);
    let mono = cat.is_zero_object(&ker.obj);
    let epi = cat.is_zero_object(&cok.obj);
    let iso = is_iso(cat, f);

    let image = cat.kernel(&cok.projection);
    let coimage = cat.cokernel(&ker.inclusion);
    let through_image = factor_through_kernel(cat, &image, f).ok();
    let through_coimage = factor_through_cokernel(cat, &coimage, f).ok();

    let is_kernel = through_image.as_ref().is_some_and(|u| is_iso(cat, u));
    let is_cokernel = through_coimage.as_ref().is_some_and(|v| is_iso(cat, v));
    let strict = through_image
        .and_then(|u| factor_through_cokernel(cat, &coimage, &u).ok())
        .is_some_and(|fbar| is_iso(cat, &fbar));

    MorphismProfile {
        mono,
        epi,
        iso,
        is_kernel: cat.recognizes_kernel(f).unwrap_or(is_kernel),
        is_cokernel: cat.recognizes_cokernel(f).unwrap_or(is_cokernel),
        strict,
    }
}
