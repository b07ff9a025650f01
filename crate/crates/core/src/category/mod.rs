//! Generic constructions over additive categories with kernels and cokernels.
//!
//! An instance supplies biproducts, kernels, cokernels and two factorization
//! hooks ([`Category::lift`] and [`Category::extend`]). Everything else,
//! pullbacks, pushouts, mediators, strictness and the recognizers in
//! [`classify`], is derived here and works for any instance.

mod classify;
mod constructions;

use std::fmt::Debug;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::instances::sampling::{SampleRng, SamplerConfig};

pub use classify::{classify, MorphismProfile};
pub use constructions::*;

/// Which side of a semi-stability question an instance rule answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Kernel,
    Cokernel,
}

/// Why a semi-stability claim is accepted without search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    Iso,
    Retraction,
    Coretraction,
    /// Every kernel and cokernel of an abelian category is semi-stable.
    Abelian,
    /// A proved rule specific to the instance.
    InstanceRule,
    /// An instance rule shipped as an unproved hypothesis.
    Hypothesis,
    /// Both halves of a kernel-cokernel pair.
    Pair {
        kernel: Box<Justification>,
        cokernel: Box<Justification>,
    },
}

/// A morphism given by a matrix acting on column vectors: `cod × dom`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism<O, M> {
    pub dom: O,
    pub cod: O,
    pub matrix: M,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Biproduct<O, M> {
    pub obj: O,
    pub inj_left: M,
    pub inj_right: M,
    pub proj_left: M,
    pub proj_right: M,
}

/// A kernel `inclusion: obj → dom(of)` of the morphism `of`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelData<O, M> {
    pub of: M,
    pub obj: O,
    pub inclusion: M,
}

/// A cokernel `projection: cod(of) → obj` of the morphism `of`.
#[derive(Clone, Debug, PartialEq)]
pub struct CokernelData<O, M> {
    pub of: M,
    pub obj: O,
    pub projection: M,
}

pub type BiproductOf<C> = Biproduct<<C as Category>::Obj, <C as Category>::Mor>;
pub type KernelOf<C> = KernelData<<C as Category>::Obj, <C as Category>::Mor>;
pub type CokernelOf<C> = CokernelData<<C as Category>::Obj, <C as Category>::Mor>;

/// An additive category with kernels and cokernels, together with the
/// sampling and serialization hooks the property suites need.
///
/// Implementations must be stateless: every method is a pure function of its
/// arguments (and of the random stream handed to the samplers).
pub trait Category: Send + Sync {
    type Obj: Clone + PartialEq + Debug + Send + Sync;
    type Mor: Clone + PartialEq + Debug + Send + Sync;

    fn name(&self) -> &'static str;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;

    fn zero_object(&self) -> Self::Obj;
    fn is_zero_object(&self, x: &Self::Obj) -> bool;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    fn zero_morphism(&self, dom: &Self::Obj, cod: &Self::Obj) -> Self::Mor;
    fn is_zero_morphism(&self, f: &Self::Mor) -> bool;

    /// `g ∘ f`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn neg(&self, f: &Self::Mor) -> Self::Mor;

    fn biproduct(&self, x: &Self::Obj, y: &Self::Obj) -> BiproductOf<Self>;
    fn kernel(&self, f: &Self::Mor) -> KernelOf<Self>;
    fn cokernel(&self, f: &Self::Mor) -> CokernelOf<Self>;

    /// Some `u` with `m ∘ u = h`, if one exists. Unique when `m` is mono.
    fn lift(&self, m: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor>;
    /// Some `u` with `u ∘ e = h`, if one exists. Unique when `e` is epi.
    fn extend(&self, e: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor>;

    /// Overrides the generic cokernel recognizer. Real instances return `None`.
    fn recognizes_cokernel(&self, _f: &Self::Mor) -> Option<bool> {
        None
    }

    /// Overrides the generic kernel recognizer. Real instances return `None`.
    fn recognizes_kernel(&self, _f: &Self::Mor) -> Option<bool> {
        None
    }

    /// A rule declaring every kernel (or cokernel) semi-stable, if the
    /// instance has one.
    fn semistability_rule(&self, _side: Side) -> Option<Justification> {
        None
    }

    fn sample_object(&self, rng: &mut SampleRng, cfg: &SamplerConfig) -> Self::Obj;
    fn sample_morphism(&self, rng: &mut SampleRng, dom: &Self::Obj, cod: &Self::Obj, cfg: &SamplerConfig) -> Self::Mor;
    fn sample_automorphism(&self, rng: &mut SampleRng, x: &Self::Obj, cfg: &SamplerConfig) -> Self::Mor;

    /// Smaller variants of `f` with the same codomain, used to minimize
    /// witnesses.
    fn shrink(&self, _f: &Self::Mor) -> Vec<Self::Mor> {
        Vec::new()
    }

    /// A fixed monomorphic epimorphism that is not an isomorphism, if the
    /// instance is not abelian.
    fn canonical_witness(&self) -> Option<Self::Mor> {
        None
    }

    fn object_to_json(&self, x: &Self::Obj) -> Value;
    fn object_from_json(&self, v: &Value) -> Result<Self::Obj>;
    fn morphism_to_json(&self, f: &Self::Mor) -> Value;
    fn morphism_from_json(&self, v: &Value) -> Result<Self::Mor>;
}
