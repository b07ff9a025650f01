//! A deliberately broken instance: FinVectQ whose recognizers refuse to call
//! a surjection a cokernel when its kernel is a line and its codomain has
//! dimension at least 2 (dually for injections). Everything else is honest,
//! so pulling back an accepted cokernel can produce a rejected one.

use exactcat::category::{Biproduct, Category, CokernelData, Justification, KernelData, Side};
use exactcat::instances::sampling::{SampleRng, SamplerConfig};
use exactcat::instances::{Dim, FinVectQ, VectMor};
use exactcat::linalg::rank;
use exactcat::Result;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default)]
pub struct Mock(pub FinVectQ);

pub fn mock() -> Mock {
    Mock(FinVectQ)
}

impl Mock {
    pub fn mor(&self, rows: usize, cols: usize, data: &[i64]) -> VectMor {
        self.0.mor(rows, cols, data)
    }
}

/// Whether the mock misreports `f` as not a cokernel.
pub fn tagged_cokernel(f: &VectMor) -> bool {
    let r = rank(&f.matrix);
    r == f.cod.0 && f.dom.0 - r == 1 && f.cod.0 >= 2
}

/// Whether the mock misreports `f` as not a kernel.
pub fn tagged_kernel(f: &VectMor) -> bool {
    let r = rank(&f.matrix);
    r == f.dom.0 && f.cod.0 - r == 1 && f.dom.0 >= 2
}

impl Category for Mock {
    type Obj = Dim;
    type Mor = VectMor;

    fn name(&self) -> &'static str {
        "Mock"
    }
    fn dom(&self, f: &VectMor) -> Dim {
        self.0.dom(f)
    }
    fn cod(&self, f: &VectMor) -> Dim {
        self.0.cod(f)
    }
    fn zero_object(&self) -> Dim {
        self.0.zero_object()
    }
    fn is_zero_object(&self, x: &Dim) -> bool {
        self.0.is_zero_object(x)
    }
    fn identity(&self, x: &Dim) -> VectMor {
        self.0.identity(x)
    }
    fn zero_morphism(&self, dom: &Dim, cod: &Dim) -> VectMor {
        self.0.zero_morphism(dom, cod)
    }
    fn is_zero_morphism(&self, f: &VectMor) -> bool {
        self.0.is_zero_morphism(f)
    }
    fn compose(&self, f: &VectMor, g: &VectMor) -> Result<VectMor> {
        self.0.compose(f, g)
    }
    fn add(&self, f: &VectMor, g: &VectMor) -> Result<VectMor> {
        self.0.add(f, g)
    }
    fn neg(&self, f: &VectMor) -> VectMor {
        self.0.neg(f)
    }
    fn biproduct(&self, x: &Dim, y: &Dim) -> Biproduct<Dim, VectMor> {
        self.0.biproduct(x, y)
    }
    fn kernel(&self, f: &VectMor) -> KernelData<Dim, VectMor> {
        self.0.kernel(f)
    }
    fn cokernel(&self, f: &VectMor) -> CokernelData<Dim, VectMor> {
        self.0.cokernel(f)
    }
    fn lift(&self, m: &VectMor, h: &VectMor) -> Option<VectMor> {
        self.0.lift(m, h)
    }
    fn extend(&self, e: &VectMor, h: &VectMor) -> Option<VectMor> {
        self.0.extend(e, h)
    }
    fn recognizes_cokernel(&self, f: &VectMor) -> Option<bool> {
        tagged_cokernel(f).then_some(false)
    }
    fn recognizes_kernel(&self, f: &VectMor) -> Option<bool> {
        tagged_kernel(f).then_some(false)
    }
    fn semistability_rule(&self, _side: Side) -> Option<Justification> {
        None
    }
    fn sample_object(&self, rng: &mut SampleRng, cfg: &SamplerConfig) -> Dim {
        self.0.sample_object(rng, cfg)
    }
    fn sample_morphism(&self, rng: &mut SampleRng, dom: &Dim, cod: &Dim, cfg: &SamplerConfig) -> VectMor {
        self.0.sample_morphism(rng, dom, cod, cfg)
    }
    fn sample_automorphism(&self, rng: &mut SampleRng, x: &Dim, cfg: &SamplerConfig) -> VectMor {
        self.0.sample_automorphism(rng, x, cfg)
    }
    fn shrink(&self, f: &VectMor) -> Vec<VectMor> {
        self.0.shrink(f)
    }
    fn object_to_json(&self, x: &Dim) -> Value {
        self.0.object_to_json(x)
    }
    fn object_from_json(&self, v: &Value) -> Result<Dim> {
        self.0.object_from_json(v)
    }
    fn morphism_to_json(&self, f: &VectMor) -> Value {
        self.0.morphism_to_json(f)
    }
    fn morphism_from_json(&self, v: &Value) -> Result<VectMor> {
        self.0.morphism_from_json(v)
    }
}
