//! Finite-dimensional rational vector spaces. Abelian, so it serves as the
//! control instance: every kernel-cokernel pair is exact and every morphism
//! is strict.

use num_rational::BigRational;
use rand::Rng;
use serde_json::{json, Value};

use super::sampling::{random_int_matrix, random_unimodular, shrink_matrix, SampleRng, SamplerConfig};
use super::{check_endpoints, object_dim, split_morphism_json};
use crate::category::{Biproduct, Category, CokernelData, Justification, KernelData, Morphism, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, rational::primitive_columns, RatMatrix};

/// Object of FinVectQ: `Q^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dim(pub usize);

pub type VectMor = Morphism<Dim, RatMatrix>;

#[derive(Clone, Copy, Debug, Default)]
pub struct FinVectQ;

pub fn finvectq() -> FinVectQ {
    FinVectQ
}

impl FinVectQ {
    pub fn morphism(&self, dom: usize, cod: usize, matrix: RatMatrix) -> Result<VectMor> {
        if matrix.shape() != (cod, dom) {
            return Err(Error::parse(
                "matrix",
                format!("expected {cod}x{dom}, found {}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(Morphism { dom: Dim(dom), cod: Dim(cod), matrix })
    }

    /// Shorthand for tests and examples: a `rows × cols` integer matrix.
    pub fn mor(&self, rows: usize, cols: usize, data: &[i64]) -> VectMor {
        Morphism { dom: Dim(cols), cod: Dim(rows), matrix: RatMatrix::from_i64(rows, cols, data) }
    }
}

impl Category for FinVectQ {
    type Obj = Dim;
    type Mor = VectMor;

    fn name(&self) -> &'static str {
        "FinVectQ"
    }

    fn dom(&self, f: &VectMor) -> Dim {
        f.dom
    }

    fn cod(&self, f: &VectMor) -> Dim {
        f.cod
    }

    fn zero_object(&self) -> Dim {
        Dim(0)
    }

    fn is_zero_object(&self, x: &Dim) -> bool {
        x.0 == 0
    }

    fn identity(&self, x: &Dim) -> VectMor {
        Morphism { dom: *x, cod: *x, matrix: RatMatrix::identity(x.0) }
    }

    fn zero_morphism(&self, dom: &Dim, cod: &Dim) -> VectMor {
        Morphism { dom: *dom, cod: *cod, matrix: RatMatrix::zeros(cod.0, dom.0) }
    }

    fn is_zero_morphism(&self, f: &VectMor) -> bool {
        f.matrix.is_zero()
    }

    fn compose(&self, f: &VectMor, g: &VectMor) -> Result<VectMor> {
        check_endpoints("compose", f.cod == g.dom)?;
        Ok(Morphism { dom: f.dom, cod: g.cod, matrix: &g.matrix * &f.matrix })
    }

    fn add(&self, f: &VectMor, g: &VectMor) -> Result<VectMor> {
        check_endpoints("add", f.dom == g.dom && f.cod == g.cod)?;
        Ok(Morphism { dom: f.dom, cod: f.cod, matrix: &f.matrix + &g.matrix })
    }

    fn neg(&self, f: &VectMor) -> VectMor {
        Morphism { dom: f.dom, cod: f.cod, matrix: -&f.matrix }
    }

    fn biproduct(&self, x: &Dim, y: &Dim) -> Biproduct<Dim, VectMor> {
        let s = Dim(x.0 + y.0);
        let (ix, iy) = (RatMatrix::identity(x.0), RatMatrix::identity(y.0));
        let inj_left = ix.vstack(&RatMatrix::zeros(y.0, x.0)).unwrap();
        let inj_right = RatMatrix::zeros(x.0, y.0).vstack(&iy).unwrap();
        Biproduct {
            obj: s,
            proj_left: Morphism { dom: s, cod: *x, matrix: inj_left.transpose() },
            proj_right: Morphism { dom: s, cod: *y, matrix: inj_right.transpose() },
            inj_left: Morphism { dom: *x, cod: s, matrix: inj_left },
            inj_right: Morphism { dom: *y, cod: s, matrix: inj_right },
        }
    }

    fn kernel(&self, f: &VectMor) -> KernelData<Dim, VectMor> {
        let basis = primitive_columns(&linalg::kernel_basis(&f.matrix));
        let obj = Dim(basis.cols());
        KernelData { of: f.clone(), obj, inclusion: Morphism { dom: obj, cod: f.dom, matrix: basis } }
    }

    fn cokernel(&self, f: &VectMor) -> CokernelData<Dim, VectMor> {
        // rows spanning the annihilator of the image
        let q = primitive_columns(&linalg::kernel_basis(&f.matrix.transpose())).transpose();
        let obj = Dim(q.rows());
        CokernelData { of: f.clone(), obj, projection: Morphism { dom: f.cod, cod: obj, matrix: q } }
    }

    fn lift(&self, m: &VectMor, h: &VectMor) -> Option<VectMor> {
        if m.cod != h.cod {
            return None;
        }
        let sol = linalg::solve_right(&m.matrix, &h.matrix)?;
        Some(Morphism { dom: h.dom, cod: m.dom, matrix: sol.particular })
    }

    fn extend(&self, e: &VectMor, h: &VectMor) -> Option<VectMor> {
        if e.dom != h.dom {
            return None;
        }
        let sol = linalg::solve_right(&e.matrix.transpose(), &h.matrix.transpose())?;
        Some(Morphism { dom: e.cod, cod: h.cod, matrix: sol.particular.transpose() })
    }

    fn semistability_rule(&self, _side: Side) -> Option<Justification> {
        Some(Justification::Abelian)
    }

    fn sample_object(&self, rng: &mut SampleRng, cfg: &SamplerConfig) -> Dim {
        Dim(rng.random_range(0..=cfg.max_dim))
    }

    fn sample_morphism(&self, rng: &mut SampleRng, dom: &Dim, cod: &Dim, cfg: &SamplerConfig) -> VectMor {
        let m = random_int_matrix(rng, cod.0, dom.0, cfg.max_entry);
        Morphism { dom: *dom, cod: *cod, matrix: m.to_rational() }
    }

    fn sample_automorphism(&self, rng: &mut SampleRng, x: &Dim, cfg: &SamplerConfig) -> VectMor {
        let u = random_unimodular(rng, x.0, cfg.max_entry);
        Morphism { dom: *x, cod: *x, matrix: u.to_rational() }
    }

    fn shrink(&self, f: &VectMor) -> Vec<VectMor> {
        shrink_matrix(f, Dim, halve_rational)
    }

    fn object_to_json(&self, x: &Dim) -> Value {
        json!({ "dim": x.0 })
    }

    fn object_from_json(&self, v: &Value) -> Result<Dim> {
        object_dim(v, "dim").map(Dim)
    }

    fn morphism_to_json(&self, f: &VectMor) -> Value {
        json!({
            "category": self.name(),
            "dom": self.object_to_json(&f.dom),
            "cod": self.object_to_json(&f.cod),
            "matrix": f.matrix.rows_to_json(),
        })
    }

    fn morphism_from_json(&self, v: &Value) -> Result<VectMor> {
        let (dom, cod, matrix) = split_morphism_json(self.name(), v)?;
        let dom = self.object_from_json(dom).map_err(|e| super::prefix_field("dom", e))?;
        let cod = self.object_from_json(cod).map_err(|e| super::prefix_field("cod", e))?;
        let matrix = RatMatrix::rows_from_json(matrix, cod.0, dom.0, "matrix")?;
        self.morphism(dom.0, cod.0, matrix)
    }
}

pub(crate) fn halve_rational(v: &BigRational) -> BigRational {
    (v / BigRational::from_integer(2.into())).trunc()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{classify, factor_through_cokernel, factor_through_kernel};

    #[test]
    fn kernel_example() {
        let c = FinVectQ;
        let k = c.kernel(&c.mor(1, 2, &[1, 1]));
        assert_eq!(k.obj, Dim(1));
        assert_eq!(k.inclusion.matrix, RatMatrix::from_i64(2, 1, &[1, -1]));
    }

    #[test]
    fn cokernel_example() {
        let c = FinVectQ;
        let f = c.mor(2, 1, &[1, 2]);
        let q = c.cokernel(&f);
        assert_eq!(q.obj, Dim(1));
        assert_eq!(q.projection.matrix, RatMatrix::from_i64(1, 2, &[2, -1]));
        // h = [4, -2] = 2·q
        let u = factor_through_cokernel(&c, &q, &c.mor(1, 2, &[4, -2])).unwrap();
        assert_eq!(u.matrix, RatMatrix::from_i64(1, 1, &[2]));
        assert!(factor_through_cokernel(&c, &q, &c.mor(1, 2, &[1, 0])).is_err());
    }

    #[test]
    fn factor_through_kernel_example() {
        let c = FinVectQ;
        let k = c.kernel(&c.mor(1, 2, &[1, 1]));
        let u = factor_through_kernel(&c, &k, &c.mor(2, 1, &[2, -2])).unwrap();
        assert_eq!(u.matrix, RatMatrix::from_i64(1, 1, &[2]));
        let id = factor_through_kernel(&c, &k, &k.inclusion).unwrap();
        assert_eq!(id, c.identity(&Dim(1)));
        assert!(factor_through_kernel(&c, &k, &c.mor(2, 1, &[1, 0])).is_err());
    }

    #[test]
    fn surjection_has_zero_cokernel() {
        let c = FinVectQ;
        assert_eq!(c.cokernel(&c.mor(1, 2, &[1, 1])).obj, Dim(0));
    }

    #[test]
    fn every_sampled_morphism_is_strict() {
        let c = FinVectQ;
        let cfg = SamplerConfig::default();
        for i in 0..60 {
            let x = super::super::sampling::sample_object(&c, &cfg, 2 * i);
            let y = super::super::sampling::sample_object(&c, &cfg, 2 * i + 1);
            let f = super::super::sampling::sample_morphism(&c, &x, &y, &cfg, i);
            assert!(classify(&c, &f).strict, "{f:?}");
        }
    }

    #[test]
    fn halving() {
        let h = |v: i64| halve_rational(&BigRational::from_integer(v.into())).to_integer();
        assert_eq!(h(5), 2.into());
        assert_eq!(h(-5), (-2).into());
        assert_eq!(h(1), 0.into());
    }
}
