//! Free abelian groups of finite rank (`Z^n`) with integer matrices.
//!
//! Kernels are integer kernels, which are automatically saturated. The
//! cokernel of `f: Z^m → Z^n` is the quotient of `Z^n` by the saturation of
//! the image, presented as a surjection onto a free lattice: taking the Smith
//! form `U·F·V = D` of rank `r`, the last `n − r` rows of `U` vanish exactly on
//! the saturation. So `(2): Z → Z` is mono and epi without being invertible.
//!
//! Semi-stability rules. Pulling back a surjection along any map gives a
//! surjection, so every cokernel is semi-stable. Pushing out a pure embedding
//! gives a pure embedding (the category is a torsion-free class in abelian
//! groups, hence quasi-abelian), so every kernel is semi-stable.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use serde_json::{json, Value};

use super::sampling::{random_int_matrix, random_unimodular, shrink_matrix, SampleRng, SamplerConfig};
use super::{check_endpoints, object_dim, split_morphism_json};
use crate::category::{Biproduct, Category, CokernelData, Justification, KernelData, Morphism, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// Object of LatticeZ: `Z^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(pub usize);

pub type LatticeMor = Morphism<Rank, IntMatrix>;

#[derive(Clone, Copy, Debug, Default)]
pub struct LatticeZ;

pub fn latticez() -> LatticeZ {
    LatticeZ
}

impl LatticeZ {
    pub fn morphism(&self, dom: usize, cod: usize, matrix: IntMatrix) -> Result<LatticeMor> {
        if matrix.shape() != (cod, dom) {
            return Err(Error::parse(
                "matrix",
                format!("expected {cod}x{dom}, found {}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(Morphism { dom: Rank(dom), cod: Rank(cod), matrix })
    }

    pub fn mor(&self, rows: usize, cols: usize, data: &[i64]) -> LatticeMor {
        Morphism { dom: Rank(cols), cod: Rank(rows), matrix: IntMatrix::from_i64(rows, cols, data) }
    }

    /// Whether the image of `f` is saturated in its codomain.
    pub fn has_pure_image(&self, f: &LatticeMor) -> bool {
        let basis = linalg::hermite_basis(&f.matrix);
        linalg::saturate(&basis, f.cod.0).is_ok_and(|s| s == basis)
    }

    pub fn is_surjective(&self, f: &LatticeMor) -> bool {
        linalg::solve_right_int(&f.matrix, &IntMatrix::identity(f.cod.0)).is_some()
    }
}

impl Category for LatticeZ {
    type Obj = Rank;
    type Mor = LatticeMor;

    fn name(&self) -> &'static str {
        "LatticeZ"
    }

    fn dom(&self, f: &LatticeMor) -> Rank {
        f.dom
    }

    fn cod(&self, f: &LatticeMor) -> Rank {
        f.cod
    }

    fn zero_object(&self) -> Rank {
        Rank(0)
    }

    fn is_zero_object(&self, x: &Rank) -> bool {
        x.0 == 0
    }

    fn identity(&self, x: &Rank) -> LatticeMor {
        Morphism { dom: *x, cod: *x, matrix: IntMatrix::identity(x.0) }
    }

    fn zero_morphism(&self, dom: &Rank, cod: &Rank) -> LatticeMor {
        Morphism { dom: *dom, cod: *cod, matrix: IntMatrix::zeros(cod.0, dom.0) }
    }

    fn is_zero_morphism(&self, f: &LatticeMor) -> bool {
        f.matrix.is_zero()
    }

    fn compose(&self, f: &LatticeMor, g: &LatticeMor) -> Result<LatticeMor> {
        check_endpoints("compose", f.cod == g.dom)?;
        Ok(Morphism { dom: f.dom, cod: g.cod, matrix: &g.matrix * &f.matrix })
    }

    fn add(&self, f: &LatticeMor, g: &LatticeMor) -> Result<LatticeMor> {
        check_endpoints("add", f.dom == g.dom && f.cod == g.cod)?;
        Ok(Morphism { dom: f.dom, cod: f.cod, matrix: &f.matrix + &g.matrix })
    }

    fn neg(&self, f: &LatticeMor) -> LatticeMor {
        Morphism { dom: f.dom, cod: f.cod, matrix: -&f.matrix }
    }

    fn biproduct(&self, x: &Rank, y: &Rank) -> Biproduct<Rank, LatticeMor> {
        let s = Rank(x.0 + y.0);
        let inj_left = IntMatrix::identity(x.0).vstack(&IntMatrix::zeros(y.0, x.0)).unwrap();
        let inj_right = IntMatrix::zeros(x.0, y.0).vstack(&IntMatrix::identity(y.0)).unwrap();
        Biproduct {
            obj: s,
            proj_left: Morphism { dom: s, cod: *x, matrix: inj_left.transpose() },
            proj_right: Morphism { dom: s, cod: *y, matrix: inj_right.transpose() },
            inj_left: Morphism { dom: *x, cod: s, matrix: inj_left },
            inj_right: Morphism { dom: *y, cod: s, matrix: inj_right },
        }
    }

    fn kernel(&self, f: &LatticeMor) -> KernelData<Rank, LatticeMor> {
        let basis = linalg::integer_kernel_basis(&f.matrix);
        let obj = Rank(basis.cols());
        KernelData { of: f.clone(), obj, inclusion: Morphism { dom: obj, cod: f.dom, matrix: basis } }
    }

    fn cokernel(&self, f: &LatticeMor) -> CokernelData<Rank, LatticeMor> {
        let s = linalg::snf(&f.matrix);
        let rest: Vec<usize> = (s.rank()..f.cod.0).collect();
        let rows = s.row_transform.select_rows(&rest);
        // canonical generators of the same row lattice
        let q = linalg::hermite_basis(&rows.transpose()).transpose();
        let obj = Rank(q.rows());
        CokernelData { of: f.clone(), obj, projection: Morphism { dom: f.cod, cod: obj, matrix: q } }
    }

    fn lift(&self, m: &LatticeMor, h: &LatticeMor) -> Option<LatticeMor> {
        if m.cod != h.cod {
            return None;
        }
        let x = linalg::solve_right_int(&m.matrix, &h.matrix)?;
        Some(Morphism { dom: h.dom, cod: m.dom, matrix: x })
    }

    fn extend(&self, e: &LatticeMor, h: &LatticeMor) -> Option<LatticeMor> {
        if e.dom != h.dom {
            return None;
        }
        let x = linalg::solve_right_int(&e.matrix.transpose(), &h.matrix.transpose())?;
        Some(Morphism { dom: e.cod, cod: h.cod, matrix: x.transpose() })
    }

    fn semistability_rule(&self, _side: Side) -> Option<Justification> {
        Some(Justification::InstanceRule)
    }

    fn sample_object(&self, rng: &mut SampleRng, cfg: &SamplerConfig) -> Rank {
        Rank(rng.random_range(0..=cfg.max_dim))
    }

    fn sample_morphism(&self, rng: &mut SampleRng, dom: &Rank, cod: &Rank, cfg: &SamplerConfig) -> LatticeMor {
        Morphism { dom: *dom, cod: *cod, matrix: random_int_matrix(rng, cod.0, dom.0, cfg.max_entry) }
    }

    fn sample_automorphism(&self, rng: &mut SampleRng, x: &Rank, cfg: &SamplerConfig) -> LatticeMor {
        Morphism { dom: *x, cod: *x, matrix: random_unimodular(rng, x.0, cfg.max_entry) }
    }

    fn shrink(&self, f: &LatticeMor) -> Vec<LatticeMor> {
        shrink_matrix(f, Rank, |v: &BigInt| v.div_rem(&BigInt::from(2)).0)
    }

    fn canonical_witness(&self) -> Option<LatticeMor> {
        Some(self.mor(1, 1, &[2]))
    }

    fn object_to_json(&self, x: &Rank) -> Value {
        json!({ "rank": x.0 })
    }

    fn object_from_json(&self, v: &Value) -> Result<Rank> {
        object_dim(v, "rank").map(Rank)
    }

    fn morphism_to_json(&self, f: &LatticeMor) -> Value {
        json!({
            "category": self.name(),
            "dom": self.object_to_json(&f.dom),
            "cod": self.object_to_json(&f.cod),
            "matrix": f.matrix.rows_to_json(),
        })
    }

    fn morphism_from_json(&self, v: &Value) -> Result<LatticeMor> {
        let (dom, cod, matrix) = split_morphism_json(self.name(), v)?;
        let dom = self.object_from_json(dom).map_err(|e| super::prefix_field("dom", e))?;
        let cod = self.object_from_json(cod).map_err(|e| super::prefix_field("cod", e))?;
        let matrix = IntMatrix::rows_from_json(matrix, cod.0, dom.0, "matrix")?;
        self.morphism(dom.0, cod.0, matrix)
    }
}
