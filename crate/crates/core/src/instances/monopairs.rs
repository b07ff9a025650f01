//! Pairs `(U ⊆ V)` of finite-dimensional rational vector spaces. A morphism
//! `(U ⊆ V) → (U' ⊆ V')` is a linear map `φ: V → V'` with `φ(U) ⊆ U'`.
//!
//! Kernel of `φ`: `(ker φ ∩ U ⊆ ker φ)`. Cokernel: `(image of U' ⊆ V'/im φ)`.
//! So `id_Q: (0 ⊆ Q) → (Q ⊆ Q)` is mono and epi but has no inverse.
//!
//! Pairs with `U` arbitrary form the arrow category of vector spaces; the
//! monomorphic arrows form a torsion-free class there, so the category is
//! expected to be quasi-abelian. The semi-stability rules rest on that and are
//! flagged [`Justification::Hypothesis`]; [`MonoPairsQ::probe_only`] turns them
//! off.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::{json, Value};

use super::finvect::halve_rational;
use super::sampling::{random_int_matrix, random_unimodular, shrink_matrix, SampleRng, SamplerConfig, STRUCTURED_BIAS};
use super::{check_endpoints, object_dim, split_morphism_json};
use crate::category::{Biproduct, Category, CokernelData, Justification, KernelData, Morphism, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, rational::primitive_columns, RatMatrix};

/// `U ⊆ Q^dim`, with `U` stored as the columns of a canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspacePair {
    dim: usize,
    sub: RatMatrix,
}

impl SubspacePair {
    /// Rejects bases with the wrong row count or dependent columns.
    pub fn new(dim: usize, basis: RatMatrix) -> Result<Self> {
        if basis.rows() != dim {
            return Err(Error::parse("sub", format!("basis vectors must have length {dim}, found {}", basis.rows())));
        }
        if linalg::rank(&basis) != basis.cols() {
            return Err(Error::DependentColumns);
        }
        Ok(Self::spanned_by(&basis))
    }

    /// The pair `(span(columns) ⊆ Q^rows)`.
    pub fn spanned_by(columns: &RatMatrix) -> Self {
        SubspacePair { dim: columns.rows(), sub: linalg::canonical_basis(columns) }
    }

    pub fn zero() -> Self {
        SubspacePair { dim: 0, sub: RatMatrix::zeros(0, 0) }
    }

    /// `(0 ⊆ Q^n)`.
    pub fn bare(n: usize) -> Self {
        SubspacePair { dim: n, sub: RatMatrix::zeros(n, 0) }
    }

    /// `(Q^n ⊆ Q^n)`.
    pub fn full(n: usize) -> Self {
        SubspacePair { dim: n, sub: RatMatrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sub_dim(&self) -> usize {
        self.sub.cols()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.sub
    }

    /// Rows spanning the linear forms that vanish on `U`.
    pub fn annihilator(&self) -> RatMatrix {
        linalg::left_kernel_basis(&self.sub)
    }

    pub fn contains(&self, v: &RatMatrix) -> bool {
        (&self.annihilator() * v).is_zero()
    }
}

pub type PairMor = Morphism<SubspacePair, RatMatrix>;

#[derive(Clone, Copy, Debug)]
pub struct MonoPairsQ {
    hypothesis_rules: bool,
}

impl Default for MonoPairsQ {
    fn default() -> Self {
        MonoPairsQ { hypothesis_rules: true }
    }
}

pub fn monopairsq() -> MonoPairsQ {
    MonoPairsQ::default()
}

impl MonoPairsQ {
    /// The instance without its semi-stability rules; every question goes to
    /// the probes.
    pub fn probe_only() -> Self {
        MonoPairsQ { hypothesis_rules: false }
    }

    pub fn with_rules(hypothesis_rules: bool) -> Self {
        MonoPairsQ { hypothesis_rules }
    }

    pub fn hypothesis_rules(&self) -> bool {
        self.hypothesis_rules
    }

    /// Validates shape and `φ(U) ⊆ U'`.
    pub fn morphism(&self, dom: SubspacePair, cod: SubspacePair, matrix: RatMatrix) -> Result<PairMor> {
        if matrix.shape() != (cod.dim, dom.dim) {
            return Err(Error::parse(
                "matrix",
                format!("expected {}x{}, found {}x{}", cod.dim, dom.dim, matrix.rows(), matrix.cols()),
            ));
        }
        if !cod.contains(&(&matrix * &dom.sub)) {
            return Err(Error::SubspaceConstraint);
        }
        Ok(Morphism { dom, cod, matrix })
    }

    /// Shorthand: ambient integer matrix, panicking on invalid input.
    pub fn mor(&self, dom: &SubspacePair, cod: &SubspacePair, data: &[i64]) -> PairMor {
        self.morphism(dom.clone(), cod.clone(), RatMatrix::from_i64(cod.dim, dom.dim, data))
            .expect("valid subspace pair morphism")
    }

    pub fn pair(&self, dim: usize, basis_columns: &[&[i64]]) -> SubspacePair {
        let cols: Vec<Vec<BigRational>> =
            basis_columns.iter().map(|c| c.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        SubspacePair::new(dim, RatMatrix::from_columns(dim, &cols)).expect("independent basis")
    }

    /// Linear constraint matrix on `vec(S)` for maps `x → y` between the
    /// given pairs: `N_y·S·B_x = 0`.
    fn constraint(x: &SubspacePair, y: &SubspacePair) -> RatMatrix {
        x.sub.transpose().kron(&y.annihilator())
    }
}

/// Solves for `S` (`rows × cols`) subject to `L_i·S·R_i = T_i` for each
/// `(L_i, R_i, T_i)`.
fn solve_sandwich(rows: usize, cols: usize, eqs: &[(RatMatrix, RatMatrix, RatMatrix)]) -> Option<RatMatrix> {
    let mut a = RatMatrix::zeros(0, rows * cols);
    let mut b = RatMatrix::zeros(0, 1);
    for (l, r, t) in eqs {
        a = a.vstack(&r.transpose().kron(l)).ok()?;
        b = b.vstack(&t.vec()).ok()?;
    }
    let sol = linalg::solve_right(&a, &b)?;
    Some(RatMatrix::unvec(&sol.particular, rows, cols))
}

impl Category for MonoPairsQ {
    type Obj = SubspacePair;
    type Mor = PairMor;

    fn name(&self) -> &'static str {
        "MonoPairsQ"
    }

    fn dom(&self, f: &PairMor) -> SubspacePair {
        f.dom.clone()
    }

    fn cod(&self, f: &PairMor) -> SubspacePair {
        f.cod.clone()
    }

    fn zero_object(&self) -> SubspacePair {
        SubspacePair::zero()
    }

    fn is_zero_object(&self, x: &SubspacePair) -> bool {
        x.dim == 0
    }

    fn identity(&self, x: &SubspacePair) -> PairMor {
        Morphism { dom: x.clone(), cod: x.clone(), matrix: RatMatrix::identity(x.dim) }
    }

    fn zero_morphism(&self, dom: &SubspacePair, cod: &SubspacePair) -> PairMor {
        Morphism { dom: dom.clone(), cod: cod.clone(), matrix: RatMatrix::zeros(cod.dim, dom.dim) }
    }

    fn is_zero_morphism(&self, f: &PairMor) -> bool {
        f.matrix.is_zero()
    }

    fn compose(&self, f: &PairMor, g: &PairMor) -> Result<PairMor> {
        check_endpoints("compose", f.cod == g.dom)?;
        Ok(Morphism { dom: f.dom.clone(), cod: g.cod.clone(), matrix: &g.matrix * &f.matrix })
    }

    fn add(&self, f: &PairMor, g: &PairMor) -> Result<PairMor> {
        check_endpoints("add", f.dom == g.dom && f.cod == g.cod)?;
        Ok(Morphism { dom: f.dom.clone(), cod: f.cod.clone(), matrix: &f.matrix + &g.matrix })
    }

    fn neg(&self, f: &PairMor) -> PairMor {
        Morphism { dom: f.dom.clone(), cod: f.cod.clone(), matrix: -&f.matrix }
    }

    fn biproduct(&self, x: &SubspacePair, y: &SubspacePair) -> Biproduct<SubspacePair, PairMor> {
        let s = SubspacePair::spanned_by(&x.sub.block_diag(&y.sub));
        let inj_left = RatMatrix::identity(x.dim).vstack(&RatMatrix::zeros(y.dim, x.dim)).unwrap();
        let inj_right = RatMatrix::zeros(x.dim, y.dim).vstack(&RatMatrix::identity(y.dim)).unwrap();
        Biproduct {
            proj_left: Morphism { dom: s.clone(), cod: x.clone(), matrix: inj_left.transpose() },
            proj_right: Morphism { dom: s.clone(), cod: y.clone(), matrix: inj_right.transpose() },
            inj_left: Morphism { dom: x.clone(), cod: s.clone(), matrix: inj_left },
            inj_right: Morphism { dom: y.clone(), cod: s.clone(), matrix: inj_right },
            obj: s,
        }
    }

    fn kernel(&self, f: &PairMor) -> KernelData<SubspacePair, PairMor> {
        let k = primitive_columns(&linalg::kernel_basis(&f.matrix));
        // coordinates c with k·c ∈ U
        let inside = linalg::kernel_basis(&(&f.dom.annihilator() * &k));
        let obj = SubspacePair::spanned_by(&inside);
        KernelData { of: f.clone(), obj: obj.clone(), inclusion: Morphism { dom: obj, cod: f.dom.clone(), matrix: k } }
    }

    fn cokernel(&self, f: &PairMor) -> CokernelData<SubspacePair, PairMor> {
        let q = primitive_columns(&linalg::kernel_basis(&f.matrix.transpose())).transpose();
        let obj = SubspacePair::spanned_by(&(&q * &f.cod.sub));
        CokernelData {
            of: f.clone(),
            obj: obj.clone(),
            projection: Morphism { dom: f.cod.clone(), cod: obj, matrix: q },
        }
    }

    fn lift(&self, m: &PairMor, h: &PairMor) -> Option<PairMor> {
        if m.cod != h.cod {
            return None;
        }
        let (x, y) = (&h.dom, &m.dom);
        let s = solve_sandwich(
            y.dim,
            x.dim,
            &[
                (m.matrix.clone(), RatMatrix::identity(x.dim), h.matrix.clone()),
                (y.annihilator(), x.sub.clone(), RatMatrix::zeros(y.annihilator().rows(), x.sub.cols())),
            ],
        )?;
        Some(Morphism { dom: x.clone(), cod: y.clone(), matrix: s })
    }

    fn extend(&self, e: &PairMor, h: &PairMor) -> Option<PairMor> {
        if e.dom != h.dom {
            return None;
        }
        let (x, y) = (&e.cod, &h.cod);
        let n_y = y.annihilator();
        let s = solve_sandwich(
            y.dim,
            x.dim,
            &[
                (RatMatrix::identity(y.dim), e.matrix.clone(), h.matrix.clone()),
                (n_y.clone(), x.sub.clone(), RatMatrix::zeros(n_y.rows(), x.sub.cols())),
            ],
        )?;
        Some(Morphism { dom: x.clone(), cod: y.clone(), matrix: s })
    }

    fn semistability_rule(&self, _side: Side) -> Option<Justification> {
        self.hypothesis_rules.then_some(Justification::Hypothesis)
    }

    fn sample_object(&self, rng: &mut SampleRng, cfg: &SamplerConfig) -> SubspacePair {
        let n = rng.random_range(0..=cfg.max_dim);
        let k = rng.random_range(0..=n);
        for _ in 0..4 {
            let b = random_int_matrix(rng, n, k, cfg.max_entry).to_rational();
            if linalg::rank(&b) == k {
                return SubspacePair::spanned_by(&b);
            }
        }
        // coordinate subspace as a fallback
        SubspacePair::spanned_by(&RatMatrix::identity(n).select_columns(&(0..k).collect::<Vec<_>>()))
    }

    fn sample_morphism(
        &self,
        rng: &mut SampleRng,
        dom: &SubspacePair,
        cod: &SubspacePair,
        cfg: &SamplerConfig,
    ) -> PairMor {
        let free = primitive_columns(&linalg::kernel_basis(&MonoPairsQ::constraint(dom, cod)));
        let e = cfg.max_entry.max(0);
        let sparse = rng.random_bool(STRUCTURED_BIAS);
        let coeffs = RatMatrix::from_fn(free.cols(), 1, |_, _| {
            let v = if sparse { rng.random_range(0..=1) } else { rng.random_range(-e..=e) };
            BigRational::from_integer(BigInt::from(v))
        });
        let v = &free * &coeffs;
        Morphism { dom: dom.clone(), cod: cod.clone(), matrix: RatMatrix::unvec(&v, cod.dim, dom.dim) }
    }

    fn sample_automorphism(&self, rng: &mut SampleRng, x: &SubspacePair, cfg: &SamplerConfig) -> PairMor {
        // adapted basis P = [B | C]; block upper triangular T keeps span B fixed
        let (n, k) = (x.dim, x.sub.cols());
        let mut p = x.sub.clone();
        for i in 0..n {
            let e = RatMatrix::identity(n).select_columns(&[i]);
            if !linalg::in_span(&p, &e) {
                p = p.hstack(&e).unwrap();
            }
        }
        let a11 = random_unimodular(rng, k, cfg.max_entry).to_rational();
        let a22 = random_unimodular(rng, n - k, cfg.max_entry).to_rational();
        let a12 = random_int_matrix(rng, k, n - k, cfg.max_entry).to_rational();
        let top = a11.hstack(&a12).unwrap();
        let bottom = RatMatrix::zeros(n - k, k).hstack(&a22).unwrap();
        let t = top.vstack(&bottom).unwrap();
        let pinv = linalg::inverse(&p).expect("adapted basis is a basis");
        Morphism { dom: x.clone(), cod: x.clone(), matrix: &(&p * &t) * &pinv }
    }

    fn shrink(&self, f: &PairMor) -> Vec<PairMor> {
        // only entry-level shrinking: dropping coordinates would change the subspace
        let cols = f.dom.dim;
        shrink_matrix(f, |_| f.dom.clone(), halve_rational)
            .into_iter()
            .filter(|g| g.matrix.cols() == cols && f.cod.contains(&(&g.matrix * &f.dom.sub)))
            .collect()
    }

    fn canonical_witness(&self) -> Option<PairMor> {
        Some(self.mor(&SubspacePair::bare(1), &SubspacePair::full(1), &[1]))
    }

    fn object_to_json(&self, x: &SubspacePair) -> Value {
        json!({ "dim": x.dim, "sub": x.sub.transpose().rows_to_json() })
    }

    fn object_from_json(&self, v: &Value) -> Result<SubspacePair> {
        let dim = object_dim(v, "dim")?;
        let sub = v.get("sub").ok_or_else(|| Error::parse("sub", "missing"))?;
        let k = sub.as_array().map(Vec::len).ok_or_else(|| Error::parse("sub", "expected a list of basis vectors"))?;
        let vectors = RatMatrix::rows_from_json(sub, k, dim, "sub")?;
        SubspacePair::new(dim, vectors.transpose())
    }

    fn morphism_to_json(&self, f: &PairMor) -> Value {
        json!({
            "category": self.name(),
            "dom": self.object_to_json(&f.dom),
            "cod": self.object_to_json(&f.cod),
            "matrix": f.matrix.rows_to_json(),
        })
    }

    fn morphism_from_json(&self, v: &Value) -> Result<PairMor> {
        let (dom, cod, matrix) = split_morphism_json(self.name(), v)?;
        let dom = self.object_from_json(dom).map_err(|e| super::prefix_field("dom", e))?;
        let cod = self.object_from_json(cod).map_err(|e| super::prefix_field("cod", e))?;
        let matrix = RatMatrix::rows_from_json(matrix, cod.dim, dom.dim, "matrix")?;
        self.morphism(dom, cod, matrix)
    }
}

/// Whether the ambient map is injective, read off the matrix directly.
pub fn ambient_injective(f: &PairMor) -> bool {
    linalg::rank(&f.matrix) == f.dom.dim
}

/// Whether the ambient map is surjective, read off the matrix directly.
pub fn ambient_surjective(f: &PairMor) -> bool {
    linalg::rank(&f.matrix) == f.cod.dim
}
