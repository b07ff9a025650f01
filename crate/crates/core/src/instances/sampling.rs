//! Deterministic samplers. Every draw derives its randomness from
//! `(seed, stream, index)`, so results do not depend on evaluation order.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::{Category, Morphism};
use crate::engine::{ExactPair, ExactPairOf};
use crate::linalg::IntMatrix;

pub type SampleRng = ChaCha8Rng;

/// Fraction of matrix draws replaced by structured ones (identities,
/// coordinate injections/projections, diagonals, zero).
pub const STRUCTURED_BIAS: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub max_dim: usize,
    pub max_entry: i64,
    pub seed: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig { max_dim: 3, max_entry: 3, seed: crate::DEFAULT_SEED }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64, stream: u64, index: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(stream ^ splitmix(index))))
}

/// Stream tags keep the draws of different consumers independent.
pub mod streams {
    pub const OBJECT: u64 = 0x01;
    pub const MORPHISM: u64 = 0x02;
    pub const EXACT_PAIR: u64 = 0x03;
    pub const PROBE: u64 = 0x04;
    /// Suites use `SUITE + k` for their k-th suite.
    pub const SUITE: u64 = 0x100;
}

pub fn sample_object<C: Category + ?Sized>(cat: &C, cfg: &SamplerConfig, index: u64) -> C::Obj {
    let mut rng = rng_for(cfg.seed, streams::OBJECT, index);
    cat.sample_object(&mut rng, cfg)
}

pub fn sample_morphism<C: Category + ?Sized>(
    cat: &C,
    dom: &C::Obj,
    cod: &C::Obj,
    cfg: &SamplerConfig,
    index: u64,
) -> C::Mor {
    let mut rng = rng_for(cfg.seed, streams::MORPHISM, index);
    cat.sample_morphism(&mut rng, dom, cod, cfg)
}

/// A genuine kernel-cokernel pair: sample `g0`, take `f = ker g0` and
/// replace `g0` by `cok f`.
pub fn sample_exact_pair<C: Category + ?Sized>(cat: &C, cfg: &SamplerConfig, index: u64) -> ExactPairOf<C> {
    let mut rng = rng_for(cfg.seed, streams::EXACT_PAIR, index);
    draw_exact_pair(cat, &mut rng, cfg)
}

pub fn draw_exact_pair<C: Category + ?Sized>(cat: &C, rng: &mut SampleRng, cfg: &SamplerConfig) -> ExactPairOf<C> {
    let y = cat.sample_object(rng, cfg);
    let w = cat.sample_object(rng, cfg);
    let g0 = cat.sample_morphism(rng, &y, &w, cfg);
    exact_pair_from(cat, &g0)
}

/// `(ker g0, cok ker g0)`.
pub fn exact_pair_from<C: Category + ?Sized>(cat: &C, g0: &C::Mor) -> ExactPairOf<C> {
    let f = cat.kernel(g0).inclusion;
    let g = cat.cokernel(&f).projection;
    ExactPair::new(cat, f, g).expect("kernel followed by its cokernel composes to zero")
}

pub fn uniform_int_matrix(rng: &mut SampleRng, rows: usize, cols: usize, max_entry: i64) -> IntMatrix {
    let e = max_entry.max(0);
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.random_range(-e..=e)))
}

pub fn structured_int_matrix(rng: &mut SampleRng, rows: usize, cols: usize, max_entry: i64) -> IntMatrix {
    let e = max_entry.max(1);
    match rng.random_range(0..4u8) {
        0 => IntMatrix::diagonal(rows, cols, &vec![BigInt::from(1); rows.min(cols)]),
        1 => {
            let diag: Vec<BigInt> = (0..rows.min(cols)).map(|_| BigInt::from(rng.random_range(-e..=e))).collect();
            IntMatrix::diagonal(rows, cols, &diag)
        }
        2 => IntMatrix::zeros(rows, cols),
        _ => {
            // a coordinate map: each column hits at most one row
            let mut m = IntMatrix::zeros(rows, cols);
            if rows > 0 {
                for c in 0..cols {
                    if rng.random_bool(0.8) {
                        m.set(rng.random_range(0..rows), c, BigInt::from(1));
                    }
                }
            }
            m
        }
    }
}

/// Uniform entries with probability `1 − STRUCTURED_BIAS`, otherwise a
/// structured matrix.
pub fn random_int_matrix(rng: &mut SampleRng, rows: usize, cols: usize, max_entry: i64) -> IntMatrix {
    if rng.random_bool(STRUCTURED_BIAS) {
        structured_int_matrix(rng, rows, cols, max_entry)
    } else {
        uniform_int_matrix(rng, rows, cols, max_entry)
    }
}

/// A product of random elementary integer operations, hence unimodular.
pub fn random_unimodular(rng: &mut SampleRng, n: usize, max_entry: i64) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    let e = max_entry.clamp(1, 2);
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        match rng.random_range(0..3u8) {
            0 if i != j => u.add_row_multiple(i, j, &BigInt::from(rng.random_range(-e..=e))),
            1 => u.swap_rows(i, j),
            _ => u.negate_row(i),
        }
    }
    u
}

/// Variants of a matrix morphism with fewer domain coordinates or smaller
/// entries, for witness minimization.
pub(crate) fn shrink_matrix<O: Clone, T: crate::linalg::Scalar + num_traits::Signed>(
    f: &Morphism<O, crate::linalg::Matrix<T>>,
    smaller_dom: impl Fn(usize) -> O,
    halve: impl Fn(&T) -> T,
) -> Vec<Morphism<O, crate::linalg::Matrix<T>>> {
    let m = &f.matrix;
    let mut out = Vec::new();
    for c in 0..m.cols() {
        let keep: Vec<usize> = (0..m.cols()).filter(|&k| k != c).collect();
        out.push(Morphism { dom: smaller_dom(m.cols() - 1), cod: f.cod.clone(), matrix: m.select_columns(&keep) });
    }
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let mut z = m.clone();
            z.set(r, c, T::zero());
            out.push(Morphism { dom: f.dom.clone(), cod: f.cod.clone(), matrix: z });
            let h = halve(v);
            if !h.is_zero() && &h != v {
                let mut s = m.clone();
                s.set(r, c, h);
                out.push(Morphism { dom: f.dom.clone(), cod: f.cod.clone(), matrix: s });
            }
        }
    }
    out
}
