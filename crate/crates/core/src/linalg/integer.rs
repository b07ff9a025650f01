//! Integer normal forms: column Hermite form, Smith form, saturation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::rational;
use crate::error::{Error, Result};

/// Column-style Hermite normal form: `input * transform = hnf`.
///
/// Nonzero columns come first. Column `j` has its pivot, a positive entry, in
/// row `pivot_rows[j]`; pivot rows strictly increase, every entry above a pivot
/// is zero, and entries to the left of a pivot lie in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hnf {
    pub hnf: IntMatrix,
    pub transform: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

pub fn hnf(a: &IntMatrix) -> Hnf {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.cols());
    let mut pivot_rows = Vec::new();
    let mut col = 0;
    for row in 0..a.rows() {
        if col == a.cols() {
            break;
        }
        loop {
            // smallest nonzero |entry| among columns col.. of this row
            let best = (col..a.cols())
                .filter(|&j| !h.get(row, j).is_zero())
                .min_by(|&x, &y| h.get(row, x).abs().cmp(&h.get(row, y).abs()));
            let Some(best) = best else { break };
            h.swap_columns(col, best);
            u.swap_columns(col, best);
            let mut done = true;
            for j in col + 1..a.cols() {
                if h.get(row, j).is_zero() {
                    continue;
                }
                let q = -h.get(row, j).div_floor(h.get(row, col));
                h.add_column_multiple(j, col, &q);
                u.add_column_multiple(j, col, &q);
                if !h.get(row, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(row, col).is_zero() {
            continue;
        }
        if h.get(row, col).is_negative() {
            h.negate_column(col);
            u.negate_column(col);
        }
        let pivot = h.get(row, col).clone();
        for j in 0..col {
            let q = -h.get(row, j).div_floor(&pivot);
            h.add_column_multiple(j, col, &q);
            u.add_column_multiple(j, col, &q);
        }
        pivot_rows.push(row);
        col += 1;
    }
    Hnf { hnf: h, transform: u, pivot_rows }
}

/// Smith normal form: `row_transform * input * col_transform = diagonal`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfDecomposition {
    pub diagonal: IntMatrix,
    pub row_transform: IntMatrix,
    pub col_transform: IntMatrix,
}

impl SnfDecomposition {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n).map(|i| self.diagonal.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn snf(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // pivot: minimal nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| e.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_columns(t, pj);
            v.swap_columns(t, pj);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_column_multiple(j, t, &q);
                v.add_column_multiple(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix) -> SnfDecomposition {
    let mut d = d;
    let mut u = u;
    for t in 0..d.rows().min(d.cols()) {
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfDecomposition { diagonal: d, row_transform: u, col_transform: v }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                m.set(i, j, num / &prev);
            }
        }
        prev = m.get(k, k).clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * m.get(n - 1, n - 1)
}

pub fn is_unimodular(u: &IntMatrix) -> bool {
    u.is_square() && determinant(u).abs().is_one()
}

/// Z-basis of `{x ∈ Z^cols : A·x = 0}`, as columns in Hermite form.
pub fn integer_kernel_basis(a: &IntMatrix) -> IntMatrix {
    let h = hnf(a);
    let free: Vec<usize> = (h.rank()..a.cols()).collect();
    hermite_basis(&h.transform.select_columns(&free))
}

/// Canonical Z-basis of the lattice spanned by the columns: the nonzero
/// columns of its column Hermite form.
pub fn hermite_basis(a: &IntMatrix) -> IntMatrix {
    let h = hnf(a);
    let keep: Vec<usize> = (0..h.rank()).collect();
    h.hnf.select_columns(&keep)
}

/// Some integer `X` with `A·X = B`, or `None` if no integer solution exists.
pub fn solve_right_int(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows(), "solve_right_int: row counts differ");
    let h = hnf(a);
    let mut y = IntMatrix::zeros(a.cols(), b.cols());
    for c in 0..b.cols() {
        for (j, &r) in h.pivot_rows.iter().enumerate() {
            let mut rhs = b.get(r, c).clone();
            for i in 0..j {
                rhs -= h.hnf.get(r, i) * y.get(i, c);
            }
            let (q, rem) = rhs.div_rem(h.hnf.get(r, j));
            if !rem.is_zero() {
                return None;
            }
            y.set(j, c, q);
        }
    }
    let x = &h.transform * &y;
    (&(a * &x) == b).then_some(x)
}

/// Saturation of the lattice spanned by the (rationally independent) columns of
/// `l` inside `Z^ambient_rank`: all `v` with `k·v` in the span for some `k ≠ 0`.
/// Returned in Hermite form.
pub fn saturate(l: &IntMatrix, ambient_rank: usize) -> Result<IntMatrix> {
    if l.rows() != ambient_rank {
        return Err(Error::Shape(format!("saturate: basis has {} rows, ambient rank is {ambient_rank}", l.rows())));
    }
    let q = l.to_rational();
    if rational::rank(&q) != l.cols() {
        return Err(Error::DependentColumns);
    }
    // the saturation is the integer kernel of an integral annihilator of span(L)
    let annihilator = rational::primitive_columns(&rational::kernel_basis(&q.transpose()))
        .transpose()
        .to_integer()
        .expect("primitive columns are integral");
    Ok(integer_kernel_basis(&annihilator))
}
