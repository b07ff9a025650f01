//! Row reduction and linear solving over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{Matrix, RatMatrix};

/// Reduced row echelon form together with the transform that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub reduced: RatMatrix,
    pub pivots: Vec<usize>,
    /// Invertible, with `transform * input = reduced`.
    pub transform: RatMatrix,
}

pub fn rref(m: &RatMatrix) -> Rref {
    let mut r = m.clone();
    let mut t = RatMatrix::identity(m.rows());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(p) = (row..m.rows()).find(|&i| !r.get(i, col).is_zero()) else {
            continue;
        };
        r.swap_rows(row, p);
        t.swap_rows(row, p);
        let inv = r.get(row, col).recip();
        r.scale_row(row, &inv);
        t.scale_row(row, &inv);
        for i in 0..m.rows() {
            if i != row && !r.get(i, col).is_zero() {
                let factor = -r.get(i, col).clone();
                r.add_row_multiple(i, row, &factor);
                t.add_row_multiple(i, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { reduced: r, pivots, transform: t }
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(m).pivots.len()
}

/// Solution set `{x0 + n·c}` of `A·X = B`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub particular: RatMatrix,
    /// Columns span the kernel of `A`.
    pub kernel: RatMatrix,
}

/// Solves `A·X = B`; `None` when the system is inconsistent.
pub fn solve_right(a: &RatMatrix, b: &RatMatrix) -> Option<Solution> {
    assert_eq!(a.rows(), b.rows(), "solve_right: row counts differ");
    let aug = a.hstack(b).expect("same row count");
    let red = rref(&aug);
    if red.pivots.iter().any(|&p| p >= a.cols()) {
        return None;
    }
    let mut x = RatMatrix::zeros(a.cols(), b.cols());
    for (i, &p) in red.pivots.iter().enumerate() {
        for c in 0..b.cols() {
            x.set(p, c, red.reduced.get(i, a.cols() + c).clone());
        }
    }
    Some(Solution { particular: x, kernel: raw_kernel(&red.reduced, &red.pivots, a.cols()) })
}

fn raw_kernel(reduced: &RatMatrix, pivots: &[usize], ncols: usize) -> RatMatrix {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut k = RatMatrix::zeros(ncols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, BigRational::one());
        for (i, &p) in pivots.iter().enumerate() {
            k.set(p, j, -reduced.get(i, f).clone());
        }
    }
    k
}

/// Canonical basis of the kernel, as columns.
pub fn kernel_basis(a: &RatMatrix) -> RatMatrix {
    let red = rref(a);
    canonical_basis(&raw_kernel(&red.reduced, &red.pivots, a.cols()))
}

/// Canonical basis of the column space.
pub fn image_basis(a: &RatMatrix) -> RatMatrix {
    canonical_basis(a)
}

/// Basis of `{y : y·A = 0}`, returned as the rows of a matrix.
pub fn left_kernel_basis(a: &RatMatrix) -> RatMatrix {
    kernel_basis(&a.transpose()).transpose()
}

/// Canonical form of the subspace spanned by the columns of `basis`:
/// the nonzero rows of the RREF of its transpose, returned as columns.
/// Two column sets span the same subspace iff their canonical forms agree.
pub fn canonical_basis(basis: &RatMatrix) -> RatMatrix {
    let red = rref(&basis.transpose());
    let keep: Vec<usize> = (0..red.pivots.len()).collect();
    red.reduced.select_rows(&keep).transpose()
}

pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    if !a.is_square() {
        return None;
    }
    let red = rref(a);
    (red.pivots.len() == a.rows()).then_some(red.transform)
}

/// Rescales every column to a primitive integer vector whose first nonzero
/// entry is positive. Zero columns are left alone.
pub fn primitive_columns(m: &RatMatrix) -> RatMatrix {
    let mut cols = Vec::with_capacity(m.cols());
    for c in 0..m.cols() {
        let col = m.column(c);
        let Some(lead) = col.iter().find(|v| !v.is_zero()) else {
            cols.push(col);
            continue;
        };
        let lcm = col.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = col.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if lead.is_negative() {
            g = -g;
        }
        cols.push(ints.into_iter().map(|v| BigRational::from_integer(v / &g)).collect());
    }
    Matrix::from_columns(m.rows(), &cols)
}

/// Whether `v` (a column) lies in the span of the columns of `basis`.
pub fn in_span(basis: &RatMatrix, v: &RatMatrix) -> bool {
    solve_right(basis, v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: usize, cols: usize, data: &[i64]) -> RatMatrix {
        RatMatrix::from_i64(rows, cols, data)
    }

    #[test]
    fn rref_examples() {
        let id = rref(&q(2, 2, &[1, 0, 0, 1]));
        assert_eq!(id.reduced, q(2, 2, &[1, 0, 0, 1]));
        assert_eq!(id.pivots, vec![0, 1]);

        // hand elimination: R1 <- R1/2, R2 <- R2 - R1
        let m = q(2, 2, &[2, 4, 1, 2]);
        let r = rref(&m);
        assert_eq!(r.reduced, q(2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(&r.transform * &m, r.reduced);

        let swap = rref(&q(2, 2, &[0, 1, 1, 0]));
        assert_eq!(swap.reduced, q(2, 2, &[1, 0, 0, 1]));
        assert_eq!(swap.pivots, vec![0, 1]);
    }

    #[test]
    fn solve_examples() {
        let b = q(2, 3, &[1, -2, 3, 4, 0, 7]);
        let s = solve_right(&q(2, 2, &[1, 0, 0, 1]), &b).unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.cols(), 0);

        let half = solve_right(&q(1, 1, &[2]), &q(1, 1, &[1])).unwrap();
        let expected = BigRational::new(1.into(), 2.into());
        assert_eq!(half.particular.get(0, 0), &expected);
        assert_eq!(half.kernel.cols(), 0);

        assert!(solve_right(&q(1, 1, &[0]), &q(1, 1, &[1])).is_none());
    }

    #[test]
    fn kernel_and_image_examples() {
        assert_eq!(kernel_basis(&q(2, 2, &[1, 0, 0, 1])).cols(), 0);
        assert_eq!(kernel_basis(&q(1, 2, &[1, 1])), q(2, 1, &[1, -1]));
        assert_eq!(kernel_basis(&q(1, 2, &[0, 0])), q(2, 2, &[1, 0, 0, 1]));

        assert_eq!(image_basis(&q(2, 2, &[1, 0, 0, 1])), q(2, 2, &[1, 0, 0, 1]));
        assert_eq!(image_basis(&q(2, 1, &[1, 2])), q(2, 1, &[1, 2]));
        assert_eq!(image_basis(&q(2, 2, &[0, 0, 0, 0])).cols(), 0);
    }

    #[test]
    fn primitive_scaling() {
        let m =
            RatMatrix::new(2, 1, vec![BigRational::new((-1).into(), 2.into()), BigRational::from_integer(1.into())])
                .unwrap();
        assert_eq!(primitive_columns(&m), q(2, 1, &[1, -2]));
    }

    #[test]
    fn zero_dimensional_inputs() {
        let empty = RatMatrix::zeros(0, 3);
        assert_eq!(kernel_basis(&empty), q(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(image_basis(&empty).shape(), (0, 0));
        let s = solve_right(&RatMatrix::zeros(0, 2), &RatMatrix::zeros(0, 1)).unwrap();
        assert_eq!(s.kernel.cols(), 2);
    }
}
