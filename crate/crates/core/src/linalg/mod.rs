//! Exact arithmetic substrate: matrices over arbitrary-precision integers and
//! rationals, row reduction, Hermite/Smith normal forms and saturation.

pub mod integer;
pub mod json;
pub mod matrix;
pub mod rational;

pub use integer::{
    determinant, hermite_basis, hnf, integer_kernel_basis, is_unimodular, saturate, snf, solve_right_int, Hnf,
    SnfDecomposition,
};
pub use matrix::{IntMatrix, Matrix, RatMatrix, Scalar};
pub use rational::{
    canonical_basis, image_basis, in_span, inverse, kernel_basis, left_kernel_basis, primitive_columns, rank, rref,
    solve_right, Rref, Solution,
};
