//! Exact computations in additive categories with kernels and cokernels:
//! kernels, cokernels, pullbacks, pushouts, strictness, semi-stability and
//! membership in the maximal exact structure, over three finite instances.
//!
//! ```
//! use exactcat::instances::finvectq;
//! use exactcat::category::classify;
//!
//! let cat = finvectq();
//! let f = cat.mor(1, 2, &[1, 1]);
//! let p = classify(&cat, &f);
//! assert!(p.epi && p.is_cokernel && !p.mono);
//! ```

pub mod category;
pub mod engine;
pub mod error;
pub mod instances;
pub mod linalg;

pub use error::{Error, Result};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;
