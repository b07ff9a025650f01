//! Concrete additive categories with kernels and cokernels.

mod finvect;
mod lattice;
mod monopairs;
pub mod sampling;

pub use finvect::{finvectq, Dim, FinVectQ, VectMor};
pub use lattice::{latticez, LatticeMor, LatticeZ, Rank};
pub use monopairs::{ambient_injective, ambient_surjective, monopairsq, MonoPairsQ, PairMor, SubspacePair};

use serde_json::Value;

use crate::error::{Error, Result};

pub(crate) fn check_endpoints(op: &'static str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::mismatch(op, "endpoints do not match"))
    }
}

pub(crate) fn object_dim(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| Error::parse(key, "expected a nonnegative integer"))
}

pub(crate) fn prefix_field(prefix: &str, e: Error) -> Error {
    match e {
        Error::Parse { field, message } => Error::Parse { field: format!("{prefix}.{field}"), message },
        other => other,
    }
}

/// Splits a morphism document into its `dom`, `cod` and `matrix` parts after
/// checking the category tag.
pub(crate) fn split_morphism_json<'a>(category: &str, v: &'a Value) -> Result<(&'a Value, &'a Value, &'a Value)> {
    let tag =
        v.get("category").and_then(Value::as_str).ok_or_else(|| Error::parse("category", "missing category tag"))?;
    if tag != category {
        return Err(Error::parse("category", format!("expected {category}, found {tag}")));
    }
    let field = |k: &str| v.get(k).ok_or_else(|| Error::parse(k, "missing"));
    Ok((field("dom")?, field("cod")?, field("matrix")?))
}
