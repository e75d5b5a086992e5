//! Exact computations around vanishing of twisted differential forms on
//! complete intersections, slope stability of their cotangent sheaves, and
//! splitting types of tangent bundles pulled back along rational curves.
//!
//! Everything is exact: integers and rationals are arbitrary precision,
//! finite fields are `F_p` with `p < 2^31`.

pub mod arith;
pub mod curves;
pub mod error;
pub mod projective;
pub mod stability;
pub mod vanish;

pub use error::{Error, Result};
