//! Exact arithmetic: binomials, prime fields, binary forms and graded
//! linear algebra over them.

mod field;
mod form;
mod linalg;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use form::{have_common_zero, BinaryForm};
pub use linalg::{nullspace, nullspace_by_degree, solve, FormMatrix, Span};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with `binom(a, b) = 0` whenever `a < b` or `a < 0`.
pub fn binom(a: i64, b: u64) -> BigUint {
    if a < 0 || (a as u64) < b {
        return BigUint::zero();
    }
    let a = a as u64;
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}
