//! Exact integers, rationals, quadratic surds and integer square matrices.

mod matrix;
mod surd;

pub use matrix::{permanent_bruteforce, IntMatrix, RYSER_LIMIT};
pub use surd::QuadraticSurd;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for building a `BigInt` from any primitive integer.
pub fn int<T: Into<BigInt>>(x: T) -> BigInt {
    x.into()
}

/// `p/q` as a reduced rational; panics on `q == 0`.
pub fn ratio<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> BigRational {
    BigRational::new(p.into(), q.into())
}
