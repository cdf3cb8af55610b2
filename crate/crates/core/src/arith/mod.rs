//! Exact scalars and local symbols at the places of `Q`.

pub mod place;
pub mod prime;
pub mod symbols;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use place::Place;
pub use prime::{factor, is_perfect_square, is_prime, least_nonresidue, prime_power, Prime};
pub use symbols::{hilbert, is_square, legendre, val_p, SquareClass};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
