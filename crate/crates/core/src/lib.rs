//! Exact arithmetic behind signature predictions for intersection forms on
//! abelian fourfolds over finite fields.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! * [`arith`]: rationals, primes, places of `Q`, square classes, Legendre and
//!   Hilbert symbols.
//! * [`quadform`]: rank-2 rational quadratic forms and their local invariants.
//! * [`weil`]: Weil polynomials, certified Frobenius eigenvalue enclosures,
//!   Newton slopes, base extension, Tate-class counts and exotic subsets.
//! * [`norms`]: quadratic extensions of `Q_p` and the norm classes of periods.
//! * [`signature`]: the definiteness verdicts and the fourfold signature report.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod interval;
pub mod norms;
pub mod poly;
pub mod quadform;
pub mod signature;
pub mod weil;

pub use arith::{hilbert, is_square, legendre, val_p, Place, Prime, Rational, SquareClass};
pub use error::{Error, Result, WeilDefect};
