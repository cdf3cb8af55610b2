//! Valuations, square classes, Legendre and Hilbert symbols.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{least_nonresidue, Place, Prime, Rational};
use crate::error::{Error, Result};

/// Splits a nonzero integer as `p^v * u` with `p ∤ u`.
pub(crate) fn split_int(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    let mut u = n.clone();
    loop {
        let (q, r) = u.div_rem(p);
        if !r.is_zero() {
            return (v, u);
        }
        u = q;
        v += 1;
    }
}

/// `num * den` has the same square class as `x` and is an integer.
fn class_integer(x: &Rational) -> BigInt {
    x.numer() * x.denom()
}

/// `p`-adic valuation of a nonzero rational.
pub fn val_p(x: &Rational, p: &Prime) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    let (a, _) = split_int(x.numer(), p.value());
    let (b, _) = split_int(x.denom(), p.value());
    Ok(a as i64 - b as i64)
}

pub(crate) fn legendre_unchecked(a: &BigInt, p: &BigInt) -> i8 {
    let e = (p - 1u8) >> 1;
    let r = a.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else if r.is_zero() {
        0
    } else {
        -1
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p` not dividing `a`, by Euler's
/// criterion.
pub fn legendre(a: &BigInt, p: &Prime) -> Result<i8> {
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    if (a % p.value()).is_zero() {
        return Err(Error::NotCoprime { a: a.clone(), p: p.value().clone() });
    }
    Ok(legendre_unchecked(a, p.value()))
}

fn mod8(u: &BigInt) -> u8 {
    u.mod_floor(&BigInt::from(8u8)).to_u8().unwrap_or(0)
}

/// Whether `x` is a square in the completion of `Q` at `place`.
pub fn is_square(x: &Rational, place: &Place) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    let n = class_integer(x);
    Ok(match place {
        Place::Real => n.is_positive(),
        Place::Finite(p) => {
            let (v, u) = split_int(&n, p.value());
            if v % 2 == 1 {
                false
            } else if p.is_two() {
                mod8(&u) == 1
            } else {
                legendre_unchecked(&u, p.value()) == 1
            }
        }
    })
}

fn eps2(u: &BigInt) -> u32 {
    match mod8(u) {
        3 | 7 => 1,
        _ => 0,
    }
}

fn omega2(u: &BigInt) -> u32 {
    match mod8(u) {
        3 | 5 => 1,
        _ => 0,
    }
}

/// Hilbert symbol `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nonzero
/// solution over the completion at `place`.
pub fn hilbert(a: &Rational, b: &Rational, place: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    let a = class_integer(a);
    let b = class_integer(b);
    let p = match place {
        Place::Real => {
            return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 });
        }
        Place::Finite(p) => p,
    };
    let (alpha, u) = split_int(&a, p.value());
    let (beta, v) = split_int(&b, p.value());
    let (alpha, beta) = ((alpha % 2) as u32, (beta % 2) as u32);
    if p.is_two() {
        let e = eps2(&u) * eps2(&v) + alpha * omega2(&v) + beta * omega2(&u);
        return Ok(if e.is_multiple_of(2) { 1 } else { -1 });
    }
    let mut s: i8 = 1;
    let half = ((p.value() - 1u8) >> 1u8).is_odd();
    if alpha * beta == 1 && half {
        s = -s;
    }
    if beta == 1 {
        s *= legendre_unchecked(&u, p.value());
    }
    if alpha == 1 {
        s *= legendre_unchecked(&v, p.value());
    }
    Ok(s)
}

/// An element of `Q_v* / (Q_v*)^2`, stored by a canonical representative:
/// `±1` at the real place, one of `1, u, p, u p` at an odd prime (`u` the
/// least positive nonresidue), and one of `±1, ±2, ±5, ±10` at `2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClass {
    place: Place,
    representative: Rational,
}

impl SquareClass {
    pub fn of(x: &Rational, place: &Place) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Zero);
        }
        let n = class_integer(x);
        let rep = match place {
            Place::Real => BigInt::from(if n.is_positive() { 1 } else { -1 }),
            Place::Finite(p) => {
                let (v, u) = split_int(&n, p.value());
                let unit = if p.is_two() {
                    BigInt::from(match mod8(&u) {
                        1 => 1,
                        3 => -5,
                        5 => 5,
                        _ => -1,
                    })
                } else if legendre_unchecked(&u, p.value()) == 1 {
                    BigInt::one()
                } else {
                    least_nonresidue(p)
                };
                if v % 2 == 1 {
                    unit * p.value()
                } else {
                    unit
                }
            }
        };
        Ok(SquareClass { place: place.clone(), representative: Rational::from_integer(rep) })
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn representative(&self) -> &Rational {
        &self.representative
    }

    pub fn is_trivial(&self) -> bool {
        self.representative.is_one()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}
