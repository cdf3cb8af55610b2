//! Primality, factorisation and prime-power recognition.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SMALL_PRIMES: [u32; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// A rational prime, checked at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(BigInt);

impl Prime {
    pub fn new(n: BigInt) -> Result<Self> {
        if is_prime(&n) {
            Ok(Prime(n))
        } else {
            Err(Error::NotPrime(n))
        }
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        Self::new(BigInt::from(n))
    }

    pub fn two() -> Self {
        Prime(BigInt::from(2u8))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_two(&self) -> bool {
        self.0 == BigInt::from(2u8)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prime({})", self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Miller–Rabin with the first twelve prime bases, which is deterministic for
/// every `n < 3.3 * 10^24` and in particular below `2^64`. Above that range
/// the first twenty-five prime bases are used.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude();
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    if *n < BigUint::from(97u32 * 97) {
        return *n > BigUint::one();
    }
    let rounds = if n.bits() <= 64 { 12 } else { SMALL_PRIMES.len() };
    SMALL_PRIMES[..rounds].iter().all(|&b| strong_probable_prime(n, &BigUint::from(b)))
}

fn pollard_brent(n: &BigUint) -> BigUint {
    // n is odd, composite and has no small factors.
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u8);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u8;
    }
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&BigInt::from(n.clone())) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    factor_into(d, out);
    factor_into(rest, out);
}

/// Prime factorisation of `|n|` as `(prime, exponent)` pairs in increasing
/// order. Returns an empty list for `|n| <= 1`.
pub fn factor(n: &BigInt) -> Vec<(Prime, u32)> {
    let mut m = n.magnitude().clone();
    let mut found: Vec<BigUint> = Vec::new();
    if m.is_zero() {
        return Vec::new();
    }
    let mut d = 2u32;
    while d < 10_000 {
        let bd = BigUint::from(d);
        if &bd * &bd > m {
            break;
        }
        while (&m % &bd).is_zero() {
            m /= &bd;
            found.push(bd.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        factor_into(m, &mut found);
    }
    found.sort();
    let mut out: Vec<(Prime, u32)> = Vec::new();
    for f in found {
        let f = BigInt::from(f);
        match out.last_mut() {
            Some((p, e)) if p.0 == f => *e += 1,
            _ => out.push((Prime(f), 1)),
        }
    }
    out
}

/// Writes `q = p^e` with `p` prime and `e >= 1`, if possible.
pub fn prime_power(q: &BigInt) -> Option<(Prime, u32)> {
    if *q <= BigInt::one() {
        return None;
    }
    // Try every exponent whose root could be an integer, largest first.
    let bits = q.bits() as u32;
    for e in (1..=bits).rev() {
        let r = q.nth_root(e);
        for cand in [r.clone(), r + 1u8] {
            if cand > BigInt::one() && num_traits::pow(cand.clone(), e as usize) == *q && is_prime(&cand) {
                return Some((Prime(cand), e));
            }
        }
    }
    None
}

/// Least positive quadratic nonresidue modulo an odd prime.
pub fn least_nonresidue(p: &Prime) -> BigInt {
    debug_assert!(!p.is_two());
    let mut u = BigInt::from(2u8);
    loop {
        if crate::arith::symbols::legendre_unchecked(&u, p.value()) == -1 {
            return u;
        }
        u += 1u8;
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
