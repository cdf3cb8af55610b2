use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::WeilPolynomial;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

type Matrix = Vec<Vec<BigInt>>;

fn companion(p: &IntPoly) -> Matrix {
    let n = p.degree();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 1..n {
        m[i][i - 1] = BigInt::one();
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[n - 1] = -p.coeff(i);
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut c = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                c[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    c
}

fn mat_pow(m: &Matrix, mut s: u32) -> Matrix {
    let n = m.len();
    let mut acc: Matrix = (0..n).map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect()).collect();
    let mut base = m.clone();
    while s > 0 {
        if s & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        s >>= 1;
        if s > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

/// Characteristic polynomial by Faddeev–LeVerrier; every division is exact.
fn charpoly(a: &Matrix) -> IntPoly {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m: Matrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let am = mat_mul(a, &m);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (quot, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        c[n - k] = quot;
        m = am;
    }
    IntPoly::new(c)
}

/// The Weil polynomial over `F_{q^s}` whose roots are the `s`-th powers of
/// the roots of `p`.
pub fn base_extension(p: &WeilPolynomial, s: u32) -> Result<WeilPolynomial> {
    if s == 0 {
        return Err(Error::OutOfRange("base extension degree must be positive".into()));
    }
    if s == 1 {
        return Ok(p.clone());
    }
    let a = mat_pow(&companion(p.poly()), s);
    let cp = charpoly(&a);
    WeilPolynomial::new(cp.into_coeffs(), Pow::pow(p.q(), s))
        .map_err(|e| Error::Internal(alloc::format!("base extension is not a Weil polynomial: {e}")))
}

/// Power sums `S_1 .. S_n` of the roots of a monic polynomial.
pub fn power_sums(p: &IntPoly, n: usize) -> Vec<BigInt> {
    let d = p.degree();
    // e_j = (-1)^j c_{d-j}
    let e: Vec<BigInt> = (0..=d).map(|j| if j % 2 == 0 { p.coeff(d - j) } else { -p.coeff(d - j) }).collect();
    let mut s = vec![BigInt::zero(); n + 1];
    for t in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1..t.min(d + 1) {
            let term = &e[j] * &s[t - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if t <= d {
            let term = &e[t] * BigInt::from(t);
            if t % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s[t] = acc;
    }
    s.remove(0);
    s
}

/// Elementary symmetric functions `e_0 .. e_k` from power sums `p_1 .. p_k`
/// (`ps[i]` is `p_{i+1}`).
pub(crate) fn elementary_from_power_sums(ps: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for j in 1..=k {
        let mut acc = BigInt::zero();
        for i in 1..=j {
            let term = &e[j - i] * &ps[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (quot, rem) = acc.div_rem(&BigInt::from(j));
        debug_assert!(rem.is_zero(), "Newton identity division must be exact");
        e[j] = quot;
    }
    e
}

/// Monic polynomial with the given elementary symmetric functions of its
/// roots.
pub(crate) fn from_elementary(e: &[BigInt]) -> IntPoly {
    let n = e.len() - 1;
    IntPoly::new(
        (0..=n).map(|i| if (n - i).is_multiple_of(2) { e[n - i].clone() } else { -e[n - i].clone() }).collect(),
    )
}
