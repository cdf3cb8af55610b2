//! Weil `q`-polynomials and the combinatorics of their roots.

mod enumerate;
mod extension;
mod roots;
mod slopes;
mod structure;
mod subsets;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Zero};

use crate::arith::{prime_power, Prime};
use crate::error::{Error, Result, WeilDefect};
use crate::poly::IntPoly;

pub use enumerate::{enumerate, enumerate_branch, first_coefficients, real_part_to_weil};
pub use extension::{base_extension, power_sums};
pub use roots::{conjugate_pairing, Branch, RootSystem, RootValue};
pub use slopes::{newton_slopes, NewtonSlopes};
pub use structure::{check_structure, StructureReport, Violation};
pub use subsets::{
    certified_multisets, exotic_subsets, special_subsets, subset_product_multiplicity, tate_class_count,
    CertifiedMultisets, ExoticSubset, ProductCertificate, ValueMultiset,
};

/// Precision ladder for certified root computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub initial_bits: u32,
    pub max_escalations: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { initial_bits: 128, max_escalations: 8 }
    }
}

impl Precision {
    /// Mantissa sizes tried in order: the initial size, doubled each time.
    pub fn ladder(self) -> impl Iterator<Item = u32> {
        (0..=self.max_escalations).map(move |k| self.initial_bits.saturating_mul(1 << k.min(20)))
    }

    pub fn max_bits(self) -> u32 {
        self.ladder().last().unwrap_or(self.initial_bits)
    }
}

/// A monic integer polynomial of degree `2g` all of whose roots have
/// absolute value `sqrt(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilPolynomial {
    poly: IntPoly,
    q: BigInt,
    p: Prime,
    e: u32,
    real: IntPoly,
}

impl WeilPolynomial {
    /// Validates ascending coefficients against `q`.
    pub fn new(coeffs: Vec<BigInt>, q: BigInt) -> Result<Self> {
        let poly = IntPoly::new(coeffs);
        if poly.degree() == 0 {
            return Err(WeilDefect::TooShort.into());
        }
        if poly.degree() % 2 == 1 {
            return Err(WeilDefect::OddDegree(poly.degree()).into());
        }
        if !poly.is_monic() {
            return Err(WeilDefect::NotMonic.into());
        }
        let (p, e) = prime_power(&q).ok_or_else(|| WeilDefect::NotPrimePower(q.clone()))?;
        let g = poly.degree() / 2;
        for i in 0..g {
            if poly.coeff(i) != Pow::pow(&q, (g - i) as u32) * poly.coeff(2 * g - i) {
                return Err(WeilDefect::FunctionalEquation { index: i }.into());
            }
        }
        let real = real_part(&poly, &q);
        if !real.real_rooted_in(&(&q * 4u32)) {
            return Err(WeilDefect::OffCircle.into());
        }
        Ok(WeilPolynomial { poly, q, p, e, real })
    }

    pub fn from_i64(coeffs: &[i64], q: u64) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(q))
    }

    /// Trusted constructor for polynomials built from a real part already
    /// known to be real-rooted in `[-2 sqrt q, 2 sqrt q]`.
    pub(crate) fn from_parts(poly: IntPoly, q: BigInt, real: IntPoly) -> Self {
        let (p, e) = prime_power(&q).expect("prime power");
        WeilPolynomial { poly, q, p, e, real }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &Prime {
        &self.p
    }

    /// The exponent `e` in `q = p^e`.
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn g(&self) -> usize {
        self.poly.degree() / 2
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// The monic `h` of degree `g` with `P(x) = x^g h(x + q/x)`.
    pub fn real_part(&self) -> &IntPoly {
        &self.real
    }

    pub fn require_degree(&self, d: usize) -> Result<()> {
        if self.degree() != d {
            return Err(Error::Degree { expected: d, found: self.degree() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &WeilPolynomial) -> Result<WeilPolynomial> {
        if self.q != other.q {
            return Err(Error::OutOfRange(alloc::format!("q mismatch: {} and {}", self.q, other.q)));
        }
        Ok(WeilPolynomial {
            poly: self.poly.mul(&other.poly),
            q: self.q.clone(),
            p: self.p.clone(),
            e: self.e,
            real: self.real.mul(&other.real),
        })
    }
}

impl fmt::Display for WeilPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (q = {})", self.poly, self.q)
    }
}

/// Peels `x^g (x + q/x)^k = x^(g-k) (x^2 + q)^k` off from the top.
/// The result is only meaningful when the functional equation holds.
fn real_part(poly: &IntPoly, q: &BigInt) -> IntPoly {
    let g = poly.degree() / 2;
    let mut rest: Vec<BigInt> = poly.coeffs().to_vec();
    let mut h = alloc::vec![BigInt::zero(); g + 1];
    for k in (0..=g).rev() {
        let b = rest[g + k].clone();
        if b.is_zero() {
            continue;
        }
        let mut qj = BigInt::one();
        for j in 0..=k {
            rest[g + k - 2 * j] -= &b * binomial(BigInt::from(k), BigInt::from(j)) * &qj;
            qj *= q;
        }
        h[k] = b;
    }
    IntPoly::new(h)
}
