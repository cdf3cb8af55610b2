//! Dyadic interval arithmetic with outward rounding.
//!
//! An [`Iv`] is `[lo / 2^prec, hi / 2^prec]` with integer endpoints. All
//! operations round the lower end down and the upper end up, so the exact
//! result of the real operation on any points of the inputs lies in the
//! output. Mixing precisions is a logic error and panics.

use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iv {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_shr(x: &BigInt, k: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << k))
}

fn ceil_shr(x: &BigInt, k: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << k)))
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &r * &r == *n {
        r
    } else {
        r + 1
    }
}

impl Iv {
    pub fn point_int(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        Iv { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(x: &Rational, prec: u32) -> Self {
        let scaled = x.numer() << prec;
        Iv { lo: scaled.div_floor(x.denom()), hi: -((-&scaled).div_floor(x.denom())), prec }
    }

    /// `[a, b]` for rationals `a <= b`.
    pub fn hull(a: &Rational, b: &Rational, prec: u32) -> Self {
        debug_assert!(a <= b);
        let lo = Iv::from_rational(a, prec).lo;
        let hi = Iv::from_rational(b, prec).hi;
        Iv { lo, hi, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Iv { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn mid(&self) -> Rational {
        Rational::new(&self.lo + &self.hi, BigInt::one() << (self.prec + 1))
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, BigInt::one() << self.prec)
    }

    /// Half the width, as a rational.
    pub fn radius(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, BigInt::one() << (self.prec + 1))
    }

    /// `log2` of the width, rounded up; `None` for a point.
    pub fn width_bits(&self) -> Option<i64> {
        let w = &self.hi - &self.lo;
        if w.is_zero() {
            None
        } else {
            Some(w.bits() as i64 - self.prec as i64)
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_int(&self, n: &BigInt) -> bool {
        let v = n << self.prec;
        self.lo <= v && v <= self.hi
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        self.lo() <= *x && *x <= self.hi()
    }

    pub fn overlaps(&self, other: &Iv) -> bool {
        self.check(other);
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Definite sign, or `None` if the interval contains zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Plus)
        } else if self.hi.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    fn check(&self, other: &Iv) {
        assert_eq!(self.prec, other.prec, "interval precision mismatch");
    }

    pub fn add(&self, other: &Iv) -> Iv {
        self.check(other);
        Iv { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, prec: self.prec }
    }

    pub fn sub(&self, other: &Iv) -> Iv {
        self.check(other);
        Iv { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Iv {
        Iv { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, other: &Iv) -> Iv {
        self.check(other);
        let c = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let min = c.iter().min().unwrap();
        let max = c.iter().max().unwrap();
        Iv { lo: floor_shr(min, self.prec), hi: ceil_shr(max, self.prec), prec: self.prec }
    }

    pub fn square(&self) -> Iv {
        let a = self.lo.abs();
        let b = self.hi.abs();
        let (small, large) = if a <= b { (a, b) } else { (b, a) };
        let lo = if self.contains_zero() { BigInt::zero() } else { &small * &small };
        Iv { lo: floor_shr(&lo, self.prec), hi: ceil_shr(&(&large * &large), self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, n: &BigInt) -> Iv {
        let a = &self.lo * n;
        let b = &self.hi * n;
        if n.is_negative() {
            Iv { lo: b, hi: a, prec: self.prec }
        } else {
            Iv { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Division by `2^k`.
    pub fn shr(&self, k: u32) -> Iv {
        Iv { lo: floor_shr(&self.lo, k), hi: ceil_shr(&self.hi, k), prec: self.prec }
    }

    /// Square root of the nonnegative part; negative lower ends clamp to 0.
    pub fn sqrt(&self) -> Iv {
        let clamp = |x: &BigInt| if x.is_negative() { BigInt::zero() } else { x.clone() };
        let lo = (clamp(&self.lo) << self.prec).sqrt();
        let hi = ceil_sqrt(&(clamp(&self.hi) << self.prec));
        Iv { lo, hi, prec: self.prec }
    }

    /// Reciprocal of an interval that excludes zero.
    pub fn recip(&self) -> Option<Iv> {
        self.sign()?;
        let one = BigInt::one() << (2 * self.prec);
        let (a, b) = (&self.lo, &self.hi);
        // 1/x is decreasing on each sign component.
        let lo = one.div_floor(b);
        let hi = -((-&one).div_floor(a));
        Some(Iv { lo, hi, prec: self.prec })
    }

    /// Decimal rendering `mid ± radius` with `digits` fractional digits,
    /// the radius rounded up so the printed ball still encloses the interval.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        let ten = BigInt::from(10).pow(digits as u32);
        let denom = BigInt::one() << (self.prec + 1);
        let mid_scaled = (&(&self.lo + &self.hi) * &ten).div_floor(&denom);
        let mid = Rational::new(mid_scaled.clone(), ten.clone());
        let far = core::cmp::max(&self.hi() - &mid, &mid - &self.lo());
        let rad_scaled = {
            let x = far * Rational::from_integer(ten.clone());
            x.ceil().to_integer()
        };
        (fmt_fixed(&mid_scaled, digits), fmt_fixed(&rad_scaled, digits))
    }
}

fn fmt_fixed(scaled: &BigInt, digits: usize) -> String {
    use alloc::format;
    let neg = scaled.is_negative();
    let s = scaled.abs().to_str_radix(10);
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

impl fmt::Display for Iv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, r) = self.to_decimal(12);
        write!(f, "{m} ± {r}")
    }
}

/// A rectangle `re + i im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIv {
    pub re: Iv,
    pub im: Iv,
}

impl CIv {
    pub fn real(re: Iv) -> Self {
        let im = Iv::zero(re.prec);
        CIv { re, im }
    }

    pub fn one(prec: u32) -> Self {
        CIv::real(Iv::point_int(&BigInt::one(), prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec
    }

    pub fn add(&self, o: &CIv) -> CIv {
        CIv { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CIv) -> CIv {
        CIv { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &CIv) -> CIv {
        CIv { re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)), im: self.re.mul(&o.im).add(&self.im.mul(&o.re)) }
    }

    pub fn conj(&self) -> CIv {
        CIv { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn pow(&self, mut n: u32) -> CIv {
        let mut acc = CIv::one(self.prec());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn overlaps(&self, o: &CIv) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn contains_int(&self, n: &BigInt) -> bool {
        self.re.contains_int(n) && self.im.contains_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn rational_enclosure_is_tight_and_outward() {
        let x = rat(1, 3);
        let iv = Iv::from_rational(&x, 64);
        assert!(iv.contains_rational(&x));
        assert!(iv.width() <= rat(1, 1 << 62));
        let p = Iv::from_rational(&int(5), 10);
        assert_eq!(p.width(), int(0));
    }

    #[test]
    fn arithmetic_encloses_exact_results() {
        let prec = 40;
        let a = rat(-7, 3);
        let b = rat(5, 11);
        let ia = Iv::from_rational(&a, prec);
        let ib = Iv::from_rational(&b, prec);
        assert!(ia.add(&ib).contains_rational(&(&a + &b)));
        assert!(ia.sub(&ib).contains_rational(&(&a - &b)));
        assert!(ia.mul(&ib).contains_rational(&(&a * &b)));
        assert!(ia.square().contains_rational(&(&a * &a)));
        assert!(ib.recip().unwrap().contains_rational(&(int(1) / &b)));
        assert!(ia.recip().unwrap().contains_rational(&(int(1) / &a)));
    }

    #[test]
    fn square_of_straddling_interval_starts_at_zero() {
        let iv = Iv::hull(&rat(-1, 2), &int(1), 20);
        assert_eq!(iv.square().lo(), int(0));
        assert_eq!(iv.square().hi(), int(1));
    }

    #[test]
    fn sqrt_brackets() {
        let two = Iv::point_int(&BigInt::from(2), 100);
        let r = two.sqrt();
        assert!(r.square().contains_int(&BigInt::from(2)));
        assert!(r.width_bits().unwrap() <= -98);
        let four = Iv::point_int(&BigInt::from(4), 30).sqrt();
        assert!(four.contains_int(&BigInt::from(2)));
        assert_eq!(four.width(), int(0));
    }

    #[test]
    fn complex_powers() {
        // (1 + i)^4 = -4
        let p = 60;
        let z = CIv { re: Iv::point_int(&BigInt::one(), p), im: Iv::point_int(&BigInt::one(), p) };
        assert!(z.pow(4).contains_int(&BigInt::from(-4)));
        assert!(z.mul(&z.conj()).contains_int(&BigInt::from(2)));
    }

    #[test]
    fn decimal_rendering_encloses() {
        let iv = Iv::from_rational(&rat(-1, 3), 64);
        let (m, r) = iv.to_decimal(6);
        assert_eq!(m, "-0.333334");
        assert_eq!(r, "0.000001");
        let (m, _) = Iv::point_int(&BigInt::from(12), 8).to_decimal(2);
        assert_eq!(m, "12.00");
    }
}
