//! Dense univariate polynomials over `Z`, with the exact real-root tools the
//! Weil layer needs: Sturm chains, squarefree decomposition, root isolation
//! and sign evaluation at rationals and at quadratic surds.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::interval::{CIv, Iv};

/// Coefficients in ascending order, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(if show_coeff { "*x" } else { "x" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        IntPoly(vec![-r, BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, n: u32) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &BigInt) -> IntPoly {
        let mut out = IntPoly::zero();
        let lin = IntPoly(vec![c.clone(), BigInt::one()]);
        for coef in self.0.iter().rev() {
            out = out.mul(&lin).add(&IntPoly::constant(coef.clone()));
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        self.homogenised_sign(x.numer(), x.denom())
    }

    fn homogenised_sign(&self, num: &BigInt, den: &BigInt) -> Sign {
        if self.is_zero() {
            return Sign::NoSign;
        }
        // sum_i c_i num^i den^(d-i)
        let d = self.degree();
        let mut acc = BigInt::zero();
        let mut npow = BigInt::one();
        let mut dpows = Vec::with_capacity(d + 1);
        let mut dp = BigInt::one();
        for _ in 0..=d {
            dpows.push(dp.clone());
            dp *= den;
        }
        for (i, c) in self.0.iter().enumerate() {
            acc += c * &npow * &dpows[d - i];
            npow *= num;
        }
        acc.sign()
    }

    /// `f(s * sqrt(disc))` written as `a + b sqrt(disc)` with integers `a`, `b`.
    pub fn eval_surd(&self, negative: bool, disc: &BigInt) -> (BigInt, BigInt) {
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        let mut dpow = BigInt::one();
        for (i, c) in self.0.iter().enumerate() {
            if i % 2 == 0 {
                a += c * &dpow;
            } else {
                let t = c * &dpow;
                if negative {
                    b -= t;
                } else {
                    b += t;
                }
                dpow *= disc;
            }
        }
        (a, b)
    }

    /// Sign of `f(±sqrt(disc))` for `disc >= 0`.
    pub fn sign_at_surd(&self, negative: bool, disc: &BigInt) -> Sign {
        let (a, b) = self.eval_surd(negative, disc);
        surd_sign(&a, &b, disc)
    }

    pub fn eval_iv(&self, x: &Iv) -> Iv {
        let mut acc = Iv::zero(x.prec());
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(&Iv::point_int(c, x.prec()));
        }
        acc
    }

    pub fn eval_civ(&self, z: &CIv) -> CIv {
        let p = z.prec();
        let mut acc = CIv::real(Iv::zero(p));
        for c in self.0.iter().rev() {
            acc = acc.mul(z).add(&CIv::real(Iv::point_int(c, p)));
        }
        acc
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly(self.0.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of `self` by `d`, scaled by `|lc(d)|^(δ+1)` so the
    /// sign of the dividend is kept.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.0.len() < d.0.len() {
            return self.clone();
        }
        let lc = d.leading();
        let lca = lc.abs();
        let dd = d.degree();
        let mut r = self.0.clone();
        let steps = self.degree() - dd + 1;
        for k in (0..steps).rev() {
            let top = r[k + dd].clone();
            for c in r.iter_mut() {
                *c *= &lca;
            }
            // r <- |lc| r - sgn(lc) top x^k d
            let f = if lc.is_negative() { -top } else { top };
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &f * dc;
            }
            debug_assert!(r[k + dd].is_zero());
        }
        IntPoly::new(r)
    }

    /// Exact quotient over `Z`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let lc = d.leading();
        let dd = d.degree();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let (qk, rem) = r[k + dd].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = o.primitive();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        self.primitive().exact_div(&g).expect("gcd divides")
    }

    /// Squarefree decomposition: primitive pairwise coprime `(f_i, i)` with
    /// `self = c * prod f_i^i`. Factors equal to 1 are omitted.
    pub fn yun(&self) -> Vec<(IntPoly, u32)> {
        let f = self.primitive();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        // a0 is primitive, so by Gauss every quotient below is integral.
        let mut c = fp.exact_div(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Sturm chain of the squarefree part.
    pub fn sturm(&self) -> SturmChain {
        SturmChain::new(&self.squarefree_part())
    }

    /// Number of distinct real roots in the closed interval
    /// `[-sqrt(disc), sqrt(disc)]`.
    pub fn distinct_roots_in_surd_interval(&self, disc: &BigInt) -> usize {
        let s = self.sturm();
        let lo = s.variations(|p| p.sign_at_surd(true, disc));
        let hi = s.variations(|p| p.sign_at_surd(false, disc));
        let at_lo = s.chain[0].sign_at_surd(true, disc) == Sign::NoSign;
        lo - hi + usize::from(at_lo)
    }

    /// Whether every complex root is real and lies in `[-sqrt(disc), sqrt(disc)]`.
    pub fn real_rooted_in(&self, disc: &BigInt) -> bool {
        if self.is_zero() {
            return false;
        }
        let sf = self.squarefree_part();
        sf.distinct_roots_in_surd_interval(disc) == sf.degree()
    }

    /// Isolating intervals for the real roots of a squarefree polynomial,
    /// in increasing order.
    pub fn isolate_real_roots(&self) -> Vec<RootInterval> {
        let f = self.primitive();
        if f.degree() == 0 {
            return Vec::new();
        }
        let sturm = SturmChain::new(&f);
        let m = cauchy_bound(&f);
        let lo = Rational::from_integer(-m.clone());
        let hi = Rational::from_integer(m);
        let mut out = Vec::new();
        let vlo = sturm.variations_at(&lo);
        let vhi = sturm.variations_at(&hi);
        isolate_rec(&f, &sturm, lo, hi, vlo, vhi, &mut out);
        out
    }
}

fn surd_sign(a: &BigInt, b: &BigInt, disc: &BigInt) -> Sign {
    let sb = if disc.is_zero() { Sign::NoSign } else { b.sign() };
    match (a.sign(), sb) {
        (s, Sign::NoSign) => s,
        (Sign::NoSign, s) => s,
        (x, y) if x == y => x,
        (sa, _) => match (a * a).cmp(&(b * b * disc)) {
            Ordering::Greater => sa,
            Ordering::Less => -sa,
            Ordering::Equal => Sign::NoSign,
        },
    }
}

/// Compares a rational with `±sqrt(disc)`.
pub fn cmp_rational_surd(x: &Rational, negative: bool, disc: &BigInt) -> Ordering {
    // sign of x - s sqrt(disc), with x = n/d and d > 0: sign of n - s d sqrt(disc)
    let b = if negative { x.denom().clone() } else { -x.denom().clone() };
    match surd_sign(x.numer(), &b, disc) {
        Sign::Plus => Ordering::Greater,
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
    }
}

fn cauchy_bound(f: &IntPoly) -> BigInt {
    let lc = f.leading().abs();
    let m = f.0.iter().map(|c| c.abs()).max().unwrap();
    // 1 + max|c_i| / |lc|, rounded up to a power of two.
    let b: BigInt = Integer::div_ceil(&m, &lc) + 1u32;
    BigInt::one() << b.bits()
}

fn isolate_rec(
    f: &IntPoly,
    sturm: &SturmChain,
    lo: Rational,
    hi: Rational,
    vlo: usize,
    vhi: usize,
    out: &mut Vec<RootInterval>,
) {
    match vlo - vhi {
        0 => {}
        1 => {
            if f.sign_at(&hi) == Sign::NoSign {
                out.push(RootInterval { lo: hi.clone(), hi });
            } else {
                out.push(RootInterval { lo, hi });
            }
        }
        _ => {
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            let vmid = sturm.variations_at(&mid);
            isolate_rec(f, sturm, lo, mid.clone(), vlo, vmid, out);
            isolate_rec(f, sturm, mid, hi, vmid, vhi, out);
        }
    }
}

/// A real root `r` of a squarefree polynomial with `lo < r < hi`, or the
/// exact root when `lo == hi`. The polynomial is nonzero at `hi` unless the
/// interval is a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// One bisection step; `f` must be the squarefree polynomial the
    /// interval isolates a root of.
    pub fn bisect(&mut self, f: &IntPoly) {
        if self.is_exact() {
            return;
        }
        let shi = f.sign_at(&self.hi);
        if shi == Sign::NoSign {
            self.lo = self.hi.clone();
            return;
        }
        let mid = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        let sm = f.sign_at(&mid);
        if sm == Sign::NoSign {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == shi {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Bisects until the width is at most `2^-bits`.
    pub fn refine(&mut self, f: &IntPoly, bits: u32) {
        let target = Rational::new(BigInt::one(), BigInt::one() << bits);
        while !self.is_exact() && self.width() > target {
            self.bisect(f);
        }
    }

    pub fn to_iv(&self, prec: u32) -> Iv {
        Iv::hull(&self.lo, &self.hi, prec)
    }
}

/// Canonical Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Self {
        let mut chain = vec![f.clone()];
        if f.degree() == 0 {
            return SturmChain { chain };
        }
        chain.push(f.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Positive rescaling keeps the sign pattern.
            let c = r.content();
            chain.push(IntPoly(r.0.iter().map(|x| -(x / &c)).collect()));
        }
        SturmChain { chain }
    }

    pub fn variations(&self, mut sign: impl FnMut(&IntPoly) -> Sign) -> usize {
        let mut last = Sign::NoSign;
        let mut v = 0;
        for p in &self.chain {
            let s = sign(p);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        self.variations(|p| p.sign_at(x))
    }

    /// Distinct roots in `(a, b]`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn ring_operations() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 3, 3, 1]).derivative(), p(&[3, 6, 3]));
        assert_eq!(p(&[0, 0, 1]).shift(&BigInt::from(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).sub(&p(&[1, 2, 3])), IntPoly::zero());
        assert_eq!(alloc::format!("{}", p(&[2, -1, 1])), "x^2 - x + 2");
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 0, 1]);
        assert_eq!(f.exact_div(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(f.exact_div(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).exact_div(&p(&[1, 2])), Some(p(&[2])));
        assert_eq!(p(&[1, 0, 2]).pseudo_rem(&p(&[1, 2])), p(&[6]));
    }

    #[test]
    fn gcd_and_yun() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 1]);
        let c = p(&[3, 0, 1]);
        let f = a.pow(3).mul(&b.pow(2)).mul(&c).scale(&BigInt::from(6));
        assert_eq!(f.gcd(&f.derivative()), a.pow(2).mul(&b));
        assert_eq!(f.squarefree_part(), a.mul(&b).mul(&c));
        let mut y = f.yun();
        y.sort_by_key(|(_, m)| *m);
        assert_eq!(y, vec![(c.clone(), 1), (b.clone(), 2), (a.clone(), 3)]);
        assert_eq!(p(&[3, 0, 1]).pow(4).yun(), vec![(c, 4)]);
    }

    #[test]
    fn yun_with_non_monic_factors() {
        let a = p(&[1, 2]);
        let b = p(&[-1, 3]);
        let f = a.pow(2).mul(&b);
        let mut y = f.yun();
        y.sort_by_key(|(_, m)| *m);
        assert_eq!(y, vec![(b, 1), (a, 2)]);
    }

    #[test]
    fn sturm_counts() {
        // (x - 1)(x - 2)(x + 3)
        let f = p(&[6, -7, 0, 1]);
        let s = f.sturm();
        assert_eq!(s.count_in(&int(-10), &int(10)), 3);
        assert_eq!(s.count_in(&int(0), &int(2)), 2);
        assert_eq!(s.count_in(&int(1), &int(2)), 1);
        assert_eq!(s.count_in(&rat(3, 2), &int(10)), 1);
        assert_eq!(p(&[1, 0, 1]).sturm().count_in(&int(-5), &int(5)), 0);
    }

    #[test]
    fn surd_signs() {
        let f = p(&[-8, 0, 1]); // x^2 - 8
        assert_eq!(f.sign_at_surd(false, &BigInt::from(8)), Sign::NoSign);
        assert_eq!(f.sign_at_surd(true, &BigInt::from(9)), Sign::Plus);
        let g = p(&[-3, 1]); // x - 3 at sqrt(8) < 3
        assert_eq!(g.sign_at_surd(false, &BigInt::from(8)), Sign::Minus);
        assert_eq!(g.sign_at_surd(false, &BigInt::from(10)), Sign::Plus);
        assert_eq!(cmp_rational_surd(&int(3), false, &BigInt::from(8)), Ordering::Greater);
        assert_eq!(cmp_rational_surd(&int(-3), true, &BigInt::from(8)), Ordering::Less);
        assert_eq!(cmp_rational_surd(&int(-2), true, &BigInt::from(4)), Ordering::Equal);
        assert_eq!(cmp_rational_surd(&int(0), true, &BigInt::from(4)), Ordering::Greater);
    }

    #[test]
    fn real_rootedness_in_surd_interval() {
        let eight = BigInt::from(8);
        assert!(p(&[-8, 0, 1]).real_rooted_in(&eight));
        assert!(p(&[-8, 0, 1]).pow(2).real_rooted_in(&eight));
        assert!(!p(&[-9, 0, 1]).real_rooted_in(&eight));
        assert!(!p(&[1, 0, 1]).real_rooted_in(&eight));
        assert!(p(&[-1, 1]).mul(&p(&[2, 1])).real_rooted_in(&eight));
    }

    #[test]
    fn isolation_and_refinement() {
        let f = p(&[-2, 0, 1]).mul(&p(&[-1, 1]));
        let mut roots = f.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        for r in roots.iter_mut() {
            r.refine(&f, 60);
        }
        assert!(roots[0].to_iv(64).square().contains_int(&BigInt::from(2)));
        assert!(roots[1].lo <= int(1) && int(1) <= roots[1].hi);
        assert!(roots[2].to_iv(64).square().contains_int(&BigInt::from(2)));
        assert!(roots.windows(2).all(|w| w[0].hi <= w[1].lo));
    }

    #[test]
    fn interval_evaluation() {
        let f = p(&[2, -1, 1]);
        let x = Iv::from_rational(&rat(1, 3), 64);
        assert!(f.eval_iv(&x).contains_rational(&f.eval_rational(&rat(1, 3))));
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(f.sign_at(&rat(1, 2)), Sign::Plus);
    }
}
