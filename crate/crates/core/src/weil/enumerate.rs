//! Enumeration of Weil polynomials of a given genus.
//!
//! The search runs over the real part `h(y) = y^g + b_1 y^(g-1) + ... + b_g`,
//! which must have all roots in `[-2 sqrt q, 2 sqrt q]`. Since `a_m - b_m`
//! only depends on `b_1 .. b_(m-1)`, lexicographic order on the `b` agrees
//! with lexicographic order on `a_1 .. a_g`.
//!
//! At depth `m` the derivative `h^(g-m)` has degree `m` and depends on
//! `b_1 .. b_m` only, with `b_m (g-m)!` as its constant term. It is
//! real-rooted in the interval whenever `h` is, and the admissible constant
//! terms form an interval cut out by its values at its critical points
//! (the roots of the previous derivative) and at `±2 sqrt q`. Interval
//! enclosures give outer bounds, which exact Sturm tests then tighten.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::WeilPolynomial;
use crate::arith::Rational;
use crate::interval::Iv;
use crate::poly::IntPoly;

const ENCLOSURE_BITS: u32 = 64;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `x^g h(x + q/x) = sum_k h_k x^(g-k) (x^2 + q)^k`.
pub fn real_part_to_weil(h: &IntPoly, q: &BigInt) -> IntPoly {
    let g = h.degree();
    let base = IntPoly::new(vec![q.clone(), BigInt::zero(), BigInt::one()]);
    let mut out = IntPoly::zero();
    let mut pow = IntPoly::constant(BigInt::one());
    for k in 0..=g {
        let mut shifted = vec![BigInt::zero(); g - k];
        shifted.extend(pow.coeffs().iter().cloned());
        out = out.add(&IntPoly::new(shifted).scale(&h.coeff(k)));
        pow = pow.mul(&base);
    }
    out
}

struct Search {
    g: usize,
    q: BigInt,
    disc: BigInt,
    facts: Vec<BigInt>,
    bound: Iv,
}

impl Search {
    fn new(q: &BigInt, g: usize) -> Self {
        let disc = q * 4u32;
        Search {
            g,
            q: q.clone(),
            facts: (0..=g).map(factorial).collect(),
            bound: Iv::point_int(&disc, ENCLOSURE_BITS).sqrt(),
            disc,
        }
    }

    /// `h^(g-m)` without its constant term, from `b_0 = 1, b_1 .. b_(m-1)`.
    fn partial_derivative(&self, b: &[BigInt], m: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); m + 1];
        for (j, bj) in b.iter().enumerate().take(m) {
            c[m - j] = bj * &self.facts[self.g - j] / &self.facts[m - j];
        }
        IntPoly::new(c)
    }

    /// Sorted critical points with multiplicity, as enclosures.
    fn critical_points(&self, d0: &IntPoly) -> Vec<Iv> {
        let dp = d0.derivative();
        let mut roots: Vec<(Rational, Rational, IntPoly, u32)> = Vec::new();
        for (f, m) in dp.yun() {
            for r in f.isolate_real_roots() {
                roots.push((r.lo, r.hi, f.clone(), m));
            }
        }
        // Refine, then order; roots of different factors are distinct.
        let mut out: Vec<(Iv, u32)> = roots
            .into_iter()
            .map(|(lo, hi, f, m)| {
                let mut ri = crate::poly::RootInterval { lo, hi };
                ri.refine(&f, ENCLOSURE_BITS);
                (ri.to_iv(ENCLOSURE_BITS), m)
            })
            .collect();
        out.sort_by(|a, b| a.0.mid().partial_cmp(&b.0.mid()).unwrap_or(Ordering::Equal));
        out.into_iter().flat_map(|(iv, m)| core::iter::repeat_n(iv, m as usize)).collect()
    }

    fn admissible(&self, d0: &IntPoly, t: &BigInt) -> bool {
        d0.add(&IntPoly::constant(t.clone())).real_rooted_in(&self.disc)
    }

    /// Admissible `b_m` at depth `m`, ascending.
    fn range(&self, b: &[BigInt], m: usize) -> Vec<BigInt> {
        let d0 = self.partial_derivative(b, m);
        let mut lower: Vec<Rational> = Vec::new();
        let mut upper: Vec<Rational> = Vec::new();
        let crit = self.critical_points(&d0);
        debug_assert_eq!(crit.len(), m - 1);
        for (idx, c) in crit.iter().enumerate() {
            let e = d0.eval_iv(c).neg();
            // Critical point j = idx + 1 needs (-1)^(m-1-j) D(c_j) <= 0.
            if (m - 2 - idx).is_multiple_of(2) {
                upper.push(e.hi());
            } else {
                lower.push(e.lo());
            }
        }
        lower.push(d0.eval_iv(&self.bound).neg().lo());
        let at_minus = d0.eval_iv(&self.bound.neg()).neg();
        if m.is_multiple_of(2) {
            lower.push(at_minus.lo());
        } else {
            upper.push(at_minus.hi());
        }
        let t_min = lower.iter().max().unwrap().ceil().to_integer();
        let t_max = upper.iter().min().unwrap().floor().to_integer();
        let f = &self.facts[self.g - m];
        let mut lo = Integer::div_ceil(&t_min, f);
        let mut hi = t_max.div_floor(f);
        while lo <= hi && !self.admissible(&d0, &(&lo * f)) {
            lo += 1;
        }
        while hi >= lo && !self.admissible(&d0, &(&hi * f)) {
            hi -= 1;
        }
        let mut out = Vec::new();
        let mut x = lo;
        while x <= hi {
            out.push(x.clone());
            x += 1;
        }
        out
    }

    fn descend(&self, b: &mut Vec<BigInt>, visit: &mut dyn FnMut(WeilPolynomial)) {
        let m = b.len();
        if m > self.g {
            let h = IntPoly::new(b.iter().rev().cloned().collect());
            let p = real_part_to_weil(&h, &self.q);
            visit(WeilPolynomial::from_parts(p, self.q.clone(), h));
            return;
        }
        for bm in self.range(b, m) {
            b.push(bm);
            self.descend(b, visit);
            b.pop();
        }
    }
}

/// Admissible values of `b_1 = a_1`, ascending. Each one is an independent
/// branch of the search.
pub fn first_coefficients(q: &BigInt, g: usize) -> Vec<BigInt> {
    if g == 0 {
        return Vec::new();
    }
    Search::new(q, g).range(&[BigInt::one()], 1)
}

/// Visits the Weil polynomials with `a_1 = b1` in lexicographic order.
pub fn enumerate_branch(q: &BigInt, g: usize, b1: &BigInt, mut visit: impl FnMut(WeilPolynomial)) {
    let s = Search::new(q, g);
    let mut b = vec![BigInt::one(), b1.clone()];
    s.descend(&mut b, &mut visit);
}

/// Visits every Weil `q`-polynomial of degree `2g`, in lexicographic order
/// of `a_1 .. a_g`.
pub fn enumerate(q: &BigInt, g: usize, mut visit: impl FnMut(WeilPolynomial)) {
    if g == 0 {
        return;
    }
    let s = Search::new(q, g);
    let mut b = vec![BigInt::one()];
    s.descend(&mut b, &mut visit);
}
