//! Distinct Frobenius eigenvalues with certified enclosures.
//!
//! Each distinct root `β` of the real part `h` gives the eigenvalues
//! `β/2 ± i sqrt(q - β²/4)`. A root on the boundary `β = ±2 sqrt q` gives
//! the single real eigenvalue `±sqrt q` with twice the multiplicity.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::WeilPolynomial;
use crate::interval::{CIv, Iv};
use crate::poly::{cmp_rational_surd, IntPoly, RootInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// Positive imaginary part.
    Upper,
    /// Negative imaginary part.
    Lower,
    /// The real eigenvalue `±sqrt q`.
    Real,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Locus {
    Interior(RootInterval),
    /// `β = -2 sqrt q` when `negative`, else `+2 sqrt q`.
    Boundary {
        negative: bool,
    },
}

#[derive(Clone, Debug)]
struct Beta {
    factor: IntPoly,
    multiplicity: u32,
    locus: Locus,
}

/// One distinct eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootValue {
    /// Index of `β = α + q/α` among the distinct real roots of `h`, in
    /// increasing order.
    pub beta: usize,
    pub branch: Branch,
    pub multiplicity: u32,
}

/// The distinct eigenvalues of a Weil polynomial, their multiplicities, and
/// complex conjugation `α ↦ q/α` on them.
#[derive(Clone, Debug)]
pub struct RootSystem {
    weil: WeilPolynomial,
    q: BigInt,
    betas: Vec<Beta>,
    values: Vec<RootValue>,
}

pub fn conjugate_pairing(p: &WeilPolynomial) -> RootSystem {
    RootSystem::new(p)
}

impl RootSystem {
    pub fn new(p: &WeilPolynomial) -> Self {
        let q = p.q().clone();
        let disc = &q * 4u32;
        let mut betas = Vec::new();
        for (factor, m) in p.real_part().yun() {
            let mut bounds = Vec::new();
            for negative in [true, false] {
                if factor.sign_at_surd(negative, &disc) == num_bigint::Sign::NoSign {
                    bounds.push(negative);
                }
            }
            for iv in factor.isolate_real_roots() {
                let hit = bounds.iter().copied().find(|&neg| encloses_surd(&iv, neg, &disc));
                let locus = match hit {
                    Some(negative) => Locus::Boundary { negative },
                    None => Locus::Interior(iv),
                };
                betas.push(Beta { factor: factor.clone(), multiplicity: m, locus });
            }
        }
        separate(&mut betas);
        betas.sort_by(cmp_beta);
        let mut values = Vec::new();
        for (i, b) in betas.iter().enumerate() {
            match b.locus {
                Locus::Boundary { .. } => {
                    values.push(RootValue { beta: i, branch: Branch::Real, multiplicity: 2 * b.multiplicity })
                }
                Locus::Interior(_) => {
                    values.push(RootValue { beta: i, branch: Branch::Upper, multiplicity: b.multiplicity });
                    values.push(RootValue { beta: i, branch: Branch::Lower, multiplicity: b.multiplicity });
                }
            }
        }
        RootSystem { weil: p.clone(), q, betas, values }
    }

    pub fn weil(&self) -> &WeilPolynomial {
        &self.weil
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn values(&self) -> &[RootValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn multiplicity(&self, id: usize) -> u32 {
        self.values[id].multiplicity
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.values.iter().map(|v| v.multiplicity).sum()
    }

    /// The id of `q / α`.
    pub fn conj(&self, id: usize) -> usize {
        match self.values[id].branch {
            Branch::Real => id,
            Branch::Upper => id + 1,
            Branch::Lower => id - 1,
        }
    }

    pub fn is_real(&self, id: usize) -> bool {
        self.values[id].branch == Branch::Real
    }

    /// `β` as an exact description: the squarefree factor of `h` it is a root
    /// of, and its multiplicity in `h`.
    pub fn beta_factor(&self, beta: usize) -> (&IntPoly, u32) {
        let b = &self.betas[beta];
        (&b.factor, b.multiplicity)
    }

    /// The involution on the `2g` root slots: slots are the values expanded
    /// by multiplicity, in id order. Slot `k` of a nonreal value is paired
    /// with slot `k` of its conjugate; real values pair consecutive slots.
    pub fn index_pairing(&self) -> Vec<usize> {
        let mut start = Vec::with_capacity(self.values.len());
        let mut n = 0usize;
        for v in &self.values {
            start.push(n);
            n += v.multiplicity as usize;
        }
        let mut out = alloc::vec![0usize; n];
        for (id, v) in self.values.iter().enumerate() {
            let c = self.conj(id);
            for k in 0..v.multiplicity as usize {
                out[start[id] + k] = if c == id { start[id] + (k ^ 1) } else { start[c] + k };
            }
        }
        out
    }

    /// Value id of each root slot.
    pub fn slot_values(&self) -> Vec<usize> {
        self.values.iter().enumerate().flat_map(|(id, v)| core::iter::repeat_n(id, v.multiplicity as usize)).collect()
    }

    /// Enclosures of every value, with real and imaginary parts of width
    /// roughly `2^-prec` (times a small factor).
    pub fn enclosures(&self, prec: u32) -> Vec<CIv> {
        let work = prec + 8;
        let q = Iv::point_int(&self.q, work);
        let sqrt_q = q.sqrt();
        let mut out = Vec::with_capacity(self.values.len());
        for b in &self.betas {
            match &b.locus {
                Locus::Boundary { negative } => {
                    let re = if *negative { sqrt_q.neg() } else { sqrt_q.clone() };
                    out.push(CIv::real(re));
                }
                Locus::Interior(iv) => {
                    let mut iv = iv.clone();
                    iv.refine(&b.factor, work);
                    let beta = iv.to_iv(work);
                    let re = beta.shr(1);
                    let im = q.sub(&beta.square().shr(2)).sqrt();
                    out.push(CIv { re: re.clone(), im: im.clone() });
                    out.push(CIv { re, im: im.neg() });
                }
            }
        }
        out
    }

    /// Enclosures of the distinct real parts `β` of `h`.
    pub fn beta_enclosures(&self, prec: u32) -> Vec<Iv> {
        let two_sqrt_q = Iv::point_int(&(&self.q * 4u32), prec).sqrt();
        self.betas
            .iter()
            .map(|b| match &b.locus {
                Locus::Boundary { negative: true } => two_sqrt_q.neg(),
                Locus::Boundary { negative: false } => two_sqrt_q.clone(),
                Locus::Interior(iv) => {
                    let mut iv = iv.clone();
                    iv.refine(&b.factor, prec);
                    iv.to_iv(prec)
                }
            })
            .collect()
    }
}

fn encloses_surd(iv: &RootInterval, negative: bool, disc: &BigInt) -> bool {
    if iv.is_exact() {
        cmp_rational_surd(&iv.lo, negative, disc) == Ordering::Equal
    } else {
        cmp_rational_surd(&iv.lo, negative, disc) == Ordering::Less
            && cmp_rational_surd(&iv.hi, negative, disc) == Ordering::Greater
    }
}

/// Bisects until the isolating intervals of different factors are disjoint.
fn separate(betas: &mut [Beta]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..betas.len() {
            for j in i + 1..betas.len() {
                if let (Locus::Interior(a), Locus::Interior(b)) = (&betas[i].locus, &betas[j].locus) {
                    if a.lo < b.hi && b.lo < a.hi || (a.is_exact() && a.lo == b.lo) {
                        clash = Some((i, j));
                        break 'outer;
                    }
                }
            }
        }
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            let f = betas[k].factor.clone();
            if let Locus::Interior(iv) = &mut betas[k].locus {
                iv.bisect(&f);
            }
        }
    }
}

fn cmp_beta(a: &Beta, b: &Beta) -> Ordering {
    match (&a.locus, &b.locus) {
        (Locus::Boundary { negative: x }, Locus::Boundary { negative: y }) => y.cmp(x),
        (Locus::Boundary { negative }, Locus::Interior(_)) => {
            if *negative {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (Locus::Interior(_), Locus::Boundary { .. }) => cmp_beta(b, a).reverse(),
        (Locus::Interior(x), Locus::Interior(y)) => {
            let c = x.lo.cmp(&y.lo);
            if c == Ordering::Equal {
                x.hi.cmp(&y.hi)
            } else {
                c
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(c: &[i64], q: u64) -> RootSystem {
        RootSystem::new(&WeilPolynomial::from_i64(c, q).unwrap())
    }

    #[test]
    fn supersingular_fourth_power() {
        let p = IntPoly::from_i64(&[2, 0, 1]).pow(4);
        let w = WeilPolynomial::new(p.into_coeffs(), BigInt::from(2)).unwrap();
        let r = RootSystem::new(&w);
        assert_eq!(r.len(), 2);
        assert_eq!(r.multiplicity(0), 4);
        assert_eq!(r.conj(0), 1);
        let e = r.enclosures(64);
        assert!(e[0].re.contains_zero() && e[0].im.square().contains_int(&BigInt::from(2)));
        assert_eq!(e[0].im.sign(), Some(num_bigint::Sign::Plus));
        assert_eq!(r.total_multiplicity(), 8);
    }

    #[test]
    fn gaussian_pair() {
        let r = rs(&[2, -2, 1], 2);
        let e = r.enclosures(80);
        assert!(e[0].re.contains_int(&BigInt::from(1)));
        assert!(e[0].im.contains_int(&BigInt::from(1)));
        assert!(e[1].im.contains_int(&BigInt::from(-1)));
        assert!(e[0].mul(&e[1]).contains_int(&BigInt::from(2)));
    }

    #[test]
    fn self_paired_real_value() {
        let r = rs(&[4, -4, 1], 4);
        assert_eq!(r.values(), &[RootValue { beta: 0, branch: Branch::Real, multiplicity: 2 }]);
        assert_eq!(r.conj(0), 0);
        assert!(r.enclosures(40)[0].contains_int(&BigInt::from(2)));
        assert_eq!(r.index_pairing(), alloc::vec![1, 0]);
    }

    #[test]
    fn mixed_boundary_and_interior() {
        // (x^2 + 2)(x^2 - 2)^2 (x^2 - x + 2), q = 2
        let p = IntPoly::from_i64(&[2, 0, 1])
            .mul(&IntPoly::from_i64(&[-2, 0, 1]).pow(2))
            .mul(&IntPoly::from_i64(&[2, -1, 1]));
        let w = WeilPolynomial::new(p.into_coeffs(), BigInt::from(2)).unwrap();
        let r = RootSystem::new(&w);
        let branches: Vec<Branch> = r.values().iter().map(|v| v.branch).collect();
        assert_eq!(branches, [Branch::Real, Branch::Upper, Branch::Lower, Branch::Upper, Branch::Lower, Branch::Real]);
        assert_eq!(r.total_multiplicity(), 8);
        let e = r.enclosures(64);
        assert!(e[0].re.square().contains_int(&BigInt::from(2)) && e[0].re.sign() == Some(num_bigint::Sign::Minus));
        let pairing = r.index_pairing();
        for (i, &j) in pairing.iter().enumerate() {
            assert_eq!(pairing[j], i);
            assert_ne!(i, j);
        }
        let slots = r.slot_values();
        for (i, &j) in pairing.iter().enumerate() {
            let prod = e[slots[i]].mul(&e[slots[j]]);
            assert!(prod.contains_int(&BigInt::from(2)));
        }
    }

    #[test]
    fn repeated_interior_roots_across_factors() {
        // (x^2 - x + 2)^2 (x^2 + x + 2): h = (y - 1)^2 (y + 1)
        let p = IntPoly::from_i64(&[2, -1, 1]).pow(2).mul(&IntPoly::from_i64(&[2, 1, 1]));
        let w = WeilPolynomial::new(p.into_coeffs(), BigInt::from(2)).unwrap();
        let r = RootSystem::new(&w);
        let m: Vec<u32> = r.values().iter().map(|v| v.multiplicity).collect();
        assert_eq!(m, [1, 1, 2, 2]);
        let betas = r.beta_enclosures(40);
        assert!(betas[0].contains_int(&BigInt::from(-1)));
        assert!(betas[1].contains_int(&BigInt::from(1)));
    }

    #[test]
    fn zero_beta() {
        let r = rs(&[3, 0, 1], 3);
        assert!(r.beta_enclosures(30)[0].contains_int(&BigInt::from(0)));
    }
}
