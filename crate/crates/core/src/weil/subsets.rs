//! Certified counting of root subsets with a prescribed product.
//!
//! Two independent routes have to agree before anything is reported:
//!
//! * exact: the multiplicity of `q^w` as a root of the integer polynomial
//!   `Q_k(x) = prod_{|S| = k} (x - prod_{i in S} α_i)`, built from power sums;
//! * intervals: value multisets whose product enclosure contains `q^w`,
//!   each weighted by the number of index subsets it stands for.
//!
//! Every true match survives the interval test, so the weighted candidate
//! count is at least the exact multiplicity, with equality exactly when no
//! false candidate is left. Precision is doubled until that happens.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Zero};

use super::extension::{base_extension, elementary_from_power_sums, from_elementary, power_sums};
use super::{Precision, RootSystem, WeilPolynomial};
use crate::error::{Error, Result};
use crate::interval::CIv;

/// Sorted value ids, repeated according to how often each value is used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueMultiset(pub Vec<usize>);

impl ValueMultiset {
    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    /// Value-wise `α ↦ q/α`.
    pub fn conj(&self, rs: &RootSystem) -> ValueMultiset {
        let mut v: Vec<usize> = self.0.iter().map(|&i| rs.conj(i)).collect();
        v.sort_unstable();
        ValueMultiset(v)
    }

    /// Size of the multiset intersection.
    pub fn intersection_size(&self, other: &ValueMultiset) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// No value appears together with its conjugate; real values never pass.
    pub fn conjugate_free(&self, rs: &RootSystem) -> bool {
        self.0.iter().all(|&i| !self.contains(rs.conj(i)))
    }

    /// Number of index subsets of the root multiset this stands for.
    pub fn weight(&self, rs: &RootSystem) -> BigInt {
        let mut w = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let id = self.0[i];
            let mut c = 0;
            while i < self.0.len() && self.0[i] == id {
                c += 1;
                i += 1;
            }
            w *= binomial(BigInt::from(rs.multiplicity(id)), BigInt::from(c));
        }
        w
    }
}

impl fmt::Display for ValueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

/// Evidence that a family of multisets is exactly the set of `k`-subsets
/// with product `q^w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCertificate {
    pub k: usize,
    pub w: u32,
    /// Multiplicity of `q^w` as a root of the subset-product polynomial.
    pub exact_multiplicity: BigInt,
    /// Sum of weights of the interval candidates; equals the above.
    pub weighted_candidates: BigInt,
    pub precision_bits: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedMultisets {
    pub multisets: Vec<ValueMultiset>,
    pub certificate: ProductCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExoticSubset {
    pub values: ValueMultiset,
    pub certificate: ProductCertificate,
}

/// Number of `k`-element index subsets of the roots whose product is `q^w`,
/// computed exactly from the coefficients.
pub fn subset_product_multiplicity(p: &WeilPolynomial, k: usize, w: u32) -> Result<BigInt> {
    let n = p.degree();
    if k > n {
        return Err(Error::OutOfRange(alloc::format!("subset size {k} exceeds degree {n}")));
    }
    let target: BigInt = Pow::pow(p.q(), w);
    if k == 0 {
        return Ok(BigInt::from(u8::from(target.is_one())));
    }
    let big_n: usize = binomial(n, k);
    let sums = power_sums(p.poly(), big_n * k);
    // p_m(Q_k) = e_k(α^m), from the power sums S_m, S_2m, ..., S_km.
    let qsums: Vec<BigInt> = (1..=big_n)
        .map(|m| {
            let ps: Vec<BigInt> = (1..=k).map(|t| sums[t * m - 1].clone()).collect();
            elementary_from_power_sums(&ps, k).pop().unwrap()
        })
        .collect();
    let qk = from_elementary(&elementary_from_power_sums(&qsums, big_n));
    let mut coeffs = qk.into_coeffs();
    let mut mult = 0u32;
    // Synthetic division by (x - target) while the remainder vanishes.
    loop {
        let d = coeffs.len() - 1;
        if d == 0 {
            break;
        }
        let mut quot = vec![BigInt::zero(); d];
        let mut acc = BigInt::zero();
        for i in (0..=d).rev() {
            acc = acc * &target + &coeffs[i];
            if i > 0 {
                quot[i - 1] = acc.clone();
            }
        }
        if !acc.is_zero() {
            break;
        }
        mult += 1;
        coeffs = quot;
    }
    Ok(BigInt::from(mult))
}

fn enumerate_multisets(mults: &[u32], k: usize, mut visit: impl FnMut(&[u32])) {
    fn rec(mults: &[u32], i: usize, left: usize, counts: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if left == 0 {
            visit(counts);
            return;
        }
        if i == mults.len() {
            return;
        }
        let cap = (mults[i] as usize).min(left);
        for c in (0..=cap).rev() {
            counts[i] = c as u32;
            rec(mults, i + 1, left - c, counts, visit);
        }
        counts[i] = 0;
    }
    let mut counts = vec![0u32; mults.len()];
    rec(mults, 0, k, &mut counts, &mut visit);
}

fn counts_to_multiset(counts: &[u32]) -> ValueMultiset {
    let mut v = Vec::new();
    for (id, &c) in counts.iter().enumerate() {
        v.extend(core::iter::repeat_n(id, c as usize));
    }
    ValueMultiset(v)
}

/// All value multisets of size `k` with product exactly `q^w`, certified
/// against the exact subset count.
pub fn certified_multisets(rs: &RootSystem, k: usize, w: u32, prec: Precision) -> Result<CertifiedMultisets> {
    let exact = subset_product_multiplicity(rs.weil(), k, w)?;
    let target: BigInt = Pow::pow(rs.q(), w);
    let mults: Vec<u32> = rs.values().iter().map(|v| v.multiplicity).collect();
    for bits in prec.ladder() {
        let enc = rs.enclosures(bits);
        let powers: Vec<Vec<CIv>> = enc
            .iter()
            .zip(&mults)
            .map(|(z, &m)| {
                let mut pw = vec![CIv::one(z.prec())];
                for c in 1..=(m as usize).min(k) {
                    let next = pw[c - 1].mul(z);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut found = Vec::new();
        let mut weighted = BigInt::zero();
        enumerate_multisets(&mults, k, |counts| {
            let mut prod = CIv::one(enc[0].prec());
            for (id, &c) in counts.iter().enumerate() {
                if c > 0 {
                    prod = prod.mul(&powers[id][c as usize]);
                }
            }
            if prod.contains_int(&target) {
                let ms = counts_to_multiset(counts);
                weighted += ms.weight(rs);
                found.push(ms);
            }
        });
        if weighted < exact {
            return Err(Error::Internal(alloc::format!(
                "interval route found {weighted} subsets with product q^{w}, exact route {exact}"
            )));
        }
        if weighted == exact {
            found.sort();
            return Ok(CertifiedMultisets {
                multisets: found,
                certificate: ProductCertificate {
                    k,
                    w,
                    exact_multiplicity: exact,
                    weighted_candidates: weighted,
                    precision_bits: bits,
                },
            });
        }
    }
    Err(Error::PrecisionExhausted { bits: prec.max_bits() })
}

/// Number of `2n`-subsets of the roots with product `q^n`.
pub fn tate_class_count(p: &WeilPolynomial, n: usize, prec: Precision) -> Result<BigInt> {
    if n == 0 || n > p.g() {
        return Err(Error::OutOfRange(alloc::format!("codimension {n} outside 1..={}", p.g())));
    }
    let rs = RootSystem::new(p);
    Ok(certified_multisets(&rs, 2 * n, n as u32, prec)?.certificate.exact_multiplicity)
}

/// Multisets of size `k` with product `q^w` containing no value together
/// with its conjugate.
pub fn special_subsets(rs: &RootSystem, k: usize, w: u32, prec: Precision) -> Result<CertifiedMultisets> {
    let mut c = certified_multisets(rs, k, w, prec)?;
    c.multisets.retain(|m| m.conjugate_free(rs));
    Ok(c)
}

/// For each value `α`, the id of `α^n` among the values of the degree-`n`
/// base extension.
pub fn power_map(rs: &RootSystem, n: u32, prec: Precision) -> Result<(RootSystem, Vec<usize>)> {
    let ext = RootSystem::new(&base_extension(rs.weil(), n)?);
    for bits in prec.ladder() {
        let enc = rs.enclosures(bits);
        let enc_n = ext.enclosures(bits);
        let mut map = Vec::with_capacity(enc.len());
        for z in &enc {
            let zn = z.pow(n);
            let mut hits = enc_n.iter().enumerate().filter(|(_, u)| u.overlaps(&zn)).map(|(i, _)| i);
            match (hits.next(), hits.next()) {
                (Some(i), None) => map.push(i),
                (None, _) => {
                    return Err(Error::Internal(alloc::format!("no eigenvalue of the degree-{n} extension matches")))
                }
                _ => break,
            }
        }
        if map.len() == enc.len() {
            return Ok((ext, map));
        }
    }
    Err(Error::PrecisionExhausted { bits: prec.max_bits() })
}

/// Size-4 multisets with product `q^2` that stay conjugate-free after every
/// base extension of degree `n <= n_max`. Depth 1 is the bare
/// product-and-no-conjugate condition.
pub fn exotic_subsets(rs: &RootSystem, n_max: u32, prec: Precision) -> Result<Vec<ExoticSubset>> {
    rs.weil().require_degree(8)?;
    if n_max == 0 {
        return Err(Error::OutOfRange("extension depth must be at least 1".into()));
    }
    let special = special_subsets(rs, 4, 2, prec)?;
    let mut keep = special.multisets;
    for n in 2..=n_max {
        if keep.is_empty() {
            break;
        }
        let (ext, map) = power_map(rs, n, prec)?;
        keep.retain(|m| {
            let mut img: Vec<usize> = m.ids().iter().map(|&i| map[i]).collect();
            img.sort_unstable();
            ValueMultiset(img).conjugate_free(&ext)
        });
    }
    Ok(keep.into_iter().map(|values| ExoticSubset { values, certificate: special.certificate.clone() }).collect())
}
