//! Definiteness verdicts for intersection forms on algebraic classes, and
//! the signature report for abelian fourfolds.
//!
//! A motive of rank 2 with Hodge type `(i, -i), (-i, i)` carries a Betti
//! form `q_B` (a polarization, so definite of sign `(-1)^i`) and a form
//! `q_Z` on algebraic classes. The two agree over every `Q_l` with `l != p`,
//! so the definiteness of `q_Z` is fixed by whether they agree over `Q_p`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_perfect_square, Place, Prime, Rational};
use crate::error::{Error, Result};
use crate::norms::{decide_p_isomorphic, ExtensionKind, LocalQuadExtension};
use crate::poly::IntPoly;
use crate::quadform::{infer_definiteness, locally_isomorphic, BinaryForm, Definiteness};
use crate::weil::{
    certified_multisets, check_structure, exotic_subsets, ExoticSubset, Precision, RootSystem, StructureReport,
    ValueMultiset, WeilPolynomial,
};

/// Extension depth used for the stable exotic list of a fourfold report.
pub const STABLE_DEPTH: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveDescriptor {
    hodge_gap: u32,
    p: Prime,
    extension: Option<LocalQuadExtension>,
    q_b: BinaryForm,
    q_z: Option<BinaryForm>,
}

impl MotiveDescriptor {
    pub fn new(
        hodge_gap: u32,
        p: Prime,
        extension: Option<LocalQuadExtension>,
        q_b: BinaryForm,
        q_z: Option<BinaryForm>,
    ) -> Result<Self> {
        let expected = if hodge_gap.is_multiple_of(2) { Definiteness::Positive } else { Definiteness::Negative };
        if q_b.definiteness() != expected {
            return Err(Error::Descriptor(alloc::format!(
                "q_B must be {} definite for Hodge gap {hodge_gap}",
                expected.as_str()
            )));
        }
        if let Some(ext) = &extension {
            if ext.p() != &p {
                return Err(Error::Descriptor(alloc::format!("extension is over Q_{}, not Q_{p}", ext.p())));
            }
        }
        if hodge_gap > 0 {
            match &extension {
                None => return Err(Error::MissingExtension),
                Some(ext) if ext.is_split() => return Err(Error::SplitExtension),
                Some(_) => {}
            }
        }
        Ok(MotiveDescriptor { hodge_gap, p, extension, q_b, q_z })
    }

    /// The descriptor with `q_B = <s, s>`, `s = (-1)^i`, and no `q_Z`.
    pub fn standard(hodge_gap: u32, p: Prime, extension: Option<LocalQuadExtension>) -> Result<Self> {
        let s = Rational::from_integer(BigInt::from(if hodge_gap.is_multiple_of(2) { 1 } else { -1 }));
        Self::new(hodge_gap, p, extension, BinaryForm::diag(s.clone(), s)?, None)
    }

    pub fn hodge_gap(&self) -> u32 {
        self.hodge_gap
    }

    pub fn p(&self) -> &Prime {
        &self.p
    }

    pub fn extension(&self) -> Option<&LocalQuadExtension> {
        self.extension.as_ref()
    }

    pub fn q_b(&self) -> &BinaryForm {
        &self.q_b
    }

    pub fn q_z(&self) -> Option<&BinaryForm> {
        self.q_z.as_ref()
    }
}

/// Definiteness of `q_Z`. Its discriminant equals that of `q_B`, which is
/// positive since `q_B` is definite.
pub fn predict_definiteness(m: &MotiveDescriptor) -> Result<Definiteness> {
    let iso = decide_p_isomorphic(m.hodge_gap, m.extension.as_ref())?;
    let disc_positive = m.q_b.determinant().is_positive();
    infer_definiteness(disc_positive, iso, m.q_b.definiteness())
        .ok_or_else(|| Error::Internal("q_B is not definite".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub predicted: Definiteness,
    pub observed: Definiteness,
    /// `(l, q_B ≅ q_Z over Q_l)` for each witness prime.
    pub witnesses: Vec<(Prime, bool)>,
    pub p_isomorphic_predicted: bool,
    pub p_isomorphic_observed: bool,
    pub issues: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Compares a known `q_Z` against the prediction. Mismatches are collected
/// in the report, not returned as errors.
pub fn verify_qz_when_known(m: &MotiveDescriptor, witness_primes: &[Prime]) -> Result<ConsistencyReport> {
    let q_z = m.q_z.as_ref().ok_or_else(|| Error::Descriptor("q_Z is not given".into()))?;
    let predicted = predict_definiteness(m)?;
    let observed = q_z.definiteness();
    let mut issues = Vec::new();
    if predicted != observed {
        issues.push(alloc::format!("q_Z is {} but {} was predicted", observed.as_str(), predicted.as_str()));
    }
    let mut witnesses = Vec::with_capacity(witness_primes.len());
    for l in witness_primes {
        if l == &m.p {
            return Err(Error::Descriptor(alloc::format!("witness prime {l} equals p")));
        }
        let iso = locally_isomorphic(&m.q_b, q_z, &Place::Finite(l.clone()));
        if !iso {
            issues.push(alloc::format!("q_B and q_Z differ over Q_{l}"));
        }
        witnesses.push((l.clone(), iso));
    }
    let p_pred = decide_p_isomorphic(m.hodge_gap, m.extension.as_ref())?;
    let p_obs = locally_isomorphic(&m.q_b, q_z, &Place::Finite(m.p.clone()));
    if p_pred != p_obs {
        issues.push(alloc::format!(
            "over Q_{}: forms are {}isomorphic, expected {}isomorphic",
            m.p,
            if p_obs { "" } else { "not " },
            if p_pred { "" } else { "not " }
        ));
    }
    Ok(ConsistencyReport {
        predicted,
        observed,
        witnesses,
        p_isomorphic_predicted: p_pred,
        p_isomorphic_observed: p_obs,
        issues,
    })
}

/// Which counts in a [`FourfoldReport`] rest on the Tate conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditionality {
    pub rho1_conditional: bool,
    pub rho2_conditional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourfoldReport {
    pub rho1: u64,
    pub rho2_tate: u64,
    /// Size-4 conjugate-free multisets with product `q^2`.
    pub exotic_count: usize,
    pub exotic_subsets: Vec<ExoticSubset>,
    /// The members of `exotic_subsets` that stay conjugate-free over every
    /// extension of degree at most `stable_depth`.
    pub stable_exotic_subsets: Vec<ValueMultiset>,
    pub stable_depth: u32,
    pub structure: StructureReport,
    /// `(rho2 - rho1 + 1, rho1 - 1)`.
    pub predicted_signature: (u64, u64),
    pub conditionality: Conditionality,
}

pub fn fourfold_signature_report(p: &WeilPolynomial, prec: Precision) -> Result<FourfoldReport> {
    fourfold_signature_report_at_depth(p, prec, STABLE_DEPTH)
}

pub fn fourfold_signature_report_at_depth(p: &WeilPolynomial, prec: Precision, depth: u32) -> Result<FourfoldReport> {
    p.require_degree(8)?;
    let rs = RootSystem::new(p);
    let count = |k: usize, w: u32| -> Result<u64> {
        certified_multisets(&rs, k, w, prec)?
            .certificate
            .exact_multiplicity
            .to_u64()
            .ok_or_else(|| Error::Internal("subset count overflow".into()))
    };
    let rho1 = count(2, 1)?;
    let rho2 = count(4, 2)?;
    let exotic = exotic_subsets(&rs, 1, prec)?;
    let stable: Vec<ValueMultiset> = if exotic.is_empty() || depth <= 1 {
        exotic.iter().map(|e| e.values.clone()).collect()
    } else {
        exotic_subsets(&rs, depth, prec)?.into_iter().map(|e| e.values).collect()
    };
    let structure = check_structure(&stable, &rs)?;
    if rho1 == 0 || rho2 + 1 < rho1 {
        return Err(Error::Internal(alloc::format!("implausible counts rho1 = {rho1}, rho2 = {rho2}")));
    }
    Ok(FourfoldReport {
        rho1,
        rho2_tate: rho2,
        exotic_count: exotic.len(),
        exotic_subsets: exotic,
        stable_exotic_subsets: stable,
        stable_depth: depth.max(1),
        structure,
        predicted_signature: (rho2 - rho1 + 1, rho1 - 1),
        conditionality: Conditionality { rho1_conditional: false, rho2_conditional: true },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rank2Verdict {
    /// Irrational roots: no algebraic classes on the piece.
    NoAlgebraicClasses,
    /// Rational roots: the piece is spanned by algebraic classes and `q_Z`
    /// has the given definiteness.
    Algebraic { weight: u32, definiteness: Definiteness },
}

/// Verdict for a rank-2 piece with Frobenius characteristic polynomial
/// `x^2 + a x + q^w`. A positive Hodge gap without an extension uses the
/// unramified one.
pub fn rank2_pathway(
    charpoly: &IntPoly,
    q: &BigInt,
    hodge_gap: u32,
    p: &Prime,
    extension: Option<LocalQuadExtension>,
) -> Result<Rank2Verdict> {
    if charpoly.degree() != 2 {
        return Err(Error::Degree { expected: 2, found: charpoly.degree() });
    }
    if !charpoly.is_monic() {
        return Err(Error::OutOfRange("characteristic polynomial must be monic".into()));
    }
    let c0 = charpoly.coeff(0);
    let a = charpoly.coeff(1);
    let weight = power_of(&c0, q)
        .ok_or_else(|| Error::OutOfRange(alloc::format!("constant term {c0} is not a power of {q}")))?;
    let disc = &a * &a - &c0 * 4u32;
    if disc.is_positive() {
        return Err(Error::OutOfRange("roots are real and not of equal absolute value".into()));
    }
    if !is_perfect_square(&disc) {
        return Ok(Rank2Verdict::NoAlgebraicClasses);
    }
    let extension = match extension {
        Some(e) => Some(e),
        None if hodge_gap > 0 => Some(LocalQuadExtension::of_kind(ExtensionKind::Unramified, p)?),
        None => None,
    };
    let m = MotiveDescriptor::standard(hodge_gap, p.clone(), extension)?;
    Ok(Rank2Verdict::Algebraic { weight, definiteness: predict_definiteness(&m)? })
}

fn power_of(n: &BigInt, q: &BigInt) -> Option<u32> {
    if !n.is_positive() || q <= &BigInt::from(1) {
        return None;
    }
    let mut n = n.clone();
    let mut w = 0;
    while !n.is_one() {
        let (d, r) = n.div_rem(q);
        if !r.is_zero() {
            return None;
        }
        n = d;
        w += 1;
    }
    Some(w)
}

/// Fractional part of `(v_alpha / v_q) * local_degree`.
pub fn honda_tate_invariant(v_alpha: &Rational, v_q: &Rational, local_degree: u32) -> Result<Rational> {
    if !v_q.is_positive() {
        return Err(Error::OutOfRange("v(q) must be positive".into()));
    }
    if local_degree == 0 {
        return Err(Error::OutOfRange("local degree must be positive".into()));
    }
    let ratio = v_alpha / v_q;
    if ratio.is_negative() || ratio > Rational::from_integer(BigInt::from(1)) {
        return Err(Error::OutOfRange("v(alpha)/v(q) must lie in [0, 1]".into()));
    }
    let x = ratio * Rational::from_integer(BigInt::from(local_degree));
    Ok(&x - x.floor())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::norms::classify_extension;

    fn p(n: u64) -> Prime {
        Prime::from_u64(n).unwrap()
    }

    fn diag(a: i64, b: i64) -> BinaryForm {
        BinaryForm::diag(int(a), int(b)).unwrap()
    }

    fn ext(kind: ExtensionKind, q: u64) -> Option<LocalQuadExtension> {
        Some(LocalQuadExtension::of_kind(kind, &p(q)).unwrap())
    }

    #[test]
    fn descriptor_validation() {
        assert!(MotiveDescriptor::new(0, p(3), None, diag(1, 1), None).is_ok());
        assert!(matches!(MotiveDescriptor::new(1, p(3), None, diag(1, 1), None), Err(Error::Descriptor(_))));
        assert_eq!(MotiveDescriptor::new(1, p(3), None, diag(-1, -1), None), Err(Error::MissingExtension));
        let split = classify_extension(&int(1), &p(3)).ok();
        assert_eq!(MotiveDescriptor::new(1, p(3), split, diag(-1, -1), None), Err(Error::SplitExtension));
        let wrong_p = ext(ExtensionKind::Unramified, 5);
        assert!(matches!(MotiveDescriptor::new(1, p(3), wrong_p, diag(-1, -1), None), Err(Error::Descriptor(_))));
        assert!(matches!(MotiveDescriptor::new(0, p(3), None, diag(1, -1), None), Err(Error::Descriptor(_))));
    }

    #[test]
    fn predictions() {
        let m = MotiveDescriptor::standard(0, p(7), None).unwrap();
        assert_eq!(predict_definiteness(&m).unwrap(), Definiteness::Positive);
        let m = MotiveDescriptor::standard(1, p(3), ext(ExtensionKind::Unramified, 3)).unwrap();
        assert_eq!(predict_definiteness(&m).unwrap(), Definiteness::Positive);
        let m = MotiveDescriptor::standard(2, p(2), ext(ExtensionKind::WildQ2SqrtMinus1, 2)).unwrap();
        assert_eq!(predict_definiteness(&m).unwrap(), Definiteness::Positive);
    }

    #[test]
    fn consistency() {
        let m = MotiveDescriptor::new(0, p(5), None, diag(1, 1), Some(diag(1, 1))).unwrap();
        assert!(verify_qz_when_known(&m, &[p(2), p(3)]).unwrap().is_consistent());

        // <3, 3> has discriminant 9 ~ 1 and e_3 = -1, against e_3 = +1 for <-1, -1>.
        let m =
            MotiveDescriptor::new(1, p(3), ext(ExtensionKind::Unramified, 3), diag(-1, -1), Some(diag(3, 3))).unwrap();
        let r = verify_qz_when_known(&m, &[p(2), p(5), p(7)]).unwrap();
        assert!(r.is_consistent(), "{:?}", r.issues);
        assert!(!r.p_isomorphic_observed);

        let m = MotiveDescriptor::new(0, p(5), None, diag(1, 1), Some(diag(-1, -1))).unwrap();
        let r = verify_qz_when_known(&m, &[p(3)]).unwrap();
        assert!(!r.is_consistent());
        assert_eq!(r.observed, Definiteness::Negative);

        assert!(verify_qz_when_known(&m, &[p(5)]).is_err());
    }

    #[test]
    fn rank2() {
        // (x - 9)^2 over q = 3: weight 4
        let sq = IntPoly::from_i64(&[81, -18, 1]);
        assert_eq!(
            rank2_pathway(&sq, &BigInt::from(3), 1, &p(3), None).unwrap(),
            Rank2Verdict::Algebraic { weight: 4, definiteness: Definiteness::Positive }
        );
        let irr = IntPoly::from_i64(&[81, 1, 1]);
        assert_eq!(rank2_pathway(&irr, &BigInt::from(3), 1, &p(3), None).unwrap(), Rank2Verdict::NoAlgebraicClasses);
        let cubic = IntPoly::from_i64(&[1, 0, 0, 1]);
        assert!(matches!(rank2_pathway(&cubic, &BigInt::from(3), 1, &p(3), None), Err(Error::Degree { .. })));
        let off = IntPoly::from_i64(&[81, 30, 1]);
        assert!(rank2_pathway(&off, &BigInt::from(3), 1, &p(3), None).is_err());
        let not_power = IntPoly::from_i64(&[80, 0, 1]);
        assert!(rank2_pathway(&not_power, &BigInt::from(3), 1, &p(3), None).is_err());
    }

    #[test]
    fn honda_tate() {
        assert_eq!(honda_tate_invariant(&rat(1, 4), &int(1), 4).unwrap(), int(0));
        assert_eq!(honda_tate_invariant(&int(1), &int(2), 1).unwrap(), rat(1, 2));
        assert_eq!(honda_tate_invariant(&int(1), &int(2), 2).unwrap(), int(0));
        assert_eq!(honda_tate_invariant(&int(1), &int(3), 2).unwrap(), rat(2, 3));
        assert!(honda_tate_invariant(&int(3), &int(2), 1).is_err());
    }

    #[test]
    fn supersingular_fourfold() {
        for q in [2u64, 3, 5] {
            let poly = IntPoly::from_i64(&[q as i64, 0, 1]).pow(4);
            let wp = WeilPolynomial::new(poly.into_coeffs(), BigInt::from(q)).unwrap();
            let r = fourfold_signature_report(&wp, Precision::default()).unwrap();
            assert_eq!((r.rho1, r.rho2_tate, r.exotic_count), (16, 38, 2));
            assert_eq!(r.predicted_signature, (23, 15));
            assert!(r.stable_exotic_subsets.is_empty());
            assert!(r.structure.is_ok());
            assert_eq!(r.predicted_signature.0 + r.predicted_signature.1, r.rho2_tate);
        }
    }

    #[test]
    fn fourfold_needs_degree_eight() {
        let wp = WeilPolynomial::from_i64(&[2, 0, 1], 2).unwrap();
        assert!(matches!(fourfold_signature_report(&wp, Precision::default()), Err(Error::Degree { .. })));
    }
}
