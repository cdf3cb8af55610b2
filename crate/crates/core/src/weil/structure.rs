use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::extension::base_extension;
use super::subsets::ValueMultiset;
use super::RootSystem;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The number of subsets is not 0, 2 or 4.
    Count(usize),
    /// The conjugate of subset `index` is missing from the list.
    NotClosed { index: usize },
    /// Subset `index` is its own conjugate.
    FixedPoint { index: usize },
    /// Two subsets share exactly two elements.
    MeetInTwo { first: usize, second: usize },
    /// Four subsets not of the shape `I, Ī, J, J̄` with `|I ∩ J| = 3`.
    FourShape,
    /// Four subsets, yet `q` is not an eigenvalue over the quadratic extension.
    NoEigenvalueQ,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Count(n) => write!(f, "{n} subsets; expected 0, 2 or 4"),
            Violation::NotClosed { index } => write!(f, "conjugate of subset {index} is missing"),
            Violation::FixedPoint { index } => write!(f, "subset {index} is fixed by conjugation"),
            Violation::MeetInTwo { first, second } => {
                write!(f, "subsets {first} and {second} share exactly two elements")
            }
            Violation::FourShape => f.write_str("four subsets without the I, conj I, J, conj J shape"),
            Violation::NoEigenvalueQ => f.write_str("four subsets but q is no eigenvalue after squaring"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub count: usize,
    pub violations: Vec<Violation>,
    /// Whether `q` is a root of the quadratic base extension; only computed
    /// when there are four subsets.
    pub eigenvalue_q_after_squaring: Option<bool>,
}

impl StructureReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a list of size-4 multisets of values of `rs` against the
/// structure expected of exotic subsets.
pub fn check_structure(subsets: &[ValueMultiset], rs: &RootSystem) -> Result<StructureReport> {
    let n = subsets.len();
    let mut violations = Vec::new();
    if !matches!(n, 0 | 2 | 4) {
        violations.push(Violation::Count(n));
    }
    let conj: Vec<ValueMultiset> = subsets.iter().map(|s| s.conj(rs)).collect();
    for (i, c) in conj.iter().enumerate() {
        if *c == subsets[i] {
            violations.push(Violation::FixedPoint { index: i });
        } else if !subsets.contains(c) {
            violations.push(Violation::NotClosed { index: i });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if subsets[i].intersection_size(&subsets[j]) == 2 {
                violations.push(Violation::MeetInTwo { first: i, second: j });
            }
        }
    }
    let mut eigen_q = None;
    if n == 4 {
        let i = &subsets[0];
        let shape = subsets[1..].iter().filter(|s| **s != conj[0]).any(|j| i.intersection_size(j) == 3);
        if !shape {
            violations.push(Violation::FourShape);
        }
        let p2 = base_extension(rs.weil(), 2)?;
        let has_q = p2.poly().eval(rs.q()).is_zero();
        if !has_q {
            violations.push(Violation::NoEigenvalueQ);
        }
        eigen_q = Some(has_q);
    }
    Ok(StructureReport { count: n, violations, eigenvalue_q_after_squaring: eigen_q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::weil::{exotic_subsets, Precision, WeilPolynomial};
    use num_bigint::BigInt;

    fn rs_ss4(p: i64) -> RootSystem {
        let poly = IntPoly::from_i64(&[p, 0, 1]).pow(4);
        RootSystem::new(&WeilPolynomial::new(poly.into_coeffs(), BigInt::from(p)).unwrap())
    }

    #[test]
    fn conjugate_pair_passes() {
        let rs = rs_ss4(5);
        let ex: Vec<ValueMultiset> =
            exotic_subsets(&rs, 1, Precision::default()).unwrap().into_iter().map(|e| e.values).collect();
        let r = check_structure(&ex, &rs).unwrap();
        assert!(r.is_ok());
        assert_eq!(r.count, 2);
        assert!(check_structure(&[], &rs).unwrap().is_ok());
    }

    #[test]
    fn injected_defects_are_flagged() {
        let rs = rs_ss4(2);
        let i = ValueMultiset(alloc::vec![0, 0, 0, 0]);
        let r = check_structure(core::slice::from_ref(&i), &rs).unwrap();
        assert!(r.violations.contains(&Violation::Count(1)));
        assert!(r.violations.contains(&Violation::NotClosed { index: 0 }));
        let j = ValueMultiset(alloc::vec![0, 0, 1, 1]);
        let r = check_structure(&[i, j], &rs).unwrap();
        assert!(r.violations.contains(&Violation::MeetInTwo { first: 0, second: 1 }));
        assert!(r.violations.contains(&Violation::FixedPoint { index: 1 }));
    }
}
