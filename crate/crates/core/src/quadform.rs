//! Nondegenerate rank-2 quadratic forms over `Q`.
//!
//! A form is stored by its symmetric Gram matrix `[[g11, g12], [g12, g22]]`,
//! so that `f(x, y) = g11 x^2 + 2 g12 x y + g22 y^2`. Over a local field a
//! rank-2 form is determined up to isometry by its discriminant square class
//! and its Hilbert symbol `ε_v`; at the real place by its signature.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{factor, hilbert, Place, Prime, Rational, SquareClass};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    g11: Rational,
    g12: Rational,
    g22: Rational,
}

/// `(s_plus, s_minus)`; the two entries add up to 2 for a binary form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignaturePair {
    pub s_plus: u32,
    pub s_minus: u32,
}

impl fmt::Display for SignaturePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.s_plus, self.s_minus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
}

impl Definiteness {
    pub fn as_str(self) -> &'static str {
        match self {
            Definiteness::Positive => "positive",
            Definiteness::Negative => "negative",
            Definiteness::Indefinite => "indefinite",
        }
    }
}

/// Local invariants of a form at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariantRecord {
    pub place: Place,
    pub epsilon: i8,
    pub disc_class: SquareClass,
}

impl BinaryForm {
    pub fn new(g11: Rational, g12: Rational, g22: Rational) -> Result<Self> {
        let f = BinaryForm { g11, g12, g22 };
        if f.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(f)
    }

    /// The diagonal form `<a, b>`.
    pub fn diag(a: Rational, b: Rational) -> Result<Self> {
        Self::new(a, Rational::zero(), b)
    }

    pub fn gram(&self) -> [[Rational; 2]; 2] {
        [[self.g11.clone(), self.g12.clone()], [self.g12.clone(), self.g22.clone()]]
    }

    pub fn determinant(&self) -> Rational {
        &self.g11 * &self.g22 - &self.g12 * &self.g12
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        &self.g11 * x * x + Rational::from_integer(BigInt::from(2)) * &self.g12 * x * y + &self.g22 * y * y
    }

    /// The Gram matrix `B^T G B`. Fails if `B` is singular.
    pub fn transform(&self, b: &[[Rational; 2]; 2]) -> Result<Self> {
        let g = self.gram();
        let mut gb = [[Rational::zero(), Rational::zero()], [Rational::zero(), Rational::zero()]];
        for i in 0..2 {
            for j in 0..2 {
                gb[i][j] = &g[i][0] * &b[0][j] + &g[i][1] * &b[1][j];
            }
        }
        let mut out = [[Rational::zero(), Rational::zero()], [Rational::zero(), Rational::zero()]];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = &b[0][i] * &gb[0][j] + &b[1][i] * &gb[1][j];
            }
        }
        let [[a, c], [_, d]] = out;
        Self::new(a, c, d)
    }

    /// A pair `(d1, d2)` with `<d1, d2>` equivalent to the form and
    /// `d1 * d2 = det`. Uses `g11` (or `g22`) as `d1` when nonzero; a purely
    /// antidiagonal form is split along `(1, 1)`, giving `d1 = 2 g12`.
    pub fn diagonalize(&self) -> (Rational, Rational) {
        let det = self.determinant();
        let d1 = if !self.g11.is_zero() {
            self.g11.clone()
        } else if !self.g22.is_zero() {
            self.g22.clone()
        } else {
            Rational::from_integer(BigInt::from(2)) * &self.g12
        };
        let d2 = &det / &d1;
        (d1, d2)
    }

    pub fn epsilon(&self, place: &Place) -> i8 {
        let (d1, d2) = self.diagonalize();
        hilbert(&d1, &d2, place).expect("diagonal entries of a nondegenerate form are nonzero")
    }

    pub fn discriminant_class(&self, place: &Place) -> SquareClass {
        SquareClass::of(&self.determinant(), place).expect("nondegenerate")
    }

    pub fn local_invariants(&self, place: &Place) -> LocalInvariantRecord {
        LocalInvariantRecord {
            place: place.clone(),
            epsilon: self.epsilon(place),
            disc_class: self.discriminant_class(place),
        }
    }

    pub fn real_signature(&self) -> SignaturePair {
        let det = self.determinant();
        let (d1, _) = self.diagonalize();
        match (det.is_positive(), d1.is_positive()) {
            (false, _) => SignaturePair { s_plus: 1, s_minus: 1 },
            (true, true) => SignaturePair { s_plus: 2, s_minus: 0 },
            (true, false) => SignaturePair { s_plus: 0, s_minus: 2 },
        }
    }

    pub fn definiteness(&self) -> Definiteness {
        match self.real_signature() {
            SignaturePair { s_plus: 2, .. } => Definiteness::Positive,
            SignaturePair { s_minus: 2, .. } => Definiteness::Negative,
            _ => Definiteness::Indefinite,
        }
    }

    /// Places outside which every `ε_v` is `+1`: the real place, `2`, and the
    /// primes dividing a numerator or denominator of the diagonal entries.
    pub fn product_formula_support(&self) -> Vec<Place> {
        let (d1, d2) = self.diagonalize();
        let mut primes: BTreeSet<Prime> = BTreeSet::new();
        primes.insert(Prime::two());
        for n in [d1.numer(), d1.denom(), d2.numer(), d2.denom()] {
            primes.extend(factor(n).into_iter().map(|(p, _)| p));
        }
        core::iter::once(Place::Real).chain(primes.into_iter().map(Place::Finite)).collect()
    }

    /// Whether `∏_v ε_v = +1` over the support. Always true for a valid form.
    pub fn product_formula_check(&self) -> bool {
        self.product_formula_support().iter().map(|v| self.epsilon(v) as i32).product::<i32>() == 1
    }
}

/// Isometry over the completion at `place`.
pub fn locally_isomorphic(f1: &BinaryForm, f2: &BinaryForm, place: &Place) -> bool {
    match place {
        Place::Real => f1.real_signature() == f2.real_signature(),
        Place::Finite(_) => {
            f1.discriminant_class(place) == f2.discriminant_class(place) && f1.epsilon(place) == f2.epsilon(place)
        }
    }
}

/// Definiteness of `f1` from the data available when `f1` and `f2` are
/// known to be isometric over every `Q_l` with `l != p` (caller's contract).
///
/// Returns `None` when `f2` is indefinite, in which case the data does not
/// decide.
pub fn infer_definiteness(
    f1_disc_positive: bool,
    p_isomorphic: bool,
    f2_definiteness: Definiteness,
) -> Option<Definiteness> {
    if !f1_disc_positive {
        return Some(Definiteness::Indefinite);
    }
    match (p_isomorphic, f2_definiteness) {
        (_, Definiteness::Indefinite) => None,
        (true, Definiteness::Positive) | (false, Definiteness::Negative) => Some(Definiteness::Positive),
        (true, Definiteness::Negative) | (false, Definiteness::Positive) => Some(Definiteness::Negative),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn diag(a: i64, b: i64) -> BinaryForm {
        BinaryForm::diag(int(a), int(b)).unwrap()
    }

    fn gram(a: i64, b: i64, c: i64) -> BinaryForm {
        BinaryForm::new(int(a), int(b), int(c)).unwrap()
    }

    fn fp(p: u64) -> Place {
        Place::prime(p).unwrap()
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        assert_eq!(BinaryForm::new(int(1), int(1), int(1)), Err(Error::Degenerate));
        assert_eq!(BinaryForm::diag(int(0), int(3)), Err(Error::Degenerate));
    }

    #[test]
    fn diagonalization_examples() {
        assert_eq!(diag(3, 5).diagonalize(), (int(3), int(5)));
        assert_eq!(gram(0, 1, 0).diagonalize(), (int(2), rat(-1, 2)));
        assert_eq!(gram(1, 1, 2).diagonalize(), (int(1), int(1)));
        assert_eq!(gram(0, 1, 4).diagonalize(), (int(4), rat(-1, 4)));
    }

    #[test]
    fn hyperbolic_split_represents_the_same_values() {
        // <2, -1/2> against [[0,1],[1,0]] on the basis (1,1), (1,-1)/2.
        let f = gram(0, 1, 0);
        let b = [[int(1), rat(1, 2)], [int(1), rat(-1, 2)]];
        let t = f.transform(&b).unwrap();
        assert_eq!(t.gram(), [[int(2), int(0)], [int(0), rat(-1, 2)]]);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(diag(-1, -1).epsilon(&Place::Real), -1);
        for place in [Place::Real, fp(2), fp(3), fp(5), fp(7)] {
            assert_eq!(diag(1, -1).epsilon(&place), 1);
        }
        assert_eq!(diag(3, 3).epsilon(&fp(2)), -1);
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(diag(2, 3).discriminant_class(&Place::Real).representative(), &int(1));
        assert!(diag(2, 3).discriminant_class(&fp(5)).is_trivial());
        assert_eq!(gram(0, 1, 0).discriminant_class(&fp(3)), SquareClass::of(&int(-1), &fp(3)).unwrap());
    }

    #[test]
    fn signatures() {
        assert_eq!(diag(1, 2).real_signature(), SignaturePair { s_plus: 2, s_minus: 0 });
        assert_eq!(diag(-1, -3).real_signature(), SignaturePair { s_plus: 0, s_minus: 2 });
        assert_eq!(diag(1, -2).real_signature(), SignaturePair { s_plus: 1, s_minus: 1 });
        assert_eq!(gram(0, 1, -3).real_signature(), SignaturePair { s_plus: 1, s_minus: 1 });
        assert_eq!(gram(-2, 1, -3).definiteness(), Definiteness::Negative);
    }

    #[test]
    fn local_isomorphy_examples() {
        assert!(locally_isomorphic(&diag(1, 1), &diag(2, 2), &fp(7)));
        assert!(!locally_isomorphic(&diag(1, 1), &diag(1, -1), &fp(3)));
        assert!(!locally_isomorphic(&diag(1, 1), &diag(1, 5), &fp(5)));
        assert!(!locally_isomorphic(&diag(1, 1), &diag(-1, -1), &Place::Real));
    }

    #[test]
    fn product_formula_examples() {
        assert!(diag(2, -3).product_formula_check());
        assert!(diag(1, 1).product_formula_check());
        assert!(diag(-7, -11).product_formula_check());
        let support = diag(-7, -11).product_formula_support();
        assert_eq!(support, [Place::Real, fp(2), fp(7), fp(11)]);
        // ε = -1 at the real place, 7 and 11 for <-7,-11>... and +1 at 2.
        let eps: Vec<i8> = support.iter().map(|v| diag(-7, -11).epsilon(v)).collect();
        assert_eq!(eps.iter().filter(|&&e| e == -1).count() % 2, 0);
    }

    #[test]
    fn definiteness_inference() {
        use Definiteness::*;
        assert_eq!(infer_definiteness(true, true, Positive), Some(Positive));
        assert_eq!(infer_definiteness(true, false, Negative), Some(Positive));
        assert_eq!(infer_definiteness(true, true, Negative), Some(Negative));
        assert_eq!(infer_definiteness(true, false, Positive), Some(Negative));
        assert_eq!(infer_definiteness(true, true, Indefinite), None);
        for iso in [true, false] {
            for d in [Positive, Negative, Indefinite] {
                assert_eq!(infer_definiteness(false, iso, d), Some(Indefinite));
            }
        }
    }
}
