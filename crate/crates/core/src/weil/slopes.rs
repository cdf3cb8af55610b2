use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::WeilPolynomial;
use crate::arith::{val_p, Rational};

/// Normalised `p`-adic valuations of the roots, sorted, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonSlopes(pub Vec<Rational>);

impl NewtonSlopes {
    pub fn is_ordinary(&self) -> bool {
        let n = self.0.len();
        self.0.iter().take(n / 2).all(|s| s.is_zero())
    }

    pub fn is_supersingular(&self) -> bool {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        self.0.iter().all(|s| *s == half)
    }

    pub fn p_rank(&self) -> usize {
        self.0.iter().filter(|s| s.is_zero()).count()
    }
}

impl fmt::Display for NewtonSlopes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Lower convex hull of `(i, v_p(a_i))`, with `a_i` the coefficient of
/// `x^(2g-i)`, slopes divided by `e`.
pub fn newton_slopes(p: &WeilPolynomial) -> NewtonSlopes {
    let n = p.degree();
    let pts: Vec<(i64, i64)> = (0..=n)
        .filter_map(|i| {
            let a = &p.coeffs()[n - i];
            (!a.is_zero()).then(|| (i as i64, val_p(&Rational::from_integer(a.clone()), p.p()).unwrap()))
        })
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // Drop the middle point unless it lies strictly below the chord.
            if (y2 - y1) * (pt.0 - x1) >= (pt.1 - y1) * (x2 - x1) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let e = BigInt::from(p.e());
    let mut slopes = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        let s = Rational::new(BigInt::from(dy), BigInt::from(dx) * &e);
        slopes.extend(core::iter::repeat_n(s, dx as usize));
    }
    NewtonSlopes(slopes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn slopes(c: &[i64], q: u64) -> Vec<Rational> {
        newton_slopes(&WeilPolynomial::from_i64(c, q).unwrap()).0
    }

    #[test]
    fn elliptic_examples() {
        assert_eq!(slopes(&[2, -1, 1], 2), [int(0), int(1)]);
        assert_eq!(slopes(&[3, 0, 1], 3), [rat(1, 2), rat(1, 2)]);
        assert_eq!(slopes(&[9, 3, 1], 9), [rat(1, 2), rat(1, 2)]);
        assert_eq!(slopes(&[9, 1, 1], 9), [int(0), int(1)]);
    }

    #[test]
    fn quarter_slopes() {
        assert_eq!(slopes(&[4, 0, 0, 0, 1], 2), [rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]);
        // x^8 + 2x^4 + 16 over q = 2: hull (0,0), (4,1), (8,4)
        let s = slopes(&[16, 0, 0, 0, 2, 0, 0, 0, 1], 2);
        assert_eq!(s[..4].to_vec(), alloc::vec![rat(1, 4); 4]);
        assert_eq!(s[4..].to_vec(), alloc::vec![rat(3, 4); 4]);
    }

    #[test]
    fn classification() {
        let ord = newton_slopes(&WeilPolynomial::from_i64(&[2, -1, 1], 2).unwrap());
        assert!(ord.is_ordinary() && !ord.is_supersingular());
        assert_eq!(ord.p_rank(), 1);
        let ss = newton_slopes(&WeilPolynomial::from_i64(&[3, 0, 1], 3).unwrap());
        assert!(ss.is_supersingular() && !ss.is_ordinary());
    }
}
