//! Quadratic extensions of `Q_p` and the norm classes of periods.
//!
//! An extension `Q_p(√d)` is classified by the square class of `d`. Norm
//! membership is decided by the Hilbert symbol: `x` is a norm from
//! `Q_p(√d)` iff `(x, d)_p = 1`.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::arith::{hilbert, int, least_nonresidue, Place, Prime, Rational, SquareClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    Split,
    Unramified,
    /// `d` has odd valuation. At `p = 2` this covers `d ~ ±2, ±10`.
    TameRamified,
    WildQ2SqrtMinus1,
    WildQ2Sqrt3,
}

impl ExtensionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionKind::Split => "split",
            ExtensionKind::Unramified => "unramified",
            ExtensionKind::TameRamified => "tame_ramified",
            ExtensionKind::WildQ2SqrtMinus1 => "wild_Q2_sqrt_minus1",
            ExtensionKind::WildQ2Sqrt3 => "wild_Q2_sqrt3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "split" => ExtensionKind::Split,
            "unramified" => ExtensionKind::Unramified,
            "tame_ramified" => ExtensionKind::TameRamified,
            "wild_Q2_sqrt_minus1" => ExtensionKind::WildQ2SqrtMinus1,
            "wild_Q2_sqrt3" => ExtensionKind::WildQ2Sqrt3,
            _ => return None,
        })
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Q_p(√d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalQuadExtension {
    p: Prime,
    d: Rational,
    kind: ExtensionKind,
}

impl LocalQuadExtension {
    pub fn p(&self) -> &Prime {
        &self.p
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    pub fn is_split(&self) -> bool {
        self.kind == ExtensionKind::Split
    }

    /// A canonical extension of the given kind at `p`.
    pub fn of_kind(kind: ExtensionKind, p: &Prime) -> Result<Self> {
        let d = match (kind, p.is_two()) {
            (ExtensionKind::Split, _) => int(1),
            (ExtensionKind::Unramified, true) => int(5),
            (ExtensionKind::Unramified, false) => Rational::from_integer(least_nonresidue(p)),
            (ExtensionKind::TameRamified, true) => int(2),
            (ExtensionKind::TameRamified, false) => Rational::from_integer(p.value().clone()),
            (ExtensionKind::WildQ2SqrtMinus1, true) => int(-1),
            (ExtensionKind::WildQ2Sqrt3, true) => int(3),
            (_, false) => {
                return Err(Error::OutOfRange(alloc::format!("{kind} only exists over Q_2")));
            }
        };
        classify_extension(&d, p)
    }

    /// The class of `λ·σ(λ)` for a unit Hodge gap, with `(base, d)_p = -1`.
    pub fn norm_class_base(&self) -> Result<Rational> {
        let p = self.p.value();
        Ok(match self.kind {
            ExtensionKind::Split => return Err(Error::SplitExtension),
            ExtensionKind::Unramified => Rational::new(BigInt::from(1), p.clone()),
            ExtensionKind::TameRamified if self.p.is_two() => int(5),
            ExtensionKind::TameRamified => Rational::from_integer(least_nonresidue(&self.p)),
            ExtensionKind::WildQ2SqrtMinus1 | ExtensionKind::WildQ2Sqrt3 => int(-9),
        })
    }
}

impl fmt::Display for LocalQuadExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}(sqrt({})) [{}]", self.p, self.d, self.kind)
    }
}

pub fn classify_extension(d: &Rational, p: &Prime) -> Result<LocalQuadExtension> {
    let place = Place::Finite(p.clone());
    let rep = SquareClass::of(d, &place)?.representative().to_integer();
    let kind = if rep == BigInt::from(1) {
        ExtensionKind::Split
    } else if p.is_two() {
        match i64::try_from(&rep).unwrap_or(0) {
            5 => ExtensionKind::Unramified,
            -1 => ExtensionKind::WildQ2SqrtMinus1,
            // 3 ~ -5 at 2
            -5 => ExtensionKind::WildQ2Sqrt3,
            _ => ExtensionKind::TameRamified,
        }
    } else if !(&rep % p.value()).is_zero() {
        ExtensionKind::Unramified
    } else {
        ExtensionKind::TameRamified
    };
    Ok(LocalQuadExtension { p: p.clone(), d: d.clone(), kind })
}

pub fn is_norm(x: &Rational, ext: &LocalQuadExtension) -> Result<bool> {
    if ext.is_split() {
        return Err(Error::SplitExtension);
    }
    Ok(hilbert(x, &ext.d, &Place::Finite(ext.p.clone()))? == 1)
}

/// `base^i` for the norm class of a period with Hodge gap `i`.
pub fn period_norm_class(i: u32, ext: &LocalQuadExtension) -> Result<Rational> {
    if i == 0 {
        return Err(Error::OutOfRange("the Hodge gap must be positive".into()));
    }
    Ok(Pow::pow(ext.norm_class_base()?, i))
}

/// Whether the Betti and algebraic forms are isometric over `Q_p`.
pub fn decide_p_isomorphic(i: u32, ext: Option<&LocalQuadExtension>) -> Result<bool> {
    if i == 0 {
        return Ok(true);
    }
    let ext = ext.ok_or(Error::MissingExtension)?;
    is_norm(&period_norm_class(i, ext)?, ext)
}
