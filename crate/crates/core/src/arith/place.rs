use core::fmt;

use num_bigint::BigInt;

use super::Prime;
use crate::error::Result;

/// A place of `Q`: the archimedean one or a finite prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(Prime),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(Place::Finite(Prime::from_u64(p)?))
    }

    pub fn finite(p: BigInt) -> Result<Self> {
        Ok(Place::Finite(Prime::new(p)?))
    }

    pub fn as_prime(&self) -> Option<&Prime> {
        match self {
            Place::Real => None,
            Place::Finite(p) => Some(p),
        }
    }
}

impl From<Prime> for Place {
    fn from(p: Prime) -> Self {
        Place::Finite(p)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}
