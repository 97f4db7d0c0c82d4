//! The extended real line: rationals together with `-inf` and `+inf`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{format_rat, parse_rat, Rat};

/// A rational number or one of the two infinities, totally ordered with
/// `-inf < q < +inf` for every rational `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtReal {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// Unwraps the finite value; panics on infinities. Used where finiteness
    /// is an established invariant.
    pub fn expect_finite(self, what: &str) -> Rat {
        match self {
            ExtReal::Finite(r) => r,
            other => panic!("{what}: expected finite value, got {other}"),
        }
    }
}

impl From<Rat> for ExtReal {
    fn from(r: Rat) -> Self {
        ExtReal::Finite(r)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::Finite(r) => write!(f, "{}", format_rat(r)),
            ExtReal::PosInf => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(ExtReal::NegInf),
            "inf" | "+inf" => Ok(ExtReal::PosInf),
            other => Ok(ExtReal::Finite(parse_rat(other)?)),
        }
    }
}
