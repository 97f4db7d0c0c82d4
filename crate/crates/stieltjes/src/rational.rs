//! Exact rational scalars and their canonical text form.
//!
//! Every coordinate in this crate is a [`Rat`]. The text form is `"p/q"` in
//! lowest terms, or just `"p"` when the denominator is one; it is the only
//! number encoding used by the JSON interfaces, so round-trips are bit-exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optionally signed) into a reduced [`Rat`].
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in rational {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in rational {s:?}")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        Ok(Rat::from_integer(n))
    }
}

/// Canonical text form: `"p/q"` in lowest terms, `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Whether `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign-aware absolute value, used by error-bound computations.
pub fn abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}
