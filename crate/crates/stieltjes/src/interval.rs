//! Intervals of the real line with open/closed/unbounded endpoint kinds.
//!
//! The empty set is a first-class interval here; it is the identity for
//! intersection and has measure zero under every monotone function.

use std::fmt;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::rational::{parse_rat, Rat};

/// A possibly unbounded, possibly empty interval.
///
/// Invariants maintained by the constructors:
/// * a proper interval has `left <= right`,
/// * `left == right` only as a finite singleton with both endpoints closed,
/// * infinite endpoints are always open (a closed flag on an infinite
///   endpoint is silently dropped, since `[-inf, b]` and `(-inf, b]` denote
///   the same subset of the reals).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Interval {
    Empty,
    Proper {
        left: ExtReal,
        right: ExtReal,
        left_closed: bool,
        right_closed: bool,
    },
}

impl Interval {
    /// General constructor. Degenerate proper forms that denote the empty
    /// set (e.g. `[a, a)`) normalize to `Empty`; `left > right` is rejected.
    pub fn new(
        left: ExtReal,
        left_closed: bool,
        right: ExtReal,
        right_closed: bool,
    ) -> Result<Interval> {
        if left > right {
            return Err(Error::InvalidInterval(format!(
                "left endpoint {left} exceeds right endpoint {right}"
            )));
        }
        let left_closed = left_closed && left.is_finite();
        let right_closed = right_closed && right.is_finite();
        if left == right && (!left.is_finite() || !(left_closed && right_closed)) {
            return Ok(Interval::Empty);
        }
        Ok(Interval::Proper {
            left,
            right,
            left_closed,
            right_closed,
        })
    }

    pub fn empty() -> Interval {
        Interval::Empty
    }

    /// `[a, b]`
    pub fn closed(a: Rat, b: Rat) -> Result<Interval> {
        Interval::new(a.into(), true, b.into(), true)
    }

    /// `(a, b)`
    pub fn open(a: Rat, b: Rat) -> Result<Interval> {
        Interval::new(a.into(), false, b.into(), false)
    }

    /// `[a, b)`
    pub fn closed_open(a: Rat, b: Rat) -> Result<Interval> {
        Interval::new(a.into(), true, b.into(), false)
    }

    /// `(a, b]`
    pub fn open_closed(a: Rat, b: Rat) -> Result<Interval> {
        Interval::new(a.into(), false, b.into(), true)
    }

    /// `{a}`
    pub fn singleton(a: Rat) -> Interval {
        Interval::Proper {
            left: a.clone().into(),
            right: a.into(),
            left_closed: true,
            right_closed: true,
        }
    }

    /// `(-inf, inf)`
    pub fn all() -> Interval {
        Interval::Proper {
            left: ExtReal::NegInf,
            right: ExtReal::PosInf,
            left_closed: false,
            right_closed: false,
        }
    }

    /// `(-inf, b]`
    pub fn at_most(b: Rat) -> Interval {
        Interval::Proper {
            left: ExtReal::NegInf,
            right: b.into(),
            left_closed: false,
            right_closed: true,
        }
    }

    /// `[a, inf)`
    pub fn at_least(a: Rat) -> Interval {
        Interval::Proper {
            left: a.into(),
            right: ExtReal::PosInf,
            left_closed: true,
            right_closed: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn is_singleton(&self) -> bool {
        match self {
            Interval::Proper { left, right, .. } => left == right,
            Interval::Empty => false,
        }
    }

    /// Endpoint data of a proper interval: `(left, left_closed, right, right_closed)`.
    pub fn bounds(&self) -> Option<(&ExtReal, bool, &ExtReal, bool)> {
        match self {
            Interval::Empty => None,
            Interval::Proper {
                left,
                right,
                left_closed,
                right_closed,
            } => Some((left, *left_closed, right, *right_closed)),
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let Some((l, lc, r, rc)) = self.bounds() else {
            return false;
        };
        let above = match l {
            ExtReal::NegInf => true,
            ExtReal::Finite(a) => {
                if lc {
                    x >= a
                } else {
                    x > a
                }
            }
            ExtReal::PosInf => false,
        };
        let below = match r {
            ExtReal::PosInf => true,
            ExtReal::Finite(b) => {
                if rc {
                    x <= b
                } else {
                    x < b
                }
            }
            ExtReal::NegInf => false,
        };
        above && below
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let Some((l, lc, r, rc)) = self.bounds() else {
            return true;
        };
        let Some((ol, olc, or, orc)) = other.bounds() else {
            return false;
        };
        let left_ok = match ol.cmp(l) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => olc || !lc,
            std::cmp::Ordering::Greater => false,
        };
        let right_ok = match or.cmp(r) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => orc || !rc,
            std::cmp::Ordering::Less => false,
        };
        left_ok && right_ok
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (Some((al, alc, ar, arc)), Some((bl, blc, br, brc))) = (self.bounds(), other.bounds())
        else {
            return Interval::Empty;
        };
        let (left, left_closed) = match al.cmp(bl) {
            std::cmp::Ordering::Greater => (al.clone(), alc),
            std::cmp::Ordering::Less => (bl.clone(), blc),
            std::cmp::Ordering::Equal => (al.clone(), alc && blc),
        };
        let (right, right_closed) = match ar.cmp(br) {
            std::cmp::Ordering::Less => (ar.clone(), arc),
            std::cmp::Ordering::Greater => (br.clone(), brc),
            std::cmp::Ordering::Equal => (ar.clone(), arc && brc),
        };
        if left > right {
            return Interval::Empty;
        }
        Interval::new(left, left_closed, right, right_closed).unwrap_or(Interval::Empty)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => write!(f, "empty"),
            Interval::Proper {
                left,
                right,
                left_closed,
                right_closed,
            } => {
                if left == right {
                    return write!(f, "{{{left}}}");
                }
                let lb = if *left_closed { '[' } else { '(' };
                let rb = if *right_closed { ']' } else { ')' };
                write!(f, "{lb}{left},{right}{rb}")
            }
        }
    }
}

impl std::str::FromStr for Interval {
    type Err = Error;

    /// Parses the literal grammar `[a,b]`, `(a,b]`, `[a,b)`, `(a,b)`, `{a}`,
    /// `empty`, with endpoints rational or `-inf`/`inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" {
            return Ok(Interval::Empty);
        }
        if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            return Ok(Interval::singleton(parse_rat(inner)?));
        }
        let mut chars = s.chars();
        let first = chars
            .next()
            .ok_or_else(|| Error::Parse("empty interval literal".into()))?;
        let last = s
            .chars()
            .last()
            .ok_or_else(|| Error::Parse("empty interval literal".into()))?;
        let left_closed = match first {
            '[' => true,
            '(' => false,
            _ => {
                return Err(Error::Parse(format!(
                    "interval literal {s:?}: bad opening bracket"
                )))
            }
        };
        let right_closed = match last {
            ']' => true,
            ')' => false,
            _ => {
                return Err(Error::Parse(format!(
                    "interval literal {s:?}: bad closing bracket"
                )))
            }
        };
        let inner = &s[1..s.len() - 1];
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("interval literal {s:?}: missing comma")))?;
        let left: ExtReal = a.parse()?;
        let right: ExtReal = b.parse()?;
        if left_closed && !left.is_finite() || right_closed && !right.is_finite() {
            return Err(Error::Parse(format!(
                "interval literal {s:?}: infinite endpoints must be open"
            )));
        }
        Interval::new(left, left_closed, right, right_closed)
            .map_err(|e| Error::Parse(format!("interval literal {s:?}: {e}")))
    }
}
