//! Non-decreasing functions with exact one-sided limits.
//!
//! A [`MonotoneFn`] is a piecewise-linear continuous part plus a finite set
//! of jumps, constant outside the breakpoint span. Every evaluation, limit,
//! extremum, preimage and composition below is exact rational arithmetic.
//!
//! The data model: `breakpoints` carry the kinks, `slopes[i]` is the slope
//! of the open segment between breakpoints `i` and `i+1`, `anchor` is the
//! left limit at the first breakpoint (equal to the constant value below
//! it), and each [`Jump`] pins the left/point/right values at its location.
//! Construction recomputes the value walk and rejects any inconsistency, so
//! a constructed function is globally non-decreasing with finite range.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::interval::Interval;
use crate::rational::{format_rat, parse_rat, Rat};

/// Which one-sided value of a function to read at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    At,
    Right,
}

/// Selector for the interval statistics of a monotone function: the infimum
/// and supremum over an interval, and the infimum strictly to the right of /
/// supremum strictly to the left of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalStat {
    Min,
    Max,
    InfAbove,
    SupBelow,
}

/// A genuine discontinuity: the three values of the function at a point,
/// with `left <= at <= right` and `left < right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Jump {
    location: Rat,
    left_value: Rat,
    point_value: Rat,
    right_value: Rat,
}

impl Jump {
    pub fn new(location: Rat, left_value: Rat, point_value: Rat, right_value: Rat) -> Result<Jump> {
        if !(left_value <= point_value && point_value <= right_value) {
            return Err(Error::InvalidFunction(format!(
                "jump at {} must satisfy left <= point <= right, got ({}, {}, {})",
                format_rat(&location),
                format_rat(&left_value),
                format_rat(&point_value),
                format_rat(&right_value)
            )));
        }
        if left_value == right_value {
            return Err(Error::InvalidFunction(format!(
                "jump at {} has zero mass",
                format_rat(&location)
            )));
        }
        Ok(Jump {
            location,
            left_value,
            point_value,
            right_value,
        })
    }

    pub fn location(&self) -> &Rat {
        &self.location
    }

    pub fn left_value(&self) -> &Rat {
        &self.left_value
    }

    pub fn point_value(&self) -> &Rat {
        &self.point_value
    }

    pub fn right_value(&self) -> &Rat {
        &self.right_value
    }

    /// `f(d+) - f(d-)`, always positive.
    pub fn mass(&self) -> Rat {
        &self.right_value - &self.left_value
    }
}

/// Location of the upper set `{x : f(x) >= c}` (or with strict `>`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Threshold {
    /// No point qualifies.
    None,
    /// Every point qualifies.
    All,
    /// The set is `[x, inf)` when `included`, else `(x, inf)`.
    Cut { x: Rat, included: bool },
}

/// A non-decreasing function on the whole real line, constant outside the
/// span of its breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneFn {
    breakpoints: Vec<Rat>,
    anchor: Rat,
    slopes: Vec<Rat>,
    jumps: Vec<Jump>,
    // cached per-breakpoint values of (f(b-), f(b), f(b+))
    left_vals: Vec<Rat>,
    point_vals: Vec<Rat>,
    right_vals: Vec<Rat>,
}

impl MonotoneFn {
    /// Validating constructor.
    ///
    /// `anchor` is the left limit at the first breakpoint; when the first
    /// breakpoint carries no jump this is simply the function value there.
    /// Jump records must list their location among the breakpoints and
    /// their `left_value` must match the value walked in from the left.
    pub fn new(
        breakpoints: Vec<Rat>,
        anchor: Rat,
        slopes: Vec<Rat>,
        jumps: Vec<Jump>,
    ) -> Result<MonotoneFn> {
        if breakpoints.is_empty() {
            return Err(Error::InvalidFunction(
                "at least one breakpoint required".into(),
            ));
        }
        if !breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidFunction(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if slopes.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidFunction(format!(
                "{} breakpoints require {} slopes, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                slopes.len()
            )));
        }
        if let Some(s) = slopes.iter().find(|s| s.is_negative()) {
            return Err(Error::InvalidFunction(format!(
                "negative segment slope {}",
                format_rat(s)
            )));
        }
        if !jumps.windows(2).all(|w| w[0].location < w[1].location) {
            return Err(Error::InvalidFunction(
                "jump locations must be strictly increasing".into(),
            ));
        }

        let n = breakpoints.len();
        let mut left_vals = Vec::with_capacity(n);
        let mut point_vals = Vec::with_capacity(n);
        let mut right_vals = Vec::with_capacity(n);
        let mut jump_iter = jumps.iter().peekable();
        let mut incoming = anchor.clone();
        for (i, b) in breakpoints.iter().enumerate() {
            if i > 0 {
                incoming = &right_vals[i - 1] + &slopes[i - 1] * (b - &breakpoints[i - 1]);
            }
            left_vals.push(incoming.clone());
            match jump_iter.peek() {
                Some(j) if j.location == *b => {
                    if j.left_value != incoming {
                        return Err(Error::InvalidFunction(format!(
                            "jump at {} declares left value {} but the segments arrive at {}",
                            format_rat(b),
                            format_rat(&j.left_value),
                            format_rat(&incoming)
                        )));
                    }
                    point_vals.push(j.point_value.clone());
                    right_vals.push(j.right_value.clone());
                    jump_iter.next();
                }
                _ => {
                    point_vals.push(incoming.clone());
                    right_vals.push(incoming.clone());
                }
            }
        }
        if let Some(j) = jump_iter.next() {
            return Err(Error::InvalidFunction(format!(
                "jump location {} is not a breakpoint",
                format_rat(&j.location)
            )));
        }
        Ok(MonotoneFn {
            breakpoints,
            anchor,
            slopes,
            jumps,
            left_vals,
            point_vals,
            right_vals,
        })
    }

    /// The constant function `c`.
    pub fn constant(c: Rat) -> MonotoneFn {
        MonotoneFn::new(vec![Rat::zero()], c, vec![], vec![]).unwrap()
    }

    /// Continuous piecewise-linear interpolation through `points`
    /// (strictly increasing x, non-decreasing y).
    pub fn piecewise_linear(points: &[(Rat, Rat)]) -> Result<MonotoneFn> {
        if points.is_empty() {
            return Err(Error::InvalidFunction("no interpolation points".into()));
        }
        let mut slopes = Vec::with_capacity(points.len() - 1);
        for w in points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if x0 >= x1 {
                return Err(Error::InvalidFunction(
                    "interpolation points must have strictly increasing x".into(),
                ));
            }
            if y0 > y1 {
                return Err(Error::InvalidFunction(
                    "interpolation points must have non-decreasing y".into(),
                ));
            }
            slopes.push((y1 - y0) / (x1 - x0));
        }
        MonotoneFn::new(
            points.iter().map(|(x, _)| x.clone()).collect(),
            points[0].1.clone(),
            slopes,
            vec![],
        )
    }

    /// The identity on `[a, b]` (constant outside), `a < b`.
    pub fn identity_on(a: Rat, b: Rat) -> Result<MonotoneFn> {
        MonotoneFn::piecewise_linear(&[(a.clone(), a), (b.clone(), b)])
    }

    /// A single step at `at` taking values `(left, point, right)`.
    pub fn step(at: Rat, left: Rat, point: Rat, right: Rat) -> Result<MonotoneFn> {
        let jump = Jump::new(at.clone(), left.clone(), point, right)?;
        MonotoneFn::new(vec![at], left, vec![], vec![jump])
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn slopes(&self) -> &[Rat] {
        &self.slopes
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    pub fn anchor(&self) -> &Rat {
        &self.anchor
    }

    /// First and last breakpoint.
    pub fn span(&self) -> (&Rat, &Rat) {
        (
            self.breakpoints.first().unwrap(),
            self.breakpoints.last().unwrap(),
        )
    }

    /// The limit at `-inf`, i.e. the constant value below the span.
    pub fn lower_value(&self) -> &Rat {
        &self.anchor
    }

    /// The limit at `+inf`, i.e. the constant value above the span.
    pub fn upper_value(&self) -> &Rat {
        self.right_vals.last().unwrap()
    }

    /// Exact one-sided evaluation: `f(x-)`, `f(x)`, or `f(x+)`.
    pub fn evaluate(&self, x: &Rat, side: Side) -> Rat {
        match self.breakpoints.binary_search(x) {
            Ok(i) => match side {
                Side::Left => self.left_vals[i].clone(),
                Side::At => self.point_vals[i].clone(),
                Side::Right => self.right_vals[i].clone(),
            },
            Err(0) => self.anchor.clone(),
            Err(k) if k == self.breakpoints.len() => self.right_vals[k - 1].clone(),
            Err(k) => {
                &self.right_vals[k - 1] + &self.slopes[k - 1] * (x - &self.breakpoints[k - 1])
            }
        }
    }

    pub fn value(&self, x: &Rat) -> Rat {
        self.evaluate(x, Side::At)
    }

    pub fn left_limit(&self, x: &Rat) -> Rat {
        self.evaluate(x, Side::Left)
    }

    pub fn right_limit(&self, x: &Rat) -> Rat {
        self.evaluate(x, Side::Right)
    }

    /// Whether `f` is constant on some interval `(x - eps, x)`.
    pub fn is_left_flat(&self, x: &Rat) -> bool {
        let first = self.breakpoints.first().unwrap();
        let last = self.breakpoints.last().unwrap();
        if x <= first || x > last {
            return true;
        }
        match self.breakpoints.binary_search(x) {
            Ok(i) => self.slopes[i - 1].is_zero(),
            Err(k) => self.slopes[k - 1].is_zero(),
        }
    }

    /// Whether `f` is constant on some interval `(x, x + eps)`.
    pub fn is_right_flat(&self, x: &Rat) -> bool {
        let first = self.breakpoints.first().unwrap();
        let last = self.breakpoints.last().unwrap();
        if x < first || x >= last {
            return true;
        }
        match self.breakpoints.binary_search(x) {
            Ok(i) => self.slopes[i].is_zero(),
            Err(k) => self.slopes[k - 1].is_zero(),
        }
    }

    /// Slope of the linear piece whose interior contains `x` (0 on the
    /// constant tails). At an exact breakpoint the right-hand slope is
    /// reported.
    pub(crate) fn local_slope(&self, x: &Rat) -> Rat {
        let n = self.breakpoints.len();
        match self.breakpoints.binary_search(x) {
            Ok(i) if i < n - 1 => self.slopes[i].clone(),
            Ok(_) => Rat::zero(),
            Err(0) => Rat::zero(),
            Err(k) if k == n => Rat::zero(),
            Err(k) => self.slopes[k - 1].clone(),
        }
    }

    /// Interval statistics. `Min`/`Max` require a nonempty interval; the
    /// neighbour statistics return the appropriate infinity when the region
    /// they quantify over is empty.
    pub fn inf_sup_over(&self, i: &Interval, which: IntervalStat) -> Result<ExtReal> {
        match which {
            IntervalStat::Min => {
                let (l, lc, _, _) = i.bounds().ok_or_else(|| {
                    Error::InvalidArgument("infimum over the empty interval".into())
                })?;
                Ok(match l {
                    ExtReal::NegInf => self.lower_value().clone().into(),
                    ExtReal::Finite(a) => {
                        if lc {
                            self.value(a).into()
                        } else {
                            self.right_limit(a).into()
                        }
                    }
                    ExtReal::PosInf => unreachable!("proper interval with left endpoint +inf"),
                })
            }
            IntervalStat::Max => {
                let (_, _, r, rc) = i.bounds().ok_or_else(|| {
                    Error::InvalidArgument("supremum over the empty interval".into())
                })?;
                Ok(match r {
                    ExtReal::PosInf => self.upper_value().clone().into(),
                    ExtReal::Finite(b) => {
                        if rc {
                            self.value(b).into()
                        } else {
                            self.left_limit(b).into()
                        }
                    }
                    ExtReal::NegInf => unreachable!("proper interval with right endpoint -inf"),
                })
            }
            IntervalStat::InfAbove => Ok(match i.bounds() {
                None => self.lower_value().clone().into(),
                Some((_, _, ExtReal::PosInf, _)) => ExtReal::PosInf,
                Some((_, _, ExtReal::Finite(b), rc)) => {
                    if rc {
                        self.right_limit(b).into()
                    } else {
                        self.value(b).into()
                    }
                }
                Some((_, _, ExtReal::NegInf, _)) => {
                    unreachable!("proper interval with right endpoint -inf")
                }
            }),
            IntervalStat::SupBelow => Ok(match i.bounds() {
                None => self.upper_value().clone().into(),
                Some((ExtReal::NegInf, _, _, _)) => ExtReal::NegInf,
                Some((ExtReal::Finite(a), lc, _, _)) => {
                    if lc {
                        self.left_limit(a).into()
                    } else {
                        self.value(a).into()
                    }
                }
                Some((ExtReal::PosInf, _, _, _)) => {
                    unreachable!("proper interval with left endpoint +inf")
                }
            }),
        }
    }

    /// Infimum of `f` over a nonempty interval (always finite).
    pub fn inf_over(&self, i: &Interval) -> Result<Rat> {
        Ok(self
            .inf_sup_over(i, IntervalStat::Min)?
            .expect_finite("inf_over"))
    }

    /// Supremum of `f` over a nonempty interval (always finite).
    pub fn sup_over(&self, i: &Interval) -> Result<Rat> {
        Ok(self
            .inf_sup_over(i, IntervalStat::Max)?
            .expect_finite("sup_over"))
    }

    /// `inf { f(x) : x > I }`, `+inf` when nothing lies to the right of `I`.
    pub fn inf_above(&self, i: &Interval) -> ExtReal {
        self.inf_sup_over(i, IntervalStat::InfAbove).unwrap()
    }

    /// `sup { f(x) : x < I }`, `-inf` when nothing lies to the left of `I`.
    pub fn sup_below(&self, i: &Interval) -> ExtReal {
        self.inf_sup_over(i, IntervalStat::SupBelow).unwrap()
    }

    /// Locates `{ x : f(x) >= c }` (or with strict inequality).
    pub(crate) fn threshold(&self, c: &Rat, strict: bool) -> Threshold {
        let above = |v: &Rat| if strict { v > c } else { v >= c };
        if above(self.lower_value()) {
            return Threshold::All;
        }
        if !above(self.upper_value()) {
            return Threshold::None;
        }
        let n = self.breakpoints.len();
        for i in 0..n {
            if above(&self.point_vals[i]) {
                return Threshold::Cut {
                    x: self.breakpoints[i].clone(),
                    included: true,
                };
            }
            if i + 1 == n {
                break;
            }
            // open segment (b_i, b_{i+1})
            let start = &self.right_vals[i];
            let slope = &self.slopes[i];
            if above(start) {
                return Threshold::Cut {
                    x: self.breakpoints[i].clone(),
                    included: false,
                };
            }
            if !slope.is_zero() {
                let x_star = &self.breakpoints[i] + (c - start) / slope;
                if x_star < self.breakpoints[i + 1] {
                    // f(x_star) == c exactly, on the segment
                    return Threshold::Cut {
                        x: x_star,
                        included: !strict,
                    };
                }
            }
        }
        // right tail: upper_value qualifies (checked above), the last
        // breakpoint's point value did not
        Threshold::Cut {
            x: self.breakpoints[n - 1].clone(),
            included: false,
        }
    }

    /// Exact preimage `{ x : f(x) ∈ j }`, always an interval by monotonicity.
    /// Point values at jumps are honored.
    pub fn preimage(&self, j: &Interval) -> Interval {
        let Some((l, lc, r, rc)) = j.bounds() else {
            return Interval::Empty;
        };
        // lower boundary: where f enters [l, ...) resp. (l, ...)
        let lower: Option<(Rat, bool)> = match l {
            ExtReal::NegInf => None,
            ExtReal::Finite(a) => match self.threshold(a, !lc) {
                Threshold::None => return Interval::Empty,
                Threshold::All => None,
                Threshold::Cut { x, included } => Some((x, included)),
            },
            ExtReal::PosInf => unreachable!("proper interval with left endpoint +inf"),
        };
        // upper boundary: complement of {f > r} resp. {f >= r}
        let upper: Option<(Rat, bool)> = match r {
            ExtReal::PosInf => None,
            ExtReal::Finite(b) => match self.threshold(b, rc) {
                Threshold::None => None,
                Threshold::All => return Interval::Empty,
                Threshold::Cut { x, included } => Some((x, !included)),
            },
            ExtReal::NegInf => unreachable!("proper interval with right endpoint -inf"),
        };
        let (left, left_closed) = match lower {
            None => (ExtReal::NegInf, false),
            Some((x, inc)) => (ExtReal::Finite(x), inc),
        };
        let (right, right_closed) = match upper {
            None => (ExtReal::PosInf, false),
            Some((x, inc)) => (ExtReal::Finite(x), inc),
        };
        if left > right {
            return Interval::Empty;
        }
        Interval::new(left, left_closed, right, right_closed).unwrap_or(Interval::Empty)
    }

    /// Vertices of the completed graph over the breakpoint span, jumps
    /// appearing as pairs of vertices sharing an x-coordinate.
    pub(crate) fn polyline(&self) -> Vec<(Rat, Rat)> {
        let mut verts = Vec::with_capacity(self.breakpoints.len() * 2);
        for (i, b) in self.breakpoints.iter().enumerate() {
            verts.push((b.clone(), self.left_vals[i].clone()));
            if self.right_vals[i] > self.left_vals[i] {
                verts.push((b.clone(), self.right_vals[i].clone()));
            }
        }
        verts
    }

    /// The composition `self ∘ inner`, again a valid [`MonotoneFn`].
    ///
    /// Point values compose exactly; one-sided limits account for flats of
    /// `inner` (where the outer point value, not the outer limit, is
    /// approached).
    pub fn compose(&self, inner: &MonotoneFn) -> MonotoneFn {
        let f = self;
        let h = inner;
        let mut s: Vec<Rat> = h.breakpoints.clone();
        for i in 0..h.breakpoints.len() - 1 {
            if h.slopes[i].is_zero() {
                continue;
            }
            let yu = &h.right_vals[i];
            let yv = &h.left_vals[i + 1];
            for b in &f.breakpoints {
                if b > yu && b < yv {
                    s.push(&h.breakpoints[i] + (b - yu) / &h.slopes[i]);
                }
            }
        }
        s.sort();
        s.dedup();

        let anchor = f.value(h.lower_value());
        let mut slopes = Vec::with_capacity(s.len() - 1);
        for w in s.windows(2) {
            let mid = (&w[0] + &w[1]) / Rat::from_integer(2.into());
            let sh = h.local_slope(&mid);
            if sh.is_zero() {
                slopes.push(Rat::zero());
            } else {
                let x_mid = h.value(&mid);
                slopes.push(sh * f.local_slope(&x_mid));
            }
        }
        let mut jumps = Vec::new();
        for y in &s {
            let hl = h.left_limit(y);
            let hr = h.right_limit(y);
            let left = if h.is_left_flat(y) {
                f.value(&hl)
            } else {
                f.left_limit(&hl)
            };
            let right = if h.is_right_flat(y) {
                f.value(&hr)
            } else {
                f.right_limit(&hr)
            };
            if left < right {
                let point = f.value(&h.value(y));
                jumps.push(Jump::new(y.clone(), left, point, right).expect("ordered jump values"));
            }
        }
        MonotoneFn::new(s, anchor, slopes, jumps)
            .expect("composition of monotone functions is monotone")
    }
}

impl fmt::Display for MonotoneFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MonotoneFn({} breakpoints on [{}, {}], {} jumps)",
            self.breakpoints.len(),
            format_rat(self.span().0),
            format_rat(self.span().1),
            self.jumps.len()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct JumpRepr {
    x: String,
    left: String,
    at: String,
    right: String,
}

#[derive(Serialize, Deserialize)]
struct MonotoneFnRepr {
    breakpoints: Vec<String>,
    anchor: String,
    slopes: Vec<String>,
    jumps: Vec<JumpRepr>,
}

impl Serialize for MonotoneFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MonotoneFnRepr {
            breakpoints: self.breakpoints.iter().map(format_rat).collect(),
            anchor: format_rat(&self.anchor),
            slopes: self.slopes.iter().map(format_rat).collect(),
            jumps: self
                .jumps
                .iter()
                .map(|j| JumpRepr {
                    x: format_rat(&j.location),
                    left: format_rat(&j.left_value),
                    at: format_rat(&j.point_value),
                    right: format_rat(&j.right_value),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonotoneFn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MonotoneFnRepr::deserialize(deserializer)?;
        let parse = |s: &String| parse_rat(s).map_err(D::Error::custom);
        let breakpoints = repr
            .breakpoints
            .iter()
            .map(parse)
            .collect::<std::result::Result<_, _>>()?;
        let anchor = parse(&repr.anchor)?;
        let slopes = repr
            .slopes
            .iter()
            .map(parse)
            .collect::<std::result::Result<_, _>>()?;
        let jumps = repr
            .jumps
            .iter()
            .map(|j| {
                Jump::new(
                    parse(&j.x)?,
                    parse(&j.left)?,
                    parse(&j.at)?,
                    parse(&j.right)?,
                )
                .map_err(D::Error::custom)
            })
            .collect::<std::result::Result<_, _>>()?;
        MonotoneFn::new(breakpoints, anchor, slopes, jumps).map_err(D::Error::custom)
    }
}
