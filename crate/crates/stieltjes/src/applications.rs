//! Probability and summation corollaries: exact CDFs of finitely-supported
//! mixed distributions, the expected-CDF identity, median bounds, the
//! measure-form Young sandwich, and the floor-function summation identity.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::interval::Interval;
use crate::inverse::{gen_inverse, InverseVersion};
use crate::monotone::{Jump, MonotoneFn, Side};
use crate::rational::{floor_int, format_rat, is_integer, parse_rat, Rat};
use crate::young::BoundReport;

/// One piece of a piecewise-constant density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityPiece {
    pub from: Rat,
    pub to: Rat,
    pub density: Rat,
}

/// A probability distribution with finitely many atoms and a
/// piecewise-constant density, total mass exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistSpec {
    atoms: Vec<(Rat, Rat)>,
    pieces: Vec<DensityPiece>,
}

impl DistSpec {
    pub fn new(mut atoms: Vec<(Rat, Rat)>, mut pieces: Vec<DensityPiece>) -> Result<DistSpec> {
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        pieces.sort_by(|a, b| a.from.cmp(&b.from));
        if !atoms.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(Error::InvalidArgument("duplicate atom locations".into()));
        }
        if let Some((x, p)) = atoms.iter().find(|(_, p)| !p.is_positive()) {
            return Err(Error::InvalidArgument(format!(
                "atom at {} has non-positive probability {}",
                format_rat(x),
                format_rat(p)
            )));
        }
        for piece in &pieces {
            if piece.from >= piece.to {
                return Err(Error::InvalidArgument(format!(
                    "density piece [{}, {}] must have positive length",
                    format_rat(&piece.from),
                    format_rat(&piece.to)
                )));
            }
            if piece.density.is_negative() {
                return Err(Error::InvalidArgument("negative density".into()));
            }
        }
        if !pieces.windows(2).all(|w| w[0].to <= w[1].from) {
            return Err(Error::InvalidArgument("overlapping density pieces".into()));
        }
        let mut mass = Rat::zero();
        for (_, p) in &atoms {
            mass += p;
        }
        for piece in &pieces {
            mass += &piece.density * (&piece.to - &piece.from);
        }
        if !mass.is_one() {
            return Err(Error::InvalidArgument(format!(
                "total mass must be 1, got {}",
                format_rat(&mass)
            )));
        }
        Ok(DistSpec { atoms, pieces })
    }

    pub fn atoms(&self) -> &[(Rat, Rat)] {
        &self.atoms
    }

    pub fn pieces(&self) -> &[DensityPiece] {
        &self.pieces
    }
}

/// The right-continuous CDF `F(x) = P(X <= x)` as a canonical function with
/// range `[0, 1]`.
pub fn cdf(d: &DistSpec) -> MonotoneFn {
    let mut bps: Vec<Rat> = d.atoms.iter().map(|(x, _)| x.clone()).collect();
    for piece in &d.pieces {
        bps.push(piece.from.clone());
        bps.push(piece.to.clone());
    }
    bps.sort();
    bps.dedup();
    let two = Rat::from_integer(2.into());
    let mut slopes = Vec::with_capacity(bps.len().saturating_sub(1));
    for w in bps.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        let density = d
            .pieces
            .iter()
            .find(|p| p.from < mid && mid < p.to)
            .map(|p| p.density.clone())
            .unwrap_or_else(Rat::zero);
        slopes.push(density);
    }
    let mut jumps = Vec::new();
    let mut prev_right = Rat::zero();
    for (i, b) in bps.iter().enumerate() {
        let left = if i == 0 {
            Rat::zero()
        } else {
            &prev_right + &slopes[i - 1] * (b - &bps[i - 1])
        };
        prev_right = match d.atoms.iter().find(|(x, _)| x == b) {
            Some((_, p)) => {
                let after = &left + p;
                jumps.push(
                    Jump::new(b.clone(), left, after.clone(), after.clone())
                        .expect("positive atom mass"),
                );
                after
            }
            None => left,
        };
    }
    MonotoneFn::new(bps, Rat::zero(), slopes, jumps).expect("a CDF is monotone")
}

/// `E F(X)` by the direct integral `∫ F dF` over the whole line.
pub fn expected_cdf_by_integral(d: &DistSpec) -> Rat {
    let f = cdf(d);
    crate::integral::ls_integral(&f, &f, &Interval::all())
}

/// `E F(X)` by the closed form `1/2 + (1/2) Σ_d P(X = d)^2`.
pub fn expected_cdf_closed_form(d: &DistSpec) -> Rat {
    let two = Rat::from_integer(2.into());
    let mut sum = Rat::zero();
    for (_, p) in &d.atoms {
        sum += p * p;
    }
    (Rat::one() + sum) / two
}

/// `E F(X)`, computed by both routes, which must agree exactly.
pub fn expected_cdf(d: &DistSpec) -> Rat {
    let by_integral = expected_cdf_by_integral(d);
    let closed = expected_cdf_closed_form(d);
    assert_eq!(
        by_integral, closed,
        "expected-CDF identity violated: integral route != closed form"
    );
    by_integral
}

/// All admissible values of `F^{-1}(1/2)`: a closed interval (often a
/// point).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianSet {
    pub lo: Rat,
    pub hi: Rat,
}

pub fn median_set(d: &DistSpec) -> MedianSet {
    let f = cdf(d);
    let half = crate::rational::rat(1, 2);
    let lo = gen_inverse(&f, &half, InverseVersion::Smallest)
        .expect("1/2 is interior to [0,1]")
        .expect_finite("smallest inverse at 1/2");
    let hi = gen_inverse(&f, &half, InverseVersion::Largest)
        .expect("1/2 is interior to [0,1]")
        .expect_finite("largest inverse at 1/2");
    MedianSet { lo, hi }
}

/// The median-expectation comparison `m <= F̄^{-1}(E F(X))` for every
/// median `m`, where `F̄^{-1}` is the largest inverse version.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianBound {
    /// The largest median of the distribution.
    pub median_hi: Rat,
    /// `F̄^{-1}(E F(X))`; infinite exactly when `E F(X) = 1` (a single
    /// point mass), where the comparison is trivially true.
    pub bound: ExtReal,
    pub holds: bool,
}

pub fn median_bound_check(d: &DistSpec) -> MedianBound {
    let f = cdf(d);
    let e = expected_cdf(d);
    let bound =
        gen_inverse(&f, &e, InverseVersion::Largest).expect("E F(X) lies in [1/2, 1] ⊆ range of F");
    let median_hi = median_set(d).hi;
    let holds = ExtReal::Finite(median_hi.clone()) <= bound;
    MedianBound {
        median_hi,
        bound,
        holds,
    }
}

/// The measure-form Young sandwich for `T(f, F; (-inf,t], (-inf,s])` with
/// `s <= t`, `F` the CDF of `d`:
///
/// lower: `f(s+) F(t) + Σ_{atoms x <= s} (f(x)-f(x-)) P(X=x)`
/// upper: `f(t+)(F(t)-F(s)) + f(s+) F(s) + Σ_{atoms x <= t} (f(x)-f(x-)) P(X=x)`
pub fn measure_young(d: &DistSpec, f: &MonotoneFn, s: &Rat, t: &Rat) -> Result<BoundReport> {
    if s > t {
        return Err(Error::InvalidArgument(format!(
            "need s <= t, got s={}, t={}",
            format_rat(s),
            format_rat(t)
        )));
    }
    let g = cdf(d);
    let i = Interval::at_most(t.clone());
    let j = Interval::at_most(s.clone());
    let value = crate::young::t_functional(f, &g, &i, &j)?;
    let atom_sum = |upto: &Rat| -> Rat {
        let mut sum = Rat::zero();
        for (x, p) in d.atoms() {
            if x <= upto {
                sum += (f.value(x) - f.left_limit(x)) * p;
            }
        }
        sum
    };
    let (gs, gt) = (g.value(s), g.value(t));
    let (fs, ft) = (f.right_limit(s), f.right_limit(t));
    let lower = &fs * &gt + atom_sum(s);
    let upper = &ft * (&gt - &gs) + &fs * &gs + atom_sum(t);
    Ok(BoundReport {
        lower_tight: lower == value,
        upper_tight: upper == value,
        context: format!(
            "T(f,F;(-inf,t],(-inf,s]) with s={}, t={}",
            format_rat(s),
            format_rat(t)
        ),
        value,
        lower,
        upper,
    })
}

/// One-sided limit of the composed floor `[f](x±) = lim ⌊f⌋`; note this is
/// not always `⌊f(x±)⌋`: approaching an integer height strictly from below
/// loses one.
pub fn floor_limit(f: &MonotoneFn, x: &Rat, side: Side) -> BigInt {
    match side {
        Side::At => floor_int(&f.value(x)),
        // the floor function is right-continuous, so the limit passes through
        Side::Right => floor_int(&f.right_limit(x)),
        Side::Left => {
            let l = f.left_limit(x);
            let fl = floor_int(&l);
            if is_integer(&l) && !f.is_left_flat(x) {
                fl - 1
            } else {
                fl
            }
        }
    }
}

/// Both sides of the floor summation identity, plus the count `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorSumIdentity {
    /// `Σ_{j=m}^{n} ⌊f(j)⌋ + Σ_{k=[f](m-)+1}^{[f](n+)} ⌊f^{-1}(k)⌋`.
    pub lhs: BigInt,
    /// `n [f](n+) - (m-1) [f](m-) + K(m,n)`.
    pub rhs: BigInt,
    /// `K(m,n)`: integers `k` in `([f](m-), [f](n+)]` whose smallest
    /// generalized inverse `f^{-1}(k)` is itself an integer.
    pub integer_hits: BigInt,
}

/// Evaluates the summation identity for a right-continuous non-decreasing
/// `f` and integers `m <= n`; `lhs == rhs` holds identically.
pub fn summation_identity(f: &MonotoneFn, m: i64, n: i64) -> Result<FloorSumIdentity> {
    if m > n {
        return Err(Error::InvalidArgument(format!(
            "need m <= n, got m={m}, n={n}"
        )));
    }
    if let Some(j) = f
        .jumps()
        .iter()
        .find(|j| j.point_value() != j.right_value())
    {
        return Err(Error::InvalidArgument(format!(
            "f must be right continuous, but the jump at {} is not",
            format_rat(j.location())
        )));
    }
    let fm_left = floor_limit(f, &crate::rational::rat_int(m), Side::Left);
    let fn_right = floor_limit(f, &crate::rational::rat_int(n), Side::Right);

    let mut lhs = BigInt::zero();
    for j in m..=n {
        lhs += floor_int(&f.value(&crate::rational::rat_int(j)));
    }
    let mut hits = BigInt::zero();
    let mut k: BigInt = &fm_left + 1;
    while k <= fn_right {
        let y = Rat::from_integer(k.clone());
        let x = gen_inverse(f, &y, InverseVersion::Smallest)
            .expect("k lies within the range of f")
            .expect_finite("inverse of an in-range integer height");
        lhs += floor_int(&x);
        if is_integer(&x) {
            hits += 1;
        }
        k += 1;
    }
    let rhs = BigInt::from(n) * &fn_right - BigInt::from(m - 1) * &fm_left + &hits;
    Ok(FloorSumIdentity {
        lhs,
        rhs,
        integer_hits: hits,
    })
}

/// The original strictly-increasing special case with `m = 1`:
/// `Σ_{j=1}^n ⌊f(j)⌋ + Σ_{k=1}^{⌊f(n)⌋} ⌊f^{-1}(k)⌋ = n ⌊f(n)⌋ + K(1,n)`.
///
/// Requires `f` continuous, strictly increasing on `[0, n]`, `f(0) >= 0`,
/// and `0 < f(1) <= 1`. The right-hand side is assembled from `⌊f(n)⌋`
/// directly, independently of the general identity's `[f](n+)` route.
pub fn gupta_sum(f: &MonotoneFn, n: i64) -> Result<(BigInt, BigInt)> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("need n >= 1, got {n}")));
    }
    let zero = Rat::zero();
    let nn = crate::rational::rat_int(n);
    for j in f.jumps() {
        if *j.location() >= zero && j.location() <= &nn {
            return Err(Error::InvalidArgument(format!(
                "f must be continuous on [0, n], but jumps at {}",
                format_rat(j.location())
            )));
        }
    }
    let (first, last) = f.span();
    if *first > zero || *last < nn {
        return Err(Error::InvalidArgument(
            "f is constant beyond its breakpoint span inside [0, n]".into(),
        ));
    }
    let bps = f.breakpoints();
    for (k, slope) in f.slopes().iter().enumerate() {
        if slope.is_zero() && bps[k + 1] > zero && bps[k] < nn {
            return Err(Error::InvalidArgument(format!(
                "f is flat on [{}, {}], strict increase on [0, n] is required",
                format_rat(&bps[k]),
                format_rat(&bps[k + 1])
            )));
        }
    }
    if f.value(&zero).is_negative() {
        return Err(Error::InvalidArgument("need f(0) >= 0".into()));
    }
    let f1 = f.value(&Rat::one());
    if !(f1.is_positive() && f1 <= Rat::one()) {
        return Err(Error::InvalidArgument(format!(
            "need 0 < f(1) <= 1, got f(1) = {}",
            format_rat(&f1)
        )));
    }
    let identity = summation_identity(f, 1, n)?;
    let rhs = BigInt::from(n) * floor_int(&f.value(&nn)) + &identity.integer_hits;
    Ok((identity.lhs, rhs))
}

#[derive(Serialize, Deserialize)]
struct PieceRepr {
    from: String,
    to: String,
    density: String,
}

#[derive(Serialize, Deserialize)]
struct DistRepr {
    atoms: Vec<(String, String)>,
    pieces: Vec<PieceRepr>,
}

impl Serialize for DistSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DistRepr {
            atoms: self
                .atoms
                .iter()
                .map(|(x, p)| (format_rat(x), format_rat(p)))
                .collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| PieceRepr {
                    from: format_rat(&p.from),
                    to: format_rat(&p.to),
                    density: format_rat(&p.density),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DistSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DistRepr::deserialize(deserializer)?;
        let parse = |s: &String| parse_rat(s).map_err(D::Error::custom);
        let atoms = repr
            .atoms
            .iter()
            .map(|(x, p)| Ok((parse(x)?, parse(p)?)))
            .collect::<std::result::Result<_, _>>()?;
        let pieces = repr
            .pieces
            .iter()
            .map(|p| {
                Ok(DensityPiece {
                    from: parse(&p.from)?,
                    to: parse(&p.to)?,
                    density: parse(&p.density)?,
                })
            })
            .collect::<std::result::Result<_, _>>()?;
        DistSpec::new(atoms, pieces).map_err(D::Error::custom)
    }
}
