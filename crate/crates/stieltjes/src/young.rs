//! The Young functional `T(f,g;I,J) = ∫_I f dg + ∫_J g df` for nested
//! intervals `J ⊆ I`, with exact lower and upper bounds, the classical
//! single-function bounds, and equality flags.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::inverse::{inverse_fn, InverseVersion};
use crate::measure::interval_image;
use crate::monotone::MonotoneFn;
use crate::rational::{format_rat, Rat};

/// A functional value bracketed by its proven bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub value: Rat,
    pub lower: Rat,
    pub upper: Rat,
    pub lower_tight: bool,
    pub upper_tight: bool,
    /// Human-readable description of the evaluated instance.
    pub context: String,
}

impl BoundReport {
    fn new(value: Rat, lower: Rat, upper: Rat, context: String) -> BoundReport {
        let lower_tight = lower == value;
        let upper_tight = upper == value;
        BoundReport {
            value,
            lower,
            upper,
            lower_tight,
            upper_tight,
            context,
        }
    }

    /// `lower <= value <= upper`.
    pub fn sandwich_holds(&self) -> bool {
        self.lower <= self.value && self.value <= self.upper
    }
}

fn require_nested(i: &Interval, j: &Interval) -> Result<()> {
    if !j.is_subset_of(i) {
        return Err(Error::InvalidArgument(format!(
            "the inner interval {j} must be contained in the outer interval {i}"
        )));
    }
    Ok(())
}

/// `T(f,g;I,J) = ∫_I f dg + ∫_J g df`, requiring `J ⊆ I`.
pub fn t_functional(f: &MonotoneFn, g: &MonotoneFn, i: &Interval, j: &Interval) -> Result<Rat> {
    require_nested(i, j)?;
    Ok(crate::integral::ls_integral(f, g, i) + crate::integral::ls_integral(g, f, j))
}

/// The lower-bound expression
/// `T(f,g;J,J) + f_min(I)(l_g(J) - l_g(I)) + f̄(J)(r_g(I) - r_g(J))`.
///
/// When an image difference vanishes its factor is dropped, which also
/// covers the case of an unbounded `J` where `f̄(J)` is `+inf` against a
/// zero difference.
fn lower_bound_value(f: &MonotoneFn, g: &MonotoneFn, i: &Interval, j: &Interval) -> Result<Rat> {
    let base = t_functional(f, g, j, j)?;
    let img_i = interval_image(g, i);
    let img_j = interval_image(g, j);
    let mut bound = base;
    let left_diff = &img_j.left - &img_i.left;
    if !left_diff.is_zero() {
        bound += f.inf_over(i)? * left_diff;
    }
    let right_diff = &img_i.right - &img_j.right;
    if !right_diff.is_zero() {
        bound += f
            .inf_above(j)
            .expect_finite("inf above a right-bounded interval")
            * right_diff;
    }
    Ok(bound)
}

/// The upper-bound expression
/// `T(f,g;I,I) - g_min(I)(l_f(J) - l_f(I)) - ḡ(J)(r_f(I) - r_f(J))`.
fn upper_bound_value(f: &MonotoneFn, g: &MonotoneFn, i: &Interval, j: &Interval) -> Result<Rat> {
    let base = t_functional(f, g, i, i)?;
    let img_i = interval_image(f, i);
    let img_j = interval_image(f, j);
    let mut bound = base;
    let left_diff = &img_j.left - &img_i.left;
    if !left_diff.is_zero() {
        bound -= g.inf_over(i)? * left_diff;
    }
    let right_diff = &img_i.right - &img_j.right;
    if !right_diff.is_zero() {
        bound -= g
            .inf_above(j)
            .expect_finite("inf above a right-bounded interval")
            * right_diff;
    }
    Ok(bound)
}

fn t_report(f: &MonotoneFn, g: &MonotoneFn, i: &Interval, j: &Interval) -> Result<BoundReport> {
    if j.is_empty() {
        return Err(Error::InvalidArgument(
            "the inner interval of a Young bound must be nonempty".into(),
        ));
    }
    require_nested(i, j)?;
    let value = t_functional(f, g, i, j)?;
    let lower = lower_bound_value(f, g, i, j)?;
    let upper = upper_bound_value(f, g, i, j)?;
    Ok(BoundReport::new(
        value,
        lower,
        upper,
        format!("T(f,g;I,J) with I={i}, J={j}"),
    ))
}

/// `T(f,g;I,J)` with its interval-form lower bound (equality if `I = J`).
/// The report also carries the matching upper bound.
pub fn t_lower_bound(
    f: &MonotoneFn,
    g: &MonotoneFn,
    i: &Interval,
    j: &Interval,
) -> Result<BoundReport> {
    t_report(f, g, i, j)
}

/// `T(f,g;I,J)` with its interval-form upper bound (equality if `I = J`).
/// Derivable from [`t_lower_bound`] on swapped arguments through
/// `T(f,g;I,J) + T(g,f;I,J) = T(f,g;I,I) + T(f,g;J,J)`; both routes agree
/// exactly and the property tests check this.
pub fn t_upper_bound(
    f: &MonotoneFn,
    g: &MonotoneFn,
    i: &Interval,
    j: &Interval,
) -> Result<BoundReport> {
    t_report(f, g, i, j)
}

/// `T(f,g;[a,t],[a,s])` for `a <= s <= t`, bracketed by the closed-interval
/// bounds written directly in endpoint-limit form:
///
/// lower: `f(s+)g(t+) - f(a-)g(a-) + Σ_{d ∈ D([a,s])} A(d)`
/// upper: `f(t+)g(t+) + f(s+)g(s+) - f(a-)g(a-) - f(t+)g(s+) + Σ_{d ∈ D([a,t])} A(d)`
///
/// This is an independent arithmetic route from the interval-form bounds;
/// the two must agree exactly.
pub fn closed_interval_bounds(
    f: &MonotoneFn,
    g: &MonotoneFn,
    a: &Rat,
    s: &Rat,
    t: &Rat,
) -> Result<BoundReport> {
    if !(a <= s && s <= t) {
        return Err(Error::InvalidArgument(format!(
            "need a <= s <= t, got a={}, s={}, t={}",
            format_rat(a),
            format_rat(s),
            format_rat(t)
        )));
    }
    let i = Interval::closed(a.clone(), t.clone()).expect("a <= t");
    let j = Interval::closed(a.clone(), s.clone()).expect("a <= s");
    let value = t_functional(f, g, &i, &j)?;

    let fa = f.left_limit(a);
    let ga = g.left_limit(a);
    let fs = f.right_limit(s);
    let gs = g.right_limit(s);
    let ft = f.right_limit(t);
    let gt = g.right_limit(t);
    let (jump_j, _) = crate::integral::jump_correction(f, g, &j);
    let (jump_i, _) = crate::integral::jump_correction(f, g, &i);
    let lower = &fs * &gt - &fa * &ga + jump_j;
    let upper = &ft * &gt + &fs * &gs - &fa * &ga - &ft * &gs + jump_i;
    Ok(BoundReport::new(
        value,
        lower,
        upper,
        format!(
            "T(f,g;[a,t],[a,s]) with a={}, s={}, t={}",
            format_rat(a),
            format_rat(s),
            format_rat(t)
        ),
    ))
}

fn require_continuous_on(f: &MonotoneFn, lo: &Rat, hi: &Rat, name: &str) -> Result<()> {
    for j in f.jumps() {
        if j.location() >= lo && j.location() <= hi {
            return Err(Error::InvalidArgument(format!(
                "{name} has a jump at {} inside [{}, {}] where continuity is required",
                format_rat(j.location()),
                format_rat(lo),
                format_rat(hi)
            )));
        }
    }
    Ok(())
}

/// `S(f,g;a,s,t) = ∫_a^t f dg + ∫_a^s g df` for continuous `f`, `g` on
/// `[a, t]` and `a <= s <= t`, with the sandwich
/// `g(t)f(s) - g(a)f(a) <= S <= g(t)f(t) + g(s)f(s) - g(a)f(a) - g(s)f(t)`
/// (both sides tight iff `s = t`).
pub fn s_functional_bounds(
    f: &MonotoneFn,
    g: &MonotoneFn,
    a: &Rat,
    s: &Rat,
    t: &Rat,
) -> Result<BoundReport> {
    if !(a <= s && s <= t) {
        return Err(Error::InvalidArgument(format!(
            "need a <= s <= t, got a={}, s={}, t={}",
            format_rat(a),
            format_rat(s),
            format_rat(t)
        )));
    }
    require_continuous_on(f, a, t, "f")?;
    require_continuous_on(g, a, t, "g")?;
    let i = Interval::closed(a.clone(), t.clone()).expect("a <= t");
    let j = Interval::closed(a.clone(), s.clone()).expect("a <= s");
    let value = t_functional(f, g, &i, &j)?;
    let (fa, fs, ft) = (f.value(a), f.value(s), f.value(t));
    let (ga, gs, gt) = (g.value(a), g.value(s), g.value(t));
    let lower = &gt * &fs - &ga * &fa;
    let upper = &gt * &ft + &gs * &fs - &ga * &fa - &gs * &ft;
    Ok(BoundReport::new(
        value,
        lower,
        upper,
        format!(
            "S(f,g;a,s,t) with a={}, s={}, t={}",
            format_rat(a),
            format_rat(s),
            format_rat(t)
        ),
    ))
}

/// The classical Young functional for a single continuous strictly
/// increasing function, with every recorded bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalBounds {
    /// `Y(f;a,s,t) = ∫_a^t f(x) dx + ∫_{f(a)}^{f(s)} f^{-1}(y) dy`.
    pub value: Rat,
    /// `t f(s) - a f(a)`.
    pub lower: Rat,
    /// `t f(t) + s f(s) - a f(a) - s f(t)`.
    pub minguzzi: Rat,
    /// `f(a)(t-a) + a(f(s)-f(a)) + max((t-a)(f(t)-f(a)), (s-a)(f(s)-f(a)))`.
    pub merkle: Rat,
    pub lower_tight: bool,
    pub minguzzi_tight: bool,
}

/// Evaluates `Y(f;a,s,t)` exactly together with its lower bound and the two
/// historical upper bounds. Requires `s > a`, `t > a`, and `f` continuous
/// and strictly increasing across `[a, max(s,t)]`.
pub fn classical_bounds(f: &MonotoneFn, a: &Rat, s: &Rat, t: &Rat) -> Result<ClassicalBounds> {
    if !(s > a && t > a) {
        return Err(Error::InvalidArgument(format!(
            "need s > a and t > a, got a={}, s={}, t={}",
            format_rat(a),
            format_rat(s),
            format_rat(t)
        )));
    }
    let m = s.max(t);
    require_continuous_on(f, a, m, "f")?;
    // strict increase: no linear piece of zero slope may meet (a, m)
    let (first, last) = f.span();
    if a < first || m > last {
        return Err(Error::InvalidArgument(
            "f is constant beyond its breakpoint span inside the requested range".into(),
        ));
    }
    let bps = f.breakpoints();
    for (k, slope) in f.slopes().iter().enumerate() {
        if slope.is_zero() && &bps[k + 1] > a && &bps[k] < m {
            return Err(Error::InvalidArgument(format!(
                "f is flat on [{}, {}], strict increase is required",
                format_rat(&bps[k]),
                format_rat(&bps[k + 1])
            )));
        }
    }

    let (fa, fs, ft) = (f.value(a), f.value(s), f.value(t));
    let id_x = MonotoneFn::identity_on(a.clone(), t.clone()).expect("t > a");
    let direct = crate::integral::ls_integral(
        f,
        &id_x,
        &Interval::closed(a.clone(), t.clone()).expect("a <= t"),
    );
    let inverse_part = if fa == fs {
        Rat::zero()
    } else {
        let inv = inverse_fn(f, InverseVersion::Smallest);
        let id_y = MonotoneFn::identity_on(fa.clone(), fs.clone()).expect("f(s) > f(a)");
        crate::integral::ls_integral(
            &inv,
            &id_y,
            &Interval::closed(fa.clone(), fs.clone()).expect("ordered"),
        )
    };
    let value = direct + inverse_part;
    let lower = t * &fs - a * &fa;
    let minguzzi = t * &ft + s * &fs - a * &fa - s * &ft;
    let merkle = {
        let first = (t - a) * (&ft - &fa);
        let second = (s - a) * (&fs - &fa);
        &fa * (t - a) + a * (&fs - &fa) + first.max(second)
    };
    Ok(ClassicalBounds {
        lower_tight: lower == value,
        minguzzi_tight: minguzzi == value,
        value,
        lower,
        minguzzi,
        merkle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    fn idn(n: i64) -> MonotoneFn {
        MonotoneFn::identity_on(rat_int(0), rat_int(n)).unwrap()
    }

    fn sgn_at(c: i64) -> MonotoneFn {
        MonotoneFn::step(rat_int(c), rat_int(-1), rat_int(0), rat_int(1)).unwrap()
    }

    #[test]
    fn t_functional_examples() {
        let id = idn(1);
        assert_eq!(
            t_functional(&id, &id, &iv("[0,1]"), &iv("[0,1]")).unwrap(),
            rat_int(1)
        );
        let f = idn(3);
        assert_eq!(
            t_functional(&f, &sgn_at(1), &iv("[0,3]"), &iv("[0,2]")).unwrap(),
            rat_int(2)
        );
        assert!(t_functional(&f, &sgn_at(1), &iv("[0,1]"), &iv("[0,2]")).is_err());
    }

    #[test]
    fn equal_intervals_are_tight() {
        let f = idn(3);
        let g = sgn_at(1);
        let r = t_lower_bound(&f, &g, &iv("[0,3]"), &iv("[0,3]")).unwrap();
        assert!(r.lower_tight && r.upper_tight);
        assert_eq!(r.lower, r.value);
        assert_eq!(r.upper, r.value);
    }

    #[test]
    fn sgn_remark_a_c_s_t_is_tight_on_both_sides() {
        // a=0 < c=1 < s=2 < t=3
        let f = idn(3);
        let g = sgn_at(1);
        let r = t_lower_bound(&f, &g, &iv("[0,3]"), &iv("[0,2]")).unwrap();
        assert_eq!(r.value, rat_int(2)); // f(s) + f(a)
        assert!(r.lower_tight && r.upper_tight);
    }

    #[test]
    fn sgn_remark_a_s_c_t_bounds() {
        // a=0 < s=1 < c=2 < t=3
        let f = idn(3);
        let g = sgn_at(2);
        let r = t_lower_bound(&f, &g, &iv("[0,3]"), &iv("[0,1]")).unwrap();
        assert_eq!(r.value, rat_int(3)); // 2 f(c) + f(a) - f(s)
        assert_eq!(r.lower, rat_int(1)); // f(s) + f(a)
        assert!(!r.lower_tight);
        let r = t_upper_bound(&f, &g, &iv("[0,3]"), &iv("[0,1]")).unwrap();
        assert_eq!(r.upper, rat_int(5)); // 2 f(t) + f(a) - f(s)
        assert!(!r.upper_tight);
    }

    #[test]
    fn closed_interval_example() {
        let id = idn(1);
        let r = closed_interval_bounds(&id, &id, &rat_int(0), &rat(1, 2), &rat_int(1)).unwrap();
        assert_eq!(r.value, rat(5, 8));
        assert_eq!(r.lower, rat(1, 2));
        assert_eq!(r.upper, rat(3, 4));
        assert!(r.sandwich_holds());

        // s = t collapses both bounds onto the parts identity
        let r = closed_interval_bounds(&id, &id, &rat_int(0), &rat_int(1), &rat_int(1)).unwrap();
        assert!(r.lower_tight && r.upper_tight);

        assert!(closed_interval_bounds(&id, &id, &rat_int(1), &rat_int(0), &rat_int(2)).is_err());
    }

    #[test]
    fn closed_interval_with_common_right_continuous_jumps() {
        let h = MonotoneFn::step(rat_int(0), rat_int(0), rat_int(1), rat_int(1)).unwrap();
        let r = closed_interval_bounds(&h, &h, &rat_int(-1), &rat_int(0), &rat_int(1)).unwrap();
        // A(0) = 1 contributes to both sides
        assert_eq!(r.value, rat_int(2));
        assert_eq!(r.lower, rat_int(2));
        assert_eq!(r.upper, rat_int(2));
    }

    #[test]
    fn s_functional_examples() {
        let id = idn(2);
        let r = s_functional_bounds(&id, &id, &rat_int(0), &rat_int(1), &rat_int(2)).unwrap();
        assert_eq!(r.value, rat(5, 2));
        assert_eq!(r.lower, rat_int(2));
        assert_eq!(r.upper, rat_int(3));
        assert!(!r.lower_tight && !r.upper_tight);

        let r = s_functional_bounds(&id, &id, &rat_int(0), &rat_int(2), &rat_int(2)).unwrap();
        assert!(r.lower_tight && r.upper_tight);

        // continuity is a hypothesis
        let h = MonotoneFn::step(rat_int(1), rat_int(0), rat_int(1), rat_int(1)).unwrap();
        assert!(s_functional_bounds(&h, &id, &rat_int(0), &rat_int(1), &rat_int(2)).is_err());
    }

    #[test]
    fn classical_identity_example() {
        let id = idn(2);
        let r = classical_bounds(&id, &rat_int(0), &rat_int(1), &rat_int(2)).unwrap();
        assert_eq!(r.value, rat(5, 2));
        assert_eq!(r.lower, rat_int(2));
        assert_eq!(r.minguzzi, rat_int(3));
        assert_eq!(r.merkle, rat_int(4));
        assert!(!r.lower_tight && !r.minguzzi_tight);

        let r = classical_bounds(&id, &rat_int(0), &rat_int(2), &rat_int(2)).unwrap();
        assert!(r.lower_tight && r.minguzzi_tight);
    }

    #[test]
    fn t_functional_on_square_surrogates_converges() {
        // interpolants of the squaring function approach 10/3 from above,
        // and the nested-interval route agrees with the classical one
        let id = idn(2);
        let mut prev: Option<Rat> = None;
        for level in 3u32..=6 {
            let pts: Vec<(Rat, Rat)> = (0..=(1i64 << (level + 1)))
                .map(|j| {
                    let x = rat(j, 1i64 << level);
                    let y = &x * &x;
                    (x, y)
                })
                .collect();
            let f = MonotoneFn::piecewise_linear(&pts).unwrap();
            let t = t_functional(&f, &id, &iv("[0,2]"), &iv("[0,1]")).unwrap();
            let classical = classical_bounds(&f, &rat_int(0), &rat_int(1), &rat_int(2)).unwrap();
            assert_eq!(t, classical.value);
            let gap = &t - rat(10, 3);
            assert!(gap > rat_int(0));
            if let Some(p) = prev {
                assert!(gap < p);
            }
            prev = Some(gap);
        }
    }

    #[test]
    fn classical_rejects_hypothesis_violations() {
        let id = idn(2);
        assert!(classical_bounds(&id, &rat_int(1), &rat_int(1), &rat_int(2)).is_err()); // s = a
        assert!(classical_bounds(&id, &rat_int(0), &rat_int(1), &rat_int(3)).is_err()); // beyond span
        let flat = MonotoneFn::piecewise_linear(&[
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(2), rat_int(1)),
            (rat_int(3), rat_int(2)),
        ])
        .unwrap();
        assert!(classical_bounds(&flat, &rat_int(0), &rat_int(1), &rat_int(3)).is_err());
    }
}
