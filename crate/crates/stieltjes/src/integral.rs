//! Exact Lebesgue-Stieltjes integrals, change of variables, and integration
//! by parts with jump corrections.
//!
//! `∫_I f dg` splits into the absolutely continuous part (the slope-weighted
//! Lebesgue integral of `f` over each segment of `g` meeting `I`) and the
//! atomic part (the point value of `f` at each jump of `g` inside `I` times
//! the jump mass). Both are closed-form rational expressions for the
//! canonical function class, so every identity in this module is tested for
//! literal equality.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::interval::Interval;
use crate::inverse::{inverse_fn, InverseVersion};
use crate::measure::{atoms_in, interval_image};
use crate::monotone::{MonotoneFn, Side};
use crate::rational::Rat;

/// `∫_lo^hi f(x) dx` for finite bounds, by exact trapezoids on the
/// refinement of `[lo, hi]` by the breakpoints of `f`. Jump point values are
/// Lebesgue-null and do not contribute.
pub fn lebesgue_integral(f: &MonotoneFn, lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    let mut cuts = vec![lo.clone()];
    for b in f.breakpoints() {
        if b > lo && b < hi {
            cuts.push(b.clone());
        }
    }
    cuts.push(hi.clone());
    let two = Rat::from_integer(2.into());
    let mut total = Rat::zero();
    for w in cuts.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        // on (u, v) the function is linear from f(u+) to f(v-)
        total += (v - u) * (f.right_limit(u) + f.left_limit(v)) / &two;
    }
    total
}

/// `∫_I f dg` exactly.
pub fn ls_integral(f: &MonotoneFn, g: &MonotoneFn, i: &Interval) -> Rat {
    if i.is_empty() {
        return Rat::zero();
    }
    let mut total = Rat::zero();
    for (d, mass) in atoms_in(g, i) {
        total += f.value(&d) * mass;
    }
    // clip each positively-sloped segment of g to the closure of i;
    // endpoint kinds are immaterial for the absolutely continuous part
    let (il, _, ir, _) = i.bounds().expect("nonempty");
    let bps = g.breakpoints();
    for (k, slope) in g.slopes().iter().enumerate() {
        if slope.is_zero() {
            continue;
        }
        let mut lo = bps[k].clone();
        let mut hi = bps[k + 1].clone();
        if let ExtReal::Finite(a) = il {
            if *a > lo {
                lo = a.clone();
            }
        }
        if let ExtReal::Finite(b) = ir {
            if *b < hi {
                hi = b.clone();
            }
        }
        if lo < hi {
            total += slope * lebesgue_integral(f, &lo, &hi);
        }
    }
    total
}

/// Both sides of the change-of-variables identity
/// `∫_I f dg = ∫_{I_g} f(g^{-1}(y)) dy`, which must agree exactly for every
/// inverse version.
pub fn change_of_variables(
    f: &MonotoneFn,
    g: &MonotoneFn,
    i: &Interval,
    v: InverseVersion,
) -> (Rat, Rat) {
    let lhs = ls_integral(f, g, i);
    let img = interval_image(g, i);
    let rhs = if img.left == img.right {
        Rat::zero()
    } else {
        let composed = f.compose(&inverse_fn(g, v));
        let id = MonotoneFn::identity_on(img.left.clone(), img.right.clone())
            .expect("nondegenerate image");
        ls_integral(
            &composed,
            &id,
            &Interval::closed(img.left, img.right).expect("ordered image"),
        )
    };
    (lhs, rhs)
}

/// The jump correction
/// `A(d) = f(d)(g(d+)-g(d-)) + g(d)(f(d+)-f(d-)) - f(d+)g(d+) + f(d-)g(d-)`.
/// Zero unless both functions jump at `d`.
pub fn a_term(f: &MonotoneFn, g: &MonotoneFn, d: &Rat) -> Rat {
    let (fl, fp, fr) = (
        f.evaluate(d, Side::Left),
        f.evaluate(d, Side::At),
        f.evaluate(d, Side::Right),
    );
    let (gl, gp, gr) = (
        g.evaluate(d, Side::Left),
        g.evaluate(d, Side::At),
        g.evaluate(d, Side::Right),
    );
    fp * (&gr - &gl) + gp * (&fr - &fl) - &fr * &gr + &fl * &gl
}

/// `Σ A(d)` over the common discontinuities of `f` and `g` inside `i`,
/// together with those locations in ascending order.
pub fn jump_correction(f: &MonotoneFn, g: &MonotoneFn, i: &Interval) -> (Rat, Vec<Rat>) {
    let g_locs: std::collections::BTreeSet<&Rat> = g.jumps().iter().map(|j| j.location()).collect();
    let mut sum = Rat::zero();
    let mut locations = Vec::new();
    for j in f.jumps() {
        let d = j.location();
        if g_locs.contains(d) && i.contains(d) {
            sum += a_term(f, g, d);
            locations.push(d.clone());
        }
    }
    (sum, locations)
}

/// An integration-by-parts evaluation: the two integrals on the left, the
/// boundary term, the jump corrections, and where they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartsReport {
    /// `∫_I f dg + ∫_I g df`.
    pub lhs: Rat,
    /// The endpoint-product term matching the interval kind.
    pub boundary: Rat,
    /// `Σ_{d ∈ D(I)} A(d)`.
    pub jump_sum: Rat,
    /// `D(I)`: the common discontinuities inside `I`, ascending.
    pub common_discontinuities: Vec<Rat>,
}

impl PartsReport {
    /// `lhs - boundary - jump_sum`; identically zero by the parts identity.
    pub fn residual(&self) -> Rat {
        &self.lhs - &self.boundary - &self.jump_sum
    }
}

/// Integration by parts over a proper interval:
/// `∫_I f dg + ∫_I g df = mu_fg(I) + Σ_{d ∈ D(I)} A(d)`.
///
/// The boundary term pairs one-sided limits of the product `fg` with the
/// endpoint kinds exactly as the image-interval table does: for `[a, b]` it
/// is `f(b+)g(b+) - f(a-)g(a-)`, open endpoints switch to the inner limits.
pub fn parts(f: &MonotoneFn, g: &MonotoneFn, i: &Interval) -> Result<PartsReport> {
    let Some((il, lc, ir, rc)) = i.bounds() else {
        return Err(Error::InvalidArgument(
            "integration by parts over the empty interval".into(),
        ));
    };
    let lhs = ls_integral(f, g, i) + ls_integral(g, f, i);
    let left_product = match il {
        ExtReal::NegInf => f.lower_value() * g.lower_value(),
        ExtReal::Finite(a) => {
            let side = if lc { Side::Left } else { Side::Right };
            f.evaluate(a, side) * g.evaluate(a, side)
        }
        ExtReal::PosInf => unreachable!("proper interval with left endpoint +inf"),
    };
    let right_product = match ir {
        ExtReal::PosInf => f.upper_value() * g.upper_value(),
        ExtReal::Finite(b) => {
            let side = if rc { Side::Right } else { Side::Left };
            f.evaluate(b, side) * g.evaluate(b, side)
        }
        ExtReal::NegInf => unreachable!("proper interval with right endpoint -inf"),
    };
    let boundary = right_product - left_product;
    let (jump_sum, common_discontinuities) = jump_correction(f, g, i);
    Ok(PartsReport {
        lhs,
        boundary,
        jump_sum,
        common_discontinuities,
    })
}
