//! Brute-force verifiers, deliberately slow and structurally independent of
//! the closed-form integration engine: the dyadic partition sum measures
//! preimage intervals one bin at a time, and the inverse-measure check walks
//! a uniform grid.

use num_traits::{Signed, Zero};

use crate::interval::Interval;
use crate::inverse::{gen_inverse, InverseVersion};
use crate::measure::ls_measure;
use crate::monotone::MonotoneFn;
use crate::rational::{rat_int, Rat};

/// The dyadic simple-function scheme at refinement `level` n: y-axis bins
/// `[(k-1)/2^n, k/2^n)` for `k = 1..n*2^n`, each tagged by its lower edge.
/// Values of `f` at or above `n` fall outside every bin and are truncated;
/// callers compare against instances with `f_max < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionScheme {
    pub level: u32,
}

impl PartitionScheme {
    pub fn bin_count(&self) -> u64 {
        assert!(
            self.level <= 32,
            "refinement level {} is out of range",
            self.level
        );
        u64::from(self.level) << self.level
    }

    /// Iterator of `(tag, lo, hi)` triples in ascending order.
    pub fn bins(&self) -> impl Iterator<Item = (Rat, Rat, Rat)> {
        let denom = rat_int(1i64 << self.level);
        (0..self.bin_count()).map(move |k| {
            let lo = rat_int(k as i64) / &denom;
            let hi = rat_int(k as i64 + 1) / &denom;
            (lo.clone(), lo, hi)
        })
    }
}

/// The partition sum `Σ_k y_{n,k} mu_g(f^{-1}(J_{n,k}) ∩ I)` at refinement
/// `level`.
///
/// Requires `f >= 0` on `I`; for `f_max < level` the sum increases with the
/// level and approaches the integral from below, the gap at level `n` being
/// at most `2^{-n} mu_g(I)`.
pub fn partition_sum(f: &MonotoneFn, g: &MonotoneFn, i: &Interval, level: u32) -> Rat {
    if i.is_empty() {
        return Rat::zero();
    }
    assert!(
        !f.inf_over(i).expect("nonempty interval").is_negative(),
        "partition_sum requires a non-negative integrand on the interval"
    );
    let mut total = Rat::zero();
    for (tag, lo, hi) in (PartitionScheme { level }).bins() {
        if &lo > f.upper_value() {
            break;
        }
        let bin = Interval::closed_open(lo, hi).expect("positive bin width");
        let pre = f.preimage(&bin).intersect(i);
        if pre.is_empty() {
            continue;
        }
        let mass = ls_measure(g, &pre);
        if !mass.is_zero() {
            total += tag * mass;
        }
    }
    total
}

/// Result of a grid check of `Leb{ y : g^{-1}(y) ∈ I } = mu_g(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseMeasureCheck {
    /// Midpoint-grid estimate of the left-hand side.
    pub estimate: Rat,
    /// `mu_g(I)` from the interval image.
    pub target: Rat,
}

/// Estimates `Leb{ y : g^{-1}(y) ∈ I }` by sampling the inverse at `grid`
/// uniformly spaced midpoints of `[g(-inf), g(+inf)]`. The discrepancy from
/// the target is bounded by [`inverse_measure_bound`].
pub fn inverse_measure_check(
    g: &MonotoneFn,
    i: &Interval,
    v: InverseVersion,
    grid: u32,
) -> InverseMeasureCheck {
    let target = ls_measure(g, i);
    let width = g.upper_value() - g.lower_value();
    if width.is_zero() || grid == 0 {
        return InverseMeasureCheck {
            estimate: Rat::zero(),
            target,
        };
    }
    let step = &width / rat_int(i64::from(grid));
    let two = rat_int(2);
    let mut hits: i64 = 0;
    for k in 0..grid {
        let y = g.lower_value() + &step * rat_int(i64::from(k)) + &step / &two;
        let x = gen_inverse(g, &y, v).expect("grid midpoints are interior to the range");
        if let crate::ext_real::ExtReal::Finite(x) = x {
            if i.contains(&x) {
                hits += 1;
            }
        }
    }
    InverseMeasureCheck {
        estimate: step * rat_int(hits),
        target,
    }
}

/// The guaranteed discrepancy bound for [`inverse_measure_check`]:
/// `(1 + #jumps + #flats) * width / grid`.
pub fn inverse_measure_bound(g: &MonotoneFn, grid: u32) -> Rat {
    if grid == 0 {
        return Rat::zero();
    }
    let width = g.upper_value() - g.lower_value();
    let features = g.jumps().len() + g.slopes().iter().filter(|s| s.is_zero()).count();
    width * rat_int(1 + features as i64) / rat_int(i64::from(grid))
}
