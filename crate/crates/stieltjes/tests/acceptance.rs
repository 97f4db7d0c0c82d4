//! Acceptance suite: every release-gating identity, bound and convergence
//! requirement, each as one test printing a PASS line (run with
//! `cargo test -p stieltjes --test acceptance -- --nocapture` to see them).
//!
//! All equality assertions are exact rational comparisons; the convergence
//! criteria pin their gap bounds in code.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stieltjes::applications::{
    expected_cdf, expected_cdf_by_integral, expected_cdf_closed_form, gupta_sum,
    median_bound_check, summation_identity,
};
use stieltjes::integral::{change_of_variables, parts};
use stieltjes::inverse::InverseVersion;
use stieltjes::measure::ls_measure;
use stieltjes::oracle::{inverse_measure_bound, inverse_measure_check, partition_sum};
use stieltjes::rational::{rat, rat_int, Rat};
use stieltjes::sample::{self, FnConfig};
use stieltjes::young::{classical_bounds, closed_interval_bounds, t_lower_bound, t_upper_bound};
use stieltjes::{DensityPiece, DistSpec, MonotoneFn};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sorted_points<R: Rng>(rng: &mut R, count: usize) -> Vec<Rat> {
    let mut pts: Vec<Rat> = (0..count)
        .map(|_| rat(rng.random_range(-24..=24), 4))
        .collect();
    pts.sort();
    pts
}

/// Criterion 1: the integration-by-parts identity holds with zero tolerance
/// on 1000 randomized pairs over random interval kinds.
#[test]
fn criterion_1_parts_identity() {
    let mut rng = rng(101);
    let cfg = FnConfig::default();
    for case in 0..1000 {
        let f = sample::monotone_fn(&mut rng, &cfg);
        let g = sample::monotone_fn(&mut rng, &cfg);
        let i = sample::proper_interval(&mut rng, 6);
        let r = parts(&f, &g, &i).unwrap();
        assert_eq!(
            r.residual(),
            rat_int(0),
            "case {case}: parts identity broken on {i}"
        );
    }
    println!("criterion 1 PASS: parts identity exact on 1000 random pairs");
}

/// Criterion 2: change of variables agrees exactly on 500 randomized pairs
/// for all three inverse versions.
#[test]
fn criterion_2_change_of_variables() {
    let mut rng = rng(202);
    let cfg = FnConfig::default();
    for case in 0..500 {
        let f = sample::monotone_fn(&mut rng, &cfg);
        let g = sample::monotone_fn(&mut rng, &cfg);
        let i = sample::any_interval(&mut rng, 6);
        for v in InverseVersion::ALL {
            let (lhs, rhs) = change_of_variables(&f, &g, &i, v);
            assert_eq!(lhs, rhs, "case {case}: version {v:?} differs on {i}");
        }
    }
    println!("criterion 2 PASS: change of variables exact on 500 pairs x 3 versions");
}

/// Criterion 3: the two-sided Young bounds hold exactly on 1000 randomized
/// nested-interval instances (equality when I = J), and the closed-interval
/// forms hold for random a <= s <= t.
#[test]
fn criterion_3_young_sandwiches() {
    let mut rng = rng(303);
    let cfg = FnConfig::default();
    let mut equality_cases = 0;
    for case in 0..1000 {
        let f = sample::monotone_fn(&mut rng, &cfg);
        let g = sample::monotone_fn(&mut rng, &cfg);
        let i = sample::proper_interval(&mut rng, 6);
        let j = sample::subinterval(&mut rng, &i, 6);
        let lo = t_lower_bound(&f, &g, &i, &j).unwrap();
        let up = t_upper_bound(&f, &g, &i, &j).unwrap();
        assert!(lo.lower <= lo.value, "case {case}: lower bound broken");
        assert!(up.value <= up.upper, "case {case}: upper bound broken");
        if i == j {
            assert!(
                lo.lower_tight && up.upper_tight,
                "case {case}: I = J not tight"
            );
            equality_cases += 1;
        }

        let pts = sorted_points(&mut rng, 3);
        let (a, s, t) = (&pts[0], &pts[1], &pts[2]);
        let r = closed_interval_bounds(&f, &g, a, s, t).unwrap();
        assert!(
            r.sandwich_holds(),
            "case {case}: closed-interval bounds broken"
        );
        if s == t {
            assert!(r.lower_tight && r.upper_tight);
        }
    }
    assert!(equality_cases > 50, "equality branch under-exercised");
    println!(
        "criterion 3 PASS: Young sandwiches exact on 1000 instances ({equality_cases} with I = J)"
    );
}

/// Criterion 4: the sign-step family reproduces its closed forms and
/// equality characterizations exactly.
///
/// For g = sgn(x - c) and continuous piecewise-linear f:
/// * a < c < s < t: value = f(s) + f(a), both bounds tight;
/// * a < s < c < t: value = 2f(c) + f(a) - f(s), lower = f(s) + f(a),
///   upper = 2f(t) + f(a) - f(s); the lower bound is tight iff f(c) = f(s),
///   and f(s) = f(t) forces the upper bound tight. The exact criterion for
///   upper tightness is f(c) = f(t) (f(s) = f(t) is sufficient, not
///   necessary: f may rise on [s, c] and stay flat on [c, t]).
#[test]
fn criterion_4_sgn_remark() {
    let mut rng = rng(404);
    let cfg = FnConfig {
        continuous: true,
        ..FnConfig::default()
    };
    let sgn = |c: &Rat| MonotoneFn::step(c.clone(), rat_int(-1), rat_int(0), rat_int(1)).unwrap();
    for case in 0..300 {
        let f = sample::monotone_fn(&mut rng, &cfg);
        let mut pts = sorted_points(&mut rng, 4);
        pts.dedup();
        if pts.len() < 4 {
            continue;
        }

        // arrangement a < c < s < t
        let (a, c, s, t) = (&pts[0], &pts[1], &pts[2], &pts[3]);
        let r = closed_interval_bounds(&f, &sgn(c), a, s, t).unwrap();
        let want = f.value(s) + f.value(a);
        assert_eq!(r.value, want, "case {case}: a<c<s<t value");
        assert_eq!(r.lower, want, "case {case}: a<c<s<t lower");
        assert_eq!(r.upper, want, "case {case}: a<c<s<t upper");
        assert!(r.lower_tight && r.upper_tight);

        // arrangement a < s < c < t
        let (a, s, c, t) = (&pts[0], &pts[1], &pts[2], &pts[3]);
        let r = closed_interval_bounds(&f, &sgn(c), a, s, t).unwrap();
        let (fa, fs, fc, ft) = (f.value(a), f.value(s), f.value(c), f.value(t));
        assert_eq!(
            r.value,
            rat_int(2) * &fc + &fa - &fs,
            "case {case}: a<s<c<t value"
        );
        assert_eq!(r.lower, &fs + &fa, "case {case}: a<s<c<t lower");
        assert_eq!(
            r.upper,
            rat_int(2) * &ft + &fa - &fs,
            "case {case}: a<s<c<t upper"
        );
        assert_eq!(
            r.lower_tight,
            fc == fs,
            "case {case}: lower tightness iff f(c)=f(s)"
        );
        assert_eq!(
            r.upper_tight,
            fc == ft,
            "case {case}: upper tightness iff f(c)=f(t)"
        );
        if fs == ft {
            assert!(
                r.upper_tight,
                "case {case}: f(s)=f(t) must force upper equality"
            );
        }
    }

    // deliberate flat placements exercise each characterization branch
    let q = |n: i64| rat_int(n);
    let (a, s, c, t) = (q(0), q(1), q(2), q(3));
    let rising = MonotoneFn::identity_on(q(0), q(3)).unwrap();
    let flat_sc =
        MonotoneFn::piecewise_linear(&[(q(0), q(0)), (q(1), q(1)), (q(2), q(1)), (q(3), q(2))])
            .unwrap();
    let flat_st =
        MonotoneFn::piecewise_linear(&[(q(0), q(0)), (q(1), q(1)), (q(3), q(1))]).unwrap();
    let flat_ct =
        MonotoneFn::piecewise_linear(&[(q(0), q(0)), (q(2), q(2)), (q(3), q(2))]).unwrap();
    let g = sgn(&c);
    let r = closed_interval_bounds(&rising, &g, &a, &s, &t).unwrap();
    assert!(!r.lower_tight && !r.upper_tight);
    assert_eq!(r.value, q(3)); // 2 f(c) + f(a) - f(s)
    assert_eq!(r.lower, q(1));
    assert_eq!(r.upper, q(5));
    let r = closed_interval_bounds(&flat_sc, &g, &a, &s, &t).unwrap();
    assert!(r.lower_tight && !r.upper_tight); // f(c) = f(s) = 1, f(t) = 2
    let r = closed_interval_bounds(&flat_st, &g, &a, &s, &t).unwrap();
    assert!(r.lower_tight && r.upper_tight); // flat across [s, t]
    let r = closed_interval_bounds(&flat_ct, &g, &a, &s, &t).unwrap();
    assert!(r.upper_tight && !r.lower_tight); // f(c) = f(t) = 2 with f(s) = 1
    println!("criterion 4 PASS: sgn-remark closed forms and tightness characterizations exact");
}

/// Criterion 5: classical bounds for the identity are exact; dyadic
/// piecewise-linear refinements of the squaring function converge
/// monotonically to 10/3 with gap below 2^(2-k) at level k (the exact gap
/// is 4^(-k)/6, from closed-form integration of the interpolants).
#[test]
fn criterion_5_classical_bounds() {
    let id = MonotoneFn::identity_on(rat_int(0), rat_int(2)).unwrap();
    let r = classical_bounds(&id, &rat_int(0), &rat_int(1), &rat_int(2)).unwrap();
    assert_eq!(r.value, rat(5, 2));
    assert_eq!(r.lower, rat_int(2));
    assert_eq!(r.minguzzi, rat_int(3));
    assert_eq!(r.merkle, rat_int(4));

    let target = rat(10, 3);
    let mut prev_gap: Option<Rat> = None;
    for level in 4u32..=10 {
        let cells = 1i64 << (level + 1); // grid step 2^-level over [0, 2]
        let pts: Vec<(Rat, Rat)> = (0..=cells)
            .map(|j| {
                let x = rat(j, 1i64 << level);
                let y = &x * &x;
                (x, y)
            })
            .collect();
        let f = MonotoneFn::piecewise_linear(&pts).unwrap();
        let r = classical_bounds(&f, &rat_int(0), &rat_int(1), &rat_int(2)).unwrap();
        let gap = &r.value - &target;
        assert!(
            gap > rat_int(0),
            "level {level}: interpolant must overshoot"
        );
        assert!(
            gap < rat(4, 1i64 << level),
            "level {level}: gap {gap} exceeds 2^(2-k)"
        );
        assert_eq!(
            gap,
            rat(1, 6 * (1i64 << (2 * level))),
            "level {level}: exact gap"
        );
        if let Some(p) = prev_gap {
            assert!(gap < p, "level {level}: gap must shrink");
        }
        prev_gap = Some(gap);
        assert_eq!(r.lower, rat_int(2));
        assert_eq!(r.minguzzi, rat_int(5));
        assert_eq!(r.merkle, rat_int(8));
        assert!(r.value <= r.minguzzi && r.value <= r.merkle && r.value >= r.lower);
    }
    println!("criterion 5 PASS: classical bounds exact; x^2 refinements converge to 10/3");
}

/// Criterion 6: the expected-CDF identity agrees by both routes on 500
/// random distributions, is exactly 1/2 in the continuous case and exactly
/// 3/4 for a fair coin.
#[test]
fn criterion_6_expected_cdf() {
    let mut rng = rng(606);
    for case in 0..500 {
        let d = sample::dist_spec(&mut rng, 4, 3);
        assert_eq!(
            expected_cdf_by_integral(&d),
            expected_cdf_closed_form(&d),
            "case {case}"
        );
    }
    let continuous = DistSpec::new(
        vec![],
        vec![DensityPiece {
            from: rat_int(-2),
            to: rat_int(3),
            density: rat(1, 5),
        }],
    )
    .unwrap();
    assert_eq!(expected_cdf(&continuous), rat(1, 2));
    let coin = DistSpec::new(
        vec![(rat_int(0), rat(1, 2)), (rat_int(1), rat(1, 2))],
        vec![],
    )
    .unwrap();
    assert_eq!(expected_cdf(&coin), rat(3, 4));
    println!("criterion 6 PASS: expected-CDF identity exact on 500 distributions");
}

/// Criterion 7: every median lies below the largest inverse of the expected
/// CDF, on 1000 random distributions.
#[test]
fn criterion_7_median_bound() {
    let mut rng = rng(707);
    for case in 0..1000 {
        let d = sample::dist_spec(&mut rng, 4, 3);
        let b = median_bound_check(&d);
        assert!(
            b.holds,
            "case {case}: median {} above bound {}",
            b.median_hi, b.bound
        );
    }
    println!("criterion 7 PASS: median-expectation bound holds on 1000 distributions");
}

/// Criterion 8: the floor summation identity, exact for the named instances
/// and for 200 random integer-breakpoint functions with spans up to 10^4.
#[test]
fn criterion_8_summation_identity() {
    // identity function: K = n
    let n = 50;
    let f = MonotoneFn::identity_on(rat_int(0), rat_int(n + 1)).unwrap();
    let r = summation_identity(&f, 1, n).unwrap();
    assert_eq!(r.lhs, r.rhs);
    assert_eq!(r.integer_hits, BigInt::from(n));
    let (lhs, rhs) = gupta_sum(&f, 5).unwrap();
    assert_eq!((lhs, rhs), (BigInt::from(30), BigInt::from(30)));

    // squaring surrogate, exact at the integers: 10 = 10 with K = 2
    let pts: Vec<_> = (0..=3).map(|j| (rat_int(j), rat_int(j * j))).collect();
    let sq = MonotoneFn::piecewise_linear(&pts).unwrap();
    let r = summation_identity(&sq, 1, 2).unwrap();
    assert_eq!((r.lhs, r.rhs), (BigInt::from(10), BigInt::from(10)));
    assert_eq!(r.integer_hits, BigInt::from(2));
    let (lhs, rhs) = gupta_sum(&sq, 2).unwrap();
    assert_eq!((lhs, rhs), (BigInt::from(10), BigInt::from(10)));

    // halving function: 10 = 10 with K = 2
    let hf = MonotoneFn::piecewise_linear(&[(rat_int(0), rat_int(0)), (rat_int(8), rat_int(4))])
        .unwrap();
    let r = summation_identity(&hf, 1, 4).unwrap();
    assert_eq!((r.lhs, r.rhs), (BigInt::from(10), BigInt::from(10)));
    assert_eq!(r.integer_hits, BigInt::from(2));

    let mut rng = rng(808);
    for case in 0..200 {
        let f = sample::integer_breakpoint_fn(&mut rng, -8, 8);
        let m: i64 = rng.random_range(-5000..=5000);
        let span: i64 = if case % 20 == 0 {
            10_000
        } else {
            rng.random_range(0..=500)
        };
        let r = summation_identity(&f, m, m + span).unwrap();
        assert_eq!(r.lhs, r.rhs, "case {case}: m={m}, span={span}");
    }
    println!("criterion 8 PASS: floor summation identity exact (200 random, spans to 10^4)");
}

/// Criterion 9: oracle convergence. The engine-vs-partition-sum gap is
/// positive, non-increasing in the refinement level and bounded by
/// 2^(-n) mu_g(I) (for non-negative integrands below the truncation level);
/// inverse-measure grid estimates stay within twice the predicted bound.
#[test]
fn criterion_9_oracle_convergence() {
    let mut rng = rng(909);
    let cfg = FnConfig {
        nonneg: true,
        span: 1,
        max_breakpoints: 6,
        max_jumps: 2,
        ..FnConfig::default()
    };
    let levels = 4u32..=8;
    let cap = rat_int(4); // keep f_max < smallest level
    let mut done = 0;
    while done < 100 {
        let f = sample::monotone_fn(&mut rng, &cfg);
        if f.upper_value() >= &cap {
            continue;
        }
        let g = sample::monotone_fn(&mut rng, &FnConfig::default());
        let i = sample::proper_interval(&mut rng, 6);
        let exact = stieltjes::integral::ls_integral(&f, &g, &i);
        let mu = ls_measure(&g, &i);
        // require a genuinely positive gap at the finest level so strict
        // positivity is meaningful for the whole ladder
        if exact == partition_sum(&f, &g, &i, *levels.end()) {
            continue;
        }
        let mut prev: Option<Rat> = None;
        for level in levels.clone() {
            let gap = &exact - partition_sum(&f, &g, &i, level);
            assert!(
                gap > rat_int(0),
                "instance {done}: gap not positive at level {level}"
            );
            assert!(
                gap <= rat(1, 1i64 << level) * &mu,
                "instance {done}: gap beyond 2^-n mu_g(I) at level {level}"
            );
            if let Some(p) = prev {
                assert!(gap <= p, "instance {done}: gap increased at level {level}");
            }
            prev = Some(gap);
        }
        done += 1;
    }

    let grid = 1u32 << 9;
    let mut done = 0;
    let mut versions = InverseVersion::ALL.iter().cycle();
    while done < 100 {
        let g = sample::monotone_fn(&mut rng, &FnConfig::default());
        if g.lower_value() == g.upper_value() {
            continue;
        }
        let i = sample::any_interval(&mut rng, 6);
        let v = *versions.next().unwrap();
        let r = inverse_measure_check(&g, &i, v, grid);
        let err = stieltjes::rational::abs(&(&r.estimate - &r.target));
        let bound = inverse_measure_bound(&g, grid);
        assert!(
            err < rat_int(2) * &bound,
            "instance {done}: grid error {err} vs bound {bound} ({v:?} on {i})"
        );
        done += 1;
    }
    println!("criterion 9 PASS: oracle gaps shrink within 2^-n mu_g(I); grid checks within bound");
}
