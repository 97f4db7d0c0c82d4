//! Exact Lebesgue-Stieltjes calculus for non-decreasing functions.
//!
//! The working class is [`MonotoneFn`]: a piecewise-linear continuous part
//! with finitely many jumps, exact rational coordinates, constant beyond
//! its extreme breakpoints. On this class everything is closed-form:
//!
//! * [`measure`] — the measure `mu_g(I)` of any interval via its image
//!   interval, with the atom/continuous decomposition;
//! * [`inverse`] — generalized inverses in three versions, both pointwise
//!   and materialized as canonical functions;
//! * [`integral`] — `∫_I f dg`, change of variables through the inverse,
//!   and integration by parts with the jump-correction terms;
//! * [`young`] — the functional `T(f,g;I,J) = ∫_I f dg + ∫_J g df` with
//!   two-sided bounds, their closed-interval forms, and the classical
//!   single-function bounds;
//! * [`applications`] — exact CDFs, the expected-CDF formula, median
//!   bounds, the measure-form Young sandwich, and a floor-function
//!   summation identity;
//! * [`oracle`] — independent brute-force verifiers (partition sums,
//!   inverse-measure grids) used to cross-check the engine.
//!
//! All identities asserted by the test suite hold with *exact equality*;
//! no floating point is involved anywhere.
//!
//! ```
//! use stieltjes::rational::{rat, rat_int};
//! use stieltjes::{Interval, MonotoneFn};
//!
//! // a unit step at 0 with point value 1/2, and the identity on [-1, 1]
//! let g = MonotoneFn::step(rat_int(0), rat_int(0), rat(1, 2), rat_int(1)).unwrap();
//! let f = MonotoneFn::identity_on(rat_int(-1), rat_int(1)).unwrap();
//! let i = Interval::closed(rat_int(-1), rat_int(1)).unwrap();
//!
//! // the atom at 0 carries all of mu_g, and f(0) = 0 there
//! assert_eq!(stieltjes::measure::ls_measure(&g, &i), rat_int(1));
//! assert_eq!(stieltjes::integral::ls_integral(&f, &g, &i), rat_int(0));
//!
//! // integration by parts balances exactly
//! let parts = stieltjes::integral::parts(&f, &g, &i).unwrap();
//! assert_eq!(parts.lhs, parts.boundary + parts.jump_sum);
//! ```

pub mod applications;
pub mod error;
pub mod ext_real;
pub mod integral;
pub mod interval;
pub mod inverse;
pub mod measure;
pub mod monotone;
pub mod oracle;
pub mod rational;
pub mod sample;
pub mod young;

pub use applications::{DensityPiece, DistSpec, FloorSumIdentity, MedianBound, MedianSet};
pub use error::{Error, Result};
pub use ext_real::ExtReal;
pub use integral::PartsReport;
pub use interval::Interval;
pub use inverse::InverseVersion;
pub use measure::IntervalImage;
pub use monotone::{IntervalStat, Jump, MonotoneFn, Side};
pub use rational::Rat;
pub use young::{BoundReport, ClassicalBounds};
