//! Generalized inverses of monotone functions.
//!
//! Any `x` with `sup{t : g(t) < y} <= x <= inf{t : g(t) > y}` is a
//! generalized inverse of `g` at `y`; the bracket collapses to a point at
//! jumps and opens up across flats. [`InverseVersion`] selects a point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::monotone::{Jump, MonotoneFn, Threshold};
use crate::rational::{format_rat, Rat};

/// Selection rule among the admissible generalized-inverse values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InverseVersion {
    /// `sup { t : g(t) < y }` — the default throughout.
    #[default]
    Smallest,
    /// `inf { t : g(t) > y }`.
    Largest,
    /// The midpoint of the bracket (conventions below for infinite ends).
    Midpoint,
}

impl InverseVersion {
    pub const ALL: [InverseVersion; 3] = [
        InverseVersion::Smallest,
        InverseVersion::Largest,
        InverseVersion::Midpoint,
    ];
}

impl std::str::FromStr for InverseVersion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smallest" => Ok(InverseVersion::Smallest),
            "largest" => Ok(InverseVersion::Largest),
            "midpoint" => Ok(InverseVersion::Midpoint),
            other => Err(Error::Parse(format!(
                "unknown inverse version {other:?} (expected smallest|largest|midpoint)"
            ))),
        }
    }
}

/// `sup { t : g(t) < y }` as an extended real.
fn smallest(g: &MonotoneFn, y: &Rat) -> ExtReal {
    // equals the cut location of the complementary upper set { g >= y }
    match g.threshold(y, false) {
        Threshold::All => ExtReal::NegInf,
        Threshold::None => ExtReal::PosInf,
        Threshold::Cut { x, .. } => ExtReal::Finite(x),
    }
}

/// `inf { t : g(t) > y }` as an extended real.
fn largest(g: &MonotoneFn, y: &Rat) -> ExtReal {
    match g.threshold(y, true) {
        Threshold::All => ExtReal::NegInf,
        Threshold::None => ExtReal::PosInf,
        Threshold::Cut { x, .. } => ExtReal::Finite(x),
    }
}

/// The generalized inverse of `g` at `y` under version `v`.
///
/// Values of `y` strictly outside the range of `g` are rejected; at the
/// range boundary the defining sup/inf may legitimately be infinite (e.g.
/// the smallest inverse at the lowest attained value). Midpoint
/// conventions when a bracket end is infinite: take the finite end if any,
/// otherwise zero — both are admissible selections.
pub fn gen_inverse(g: &MonotoneFn, y: &Rat, v: InverseVersion) -> Result<ExtReal> {
    if y < g.lower_value() || y > g.upper_value() {
        return Err(Error::OutOfRange(format!(
            "{} is outside the range [{}, {}] of the function",
            format_rat(y),
            format_rat(g.lower_value()),
            format_rat(g.upper_value())
        )));
    }
    Ok(match v {
        InverseVersion::Smallest => smallest(g, y),
        InverseVersion::Largest => largest(g, y),
        InverseVersion::Midpoint => match (smallest(g, y), largest(g, y)) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => {
                ExtReal::Finite((a + b) / Rat::from_integer(2.into()))
            }
            (ExtReal::Finite(a), _) | (_, ExtReal::Finite(a)) => ExtReal::Finite(a),
            _ => ExtReal::Finite(Rat::zero()),
        },
    })
}

/// Materializes the generalized inverse as a [`MonotoneFn`] on the range
/// `[g(-inf), g(+inf)]`: jumps of `g` become flats, flats (and zero-slope
/// tails inside the span) become jumps whose point value follows `v`.
///
/// Strictly inside the range the result agrees with [`gen_inverse`]
/// everywhere, including at flat heights; at the two boundary values the
/// materialized function takes the finite endpoint of the bracket (the
/// defining sup/inf can be infinite there, which a canonical function
/// cannot represent).
pub fn inverse_fn(g: &MonotoneFn, v: InverseVersion) -> MonotoneFn {
    let verts = g.polyline();
    // reflect: group vertices by y; a group spanning x_first..x_last is a
    // flat of g, i.e. a jump of the inverse
    let mut groups: Vec<(Rat, Rat, Rat)> = Vec::new(); // (y, x_first, x_last)
    for (x, y) in verts {
        match groups.last_mut() {
            Some((gy, _, gx_last)) if *gy == y => *gx_last = x,
            _ => groups.push((y.clone(), x.clone(), x)),
        }
    }
    let mut breakpoints = Vec::with_capacity(groups.len());
    let mut slopes = Vec::with_capacity(groups.len().saturating_sub(1));
    let mut jumps = Vec::new();
    let anchor = groups[0].1.clone();
    let mut prev: Option<(Rat, Rat)> = None; // (y, x_last) of previous group
    for (y, x_first, x_last) in groups {
        if let Some((py, px)) = prev {
            slopes.push((&x_first - &px) / (&y - &py));
        }
        if x_last > x_first {
            let point = match v {
                InverseVersion::Smallest => x_first.clone(),
                InverseVersion::Largest => x_last.clone(),
                InverseVersion::Midpoint => (&x_first + &x_last) / Rat::from_integer(2.into()),
            };
            jumps.push(
                Jump::new(y.clone(), x_first.clone(), point, x_last.clone())
                    .expect("flat of positive length"),
            );
        }
        prev = Some((y.clone(), x_last));
        breakpoints.push(y);
    }
    MonotoneFn::new(breakpoints, anchor, slopes, jumps)
        .expect("reflected graph of a monotone function is monotone")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn heaviside() -> MonotoneFn {
        MonotoneFn::step(rat_int(0), rat_int(0), rat(1, 2), rat_int(1)).unwrap()
    }

    #[test]
    fn jump_collapses_bracket() {
        let g = heaviside();
        for v in InverseVersion::ALL {
            assert_eq!(
                gen_inverse(&g, &rat(1, 2), v).unwrap(),
                ExtReal::Finite(rat_int(0))
            );
        }
    }

    #[test]
    fn true_inverse_on_strictly_increasing() {
        let id = MonotoneFn::identity_on(rat_int(0), rat_int(1)).unwrap();
        for v in InverseVersion::ALL {
            assert_eq!(
                gen_inverse(&id, &rat(1, 3), v).unwrap(),
                ExtReal::Finite(rat(1, 3))
            );
        }
    }

    #[test]
    fn flat_opens_bracket() {
        // x - 1 on [-1, 0) with a step to 0, flat on [0, 1], step to 1,
        // then x on (1, 2]
        let g = MonotoneFn::new(
            vec![rat_int(-1), rat_int(0), rat_int(1), rat_int(2)],
            rat_int(-2),
            vec![rat_int(1), rat_int(0), rat_int(1)],
            vec![
                Jump::new(rat_int(0), rat_int(-1), rat_int(0), rat_int(0)).unwrap(),
                Jump::new(rat_int(1), rat_int(0), rat_int(0), rat_int(1)).unwrap(),
            ],
        )
        .unwrap();
        let y = rat_int(0);
        assert_eq!(
            gen_inverse(&g, &y, InverseVersion::Smallest).unwrap(),
            ExtReal::Finite(rat_int(0))
        );
        assert_eq!(
            gen_inverse(&g, &y, InverseVersion::Largest).unwrap(),
            ExtReal::Finite(rat_int(1))
        );
        assert_eq!(
            gen_inverse(&g, &y, InverseVersion::Midpoint).unwrap(),
            ExtReal::Finite(rat(1, 2))
        );
    }

    #[test]
    fn out_of_range_is_rejected() {
        let g = heaviside();
        assert!(gen_inverse(&g, &rat_int(2), InverseVersion::Smallest).is_err());
        assert!(gen_inverse(&g, &rat_int(-1), InverseVersion::Largest).is_err());
        // boundary values are admissible and may be infinite
        assert_eq!(
            gen_inverse(&g, &rat_int(0), InverseVersion::Smallest).unwrap(),
            ExtReal::NegInf
        );
        assert_eq!(
            gen_inverse(&g, &rat_int(1), InverseVersion::Largest).unwrap(),
            ExtReal::PosInf
        );
    }

    #[test]
    fn identity_inverts_to_identity() {
        let id = MonotoneFn::identity_on(rat_int(0), rat_int(1)).unwrap();
        assert_eq!(inverse_fn(&id, InverseVersion::Smallest), id);
    }

    #[test]
    fn step_inverts_to_flat() {
        let g = heaviside();
        let inv = inverse_fn(&g, InverseVersion::Smallest);
        // flat at height 0 over (0, 1)
        assert_eq!(inv.value(&rat(1, 4)), rat_int(0));
        assert_eq!(inv.value(&rat(3, 4)), rat_int(0));
        assert!(inv.jumps().is_empty());
    }

    #[test]
    fn flat_inverts_to_jump_of_equal_mass() {
        // slope 1 on [0,1], flat of length 2 on [1,3], slope 1 on [3,4]
        let g = MonotoneFn::piecewise_linear(&[
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(3), rat_int(1)),
            (rat_int(4), rat_int(2)),
        ])
        .unwrap();
        let inv = inverse_fn(&g, InverseVersion::Largest);
        assert_eq!(inv.jumps().len(), 1);
        let j = &inv.jumps()[0];
        assert_eq!(j.location(), &rat_int(1));
        assert_eq!(j.mass(), rat_int(2));
        assert_eq!(inv.value(&rat_int(1)), rat_int(3)); // largest version
    }
}
