//! The Lebesgue-Stieltjes measure of an interval under a monotone function.
//!
//! For a non-decreasing `g`, every interval `I` has an image interval
//! `[l, r]` of g-values obtained by matching one-sided limits to the
//! endpoint kinds of `I`; the measure of `I` is the length of that image.

use crate::ext_real::ExtReal;
use crate::interval::Interval;
use crate::monotone::{MonotoneFn, Side};
use crate::rational::Rat;

/// The closed interval `[left, right]` of g-values matched to an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalImage {
    pub left: Rat,
    pub right: Rat,
}

impl IntervalImage {
    /// `right - left`, i.e. the Lebesgue-Stieltjes measure of the source
    /// interval.
    pub fn length(&self) -> Rat {
        &self.right - &self.left
    }
}

/// The image interval of `i` under `g`.
///
/// Endpoint mapping: a closed endpoint uses the outer one-sided limit, an
/// open endpoint the inner one; infinite endpoints use the constant-tail
/// limits. The empty interval maps to the degenerate `[0, 0]`.
pub fn interval_image(g: &MonotoneFn, i: &Interval) -> IntervalImage {
    let Some((l, lc, r, rc)) = i.bounds() else {
        return IntervalImage {
            left: Rat::from_integer(0.into()),
            right: Rat::from_integer(0.into()),
        };
    };
    let left = match l {
        ExtReal::NegInf => g.lower_value().clone(),
        ExtReal::Finite(a) => g.evaluate(a, if lc { Side::Left } else { Side::Right }),
        ExtReal::PosInf => unreachable!("proper interval with left endpoint +inf"),
    };
    let right = match r {
        ExtReal::PosInf => g.upper_value().clone(),
        ExtReal::Finite(b) => g.evaluate(b, if rc { Side::Right } else { Side::Left }),
        ExtReal::NegInf => unreachable!("proper interval with right endpoint -inf"),
    };
    IntervalImage { left, right }
}

/// `mu_g(i)`, the Lebesgue-Stieltjes measure of `i` under `g`.
pub fn ls_measure(g: &MonotoneFn, i: &Interval) -> Rat {
    interval_image(g, i).length()
}

/// The atoms of `mu_g` inside `i`: jump locations of `g` contained in `i`
/// together with their masses, in ascending order.
pub fn atoms_in(g: &MonotoneFn, i: &Interval) -> Vec<(Rat, Rat)> {
    g.jumps()
        .iter()
        .filter(|j| i.contains(j.location()))
        .map(|j| (j.location().clone(), j.mass()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monotone::Jump;
    use crate::rational::{rat, rat_int};

    fn heaviside() -> MonotoneFn {
        MonotoneFn::step(rat_int(0), rat_int(0), rat(1, 2), rat_int(1)).unwrap()
    }

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn image_follows_endpoint_table() {
        let g = heaviside();
        let img = interval_image(&g, &iv("[-1,1]"));
        assert_eq!((img.left, img.right), (rat_int(0), rat_int(1)));
        // open endpoints take inner limits
        let img = interval_image(&g, &iv("(0,1)"));
        assert_eq!((img.left, img.right), (rat_int(1), rat_int(1)));
        let img = interval_image(&g, &Interval::Empty);
        assert_eq!((img.left, img.right), (rat_int(0), rat_int(0)));
        let img = interval_image(&g, &iv("(-inf,inf)"));
        assert_eq!((img.left, img.right), (rat_int(0), rat_int(1)));
    }

    #[test]
    fn measure_examples() {
        let g = heaviside();
        assert_eq!(ls_measure(&g, &Interval::singleton(rat_int(0))), rat_int(1));
        assert_eq!(ls_measure(&g, &Interval::Empty), rat_int(0));

        let id = MonotoneFn::identity_on(rat_int(0), rat_int(1)).unwrap();
        assert_eq!(ls_measure(&id, &iv("[1/4,3/4]")), rat(1, 2));

        // slope 2 on [0,1] with a jump of mass 3 at 1/2
        let g = MonotoneFn::new(
            vec![rat_int(0), rat(1, 2), rat_int(1)],
            rat_int(0),
            vec![rat_int(2), rat_int(2)],
            vec![Jump::new(rat(1, 2), rat_int(1), rat_int(1), rat_int(4)).unwrap()],
        )
        .unwrap();
        assert_eq!(ls_measure(&g, &iv("(0,1]")), rat_int(5));
    }

    #[test]
    fn atoms_respect_endpoint_kinds() {
        let g = heaviside();
        assert_eq!(atoms_in(&g, &iv("[-1,1]")), vec![(rat_int(0), rat_int(1))]);
        assert_eq!(atoms_in(&g, &iv("(0,1]")), vec![]);

        let two = MonotoneFn::new(
            vec![rat_int(0), rat(1, 2), rat(3, 4)],
            rat_int(0),
            vec![rat_int(0), rat_int(0)],
            vec![
                Jump::new(rat(1, 2), rat_int(0), rat_int(1), rat_int(1)).unwrap(),
                Jump::new(rat(3, 4), rat_int(1), rat_int(2), rat_int(2)).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            atoms_in(&two, &iv("[0,3/4)")),
            vec![(rat(1, 2), rat_int(1))]
        );
    }

    #[test]
    fn additivity_at_a_splitting_point() {
        let g = MonotoneFn::new(
            vec![rat_int(0), rat(1, 2), rat_int(1)],
            rat_int(0),
            vec![rat_int(2), rat_int(2)],
            vec![Jump::new(rat(1, 2), rat_int(1), rat_int(2), rat_int(4)).unwrap()],
        )
        .unwrap();
        let i = iv("[0,1]");
        let c = rat(1, 2);
        let below =
            i.intersect(&Interval::new(ExtReal::NegInf, false, c.clone().into(), false).unwrap());
        let at = i.intersect(&Interval::singleton(c.clone()));
        let above = i.intersect(&Interval::new(c.into(), false, ExtReal::PosInf, false).unwrap());
        assert_eq!(
            ls_measure(&g, &below) + ls_measure(&g, &at) + ls_measure(&g, &above),
            ls_measure(&g, &i)
        );
    }
}
