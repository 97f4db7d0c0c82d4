//! Deterministic random instances for property tests and the `verify`
//! command. Everything is driven by a caller-supplied [`Rng`], so a fixed
//! seed reproduces the exact same functions, intervals and distributions.

use rand::Rng;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::applications::{DensityPiece, DistSpec};
use crate::ext_real::ExtReal;
use crate::interval::Interval;
use crate::monotone::{Jump, MonotoneFn};
use crate::rational::{rat_int, Rat};

/// Knobs for random canonical functions.
#[derive(Debug, Clone)]
pub struct FnConfig {
    pub max_breakpoints: usize,
    pub max_jumps: usize,
    /// Breakpoints and values are drawn from roughly `[-span, span]`.
    pub span: i64,
    /// Denominators are drawn from `1..=max_denom`.
    pub max_denom: i64,
    /// Anchor value is forced non-negative.
    pub nonneg: bool,
    /// All jumps get `point == right`.
    pub right_continuous: bool,
    /// No jumps at all.
    pub continuous: bool,
    /// Allow zero-slope segments.
    pub allow_flats: bool,
}

impl Default for FnConfig {
    fn default() -> Self {
        FnConfig {
            max_breakpoints: 8,
            max_jumps: 3,
            span: 6,
            max_denom: 4,
            nonneg: false,
            right_continuous: false,
            continuous: false,
            allow_flats: true,
        }
    }
}

fn rand_rat<R: Rng + ?Sized>(rng: &mut R, span: i64, max_denom: i64) -> Rat {
    let denom = rng.random_range(1..=max_denom);
    let numer = rng.random_range(-span * denom..=span * denom);
    Rat::new(numer.into(), denom.into())
}

fn rand_positive_rat<R: Rng + ?Sized>(rng: &mut R, span: i64, max_denom: i64) -> Rat {
    let denom = rng.random_range(1..=max_denom);
    let numer = rng.random_range(1..=span.max(1) * denom);
    Rat::new(numer.into(), denom.into())
}

/// A random canonical monotone function.
pub fn monotone_fn<R: Rng + ?Sized>(rng: &mut R, cfg: &FnConfig) -> MonotoneFn {
    let k = rng.random_range(1..=cfg.max_breakpoints.max(1));
    let mut points = BTreeSet::new();
    while points.len() < k {
        points.insert(rand_rat(rng, cfg.span, cfg.max_denom));
    }
    let breakpoints: Vec<Rat> = points.into_iter().collect();
    let mut anchor = rand_rat(rng, cfg.span, cfg.max_denom);
    if cfg.nonneg && anchor < Rat::zero() {
        anchor = -anchor;
    }
    let mut slopes = Vec::with_capacity(k - 1);
    for _ in 0..k - 1 {
        if cfg.allow_flats && rng.random_range(0..3) == 0 {
            slopes.push(Rat::zero());
        } else {
            slopes.push(rand_positive_rat(rng, 3, cfg.max_denom));
        }
    }
    let jump_count = if cfg.continuous {
        0
    } else {
        rng.random_range(0..=cfg.max_jumps.min(k))
    };
    let mut sites = BTreeSet::new();
    while sites.len() < jump_count {
        sites.insert(rng.random_range(0..k));
    }
    // walk values to supply consistent jump records
    let mut jumps = Vec::new();
    let mut incoming = anchor.clone();
    let mut prev_right = anchor.clone();
    for (i, b) in breakpoints.iter().enumerate() {
        if i > 0 {
            incoming = &prev_right + &slopes[i - 1] * (b - &breakpoints[i - 1]);
        }
        if sites.contains(&i) {
            let mass = rand_positive_rat(rng, 3, cfg.max_denom);
            let theta = if cfg.right_continuous {
                Rat::from_integer(1.into())
            } else {
                match rng.random_range(0..4) {
                    0 => Rat::zero(),
                    1 => Rat::from_integer(1.into()),
                    2 => crate::rational::rat(1, 2),
                    _ => crate::rational::rat(1, 3),
                }
            };
            let point = &incoming + &theta * &mass;
            let right = &incoming + &mass;
            jumps.push(
                Jump::new(b.clone(), incoming.clone(), point, right.clone())
                    .expect("generated jump is ordered"),
            );
            prev_right = right;
        } else {
            prev_right = incoming.clone();
        }
    }
    MonotoneFn::new(breakpoints, anchor, slopes, jumps).expect("generated function is monotone")
}

/// A random nonempty interval of any kind (bounded, half-line, whole line,
/// singleton), with endpoints of mixed openness.
pub fn proper_interval<R: Rng + ?Sized>(rng: &mut R, span: i64) -> Interval {
    loop {
        let candidate = match rng.random_range(0..8) {
            0 => Interval::all(),
            1 => Interval::at_most(rand_rat(rng, span, 4)),
            2 => {
                let a = rand_rat(rng, span, 4);
                Interval::new(a.into(), rng.random_bool(0.5), ExtReal::PosInf, false).unwrap()
            }
            3 => Interval::singleton(rand_rat(rng, span, 4)),
            _ => {
                let mut a = rand_rat(rng, span, 4);
                let mut b = rand_rat(rng, span, 4);
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                match Interval::new(
                    a.into(),
                    rng.random_bool(0.5),
                    b.into(),
                    rng.random_bool(0.5),
                ) {
                    Ok(i) => i,
                    Err(_) => continue,
                }
            }
        };
        if !candidate.is_empty() {
            return candidate;
        }
    }
}

/// A random interval, empty roughly one time in eight.
pub fn any_interval<R: Rng + ?Sized>(rng: &mut R, span: i64) -> Interval {
    if rng.random_range(0..8) == 0 {
        Interval::Empty
    } else {
        proper_interval(rng, span)
    }
}

/// A random point strictly inside a proper interval.
fn point_inside<R: Rng + ?Sized>(rng: &mut R, i: &Interval, span: i64) -> Rat {
    let (l, _, r, _) = i.bounds().expect("nonempty");
    match (l, r) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => {
            if a == b {
                return a.clone();
            }
            let denom = rng.random_range(2..=8);
            let num = rng.random_range(1..denom);
            a + (b - a) * Rat::new(num.into(), denom.into())
        }
        (ExtReal::Finite(a), _) => a + rand_positive_rat(rng, span, 4),
        (_, ExtReal::Finite(b)) => b - rand_positive_rat(rng, span, 4),
        _ => rand_rat(rng, span, 4),
    }
}

/// A random nonempty `J ⊆ I`; returns `I` itself about a quarter of the
/// time so equality cases are exercised.
pub fn subinterval<R: Rng + ?Sized>(rng: &mut R, i: &Interval, span: i64) -> Interval {
    if i.is_singleton() || rng.random_range(0..4) == 0 {
        return i.clone();
    }
    let (il, ilc, ir, irc) = i.bounds().expect("nonempty");
    loop {
        // left end of J: keep I's, or move strictly inside
        let keep_left = rng.random_bool(0.4);
        let (jl, jlc) = if keep_left {
            (il.clone(), ilc && rng.random_bool(0.8))
        } else {
            (
                ExtReal::Finite(point_inside(rng, i, span)),
                rng.random_bool(0.5),
            )
        };
        let keep_right = rng.random_bool(0.4);
        let (jr, jrc) = if keep_right {
            (ir.clone(), irc && rng.random_bool(0.8))
        } else {
            (
                ExtReal::Finite(point_inside(rng, i, span)),
                rng.random_bool(0.5),
            )
        };
        if jl > jr {
            continue;
        }
        let Ok(j) = Interval::new(jl, jlc, jr, jrc) else {
            continue;
        };
        if !j.is_empty() && j.is_subset_of(i) {
            return j;
        }
    }
}

/// A random finitely-supported distribution with atoms and density pieces,
/// exactly normalized.
pub fn dist_spec<R: Rng + ?Sized>(rng: &mut R, max_atoms: usize, max_pieces: usize) -> DistSpec {
    loop {
        let atom_count = rng.random_range(0..=max_atoms);
        let piece_count = rng.random_range(0..=max_pieces);
        if atom_count == 0 && piece_count == 0 {
            continue;
        }
        let mut locations = BTreeSet::new();
        while locations.len() < atom_count {
            locations.insert(rand_rat(rng, 4, 4));
        }
        let atoms: Vec<(Rat, Rat)> = locations
            .into_iter()
            .map(|x| (x, rand_positive_rat(rng, 2, 4)))
            .collect();
        let mut cuts = BTreeSet::new();
        while cuts.len() < 2 * piece_count {
            cuts.insert(rand_rat(rng, 4, 4));
        }
        let cuts: Vec<Rat> = cuts.into_iter().collect();
        let mut pieces = Vec::with_capacity(piece_count);
        for c in cuts.chunks(2) {
            let density = if rng.random_range(0..4) == 0 {
                Rat::zero()
            } else {
                rand_positive_rat(rng, 2, 4)
            };
            pieces.push(DensityPiece {
                from: c[0].clone(),
                to: c[1].clone(),
                density,
            });
        }
        let mut total = Rat::zero();
        for (_, p) in &atoms {
            total += p;
        }
        for p in &pieces {
            total += &p.density * (&p.to - &p.from);
        }
        if total.is_zero() {
            continue;
        }
        let atoms = atoms.into_iter().map(|(x, p)| (x, p / &total)).collect();
        let pieces = pieces
            .into_iter()
            .map(|p| DensityPiece {
                from: p.from,
                to: p.to,
                density: p.density / &total,
            })
            .collect();
        return DistSpec::new(atoms, pieces).expect("normalized distribution");
    }
}

/// A random right-continuous monotone function whose breakpoints are all
/// integers, suitable for the floor summation identity.
pub fn integer_breakpoint_fn<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> MonotoneFn {
    let k = rng.random_range(1..=6usize);
    let mut points = BTreeSet::new();
    while points.len() < k {
        points.insert(rng.random_range(lo..=hi));
    }
    let breakpoints: Vec<Rat> = points.iter().map(|&j| rat_int(j)).collect();
    let anchor = rand_rat(rng, 5, 3);
    let mut slopes = Vec::with_capacity(k - 1);
    for _ in 0..k - 1 {
        slopes.push(if rng.random_range(0..3) == 0 {
            Rat::zero()
        } else {
            rand_positive_rat(rng, 2, 3)
        });
    }
    let mut jumps = Vec::new();
    let mut prev_right = anchor.clone();
    let mut incoming = anchor.clone();
    for (i, b) in breakpoints.iter().enumerate() {
        if i > 0 {
            incoming = &prev_right + &slopes[i - 1] * (b - &breakpoints[i - 1]);
        }
        if rng.random_range(0..3) == 0 {
            let mass = rand_positive_rat(rng, 2, 3);
            let right = &incoming + &mass;
            jumps.push(
                Jump::new(b.clone(), incoming.clone(), right.clone(), right.clone())
                    .expect("ordered jump"),
            );
            prev_right = right;
        } else {
            prev_right = incoming.clone();
        }
    }
    MonotoneFn::new(breakpoints, anchor, slopes, jumps).expect("generated function is monotone")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = FnConfig::default();
        for _ in 0..100 {
            let f = monotone_fn(&mut rng, &cfg);
            assert!(f.lower_value() <= f.upper_value());
            let i = proper_interval(&mut rng, 6);
            assert!(!i.is_empty());
            let j = subinterval(&mut rng, &i, 6);
            assert!(j.is_subset_of(&i) && !j.is_empty());
            let d = dist_spec(&mut rng, 3, 2);
            assert!(!d.atoms().is_empty() || !d.pieces().is_empty());
            let g = integer_breakpoint_fn(&mut rng, -5, 5);
            assert!(g.jumps().iter().all(|j| j.point_value() == j.right_value()));
        }
    }
}
