//! Fixed two-variable demonstration pinning the scope of the one-variable
//! analysis. The members f_n(x, y) = n·|y + n·x| are convex on the plane and
//! converge pointwise to a limit that is 0 at the origin and +∞ everywhere
//! else. On the segment K = [−1, 0] × {1} every member still attains
//! minimum 0 (at x = −1/n), while the limit is identically +∞ there — so
//! minima over a compact set can refuse to follow a pointwise limit once a
//! second variable is in play. This module is a fixed demo, not a
//! two-variable engine.

use num::{Signed, Zero};
use serde::Serialize;

use crate::extreal::{rat, rat_int, ExtReal, Rational};

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R2Point {
    pub x: Rational,
    pub y: Rational,
}

impl R2Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        R2Point { x, y }
    }
}

/// Exact value of the n-th member: n·|y + n·x|.
pub fn r2_eval(n: u32, p: &R2Point) -> ExtReal {
    assert!(n >= 1, "members are indexed from 1");
    let nn = rat_int(i64::from(n));
    ExtReal::Finite(&nn * &(&p.y + &(&nn * &p.x)).abs())
}

/// Whether a point lies on the segment K = [−1, 0] × {1}.
pub fn k_contains(p: &R2Point) -> bool {
    p.y == rat_int(1) && p.x >= rat_int(-1) && p.x <= rat_int(0)
}

/// Exact minimum of the n-th member over K, by the closed form: the member
/// vanishes exactly where y + n·x = 0, and with y = 1 the solution
/// x = −1/n lies in [−1, 0] for every n ≥ 1; values are never negative.
pub fn r2_min_on_k(n: u32) -> ExtReal {
    assert!(n >= 1, "members are indexed from 1");
    let minimizer = R2Point::new(rat(-1, i64::from(n)), rat_int(1));
    debug_assert!(k_contains(&minimizer));
    debug_assert_eq!(r2_eval(n, &minimizer), ExtReal::from_int(0));
    ExtReal::from_int(0)
}

/// Pointwise limit of the members: 0 at the origin, +∞ everywhere else.
pub fn r2_pointwise_limit(p: &R2Point) -> ExtReal {
    if p.x.is_zero() && p.y.is_zero() {
        ExtReal::from_int(0)
    } else {
        ExtReal::PosInf
    }
}

/// One table row: the member index and its exact minimum over K.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct R2Row {
    pub n: u32,
    pub min_on_k: ExtReal,
}

/// Minima over K for n = 1..=n_max.
pub fn min_table(n_max: u32) -> Vec<R2Row> {
    (1..=n_max).map(|n| R2Row { n, min_on_k: r2_min_on_k(n) }).collect()
}
