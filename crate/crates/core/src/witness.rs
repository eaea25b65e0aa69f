//! Constructive certificates for unstable verdicts: closed-form sequences
//! of convex functions that converge to the base pointwise while their
//! infima refuse to follow.
//!
//! Four families cover the three ways the stability criterion fails:
//!
//! * `LinearDrift` — f_n(x) = ±x + n for an empty effective domain on an
//!   unbounded interval: converges to +∞ everywhere, inf stays −∞;
//! * `ScaledVee` — f_n(x) = n·|1 + n(x − x₀)| for an empty effective domain
//!   on a bounded interval: converges to +∞, inf stays 0;
//! * `SteepVee` — f_n(x) = f(x₀) − 1 + |1 + n(x − x₀)| (or its mirror) for
//!   a singleton effective domain {x₀}: converges to f, inf stays exactly
//!   one below f(x₀);
//! * `TiltedCopy` — f_n = f ± x/n for a monotone base with finite infimum
//!   on an interval unbounded in the monotone direction: converges to f,
//!   inf drops to −∞.
//!
//! Every member is emitted as a validated spec on the base's interval, and
//! the reports check the members against the closed forms and the declared
//! infimum gap exactly.

use serde::Serialize;
use thiserror::Error;

use crate::convexfn::{
    Body, Breakpoint, ConvexFnSpec, DomCard, IntervalSpec, ProperBody, Tail,
};
use crate::extreal::{rational_serde, rat, rat_int, ExtReal, Rational};
use crate::stability::{StabilityReason, StabilityVerdict};
use num::ToPrimitive;

/// Which destabilizing construction a family uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    LinearDrift,
    SteepVee,
    ScaledVee,
    TiltedCopy,
}

/// A destabilizing sequence (f_n) for an unstable base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFamily {
    pub kind: FamilyKind,
    pub anchor_x0: Option<Rational>,
    pub tilt_sign: Option<i8>,
    pub base: ConvexFnSpec,
}

/// Why a witness request was refused.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("the verdict is stable; no destabilizing sequence exists")]
    NotUnstable,
    #[error("verdict does not match the spec it claims to describe")]
    VerdictMismatch,
    #[error("no tilt direction works: the monotone direction does not point toward an unbounded end")]
    NoTiltDirection,
    #[error("grid point lies outside the ambient interval")]
    GridOutsideC,
}

/// Exact member values of a family along a grid, checked against the
/// closed form and the claimed pointwise limit.
#[derive(Clone, Debug, Serialize)]
pub struct PointwiseRow {
    #[serde(with = "rational_serde")]
    pub x: Rational,
    pub base_value: ExtReal,
    pub values: Vec<ExtReal>,
    pub limit_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointwiseReport {
    pub schedule: Vec<u32>,
    pub rows: Vec<PointwiseRow>,
    pub pass: bool,
}

/// The family's declared infimum behavior for n ≥ n_min.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapClaim {
    /// Member infima are −∞ while the base infimum is not.
    DropsToMinusInfinity,
    /// Member infima equal base infimum − 1 exactly.
    UnitDrop,
    /// Member infima are exactly 0 while the base infimum is +∞.
    CollapsesToZero,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapRow {
    pub n: u32,
    pub inf: ExtReal,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub kind: FamilyKind,
    pub base_inf: ExtReal,
    pub claim: GapClaim,
    /// Smallest n whose member realizes the claim (vertex inside C).
    pub n_min: u32,
    pub rows: Vec<GapRow>,
    pub pass: bool,
}

/// Builds the destabilizing family certified by an unstable verdict.
pub fn generate(
    spec: &ConvexFnSpec,
    verdict: &StabilityVerdict,
) -> Result<WitnessFamily, WitnessError> {
    if verdict.stable || verdict.reason.is_stable() {
        return Err(WitnessError::NotUnstable);
    }
    let family = match verdict.reason {
        StabilityReason::EmptyDomUnstable => {
            if !matches!(spec.card_dom(), DomCard::Zero) {
                return Err(WitnessError::VerdictMismatch);
            }
            if spec.domain.is_bounded() {
                let mid = spec.domain.midpoint().expect("bounded interval has a midpoint");
                WitnessFamily {
                    kind: FamilyKind::ScaledVee,
                    anchor_x0: Some(mid),
                    tilt_sign: None,
                    base: spec.clone(),
                }
            } else {
                WitnessFamily {
                    kind: FamilyKind::LinearDrift,
                    anchor_x0: None,
                    tilt_sign: None,
                    base: spec.clone(),
                }
            }
        }
        StabilityReason::SingletonDomFiniteInfUnstable => {
            let x0 = match spec.card_dom() {
                DomCard::One(x) => x,
                _ => return Err(WitnessError::VerdictMismatch),
            };
            WitnessFamily {
                kind: FamilyKind::SteepVee,
                anchor_x0: Some(x0),
                tilt_sign: None,
                base: spec.clone(),
            }
        }
        StabilityReason::MonotoneFiniteInfUnstable => {
            let mono = spec.monotonicity_class();
            let tilt = if mono.is_nondecreasing() && spec.domain.lo.is_neg_inf() {
                1
            } else if mono.is_nonincreasing() && spec.domain.hi.is_pos_inf() {
                -1
            } else {
                return Err(WitnessError::NoTiltDirection);
            };
            WitnessFamily {
                kind: FamilyKind::TiltedCopy,
                anchor_x0: None,
                tilt_sign: Some(tilt),
                base: spec.clone(),
            }
        }
        _ => return Err(WitnessError::NotUnstable),
    };
    Ok(family)
}

impl WitnessFamily {
    /// The n-th member as a validated spec on the base's interval (n ≥ 1).
    pub fn member(&self, n: u32) -> ConvexFnSpec {
        assert!(n >= 1, "members are indexed from 1");
        let c = &self.base.domain;
        let nq = rat_int(i64::from(n));
        match self.kind {
            FamilyKind::LinearDrift => {
                let slope = self.drift_slope();
                // f_n(x) = slope·x + n, anchored at a canonical interior point.
                let a = interior_point(c);
                let va = &slope * &a + &nq;
                affine_on(c, &slope, &a, &va)
            }
            FamilyKind::SteepVee => {
                let x0 = self.anchor().clone();
                let v0 = self.anchor_value();
                let sigma = self.vee_sigma();
                // Vertex drifts toward x₀: w = x₀ − σ/n, value f(x₀) − 1.
                let w = &x0 - rat_int(i64::from(sigma)) / &nq;
                vee_on(c, &w, &(v0 - rat_int(1)), &nq)
            }
            FamilyKind::ScaledVee => {
                let x0 = self.anchor().clone();
                let w = &x0 - rat_int(1) / &nq;
                vee_on(c, &w, &rat_int(0), &(&nq * &nq))
            }
            FamilyKind::TiltedCopy => {
                let t = rat_int(i64::from(self.tilt())) / &nq;
                self.base.add_affine(&t)
            }
        }
    }

    /// Exact closed-form value of member n at x (the formula the member
    /// spec must reproduce).
    pub fn closed_form(&self, n: u32, x: &Rational) -> ExtReal {
        let nq = rat_int(i64::from(n));
        match self.kind {
            FamilyKind::LinearDrift => ExtReal::Finite(self.drift_slope() * x + &nq),
            FamilyKind::SteepVee => {
                let x0 = self.anchor();
                let v0 = self.anchor_value();
                let s = rat_int(i64::from(self.vee_sigma()));
                let arg = rat_int(1) + &nq * s * (x - x0);
                ExtReal::Finite(v0 - rat_int(1) + abs(arg))
            }
            FamilyKind::ScaledVee => {
                let x0 = self.anchor();
                let arg = rat_int(1) + &nq * (x - x0);
                ExtReal::Finite(&nq * abs(arg))
            }
            FamilyKind::TiltedCopy => {
                let t = rat_int(i64::from(self.tilt())) / &nq;
                let fx = self.base.eval(x).expect("grid point lies in C");
                fx.checked_add(&ExtReal::Finite(&t * x))
                    .expect("tilted bases never take −∞")
            }
        }
    }

    /// The pointwise limit of the closed form at x, to compare against the
    /// base value.
    pub fn pointwise_limit(&self, x: &Rational) -> ExtReal {
        match self.kind {
            FamilyKind::LinearDrift | FamilyKind::ScaledVee => ExtReal::PosInf,
            FamilyKind::SteepVee => {
                if x == self.anchor() {
                    ExtReal::Finite(self.anchor_value())
                } else {
                    ExtReal::PosInf
                }
            }
            FamilyKind::TiltedCopy => self.base.eval(x).expect("grid point lies in C"),
        }
    }

    /// Smallest n ≥ 1 whose member realizes the declared gap (for the vee
    /// families, the first n putting the vertex inside C).
    pub fn n_min(&self) -> u32 {
        match self.kind {
            FamilyKind::LinearDrift | FamilyKind::TiltedCopy => 1,
            FamilyKind::SteepVee | FamilyKind::ScaledVee => {
                let x0 = self.anchor();
                let sigma = if self.kind == FamilyKind::ScaledVee { 1 } else { self.vee_sigma() };
                if sigma > 0 {
                    match (&self.base.domain.lo, self.base.domain.lo_closed) {
                        (ExtReal::Finite(a), closed) => first_n_within(&(x0 - a), closed),
                        _ => 1,
                    }
                } else {
                    match (&self.base.domain.hi, self.base.domain.hi_closed) {
                        (ExtReal::Finite(b), closed) => first_n_within(&(b - x0), closed),
                        _ => 1,
                    }
                }
            }
        }
    }

    /// The declared infimum behavior.
    pub fn gap_claim(&self) -> GapClaim {
        match self.kind {
            FamilyKind::LinearDrift | FamilyKind::TiltedCopy => GapClaim::DropsToMinusInfinity,
            FamilyKind::SteepVee => GapClaim::UnitDrop,
            FamilyKind::ScaledVee => GapClaim::CollapsesToZero,
        }
    }

    /// Evaluates members on a grid across a schedule of n and checks each
    /// value against the closed form and the claimed limit.
    pub fn verify_pointwise(
        &self,
        grid: &[Rational],
        n_schedule: &[u32],
    ) -> Result<PointwiseReport, WitnessError> {
        for x in grid {
            if !self.base.domain.contains(x) {
                return Err(WitnessError::GridOutsideC);
            }
        }
        let members: Vec<ConvexFnSpec> =
            n_schedule.iter().map(|&n| self.member(n)).collect();
        let mut rows = Vec::with_capacity(grid.len());
        let mut pass = true;
        for x in grid {
            let base_value = self.base.eval(x).expect("grid checked above");
            let mut row_ok = self.pointwise_limit(x) == base_value;
            let mut values = Vec::with_capacity(members.len());
            for (member, &n) in members.iter().zip(n_schedule) {
                let got = member.eval(x).expect("members share the base interval");
                if got != self.closed_form(n, x) {
                    row_ok = false;
                }
                values.push(got);
            }
            pass &= row_ok;
            rows.push(PointwiseRow {
                x: x.clone(),
                base_value,
                values,
                limit_matches: row_ok,
            });
        }
        Ok(PointwiseReport { schedule: n_schedule.to_vec(), rows, pass })
    }

    /// Tabulates member infima along a schedule and checks the declared gap
    /// for every n ≥ n_min.
    pub fn inf_gap(&self, n_schedule: &[u32]) -> GapReport {
        let base_inf = self.base.infimum();
        let claim = self.gap_claim();
        let n_min = self.n_min();
        let mut rows = Vec::with_capacity(n_schedule.len());
        let mut pass = true;
        for &n in n_schedule {
            let inf = self.member(n).infimum();
            if n >= n_min {
                let ok = match claim {
                    GapClaim::DropsToMinusInfinity => {
                        inf == ExtReal::NegInf && base_inf != ExtReal::NegInf
                    }
                    GapClaim::UnitDrop => match &base_inf {
                        ExtReal::Finite(m) => inf == ExtReal::Finite(m - rat_int(1)),
                        _ => false,
                    },
                    GapClaim::CollapsesToZero => {
                        inf == ExtReal::from_int(0) && base_inf == ExtReal::PosInf
                    }
                };
                pass &= ok;
            }
            rows.push(GapRow { n, inf });
        }
        GapReport { kind: self.kind, base_inf, claim, n_min, rows, pass }
    }

    fn anchor(&self) -> &Rational {
        self.anchor_x0.as_ref().expect("vee families carry an anchor")
    }

    fn anchor_value(&self) -> Rational {
        match self.base.eval(self.anchor()).expect("anchor lies in C") {
            ExtReal::Finite(v) => v,
            _ => unreachable!("the anchor is the singleton effective domain"),
        }
    }

    fn tilt(&self) -> i8 {
        self.tilt_sign.expect("tilted copies carry a sign")
    }

    /// Drift slope: decrease toward whichever end of C is unbounded,
    /// preferring the left.
    fn drift_slope(&self) -> Rational {
        if self.base.domain.lo.is_neg_inf() {
            rat_int(1)
        } else {
            rat_int(-1)
        }
    }

    /// Vee orientation: vertex approaches the anchor from the left when
    /// there is room on that side, otherwise from the right.
    fn vee_sigma(&self) -> i8 {
        let x0 = ExtReal::Finite(self.anchor().clone());
        if x0 > self.base.domain.lo {
            1
        } else {
            -1
        }
    }
}

/// |q| for rationals.
fn abs(q: Rational) -> Rational {
    if q < rat_int(0) {
        -q
    } else {
        q
    }
}

/// Smallest n ≥ 1 with 1/n ≤ d (closed) or 1/n < d (open), d > 0.
fn first_n_within(d: &Rational, closed: bool) -> u32 {
    let inv = d.recip();
    let big = if closed { inv.ceil().to_integer() } else { inv.floor().to_integer() + 1 };
    big.to_u32().unwrap_or(u32::MAX).max(1)
}

/// A canonical point strictly inside a nondegenerate interval.
pub(crate) fn interior_point(c: &IntervalSpec) -> Rational {
    match (&c.lo, &c.hi) {
        (ExtReal::NegInf, ExtReal::PosInf) => rat_int(0),
        (ExtReal::NegInf, ExtReal::Finite(b)) => b - rat_int(1),
        (ExtReal::Finite(a), ExtReal::PosInf) => a + rat_int(1),
        (ExtReal::Finite(a), ExtReal::Finite(b)) => (a + b) / rat_int(2),
        _ => unreachable!("validated intervals have lo < hi"),
    }
}

/// The line through (x_ref, v_ref) with the given slope, restricted to C.
fn affine_on(c: &IntervalSpec, slope: &Rational, x_ref: &Rational, v_ref: &Rational) -> ConvexFnSpec {
    let a = interior_point(c);
    let va = v_ref + slope * (&a - x_ref);
    ConvexFnSpec::new(
        c.clone(),
        Body::Proper(ProperBody {
            breakpoints: vec![Breakpoint::new(a, va)],
            left_tail: Tail::Slope { slope: slope.clone(), extent: c.lo.clone() },
            right_tail: Tail::Slope { slope: slope.clone(), extent: c.hi.clone() },
            left_endpoint_override: None,
            right_endpoint_override: None,
        }),
    )
}

/// x ↦ v_w + s·|x − w| restricted to C (s > 0). When the vertex w falls
/// outside C the restriction is a single affine piece.
fn vee_on(c: &IntervalSpec, w: &Rational, v_w: &Rational, s: &Rational) -> ConvexFnSpec {
    let we = ExtReal::Finite(w.clone());
    if c.contains(w) {
        let left_tail = if c.lo < we {
            Tail::Slope { slope: -s, extent: c.lo.clone() }
        } else {
            Tail::CutOff
        };
        let right_tail = if c.hi > we {
            Tail::Slope { slope: s.clone(), extent: c.hi.clone() }
        } else {
            Tail::CutOff
        };
        ConvexFnSpec::new(
            c.clone(),
            Body::Proper(ProperBody {
                breakpoints: vec![Breakpoint::new(w.clone(), v_w.clone())],
                left_tail,
                right_tail,
                left_endpoint_override: None,
                right_endpoint_override: None,
            }),
        )
    } else if we <= c.lo {
        // C lies entirely right of the vertex: ascending arm.
        affine_on(c, s, w, v_w)
    } else {
        // C lies entirely left of the vertex: descending arm.
        affine_on(c, &-s, w, v_w)
    }
}

/// A deterministic grid of `count` distinct points of C (count ≥ 2),
/// ascending. Bounded intervals are sampled uniformly with open endpoints
/// nudged inward; unbounded directions are sampled at step 1/8 from a
/// canonical reference point.
pub fn grid_points(c: &IntervalSpec, count: u32) -> Vec<Rational> {
    assert!(count >= 2);
    let eighth = rat(1, 8);
    match (&c.lo, &c.hi) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => {
            let step = (b - a) / rat_int(i64::from(count) - 1);
            let mut pts: Vec<Rational> =
                (0..count).map(|k| a + &step * rat_int(i64::from(k))).collect();
            if !c.lo_closed {
                pts[0] = a + &step / rat_int(4);
            }
            if !c.hi_closed {
                let last = pts.len() - 1;
                pts[last] = b - &step / rat_int(4);
            }
            pts
        }
        (ExtReal::NegInf, ExtReal::PosInf) => {
            let half = i64::from(count - 1) / 2;
            (0..count)
                .map(|k| rat_int(i64::from(k) - half) * &eighth)
                .collect()
        }
        (ExtReal::NegInf, ExtReal::Finite(b)) => {
            let offset = if c.hi_closed { 0 } else { 1 };
            let mut pts: Vec<Rational> = (0..count)
                .map(|k| b - rat_int(i64::from(k) + offset) * &eighth)
                .collect();
            pts.reverse();
            pts
        }
        (ExtReal::Finite(a), ExtReal::PosInf) => {
            let offset = if c.lo_closed { 0 } else { 1 };
            (0..count)
                .map(|k| a + rat_int(i64::from(k) + offset) * &eighth)
                .collect()
        }
        _ => unreachable!("validated intervals have lo < hi"),
    }
}
