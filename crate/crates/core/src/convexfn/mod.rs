//! The representable class of extended-real convex functions on an interval
//! of the line, and exact decision procedures over it.
//!
//! A spec describes a convex f: C → [−∞, +∞] where C is a nondegenerate
//! interval. Three body kinds cover every convex function this crate can
//! state exactly:
//!
//! * `Empty` — f ≡ +∞ on C (empty effective domain);
//! * `Improper` — f = −∞ on the interior of a subinterval of C, arbitrary
//!   values > −∞ at that subinterval's closure points when they lie in C,
//!   and +∞ elsewhere (a degenerate subinterval means a single −∞ point);
//! * `Proper` — finite piecewise-linear data: breakpoints joined by chords,
//!   affine or cut-off tails, and optional upward value jumps at the
//!   endpoints of the finite part.
//!
//! Convexity of the epigraph forces this shape, so the class is closed under
//! every construction the rest of the crate performs. All predicates
//! (validity, evaluation, infimum, monotonicity, sublevel sets, coercivity)
//! are decided exactly in rational arithmetic.

mod analysis;
mod profile;
mod transform;

pub use transform::NotFinitePlf;
pub(crate) use transform::{plf_slope_left_of, plf_slope_right_of};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extreal::{rational_serde, ExtReal, Rational};

/// A nondegenerate interval of the line. Infinite endpoints are never
/// closed; `lo < hi` always holds for a valid interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub lo: ExtReal,
    pub lo_closed: bool,
    pub hi: ExtReal,
    pub hi_closed: bool,
}

impl IntervalSpec {
    /// The whole line (−∞, +∞).
    pub fn real_line() -> Self {
        IntervalSpec {
            lo: ExtReal::NegInf,
            lo_closed: false,
            hi: ExtReal::PosInf,
            hi_closed: false,
        }
    }

    /// A bounded interval with the given closure flags.
    pub fn bounded(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Self {
        IntervalSpec {
            lo: ExtReal::Finite(lo),
            lo_closed,
            hi: ExtReal::Finite(hi),
            hi_closed,
        }
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.lo >= self.hi {
            return Err(ValidationError::MalformedInterval(
                "interval endpoints must satisfy lo < hi",
            ));
        }
        if (!self.lo.is_finite() && self.lo_closed) || (!self.hi.is_finite() && self.hi_closed) {
            return Err(ValidationError::MalformedInterval(
                "an infinite endpoint cannot be closed",
            ));
        }
        Ok(())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let x = ExtReal::Finite(x.clone());
        let above_lo = x > self.lo || (self.lo_closed && x == self.lo);
        let below_hi = x < self.hi || (self.hi_closed && x == self.hi);
        above_lo && below_hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_real_line(&self) -> bool {
        self.lo.is_neg_inf() && self.hi.is_pos_inf()
    }

    /// Midpoint of a bounded interval.
    pub fn midpoint(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => Some((a + b) / crate::extreal::rat_int(2)),
            _ => None,
        }
    }
}

/// One vertex of the piecewise-linear part: f(x) = v.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakpoint {
    #[serde(with = "rational_serde")]
    pub x: Rational,
    #[serde(with = "rational_serde")]
    pub v: Rational,
}

impl Breakpoint {
    pub fn new(x: Rational, v: Rational) -> Self {
        Breakpoint { x, v }
    }
}

/// How the finite part continues beyond the outermost breakpoint.
///
/// `CutOff` means f = +∞ strictly beyond that breakpoint. `Slope` means an
/// affine piece with the given slope extending to `extent` (an infinite
/// extent gives an unbounded tail; a finite extent is the last coordinate
/// the affine piece covers, subject to the endpoint override below).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tail {
    #[serde(rename = "cutoff")]
    CutOff,
    Slope {
        #[serde(with = "rational_serde")]
        slope: Rational,
        extent: ExtReal,
    },
}

/// Body of an improper spec: f = −∞ on the interior of
/// `[minus_inf_lo, minus_inf_hi]`, the stated edge values (always > −∞) at
/// the closure points when they lie in C, and +∞ on the rest of C. Equal
/// endpoints mean a single point where f = −∞.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImproperBody {
    pub minus_inf_lo: ExtReal,
    pub minus_inf_hi: ExtReal,
    #[serde(default = "pos_inf")]
    pub left_edge_value: ExtReal,
    #[serde(default = "pos_inf")]
    pub right_edge_value: ExtReal,
}

fn pos_inf() -> ExtReal {
    ExtReal::PosInf
}

/// Body of a proper spec: strictly increasing breakpoints joined by chords,
/// a tail on each side, and optional upward value jumps at the endpoints of
/// the finite part (override value +∞ excludes the endpoint from the
/// effective domain).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperBody {
    pub breakpoints: Vec<Breakpoint>,
    pub left_tail: Tail,
    pub right_tail: Tail,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_endpoint_override: Option<ExtReal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_endpoint_override: Option<ExtReal>,
}

/// The three body kinds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Empty,
    Improper(ImproperBody),
    Proper(ProperBody),
}

/// A convex extended-real function on an interval of the line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexFnSpec {
    pub domain: IntervalSpec,
    pub body: Body,
}

/// Cardinality of the effective domain {x ∈ C : f(x) < +∞}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomCard {
    Zero,
    One(Rational),
    Many,
}

/// Monotonicity of f over all of C, in the extended-real order. Constant
/// means both nondecreasing and nonincreasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotonicityClass {
    NondecreasingOnly,
    NonincreasingOnly,
    Constant,
    NonMonotonic,
}

impl MonotonicityClass {
    pub fn is_nondecreasing(self) -> bool {
        matches!(self, MonotonicityClass::NondecreasingOnly | MonotonicityClass::Constant)
    }

    pub fn is_nonincreasing(self) -> bool {
        matches!(self, MonotonicityClass::NonincreasingOnly | MonotonicityClass::Constant)
    }
}

/// A sublevel set {x ∈ C : f(x) ≤ c}: empty, a single point, or an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SublevelSet {
    Empty,
    Point(Rational),
    Interval(IntervalSpec),
}

/// First violated invariant found by [`ConvexFnSpec::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("malformed interval: {0}")]
    MalformedInterval(&'static str),
    #[error("a proper body needs at least one breakpoint")]
    EmptyBreakpoints,
    #[error("breakpoint abscissae must be strictly increasing")]
    BreakpointsNotIncreasing,
    #[error("slopes must be nondecreasing left to right for a convex epigraph")]
    NonConvexSlopes,
    #[error("endpoint override must strictly exceed the one-sided limit of the finite part")]
    DownwardEndpointJump,
    #[error("spec data lies outside the ambient interval")]
    IntervalNotContained,
    #[error("malformed tail: {0}")]
    MalformedTail(&'static str),
    #[error("endpoint override given where the finite part has no endpoint in C")]
    OverrideOutsideDomain,
    #[error("two overrides target the same single-point finite part")]
    ConflictingOverrides,
    #[error("improper edge values must be greater than −∞")]
    InvalidEdgeValue,
}

/// Evaluation outside the ambient interval C.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("point {0} lies outside the ambient interval")]
pub struct OutsideAmbientSet(pub Rational);

/// Operation defined only for specs with C = ℝ.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("operation requires the ambient interval to be the whole line")]
pub struct DomainNotR;

/// Which side of the finite part a boundary or tail belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

/// Location of one endpoint of the finite part of a proper body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum DomBoundary {
    /// The finite part extends to the infinite end of C.
    Unbounded,
    /// The finite part stops at `x`; `in_c` says whether `x` belongs to C.
    At { x: Rational, in_c: bool },
}

impl ProperBody {
    pub(crate) fn first(&self) -> &Breakpoint {
        &self.breakpoints[0]
    }

    pub(crate) fn last(&self) -> &Breakpoint {
        self.breakpoints.last().expect("validated body has breakpoints")
    }

    pub(crate) fn tail(&self, side: Side) -> &Tail {
        match side {
            Side::Left => &self.left_tail,
            Side::Right => &self.right_tail,
        }
    }

    pub(crate) fn override_value(&self, side: Side) -> Option<&ExtReal> {
        match side {
            Side::Left => self.left_endpoint_override.as_ref(),
            Side::Right => self.right_endpoint_override.as_ref(),
        }
    }

    pub(crate) fn outer_breakpoint(&self, side: Side) -> &Breakpoint {
        match side {
            Side::Left => self.first(),
            Side::Right => self.last(),
        }
    }

    /// Endpoint of the finite part on the given side.
    pub(crate) fn boundary(&self, interval: &IntervalSpec, side: Side) -> DomBoundary {
        match self.tail(side) {
            Tail::CutOff => DomBoundary::At {
                x: self.outer_breakpoint(side).x.clone(),
                in_c: true,
            },
            Tail::Slope { extent, .. } => match extent {
                ExtReal::Finite(e) => DomBoundary::At {
                    x: e.clone(),
                    in_c: interval.contains(e),
                },
                _ => DomBoundary::Unbounded,
            },
        }
    }

    /// One-sided limit of the piecewise-linear part at the boundary on the
    /// given side. Only meaningful for a bounded side.
    pub(crate) fn boundary_limit(&self, side: Side) -> Option<Rational> {
        let bp = self.outer_breakpoint(side);
        match self.tail(side) {
            Tail::CutOff => Some(bp.v.clone()),
            Tail::Slope { slope, extent } => match extent {
                ExtReal::Finite(e) => Some(&bp.v + slope * (e - &bp.x)),
                _ => None,
            },
        }
    }

    /// Value at breakpoint `i`, honoring an override that targets it (which
    /// happens only when the adjacent tail is `CutOff`).
    pub(crate) fn value_at_breakpoint(&self, i: usize) -> ExtReal {
        let k = self.breakpoints.len();
        if i == 0 && matches!(self.left_tail, Tail::CutOff) {
            if let Some(w) = &self.left_endpoint_override {
                return w.clone();
            }
        }
        if i + 1 == k && matches!(self.right_tail, Tail::CutOff) {
            if let Some(w) = &self.right_endpoint_override {
                return w.clone();
            }
        }
        ExtReal::Finite(self.breakpoints[i].v.clone())
    }

    /// Value at a finite `Slope` extent point, honoring the override there.
    pub(crate) fn extent_point_value(&self, side: Side) -> ExtReal {
        if let Some(w) = self.override_value(side) {
            return w.clone();
        }
        ExtReal::Finite(self.boundary_limit(side).expect("extent point exists"))
    }

    /// Piecewise-linear value ignoring overrides: chords on breakpoints,
    /// affine tails on their extents (inclusive), +∞ beyond.
    pub(crate) fn raw_value(&self, x: &Rational) -> ExtReal {
        let xs = &self.breakpoints;
        let first = self.first();
        let last = self.last();
        if *x < first.x {
            return match &self.left_tail {
                Tail::CutOff => ExtReal::PosInf,
                Tail::Slope { slope, extent } => {
                    if ExtReal::Finite(x.clone()) < *extent {
                        ExtReal::PosInf
                    } else {
                        ExtReal::Finite(&first.v + slope * (x - &first.x))
                    }
                }
            };
        }
        if *x > last.x {
            return match &self.right_tail {
                Tail::CutOff => ExtReal::PosInf,
                Tail::Slope { slope, extent } => {
                    if ExtReal::Finite(x.clone()) > *extent {
                        ExtReal::PosInf
                    } else {
                        ExtReal::Finite(&last.v + slope * (x - &last.x))
                    }
                }
            };
        }
        // x within the breakpoint hull; find the chord or the exact vertex.
        let j = xs.partition_point(|bp| bp.x < *x);
        if j < xs.len() && xs[j].x == *x {
            return ExtReal::Finite(xs[j].v.clone());
        }
        let a = &xs[j - 1];
        let b = &xs[j];
        let slope = (&b.v - &a.v) / (&b.x - &a.x);
        ExtReal::Finite(&a.v + &slope * (x - &a.x))
    }
}

impl ConvexFnSpec {
    pub fn new(domain: IntervalSpec, body: Body) -> Self {
        ConvexFnSpec { domain, body }
    }

    /// Checks every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<(), ValidationError> {
        self.domain.validate()?;
        match &self.body {
            Body::Empty => Ok(()),
            Body::Improper(b) => self.validate_improper(b),
            Body::Proper(b) => self.validate_proper(b),
        }
    }

    fn validate_improper(&self, b: &ImproperBody) -> Result<(), ValidationError> {
        if b.minus_inf_lo > b.minus_inf_hi {
            return Err(ValidationError::MalformedInterval(
                "the −∞ region must have lo ≤ hi",
            ));
        }
        if b.minus_inf_lo == b.minus_inf_hi {
            // Single −∞ point; it must be a finite member of C.
            match &b.minus_inf_lo {
                ExtReal::Finite(x) if self.domain.contains(x) => {}
                _ => return Err(ValidationError::IntervalNotContained),
            }
        } else {
            if b.minus_inf_lo < self.domain.lo || b.minus_inf_hi > self.domain.hi {
                return Err(ValidationError::IntervalNotContained);
            }
        }
        if b.left_edge_value.is_neg_inf() || b.right_edge_value.is_neg_inf() {
            return Err(ValidationError::InvalidEdgeValue);
        }
        Ok(())
    }

    fn validate_proper(&self, b: &ProperBody) -> Result<(), ValidationError> {
        let bps = &b.breakpoints;
        if bps.is_empty() {
            return Err(ValidationError::EmptyBreakpoints);
        }
        for w in bps.windows(2) {
            if w[0].x >= w[1].x {
                return Err(ValidationError::BreakpointsNotIncreasing);
            }
        }
        for bp in bps {
            if !self.domain.contains(&bp.x) {
                return Err(ValidationError::IntervalNotContained);
            }
        }

        // Tails: extents must point away from the breakpoint hull and stay
        // within the closure of C.
        if let Tail::Slope { extent, .. } = &b.left_tail {
            if *extent >= ExtReal::Finite(b.first().x.clone()) {
                return Err(ValidationError::MalformedTail(
                    "left extent must lie strictly left of the first breakpoint",
                ));
            }
            if *extent < self.domain.lo {
                return Err(ValidationError::IntervalNotContained);
            }
        }
        if let Tail::Slope { extent, .. } = &b.right_tail {
            if *extent <= ExtReal::Finite(b.last().x.clone()) {
                return Err(ValidationError::MalformedTail(
                    "right extent must lie strictly right of the last breakpoint",
                ));
            }
            if *extent > self.domain.hi {
                return Err(ValidationError::IntervalNotContained);
            }
        }

        // Slope ordering: left tail ≤ chords (nondecreasing) ≤ right tail.
        let mut prev: Option<Rational> = match &b.left_tail {
            Tail::Slope { slope, .. } => Some(slope.clone()),
            Tail::CutOff => None,
        };
        for w in bps.windows(2) {
            let chord = (&w[1].v - &w[0].v) / (&w[1].x - &w[0].x);
            if let Some(p) = &prev {
                if *p > chord {
                    return Err(ValidationError::NonConvexSlopes);
                }
            }
            prev = Some(chord);
        }
        if let Tail::Slope { slope, .. } = &b.right_tail {
            if let Some(p) = &prev {
                if *p > *slope {
                    return Err(ValidationError::NonConvexSlopes);
                }
            }
        }

        // Overrides: each needs a boundary point inside C and must jump
        // strictly upward from the one-sided limit there.
        for side in [Side::Left, Side::Right] {
            if let Some(w) = b.override_value(side) {
                match b.boundary(&self.domain, side) {
                    DomBoundary::Unbounded => return Err(ValidationError::OverrideOutsideDomain),
                    DomBoundary::At { in_c: false, .. } => {
                        return Err(ValidationError::OverrideOutsideDomain)
                    }
                    DomBoundary::At { in_c: true, .. } => {
                        let limit = b.boundary_limit(side).expect("bounded side has a limit");
                        if *w <= ExtReal::Finite(limit) {
                            return Err(ValidationError::DownwardEndpointJump);
                        }
                    }
                }
            }
        }
        let singleton = bps.len() == 1
            && matches!(b.left_tail, Tail::CutOff)
            && matches!(b.right_tail, Tail::CutOff);
        if singleton && b.left_endpoint_override.is_some() && b.right_endpoint_override.is_some() {
            return Err(ValidationError::ConflictingOverrides);
        }
        Ok(())
    }

    /// Exact value f(x). The point must lie in the ambient interval C.
    pub fn eval(&self, x: &Rational) -> Result<ExtReal, OutsideAmbientSet> {
        if !self.domain.contains(x) {
            return Err(OutsideAmbientSet(x.clone()));
        }
        let xe = ExtReal::Finite(x.clone());
        Ok(match &self.body {
            Body::Empty => ExtReal::PosInf,
            Body::Improper(b) => {
                if b.minus_inf_lo == b.minus_inf_hi {
                    if xe == b.minus_inf_lo {
                        ExtReal::NegInf
                    } else {
                        ExtReal::PosInf
                    }
                } else if xe > b.minus_inf_lo && xe < b.minus_inf_hi {
                    ExtReal::NegInf
                } else if xe == b.minus_inf_lo {
                    b.left_edge_value.clone()
                } else if xe == b.minus_inf_hi {
                    b.right_edge_value.clone()
                } else {
                    ExtReal::PosInf
                }
            }
            Body::Proper(b) => {
                // Boundary points carry overrides; everything else is the
                // raw piecewise-linear value.
                for side in [Side::Left, Side::Right] {
                    if let Tail::Slope { extent, .. } = b.tail(side) {
                        if xe == *extent {
                            return Ok(b.extent_point_value(side));
                        }
                    }
                }
                let k = b.breakpoints.len();
                if *x == b.first().x {
                    return Ok(b.value_at_breakpoint(0));
                }
                if *x == b.last().x {
                    return Ok(b.value_at_breakpoint(k - 1));
                }
                b.raw_value(x)
            }
        })
    }
}
