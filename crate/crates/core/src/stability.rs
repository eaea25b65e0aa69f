//! The decision procedure for infimum-stability under pointwise
//! convergence.
//!
//! A function f is infimum-stable when every sequence of convex functions
//! on C converging to f pointwise drags its infima along: inf f_n → inf f.
//! On an interval of the line this is decidable from three exact facts
//! about f — its infimum, the cardinality of its effective domain, and its
//! monotonicity over C — together with which endpoints of C are finite:
//!
//! stable ⇔ inf f = −∞, or card dom f > 1 and f fails to be monotone in
//! every direction that C leaves unbounded (nondecreasing matters only when
//! C is unbounded below, nonincreasing only when C is unbounded above).
//!
//! The four endpoint-finiteness cases are reported as specializations; the
//! reason code names the clause that decided the verdict.

use serde::Serialize;
use thiserror::Error;

use crate::convexfn::{Body, ConvexFnSpec, DomCard};
use crate::extreal::ExtReal;

/// Which endpoint-finiteness case of the criterion applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Specialization {
    /// C unbounded on both sides.
    Theorem1,
    /// C bounded on both sides.
    Cor1,
    /// C unbounded below, bounded above.
    Cor2,
    /// C bounded below, unbounded above.
    Cor3,
}

/// The clause that decided the verdict. The first five are the stable
/// clauses; the last three negate the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StabilityReason {
    InfIsMinusInfinity,
    NonMonotonicManyDom,
    ManyDomBoundedC,
    ManyDomNotNondecreasing,
    ManyDomNotNonincreasing,
    EmptyDomUnstable,
    SingletonDomFiniteInfUnstable,
    MonotoneFiniteInfUnstable,
}

impl StabilityReason {
    pub fn is_stable(self) -> bool {
        matches!(
            self,
            StabilityReason::InfIsMinusInfinity
                | StabilityReason::NonMonotonicManyDom
                | StabilityReason::ManyDomBoundedC
                | StabilityReason::ManyDomNotNondecreasing
                | StabilityReason::ManyDomNotNonincreasing
        )
    }
}

/// Outcome of the stability decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub reason: StabilityReason,
    pub specialization: Specialization,
}

/// Raised by [`check_bounded_real_valued`] outside its precondition set.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("requires a bounded interval and a function staying above −∞")]
pub struct PreconditionViolated;

/// Decides infimum-stability of a validated spec.
pub fn check(spec: &ConvexFnSpec) -> StabilityVerdict {
    let specialization = match (spec.domain.lo.is_finite(), spec.domain.hi.is_finite()) {
        (false, false) => Specialization::Theorem1,
        (true, true) => Specialization::Cor1,
        (false, true) => Specialization::Cor2,
        (true, false) => Specialization::Cor3,
    };
    let verdict = |stable: bool, reason: StabilityReason| StabilityVerdict {
        stable,
        reason,
        specialization,
    };

    if spec.infimum() == ExtReal::NegInf {
        return verdict(true, StabilityReason::InfIsMinusInfinity);
    }
    match spec.card_dom() {
        DomCard::Zero => return verdict(false, StabilityReason::EmptyDomUnstable),
        DomCard::One(_) => {
            return verdict(false, StabilityReason::SingletonDomFiniteInfUnstable)
        }
        DomCard::Many => {}
    }
    let mono = spec.monotonicity_class();
    match specialization {
        Specialization::Theorem1 => {
            if !mono.is_nondecreasing() && !mono.is_nonincreasing() {
                verdict(true, StabilityReason::NonMonotonicManyDom)
            } else {
                verdict(false, StabilityReason::MonotoneFiniteInfUnstable)
            }
        }
        Specialization::Cor1 => verdict(true, StabilityReason::ManyDomBoundedC),
        Specialization::Cor2 => {
            if !mono.is_nondecreasing() {
                verdict(true, StabilityReason::ManyDomNotNondecreasing)
            } else {
                verdict(false, StabilityReason::MonotoneFiniteInfUnstable)
            }
        }
        Specialization::Cor3 => {
            if !mono.is_nonincreasing() {
                verdict(true, StabilityReason::ManyDomNotNonincreasing)
            } else {
                verdict(false, StabilityReason::MonotoneFiniteInfUnstable)
            }
        }
    }
}

/// Shortcut criterion for bounded C and f > −∞: stability is equivalent to
/// the effective domain having more than one point. Always agrees with
/// [`check`] on its precondition set.
pub fn check_bounded_real_valued(
    spec: &ConvexFnSpec,
) -> Result<StabilityVerdict, PreconditionViolated> {
    if !spec.domain.is_bounded() || matches!(spec.body, Body::Improper(_)) {
        return Err(PreconditionViolated);
    }
    let reason = match spec.card_dom() {
        DomCard::Many => StabilityReason::ManyDomBoundedC,
        DomCard::One(_) => StabilityReason::SingletonDomFiniteInfUnstable,
        DomCard::Zero => StabilityReason::EmptyDomUnstable,
    };
    Ok(StabilityVerdict {
        stable: reason.is_stable(),
        reason,
        specialization: Specialization::Cor1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexfn::{Breakpoint, ImproperBody, IntervalSpec, ProperBody, Tail};
    use crate::extreal::rat_int;

    fn proper(
        domain: IntervalSpec,
        breakpoints: Vec<Breakpoint>,
        left_tail: Tail,
        right_tail: Tail,
    ) -> ConvexFnSpec {
        let f = ConvexFnSpec::new(
            domain,
            Body::Proper(ProperBody {
                breakpoints,
                left_tail,
                right_tail,
                left_endpoint_override: None,
                right_endpoint_override: None,
            }),
        );
        f.validate().expect("test specs are valid");
        f
    }

    fn abs_on_line() -> ConvexFnSpec {
        proper(
            IntervalSpec::real_line(),
            vec![Breakpoint::new(rat_int(0), rat_int(0))],
            Tail::Slope { slope: rat_int(-1), extent: ExtReal::NegInf },
            Tail::Slope { slope: rat_int(1), extent: ExtReal::PosInf },
        )
    }

    #[test]
    fn vee_shape_on_the_line_is_stable() {
        let v = check(&abs_on_line());
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::NonMonotonicManyDom);
        assert_eq!(v.specialization, Specialization::Theorem1);
    }

    #[test]
    fn unbounded_below_infimum_is_stable() {
        let f = proper(
            IntervalSpec::real_line(),
            vec![Breakpoint::new(rat_int(0), rat_int(0))],
            Tail::Slope { slope: rat_int(1), extent: ExtReal::NegInf },
            Tail::Slope { slope: rat_int(1), extent: ExtReal::PosInf },
        );
        let v = check(&f);
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::InfIsMinusInfinity);
    }

    #[test]
    fn hinge_on_the_line_is_unstable() {
        // f = max(0, x): nondecreasing with finite infimum.
        let f = proper(
            IntervalSpec::real_line(),
            vec![Breakpoint::new(rat_int(0), rat_int(0))],
            Tail::Slope { slope: rat_int(0), extent: ExtReal::NegInf },
            Tail::Slope { slope: rat_int(1), extent: ExtReal::PosInf },
        );
        let v = check(&f);
        assert!(!v.stable);
        assert_eq!(v.reason, StabilityReason::MonotoneFiniteInfUnstable);
    }

    #[test]
    fn identically_plus_infinite_is_unstable() {
        let f = ConvexFnSpec::new(IntervalSpec::real_line(), Body::Empty);
        let v = check(&f);
        assert!(!v.stable);
        assert_eq!(v.reason, StabilityReason::EmptyDomUnstable);
    }

    #[test]
    fn linear_on_bounded_interval_is_stable() {
        let f = proper(
            IntervalSpec::bounded(rat_int(0), true, rat_int(1), true),
            vec![Breakpoint::new(rat_int(0), rat_int(0)), Breakpoint::new(rat_int(1), rat_int(1))],
            Tail::CutOff,
            Tail::CutOff,
        );
        let v = check(&f);
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::ManyDomBoundedC);
        assert_eq!(v.specialization, Specialization::Cor1);
    }

    #[test]
    fn monotone_direction_matters_only_toward_an_infinite_end() {
        let half_line = IntervalSpec {
            lo: ExtReal::NegInf,
            lo_closed: false,
            hi: ExtReal::from_int(0),
            hi_closed: true,
        };
        // Nondecreasing toward the unbounded left end: unstable.
        let up = proper(
            half_line.clone(),
            vec![Breakpoint::new(rat_int(0), rat_int(1))],
            Tail::Slope { slope: rat_int(0), extent: ExtReal::NegInf },
            Tail::CutOff,
        );
        let v = check(&up);
        assert!(!v.stable);
        assert_eq!(v.reason, StabilityReason::MonotoneFiniteInfUnstable);
        assert_eq!(v.specialization, Specialization::Cor2);

        // Nonincreasing on the same interval: stable, the finite right
        // endpoint forgives that direction.
        let down = proper(
            half_line,
            vec![Breakpoint::new(rat_int(0), rat_int(0))],
            Tail::Slope { slope: rat_int(-1), extent: ExtReal::NegInf },
            Tail::CutOff,
        );
        let v = check(&down);
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::ManyDomNotNondecreasing);

        // Mirror image on the right half-line.
        let v = check(&down.flip_x());
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::ManyDomNotNonincreasing);
        assert_eq!(v.specialization, Specialization::Cor3);
    }

    #[test]
    fn singleton_domain_with_finite_value_is_unstable() {
        let f = proper(
            IntervalSpec::real_line(),
            vec![Breakpoint::new(rat_int(0), rat_int(1))],
            Tail::CutOff,
            Tail::CutOff,
        );
        let v = check(&f);
        assert!(!v.stable);
        assert_eq!(v.reason, StabilityReason::SingletonDomFiniteInfUnstable);
    }

    #[test]
    fn improper_functions_are_stable() {
        let f = ConvexFnSpec::new(
            IntervalSpec::real_line(),
            Body::Improper(ImproperBody {
                minus_inf_lo: ExtReal::from_int(0),
                minus_inf_hi: ExtReal::from_int(0),
                left_edge_value: ExtReal::PosInf,
                right_edge_value: ExtReal::PosInf,
            }),
        );
        let v = check(&f);
        assert!(v.stable);
        assert_eq!(v.reason, StabilityReason::InfIsMinusInfinity);
    }

    #[test]
    fn constant_on_the_line_is_unstable() {
        // Constant is monotone both ways; C leaves both directions open.
        let f = proper(
            IntervalSpec::real_line(),
            vec![Breakpoint::new(rat_int(0), rat_int(2))],
            Tail::Slope { slope: rat_int(0), extent: ExtReal::NegInf },
            Tail::Slope { slope: rat_int(0), extent: ExtReal::PosInf },
        );
        let v = check(&f);
        assert!(!v.stable);
        assert_eq!(v.reason, StabilityReason::MonotoneFiniteInfUnstable);
    }

    #[test]
    fn bounded_shortcut_agrees_and_guards_its_preconditions() {
        let f = proper(
            IntervalSpec::bounded(rat_int(0), true, rat_int(1), true),
            vec![Breakpoint::new(rat_int(0), rat_int(0)), Breakpoint::new(rat_int(1), rat_int(1))],
            Tail::CutOff,
            Tail::CutOff,
        );
        assert_eq!(check_bounded_real_valued(&f).unwrap(), check(&f));

        let empty = ConvexFnSpec::new(
            IntervalSpec::bounded(rat_int(0), true, rat_int(1), true),
            Body::Empty,
        );
        let v = check_bounded_real_valued(&empty).unwrap();
        assert!(!v.stable);
        assert_eq!(v, check(&empty));

        assert_eq!(check_bounded_real_valued(&abs_on_line()), Err(PreconditionViolated));
        let improper = ConvexFnSpec::new(
            IntervalSpec::bounded(rat_int(0), true, rat_int(1), true),
            Body::Improper(ImproperBody {
                minus_inf_lo: ExtReal::from_int(0),
                minus_inf_hi: ExtReal::from_int(1),
                left_edge_value: ExtReal::PosInf,
                right_edge_value: ExtReal::PosInf,
            }),
        );
        assert_eq!(check_bounded_real_valued(&improper), Err(PreconditionViolated));
    }

    #[test]
    fn verdict_serializes_with_reason_and_specialization_names() {
        let v = check(&abs_on_line());
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"stable":true,"reason":"NonMonotonicManyDom","specialization":"theorem1"}"#
        );
    }
}
