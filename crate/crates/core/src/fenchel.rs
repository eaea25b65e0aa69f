//! Exact conjugation g(t) = sup_x [t·x − f(x)] for specs on the whole
//! line, and the continuity check at t = 0.
//!
//! The conjugate of a representable spec is again representable. Each
//! corner of the closure of f's finite part (breakpoints and finite tail
//! extents, with limiting values) contributes the line t ↦ x·t − v, and g
//! is the upper envelope of those lines, cut off outside the attained
//! slope range when a tail of f is unbounded. A supremum never sees an
//! upward value jump at an endpoint, so overrides are ignored everywhere
//! except at an isolated domain point, where the jumped value is the only
//! value there is.

use serde::{Deserialize, Serialize};

use crate::convexfn::{
    Body, Breakpoint, ConvexFnSpec, DomCard, DomainNotR, ImproperBody, IntervalSpec,
    MonotonicityClass, ProperBody, Side, Tail,
};
use crate::extreal::{rat_int, ExtReal, Rational};

/// The conjugate g(t) = sup_x [t·x − f(x)] of a spec on the whole line,
/// packaged as a spec over the slope variable named in `variable` (always
/// "t"), itself on the whole line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugatePlf {
    pub variable: String,
    #[serde(flatten)]
    pub spec: ConvexFnSpec,
}

impl ConjugatePlf {
    /// Exact value g(t). The ambient interval is the whole line, so no
    /// point is out of range.
    pub fn eval(&self, t: &Rational) -> ExtReal {
        self.spec.eval(t).expect("conjugate's ambient interval is the whole line")
    }
}

/// Exact conjugate of a spec whose ambient interval is the whole line.
///
/// An everywhere-+∞ input gives g ≡ −∞ (supremum over nothing), and any
/// input with a −∞ point gives g ≡ +∞. Otherwise g is assembled from the
/// corner lines of the finite part; its own corners sit at the chord
/// slopes of f, and g = +∞ strictly beyond the slope of an unbounded tail.
pub fn conjugate(spec: &ConvexFnSpec) -> Result<ConjugatePlf, DomainNotR> {
    if !spec.domain.is_real_line() {
        return Err(DomainNotR);
    }
    let body = match &spec.body {
        Body::Empty => minus_inf_everywhere(),
        Body::Improper(_) => Body::Empty,
        Body::Proper(b) => match spec.card_dom() {
            DomCard::Zero => minus_inf_everywhere(),
            DomCard::One(x0) => match b.value_at_breakpoint(0) {
                ExtReal::Finite(w) => line_body(&x0, &w),
                _ => unreachable!("an isolated domain point has a finite value"),
            },
            DomCard::Many => envelope_body(b),
        },
    };
    let out = ConvexFnSpec::new(IntervalSpec::real_line(), body);
    debug_assert!(out.validate().is_ok(), "a conjugate always validates");
    Ok(ConjugatePlf { variable: "t".to_owned(), spec: out })
}

/// Whether g is continuous at 0 in the extended-real sense: both one-sided
/// limits at t = 0 equal g(0).
pub fn continuity_at_zero(conj: &ConjugatePlf) -> bool {
    let zero = rat_int(0);
    let v0 = conj.eval(&zero);
    let (left, right) = conj.spec.one_sided_limits(&zero);
    left == v0 && right == v0
}

/// Both sides of the implication "f takes a value below +∞ at more than
/// one point and is not monotone ⇒ its conjugate is continuous at 0".
/// `vacuous` marks a false premise, which never fails the check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FstarReport {
    pub premise: bool,
    pub continuous_at_zero: bool,
    pub vacuous: bool,
    pub pass: bool,
}

/// Evaluates the implication above for one spec on the whole line.
pub fn corollary_fstar_check(spec: &ConvexFnSpec) -> Result<FstarReport, DomainNotR> {
    let conj = conjugate(spec)?;
    let premise = spec.card_dom() == DomCard::Many
        && spec.monotonicity_class() == MonotonicityClass::NonMonotonic;
    let continuous = continuity_at_zero(&conj);
    Ok(FstarReport {
        premise,
        continuous_at_zero: continuous,
        vacuous: !premise,
        pass: !premise || continuous,
    })
}

fn minus_inf_everywhere() -> Body {
    Body::Improper(ImproperBody {
        minus_inf_lo: ExtReal::NegInf,
        minus_inf_hi: ExtReal::PosInf,
        left_edge_value: ExtReal::PosInf,
        right_edge_value: ExtReal::PosInf,
    })
}

/// The line t ↦ slope·t − v as a proper body on the whole line.
fn line_body(slope: &Rational, v: &Rational) -> Body {
    Body::Proper(ProperBody {
        breakpoints: vec![Breakpoint::new(rat_int(0), -v.clone())],
        left_tail: Tail::Slope { slope: slope.clone(), extent: ExtReal::NegInf },
        right_tail: Tail::Slope { slope: slope.clone(), extent: ExtReal::PosInf },
        left_endpoint_override: None,
        right_endpoint_override: None,
    })
}

/// Corners of the closure of the finite part with their limiting values:
/// the finite tail extents and every breakpoint, abscissae strictly
/// increasing left to right.
pub(crate) fn junctions(b: &ProperBody) -> Vec<(Rational, Rational)> {
    let mut out = Vec::with_capacity(b.breakpoints.len() + 2);
    if let Tail::Slope { extent: ExtReal::Finite(e), .. } = &b.left_tail {
        out.push((e.clone(), b.boundary_limit(Side::Left).expect("finite extent has a limit")));
    }
    for bp in &b.breakpoints {
        out.push((bp.x.clone(), bp.v.clone()));
    }
    if let Tail::Slope { extent: ExtReal::Finite(e), .. } = &b.right_tail {
        out.push((e.clone(), b.boundary_limit(Side::Right).expect("finite extent has a limit")));
    }
    out
}

/// Value at t of the line contributed by the corner (x, v).
fn line_at(corner: &(Rational, Rational), t: &Rational) -> Rational {
    &corner.0 * t - &corner.1
}

/// Abscissa where the lines of two corners with distinct x meet. This is
/// the chord slope of f between the corners.
fn intersect(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

/// Conjugate body for a proper input with more than one domain point.
fn envelope_body(b: &ProperBody) -> Body {
    let js = junctions(b);

    // An unbounded tail of slope s forces g = +∞ strictly beyond s: past
    // it the tail piece alone drives the supremum to +∞.
    let clip_lo = match &b.left_tail {
        Tail::Slope { slope, extent } if extent.is_neg_inf() => ExtReal::Finite(slope.clone()),
        _ => ExtReal::NegInf,
    };
    let clip_hi = match &b.right_tail {
        Tail::Slope { slope, extent } if extent.is_pos_inf() => ExtReal::Finite(slope.clone()),
        _ => ExtReal::PosInf,
    };
    if clip_lo == clip_hi {
        // f is affine on the whole line: g is finite at that one slope
        // only, and every corner line passes through the same point.
        let s = match clip_lo {
            ExtReal::Finite(s) => s,
            _ => unreachable!("equal clip bounds are finite"),
        };
        let v = line_at(&js[0], &s);
        return Body::Proper(ProperBody {
            breakpoints: vec![Breakpoint::new(s, v)],
            left_tail: Tail::CutOff,
            right_tail: Tail::CutOff,
            left_endpoint_override: None,
            right_endpoint_override: None,
        });
    }

    // Upper envelope of the corner lines, slopes strictly increasing. A
    // kink is where adjacent surviving lines meet; a line whose meeting
    // point with the incoming one sits at or before the previous kink is
    // tangent or buried and never surfaces.
    let mut hull: Vec<usize> = Vec::new();
    let mut kinks: Vec<Rational> = Vec::new();
    for i in 0..js.len() {
        while let Some(&top) = hull.last() {
            let t = intersect(&js[top], &js[i]);
            match kinks.last() {
                Some(k) if t <= *k => {
                    hull.pop();
                    kinks.pop();
                }
                _ => {
                    kinks.push(t);
                    break;
                }
            }
        }
        hull.push(i);
    }

    // Corners of g: the window ends when finite, plus every kink strictly
    // inside the window. Chord slopes of f never leave the attained slope
    // range, so nothing else is cut away.
    let mut ts: Vec<Rational> = Vec::new();
    if let ExtReal::Finite(s) = &clip_lo {
        ts.push(s.clone());
    }
    for t in &kinks {
        let te = ExtReal::Finite(t.clone());
        if clip_lo < te && te < clip_hi {
            ts.push(t.clone());
        }
    }
    if let ExtReal::Finite(s) = &clip_hi {
        ts.push(s.clone());
    }

    let breakpoints: Vec<Breakpoint> = ts
        .into_iter()
        .map(|t| {
            let v = js.iter().map(|j| line_at(j, &t)).max().expect("at least one corner");
            Breakpoint::new(t, v)
        })
        .collect();

    let left_tail = if clip_lo.is_finite() {
        Tail::CutOff
    } else {
        Tail::Slope { slope: js[0].0.clone(), extent: ExtReal::NegInf }
    };
    let right_tail = if clip_hi.is_finite() {
        Tail::CutOff
    } else {
        Tail::Slope { slope: js[js.len() - 1].0.clone(), extent: ExtReal::PosInf }
    };
    Body::Proper(ProperBody {
        breakpoints,
        left_tail,
        right_tail,
        left_endpoint_override: None,
        right_endpoint_override: None,
    })
}
