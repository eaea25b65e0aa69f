//! Structure-preserving rewrites of specs: extension of the ambient
//! interval to the whole line, value and coordinate shifts, reflection, and
//! pointwise addition of affine or piecewise-linear terms. Each rewrite
//! returns a new spec describing the transformed function exactly.

use thiserror::Error;

use super::{Body, Breakpoint, ConvexFnSpec, ImproperBody, IntervalSpec, ProperBody, Side, Tail};
use crate::extreal::{ExtReal, Rational};

/// The additive term handed to [`ConvexFnSpec::add_scaled_plf`] must be a
/// finite piecewise-linear function on the whole line.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("additive term must be finite piecewise-linear on the whole line")]
pub struct NotFinitePlf;

impl ConvexFnSpec {
    /// The canonical extension to C = ℝ: same values on C, +∞ elsewhere.
    /// A spec already on the whole line comes back unchanged.
    pub fn extend_to_line(&self) -> ConvexFnSpec {
        let c = &self.domain;
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => {
                let keep_edge = |endpoint: &ExtReal, value: &ExtReal| -> ExtReal {
                    match endpoint {
                        // An edge point that was outside C becomes a +∞
                        // point of the extension.
                        ExtReal::Finite(x) if !c.contains(x) => ExtReal::PosInf,
                        _ => value.clone(),
                    }
                };
                Body::Improper(ImproperBody {
                    minus_inf_lo: b.minus_inf_lo.clone(),
                    minus_inf_hi: b.minus_inf_hi.clone(),
                    left_edge_value: keep_edge(&b.minus_inf_lo, &b.left_edge_value),
                    right_edge_value: keep_edge(&b.minus_inf_hi, &b.right_edge_value),
                })
            }
            Body::Proper(b) => {
                let mut nb = b.clone();
                if let Tail::Slope { extent: ExtReal::Finite(e), .. } = &b.left_tail {
                    if !c.contains(e) {
                        nb.left_endpoint_override = Some(ExtReal::PosInf);
                    }
                }
                if let Tail::Slope { extent: ExtReal::Finite(e), .. } = &b.right_tail {
                    if !c.contains(e) {
                        nb.right_endpoint_override = Some(ExtReal::PosInf);
                    }
                }
                Body::Proper(nb)
            }
        };
        ConvexFnSpec::new(IntervalSpec::real_line(), body)
    }

    /// g = f + c (constant shift of all finite values).
    pub fn shift_values(&self, c: &Rational) -> ConvexFnSpec {
        let shift = |v: &ExtReal| -> ExtReal {
            match v {
                ExtReal::Finite(r) => ExtReal::Finite(r + c),
                other => other.clone(),
            }
        };
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => Body::Improper(ImproperBody {
                minus_inf_lo: b.minus_inf_lo.clone(),
                minus_inf_hi: b.minus_inf_hi.clone(),
                left_edge_value: shift(&b.left_edge_value),
                right_edge_value: shift(&b.right_edge_value),
            }),
            Body::Proper(b) => Body::Proper(ProperBody {
                breakpoints: b
                    .breakpoints
                    .iter()
                    .map(|bp| Breakpoint::new(bp.x.clone(), &bp.v + c))
                    .collect(),
                left_tail: b.left_tail.clone(),
                right_tail: b.right_tail.clone(),
                left_endpoint_override: b.left_endpoint_override.as_ref().map(&shift),
                right_endpoint_override: b.right_endpoint_override.as_ref().map(&shift),
            }),
        };
        ConvexFnSpec::new(self.domain.clone(), body)
    }

    /// g(x) = f(x − a) on the translated interval C + a.
    pub fn shift_x(&self, a: &Rational) -> ConvexFnSpec {
        let move_pt = |v: &ExtReal| -> ExtReal {
            match v {
                ExtReal::Finite(r) => ExtReal::Finite(r + a),
                other => other.clone(),
            }
        };
        let domain = IntervalSpec {
            lo: move_pt(&self.domain.lo),
            lo_closed: self.domain.lo_closed,
            hi: move_pt(&self.domain.hi),
            hi_closed: self.domain.hi_closed,
        };
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => Body::Improper(ImproperBody {
                minus_inf_lo: move_pt(&b.minus_inf_lo),
                minus_inf_hi: move_pt(&b.minus_inf_hi),
                left_edge_value: b.left_edge_value.clone(),
                right_edge_value: b.right_edge_value.clone(),
            }),
            Body::Proper(b) => Body::Proper(ProperBody {
                breakpoints: b
                    .breakpoints
                    .iter()
                    .map(|bp| Breakpoint::new(&bp.x + a, bp.v.clone()))
                    .collect(),
                left_tail: move_tail(&b.left_tail, &move_pt),
                right_tail: move_tail(&b.right_tail, &move_pt),
                left_endpoint_override: b.left_endpoint_override.clone(),
                right_endpoint_override: b.right_endpoint_override.clone(),
            }),
        };
        ConvexFnSpec::new(domain, body)
    }

    /// g(x) = f(−x) on the reflected interval −C.
    pub fn flip_x(&self) -> ConvexFnSpec {
        let domain = IntervalSpec {
            lo: self.domain.hi.neg(),
            lo_closed: self.domain.hi_closed,
            hi: self.domain.lo.neg(),
            hi_closed: self.domain.lo_closed,
        };
        let flip_tail = |t: &Tail| -> Tail {
            match t {
                Tail::CutOff => Tail::CutOff,
                Tail::Slope { slope, extent } => {
                    Tail::Slope { slope: -slope, extent: extent.neg() }
                }
            }
        };
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => Body::Improper(ImproperBody {
                minus_inf_lo: b.minus_inf_hi.neg(),
                minus_inf_hi: b.minus_inf_lo.neg(),
                left_edge_value: b.right_edge_value.clone(),
                right_edge_value: b.left_edge_value.clone(),
            }),
            Body::Proper(b) => Body::Proper(ProperBody {
                breakpoints: b
                    .breakpoints
                    .iter()
                    .rev()
                    .map(|bp| Breakpoint::new(-&bp.x, bp.v.clone()))
                    .collect(),
                left_tail: flip_tail(&b.right_tail),
                right_tail: flip_tail(&b.left_tail),
                left_endpoint_override: b.right_endpoint_override.clone(),
                right_endpoint_override: b.left_endpoint_override.clone(),
            }),
        };
        ConvexFnSpec::new(domain, body)
    }

    /// g(x) = f(x) + t·x on the same interval.
    pub fn add_affine(&self, t: &Rational) -> ConvexFnSpec {
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => {
                let tilt_edge = |endpoint: &ExtReal, value: &ExtReal| -> ExtReal {
                    match (endpoint, value) {
                        (ExtReal::Finite(x), ExtReal::Finite(v)) => ExtReal::Finite(v + t * x),
                        _ => value.clone(),
                    }
                };
                if b.minus_inf_lo == b.minus_inf_hi {
                    Body::Improper(b.clone())
                } else {
                    Body::Improper(ImproperBody {
                        minus_inf_lo: b.minus_inf_lo.clone(),
                        minus_inf_hi: b.minus_inf_hi.clone(),
                        left_edge_value: tilt_edge(&b.minus_inf_lo, &b.left_edge_value),
                        right_edge_value: tilt_edge(&b.minus_inf_hi, &b.right_edge_value),
                    })
                }
            }
            Body::Proper(b) => {
                let tilt_over = |side: Side| -> Option<ExtReal> {
                    b.override_value(side).map(|w| match w {
                        ExtReal::Finite(v) => {
                            let bx = match b.boundary(&self.domain, side) {
                                super::DomBoundary::At { x, .. } => x,
                                super::DomBoundary::Unbounded => {
                                    unreachable!("override implies a bounded side")
                                }
                            };
                            ExtReal::Finite(v + t * &bx)
                        }
                        other => other.clone(),
                    })
                };
                let tilt_tail = |tail: &Tail| -> Tail {
                    match tail {
                        Tail::CutOff => Tail::CutOff,
                        Tail::Slope { slope, extent } => {
                            Tail::Slope { slope: slope + t, extent: extent.clone() }
                        }
                    }
                };
                Body::Proper(ProperBody {
                    breakpoints: b
                        .breakpoints
                        .iter()
                        .map(|bp| Breakpoint::new(bp.x.clone(), &bp.v + t * &bp.x))
                        .collect(),
                    left_tail: tilt_tail(&b.left_tail),
                    right_tail: tilt_tail(&b.right_tail),
                    left_endpoint_override: tilt_over(Side::Left),
                    right_endpoint_override: tilt_over(Side::Right),
                })
            }
        };
        ConvexFnSpec::new(self.domain.clone(), body)
    }

    /// g = f + coeff·p where p is a finite piecewise-linear function on the
    /// whole line and coeff ≥ 0 (so convexity is preserved).
    pub fn add_scaled_plf(
        &self,
        plf: &ConvexFnSpec,
        coeff: &Rational,
    ) -> Result<ConvexFnSpec, NotFinitePlf> {
        let pb = match &plf.body {
            Body::Proper(pb)
                if plf.domain.is_real_line()
                    && matches!(pb.left_tail, Tail::Slope { extent: ExtReal::NegInf, .. })
                    && matches!(pb.right_tail, Tail::Slope { extent: ExtReal::PosInf, .. })
                    && pb.left_endpoint_override.is_none()
                    && pb.right_endpoint_override.is_none() =>
            {
                pb
            }
            _ => return Err(NotFinitePlf),
        };
        let p_at = |x: &Rational| -> Rational {
            match pb.raw_value(x) {
                ExtReal::Finite(v) => v,
                _ => unreachable!("finite plf is finite everywhere"),
            }
        };
        let body = match &self.body {
            Body::Empty => Body::Empty,
            Body::Improper(b) => {
                let adj = |endpoint: &ExtReal, value: &ExtReal| -> ExtReal {
                    match (endpoint, value) {
                        (ExtReal::Finite(x), ExtReal::Finite(v)) => {
                            ExtReal::Finite(v + coeff * &p_at(x))
                        }
                        _ => value.clone(),
                    }
                };
                Body::Improper(ImproperBody {
                    minus_inf_lo: b.minus_inf_lo.clone(),
                    minus_inf_hi: b.minus_inf_hi.clone(),
                    left_edge_value: adj(&b.minus_inf_lo, &b.left_edge_value),
                    right_edge_value: adj(&b.minus_inf_hi, &b.right_edge_value),
                })
            }
            Body::Proper(fb) => {
                // Window of f's finite part; plf breakpoints strictly inside
                // become breakpoints of the sum.
                let wl = match &fb.left_tail {
                    Tail::CutOff => ExtReal::Finite(fb.first().x.clone()),
                    Tail::Slope { extent, .. } => extent.clone(),
                };
                let wr = match &fb.right_tail {
                    Tail::CutOff => ExtReal::Finite(fb.last().x.clone()),
                    Tail::Slope { extent, .. } => extent.clone(),
                };
                let mut xs: Vec<Rational> =
                    fb.breakpoints.iter().map(|bp| bp.x.clone()).collect();
                for bp in &pb.breakpoints {
                    let xe = ExtReal::Finite(bp.x.clone());
                    if xe > wl && xe < wr && !xs.contains(&bp.x) {
                        xs.push(bp.x.clone());
                    }
                }
                xs.sort();
                let breakpoints: Vec<Breakpoint> = xs
                    .iter()
                    .map(|x| {
                        let fv = match fb.raw_value(x) {
                            ExtReal::Finite(v) => v,
                            _ => unreachable!("merged abscissae lie in f's finite part"),
                        };
                        Breakpoint::new(x.clone(), fv + coeff * &p_at(x))
                    })
                    .collect();
                let first_x = &breakpoints[0].x;
                let last_x = &breakpoints[breakpoints.len() - 1].x;
                let left_tail = match &fb.left_tail {
                    Tail::CutOff => Tail::CutOff,
                    Tail::Slope { slope, extent } => Tail::Slope {
                        slope: slope + coeff * &plf_slope_left_of(pb, first_x),
                        extent: extent.clone(),
                    },
                };
                let right_tail = match &fb.right_tail {
                    Tail::CutOff => Tail::CutOff,
                    Tail::Slope { slope, extent } => Tail::Slope {
                        slope: slope + coeff * &plf_slope_right_of(pb, last_x),
                        extent: extent.clone(),
                    },
                };
                let adj_over = |side: Side| -> Option<ExtReal> {
                    fb.override_value(side).map(|w| match w {
                        ExtReal::Finite(v) => {
                            let bx = match fb.boundary(&self.domain, side) {
                                super::DomBoundary::At { x, .. } => x,
                                super::DomBoundary::Unbounded => {
                                    unreachable!("override implies a bounded side")
                                }
                            };
                            ExtReal::Finite(v + coeff * &p_at(&bx))
                        }
                        other => other.clone(),
                    })
                };
                Body::Proper(ProperBody {
                    breakpoints,
                    left_tail,
                    right_tail,
                    left_endpoint_override: adj_over(Side::Left),
                    right_endpoint_override: adj_over(Side::Right),
                })
            }
        };
        Ok(ConvexFnSpec::new(self.domain.clone(), body))
    }
}

fn move_tail(tail: &Tail, move_pt: &dyn Fn(&ExtReal) -> ExtReal) -> Tail {
    match tail {
        Tail::CutOff => Tail::CutOff,
        Tail::Slope { slope, extent } => {
            Tail::Slope { slope: slope.clone(), extent: move_pt(extent) }
        }
    }
}

/// Slope of a finite piecewise-linear body on the piece just left of x.
pub(crate) fn plf_slope_left_of(b: &ProperBody, x: &Rational) -> Rational {
    let bps = &b.breakpoints;
    let j = bps.partition_point(|bp| bp.x < *x);
    if j == 0 {
        match &b.left_tail {
            Tail::Slope { slope, .. } => slope.clone(),
            Tail::CutOff => unreachable!("finite plf has slope tails"),
        }
    } else if j == bps.len() {
        match &b.right_tail {
            Tail::Slope { slope, .. } => slope.clone(),
            Tail::CutOff => unreachable!("finite plf has slope tails"),
        }
    } else {
        (&bps[j].v - &bps[j - 1].v) / (&bps[j].x - &bps[j - 1].x)
    }
}

/// Slope of a finite piecewise-linear body on the piece just right of x.
pub(crate) fn plf_slope_right_of(b: &ProperBody, x: &Rational) -> Rational {
    let bps = &b.breakpoints;
    let j = bps.partition_point(|bp| bp.x <= *x);
    if j == 0 {
        match &b.left_tail {
            Tail::Slope { slope, .. } => slope.clone(),
            Tail::CutOff => unreachable!("finite plf has slope tails"),
        }
    } else if j == bps.len() {
        match &b.right_tail {
            Tail::Slope { slope, .. } => slope.clone(),
            Tail::CutOff => unreachable!("finite plf has slope tails"),
        }
    } else {
        (&bps[j].v - &bps[j - 1].v) / (&bps[j].x - &bps[j - 1].x)
    }
}
