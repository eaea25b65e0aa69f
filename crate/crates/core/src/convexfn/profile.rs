//! Internal decomposition of a spec into an ordered tiling of its ambient
//! interval: isolated points carrying exact values and open pieces carrying
//! uniform behavior (+∞, −∞, or affine). Analysis passes scan this tiling
//! instead of re-deriving case splits from the raw body.

use super::{Body, ConvexFnSpec, DomBoundary, Side, Tail};
use crate::extreal::{ExtReal, Rational};

/// Behavior on an open piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum OpenVal {
    PlusInf,
    MinusInf,
    /// f(x) = anchor_v + slope · (x − anchor_x) on the whole piece.
    Affine {
        slope: Rational,
        anchor_x: Rational,
        anchor_v: Rational,
    },
}

/// One tile: a single point of C with its value, or an open piece of C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Seg {
    Pt { x: Rational, v: ExtReal },
    Open { lo: ExtReal, hi: ExtReal, val: OpenVal },
}

impl Seg {
    /// Value approached entering the tile from the left, and leaving it to
    /// the right. For a point both are the value itself; for an open piece
    /// they are the one-sided limits at its ends.
    pub(crate) fn entry_exit(&self) -> (ExtReal, ExtReal) {
        match self {
            Seg::Pt { v, .. } => (v.clone(), v.clone()),
            Seg::Open { lo, hi, val } => match val {
                OpenVal::PlusInf => (ExtReal::PosInf, ExtReal::PosInf),
                OpenVal::MinusInf => (ExtReal::NegInf, ExtReal::NegInf),
                OpenVal::Affine { slope, anchor_x, anchor_v } => {
                    let at = |end: &ExtReal| -> ExtReal {
                        match end {
                            ExtReal::Finite(x) => {
                                ExtReal::Finite(anchor_v + slope * (x - anchor_x))
                            }
                            ExtReal::NegInf => match slope.cmp(&Rational::from_integer(0.into())) {
                                std::cmp::Ordering::Greater => ExtReal::NegInf,
                                std::cmp::Ordering::Less => ExtReal::PosInf,
                                std::cmp::Ordering::Equal => ExtReal::Finite(anchor_v.clone()),
                            },
                            ExtReal::PosInf => match slope.cmp(&Rational::from_integer(0.into())) {
                                std::cmp::Ordering::Greater => ExtReal::PosInf,
                                std::cmp::Ordering::Less => ExtReal::NegInf,
                                std::cmp::Ordering::Equal => ExtReal::Finite(anchor_v.clone()),
                            },
                        }
                    };
                    (at(lo), at(hi))
                }
            },
        }
    }
}

/// Tiles the ambient interval C in strictly increasing order. Every point of
/// C lies in exactly one tile, and each tile's value matches `eval`.
pub(crate) fn profile(spec: &ConvexFnSpec) -> Vec<Seg> {
    let c = &spec.domain;
    let mut segs: Vec<Seg> = Vec::new();
    match &spec.body {
        Body::Empty => {
            push_gap(&mut segs, c.lo.clone(), c.hi.clone());
            close_c_endpoints(&mut segs, spec);
        }
        Body::Improper(b) => {
            if b.minus_inf_lo == b.minus_inf_hi {
                let x = match &b.minus_inf_lo {
                    ExtReal::Finite(x) => x.clone(),
                    _ => unreachable!("validated single −∞ point is finite"),
                };
                push_gap(&mut segs, c.lo.clone(), ExtReal::Finite(x.clone()));
                segs.push(Seg::Pt { x: x.clone(), v: ExtReal::NegInf });
                push_gap(&mut segs, ExtReal::Finite(x), c.hi.clone());
            } else {
                push_gap(&mut segs, c.lo.clone(), b.minus_inf_lo.clone());
                if let ExtReal::Finite(x) = &b.minus_inf_lo {
                    if c.contains(x) {
                        segs.push(Seg::Pt { x: x.clone(), v: b.left_edge_value.clone() });
                    }
                }
                segs.push(Seg::Open {
                    lo: b.minus_inf_lo.clone(),
                    hi: b.minus_inf_hi.clone(),
                    val: OpenVal::MinusInf,
                });
                if let ExtReal::Finite(x) = &b.minus_inf_hi {
                    if c.contains(x) {
                        segs.push(Seg::Pt { x: x.clone(), v: b.right_edge_value.clone() });
                    }
                }
                push_gap(&mut segs, b.minus_inf_hi.clone(), c.hi.clone());
            }
            close_c_endpoints(&mut segs, spec);
        }
        Body::Proper(b) => {
            let k = b.breakpoints.len();
            // Left of the finite part.
            match b.boundary(c, Side::Left) {
                DomBoundary::Unbounded => {}
                DomBoundary::At { x, in_c } => {
                    push_gap(&mut segs, c.lo.clone(), ExtReal::Finite(x.clone()));
                    // A CutOff boundary is the first breakpoint, emitted by
                    // the loop below; a Slope extent point is emitted here.
                    if in_c && !matches!(b.left_tail, Tail::CutOff) {
                        segs.push(Seg::Pt { x, v: b.extent_point_value(Side::Left) });
                    }
                }
            }
            if let Tail::Slope { slope, extent } = &b.left_tail {
                segs.push(Seg::Open {
                    lo: extent.clone(),
                    hi: ExtReal::Finite(b.first().x.clone()),
                    val: OpenVal::Affine {
                        slope: slope.clone(),
                        anchor_x: b.first().x.clone(),
                        anchor_v: b.first().v.clone(),
                    },
                });
            }
            for i in 0..k {
                let bp = &b.breakpoints[i];
                segs.push(Seg::Pt { x: bp.x.clone(), v: b.value_at_breakpoint(i) });
                if i + 1 < k {
                    let next = &b.breakpoints[i + 1];
                    let slope = (&next.v - &bp.v) / (&next.x - &bp.x);
                    segs.push(Seg::Open {
                        lo: ExtReal::Finite(bp.x.clone()),
                        hi: ExtReal::Finite(next.x.clone()),
                        val: OpenVal::Affine {
                            slope,
                            anchor_x: bp.x.clone(),
                            anchor_v: bp.v.clone(),
                        },
                    });
                }
            }
            if let Tail::Slope { slope, extent } = &b.right_tail {
                segs.push(Seg::Open {
                    lo: ExtReal::Finite(b.last().x.clone()),
                    hi: extent.clone(),
                    val: OpenVal::Affine {
                        slope: slope.clone(),
                        anchor_x: b.last().x.clone(),
                        anchor_v: b.last().v.clone(),
                    },
                });
            }
            match b.boundary(c, Side::Right) {
                DomBoundary::Unbounded => {}
                DomBoundary::At { x, in_c } => {
                    if in_c && !matches!(b.right_tail, Tail::CutOff) {
                        segs.push(Seg::Pt { x: x.clone(), v: b.extent_point_value(Side::Right) });
                    }
                    push_gap(&mut segs, ExtReal::Finite(x), c.hi.clone());
                }
            }
            close_c_endpoints(&mut segs, spec);
        }
    }
    segs
}

/// Emits a +∞ gap piece when the open interval (lo, hi) is nonempty.
fn push_gap(segs: &mut Vec<Seg>, lo: ExtReal, hi: ExtReal) {
    if lo < hi {
        segs.push(Seg::Open { lo, hi, val: OpenVal::PlusInf });
    }
}

/// Adds point tiles for closed endpoints of C that fall in +∞ gap regions
/// (every other case already has its endpoint tile).
fn close_c_endpoints(segs: &mut Vec<Seg>, spec: &ConvexFnSpec) {
    let c = &spec.domain;
    if c.lo_closed {
        if let ExtReal::Finite(x) = &c.lo {
            let covered = matches!(segs.first(), Some(Seg::Pt { x: p, .. }) if p == x);
            if !covered {
                if let Some(Seg::Open { lo, val: OpenVal::PlusInf, .. }) = segs.first() {
                    if *lo == c.lo {
                        segs.insert(0, Seg::Pt { x: x.clone(), v: ExtReal::PosInf });
                    }
                }
            }
        }
    }
    if c.hi_closed {
        if let ExtReal::Finite(x) = &c.hi {
            let covered = matches!(segs.last(), Some(Seg::Pt { x: p, .. }) if p == x);
            if !covered {
                if let Some(Seg::Open { hi, val: OpenVal::PlusInf, .. }) = segs.last() {
                    if *hi == c.hi {
                        segs.push(Seg::Pt { x: x.clone(), v: ExtReal::PosInf });
                    }
                }
            }
        }
    }
}
