//! Exact analysis of a validated spec: effective-domain cardinality,
//! infimum and its attainment, monotonicity over the whole ambient
//! interval, sublevel sets, and coercivity.

use super::profile::{profile, OpenVal, Seg};
use super::{
    Body, ConvexFnSpec, DomCard, DomainNotR, IntervalSpec, MonotonicityClass, Side, SublevelSet,
    Tail,
};
use crate::extreal::{ext_inf, rat_int, ExtReal, Rational};

impl ConvexFnSpec {
    /// How many points of C have f(x) < +∞. A −∞ value counts: the
    /// effective domain is where f stays below +∞, not where it is finite.
    pub fn card_dom(&self) -> DomCard {
        match &self.body {
            Body::Empty => DomCard::Zero,
            Body::Improper(b) => {
                if b.minus_inf_lo == b.minus_inf_hi {
                    match &b.minus_inf_lo {
                        ExtReal::Finite(x) => DomCard::One(x.clone()),
                        _ => unreachable!("validated single −∞ point is finite"),
                    }
                } else {
                    // A nondegenerate −∞ region has infinitely many points.
                    DomCard::Many
                }
            }
            Body::Proper(b) => {
                let k = b.breakpoints.len();
                let singleton_hull =
                    k == 1 && matches!(b.left_tail, Tail::CutOff) && matches!(b.right_tail, Tail::CutOff);
                if !singleton_hull {
                    // Some affine piece or chord is nondegenerate, giving a
                    // continuum of finite values.
                    return DomCard::Many;
                }
                match b.value_at_breakpoint(0) {
                    ExtReal::PosInf => DomCard::Zero,
                    _ => DomCard::One(b.first().x.clone()),
                }
            }
        }
    }

    /// Exact infimum of f over C.
    pub fn infimum(&self) -> ExtReal {
        match &self.body {
            Body::Empty => ExtReal::PosInf,
            Body::Improper(_) => ExtReal::NegInf,
            Body::Proper(b) => {
                // A tail sloping downward toward an infinite extent escapes
                // to −∞.
                if let Tail::Slope { slope, extent } = &b.left_tail {
                    if extent.is_neg_inf() && *slope > rat_int(0) {
                        return ExtReal::NegInf;
                    }
                }
                if let Tail::Slope { slope, extent } = &b.right_tail {
                    if extent.is_pos_inf() && *slope < rat_int(0) {
                        return ExtReal::NegInf;
                    }
                }
                let k = b.breakpoints.len();
                if k == 1
                    && matches!(b.left_tail, Tail::CutOff)
                    && matches!(b.right_tail, Tail::CutOff)
                {
                    // Isolated point: the (possibly overridden) value is all
                    // there is.
                    return b.value_at_breakpoint(0);
                }
                // Otherwise the infimum is approached along the closure of
                // the finite part, where overrides are invisible.
                let mut cands: Vec<Rational> =
                    b.breakpoints.iter().map(|bp| bp.v.clone()).collect();
                for side in [Side::Left, Side::Right] {
                    if let Tail::Slope { extent: ExtReal::Finite(_), .. } = b.tail(side) {
                        cands.push(b.boundary_limit(side).expect("finite extent has a limit"));
                    }
                }
                ext_inf(cands.into_iter().map(ExtReal::Finite))
            }
        }
    }

    /// Whether inf f is attained at some point of C. By the usual
    /// conventions an empty effective domain attains its infimum +∞.
    pub fn infimum_attained(&self) -> bool {
        match &self.body {
            Body::Empty => true,
            Body::Improper(_) => true,
            Body::Proper(b) => {
                let m = match self.infimum() {
                    ExtReal::NegInf => return false,
                    ExtReal::PosInf => return true,
                    ExtReal::Finite(m) => m,
                };
                let k = b.breakpoints.len();
                for i in 0..k {
                    if b.value_at_breakpoint(i) == ExtReal::Finite(m.clone()) {
                        return true;
                    }
                }
                for side in [Side::Left, Side::Right] {
                    if let Tail::Slope { extent: ExtReal::Finite(e), slope } = b.tail(side) {
                        if self.domain.contains(e)
                            && b.extent_point_value(side) == ExtReal::Finite(m.clone())
                        {
                            return true;
                        }
                        // A flat tail attains its level on the piece's
                        // interior even when both endpoints are overridden
                        // or excluded.
                        if *slope == rat_int(0) && b.outer_breakpoint(side).v == m {
                            return true;
                        }
                    }
                    if let Tail::Slope { extent, slope } = b.tail(side) {
                        if !extent.is_finite() && *slope == rat_int(0) && b.outer_breakpoint(side).v == m {
                            return true;
                        }
                    }
                }
                for w in b.breakpoints.windows(2) {
                    if w[0].v == w[1].v && w[0].v == m {
                        return true;
                    }
                }
                false
            }
        }
    }

    /// Monotonicity of f over all of C in the extended-real order,
    /// including any +∞ region and value jumps.
    pub fn monotonicity_class(&self) -> MonotonicityClass {
        let segs = profile(self);
        let mut flat: Vec<ExtReal> = Vec::with_capacity(segs.len() * 2);
        for s in &segs {
            let (entry, exit) = s.entry_exit();
            flat.push(entry);
            flat.push(exit);
        }
        let nondec = flat.windows(2).all(|w| w[0] <= w[1]);
        let noninc = flat.windows(2).all(|w| w[0] >= w[1]);
        match (nondec, noninc) {
            (true, true) => MonotonicityClass::Constant,
            (true, false) => MonotonicityClass::NondecreasingOnly,
            (false, true) => MonotonicityClass::NonincreasingOnly,
            (false, false) => MonotonicityClass::NonMonotonic,
        }
    }

    /// The sublevel set {x ∈ C : f(x) ≤ c}. Convexity makes it empty, a
    /// point, or a subinterval of C.
    pub fn sublevel_interval(&self, c: &ExtReal) -> SublevelSet {
        if c.is_pos_inf() {
            return SublevelSet::Interval(self.domain.clone());
        }
        // Collect qualifying stretches tile by tile; convexity makes them
        // contiguous, so only the first and last matter.
        struct Atom {
            lo: ExtReal,
            lo_closed: bool,
            hi: ExtReal,
            hi_closed: bool,
        }
        let mut atoms: Vec<Atom> = Vec::new();
        let zero = rat_int(0);
        for s in profile(self) {
            match s {
                Seg::Pt { x, v } => {
                    if v <= *c {
                        atoms.push(Atom {
                            lo: ExtReal::Finite(x.clone()),
                            lo_closed: true,
                            hi: ExtReal::Finite(x),
                            hi_closed: true,
                        });
                    }
                }
                Seg::Open { lo, hi, val } => match val {
                    OpenVal::PlusInf => {}
                    OpenVal::MinusInf => {
                        atoms.push(Atom { lo, lo_closed: false, hi, hi_closed: false });
                    }
                    OpenVal::Affine { slope, anchor_x, anchor_v } => {
                        let c_val = match c {
                            ExtReal::Finite(cv) => cv,
                            _ => continue, // c = −∞: affine values never qualify
                        };
                        if slope == zero {
                            if anchor_v <= *c_val {
                                atoms.push(Atom { lo, lo_closed: false, hi, hi_closed: false });
                            }
                        } else {
                            // Threshold where the affine value equals c.
                            let t = &anchor_x + (c_val - &anchor_v) / &slope;
                            let te = ExtReal::Finite(t.clone());
                            if slope > zero {
                                // Qualifying part: (lo, min(hi, t)].
                                if te > lo {
                                    if te < hi {
                                        atoms.push(Atom {
                                            lo,
                                            lo_closed: false,
                                            hi: te,
                                            hi_closed: true,
                                        });
                                    } else {
                                        atoms.push(Atom { lo, lo_closed: false, hi, hi_closed: false });
                                    }
                                }
                            } else {
                                // Qualifying part: [max(lo, t), hi).
                                if te < hi {
                                    if te > lo {
                                        atoms.push(Atom {
                                            lo: te,
                                            lo_closed: true,
                                            hi,
                                            hi_closed: false,
                                        });
                                    } else {
                                        atoms.push(Atom { lo, lo_closed: false, hi, hi_closed: false });
                                    }
                                }
                            }
                        }
                    }
                },
            }
        }
        let Some(first) = atoms.first() else {
            return SublevelSet::Empty;
        };
        let last = atoms.last().expect("nonempty");
        let (lo, lo_closed) = (first.lo.clone(), first.lo_closed);
        let (hi, hi_closed) = (last.hi.clone(), last.hi_closed);
        if lo == hi {
            match lo {
                ExtReal::Finite(x) => SublevelSet::Point(x),
                _ => unreachable!("degenerate atoms are finite points"),
            }
        } else {
            SublevelSet::Interval(IntervalSpec { lo, lo_closed, hi, hi_closed })
        }
    }

    /// Whether every sublevel set is bounded; only defined on C = ℝ.
    pub fn is_coercive(&self) -> Result<bool, DomainNotR> {
        if !self.domain.is_real_line() {
            return Err(DomainNotR);
        }
        Ok(match &self.body {
            Body::Empty => true,
            Body::Improper(b) => b.minus_inf_lo.is_finite() && b.minus_inf_hi.is_finite(),
            Body::Proper(b) => {
                let left_ok = match &b.left_tail {
                    Tail::CutOff => true,
                    Tail::Slope { slope, extent } => extent.is_finite() || *slope < rat_int(0),
                };
                let right_ok = match &b.right_tail {
                    Tail::CutOff => true,
                    Tail::Slope { slope, extent } => extent.is_finite() || *slope > rat_int(0),
                };
                left_ok && right_ok
            }
        })
    }

    /// One-sided limits (from the left, from the right) of f at a point of
    /// C, taken within C. A side with no points of C to approach from
    /// contributes f(x) itself.
    pub(crate) fn one_sided_limits(&self, x: &Rational) -> (ExtReal, ExtReal) {
        let fx = self.eval(x).expect("limits are taken at points of C");
        let xe = ExtReal::Finite(x.clone());
        let segs = profile(self);
        let mut left = fx.clone();
        let mut right = fx;
        for (i, s) in segs.iter().enumerate() {
            match s {
                Seg::Pt { x: p, .. } if p == x => {
                    if i > 0 {
                        left = segs[i - 1].entry_exit().1;
                    }
                    if i + 1 < segs.len() {
                        right = segs[i + 1].entry_exit().0;
                    }
                    break;
                }
                Seg::Open { lo, hi, val } if *lo < xe && xe < *hi => {
                    let v = match val {
                        OpenVal::PlusInf => ExtReal::PosInf,
                        OpenVal::MinusInf => ExtReal::NegInf,
                        OpenVal::Affine { slope, anchor_x, anchor_v } => {
                            ExtReal::Finite(anchor_v + slope * (x - anchor_x))
                        }
                    };
                    left = v.clone();
                    right = v;
                    break;
                }
                _ => {}
            }
        }
        (left, right)
    }

}
