//! Stress side of the stability verdict: seeded families of convex
//! perturbations that converge pointwise to a stable base, with an exact
//! per-index model of where each member's infimum must sit. A trial walks a
//! schedule of indices, tabulates exact infima and gaps, and rejects the run
//! the moment the base's convergence contract is broken. The module also
//! hosts an independent brute-force infimum oracle and the seeded generators
//! the randomized suites draw their specs from.

use num::{BigInt, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::convexfn::{
    plf_slope_left_of, plf_slope_right_of, Body, Breakpoint, ConvexFnSpec, DomBoundary,
    ImproperBody, IntervalSpec, NotFinitePlf, ProperBody, Side, Tail,
};
use crate::extreal::{ext_inf, rat, rat_int, rational_serde, ExtReal, Rational};
use crate::fenchel::junctions;
use crate::stability::check;

/// How the n-th member of a family deviates from its base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerturbationKind {
    /// f + g/n for a fixed finite convex piecewise-linear g on the line.
    AdditiveShrink(ConvexFnSpec),
    /// Breakpoint values bumped upward by fixed rationals scaled by 1/n.
    BreakpointJitter,
    /// Unbounded tail slopes pushed outward by 1/n.
    TailSteepen,
}

impl PerturbationKind {
    pub fn label(&self) -> &'static str {
        match self {
            PerturbationKind::AdditiveShrink(_) => "additive_shrink",
            PerturbationKind::BreakpointJitter => "breakpoint_jitter",
            PerturbationKind::TailSteepen => "tail_steepen",
        }
    }
}

/// A jittered member failed convexity validation even after backoff.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("breakpoint jitter broke convexity")]
pub struct JitterBrokeConvexity;

/// Seeded family of convex perturbations of a base spec, one member per
/// index n ≥ 1, converging to the base pointwise as n → ∞.
#[derive(Clone, Debug)]
pub struct PerturbationFamily {
    pub kind: PerturbationKind,
    pub seed: u64,
    pub base: ConvexFnSpec,
    /// Fixed upward bumps, one per breakpoint, applied at scale 1/n by the
    /// n-th jitter member. Drawn from the seed once, then halved until the
    /// bumped base validates at scale 1 — every constraint is linear in the
    /// scale, so all smaller scales stay valid too.
    deltas: Vec<Rational>,
}

impl PerturbationFamily {
    /// Builds a family. For `AdditiveShrink` the carried summand must be a
    /// finite piecewise-linear function on the whole line.
    pub fn new(
        kind: PerturbationKind,
        seed: u64,
        base: ConvexFnSpec,
    ) -> Result<Self, NotFinitePlf> {
        if let PerturbationKind::AdditiveShrink(g) = &kind {
            base.add_scaled_plf(g, &rat_int(1))?;
        }
        let deltas = match kind {
            PerturbationKind::BreakpointJitter => backed_off_deltas(&base, raw_deltas(&base, seed)),
            _ => Vec::new(),
        };
        Ok(PerturbationFamily { kind, seed, base, deltas })
    }
}

fn raw_deltas(base: &ConvexFnSpec, seed: u64) -> Vec<Rational> {
    let Body::Proper(b) = &base.body else { return Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..b.breakpoints.len()).map(|_| rat(rng.gen_range(0i64..=16), 16)).collect()
}

/// Halves the bumps until the base bumped at scale 1 validates; a pattern
/// that misbehaves at every positive scale (possible along flat chords)
/// collapses to zero.
fn backed_off_deltas(base: &ConvexFnSpec, mut deltas: Vec<Rational>) -> Vec<Rational> {
    let two = rat_int(2);
    for _ in 0..64 {
        if bumped(base, &deltas, &rat_int(1)).validate().is_ok() {
            return deltas;
        }
        for d in &mut deltas {
            *d = &*d / &two;
        }
    }
    vec![rat_int(0); deltas.len()]
}

fn bumped(base: &ConvexFnSpec, deltas: &[Rational], scale: &Rational) -> ConvexFnSpec {
    let mut out = base.clone();
    if let Body::Proper(b) = &mut out.body {
        for (bp, d) in b.breakpoints.iter_mut().zip(deltas) {
            bp.v = &bp.v + &(d * scale);
        }
    }
    out
}

/// n-th member of a family. Exact, and valid whenever the family
/// constructor accepted its ingredients.
pub fn perturb_member(
    family: &PerturbationFamily,
    n: u32,
) -> Result<ConvexFnSpec, JitterBrokeConvexity> {
    assert!(n >= 1, "members are indexed from 1");
    let inv_n = rat(1, i64::from(n));
    let member = match &family.kind {
        PerturbationKind::AdditiveShrink(g) => family
            .base
            .add_scaled_plf(g, &inv_n)
            .expect("the family constructor vetted the summand"),
        PerturbationKind::BreakpointJitter => bumped(&family.base, &family.deltas, &inv_n),
        PerturbationKind::TailSteepen => {
            let mut m = family.base.clone();
            if let Body::Proper(b) = &mut m.body {
                if let Tail::Slope { slope, extent } = &mut b.left_tail {
                    if extent.is_neg_inf() {
                        *slope = &*slope - &inv_n;
                    }
                }
                if let Tail::Slope { slope, extent } = &mut b.right_tail {
                    if extent.is_pos_inf() {
                        *slope = &*slope + &inv_n;
                    }
                }
            }
            m
        }
    };
    member.validate().map_err(|_| JitterBrokeConvexity)?;
    Ok(member)
}

/// One schedule entry of a convergence trial: the member index, its exact
/// infimum, and the absolute gap to the base infimum (0 once they agree,
/// +∞ while an infinite disagreement remains).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub n: u32,
    pub inf: ExtReal,
    pub gap: ExtReal,
}

/// Outcome of a completed convergence trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub family: &'static str,
    pub seed: u64,
    pub base_inf: ExtReal,
    /// Constant K with gap(n) ≤ K/n for every n past `settle_n`.
    #[serde(with = "rational_serde")]
    pub bound: Rational,
    /// Index from which member infima follow the family model exactly.
    pub settle_n: u64,
    pub rows: Vec<TrialRow>,
}

/// Failure of a convergence trial.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TrialError {
    /// The base is not stable; destabilization is the witness side's job.
    #[error("the base spec is unstable; convergence trials need a stable base")]
    UnstableBase,
    /// The schedule ends before the family's settle index.
    #[error("schedule ends at {last} before the family settles at {settle}")]
    ScheduleTooShort { last: u32, settle: u64 },
    /// A member failed to construct.
    #[error(transparent)]
    Member(#[from] JitterBrokeConvexity),
    /// A stable base failed its convergence contract.
    #[error("stable base failed its convergence contract at n = {n}: {what}")]
    StabilityContractViolated { n: u32, what: &'static str },
}

/// Indices 1, 2, 4, … capped by `n_max`, ending with `n_max` itself.
pub fn doubling_schedule(n_max: u32) -> Vec<u32> {
    assert!(n_max >= 1);
    let mut out = vec![1u32];
    let mut n = 1u32;
    while n <= n_max / 2 {
        n *= 2;
        out.push(n);
    }
    if *out.last().expect("schedule starts nonempty") != n_max {
        out.push(n_max);
    }
    out
}

/// Exact description of where member infima sit: ignoring tails, the n-th
/// infimum is min over candidates of a + d/n; `escapes` says the base (and
/// eventually every member) runs to −∞ along an unbounded tail; `settle` is
/// the index from which the description is exact and the minimizing
/// candidate stops changing.
struct InfModel {
    candidates: Vec<(Rational, Rational)>,
    escapes: bool,
    settle: u64,
}

fn clamp_index(i: BigInt) -> u64 {
    if i < BigInt::from(1) {
        1
    } else {
        i.to_u64().unwrap_or(u64::MAX)
    }
}

/// Smallest n ≥ 1 with n > q.
fn first_n_above(q: &Rational) -> u64 {
    clamp_index(q.floor().to_integer() + 1)
}

/// Smallest n ≥ 1 with n ≥ q.
fn first_n_at_least(q: &Rational) -> u64 {
    clamp_index(q.ceil().to_integer())
}

/// Settle index for one unbounded tail whose n-th member slope, mirrored so
/// that positive means escaping, is sigma + gs/n.
fn tail_settle(sigma: &Rational, gs: &Rational) -> u64 {
    if sigma.is_zero() {
        // A flat unbounded tail makes the base monotone, which trials
        // reject up front; returning 1 lets the model checks catch any
        // path that somehow got here.
        return 1;
    }
    if sigma.is_positive() {
        if gs.is_negative() {
            first_n_above(&(-gs / sigma))
        } else {
            1
        }
    } else if gs.is_positive() {
        first_n_at_least(&(gs / &-sigma.clone()))
    } else {
        1
    }
}

/// Largest index any candidate pair needs before their order is final.
fn ordering_settle(cands: &[(Rational, Rational)]) -> u64 {
    let mut n = 1u64;
    for (i, (ai, di)) in cands.iter().enumerate() {
        for (aj, dj) in &cands[i + 1..] {
            let (lo_a, lo_d, hi_a, hi_d) = match ai.cmp(aj) {
                std::cmp::Ordering::Less => (ai, di, aj, dj),
                std::cmp::Ordering::Greater => (aj, dj, ai, di),
                std::cmp::Ordering::Equal => continue,
            };
            if lo_d > hi_d {
                n = n.max(first_n_at_least(&(&(lo_d - hi_d) / &(hi_a - lo_a))));
            }
        }
    }
    n
}

fn inf_model(family: &PerturbationFamily) -> InfModel {
    let fb = match &family.base.body {
        Body::Improper(_) => {
            return InfModel { candidates: Vec::new(), escapes: true, settle: 1 }
        }
        Body::Empty => unreachable!("empty bases are rejected as unstable"),
        Body::Proper(fb) => fb,
    };
    let mut candidates: Vec<(Rational, Rational)>;
    let mut escapes = false;
    let mut nonescape_settle = 1u64;
    let mut escape_settle = 1u64;
    let mut note_tail = |sigma: &Rational, gs: &Rational| {
        let s = tail_settle(sigma, gs);
        if sigma.is_positive() {
            escapes = true;
            escape_settle = escape_settle.max(s);
        } else {
            nonescape_settle = nonescape_settle.max(s);
        }
    };
    match &family.kind {
        PerturbationKind::AdditiveShrink(g) => {
            let Body::Proper(gb) = &g.body else {
                unreachable!("the family constructor vetted the summand")
            };
            let g_at = |x: &Rational| -> Rational {
                match gb.raw_value(x) {
                    ExtReal::Finite(v) => v,
                    _ => unreachable!("finite plf is finite everywhere"),
                }
            };
            candidates =
                junctions(fb).into_iter().map(|(x, v)| { let d = g_at(&x); (v, d) }).collect();
            let wl = match &fb.left_tail {
                Tail::CutOff => ExtReal::Finite(fb.first().x.clone()),
                Tail::Slope { extent, .. } => extent.clone(),
            };
            let wr = match &fb.right_tail {
                Tail::CutOff => ExtReal::Finite(fb.last().x.clone()),
                Tail::Slope { extent, .. } => extent.clone(),
            };
            let mut first_x = fb.first().x.clone();
            let mut last_x = fb.last().x.clone();
            for bp in &gb.breakpoints {
                let xe = ExtReal::Finite(bp.x.clone());
                if xe > wl && xe < wr {
                    match fb.raw_value(&bp.x) {
                        ExtReal::Finite(v) => candidates.push((v, bp.v.clone())),
                        _ => unreachable!("window points lie in the finite part"),
                    }
                    if bp.x < first_x {
                        first_x = bp.x.clone();
                    }
                    if bp.x > last_x {
                        last_x = bp.x.clone();
                    }
                }
            }
            if let Tail::Slope { slope, extent } = &fb.left_tail {
                if extent.is_neg_inf() {
                    note_tail(slope, &plf_slope_left_of(gb, &first_x));
                }
            }
            if let Tail::Slope { slope, extent } = &fb.right_tail {
                if extent.is_pos_inf() {
                    // Mirror so that positive means escaping.
                    note_tail(&-slope.clone(), &-plf_slope_right_of(gb, &last_x));
                }
            }
        }
        PerturbationKind::BreakpointJitter => {
            candidates = fb
                .breakpoints
                .iter()
                .zip(&family.deltas)
                .map(|(bp, d)| (bp.v.clone(), d.clone()))
                .collect();
            let k = fb.breakpoints.len();
            for (side, i) in [(Side::Left, 0), (Side::Right, k - 1)] {
                if let Tail::Slope { slope, extent } = fb.tail(side) {
                    match extent {
                        ExtReal::Finite(_) => {
                            let limit = fb.boundary_limit(side).expect("finite extent");
                            candidates.push((limit, family.deltas[i].clone()));
                        }
                        _ => {
                            let sigma = match side {
                                Side::Left => slope.clone(),
                                Side::Right => -slope.clone(),
                            };
                            note_tail(&sigma, &rat_int(0));
                        }
                    }
                }
            }
        }
        PerturbationKind::TailSteepen => {
            candidates =
                junctions(fb).into_iter().map(|(_, v)| (v, rat_int(0))).collect();
            if let Tail::Slope { slope, extent } = &fb.left_tail {
                if extent.is_neg_inf() {
                    note_tail(slope, &rat_int(-1));
                }
            }
            if let Tail::Slope { slope, extent } = &fb.right_tail {
                if extent.is_pos_inf() {
                    note_tail(&-slope.clone(), &rat_int(-1));
                }
            }
        }
    }
    drop(note_tail);
    let settle = if escapes {
        escape_settle
    } else {
        nonescape_settle.max(ordering_settle(&candidates))
    };
    InfModel { candidates, escapes, settle }
}

fn predicted_inf(model: &InfModel, n: u32) -> ExtReal {
    if model.escapes {
        return ExtReal::NegInf;
    }
    let inv_n = rat(1, i64::from(n));
    ext_inf(model.candidates.iter().map(|(a, d)| ExtReal::Finite(a + &(d * &inv_n))))
}

fn gap_between(inf_n: &ExtReal, base_inf: &ExtReal) -> ExtReal {
    if inf_n == base_inf {
        return ExtReal::from_int(0);
    }
    match (inf_n, base_inf) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite((a - b).abs()),
        _ => ExtReal::PosInf,
    }
}

/// Runs one family down an ascending schedule of member indices. The rows
/// carry exact infima and gaps; past the settle index the trial enforces
/// the convergence contract of a stable base — member infima matching the
/// family model, gaps never rising and staying within bound/n, exact
/// halving along doubled indices for `AdditiveShrink`, and agreement with a
/// −∞ base infimum.
pub fn run_convergence_trial(
    family: &PerturbationFamily,
    schedule: &[u32],
) -> Result<TrialReport, TrialError> {
    assert!(!schedule.is_empty(), "schedule must be nonempty");
    assert!(schedule[0] >= 1, "members are indexed from 1");
    assert!(schedule.windows(2).all(|w| w[0] < w[1]), "schedule must ascend");
    if !check(&family.base).stable {
        return Err(TrialError::UnstableBase);
    }
    let model = inf_model(family);
    let base_inf = family.base.infimum();
    debug_assert_eq!(model.escapes, base_inf.is_neg_inf());
    if !model.escapes {
        debug_assert_eq!(
            ext_inf(model.candidates.iter().map(|(a, _)| ExtReal::Finite(a.clone()))),
            base_inf,
            "candidate floors must reproduce the base infimum"
        );
    }
    let last = *schedule.last().expect("schedule is nonempty");
    if u64::from(last) < model.settle {
        return Err(TrialError::ScheduleTooShort { last, settle: model.settle });
    }
    let bound =
        model.candidates.iter().map(|(_, d)| d.abs()).max().unwrap_or_else(|| rat_int(0));
    let mut rows: Vec<TrialRow> = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let member = perturb_member(family, n)?;
        let inf = member.infimum();
        let gap = gap_between(&inf, &base_inf);
        if u64::from(n) >= model.settle {
            if inf != predicted_inf(&model, n) {
                return Err(TrialError::StabilityContractViolated {
                    n,
                    what: "member infimum departs from the family model",
                });
            }
            let cap = &bound * &rat(1, i64::from(n));
            if gap > ExtReal::Finite(cap) {
                return Err(TrialError::StabilityContractViolated {
                    n,
                    what: "gap exceeds the per-family bound",
                });
            }
        }
        rows.push(TrialRow { n, inf, gap });
    }
    let halving = matches!(family.kind, PerturbationKind::AdditiveShrink(_));
    for w in rows.windows(2) {
        if u64::from(w[0].n) < model.settle {
            continue;
        }
        if w[1].gap > w[0].gap {
            return Err(TrialError::StabilityContractViolated {
                n: w[1].n,
                what: "gap increased along the schedule",
            });
        }
        if halving && w[0].n.checked_mul(2) == Some(w[1].n) {
            let held = match (w[0].gap.as_finite(), w[1].gap.as_finite()) {
                (Some(g0), Some(g1)) => *g0 == g1 + g1,
                _ => false,
            };
            if !held {
                return Err(TrialError::StabilityContractViolated {
                    n: w[1].n,
                    what: "gap failed to halve exactly across a doubled index",
                });
            }
        }
    }
    Ok(TrialReport {
        family: family.kind.label(),
        seed: family.seed,
        base_inf,
        bound,
        settle_n: model.settle,
        rows,
    })
}

/// Infimum by direct candidate enumeration, sharing no code path with the
/// profile-based analysis: every breakpoint value, endpoint values and
/// overrides where the endpoint is reachable, one-sided limits at endpoints
/// that are approached but not attained, and tail limits at ±∞ (−∞ for an
/// escaping tail).
pub fn brute_force_inf_oracle(spec: &ConvexFnSpec) -> ExtReal {
    let mut cands: Vec<ExtReal> = Vec::new();
    match &spec.body {
        Body::Empty => {}
        Body::Improper(b) => {
            cands.push(ExtReal::NegInf);
            for (end, v) in [
                (&b.minus_inf_lo, &b.left_edge_value),
                (&b.minus_inf_hi, &b.right_edge_value),
            ] {
                if let ExtReal::Finite(x) = end {
                    if spec.domain.contains(x) {
                        cands.push(v.clone());
                    }
                }
            }
        }
        Body::Proper(b) => {
            let lone_point = b.breakpoints.len() == 1
                && matches!(b.left_tail, Tail::CutOff)
                && matches!(b.right_tail, Tail::CutOff);
            if lone_point {
                let v = b
                    .left_endpoint_override
                    .clone()
                    .or_else(|| b.right_endpoint_override.clone())
                    .unwrap_or_else(|| ExtReal::Finite(b.breakpoints[0].v.clone()));
                cands.push(v);
            } else {
                for bp in &b.breakpoints {
                    cands.push(ExtReal::Finite(bp.v.clone()));
                }
                for (side, decreasing_away) in [(Side::Left, true), (Side::Right, false)] {
                    let outer = match side {
                        Side::Left => &b.breakpoints[0],
                        Side::Right => &b.breakpoints[b.breakpoints.len() - 1],
                    };
                    if let Tail::Slope { slope, extent } = match side {
                        Side::Left => &b.left_tail,
                        Side::Right => &b.right_tail,
                    } {
                        match extent {
                            ExtReal::Finite(e) => {
                                cands.push(ExtReal::Finite(&outer.v + slope * (e - &outer.x)));
                            }
                            _ => {
                                let escapes = if decreasing_away {
                                    slope.is_positive()
                                } else {
                                    slope.is_negative()
                                };
                                if escapes {
                                    cands.push(ExtReal::NegInf);
                                } else if slope.is_zero() {
                                    cands.push(ExtReal::Finite(outer.v.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    ext_inf(cands)
}

/// Seeded generator of valid specs for the randomized suites. Every
/// construction satisfies the structural invariants by design, so each
/// returned spec validates.
pub struct SpecGen {
    rng: ChaCha8Rng,
}

impl SpecGen {
    pub fn new(seed: u64) -> Self {
        SpecGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    fn coin(&mut self) -> bool {
        self.int(0, 1) == 0
    }

    fn small_rat(&mut self) -> Rational {
        rat(self.int(-12, 12), self.int(1, 4))
    }

    fn pos_rat(&mut self) -> Rational {
        rat(self.int(1, 8), self.int(1, 4))
    }

    fn nonneg_rat(&mut self) -> Rational {
        rat(self.int(0, 6), self.int(1, 4))
    }

    /// Any valid ambient interval.
    fn interval(&mut self) -> IntervalSpec {
        match self.int(0, 3) {
            0 => IntervalSpec::real_line(),
            1 => IntervalSpec {
                lo: ExtReal::Finite(self.small_rat()),
                lo_closed: self.coin(),
                hi: ExtReal::PosInf,
                hi_closed: false,
            },
            2 => IntervalSpec {
                lo: ExtReal::NegInf,
                lo_closed: false,
                hi: ExtReal::Finite(self.small_rat()),
                hi_closed: self.coin(),
            },
            _ => {
                let a = self.small_rat();
                let b = &a + &self.pos_rat();
                IntervalSpec::bounded(a, self.coin(), b, self.coin())
            }
        }
    }

    /// k abscissae strictly inside the interval, strictly increasing.
    fn xs_inside(&mut self, c: &IntervalSpec, k: usize) -> Vec<Rational> {
        match (&c.lo, &c.hi) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => {
                let w = b - a;
                let mut acc = 0i64;
                (0..k)
                    .map(|_| {
                        acc += self.int(1, 3);
                        a + &(&w * &rat(acc, 16))
                    })
                    .collect()
            }
            (ExtReal::Finite(a), _) => {
                let mut x = a + &self.pos_rat();
                let mut out = vec![x.clone()];
                for _ in 1..k {
                    x = &x + &self.pos_rat();
                    out.push(x.clone());
                }
                out
            }
            (_, ExtReal::Finite(b)) => {
                let mut x = b - &self.pos_rat();
                let mut out = vec![x.clone()];
                for _ in 1..k {
                    x = &x - &self.pos_rat();
                    out.push(x.clone());
                }
                out.reverse();
                out
            }
            _ => {
                let mut x = self.small_rat();
                let mut out = vec![x.clone()];
                for _ in 1..k {
                    x = &x + &self.pos_rat();
                    out.push(x.clone());
                }
                out
            }
        }
    }

    /// Breakpoints over the given abscissae: a start value integrated along
    /// nondecreasing chord slopes.
    fn integrate(&mut self, xs: Vec<Rational>, chords: &[Rational]) -> Vec<Breakpoint> {
        let mut out = vec![Breakpoint::new(xs[0].clone(), self.small_rat())];
        for (i, x) in xs.into_iter().enumerate().skip(1) {
            let prev = &out[i - 1];
            let v = &prev.v + &(&chords[i - 1] * &(&x - &prev.x));
            out.push(Breakpoint::new(x, v));
        }
        out
    }

    fn nondecreasing_chords(&mut self, count: usize) -> Vec<Rational> {
        let mut s = self.small_rat();
        (0..count)
            .map(|i| {
                if i > 0 {
                    s = &s + &self.nonneg_rat();
                }
                s.clone()
            })
            .collect()
    }

    fn tail(&mut self, c: &IntervalSpec, outer_x: &Rational, slope: Rational, side: Side) -> Tail {
        let unbounded_ok = match side {
            Side::Left => c.lo.is_neg_inf(),
            Side::Right => c.hi.is_pos_inf(),
        };
        match self.int(0, 2) {
            0 => Tail::CutOff,
            1 if unbounded_ok => Tail::Slope {
                slope,
                extent: match side {
                    Side::Left => ExtReal::NegInf,
                    Side::Right => ExtReal::PosInf,
                },
            },
            _ => {
                let e = match side {
                    Side::Left => match &c.lo {
                        ExtReal::Finite(a) => {
                            if self.coin() {
                                a.clone()
                            } else {
                                (a + outer_x) / rat_int(2)
                            }
                        }
                        _ => outer_x - &self.pos_rat(),
                    },
                    Side::Right => match &c.hi {
                        ExtReal::Finite(b) => {
                            if self.coin() {
                                b.clone()
                            } else {
                                (b + outer_x) / rat_int(2)
                            }
                        }
                        _ => outer_x + &self.pos_rat(),
                    },
                };
                Tail::Slope { slope, extent: ExtReal::Finite(e) }
            }
        }
    }

    fn maybe_override(&mut self, c: &IntervalSpec, b: &mut ProperBody, side: Side) {
        if self.int(0, 3) != 0 {
            return;
        }
        let reachable = match b.boundary(c, side) {
            DomBoundary::At { in_c, .. } => in_c,
            DomBoundary::Unbounded => false,
        };
        if !reachable {
            return;
        }
        let limit = b.boundary_limit(side).expect("reachable boundary has a limit");
        let w = if self.int(0, 3) == 0 {
            ExtReal::PosInf
        } else {
            ExtReal::Finite(&limit + &self.pos_rat())
        };
        match side {
            Side::Left => b.left_endpoint_override = Some(w),
            Side::Right => b.right_endpoint_override = Some(w),
        }
        let lone_point = b.breakpoints.len() == 1
            && matches!(b.left_tail, Tail::CutOff)
            && matches!(b.right_tail, Tail::CutOff);
        if lone_point && b.left_endpoint_override.is_some() && b.right_endpoint_override.is_some()
        {
            b.right_endpoint_override = None;
        }
    }

    fn proper_body(&mut self, c: &IntervalSpec) -> ProperBody {
        let k = self.int(1, 4) as usize;
        let xs = self.xs_inside(c, k);
        let chords = self.nondecreasing_chords(k - 1);
        let breakpoints = self.integrate(xs, &chords);
        let ls = match chords.first() {
            Some(c1) => c1 - &self.nonneg_rat(),
            None => self.small_rat(),
        };
        let rs = match chords.last() {
            Some(ck) => ck + &self.nonneg_rat(),
            None => &ls + &self.nonneg_rat(),
        };
        let left_tail = self.tail(c, &breakpoints[0].x.clone(), ls, Side::Left);
        let right_tail = self.tail(c, &breakpoints[k - 1].x.clone(), rs, Side::Right);
        let mut body = ProperBody {
            breakpoints,
            left_tail,
            right_tail,
            left_endpoint_override: None,
            right_endpoint_override: None,
        };
        self.maybe_override(c, &mut body, Side::Left);
        self.maybe_override(c, &mut body, Side::Right);
        body
    }

    fn improper_body(&mut self, c: &IntervalSpec) -> ImproperBody {
        if self.int(0, 3) == 0 {
            let x = self.xs_inside(c, 1).pop().expect("one point");
            return ImproperBody {
                minus_inf_lo: ExtReal::Finite(x.clone()),
                minus_inf_hi: ExtReal::Finite(x),
                left_edge_value: ExtReal::PosInf,
                right_edge_value: ExtReal::PosInf,
            };
        }
        let xs = self.xs_inside(c, 2);
        let mut lo = ExtReal::Finite(xs[0].clone());
        let mut hi = ExtReal::Finite(xs[1].clone());
        if c.lo.is_neg_inf() && self.int(0, 2) == 0 {
            lo = ExtReal::NegInf;
        }
        if c.hi.is_pos_inf() && self.int(0, 2) == 0 {
            hi = ExtReal::PosInf;
        }
        let left_edge_value =
            if self.coin() { ExtReal::PosInf } else { ExtReal::Finite(self.small_rat()) };
        let right_edge_value =
            if self.coin() { ExtReal::PosInf } else { ExtReal::Finite(self.small_rat()) };
        ImproperBody { minus_inf_lo: lo, minus_inf_hi: hi, left_edge_value, right_edge_value }
    }

    /// Any valid spec: all three body kinds over all interval shapes.
    pub fn arbitrary(&mut self) -> ConvexFnSpec {
        let c = self.interval();
        let body = match self.int(0, 9) {
            0 => Body::Empty,
            1 | 2 => Body::Improper(self.improper_body(&c)),
            _ => Body::Proper(self.proper_body(&c)),
        };
        let spec = ConvexFnSpec::new(c, body);
        debug_assert_eq!(spec.validate(), Ok(()));
        spec
    }

    /// A proper spec on a bounded interval.
    pub fn bounded_proper(&mut self) -> ConvexFnSpec {
        let a = self.small_rat();
        let b = &a + &self.pos_rat();
        let c = IntervalSpec::bounded(a, self.coin(), b, self.coin());
        let body = Body::Proper(self.proper_body(&c));
        let spec = ConvexFnSpec::new(c, body);
        debug_assert_eq!(spec.validate(), Ok(()));
        spec
    }

    /// A spec on the whole line with more than one domain point and a
    /// genuine dip — never monotone: either a bounded finite part between
    /// +∞ gaps, or a vee with strictly signed tail slopes.
    pub fn nonmonotonic_line(&mut self) -> ConvexFnSpec {
        let c = IntervalSpec::real_line();
        let k = self.int(2, 4) as usize;
        let xs = self.xs_inside(&c, k);
        let body = if self.coin() {
            let chords = self.nondecreasing_chords(k - 1);
            let breakpoints = self.integrate(xs, &chords);
            let left_tail = if self.coin() {
                Tail::CutOff
            } else {
                Tail::Slope {
                    slope: &chords[0] - &self.nonneg_rat(),
                    extent: ExtReal::Finite(&breakpoints[0].x - &self.pos_rat()),
                }
            };
            let right_tail = if self.coin() {
                Tail::CutOff
            } else {
                Tail::Slope {
                    slope: &chords[k - 2] + &self.nonneg_rat(),
                    extent: ExtReal::Finite(&breakpoints[k - 1].x + &self.pos_rat()),
                }
            };
            ProperBody {
                breakpoints,
                left_tail,
                right_tail,
                left_endpoint_override: None,
                right_endpoint_override: None,
            }
        } else {
            let ls = -self.pos_rat();
            let rs = self.pos_rat();
            let span = &rs - &ls;
            let mut fracs: Vec<i64> = (0..k - 1).map(|_| self.int(0, 16)).collect();
            fracs.sort_unstable();
            let chords: Vec<Rational> =
                fracs.into_iter().map(|f| &ls + &(&span * &rat(f, 16))).collect();
            let breakpoints = self.integrate(xs, &chords);
            ProperBody {
                breakpoints,
                left_tail: Tail::Slope { slope: ls, extent: ExtReal::NegInf },
                right_tail: Tail::Slope { slope: rs, extent: ExtReal::PosInf },
                left_endpoint_override: None,
                right_endpoint_override: None,
            }
        };
        let spec = ConvexFnSpec::new(c, Body::Proper(body));
        debug_assert_eq!(spec.validate(), Ok(()));
        spec
    }

    /// A finite convex piecewise-linear function on the whole line — the
    /// summand shape `AdditiveShrink` expects.
    pub fn finite_plf_line(&mut self) -> ConvexFnSpec {
        let c = IntervalSpec::real_line();
        let k = self.int(1, 3) as usize;
        let xs = self.xs_inside(&c, k);
        let chords = self.nondecreasing_chords(k - 1);
        let breakpoints = self.integrate(xs, &chords);
        let ls = match chords.first() {
            Some(c1) => c1 - &self.nonneg_rat(),
            None => self.small_rat(),
        };
        let rs = match chords.last() {
            Some(ck) => ck + &self.nonneg_rat(),
            None => &ls + &self.nonneg_rat(),
        };
        let body = ProperBody {
            breakpoints,
            left_tail: Tail::Slope { slope: ls, extent: ExtReal::NegInf },
            right_tail: Tail::Slope { slope: rs, extent: ExtReal::PosInf },
            left_endpoint_override: None,
            right_endpoint_override: None,
        };
        let spec = ConvexFnSpec::new(c, Body::Proper(body));
        debug_assert_eq!(spec.validate(), Ok(()));
        spec
    }
}
