//! Exact analyzer for the stability of the infimum of convex functions on
//! intervals of the line.
//!
//! Everything is computed in arbitrary-precision rational arithmetic — no
//! floating point anywhere in the analysis. The crate models extended-real
//! convex functions as piecewise-linear specs ([`convexfn`]), decides
//! whether their infimum survives pointwise perturbation ([`stability`]),
//! builds certified destabilizing sequences when it does not ([`witness`]),
//! computes Legendre–Fenchel conjugates ([`fenchel`]), stress-tests the
//! stable direction with seeded perturbation families ([`harness`]), and
//! reproduces a two-variable gap phenomenon on a compact set ([`r2gap`]).

pub mod convexfn;
pub mod extreal;
pub mod fenchel;
pub mod harness;
pub mod io;
pub mod r2gap;
pub mod stability;
pub mod witness;

pub use convexfn::{
    Body, Breakpoint, ConvexFnSpec, DomCard, DomainNotR, ImproperBody, IntervalSpec,
    MonotonicityClass, NotFinitePlf, OutsideAmbientSet, ProperBody, SublevelSet, Tail,
    ValidationError,
};
pub use extreal::{ExtReal, Rational};
pub use fenchel::{
    conjugate, continuity_at_zero, corollary_fstar_check, ConjugatePlf, FstarReport,
};
pub use harness::{
    brute_force_inf_oracle, doubling_schedule, perturb_member, run_convergence_trial,
    JitterBrokeConvexity, PerturbationFamily, PerturbationKind, SpecGen, TrialError, TrialReport,
    TrialRow,
};
pub use io::{parse_spec, spec_to_json, SpecIoError};
pub use r2gap::{k_contains, min_table, r2_eval, r2_min_on_k, r2_pointwise_limit, R2Point, R2Row};
pub use stability::{check, check_bounded_real_valued, PreconditionViolated, Specialization, StabilityReason, StabilityVerdict};
pub use witness::{generate as generate_witness, grid_points, FamilyKind, GapClaim, GapReport, PointwiseReport, WitnessError, WitnessFamily};
