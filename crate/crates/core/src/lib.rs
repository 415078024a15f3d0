//! Exact decision procedures for approximate efficiency in linear fractional
//! vector optimization.
//!
//! A problem minimizes `f(x) = (f_1(x), ..., f_m(x))` over a polyhedron
//! `K = { x : C x <= d }`, with `f_i(x) = (a_i^T x + alpha_i) / (b_i^T x + beta_i)`
//! and every denominator positive on `K`. Given a tolerance `eps >= 0`, a
//! feasible `x_bar` is
//!
//! * eps-weakly efficient if no `y` in `K` has `f(y) < f(x_bar) - eps`;
//! * eps-efficient if no `y` in `K` has `f(y) <= f(x_bar) - eps` with
//!   `f(y) != f(x_bar) - eps`.
//!
//! Two independent routes decide these:
//!
//! * [`certify`] searches for nonnegative multipliers `lambda` that make a
//!   weighted linearization nonnegative on `K`, certified by an LP dual
//!   witness;
//! * [`oracle`] searches directly for a dominating point.
//!
//! Everything is computed with exact rationals on top of the two-phase
//! simplex in [`simplex`].

pub mod certify;
pub mod error;
pub mod oracle;
pub mod problem;
pub mod rational;
pub mod selftest;
pub mod simplex;
pub mod sweep;
pub mod testgen;

pub use certify::{
    build_certificate_system, classify, find_interior_certificate, find_weak_certificate,
    verify_certificate, Certificate, CertificateKind, CertificateSystem, Classification,
    DecisionSource, Membership, Refinement, Verdict,
};
pub use error::{Error, Result};
pub use oracle::{
    cone_lemma_check, efficient_dominates_check, weak_dominates_check, DominanceKind,
    DominanceWitness, FinitePointSet,
};
pub use problem::{
    validate_problem, LinearFractionalObjective, PolyhedralSet, Problem, Query, ValidationReport,
};
pub use rational::{parse_rational, Rational};
pub use simplex::{LinearProgram, LpOutcome, Relation, VarBound};
pub use sweep::{sweep, AxisRange, GridSpec, PointOutcome, SweepRow};
