//! Randomized cross-checks between the independent decision routes.

use num_traits::Zero;

use crate::certify::{
    build_certificate_system, find_interior_certificate, find_weak_certificate,
    reconstruct_dual_witness, verify_certificate, Verdict,
};
use crate::oracle::{cone_lemma_check, efficient_dominates_check, weak_dominates_check};
use crate::problem::{LinearFractionalObjective, Problem, Query};
use crate::rational::{display_vec, to_f64, Rational};
use crate::testgen::{Case, InstanceGenerator};

/// Maximum relative error accepted between the exact gradient and a central
/// finite difference.
pub const GRADIENT_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn total(&self) -> usize {
        self.passed + self.failed
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfTestSummary {
    pub seed: u64,
    pub count: usize,
    pub suites: Vec<SuiteResult>,
}

impl SelfTestSummary {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

fn describe(case: &Case) -> String {
    format!(
        "{:?} at x_bar = {}, eps = {}",
        case.problem,
        display_vec(&case.query.x_bar),
        display_vec(&case.query.epsilon)
    )
}

/// Per-case outcome of the certificate and oracle routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub weak_certificate: bool,
    pub weak_dominated: bool,
    pub interior_certificate: bool,
    pub efficient_dominated: bool,
    /// Every returned certificate verified by the inner LP and its dual
    /// equations, every witness re-evaluated, and a dual witness could be
    /// rebuilt from `lambda` alone.
    pub artifacts_verified: bool,
}

impl CrossCheck {
    pub fn run(problem: &Problem, query: &Query) -> crate::Result<Self> {
        let system = build_certificate_system(problem, query)?;
        let weak = find_weak_certificate(problem, query)?;
        let interior = find_interior_certificate(problem, query)?;
        let weak_witness = weak_dominates_check(problem, query)?;
        let eff_witness = efficient_dominates_check(problem, query)?;

        let mut verified = true;
        for cert in weak.iter().chain(interior.iter()) {
            let inner = verify_certificate(problem, query, cert)?;
            verified &= inner.is_valid() && cert.satisfies_dual_equations(problem, &system);
            if let Verdict::Valid { .. } = inner {
                verified &= reconstruct_dual_witness(problem, &system, &cert.lambda)?.is_some();
            }
        }
        for witness in weak_witness.iter().chain(eff_witness.iter()) {
            verified &= witness.verify(problem, query)?;
        }
        Ok(Self {
            weak_certificate: weak.is_some(),
            weak_dominated: weak_witness.is_some(),
            interior_certificate: interior.is_some(),
            efficient_dominated: eff_witness.is_some(),
            artifacts_verified: verified,
        })
    }

    /// A weak certificate exists iff nothing weakly dominates.
    pub fn weak_equivalence_holds(&self) -> bool {
        self.weak_certificate != self.weak_dominated
    }

    /// Interior certificate implies no dominator; no dominator implies a
    /// weak certificate.
    pub fn efficiency_implications_hold(&self) -> bool {
        (!self.interior_certificate || !self.efficient_dominated)
            && (self.efficient_dominated || self.weak_certificate)
    }
}

fn eval_f64(obj: &LinearFractionalObjective, x: &[f64]) -> f64 {
    let lin = |coeffs: &[Rational], c: &Rational| {
        coeffs
            .iter()
            .zip(x)
            .map(|(a, v)| to_f64(a) * v)
            .sum::<f64>()
            + to_f64(c)
    };
    lin(&obj.a, &obj.alpha) / lin(&obj.b, &obj.beta)
}

/// Largest relative error between the exact gradient and a central
/// difference, using `max(|g|, 1)` as the scale.
pub fn finite_difference_error(
    obj: &LinearFractionalObjective,
    x: &[Rational],
) -> crate::Result<f64> {
    let exact = obj.gradient(x)?;
    let base: Vec<f64> = x.iter().map(to_f64).collect();
    let mut worst = 0.0f64;
    for (j, g) in exact.iter().enumerate() {
        let h = 1e-6 * base[j].abs().max(1.0);
        let mut plus = base.clone();
        let mut minus = base.clone();
        plus[j] += h;
        minus[j] -= h;
        let approx = (eval_f64(obj, &plus) - eval_f64(obj, &minus)) / (2.0 * h);
        let g = to_f64(g);
        worst = worst.max((approx - g).abs() / g.abs().max(1.0));
    }
    Ok(worst)
}

/// Runs every suite with `count` cases each.
pub fn run(seed: u64, count: usize) -> SelfTestSummary {
    let mut weak_eq = SuiteResult::new("weak-certificate-equivalence");
    let mut implications = SuiteResult::new("efficiency-implications");
    let mut artifacts = SuiteResult::new("certificate-and-witness-recheck");
    let mut cases = InstanceGenerator::new(seed);
    for _ in 0..count {
        let case = cases.problem_case();
        match CrossCheck::run(&case.problem, &case.query) {
            Ok(check) => {
                weak_eq.record(check.weak_equivalence_holds(), || {
                    format!("{check:?} for {}", describe(&case))
                });
                implications.record(check.efficiency_implications_hold(), || {
                    format!("{check:?} for {}", describe(&case))
                });
                artifacts.record(check.artifacts_verified, || describe(&case));
            }
            Err(e) => {
                let msg = || format!("{e} for {}", describe(&case));
                weak_eq.record(false, msg);
                implications.record(false, msg);
                artifacts.record(false, msg);
            }
        }
    }

    let mut identity = SuiteResult::new("fractional-identity");
    let mut fd = SuiteResult::new("gradient-finite-difference");
    let mut objectives = InstanceGenerator::new(seed.wrapping_add(1));
    for _ in 0..count {
        let (obj, x, y) = objectives.objective_with_points();
        let residual = obj.fractional_identity_residual(&x, &y);
        identity.record(matches!(&residual, Ok(r) if r.is_zero()), || {
            format!(
                "{obj:?} x = {} y = {} residual {residual:?}",
                display_vec(&x),
                display_vec(&y)
            )
        });
        let err = finite_difference_error(&obj, &x);
        fd.record(
            matches!(err, Ok(e) if e <= GRADIENT_RELATIVE_TOLERANCE),
            || format!("{obj:?} x = {} error {err:?}", display_vec(&x)),
        );
    }

    let mut cone = SuiteResult::new("cone-hull-disjointness");
    let mut sets = InstanceGenerator::new(seed.wrapping_add(2));
    for _ in 0..count {
        let omega = sets.point_set();
        let out = cone_lemma_check(&omega);
        cone.record(matches!(out, Ok(o) if o.hull_agrees_with_cone()), || {
            format!("{:?} -> {out:?}", omega.points())
        });
    }

    let mut duality = SuiteResult::new("lp-strong-duality");
    let mut lps = InstanceGenerator::new(seed.wrapping_add(3));
    for _ in 0..count {
        let lp = lps.solvable_lp();
        let primal = lp.solve();
        let dual = lp.dual().solve();
        let ok = match (&primal, &dual) {
            (Ok(p), Ok(d)) => match (p.value(), d.value(), p.point()) {
                (Some(pv), Some(dv), Some(x)) => *pv == -dv && lp.is_satisfied_by(x),
                _ => false,
            },
            _ => false,
        };
        duality.record(ok, || format!("{lp:?}: primal {primal:?} dual {dual:?}"));
    }

    SelfTestSummary {
        seed,
        count,
        suites: vec![
            weak_eq,
            implications,
            artifacts,
            identity,
            fd,
            cone,
            duality,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let summary = run(5, 15);
        for suite in &summary.suites {
            assert!(suite.ok(), "{}: {:?}", suite.name, suite.first_failure);
            assert_eq!(suite.total(), 15);
        }
    }

    #[test]
    fn zero_count_is_vacuous() {
        let summary = run(0, 0);
        assert!(summary.all_passed());
        assert!(summary.suites.iter().all(|s| s.total() == 0));
    }

    #[test]
    fn replay_is_identical() {
        assert_eq!(run(9, 5), run(9, 5));
    }
}
