//! Multiplier certificates for approximate (weak) efficiency.
//!
//! For a candidate `x_bar` and tolerance `eps`, build the affine map
//! `y -> A y + b` with
//!
//! ```text
//!   (A y + b)_i = (b_i^T x_bar + beta_i) <grad f_i(x_bar), y - x_bar> + eps_i (b_i^T y + beta_i)
//! ```
//!
//! `x_bar` is eps-weakly efficient iff some `lambda >= 0`, `lambda != 0`,
//! keeps `lambda^T (A y + b) >= 0` on all of `K`; a strictly positive such
//! `lambda` is sufficient for eps-efficiency. The "for all `y` in `K`" part is
//! discharged by LP duality: the inner minimum of `lambda^T A y` over
//! `C y <= d` is bounded below by `-lambda^T b` iff there is `mu >= 0` with
//! `A^T lambda + C^T mu = 0` and `b^T lambda - d^T mu >= 0`. The search is
//! then a single LP over `(lambda, mu)`, valid for unbounded `K` as well.

use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::oracle::{efficient_dominates_check, weak_dominates_check, DominanceWitness};
use crate::problem::{Problem, Query};
use crate::rational::{dot, int, mat_t_vec, mat_vec, sub, Rational};
use crate::simplex::{LinearProgram, LpOutcome, Relation, VarBound};

/// The affine map `y -> A y + b` attached to a candidate point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateSystem {
    /// `m x n`, row `i` is `(b_i^T x_bar + beta_i) grad f_i(x_bar)^T + eps_i b_i^T`.
    pub matrix: Vec<Vec<Rational>>,
    /// Entry `i` is `-(b_i^T x_bar + beta_i) <grad f_i(x_bar), x_bar> + eps_i beta_i`.
    pub offset: Vec<Rational>,
}

impl CertificateSystem {
    pub fn apply(&self, y: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.matrix, y)
            .into_iter()
            .zip(&self.offset)
            .map(|(v, b)| v + b)
            .collect()
    }

    pub fn num_objectives(&self) -> usize {
        self.offset.len()
    }

    /// `lambda^T (A y + b)`
    pub fn weighted(&self, lambda: &[Rational], y: &[Rational]) -> Rational {
        dot(lambda, &self.apply(y))
    }
}

/// Builds `A`, `b` for `query` after checking its preconditions.
pub fn build_certificate_system(problem: &Problem, query: &Query) -> Result<CertificateSystem> {
    problem.check_query(query)?;
    let x_bar = &query.x_bar;
    let mut matrix = Vec::with_capacity(problem.num_objectives());
    let mut offset = Vec::with_capacity(problem.num_objectives());
    for (f, eps) in problem.objectives().iter().zip(&query.epsilon) {
        let den = f.denominator(x_bar);
        let grad = f.gradient(x_bar)?;
        let row: Vec<Rational> = grad
            .iter()
            .zip(&f.b)
            .map(|(g, b)| &den * g + eps * b)
            .collect();
        offset.push(-(&den * dot(&grad, x_bar)) + eps * &f.beta);
        matrix.push(row);
    }
    Ok(CertificateSystem { matrix, offset })
}

/// Expanded form of `(A y + b)_i`, computed without `A` and `b`.
pub fn certificate_row_value(
    problem: &Problem,
    query: &Query,
    index: usize,
    y: &[Rational],
) -> Result<Rational> {
    let f = &problem.objectives()[index];
    let grad = f.gradient(&query.x_bar)?;
    Ok(
        f.denominator(&query.x_bar) * dot(&grad, &sub(y, &query.x_bar))
            + &query.epsilon[index] * f.denominator(y),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// `lambda >= 0`, `lambda != 0`.
    Boundary,
    /// `lambda > 0` componentwise.
    Interior,
}

/// Multipliers `lambda` (normalized to sum 1) with the dual witness `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
    pub kind: CertificateKind,
}

impl Certificate {
    /// Sign pattern of `lambda` required by `kind`, plus the normalization.
    pub fn multiplier_is_admissible(&self) -> bool {
        let signs = match self.kind {
            CertificateKind::Boundary => {
                self.lambda.iter().all(|l| !l.is_negative())
                    && self.lambda.iter().any(|l| !l.is_zero())
            }
            CertificateKind::Interior => self.lambda.iter().all(Signed::is_positive),
        };
        let total: Rational = self.lambda.iter().sum();
        signs && total == int(1)
    }

    /// Checks `mu >= 0`, `A^T lambda + C^T mu = 0` and `b^T lambda - d^T mu >= 0`.
    pub fn satisfies_dual_equations(&self, problem: &Problem, system: &CertificateSystem) -> bool {
        let set = problem.feasible_set();
        if self.lambda.len() != system.num_objectives() || self.mu.len() != set.num_rows() {
            return false;
        }
        if self.mu.iter().any(Signed::is_negative) {
            return false;
        }
        let n = problem.dim();
        let stationarity = mat_t_vec(&system.matrix, &self.lambda, n)
            .into_iter()
            .zip(mat_t_vec(set.rows(), &self.mu, n))
            .all(|(l, r)| (l + r).is_zero());
        stationarity && dot(&system.offset, &self.lambda) >= dot(set.rhs(), &self.mu)
    }
}

/// Joint LP in `(lambda, mu[, t])`. Variables: `lambda` (m), `mu` (p), then
/// the optional max-min slack `t`.
fn certificate_lp(problem: &Problem, system: &CertificateSystem, interior: bool) -> LinearProgram {
    let m = problem.num_objectives();
    let set = problem.feasible_set();
    let p = set.num_rows();
    let width = m + p + usize::from(interior);

    let mut bounds = vec![VarBound::NonNegative; m + p];
    let mut objective = vec![Rational::zero(); width];
    if interior {
        bounds.push(VarBound::Free);
        objective[m + p] = int(-1);
    }
    let mut lp = LinearProgram::new(objective, bounds);

    let mut normalization = vec![Rational::zero(); width];
    for entry in &mut normalization[..m] {
        *entry = int(1);
    }
    lp.add_row(normalization, Relation::Eq, int(1));

    for j in 0..problem.dim() {
        let row = system
            .matrix
            .iter()
            .chain(set.rows())
            .map(|r| r[j].clone())
            .chain(std::iter::repeat_with(Rational::zero))
            .take(width)
            .collect();
        lp.add_row(row, Relation::Eq, Rational::zero());
    }

    let mut value = vec![Rational::zero(); width];
    value[..m].clone_from_slice(&system.offset);
    for k in 0..p {
        value[m + k] = -&set.rhs()[k];
    }
    lp.add_row(value, Relation::Ge, Rational::zero());

    if interior {
        for i in 0..m {
            let mut row = vec![Rational::zero(); width];
            row[i] = int(1);
            row[m + p] = int(-1);
            lp.add_row(row, Relation::Ge, Rational::zero());
        }
    }
    lp
}

fn split(point: &[Rational], m: usize, p: usize) -> (Vec<Rational>, Vec<Rational>) {
    (point[..m].to_vec(), point[m..m + p].to_vec())
}

fn prepare(problem: &Problem, query: &Query) -> Result<CertificateSystem> {
    if problem.feasible_set().feasible_point()?.is_none() {
        return Err(Error::EmptyFeasibleSet);
    }
    build_certificate_system(problem, query)
}

/// Finds `lambda >= 0`, `sum lambda = 1`, with a dual witness, or `None` when
/// no such multiplier exists (then `x_bar` is not eps-weakly efficient).
pub fn find_weak_certificate(problem: &Problem, query: &Query) -> Result<Option<Certificate>> {
    let system = prepare(problem, query)?;
    let lp = certificate_lp(problem, &system, false);
    let Some(point) = lp.feasible_point()?.point().map(<[_]>::to_vec) else {
        return Ok(None);
    };
    let (lambda, mu) = split(
        &point,
        problem.num_objectives(),
        problem.feasible_set().num_rows(),
    );
    Ok(Some(Certificate {
        lambda,
        mu,
        kind: CertificateKind::Boundary,
    }))
}

/// Maximizes `t` subject to `lambda_i >= t` over the certificate LP and returns
/// an interior certificate iff `t* > 0`.
pub fn find_interior_certificate(problem: &Problem, query: &Query) -> Result<Option<Certificate>> {
    let system = prepare(problem, query)?;
    let lp = certificate_lp(problem, &system, true);
    match lp.solve()? {
        LpOutcome::Optimal { point, .. } => {
            let m = problem.num_objectives();
            let p = problem.feasible_set().num_rows();
            if !point[m + p].is_positive() {
                return Ok(None);
            }
            let (lambda, mu) = split(&point, m, p);
            Ok(Some(Certificate {
                lambda,
                mu,
                kind: CertificateKind::Interior,
            }))
        }
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(Error::Inconsistent(
            "max-min multiplier LP reported unbounded",
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// `lambda` has the wrong sign pattern for its kind or does not sum to 1.
    InadmissibleMultiplier,
    /// `lambda^T (A y + b)` is unbounded below on `K`.
    InnerUnbounded,
    /// `lambda^T (A y + b)` attains this negative value on `K`.
    NegativeMinimum(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid { inner_minimum: Rational },
    Invalid(Rejection),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

/// Checks a certificate by minimizing `lambda^T (A y + b)` over `K` directly.
/// Independent of `mu`.
pub fn verify_certificate(problem: &Problem, query: &Query, cert: &Certificate) -> Result<Verdict> {
    let system = build_certificate_system(problem, query)?;
    check_len(
        "certificate multiplier",
        system.num_objectives(),
        cert.lambda.len(),
    )?;
    if !cert.multiplier_is_admissible() {
        return Ok(Verdict::Invalid(Rejection::InadmissibleMultiplier));
    }
    let direction = mat_t_vec(&system.matrix, &cert.lambda, problem.dim());
    let constant = dot(&system.offset, &cert.lambda);
    match problem.feasible_set().lp(direction).solve()? {
        LpOutcome::Optimal { value, .. } => {
            let minimum = value + constant;
            if minimum.is_negative() {
                Ok(Verdict::Invalid(Rejection::NegativeMinimum(minimum)))
            } else {
                Ok(Verdict::Valid {
                    inner_minimum: minimum,
                })
            }
        }
        LpOutcome::Unbounded => Ok(Verdict::Invalid(Rejection::InnerUnbounded)),
        LpOutcome::Infeasible => Err(Error::EmptyFeasibleSet),
    }
}

/// Searches for `mu >= 0` completing `lambda` to a certificate.
pub fn reconstruct_dual_witness(
    problem: &Problem,
    system: &CertificateSystem,
    lambda: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let set = problem.feasible_set();
    let p = set.num_rows();
    let n = problem.dim();
    let target = mat_t_vec(&system.matrix, lambda, n);
    let mut lp = LinearProgram::feasibility(vec![VarBound::NonNegative; p]);
    for (j, t) in target.iter().enumerate() {
        let row = set.rows().iter().map(|r| r[j].clone()).collect();
        lp.add_row(row, Relation::Eq, -t);
    }
    lp.add_row(
        set.rhs().iter().map(|d| -d).collect(),
        Relation::Ge,
        -dot(&system.offset, lambda),
    );
    Ok(lp.feasible_point()?.point().map(<[_]>::to_vec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// No multiplier certificate: some feasible point beats `f(x_bar) - eps`
    /// strictly in every component.
    NotWeaklyEpsEfficient,
    /// A boundary certificate exists but no interior one; eps-efficiency is
    /// not decided by certificates alone.
    WeakCertifiedOnly,
    /// eps-weakly efficient but not eps-efficient.
    WeaklyEpsEfficientOnly,
    EpsEfficient,
}

impl Membership {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership::NotWeaklyEpsEfficient => "NotWeaklyEpsEfficient",
            Membership::WeakCertifiedOnly => "WeakCertifiedOnly",
            Membership::WeaklyEpsEfficientOnly => "WeaklyEpsEfficientOnly",
            Membership::EpsEfficient => "EpsEfficient",
        }
    }
}

/// What settled the final verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionSource {
    /// Absence of a weak certificate.
    WeakCertificateSearch,
    /// An interior certificate was found.
    InteriorCertificate,
    /// Certificates left a gap; the dominance oracle closed it.
    DominanceOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Refinement {
    /// Report `WeakCertifiedOnly` when certificates do not decide.
    None,
    /// Resolve the gap, and attach witnesses, with the dominance oracle.
    #[default]
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub membership: Membership,
    pub weak_certificate: Option<Certificate>,
    pub interior_certificate: Option<Certificate>,
    pub witness: Option<DominanceWitness>,
    /// `None` only for an unrefined `WeakCertifiedOnly`.
    pub decided_by: Option<DecisionSource>,
}

pub fn classify(
    problem: &Problem,
    query: &Query,
    refinement: Refinement,
) -> Result<Classification> {
    let Some(weak) = find_weak_certificate(problem, query)? else {
        let witness = match refinement {
            Refinement::None => None,
            Refinement::Oracle => Some(weak_dominates_check(problem, query)?.ok_or(
                Error::Inconsistent("no weak certificate but no dominating point"),
            )?),
        };
        return Ok(Classification {
            membership: Membership::NotWeaklyEpsEfficient,
            weak_certificate: None,
            interior_certificate: None,
            witness,
            decided_by: Some(DecisionSource::WeakCertificateSearch),
        });
    };

    if let Some(interior) = find_interior_certificate(problem, query)? {
        return Ok(Classification {
            membership: Membership::EpsEfficient,
            weak_certificate: Some(weak),
            interior_certificate: Some(interior),
            witness: None,
            decided_by: Some(DecisionSource::InteriorCertificate),
        });
    }

    let (membership, witness, decided_by) = match refinement {
        Refinement::None => (Membership::WeakCertifiedOnly, None, None),
        Refinement::Oracle => match efficient_dominates_check(problem, query)? {
            None => (
                Membership::EpsEfficient,
                None,
                Some(DecisionSource::DominanceOracle),
            ),
            Some(w) => (
                Membership::WeaklyEpsEfficientOnly,
                Some(w),
                Some(DecisionSource::DominanceOracle),
            ),
        },
    };
    Ok(Classification {
        membership,
        weak_certificate: Some(weak),
        interior_certificate: None,
        witness,
        decided_by,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DominanceKind;
    use crate::problem::{LinearFractionalObjective, PolyhedralSet};
    use crate::rational::ratio;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn example() -> Problem {
        let set = PolyhedralSet::new(2, vec![q(&[-1, 0])], q(&[0])).unwrap();
        Problem::new(
            vec![
                LinearFractionalObjective::linear(q(&[1, 0]), int(0)),
                LinearFractionalObjective::linear(q(&[0, 1]), int(0)),
            ],
            set,
        )
        .unwrap()
    }

    /// min (y1, y2) over y1 + y2 >= 1, y >= 0.
    fn simplex_corner() -> Problem {
        let set = PolyhedralSet::new(
            2,
            vec![q(&[-1, -1]), q(&[-1, 0]), q(&[0, -1])],
            q(&[-1, 0, 0]),
        )
        .unwrap();
        Problem::new(
            vec![
                LinearFractionalObjective::linear(q(&[1, 0]), int(0)),
                LinearFractionalObjective::linear(q(&[0, 1]), int(0)),
            ],
            set,
        )
        .unwrap()
    }

    #[test]
    fn system_for_example_instance() {
        let sys =
            build_certificate_system(&example(), &Query::new(q(&[0, 0]), q(&[1, 0]))).unwrap();
        assert_eq!(sys.matrix, vec![q(&[1, 0]), q(&[0, 1])]);
        assert_eq!(sys.offset, q(&[1, 0]));
    }

    #[test]
    fn system_with_zero_epsilon_vanishes_at_candidate() {
        let set = PolyhedralSet::new(2, vec![q(&[-1, 0]), q(&[0, -1])], q(&[0, 0])).unwrap();
        let p = Problem::new(
            vec![
                LinearFractionalObjective::new(q(&[1, 1]), int(0), q(&[1, 0]), int(2)).unwrap(),
                LinearFractionalObjective::new(q(&[2, -1]), int(3), q(&[0, 1]), int(1)).unwrap(),
            ],
            set,
        )
        .unwrap();
        let x_bar = vec![ratio(1, 2), int(3)];
        let query = Query::new(x_bar.clone(), q(&[0, 0]));
        let sys = build_certificate_system(&p, &query).unwrap();
        assert!(sys.apply(&x_bar).iter().all(Zero::is_zero));
        let y = vec![int(4), ratio(7, 3)];
        for i in 0..2 {
            assert_eq!(
                sys.apply(&y)[i],
                certificate_row_value(&p, &query, i, &y).unwrap()
            );
        }
    }

    #[test]
    fn system_for_linear_objectives() {
        let p = simplex_corner();
        let query = Query::new(vec![ratio(1, 2), ratio(1, 2)], vec![ratio(1, 4), int(1)]);
        let sys = build_certificate_system(&p, &query).unwrap();
        assert_eq!(sys.matrix, vec![q(&[1, 0]), q(&[0, 1])]);
        assert_eq!(sys.offset, vec![ratio(-1, 4), ratio(1, 2)]);
    }

    #[test]
    fn system_precondition_errors() {
        let p = example();
        assert_eq!(
            build_certificate_system(&p, &Query::new(q(&[-1, 0]), q(&[1, 0]))),
            Err(Error::InfeasibleCandidate { row: 0 })
        );
        assert_eq!(
            build_certificate_system(&p, &Query::new(q(&[0, 0]), q(&[-1, 0]))),
            Err(Error::NegativeEpsilon { index: 0 })
        );
    }

    #[test]
    fn domain_violation_at_candidate() {
        let set = PolyhedralSet::new(1, vec![q(&[1])], q(&[5])).unwrap();
        let p = Problem::new(
            vec![LinearFractionalObjective::new(q(&[1]), int(0), q(&[1]), int(0)).unwrap()],
            set,
        )
        .unwrap();
        assert_eq!(
            build_certificate_system(&p, &Query::new(q(&[-1]), q(&[0]))),
            Err(Error::DomainViolation { index: 0 })
        );
    }

    #[test]
    fn weak_certificate_at_origin() {
        let p = example();
        let query = Query::new(q(&[0, 0]), q(&[1, 0]));
        let cert = find_weak_certificate(&p, &query)
            .unwrap()
            .expect("certificate");
        assert_eq!(cert.lambda, q(&[1, 0]));
        assert_eq!(cert.mu, q(&[1]));
        let sys = build_certificate_system(&p, &query).unwrap();
        assert!(cert.satisfies_dual_equations(&p, &sys));
        assert_eq!(
            verify_certificate(&p, &query, &cert).unwrap(),
            Verdict::Valid {
                inner_minimum: int(1)
            }
        );
    }

    #[test]
    fn no_weak_certificate_outside() {
        let p = example();
        assert_eq!(
            find_weak_certificate(&p, &Query::new(q(&[2, 0]), q(&[1, 0]))).unwrap(),
            None
        );
    }

    #[test]
    fn certificates_at_efficient_point() {
        let p = simplex_corner();
        let query = Query::new(vec![ratio(1, 2), ratio(1, 2)], q(&[0, 0]));
        let weak = find_weak_certificate(&p, &query).unwrap().expect("weak");
        assert_eq!(weak.lambda, vec![ratio(1, 2), ratio(1, 2)]);
        let interior = find_interior_certificate(&p, &query)
            .unwrap()
            .expect("interior");
        assert_eq!(interior.kind, CertificateKind::Interior);
        assert_eq!(interior.lambda, vec![ratio(1, 2), ratio(1, 2)]);
        assert!(verify_certificate(&p, &query, &interior)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn no_interior_certificate_at_origin() {
        let p = example();
        assert_eq!(
            find_interior_certificate(&p, &Query::new(q(&[0, 0]), q(&[1, 0]))).unwrap(),
            None
        );
    }

    #[test]
    fn scalar_problem_interior_certificate() {
        // min y over [1, 4]; x_bar = 2 is a 1-minimizer.
        let set = PolyhedralSet::new(1, vec![q(&[-1]), q(&[1])], q(&[-1, 4])).unwrap();
        let p = Problem::new(
            vec![LinearFractionalObjective::linear(q(&[1]), int(0))],
            set,
        )
        .unwrap();
        let cert = find_interior_certificate(&p, &Query::new(q(&[2]), q(&[1])))
            .unwrap()
            .expect("interior");
        assert_eq!(cert.lambda, q(&[1]));
        assert_eq!(
            find_interior_certificate(&p, &Query::new(q(&[3]), q(&[1]))).unwrap(),
            None
        );
    }

    #[test]
    fn verify_rejects_unbounded_direction() {
        let p = example();
        let query = Query::new(q(&[0, 0]), q(&[1, 0]));
        let cert = Certificate {
            lambda: q(&[0, 1]),
            mu: q(&[0]),
            kind: CertificateKind::Boundary,
        };
        assert_eq!(
            verify_certificate(&p, &query, &cert).unwrap(),
            Verdict::Invalid(Rejection::InnerUnbounded)
        );
        let sys = build_certificate_system(&p, &query).unwrap();
        assert_eq!(
            reconstruct_dual_witness(&p, &sys, &cert.lambda).unwrap(),
            None
        );
        assert_eq!(
            reconstruct_dual_witness(&p, &sys, &q(&[1, 0])).unwrap(),
            Some(q(&[1]))
        );
    }

    #[test]
    fn verify_on_singleton_set() {
        let set = PolyhedralSet::new(
            2,
            vec![q(&[1, 0]), q(&[-1, 0]), q(&[0, 1]), q(&[0, -1])],
            q(&[1, -1, 1, -1]),
        )
        .unwrap();
        let p = Problem::new(
            vec![
                LinearFractionalObjective::new(q(&[1, 2]), int(0), q(&[1, 0]), int(1)).unwrap(),
                LinearFractionalObjective::linear(q(&[-3, 1]), int(2)),
            ],
            set,
        )
        .unwrap();
        let query = Query::new(q(&[1, 1]), vec![ratio(1, 4), int(1)]);
        for lambda in [q(&[1, 0]), q(&[0, 1]), vec![ratio(1, 3), ratio(2, 3)]] {
            let cert = Certificate {
                lambda,
                mu: q(&[0, 0, 0, 0]),
                kind: CertificateKind::Boundary,
            };
            assert!(verify_certificate(&p, &query, &cert).unwrap().is_valid());
        }
    }

    #[test]
    fn verify_rejects_bad_sign_pattern() {
        let p = example();
        let query = Query::new(q(&[0, 0]), q(&[1, 0]));
        let cert = Certificate {
            lambda: q(&[1, 0]),
            mu: q(&[1]),
            kind: CertificateKind::Interior,
        };
        assert_eq!(
            verify_certificate(&p, &query, &cert).unwrap(),
            Verdict::Invalid(Rejection::InadmissibleMultiplier)
        );
    }

    #[test]
    fn classify_example_points() {
        let p = example();
        let eps = q(&[1, 0]);
        let at = |x: i64, r| classify(&p, &Query::new(q(&[x, 0]), eps.clone()), r).unwrap();

        let origin = at(0, Refinement::None);
        assert_eq!(origin.membership, Membership::WeakCertifiedOnly);
        assert_eq!(origin.decided_by, None);
        let origin = at(0, Refinement::Oracle);
        assert_eq!(origin.membership, Membership::EpsEfficient);
        assert_eq!(origin.decided_by, Some(DecisionSource::DominanceOracle));

        let edge = at(1, Refinement::Oracle);
        assert_eq!(edge.membership, Membership::WeaklyEpsEfficientOnly);
        assert_eq!(
            edge.witness.as_ref().map(|w| w.kind),
            Some(DominanceKind::WeakWithStrictIndex(1))
        );

        let outside = at(3, Refinement::Oracle);
        assert_eq!(outside.membership, Membership::NotWeaklyEpsEfficient);
        assert_eq!(
            outside.witness.as_ref().map(|w| w.kind),
            Some(DominanceKind::StrictAll)
        );
        assert_eq!(at(3, Refinement::None).witness, None);
    }

    #[test]
    fn empty_feasible_set() {
        let set = PolyhedralSet::new(1, vec![q(&[1]), q(&[-1])], q(&[-1, 0])).unwrap();
        let p = Problem::new(
            vec![LinearFractionalObjective::linear(q(&[1]), int(0))],
            set,
        )
        .unwrap();
        let query = Query::new(q(&[0]), q(&[0]));
        assert_eq!(
            find_weak_certificate(&p, &query),
            Err(Error::EmptyFeasibleSet)
        );
        assert_eq!(
            find_interior_certificate(&p, &query),
            Err(Error::EmptyFeasibleSet)
        );
    }
}
