//! Problem data: linear fractional objectives over a polyhedral set.

use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::rational::{dot, int, sub, Rational};
use crate::simplex::{LinearProgram, LpOutcome, Relation, VarBound};

/// `f(x) = (a^T x + alpha) / (b^T x + beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFractionalObjective {
    pub a: Vec<Rational>,
    pub alpha: Rational,
    pub b: Vec<Rational>,
    pub beta: Rational,
}

impl LinearFractionalObjective {
    pub fn new(
        a: Vec<Rational>,
        alpha: Rational,
        b: Vec<Rational>,
        beta: Rational,
    ) -> Result<Self> {
        check_len("objective denominator vector", a.len(), b.len())?;
        Ok(Self { a, alpha, b, beta })
    }

    /// A linear objective `a^T x + alpha` (denominator identically one).
    pub fn linear(a: Vec<Rational>, alpha: Rational) -> Self {
        let b = vec![Rational::zero(); a.len()];
        Self {
            a,
            alpha,
            b,
            beta: int(1),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn is_linear(&self) -> bool {
        self.b.iter().all(Zero::is_zero) && self.beta == int(1)
    }

    pub fn numerator(&self, x: &[Rational]) -> Rational {
        dot(&self.a, x) + &self.alpha
    }

    pub fn denominator(&self, x: &[Rational]) -> Rational {
        dot(&self.b, x) + &self.beta
    }

    fn nonzero_denominator(&self, x: &[Rational]) -> Result<Rational> {
        check_len("evaluation point", self.dim(), x.len())?;
        let den = self.denominator(x);
        if den.is_zero() {
            Err(Error::ZeroDenominator)
        } else {
            Ok(den)
        }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        let den = self.nonzero_denominator(x)?;
        Ok(self.numerator(x) / den)
    }

    /// `[a (b^T x + beta) - b (a^T x + alpha)] / (b^T x + beta)^2`
    pub fn gradient(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let den = self.nonzero_denominator(x)?;
        let num = self.numerator(x);
        let den_sq = &den * &den;
        Ok(self
            .a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| (a * &den - b * &num) / &den_sq)
            .collect())
    }

    /// `[f(y) - f(x)] - (b^T x + beta) / (b^T y + beta) * <grad f(x), y - x>`.
    ///
    /// Zero for every pair of points where both denominators are nonzero.
    pub fn fractional_identity_residual(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let den_x = self.nonzero_denominator(x)?;
        let den_y = self.nonzero_denominator(y)?;
        let lhs = self.evaluate(y)? - self.evaluate(x)?;
        let rhs = den_x / den_y * dot(&self.gradient(x)?, &sub(y, x));
        Ok(lhs - rhs)
    }
}

/// `K = { x : C x <= d }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralSet {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl PolyhedralSet {
    pub fn new(dim: usize, rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        check_len("constraint right-hand side", rows.len(), rhs.len())?;
        for row in &rows {
            check_len("constraint row", dim, row.len())?;
        }
        Ok(Self { dim, rows, rhs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Index of the first row with `C_k x > d_k`.
    pub fn first_violated_row(&self, x: &[Rational]) -> Option<usize> {
        self.rows
            .iter()
            .zip(&self.rhs)
            .position(|(row, d)| dot(row, x) > *d)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.first_violated_row(x).is_none()
    }

    /// `min objective^T y` over the set, with the `Cy <= d` rows first.
    pub(crate) fn lp(&self, objective: Vec<Rational>) -> LinearProgram {
        let mut lp = LinearProgram::new(objective, vec![VarBound::Free; self.dim]);
        for (row, d) in self.rows.iter().zip(&self.rhs) {
            lp.add_row(row.clone(), Relation::Le, d.clone());
        }
        lp
    }

    pub fn feasible_point(&self) -> Result<Option<Vec<Rational>>> {
        let lp = self.lp(vec![Rational::zero(); self.dim]);
        Ok(lp.feasible_point()?.point().map(<[_]>::to_vec))
    }
}

/// Minimize `f(x) = (f_1(x), ..., f_m(x))` over `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    objectives: Vec<LinearFractionalObjective>,
    feasible_set: PolyhedralSet,
}

impl Problem {
    pub fn new(
        objectives: Vec<LinearFractionalObjective>,
        feasible_set: PolyhedralSet,
    ) -> Result<Self> {
        if objectives.is_empty() {
            return Err(Error::NoObjectives);
        }
        for obj in &objectives {
            check_len("objective", feasible_set.dim(), obj.dim())?;
        }
        Ok(Self {
            objectives,
            feasible_set,
        })
    }

    pub fn objectives(&self) -> &[LinearFractionalObjective] {
        &self.objectives
    }

    pub fn feasible_set(&self) -> &PolyhedralSet {
        &self.feasible_set
    }

    /// Number of objectives `m`.
    pub fn num_objectives(&self) -> usize {
        self.objectives.len()
    }

    /// Dimension `n` of the decision space.
    pub fn dim(&self) -> usize {
        self.feasible_set.dim()
    }

    pub fn is_linear(&self) -> bool {
        self.objectives
            .iter()
            .all(LinearFractionalObjective::is_linear)
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.objectives.iter().map(|f| f.evaluate(x)).collect()
    }

    /// Checks the preconditions every decision procedure relies on:
    /// matching dimensions, `epsilon >= 0`, `x_bar` in `K`, and positive
    /// denominators at `x_bar`.
    pub fn check_query(&self, query: &Query) -> Result<()> {
        check_len("candidate point", self.dim(), query.x_bar.len())?;
        check_len("epsilon", self.num_objectives(), query.epsilon.len())?;
        if let Some(index) = query.epsilon.iter().position(Signed::is_negative) {
            return Err(Error::NegativeEpsilon { index });
        }
        if let Some(row) = self.feasible_set.first_violated_row(&query.x_bar) {
            return Err(Error::InfeasibleCandidate { row });
        }
        if let Some(index) = self
            .objectives
            .iter()
            .position(|f| !f.denominator(&query.x_bar).is_positive())
        {
            return Err(Error::DomainViolation { index });
        }
        Ok(())
    }
}

/// A candidate point together with the tolerance vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub x_bar: Vec<Rational>,
    pub epsilon: Vec<Rational>,
}

impl Query {
    pub fn new(x_bar: Vec<Rational>, epsilon: Vec<Rational>) -> Self {
        Self { x_bar, epsilon }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationReport {
    /// `K` is nonempty and every denominator is positive on it.
    /// `denominator_minima[i]` is `min { b_i^T y + beta_i : y in K }`.
    Valid {
        denominator_minima: Vec<Rational>,
    },
    EmptyFeasibleSet,
    /// Denominator `index` is not positive on all of `K`. `minimum` is
    /// `None` when it is unbounded below.
    StandingConditionViolated {
        index: usize,
        minimum: Option<Rational>,
    },
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid { .. })
    }
}

/// Decides, by one LP per objective, whether every denominator is strictly
/// positive on a nonempty `K`.
pub fn validate_problem(problem: &Problem) -> Result<ValidationReport> {
    let set = problem.feasible_set();
    if set.feasible_point()?.is_none() {
        return Ok(ValidationReport::EmptyFeasibleSet);
    }
    let mut minima = Vec::with_capacity(problem.num_objectives());
    for (index, obj) in problem.objectives().iter().enumerate() {
        let minimum = if obj.b.iter().all(Zero::is_zero) {
            obj.beta.clone()
        } else {
            match set.lp(obj.b.clone()).solve()? {
                LpOutcome::Optimal { value, .. } => value + &obj.beta,
                LpOutcome::Unbounded => {
                    return Ok(ValidationReport::StandingConditionViolated {
                        index,
                        minimum: None,
                    })
                }
                LpOutcome::Infeasible => return Ok(ValidationReport::EmptyFeasibleSet),
            }
        };
        if !minimum.is_positive() {
            return Ok(ValidationReport::StandingConditionViolated {
                index,
                minimum: Some(minimum),
            });
        }
        minima.push(minimum);
    }
    Ok(ValidationReport::Valid {
        denominator_minima: minima,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// `(x1 + x2) / (x1 + 2)`
    fn sample() -> LinearFractionalObjective {
        LinearFractionalObjective::new(q(&[1, 1]), int(0), q(&[1, 0]), int(2)).unwrap()
    }

    fn example_problem() -> Problem {
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

    #[test]
    fn evaluate_examples() {
        let f1 = LinearFractionalObjective::linear(q(&[1, 0]), int(0));
        assert_eq!(f1.evaluate(&q(&[2, 3])).unwrap(), int(2));
        assert_eq!(sample().evaluate(&q(&[0, 0])).unwrap(), int(0));
        assert_eq!(sample().evaluate(&q(&[2, 2])).unwrap(), int(1));
    }

    #[test]
    fn evaluate_zero_denominator() {
        assert_eq!(sample().evaluate(&q(&[-2, 5])), Err(Error::ZeroDenominator));
        assert_eq!(sample().gradient(&q(&[-2, 0])), Err(Error::ZeroDenominator));
        assert!(matches!(
            sample().evaluate(&q(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn gradient_examples() {
        assert_eq!(
            sample().gradient(&q(&[0, 0])).unwrap(),
            vec![ratio(1, 2), ratio(1, 2)]
        );
        let lin = LinearFractionalObjective::linear(q(&[3, -4]), int(7));
        assert_eq!(lin.gradient(&q(&[5, 7])).unwrap(), q(&[3, -4]));
        let f1 = LinearFractionalObjective::linear(q(&[1, 0]), int(0));
        assert_eq!(f1.gradient(&q(&[5, 7])).unwrap(), q(&[1, 0]));
    }

    #[test]
    fn identity_residual_examples() {
        let f = sample();
        assert!(f
            .fractional_identity_residual(&q(&[0, 0]), &q(&[2, 2]))
            .unwrap()
            .is_zero());
        assert!(f
            .fractional_identity_residual(&q(&[3, 1]), &q(&[3, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn validate_example_instance() {
        assert_eq!(
            validate_problem(&example_problem()).unwrap(),
            ValidationReport::Valid {
                denominator_minima: q(&[1, 1])
            }
        );
    }

    #[test]
    fn validate_unbounded_denominator() {
        let set = PolyhedralSet::new(2, vec![q(&[-1, 0])], q(&[0])).unwrap();
        let obj = LinearFractionalObjective::new(q(&[1, 0]), int(0), q(&[0, 1]), int(0)).unwrap();
        let p = Problem::new(vec![obj], set).unwrap();
        assert_eq!(
            validate_problem(&p).unwrap(),
            ValidationReport::StandingConditionViolated {
                index: 0,
                minimum: None
            }
        );
    }

    #[test]
    fn validate_attained_nonpositive_minimum() {
        // x1 in [0, 1], denominator x1 + 0 attains 0 at x1 = 0.
        let set = PolyhedralSet::new(1, vec![q(&[-1]), q(&[1])], q(&[0, 1])).unwrap();
        let obj = LinearFractionalObjective::new(q(&[1]), int(1), q(&[1]), int(0)).unwrap();
        let p = Problem::new(vec![obj], set).unwrap();
        assert_eq!(
            validate_problem(&p).unwrap(),
            ValidationReport::StandingConditionViolated {
                index: 0,
                minimum: Some(int(0))
            }
        );
    }

    #[test]
    fn validate_empty_set() {
        let set = PolyhedralSet::new(1, vec![q(&[1]), q(&[-1])], q(&[-1, 0])).unwrap();
        let p = Problem::new(
            vec![LinearFractionalObjective::linear(q(&[1]), int(0))],
            set,
        )
        .unwrap();
        assert_eq!(
            validate_problem(&p).unwrap(),
            ValidationReport::EmptyFeasibleSet
        );
    }

    #[test]
    fn query_checks() {
        let p = example_problem();
        assert_eq!(p.check_query(&Query::new(q(&[0, 0]), q(&[1, 0]))), Ok(()));
        assert_eq!(
            p.check_query(&Query::new(q(&[-1, 0]), q(&[1, 0]))),
            Err(Error::InfeasibleCandidate { row: 0 })
        );
        assert_eq!(
            p.check_query(&Query::new(q(&[0, 0]), q(&[1, -1]))),
            Err(Error::NegativeEpsilon { index: 1 })
        );
        assert!(matches!(
            p.check_query(&Query::new(q(&[0, 0, 0]), q(&[1, 0]))),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn problem_rejects_mismatched_objectives() {
        let set = PolyhedralSet::new(2, vec![q(&[-1, 0])], q(&[0])).unwrap();
        let bad = LinearFractionalObjective::linear(q(&[1]), int(0));
        assert!(Problem::new(vec![bad], set.clone()).is_err());
        assert_eq!(Problem::new(vec![], set), Err(Error::NoObjectives));
    }
}
