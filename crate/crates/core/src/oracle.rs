//! Direct deciders for approximate (weak) efficiency.
//!
//! These work straight from the dominance definitions and never look at
//! multipliers, so they serve as the independent reference for the
//! certificate route in [`crate::certify`].
//!
//! With targets `c_i = f_i(x_bar) - eps_i` and positive denominators on `K`,
//! `f_i(y) < c_i` is equivalent to the linear inequality
//! `(a_i - c_i b_i)^T y < c_i beta_i - alpha_i`. A system of such strict
//! inequalities over `K` is decided by maximizing a common slack `t`
//! (capped at 1 to keep the LP bounded) and testing `t* > 0` exactly.

use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::problem::{Problem, Query};
use crate::rational::{int, Rational};
use crate::simplex::{LinearProgram, LpOutcome, Relation, VarBound};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceKind {
    /// `f(y) < f(x_bar) - eps` in every component.
    StrictAll,
    /// `f(y) <= f(x_bar) - eps`, strict in component `j` (0-based).
    WeakWithStrictIndex(usize),
}

/// A feasible point that dominates `f(x_bar) - eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceWitness {
    pub y: Vec<Rational>,
    pub kind: DominanceKind,
}

impl DominanceWitness {
    /// Re-checks the witness with exact objective evaluation.
    pub fn verify(&self, problem: &Problem, query: &Query) -> Result<bool> {
        if !problem.feasible_set().contains(&self.y) {
            return Ok(false);
        }
        let fy = problem.evaluate(&self.y)?;
        let targets = targets(problem, query)?;
        let holds = match self.kind {
            DominanceKind::StrictAll => fy.iter().zip(&targets).all(|(v, c)| v < c),
            DominanceKind::WeakWithStrictIndex(j) => {
                j < fy.len() && fy[j] < targets[j] && fy.iter().zip(&targets).all(|(v, c)| v <= c)
            }
        };
        Ok(holds)
    }
}

/// `f(x_bar) - eps`.
pub fn targets(problem: &Problem, query: &Query) -> Result<Vec<Rational>> {
    Ok(problem
        .evaluate(&query.x_bar)?
        .into_iter()
        .zip(&query.epsilon)
        .map(|(f, e)| f - e)
        .collect())
}

/// Linearized rows `(a_i - c_i b_i, c_i beta_i - alpha_i)` of `f_i(y) <= c_i`.
fn linearized_rows(problem: &Problem, targets: &[Rational]) -> Vec<(Vec<Rational>, Rational)> {
    problem
        .objectives()
        .iter()
        .zip(targets)
        .map(|(f, c)| {
            let coeffs = f.a.iter().zip(&f.b).map(|(a, b)| a - c * b).collect();
            (coeffs, c * &f.beta - &f.alpha)
        })
        .collect()
}

/// Maximizes the slack `t <= 1` carried by the rows flagged in `strict`;
/// the other objective rows are plain `<=`. Returns `y` when `t* > 0`.
fn max_slack(
    problem: &Problem,
    rows: &[(Vec<Rational>, Rational)],
    strict: impl Fn(usize) -> bool,
) -> Result<Option<Vec<Rational>>> {
    let n = problem.dim();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = int(-1);
    let mut lp = LinearProgram::new(objective, vec![VarBound::Free; n + 1]);
    for (i, (coeffs, rhs)) in rows.iter().enumerate() {
        let mut row = coeffs.clone();
        row.push(if strict(i) { int(1) } else { int(0) });
        lp.add_row(row, Relation::Le, rhs.clone());
    }
    let set = problem.feasible_set();
    for (c, d) in set.rows().iter().zip(set.rhs()) {
        let mut row = c.clone();
        row.push(int(0));
        lp.add_row(row, Relation::Le, d.clone());
    }
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = int(1);
    lp.add_row(cap, Relation::Le, int(1));

    match lp.solve()? {
        LpOutcome::Optimal { mut point, .. } => {
            let t = point.pop().expect("slack variable");
            Ok(t.is_positive().then_some(point))
        }
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(Error::Inconsistent("capped slack LP reported unbounded")),
    }
}

fn ensure_nonempty(problem: &Problem) -> Result<()> {
    match problem.feasible_set().feasible_point()? {
        Some(_) => Ok(()),
        None => Err(Error::EmptyFeasibleSet),
    }
}

/// Searches for `y` in `K` with `f(y) < f(x_bar) - eps` componentwise.
/// `None` means `x_bar` is eps-weakly efficient.
pub fn weak_dominates_check(problem: &Problem, query: &Query) -> Result<Option<DominanceWitness>> {
    ensure_nonempty(problem)?;
    problem.check_query(query)?;
    let targets = targets(problem, query)?;
    let rows = linearized_rows(problem, &targets);
    let Some(y) = max_slack(problem, &rows, |_| true)? else {
        return Ok(None);
    };
    let witness = DominanceWitness {
        y,
        kind: DominanceKind::StrictAll,
    };
    if !witness.verify(problem, query)? {
        return Err(Error::Inconsistent(
            "weak dominance witness failed re-evaluation",
        ));
    }
    Ok(Some(witness))
}

/// Searches for `y` in `K` with `f(y) <= f(x_bar) - eps` and `f(y) != f(x_bar) - eps`.
/// Strict indices are tried in ascending order; `None` means `x_bar` is
/// eps-efficient.
pub fn efficient_dominates_check(
    problem: &Problem,
    query: &Query,
) -> Result<Option<DominanceWitness>> {
    ensure_nonempty(problem)?;
    problem.check_query(query)?;
    let targets = targets(problem, query)?;
    let rows = linearized_rows(problem, &targets);
    for j in 0..problem.num_objectives() {
        if let Some(y) = max_slack(problem, &rows, |i| i == j)? {
            let witness = DominanceWitness {
                y,
                kind: DominanceKind::WeakWithStrictIndex(j),
            };
            if !witness.verify(problem, query)? {
                return Err(Error::Inconsistent(
                    "dominance witness failed re-evaluation",
                ));
            }
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// A finite nonempty set of points in `R^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePointSet {
    points: Vec<Vec<Rational>>,
}

impl FinitePointSet {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::DimensionMismatch {
                what: "point set",
                expected: 1,
                found: 0,
            });
        };
        let dim = first.len();
        for p in &points {
            check_len("point set member", dim, p.len())?;
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeLemmaOutcome {
    /// No member of the set is strictly negative in every coordinate.
    pub set_disjoint: bool,
    /// No conic combination `sum_j theta_j w_j`, `theta >= 0`, is strictly
    /// negative in every coordinate.
    pub cone_disjoint: bool,
    /// No convex combination of the members is strictly negative.
    pub hull_disjoint: bool,
}

impl ConeLemmaOutcome {
    /// Pointwise scan against the conic-combination test.
    pub fn set_agrees_with_cone(&self) -> bool {
        self.set_disjoint == self.cone_disjoint
    }

    /// Convex hull against the conic-combination test. The conic hull of a
    /// finite set is the cone generated by its convex hull, so these always
    /// agree.
    pub fn hull_agrees_with_cone(&self) -> bool {
        self.hull_disjoint == self.cone_disjoint
    }
}

/// Checks set/cone disjointness from the open negative orthant on a finite set.
///
/// * `set_disjoint`: direct scan of the members.
/// * `cone_disjoint`: the conic hull of a finite set is finitely generated,
///   hence closed, and meets the open negative orthant iff some `theta >= 0`
///   gives `sum_j theta_j w_j <= -1` componentwise.
/// * `hull_disjoint`: maximize `s <= 1` with `sum_j theta_j w_j <= -s`,
///   `theta` in the simplex; disjoint iff `s* <= 0`.
///
/// The scan and the conic test coincide when the members are rays of a
/// convex cone, but not for arbitrary finite sets: `{(-1, 1), (1, -2)}` has
/// no negative member while `3 (-1, 1) + 2 (1, -2) = (-1, -1)`.
pub fn cone_lemma_check(omega: &FinitePointSet) -> Result<ConeLemmaOutcome> {
    let set_disjoint = !omega
        .points()
        .iter()
        .any(|w| w.iter().all(Signed::is_negative));

    let count = omega.points().len();
    let column = |coord: usize| -> Vec<Rational> {
        omega.points().iter().map(|w| w[coord].clone()).collect()
    };

    let mut cone = LinearProgram::feasibility(vec![VarBound::NonNegative; count]);
    for coord in 0..omega.dim() {
        cone.add_row(column(coord), Relation::Le, int(-1));
    }
    let cone_disjoint = matches!(cone.feasible_point()?, LpOutcome::Infeasible);

    let mut objective = vec![Rational::zero(); count + 1];
    objective[count] = int(-1);
    let mut bounds = vec![VarBound::NonNegative; count];
    bounds.push(VarBound::Free);
    let mut hull = LinearProgram::new(objective, bounds);
    let mut simplex_row = vec![int(1); count];
    simplex_row.push(int(0));
    hull.add_row(simplex_row, Relation::Eq, int(1));
    for coord in 0..omega.dim() {
        let mut row = column(coord);
        row.push(int(1));
        hull.add_row(row, Relation::Le, int(0));
    }
    let mut cap = vec![Rational::zero(); count + 1];
    cap[count] = int(1);
    hull.add_row(cap, Relation::Le, int(1));
    let hull_disjoint = match hull.solve()? {
        LpOutcome::Optimal { value, .. } => !value.is_negative(),
        _ => return Err(Error::Inconsistent("convex-hull slack LP not solvable")),
    };

    Ok(ConeLemmaOutcome {
        set_disjoint,
        cone_disjoint,
        hull_disjoint,
    })
}
