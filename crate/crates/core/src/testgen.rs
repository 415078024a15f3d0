//! Seeded random instances for property suites and `selftest`.
//!
//! Problems are built so that the standing condition holds by construction:
//! any objective with a nonconstant denominator lives on a feasible set
//! inside the nonnegative orthant and has `b >= 0`, `beta >= 1`. Every
//! generated problem is still run through [`validate_problem`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::FinitePointSet;
use crate::problem::{validate_problem, LinearFractionalObjective, PolyhedralSet, Problem, Query};
use crate::rational::{dot, int, ratio, Rational};
use crate::simplex::{LinearProgram, LpOutcome, Relation, VarBound};

const DENOMS: [i64; 4] = [1, 2, 3, 4];
const MAX_ROWS: usize = 5;

#[derive(Debug, Clone)]
pub struct Case {
    pub problem: Problem,
    pub query: Query,
}

/// Deterministic stream of random instances. The same seed always yields the
/// same sequence.
pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `k / q` with `|k| <= bound * q` and `q` in {1, 2, 3, 4}.
    fn scalar(&mut self, bound: i64) -> Rational {
        let q = *DENOMS.choose(&mut self.rng).expect("nonempty");
        ratio(self.rng.gen_range(-bound * q..=bound * q), q)
    }

    fn small_int(&mut self, bound: i64) -> Rational {
        int(self.rng.gen_range(-bound..=bound))
    }

    fn pick(&mut self, values: &[Rational]) -> Rational {
        values.choose(&mut self.rng).expect("nonempty").clone()
    }

    /// A problem with `n <= 3`, `m <= 3`, at most five constraint rows, and a
    /// feasible candidate point with `eps_i` in {0, 1/4, 1}.
    pub fn problem_case(&mut self) -> Case {
        loop {
            if let Some(case) = self.try_problem_case() {
                return case;
            }
        }
    }

    fn try_problem_case(&mut self) -> Option<Case> {
        let n = self.rng.gen_range(1..=3);
        let m = self.rng.gen_range(1..=3);
        let fractional = self.rng.gen_bool(0.7);
        let halves = [int(0), ratio(1, 2), int(1), ratio(3, 2), int(2)];
        let slacks = [int(0), int(0), ratio(1, 2), int(1)];

        let anchor: Vec<Rational> = (0..n).map(|_| self.pick(&halves)).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();

        if fractional {
            for j in 0..n {
                let mut row = vec![int(0); n];
                row[j] = int(-1);
                rows.push(row);
                rhs.push(int(0));
            }
            if self.rng.gen_bool(0.5) {
                let total: Rational = anchor.iter().sum();
                rows.push(vec![int(1); n]);
                rhs.push(total + self.pick(&slacks));
            }
        }
        let budget = MAX_ROWS - rows.len();
        let min_extra = usize::from(rows.is_empty());
        let extra = self.rng.gen_range(min_extra..=budget);
        for _ in 0..extra {
            let row: Vec<Rational> = (0..n).map(|_| self.small_int(2)).collect();
            let d = dot(&row, &anchor) + self.pick(&slacks);
            rows.push(row);
            rhs.push(d);
        }
        let set = PolyhedralSet::new(n, rows, rhs).ok()?;

        let mut objectives = Vec::with_capacity(m);
        let den_entries = [int(0), int(0), ratio(1, 2), int(1), int(2)];
        for _ in 0..m {
            let a: Vec<Rational> = (0..n).map(|_| self.scalar(3)).collect();
            let alpha = self.scalar(2);
            if fractional && self.rng.gen_bool(0.6) {
                let b: Vec<Rational> = (0..n).map(|_| self.pick(&den_entries)).collect();
                let beta = int(self.rng.gen_range(1..=3));
                objectives.push(LinearFractionalObjective::new(a, alpha, b, beta).ok()?);
            } else {
                objectives.push(LinearFractionalObjective::linear(a, alpha));
            }
        }
        let problem = Problem::new(objectives, set).ok()?;
        if !validate_problem(&problem).ok()?.is_valid() {
            return None;
        }

        let x_bar = match self.rng.gen_range(0..3) {
            0 => anchor,
            mode => {
                let cost: Vec<Rational> = (0..n).map(|_| self.small_int(2)).collect();
                match problem.feasible_set().lp(cost).solve().ok()? {
                    LpOutcome::Optimal { point, .. } if mode == 1 => point,
                    LpOutcome::Optimal { point, .. } => anchor
                        .iter()
                        .zip(&point)
                        .map(|(u, v)| (u + v) / int(2))
                        .collect(),
                    _ => anchor,
                }
            }
        };
        let eps_levels = [int(0), ratio(1, 4), int(1)];
        let epsilon = (0..m).map(|_| self.pick(&eps_levels)).collect();
        let query = Query::new(x_bar, epsilon);
        problem.check_query(&query).ok()?;
        Some(Case { problem, query })
    }

    /// A random objective and two points where its denominator is at least 1/2.
    pub fn objective_with_points(
        &mut self,
    ) -> (LinearFractionalObjective, Vec<Rational>, Vec<Rational>) {
        loop {
            let n = self.rng.gen_range(1..=3);
            let a = (0..n).map(|_| self.scalar(3)).collect();
            let alpha = self.scalar(3);
            let linear = self.rng.gen_bool(0.2);
            let b: Vec<Rational> = (0..n)
                .map(|_| if linear { int(0) } else { self.scalar(2) })
                .collect();
            let beta = if linear { int(1) } else { self.scalar(3) };
            let obj = LinearFractionalObjective::new(a, alpha, b, beta).expect("same length");
            let mut accepted = Vec::with_capacity(2);
            for _ in 0..64 {
                let x: Vec<Rational> = (0..n).map(|_| self.scalar(3)).collect();
                if obj.denominator(&x) >= ratio(1, 2) {
                    accepted.push(x);
                    if accepted.len() == 2 {
                        let y = accepted.pop().expect("two points");
                        let x = accepted.pop().expect("two points");
                        return (obj, x, y);
                    }
                }
            }
        }
    }

    /// At most six points in `R^m`, `m <= 4`.
    pub fn point_set(&mut self) -> FinitePointSet {
        let dim = self.rng.gen_range(1..=4);
        let count = self.rng.gen_range(1..=6);
        let points = (0..count)
            .map(|_| (0..dim).map(|_| self.scalar(3)).collect())
            .collect();
        FinitePointSet::new(points).expect("nonempty, equal dimensions")
    }

    /// An LP with a known feasible point and box bounds on every variable,
    /// so it is always solvable.
    pub fn solvable_lp(&mut self) -> LinearProgram {
        let n = self.rng.gen_range(1..=4);
        let rows = self.rng.gen_range(1..=4);
        let bounds: Vec<VarBound> = (0..n)
            .map(|_| {
                if self.rng.gen_bool(0.3) {
                    VarBound::Free
                } else {
                    VarBound::NonNegative
                }
            })
            .collect();
        let anchor: Vec<Rational> = bounds
            .iter()
            .map(|b| {
                let v = self.scalar(2);
                match b {
                    VarBound::NonNegative if v < int(0) => -v,
                    _ => v,
                }
            })
            .collect();
        let objective = (0..n).map(|_| self.scalar(3)).collect();
        let mut lp = LinearProgram::new(objective, bounds.clone());
        let relations = [Relation::Le, Relation::Ge, Relation::Eq];
        for _ in 0..rows {
            let row: Vec<Rational> = (0..n).map(|_| self.small_int(3)).collect();
            let relation = *relations.choose(&mut self.rng).expect("nonempty");
            let base = dot(&row, &anchor);
            let slack = int(self.rng.gen_range(0..=2));
            let rhs = match relation {
                Relation::Le => base + slack,
                Relation::Ge => base - slack,
                Relation::Eq => base,
            };
            lp.add_row(row, relation, rhs);
        }
        for (j, bound) in bounds.iter().enumerate() {
            let mut unit = vec![int(0); n];
            unit[j] = int(1);
            lp.add_row(unit.clone(), Relation::Le, int(5));
            if *bound == VarBound::Free {
                lp.add_row(unit, Relation::Ge, int(-5));
            }
        }
        lp
    }
}
