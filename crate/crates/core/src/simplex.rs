//! Exact two-phase primal simplex over [`Rational`].
//!
//! Problems are stated as
//!
//! ```text
//!   minimize    c^T z
//!   subject to  row_k^T z  (<= | = | >=)  rhs_k
//!               z_j free or z_j >= 0
//! ```
//!
//! Internally free variables are split into a difference of two
//! nonnegative columns, every row is flipped so its right-hand side is
//! nonnegative, and slack/surplus/artificial columns are appended. Entering
//! and leaving variables are chosen by Bland's smallest-index rule, so the
//! method terminates on degenerate inputs.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{dot, zeros, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Eq => Relation::Eq,
            Relation::Ge => Relation::Le,
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarBound {
    Free,
    NonNegative,
}

/// A linear program in minimization form.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraint_matrix: Vec<Vec<Rational>>,
    pub constraint_rhs: Vec<Rational>,
    pub row_kinds: Vec<Relation>,
    pub variable_bounds: Vec<VarBound>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl LinearProgram {
    /// An LP with the given objective and no rows.
    pub fn new(objective: Vec<Rational>, variable_bounds: Vec<VarBound>) -> Self {
        Self {
            objective,
            constraint_matrix: Vec::new(),
            constraint_rhs: Vec::new(),
            row_kinds: Vec::new(),
            variable_bounds,
        }
    }

    /// An LP with a zero objective over `bounds.len()` variables.
    pub fn feasibility(variable_bounds: Vec<VarBound>) -> Self {
        Self::new(zeros(variable_bounds.len()), variable_bounds)
    }

    pub fn num_vars(&self) -> usize {
        self.variable_bounds.len()
    }

    pub fn num_rows(&self) -> usize {
        self.constraint_matrix.len()
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraint_matrix.push(coeffs);
        self.row_kinds.push(relation);
        self.constraint_rhs.push(rhs);
    }

    pub fn with_row(mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        self.add_row(coeffs, relation, rhs);
        self
    }

    fn check(&self) -> Result<()> {
        let n = self.num_vars();
        if self.objective.len() != n {
            return Err(Error::MalformedLp(format!(
                "objective has {} entries for {} variables",
                self.objective.len(),
                n
            )));
        }
        let rows = self.constraint_matrix.len();
        if self.constraint_rhs.len() != rows || self.row_kinds.len() != rows {
            return Err(Error::MalformedLp(format!(
                "{} rows but {} right-hand sides and {} relations",
                rows,
                self.constraint_rhs.len(),
                self.row_kinds.len()
            )));
        }
        if let Some(k) = self.constraint_matrix.iter().position(|r| r.len() != n) {
            return Err(Error::MalformedLp(format!(
                "row {} has {} coefficients for {} variables",
                k,
                self.constraint_matrix[k].len(),
                n
            )));
        }
        Ok(())
    }

    /// Exact check that `point` satisfies every row and sign restriction.
    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars()
            && self
                .variable_bounds
                .iter()
                .zip(point)
                .all(|(bound, v)| *bound == VarBound::Free || !v.is_negative())
            && self
                .constraint_matrix
                .iter()
                .zip(&self.row_kinds)
                .zip(&self.constraint_rhs)
                .all(|((row, rel), rhs)| rel.holds(&dot(row, point), rhs))
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point)
    }

    /// Minimizes the objective.
    pub fn solve(&self) -> Result<LpOutcome> {
        self.check()?;
        Ok(Tableau::build(self).run(Some(&self.objective)))
    }

    /// Returns some feasible point (reported as `Optimal` with value 0) or
    /// `Infeasible`. The objective is ignored.
    pub fn feasible_point(&self) -> Result<LpOutcome> {
        self.check()?;
        Ok(Tableau::build(self).run(None))
    }

    /// The LP dual, itself stated as a minimization.
    ///
    /// The primal `min c^T z` has the dual `max rhs^T w`; this returns
    /// `min -rhs^T w` so that, when both are solvable,
    /// `primal optimum == -(dual optimum)`. Dual variables are ordered as the
    /// primal rows. A `<=` row in a minimization has a nonpositive multiplier;
    /// it is stored negated so every dual variable is free or nonnegative.
    pub fn dual(&self) -> LinearProgram {
        let n = self.num_vars();
        let mut objective = Vec::with_capacity(self.num_rows());
        let mut bounds = Vec::with_capacity(self.num_rows());
        let mut signs = Vec::with_capacity(self.num_rows());
        for (rel, rhs) in self.row_kinds.iter().zip(&self.constraint_rhs) {
            let (sign, bound) = match rel {
                Relation::Le => (-1, VarBound::NonNegative),
                Relation::Ge => (1, VarBound::NonNegative),
                Relation::Eq => (1, VarBound::Free),
            };
            objective.push(-rhs * Rational::from_integer(sign.into()));
            bounds.push(bound);
            signs.push(Rational::from_integer(sign.into()));
        }
        let mut dual = LinearProgram::new(objective, bounds);
        for j in 0..n {
            let coeffs = self
                .constraint_matrix
                .iter()
                .zip(&signs)
                .map(|(row, s)| &row[j] * s)
                .collect();
            let relation = match self.variable_bounds[j] {
                VarBound::Free => Relation::Eq,
                VarBound::NonNegative => Relation::Le,
            };
            dual.add_row(coeffs, relation, self.objective[j].clone());
        }
        dual
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

/// Maps an original variable to its tableau column(s).
#[derive(Debug, Clone, Copy)]
enum VarColumns {
    NonNegative(usize),
    Split { pos: usize, neg: usize },
}

struct Tableau {
    /// Each row holds `width` coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
    var_columns: Vec<VarColumns>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut kinds = Vec::new();
        let mut var_columns = Vec::with_capacity(lp.num_vars());
        for bound in &lp.variable_bounds {
            match bound {
                VarBound::NonNegative => {
                    var_columns.push(VarColumns::NonNegative(kinds.len()));
                    kinds.push(ColumnKind::Structural);
                }
                VarBound::Free => {
                    let pos = kinds.len();
                    var_columns.push(VarColumns::Split { pos, neg: pos + 1 });
                    kinds.push(ColumnKind::Structural);
                    kinds.push(ColumnKind::Structural);
                }
            }
        }

        // Normalize rows to a nonnegative right-hand side and decide which
        // auxiliary columns each one needs.
        let mut normalized = Vec::with_capacity(lp.num_rows());
        for ((coeffs, rel), rhs) in lp
            .constraint_matrix
            .iter()
            .zip(&lp.row_kinds)
            .zip(&lp.constraint_rhs)
        {
            let mut expanded = Vec::with_capacity(kinds.len());
            for (j, cols) in var_columns.iter().enumerate() {
                match cols {
                    VarColumns::NonNegative(_) => expanded.push(coeffs[j].clone()),
                    VarColumns::Split { .. } => {
                        expanded.push(coeffs[j].clone());
                        expanded.push(-&coeffs[j]);
                    }
                }
            }
            if rhs.is_negative() {
                for c in &mut expanded {
                    *c = -&*c;
                }
                normalized.push((expanded, rel.flipped(), -rhs));
            } else {
                normalized.push((expanded, *rel, rhs.clone()));
            }
        }

        let structural = kinds.len();
        let mut aux: Vec<(usize, Rational)> = Vec::new();
        let mut basis = Vec::with_capacity(normalized.len());
        for (k, (_, rel, _)) in normalized.iter().enumerate() {
            match rel {
                Relation::Le => {
                    aux.push((k, Rational::from_integer(1.into())));
                    basis.push(kinds.len());
                    kinds.push(ColumnKind::Slack);
                }
                Relation::Ge => {
                    aux.push((k, Rational::from_integer((-1).into())));
                    kinds.push(ColumnKind::Slack);
                    aux.push((k, Rational::from_integer(1.into())));
                    basis.push(kinds.len());
                    kinds.push(ColumnKind::Artificial);
                }
                Relation::Eq => {
                    aux.push((k, Rational::from_integer(1.into())));
                    basis.push(kinds.len());
                    kinds.push(ColumnKind::Artificial);
                }
            }
        }

        let width = kinds.len();
        let mut rows: Vec<Vec<Rational>> = normalized
            .into_iter()
            .map(|(expanded, _, rhs)| {
                let mut row = expanded;
                row.resize(width, Rational::zero());
                row.push(rhs);
                row
            })
            .collect();
        for (col, (k, coeff)) in (structural..).zip(aux) {
            rows[k][col] = coeff;
        }

        Tableau {
            rows,
            basis,
            kinds,
            var_columns,
        }
    }

    fn width(&self) -> usize {
        self.kinds.len()
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width()]
    }

    /// Runs phase 1 and, when `objective` is given, phase 2.
    fn run(mut self, objective: Option<&[Rational]>) -> LpOutcome {
        let width = self.width();
        let has_artificial = self.kinds.contains(&ColumnKind::Artificial);

        if has_artificial {
            // Phase 1: minimize the sum of artificial columns.
            let mut costs = zeros(width + 1);
            for (col, kind) in self.kinds.iter().enumerate() {
                if *kind == ColumnKind::Artificial {
                    costs[col] = Rational::from_integer(1.into());
                }
            }
            let mut reduced = self.reduce(&costs);
            let finished = self.iterate(&mut reduced, true);
            debug_assert!(finished, "phase 1 is bounded below by zero");
            // reduced[width] holds minus the objective value.
            if !reduced[width].is_zero() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }

        let Some(objective) = objective else {
            let point = self.primal_point();
            return LpOutcome::Optimal {
                point,
                value: Rational::zero(),
            };
        };

        let mut costs = zeros(width + 1);
        for (j, cols) in self.var_columns.iter().enumerate() {
            match *cols {
                VarColumns::NonNegative(c) => costs[c] = objective[j].clone(),
                VarColumns::Split { pos, neg } => {
                    costs[pos] = objective[j].clone();
                    costs[neg] = -&objective[j];
                }
            }
        }
        let mut reduced = self.reduce(&costs);
        if !self.iterate(&mut reduced, false) {
            return LpOutcome::Unbounded;
        }
        let point = self.primal_point();
        let value = dot(objective, &point);
        LpOutcome::Optimal { point, value }
    }

    /// Reduced-cost row for `costs` under the current basis; the last entry
    /// is minus the current objective value.
    fn reduce(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut reduced = costs.to_vec();
        for (row, &basic) in self.rows.iter().zip(&self.basis) {
            let weight = &costs[basic];
            if weight.is_zero() {
                continue;
            }
            for (r, entry) in reduced.iter_mut().zip(row) {
                *r -= weight * entry;
            }
        }
        reduced
    }

    /// Pivots until optimal (`true`) or an unbounded ray is found (`false`).
    fn iterate(&mut self, reduced: &mut [Rational], allow_artificial: bool) -> bool {
        let width = self.width();
        loop {
            // Bland: lowest-index column with negative reduced cost.
            let entering = (0..width).find(|&c| {
                (allow_artificial || self.kinds[c] != ColumnKind::Artificial)
                    && reduced[c].is_negative()
            });
            let Some(entering) = entering else {
                return true;
            };

            // Ratio test, ties broken by the smallest basic column index.
            let mut leaving: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                let coeff = &row[entering];
                if !coeff.is_positive() {
                    continue;
                }
                let ratio = &row[width] / coeff;
                let better = match &leaving {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_row])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            let Some((leaving, _)) = leaving else {
                return false;
            };
            self.pivot(leaving, entering, Some(reduced));
        }
    }

    fn pivot(&mut self, row: usize, col: usize, reduced: Option<&mut [Rational]>) {
        let pivot = self.rows[row][col].clone();
        for entry in self.rows[row].iter_mut() {
            if !entry.is_zero() {
                *entry /= &pivot;
            }
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let factor = other[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (entry, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *entry -= &factor * p;
                }
            }
        }
        if let Some(reduced) = reduced {
            let factor = reduced[col].clone();
            if !factor.is_zero() {
                for (entry, p) in reduced.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *entry -= &factor * p;
                    }
                }
            }
        }
        self.basis[row] = col;
    }

    /// After a successful phase 1 every artificial column still in the basis
    /// sits at level zero. Pivot each out on any non-artificial entry of its
    /// row; rows with none are linearly dependent and get dropped.
    fn drive_out_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.kinds[self.basis[r]] != ColumnKind::Artificial {
                r += 1;
                continue;
            }
            debug_assert!(self.rhs(r).is_zero());
            let replacement = (0..self.width())
                .find(|&c| self.kinds[c] != ColumnKind::Artificial && !self.rows[r][c].is_zero());
            match replacement {
                Some(col) => {
                    self.pivot(r, col, None);
                    r += 1;
                }
                None => {
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }

    fn primal_point(&self) -> Vec<Rational> {
        let width = self.width();
        let mut columns = zeros(width);
        for (row, &basic) in self.rows.iter().zip(&self.basis) {
            columns[basic] = row[width].clone();
        }
        self.var_columns
            .iter()
            .map(|cols| match *cols {
                VarColumns::NonNegative(c) => columns[c].clone(),
                VarColumns::Split { pos, neg } => &columns[pos] - &columns[neg],
            })
            .collect()
    }
}
