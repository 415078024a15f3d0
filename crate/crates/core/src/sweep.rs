//! Grid sweeps of the classification over an axis-aligned box.

use rayon::prelude::*;

use crate::certify::{classify, Classification, Refinement};
use crate::error::{check_len, Error, Result};
use crate::problem::{Problem, Query};
use crate::rational::{int, Rational};

/// `steps + 1` equally spaced values from `lo` to `hi`; just `lo` when
/// `steps == 0` or `lo == hi`; nothing when `lo > hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisRange {
    pub lo: Rational,
    pub hi: Rational,
    pub steps: u32,
}

impl AxisRange {
    pub fn new(lo: Rational, hi: Rational, steps: u32) -> Self {
        Self { lo, hi, steps }
    }

    pub fn values(&self) -> Vec<Rational> {
        if self.lo > self.hi {
            return Vec::new();
        }
        if self.steps == 0 || self.lo == self.hi {
            return vec![self.lo.clone()];
        }
        let step = (&self.hi - &self.lo) / int(i64::from(self.steps));
        (0..=self.steps)
            .map(|k| &self.lo + &step * int(i64::from(k)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub axes: Vec<AxisRange>,
}

impl GridSpec {
    pub fn new(axes: Vec<AxisRange>) -> Self {
        Self { axes }
    }

    /// Grid points in row-major order (last axis varies fastest).
    pub fn points(&self) -> Vec<Vec<Rational>> {
        let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
        for axis in &self.axes {
            let values = axis.values();
            points = points
                .into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v.clone());
                        p
                    })
                })
                .collect();
        }
        if self.axes.is_empty() {
            points.clear();
        }
        points
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOutcome {
    Classified(Classification),
    /// The grid point lies outside `K`.
    Skipped,
    Failed(Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub point: Vec<Rational>,
    pub outcome: PointOutcome,
}

/// Classifies every feasible grid point (with oracle refinement). Points are
/// processed in parallel; rows come back in grid order.
pub fn sweep(problem: &Problem, epsilon: &[Rational], grid: &GridSpec) -> Result<Vec<SweepRow>> {
    check_len("grid axes", problem.dim(), grid.axes.len())?;
    check_len("epsilon", problem.num_objectives(), epsilon.len())?;
    let rows = grid
        .points()
        .into_par_iter()
        .map(|point| {
            let outcome = if !problem.feasible_set().contains(&point) {
                PointOutcome::Skipped
            } else {
                let query = Query::new(point.clone(), epsilon.to_vec());
                match classify(problem, &query, Refinement::Oracle) {
                    Ok(c) => PointOutcome::Classified(c),
                    Err(e) => PointOutcome::Failed(e),
                }
            };
            SweepRow { point, outcome }
        })
        .collect();
    Ok(rows)
}
