//! JSON reports. Every rational is written as a `"p/q"` string so reports can
//! be parsed back and re-verified exactly.

use lfvop_core::oracle::targets;
use lfvop_core::{
    build_certificate_system, parse_rational, verify_certificate, Certificate, CertificateKind,
    Classification, DecisionSource, DominanceKind, DominanceWitness, Problem, Query, Rational,
    ValidationReport, Verdict,
};
use serde::Serialize;

pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn fractions(v: &[Rational]) -> Vec<String> {
    v.iter().map(fraction).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationSummary {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator_minima: Option<Vec<String>>,
    /// 1-based objective whose denominator is not positive on `K`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<usize>,
    /// Minimum of that denominator, or `"unbounded"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimum: Option<String>,
}

impl From<&ValidationReport> for ValidationSummary {
    fn from(v: &ValidationReport) -> Self {
        let empty = Self {
            status: "",
            denominator_minima: None,
            objective: None,
            minimum: None,
        };
        match v {
            ValidationReport::Valid { denominator_minima } => Self {
                status: "valid",
                denominator_minima: Some(fractions(denominator_minima)),
                ..empty
            },
            ValidationReport::EmptyFeasibleSet => Self {
                status: "empty_feasible_set",
                ..empty
            },
            ValidationReport::StandingConditionViolated { index, minimum } => Self {
                status: "denominator_not_positive",
                objective: Some(index + 1),
                minimum: Some(
                    minimum
                        .as_ref()
                        .map_or_else(|| "unbounded".to_string(), fraction),
                ),
                ..empty
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub kind: &'static str,
    pub lambda: Vec<String>,
    pub mu: Vec<String>,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        Self {
            kind: match c.kind {
                CertificateKind::Boundary => "boundary",
                CertificateKind::Interior => "interior",
            },
            lambda: fractions(&c.lambda),
            mu: fractions(&c.mu),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub y: Vec<String>,
    pub kind: &'static str,
    /// 1-based index of the objective that improves strictly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_objective: Option<usize>,
    /// `f(y)`.
    pub values: Vec<String>,
    /// `f(x_bar) - eps`.
    pub targets: Vec<String>,
}

impl WitnessReport {
    pub fn new(problem: &Problem, query: &Query, w: &DominanceWitness) -> lfvop_core::Result<Self> {
        let (kind, strict_objective) = match w.kind {
            DominanceKind::StrictAll => ("strict_all", None),
            DominanceKind::WeakWithStrictIndex(j) => ("weak_with_strict_index", Some(j + 1)),
        };
        Ok(Self {
            y: fractions(&w.y),
            kind,
            strict_objective,
            values: fractions(&problem.evaluate(&w.y)?),
            targets: fractions(&targets(problem, query)?),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecheckItem {
    pub artifact: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecheckReport {
    pub passed: bool,
    pub items: Vec<RecheckItem>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub point: Vec<String>,
    pub epsilon: Vec<String>,
    pub validation: ValidationSummary,
    pub verdict: &'static str,
    pub decided_by: Option<&'static str>,
    pub weak_certificate: Option<CertificateReport>,
    pub interior_certificate: Option<CertificateReport>,
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<RecheckReport>,
}

pub fn decision_source(d: DecisionSource) -> &'static str {
    match d {
        DecisionSource::WeakCertificateSearch => "weak_certificate_search",
        DecisionSource::InteriorCertificate => "interior_certificate",
        DecisionSource::DominanceOracle => "dominance_oracle",
    }
}

impl CheckReport {
    pub fn new(
        problem: &Problem,
        query: &Query,
        validation: &ValidationReport,
        c: &Classification,
    ) -> lfvop_core::Result<Self> {
        Ok(Self {
            command: "check",
            point: fractions(&query.x_bar),
            epsilon: fractions(&query.epsilon),
            validation: validation.into(),
            verdict: c.membership.as_str(),
            decided_by: c.decided_by.map(decision_source),
            weak_certificate: c.weak_certificate.as_ref().map(Into::into),
            interior_certificate: c.interior_certificate.as_ref().map(Into::into),
            witness: c
                .witness
                .as_ref()
                .map(|w| WitnessReport::new(problem, query, w))
                .transpose()?,
            recheck: None,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyReport {
    pub command: &'static str,
    pub mode: &'static str,
    pub point: Vec<String>,
    pub epsilon: Vec<String>,
    pub validation: ValidationSummary,
    pub outcome: &'static str,
    pub certificate: Option<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<RecheckReport>,
}

/// Header-only report for instances that fail validation.
#[derive(Debug, Clone, Serialize)]
pub struct InvalidInstanceReport {
    pub command: &'static str,
    pub validation: ValidationSummary,
}

fn parse_all(values: &[String]) -> Result<Vec<Rational>, String> {
    values
        .iter()
        .map(|s| parse_rational(s).map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

/// Re-verifies a reported certificate from its textual form: the inner
/// minimum over `K` must be nonnegative and `mu` must satisfy the dual
/// equations.
pub fn recheck_certificate(
    problem: &Problem,
    query: &Query,
    artifact: &'static str,
    report: &CertificateReport,
) -> RecheckItem {
    let result = (|| -> Result<String, String> {
        let kind = match report.kind {
            "boundary" => CertificateKind::Boundary,
            "interior" => CertificateKind::Interior,
            other => return Err(format!("unknown certificate kind {other:?}")),
        };
        let cert = Certificate {
            lambda: parse_all(&report.lambda)?,
            mu: parse_all(&report.mu)?,
            kind,
        };
        let system = build_certificate_system(problem, query).map_err(|e| e.to_string())?;
        if !cert.satisfies_dual_equations(problem, &system) {
            return Err("mu does not satisfy the dual equations".into());
        }
        match verify_certificate(problem, query, &cert).map_err(|e| e.to_string())? {
            Verdict::Valid { inner_minimum } => {
                Ok(format!("inner minimum {}", fraction(&inner_minimum)))
            }
            Verdict::Invalid(r) => Err(format!("rejected: {r:?}")),
        }
    })();
    item(artifact, result)
}

/// Re-verifies a reported witness by evaluating `f` at the parsed `y`.
pub fn recheck_witness(problem: &Problem, query: &Query, report: &WitnessReport) -> RecheckItem {
    let result = (|| -> Result<String, String> {
        let kind = match (report.kind, report.strict_objective) {
            ("strict_all", None) => DominanceKind::StrictAll,
            ("weak_with_strict_index", Some(j)) if j >= 1 => {
                DominanceKind::WeakWithStrictIndex(j - 1)
            }
            _ => return Err(format!("unknown witness kind {:?}", report.kind)),
        };
        let witness = DominanceWitness {
            y: parse_all(&report.y)?,
            kind,
        };
        if parse_all(&report.values)? != problem.evaluate(&witness.y).map_err(|e| e.to_string())? {
            return Err("reported values differ from f(y)".into());
        }
        if witness.verify(problem, query).map_err(|e| e.to_string())? {
            Ok("f(y) dominates f(x_bar) - eps".into())
        } else {
            Err("y does not dominate f(x_bar) - eps".into())
        }
    })();
    item("witness", result)
}

fn item(artifact: &'static str, result: Result<String, String>) -> RecheckItem {
    match result {
        Ok(detail) => RecheckItem {
            artifact,
            passed: true,
            detail,
        },
        Err(detail) => RecheckItem {
            artifact,
            passed: false,
            detail,
        },
    }
}

pub fn recheck_check_report(
    problem: &Problem,
    query: &Query,
    report: &CheckReport,
) -> RecheckReport {
    let mut items = Vec::new();
    if let Some(c) = &report.weak_certificate {
        items.push(recheck_certificate(problem, query, "weak_certificate", c));
    }
    if let Some(c) = &report.interior_certificate {
        items.push(recheck_certificate(
            problem,
            query,
            "interior_certificate",
            c,
        ));
    }
    if let Some(w) = &report.witness {
        items.push(recheck_witness(problem, query, w));
    }
    RecheckReport {
        passed: items.iter().all(|i| i.passed),
        items,
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use lfvop_core::rational::{int, ratio};

    #[test]
    fn fractions_always_have_a_denominator() {
        assert_eq!(fraction(&int(3)), "3/1");
        assert_eq!(fraction(&int(0)), "0/1");
        assert_eq!(fraction(&ratio(-2, 4)), "-1/2");
        assert_eq!(
            parse_rational(&fraction(&ratio(7, 3))).unwrap(),
            ratio(7, 3)
        );
    }

    #[test]
    fn validation_summaries() {
        let s = ValidationSummary::from(&ValidationReport::StandingConditionViolated {
            index: 0,
            minimum: None,
        });
        assert_eq!(s.objective, Some(1));
        assert_eq!(s.minimum.as_deref(), Some("unbounded"));
        let s = ValidationSummary::from(&ValidationReport::EmptyFeasibleSet);
        assert_eq!(s.status, "empty_feasible_set");
    }
}
