//! Evidence gathering for two open problems about powers of square-free
//! ideals:
//!
//! * conjecture: if some `I^s` has linear quotients then `I` satisfies the
//!   strong gcd condition;
//! * question: if some `I^s` is componentwise linear, is `S/I` Golod?
//!
//! Neither answer is assumed. The scanner records counterexample candidates
//! to the conjecture, every componentwise linear power together with its
//! certificate status, and any contradiction with the established results
//! (the gcd condition is necessary for componentwise linear powers; the
//! Betti lower bounds for uniform clutters).

use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::is_componentwise_linear;
use crate::caps::Caps;
use crate::clutter::{verify_theorem_betti_bounds, Clutter};
use crate::conditions::{
    gcd_condition, golod_certificate, has_linear_quotient, monomial_order_linear_quotient,
    prop_main_derived_order, strong_gcd_condition,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::MonomialIdeal;
use crate::orders::OrderSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Conjecture,
    Question,
}

impl std::str::FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conjecture" => Ok(Problem::Conjecture),
            "question" => Ok(Problem::Question),
            _ => Err(Error::Domain(format!("unknown problem {s:?}"))),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Conjecture => "conjecture",
            Problem::Question => "question",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub field: FieldSpec,
    pub s_range: RangeInclusive<u32>,
    pub orders: OrderSpec,
    pub caps: Caps,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            field: FieldSpec::GF2,
            s_range: 1..=2,
            orders: OrderSpec::AllFamilies,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerRecord {
    pub s: u32,
    pub linear_quotients: Option<bool>,
    pub componentwise_linear: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub gcd_condition: bool,
    pub strong_gcd_condition: bool,
    pub powers: Vec<PowerRecord>,
    /// Whether a Golod certificate was found, when one was looked for.
    pub golod_certificate: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub s: Option<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CwlPower {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub s: u32,
    pub golod_certificate: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub problem: Problem,
    pub budget: usize,
    pub config: ScanConfig,
    pub examined: usize,
    pub instances: Vec<InstanceRecord>,
    pub skipped: Vec<Skipped>,
    pub conjecture_counterexamples: Vec<Finding>,
    pub gcd_necessity_violations: Vec<Finding>,
    pub betti_bound_violations: Vec<Finding>,
    pub anomalies: Vec<Finding>,
    pub componentwise_linear_powers: Vec<CwlPower>,
    pub elapsed_ms: u128,
}

impl ScanReport {
    /// True when an established result was contradicted.
    pub fn has_contradictions(&self) -> bool {
        !self.gcd_necessity_violations.is_empty() || !self.betti_bound_violations.is_empty()
    }
}

#[derive(Default)]
struct Outcome {
    record: Option<InstanceRecord>,
    skipped: Option<String>,
    counterexamples: Vec<(Option<u32>, String)>,
    gcd_violations: Vec<(Option<u32>, String)>,
    bound_violations: Vec<(Option<u32>, String)>,
    anomalies: Vec<(Option<u32>, String)>,
}

fn examine(ideal: &MonomialIdeal, problem: Problem, config: &ScanConfig) -> Result<Outcome> {
    let flags = ideal.flags();
    if ideal.is_zero() || !flags.is_squarefree || flags.contains_variable {
        return Err(Error::Precondition(
            "scan instances must be non-zero, square-free and variable-free".into(),
        ));
    }
    let caps = &config.caps;
    let mut out = Outcome::default();
    let gcd = gcd_condition(ideal).holds;
    let strong = strong_gcd_condition(ideal, caps)?;
    let mut powers = Vec::new();
    let mut any_order_lq = false;
    let uniform = Clutter::from_ideal(ideal)?;
    for s in config.s_range.clone() {
        let power = ideal.power(s, caps.generators)?;
        let cwl = is_componentwise_linear(&power, config.field, caps, true)?.componentwise_linear;
        let lq = match problem {
            Problem::Conjecture => Some(has_linear_quotient(&power, caps)?.is_some()),
            Problem::Question => None,
        };
        if cwl && !gcd {
            out.gcd_violations.push((
                Some(s),
                "componentwise linear power of an ideal failing the gcd condition".into(),
            ));
        }
        if lq == Some(true) {
            if !cwl {
                out.anomalies
                    .push((Some(s), "linear quotients without componentwise linearity".into()));
            }
            if strong.is_none() {
                out.counterexamples.push((
                    Some(s),
                    "power has linear quotients but the strong gcd condition fails".into(),
                ));
            }
        }
        if monomial_order_linear_quotient(&power, &config.orders, caps)?.is_some() {
            any_order_lq = true;
            let derived = prop_main_derived_order(ideal, s, &config.orders, caps)?
                .expect("order found for the power");
            if let Some(a) = derived.anomaly {
                out.anomalies.push((Some(s), a));
            }
            if strong.is_none() {
                out.anomalies.push((
                    Some(s),
                    "linear quotients along a monomial order but no strong gcd order".into(),
                ));
            }
        }
        if s >= 2 && uniform.uniformity().is_some() && uniform.edges().len() <= caps.matching_edges {
            let r = verify_theorem_betti_bounds(&uniform, s, config.field, caps)?;
            if !r.holds {
                out.bound_violations.push((
                    Some(s),
                    format!(
                        "t={}: beta_1 {} < {} or beta_2 {} < {}",
                        r.t, r.first.actual, r.first.bound, r.second.actual, r.second.bound
                    ),
                ));
            }
        }
        powers.push(PowerRecord {
            s,
            linear_quotients: lq,
            componentwise_linear: cwl,
        });
    }
    let wants_certificate = problem == Problem::Question && powers.iter().any(|p| p.componentwise_linear);
    let certificate = if wants_certificate || any_order_lq {
        Some(golod_certificate(ideal, config.s_range.clone(), &config.orders, caps)?.is_some())
    } else {
        None
    };
    if any_order_lq && certificate == Some(false) {
        out.anomalies
            .push((None, "linear quotients along a monomial order but no certificate".into()));
    }
    out.record = Some(InstanceRecord {
        index: 0,
        ideal: ideal.clone(),
        gcd_condition: gcd,
        strong_gcd_condition: strong.is_some(),
        powers,
        golod_certificate: certificate,
    });
    Ok(out)
}

/// Examines the first `budget` instances in parallel and merges the results
/// in instance order. Instances hitting a resource cap, or violating the
/// input requirements, are listed as skipped.
pub fn open_problem_scan(
    instances: impl IntoIterator<Item = MonomialIdeal>,
    problem: Problem,
    budget: usize,
    config: &ScanConfig,
) -> ScanReport {
    let start = Instant::now();
    let batch: Vec<MonomialIdeal> = instances.into_iter().take(budget).collect();
    let outcomes: Vec<Outcome> = batch
        .par_iter()
        .map(|ideal| {
            examine(ideal, problem, config).unwrap_or_else(|e| Outcome {
                skipped: Some(e.to_string()),
                ..Outcome::default()
            })
        })
        .collect();
    let mut report = ScanReport {
        problem,
        budget,
        config: config.clone(),
        examined: 0,
        instances: Vec::new(),
        skipped: Vec::new(),
        conjecture_counterexamples: Vec::new(),
        gcd_necessity_violations: Vec::new(),
        betti_bound_violations: Vec::new(),
        anomalies: Vec::new(),
        componentwise_linear_powers: Vec::new(),
        elapsed_ms: 0,
    };
    for (index, (ideal, outcome)) in batch.into_iter().zip(outcomes).enumerate() {
        let finding = |(s, detail): (Option<u32>, String)| Finding {
            index,
            ideal: ideal.clone(),
            s,
            detail,
        };
        if let Some(reason) = outcome.skipped {
            report.skipped.push(Skipped {
                index,
                ideal: ideal.clone(),
                reason,
            });
            continue;
        }
        report.examined += 1;
        report
            .conjecture_counterexamples
            .extend(outcome.counterexamples.into_iter().map(finding));
        report
            .gcd_necessity_violations
            .extend(outcome.gcd_violations.into_iter().map(finding));
        report
            .betti_bound_violations
            .extend(outcome.bound_violations.into_iter().map(finding));
        report.anomalies.extend(outcome.anomalies.into_iter().map(finding));
        let mut record = outcome.record.expect("examined instances have a record");
        record.index = index;
        for p in record.powers.iter().filter(|p| p.componentwise_linear) {
            report.componentwise_linear_powers.push(CwlPower {
                index,
                ideal: ideal.clone(),
                s: p.s,
                golod_certificate: record.golod_certificate,
            });
        }
        report.instances.push(record);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal;

    #[test]
    fn zero_budget_is_empty() {
        let r = open_problem_scan(vec![ideal(2, &["x1*x2"])], Problem::Question, 0, &ScanConfig::default());
        assert_eq!(r.examined, 0);
        assert!(r.instances.is_empty() && r.skipped.is_empty());
    }

    #[test]
    fn small_stream() {
        let stream = vec![
            ideal(3, &["x1*x2", "x1*x3", "x2*x3"]),
            ideal(4, &["x1*x2", "x3*x4"]),
            ideal(2, &["x1", "x2"]),
        ];
        for problem in [Problem::Conjecture, Problem::Question] {
            let r = open_problem_scan(stream.clone(), problem, 10, &ScanConfig::default());
            assert_eq!(r.examined, 2);
            assert_eq!(r.skipped.len(), 1);
            assert_eq!(r.skipped[0].index, 2);
            assert!(!r.has_contradictions());
            assert!(r.conjecture_counterexamples.is_empty());
            assert!(r.anomalies.is_empty(), "{:?}", r.anomalies);
            // The triangle is componentwise linear in both powers and certified.
            assert!(r
                .componentwise_linear_powers
                .iter()
                .all(|c| c.index == 0 && c.golod_certificate == Some(true)));
            assert_eq!(r.componentwise_linear_powers.len(), 2);
        }
    }
}
