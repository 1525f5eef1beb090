//! Index-by-index comparison of every applicable closed form against the
//! iterated orbit.

use serde::{Deserialize, Serialize};

use crate::closed_form::{
    known_case_form, x_backshift, x_closed_a_neg1, x_closed_constant, BackshiftQuery, ClosedFormQuery, GeneralSolution,
    KnownCase,
};
use crate::coefficients::CoefficientSequence;
use crate::error::Result;
use crate::initial::InitialConditions;
use crate::rational::Rational;
use crate::recurrence::iterate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    General,
    Constant,
    ANeg1,
    Backshift,
    KnownCase,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::General => "general",
            Formula::Constant => "constant",
            Formula::ANeg1 => "a_neg1",
            Formula::Backshift => "backshift",
            Formula::KnownCase => "known_case",
        }
    }

    /// Formulas that apply to a coefficient sequence.
    pub fn applicable(coeffs: &CoefficientSequence) -> Vec<Formula> {
        let mut out = vec![Formula::General];
        if let Some((a, b)) = coeffs.as_constant() {
            out.push(Formula::Constant);
            if *a == Rational::integer(-1) {
                out.push(Formula::ANeg1);
            }
            out.push(Formula::Backshift);
            if KnownCase::classify(a, b).is_some() {
                out.push(Formula::KnownCase);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExactEqual,
    Mismatch,
    SkippedForbidden,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::ExactEqual => "exact-equal",
            Verdict::Mismatch => "mismatch",
            Verdict::SkippedForbidden => "skipped-forbidden",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexVerdict {
    pub index: usize,
    pub formula: Formula,
    pub verdict: Verdict,
    pub oracle: Option<Rational>,
    pub closed: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub horizon: usize,
    pub truncated_at: Option<usize>,
    pub verdicts: Vec<IndexVerdict>,
}

impl EquivalenceReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts.iter().filter(|v| v.verdict == verdict).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(Verdict::Mismatch) > 0
    }
}

fn evaluate(
    formula: Formula,
    index: usize,
    ics: &InitialConditions,
    coeffs: &CoefficientSequence,
    general: &mut GeneralSolution<'_>,
) -> Result<Rational> {
    let (k, n) = (index % 10, index / 10);
    let q = ClosedFormQuery::new(k, n, ics, coeffs);
    let backshift = || {
        let (a, b) = coeffs.as_constant().expect("constant coefficients");
        BackshiftQuery::from_shifted(ics, 9 - k, n, a.clone(), b.clone())
    };
    match formula {
        Formula::General => general.value(k, n),
        Formula::Constant => x_closed_constant(&q),
        Formula::ANeg1 => x_closed_a_neg1(&q),
        Formula::Backshift => x_backshift(&backshift()),
        Formula::KnownCase => known_case_form(&backshift()).expect("known case"),
    }
}

/// Compares every applicable formula with the orbit for indices `0..horizon`.
/// Indices at or past a forbidden-set truncation are skipped.
pub fn compare_with_oracle(
    ics: &InitialConditions,
    coeffs: &CoefficientSequence,
    horizon: usize,
) -> Result<EquivalenceReport> {
    let orbit = iterate(ics, coeffs, horizon.max(10))?;
    let formulas = Formula::applicable(coeffs);
    let mut general = GeneralSolution::new(ics, coeffs);
    let mut verdicts = Vec::with_capacity(horizon * formulas.len());
    for index in 0..horizon {
        let oracle = orbit.get(index).cloned();
        for &formula in &formulas {
            let (verdict, closed) = match &oracle {
                None => (Verdict::SkippedForbidden, None),
                Some(expected) => match evaluate(formula, index, ics, coeffs, &mut general) {
                    Ok(v) if &v == expected => (Verdict::ExactEqual, Some(v)),
                    Ok(v) => (Verdict::Mismatch, Some(v)),
                    Err(_) => (Verdict::Mismatch, None),
                },
            };
            verdicts.push(IndexVerdict {
                index,
                formula,
                verdict,
                oracle: oracle.clone(),
                closed,
            });
        }
    }
    Ok(EquivalenceReport {
        horizon,
        truncated_at: orbit.truncated_at,
        verdicts,
    })
}
