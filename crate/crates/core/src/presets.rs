//! Seed and coefficient presets for the five reference figures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coefficients::CoefficientSequence;
use crate::initial::InitialConditions;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl Figure {
    pub const ALL: [Figure; 5] = [Figure::Fig1, Figure::Fig2, Figure::Fig3, Figure::Fig4, Figure::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
        }
    }

    /// `(A, B)`.
    pub fn coefficients(self) -> (Rational, Rational) {
        let (a, b) = match self {
            Figure::Fig1 => (-1, -1),
            Figure::Fig2 | Figure::Fig3 | Figure::Fig4 => (2, -1),
            Figure::Fig5 => (3, -1),
        };
        (Rational::integer(a), Rational::integer(b))
    }

    pub fn coefficient_sequence(self) -> CoefficientSequence {
        let (a, b) = self.coefficients();
        CoefficientSequence::constant(a, b)
    }

    pub fn initial_conditions(self) -> InitialConditions {
        let r = Rational::new;
        match self {
            Figure::Fig1 | Figure::Fig3 => InitialConditions::new([
                r(1, 1),
                r(-1, 1),
                r(2, 1),
                r(-2, 1),
                r(1, 4),
                r(1, 1),
                r(-1, 1),
                r(2, 1),
                r(-2, 1),
                r(1, 4),
            ]),
            Figure::Fig2 => InitialConditions::new([
                r(1, 1),
                r(-1, 1),
                r(2, 1),
                r(-2, 1),
                r(1, 4),
                r(-1, 4),
                r(3, 1),
                r(-3, 1),
                r(2, 3),
                r(2, 3),
            ]),
            Figure::Fig4 | Figure::Fig5 => InitialConditions::constant(Rational::one()),
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown figure {0:?} (expected fig1..fig5)")]
pub struct UnknownFigure(pub String);

impl FromStr for Figure {
    type Err = UnknownFigure;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownFigure(s.to_string()))
    }
}
