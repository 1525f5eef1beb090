//! Forward iteration of the shifted recurrence
//!
//! ```text
//! x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})
//! ```
//!
//! in exact arithmetic. Everything else in the crate is checked against the
//! orbits produced here.

use serde::{Deserialize, Serialize};

use crate::coefficients::CoefficientSequence;
use crate::error::{Error, Result};
use crate::initial::InitialConditions;
use crate::rational::Rational;

/// Product `x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}` read from `terms[n..]`.
pub(crate) fn even_product(terms: &[Rational], n: usize) -> Rational {
    (0..5).map(|m| &terms[n + 2 * m]).product()
}

fn step_at(window: &[Rational], a: &Rational, b: &Rational, index: usize) -> Result<Rational> {
    let denom = a + b * even_product(window, 0);
    window[0].checked_div(&denom).ok_or(Error::forbidden(index))
}

/// One application of the map to the window `x_n..x_{n+9}`, giving `x_{n+10}`.
///
/// A vanishing denominator is reported as [`Error::ForbiddenSet`] with
/// `index` 10, relative to the start of the window.
pub fn step(window: &[Rational], a: &Rational, b: &Rational) -> Result<Rational> {
    if window.len() != 10 {
        return Err(Error::InvalidInput(format!(
            "window must hold 10 terms, got {}",
            window.len()
        )));
    }
    step_at(window, a, b, 10)
}

/// A computed trajectory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub terms: Vec<Rational>,
    /// First index whose value is undefined. When set, `terms.len()` equals it.
    pub truncated_at: Option<usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated_at.is_some()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.terms.get(i)
    }
}

/// Iterates from `ics` until `count` terms exist or a denominator vanishes.
pub fn iterate(ics: &InitialConditions, coeffs: &CoefficientSequence, count: usize) -> Result<Orbit> {
    if count < 10 {
        return Err(Error::InvalidInput(format!("count must be at least 10, got {count}")));
    }
    let mut terms: Vec<Rational> = Vec::with_capacity(count);
    terms.extend(ics.iter().cloned());
    for n in 0..count - 10 {
        let (a, b) = coeffs.at(n)?;
        match step_at(&terms[n..n + 10], a, b, n + 10) {
            Ok(x) => terms.push(x),
            Err(Error::ForbiddenSet { .. }) => {
                return Ok(Orbit {
                    terms,
                    truncated_at: Some(n + 10),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Orbit {
        terms,
        truncated_at: None,
    })
}

/// `F_n = 1 / (x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})` for every `n` with
/// `n + 8` inside the orbit.
pub fn invariant_sequence(orbit: &Orbit) -> Result<Vec<Rational>> {
    if orbit.len() < 10 {
        return Err(Error::HorizonTooShort {
            available: orbit.len(),
            required: 10,
        });
    }
    if let Some(i) = orbit.terms.iter().position(Rational::is_zero) {
        return Err(Error::ZeroTerm { index: i });
    }
    Ok((0..orbit.len() - 8)
        .map(|n| even_product(&orbit.terms, n).recip().expect("nonzero factors"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn ones() -> InitialConditions {
        InitialConditions::constant(Rational::one())
    }

    fn figure1() -> InitialConditions {
        InitialConditions::new([
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
        ])
    }

    fn figure2() -> InitialConditions {
        InitialConditions::new([
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
        ])
    }

    #[test]
    fn step_examples() {
        let w = vec![Rational::one(); 10];
        assert_eq!(step(&w, &r(2, 1), &r(-1, 1)).unwrap(), r(1, 1));
        assert_eq!(step(&w, &r(3, 1), &r(-1, 1)).unwrap(), r(1, 2));
        assert_eq!(step(&w, &r(1, 1), &r(0, 1)).unwrap(), r(1, 1));
        assert!(step(&w, &r(1, 1), &r(-1, 1)).unwrap_err().is_forbidden());
        assert!(step(&w[..9], &r(1, 1), &r(0, 1)).is_err());
    }

    #[test]
    fn step_uses_only_even_offsets() {
        let mut w = vec![Rational::one(); 10];
        for odd in [1, 3, 5, 7, 9] {
            w[odd] = r(17, 3);
        }
        w[2] = r(2, 1);
        // 1 / (1 + 1 * 2)
        assert_eq!(step(&w, &r(1, 1), &r(1, 1)).unwrap(), r(1, 3));
    }

    #[test]
    fn truncates_on_forbidden_set() {
        let c = CoefficientSequence::constant(r(1, 1), r(-1, 1));
        let orbit = iterate(&ones(), &c, 11).unwrap();
        assert_eq!(orbit.truncated_at, Some(10));
        assert_eq!(orbit.len(), 10);
    }

    #[test]
    fn figure1_repeats_with_period_20() {
        let c = CoefficientSequence::constant(r(-1, 1), r(-1, 1));
        let orbit = iterate(&figure1(), &c, 40).unwrap();
        assert!(!orbit.is_truncated());
        assert_eq!(orbit.terms[10], r(-1, 2));
        for i in 0..20 {
            assert_eq!(orbit.terms[i], orbit.terms[i + 20]);
        }
        assert_ne!(orbit.terms[0], orbit.terms[10]);
    }

    #[test]
    fn fixed_point_one() {
        let c = CoefficientSequence::constant(r(2, 1), r(-1, 1));
        let orbit = iterate(&ones(), &c, 100).unwrap();
        assert!(orbit.terms.iter().all(Rational::is_one));
    }

    #[test]
    fn rejects_short_count_and_exhausted_table() {
        let c = CoefficientSequence::constant(r(2, 1), r(-1, 1));
        assert!(iterate(&ones(), &c, 9).is_err());
        let t = CoefficientSequence::table(vec![(r(2, 1), r(-1, 1)); 5]);
        assert_eq!(
            iterate(&ones(), &t, 16),
            Err(Error::CoefficientsExhausted { index: 5, len: 5 })
        );
        assert_eq!(iterate(&ones(), &t, 15).unwrap().len(), 15);
    }

    #[test]
    fn invariant_examples() {
        let c = CoefficientSequence::constant(r(2, 1), r(-1, 1));
        let f = invariant_sequence(&iterate(&ones(), &c, 12).unwrap()).unwrap();
        assert_eq!(f[0], r(1, 1));
        assert_eq!(f[1], r(1, 1));
        assert_eq!(f[2], r(2, 1) * &f[0] + r(-1, 1));

        let orbit = iterate(&figure2(), &c, 10).unwrap();
        let f = invariant_sequence(&orbit).unwrap();
        assert_eq!(f, vec![r(1, 1), r(1, 1)]);
    }

    #[test]
    fn invariant_reports_first_zero() {
        let mut v = vec![Rational::one(); 10];
        v[4] = Rational::zero();
        let ics = InitialConditions::from_slice(&v).unwrap();
        let c = CoefficientSequence::constant(r(2, 1), r(1, 1));
        let orbit = iterate(&ics, &c, 20).unwrap();
        assert_eq!(invariant_sequence(&orbit), Err(Error::ZeroTerm { index: 4 }));
    }

    #[test]
    fn prefix_property() {
        let c = CoefficientSequence::constant(r(3, 2), r(1, 3));
        let short = iterate(&figure2(), &c, 30).unwrap();
        let long = iterate(&figure2(), &c, 60).unwrap();
        assert_eq!(&long.terms[..30], &short.terms[..]);
    }
}
