//! Periodicity conditions, minimal-period detection and linear stability of
//! the equilibria for constant coefficients.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::initial::InitialConditions;
use crate::rational::Rational;
use crate::recurrence::Orbit;
use crate::symmetry::ComplexF;

/// Whether the seeds satisfy the sufficient conditions for solutions of
/// period 20, 10, 5 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TheoremConditions {
    pub p20: bool,
    pub p10: bool,
    pub p5: bool,
    pub p1: bool,
}

impl TheoremConditions {
    /// `(period, holds)` pairs, longest period first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> {
        [(20, self.p20), (10, self.p10), (5, self.p5), (1, self.p1)].into_iter()
    }
}

/// Exact check of the four periodicity hypotheses.
///
/// * `p20`: `A = -1` (and `B != 0`).
/// * `p10`: `A != 1`, `x_i x_{i+2} x_{i+4} x_{i+6} x_{i+8} = (1-A)/B` for both
///   parities `i = 0, 1`, `x_i != x_{i+2}` and `x_i != x_{i+5}` wherever both
///   seeds exist.
/// * `p5`: `A != 1`, `x_0 x_1 x_2 x_3 x_4 = (1-A)/B`, `x_i != x_{i+2}` and
///   `x_i = x_{i+5}`.
/// * `p1`: `A != 1` and `x_i^5 = (1-A)/B` for every seed.
///
/// All conditions are false when `B = 0`.
pub fn check_theorem_conditions(ics: &InitialConditions, a: &Rational, b: &Rational) -> TheoremConditions {
    if b.is_zero() {
        return TheoremConditions::default();
    }
    let x = ics.values();
    let a_is_one = a.is_one();
    let target = (Rational::one() - a) / b;

    let step2_distinct = (0..8).all(|i| x[i] != x[i + 2]);
    let step5_distinct = (0..5).all(|i| x[i] != x[i + 5]);
    let step5_equal = (0..5).all(|i| x[i] == x[i + 5]);

    let p10 = !a_is_one
        && ics.parity_product(0) == target
        && ics.parity_product(1) == target
        && step2_distinct
        && step5_distinct;
    let p5 = !a_is_one && x[..5].iter().product::<Rational>() == target && step2_distinct && step5_equal;
    let p1 = !a_is_one && x.iter().all(|xi| xi.powu(5) == target);

    TheoremConditions {
        p20: *a == Rational::integer(-1),
        p10,
        p5,
        p1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub minimal_period: Option<usize>,
    pub checked_horizon: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_conditions: Option<TheoremConditions>,
}

/// Smallest `p <= max_period` with `x_i = x_{i+p}` across the whole orbit.
pub fn minimal_period(orbit: &Orbit, max_period: usize) -> Result<PeriodReport> {
    if let Some(index) = orbit.truncated_at {
        return Err(Error::TruncatedOrbit { index });
    }
    if max_period == 0 {
        return Err(Error::InvalidInput("max_period must be positive".into()));
    }
    let required = 2 * max_period;
    if orbit.len() < required {
        return Err(Error::HorizonTooShort {
            available: orbit.len(),
            required,
        });
    }
    let terms = &orbit.terms;
    let minimal_period = (1..=max_period).find(|&p| terms.iter().zip(&terms[p..]).all(|(x, y)| x == y));
    Ok(PeriodReport {
        minimal_period,
        checked_horizon: orbit.len(),
        theorem_conditions: None,
    })
}

/// An equilibrium `x = x / (A + B x^5)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum FixedPoint {
    Exact(Rational),
    /// Irrational real fifth root, at double precision.
    Approximate(f64),
}

impl FixedPoint {
    pub fn to_f64(&self) -> f64 {
        match self {
            FixedPoint::Exact(r) => r.to_f64(),
            FixedPoint::Approximate(v) => *v,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FixedPoint::Exact(r) => r.is_zero(),
            FixedPoint::Approximate(v) => *v == 0.0,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            FixedPoint::Exact(r) => Some(r),
            FixedPoint::Approximate(_) => None,
        }
    }
}

/// Real equilibria: `0`, plus the real fifth root of `(1-A)/B` when it is
/// nonzero.
pub fn fixed_points(a: &Rational, b: &Rational) -> Result<Vec<FixedPoint>> {
    if b.is_zero() {
        return Err(Error::InvalidInput("B must be nonzero".into()));
    }
    let mut points = vec![FixedPoint::Exact(Rational::zero())];
    let c = (Rational::one() - a) / b;
    if c.is_zero() {
        return Ok(points);
    }
    points.push(match c.exact_root(5) {
        Some(root) => FixedPoint::Exact(root),
        None => {
            let v = c.to_f64();
            FixedPoint::Approximate(v.signum() * v.abs().powf(0.2))
        }
    });
    Ok(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    AsymptoticallyStable,
    NonHyperbolic,
    Unstable,
}

/// Tolerance for deciding that a root lies on the unit circle.
pub const UNIT_CIRCLE_TOL: f64 = 1e-12;

/// Linear stability from characteristic roots: any root on the unit circle
/// makes the equilibrium non-hyperbolic; otherwise all roots inside means
/// asymptotically stable and any root outside means unstable.
pub fn classify(roots: &[ComplexF]) -> Classification {
    if roots.iter().any(|z| (z.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL) {
        Classification::NonHyperbolic
    } else if roots.iter().all(|z| z.norm() < 1.0) {
        Classification::AsymptoticallyStable
    } else {
        Classification::Unstable
    }
}

/// Coefficients, highest degree first, of `lambda^10 - 1/A` (linearization at 0).
pub fn zero_point_polynomial(a: &Rational) -> Result<Vec<Rational>> {
    let inv = a
        .recip()
        .ok_or_else(|| Error::InvalidInput("A must be nonzero at the zero equilibrium".into()))?;
    let mut c = vec![Rational::zero(); 11];
    c[0] = Rational::one();
    c[10] = -inv;
    Ok(c)
}

/// Coefficients, highest degree first, of
/// `lambda^10 - (A-1)(lambda^8 + lambda^6 + lambda^4 + lambda^2) - A`
/// (linearization at a nonzero equilibrium).
pub fn nonzero_point_polynomial(a: &Rational) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); 11];
    let am1 = a - Rational::one();
    c[0] = Rational::one();
    for deg in [8, 6, 4, 2] {
        c[10 - deg] = -&am1;
    }
    c[10] = -a;
    c
}

/// Horner evaluation of a real polynomial (highest degree first) at a complex point.
pub fn eval_polynomial(coeffs: &[f64], z: ComplexF) -> ComplexF {
    coeffs.iter().fold(ComplexF::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn polynomial_to_f64(coeffs: &[Rational]) -> Vec<f64> {
    coeffs.iter().map(Rational::to_f64).collect()
}

/// Ten roots of `lambda^10 = 1/A`.
pub fn zero_point_roots(a: &Rational) -> Result<Vec<ComplexF>> {
    let inv = a
        .recip()
        .ok_or_else(|| Error::InvalidInput("A must be nonzero at the zero equilibrium".into()))?;
    let v = inv.to_f64();
    let modulus = v.abs().powf(0.1);
    // Negative right-hand side rotates the tenth roots of unity by pi/10.
    let offset = if v < 0.0 { PI / 10.0 } else { 0.0 };
    Ok((0..10)
        .map(|m| ComplexF::from_polar(modulus, offset + 2.0 * PI * m as f64 / 10.0))
        .collect())
}

/// Ten roots of the nonzero-equilibrium polynomial via its factorization
/// `(lambda^2 - A)(lambda^8 + lambda^6 + lambda^4 + lambda^2 + 1)`: the two
/// square roots of `A` followed by the tenth roots of unity other than `+-1`.
pub fn nonzero_point_roots(a: &Rational) -> Vec<ComplexF> {
    let v = a.to_f64();
    let sqrt = if v >= 0.0 {
        ComplexF::new(v.sqrt(), 0.0)
    } else {
        ComplexF::new(0.0, (-v).sqrt())
    };
    let mut roots = vec![sqrt, -sqrt];
    roots.extend(
        (1..10)
            .filter(|&m| m != 5)
            .map(|m| ComplexF::from_polar(1.0, PI * m as f64 / 5.0)),
    );
    roots
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedFixedPoint {
    pub point: FixedPoint,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub fixed_points: Vec<ClassifiedFixedPoint>,
    pub roots_zero: Vec<ComplexF>,
    /// Absent when `A = 1`, where zero is the only equilibrium.
    pub roots_nonzero: Option<Vec<ComplexF>>,
}

impl StabilityReport {
    pub fn classification_of_zero(&self) -> Classification {
        self.fixed_points[0].classification
    }
}

/// Equilibria of the constant-coefficient map and their linear stability.
pub fn stability(a: &Rational, b: &Rational) -> Result<StabilityReport> {
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "A = 0: characteristic polynomial at zero is undefined".into(),
        ));
    }
    let points = fixed_points(a, b)?;
    let roots_zero = zero_point_roots(a)?;
    let roots_nonzero = (!a.is_one()).then(|| nonzero_point_roots(a));
    let fixed_points = points
        .into_iter()
        .map(|point| {
            let roots = if point.is_zero() {
                &roots_zero
            } else {
                roots_nonzero.as_ref().expect("nonzero equilibrium requires A != 1")
            };
            ClassifiedFixedPoint {
                classification: classify(roots),
                point,
            }
        })
        .collect();
    Ok(StabilityReport {
        fixed_points,
        roots_zero,
        roots_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::CoefficientSequence;
    use crate::presets::Figure;
    use crate::recurrence::iterate;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn orbit(fig: Figure, n: usize) -> Orbit {
        iterate(&fig.initial_conditions(), &fig.coefficient_sequence(), n).unwrap()
    }

    #[test]
    fn theorem_condition_examples() {
        let c = check_theorem_conditions(&Figure::Fig2.initial_conditions(), &r(2, 1), &r(-1, 1));
        assert!(c.p10 && !c.p5 && !c.p1 && !c.p20);
        let c = check_theorem_conditions(&Figure::Fig3.initial_conditions(), &r(2, 1), &r(-1, 1));
        assert!(c.p5 && !c.p10 && !c.p1);
        let ones = InitialConditions::constant(Rational::one());
        let c = check_theorem_conditions(&ones, &r(3, 1), &r(-1, 1));
        assert!(!c.p1);
        let c = check_theorem_conditions(&ones, &r(2, 1), &r(-1, 1));
        assert!(c.p1);
        let c = check_theorem_conditions(&Figure::Fig1.initial_conditions(), &r(-1, 1), &r(-1, 1));
        assert!(c.p20);
        assert_eq!(
            check_theorem_conditions(&ones, &r(2, 1), &r(0, 1)),
            TheoremConditions::default()
        );
    }

    #[test]
    fn minimal_period_examples() {
        assert_eq!(
            minimal_period(&orbit(Figure::Fig1, 80), 40).unwrap().minimal_period,
            Some(20)
        );
        assert_eq!(
            minimal_period(&orbit(Figure::Fig4, 80), 40).unwrap().minimal_period,
            Some(1)
        );
        let zeros = InitialConditions::constant(Rational::zero());
        let o = iterate(&zeros, &CoefficientSequence::constant(r(7, 3), r(1, 1)), 30).unwrap();
        assert_eq!(minimal_period(&o, 10).unwrap().minimal_period, Some(1));
        assert_eq!(
            minimal_period(&orbit(Figure::Fig5, 200), 40).unwrap().minimal_period,
            None
        );
    }

    #[test]
    fn minimal_period_errors() {
        let o = orbit(Figure::Fig1, 30);
        assert_eq!(
            minimal_period(&o, 20),
            Err(Error::HorizonTooShort {
                available: 30,
                required: 40
            })
        );
        let ones = InitialConditions::constant(Rational::one());
        let t = iterate(&ones, &CoefficientSequence::constant(r(1, 1), r(-1, 1)), 40).unwrap();
        assert_eq!(minimal_period(&t, 5), Err(Error::TruncatedOrbit { index: 10 }));
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(
            fixed_points(&r(2, 1), &r(-1, 1)).unwrap(),
            vec![FixedPoint::Exact(r(0, 1)), FixedPoint::Exact(r(1, 1))]
        );
        assert_eq!(
            fixed_points(&r(1, 1), &r(5, 3)).unwrap(),
            vec![FixedPoint::Exact(r(0, 1))]
        );
        assert_eq!(
            fixed_points(&r(-31, 1), &r(1, 1)).unwrap(),
            vec![FixedPoint::Exact(r(0, 1)), FixedPoint::Exact(r(2, 1))]
        );
        let fp = fixed_points(&r(3, 1), &r(1, 1)).unwrap();
        match fp[1] {
            FixedPoint::Approximate(v) => assert!((v.powi(5) + 2.0).abs() < 1e-12),
            _ => panic!("-2 has no rational fifth root"),
        }
        assert!(fixed_points(&r(3, 1), &r(0, 1)).is_err());
    }

    #[test]
    fn stability_at_a_equal_one() {
        let rep = stability(&r(1, 1), &r(1, 1)).unwrap();
        assert_eq!(rep.fixed_points.len(), 1);
        assert_eq!(rep.classification_of_zero(), Classification::NonHyperbolic);
        assert!(rep.roots_nonzero.is_none());
        for z in &rep.roots_zero {
            assert!((z.norm() - 1.0).abs() <= 1e-12);
            assert!((z.powu(10) - 1.0).norm() <= 1e-12);
        }
    }

    #[test]
    fn stability_at_a_equal_two() {
        let rep = stability(&r(2, 1), &r(-1, 1)).unwrap();
        let expected = 2f64.powf(-0.1);
        assert!((expected - 0.93303).abs() < 1e-5);
        for z in &rep.roots_zero {
            assert!((z.norm() - expected).abs() <= 1e-12);
        }
        assert_eq!(rep.classification_of_zero(), Classification::AsymptoticallyStable);
        assert_eq!(rep.fixed_points[1].classification, Classification::NonHyperbolic);

        let roots = rep.roots_nonzero.unwrap();
        let s2 = 2f64.sqrt();
        assert!(roots.iter().any(|z| (z - s2).norm() < 1e-12));
        assert!(roots.iter().any(|z| (z + s2).norm() < 1e-12));
        assert_eq!(roots.iter().filter(|z| (z.norm() - 1.0).abs() < 1e-12).count(), 8);
        let poly = polynomial_to_f64(&nonzero_point_polynomial(&r(2, 1)));
        let e = ComplexF::from_polar(1.0, 2.0 * PI / 5.0);
        assert!(eval_polynomial(&poly, e).norm() <= 1e-10);
    }

    #[test]
    fn stability_rejects_zero_a_and_classifies_unstable() {
        assert!(stability(&r(0, 1), &r(1, 1)).is_err());
        let rep = stability(&r(1, 2), &r(1, 1)).unwrap();
        assert_eq!(rep.classification_of_zero(), Classification::Unstable);
        let rep = stability(&r(-1, 1), &r(1, 1)).unwrap();
        assert_eq!(rep.classification_of_zero(), Classification::NonHyperbolic);
    }

    #[test]
    fn reported_roots_satisfy_their_polynomials() {
        for (p, q) in [(2, 1), (-3, 1), (1, 3), (-2, 5), (7, 2), (-1, 1)] {
            let a = r(p, q);
            let pz = polynomial_to_f64(&zero_point_polynomial(&a).unwrap());
            for z in zero_point_roots(&a).unwrap() {
                assert!(eval_polynomial(&pz, z).norm() <= 1e-10, "A={a} zero root {z}");
            }
            let pn = polynomial_to_f64(&nonzero_point_polynomial(&a));
            for z in nonzero_point_roots(&a) {
                assert!(eval_polynomial(&pn, z).norm() <= 1e-10, "A={a} nonzero root {z}");
            }
        }
    }

    #[test]
    fn negative_inverse_roots_are_rotated() {
        let roots = zero_point_roots(&r(-2, 1)).unwrap();
        for z in &roots {
            assert!((z.powu(10) - ComplexF::new(-0.5, 0.0)).norm() < 1e-12);
        }
    }
}
