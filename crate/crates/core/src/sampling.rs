//! Seeded random instances for batch experiments.

use rand::Rng;

use crate::coefficients::CoefficientSequence;
use crate::initial::InitialConditions;
use crate::rational::Rational;

/// Numerators in `-max..=max`, denominators in `1..=max`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> Rational {
    Rational::new(rng.gen_range(-max..=max), rng.gen_range(1..=max))
}

pub fn nonzero_small_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> Rational {
    loop {
        let x = small_rational(rng, max);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn positive_small_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> Rational {
    Rational::new(rng.gen_range(1..=max), rng.gen_range(1..=max))
}

/// Ten nonzero seeds.
pub fn random_initial_conditions<R: Rng + ?Sized>(rng: &mut R) -> InitialConditions {
    InitialConditions::new(std::array::from_fn(|_| nonzero_small_rational(rng, 5)))
}

/// A seeded experiment: seeds plus coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub ics: InitialConditions,
    pub coeffs: CoefficientSequence,
}

/// Constant coefficients. One draw in four takes `A` and `B` from `{1, -1}`
/// so the special-case formulas get exercised.
pub fn random_constant_instance<R: Rng + ?Sized>(rng: &mut R) -> Instance {
    let (a, b) = if rng.gen_ratio(1, 4) {
        let unit = |rng: &mut R| Rational::integer(if rng.gen_bool(0.5) { 1 } else { -1 });
        (unit(rng), unit(rng))
    } else {
        (nonzero_small_rational(rng, 4), nonzero_small_rational(rng, 4))
    };
    Instance {
        ics: random_initial_conditions(rng),
        coeffs: CoefficientSequence::constant(a, b),
    }
}

fn random_pairs<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<(Rational, Rational)> {
    (0..len)
        .map(|_| (nonzero_small_rational(rng, 3), nonzero_small_rational(rng, 3)))
        .collect()
}

pub fn random_periodic_instance<R: Rng + ?Sized>(rng: &mut R, period: usize) -> Instance {
    Instance {
        ics: random_initial_conditions(rng),
        coeffs: CoefficientSequence::periodic(random_pairs(rng, period.max(1))).expect("nonempty"),
    }
}

pub fn random_table_instance<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Instance {
    Instance {
        ics: random_initial_conditions(rng),
        coeffs: CoefficientSequence::table(random_pairs(rng, len)),
    }
}

/// Ten positive seeds and nonzero `(A, B)` with a nonvanishing denominator
/// at those seeds.
pub fn random_symmetry_point<R: Rng + ?Sized>(rng: &mut R) -> (Vec<Rational>, Rational, Rational) {
    loop {
        let point: Vec<Rational> = (0..10).map(|_| positive_small_rational(rng, 6)).collect();
        let a = nonzero_small_rational(rng, 5);
        let b = nonzero_small_rational(rng, 5);
        let product: Rational = (0..5).map(|m| &point[2 * m]).product();
        if !(&a + &b * product).is_zero() {
            return (point, a, b);
        }
    }
}
