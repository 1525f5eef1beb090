//! Benchmark fixtures shared by the criterion targets.

use tenrec::{CoefficientSequence, InitialConditions, Rational};

/// Ten distinct nonzero seeds with moderately sized numerators.
pub fn seeds() -> InitialConditions {
    InitialConditions::new(std::array::from_fn(|i| Rational::new(i as i64 + 2, 3 + (i as i64 % 4))))
}

pub fn constant(a: (i64, i64), b: (i64, i64)) -> CoefficientSequence {
    CoefficientSequence::constant(Rational::new(a.0, a.1), Rational::new(b.0, b.1))
}

pub fn period_two() -> CoefficientSequence {
    CoefficientSequence::periodic(vec![
        (Rational::new(3, 2), Rational::new(1, 3)),
        (Rational::new(-2, 3), Rational::new(2, 1)),
    ])
    .expect("nonempty")
}
