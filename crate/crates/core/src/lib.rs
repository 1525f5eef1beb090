//! Exact simulation, closed-form solution and analysis of the tenth-order
//! rational difference equation
//!
//! ```text
//! x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})
//! ```
//!
//! All orbit arithmetic is done in exact rationals, so closed forms are
//! compared with brute-force iteration by equality rather than tolerance.

pub mod analysis;
pub mod closed_form;
pub mod coefficients;
pub mod equivalence;
pub mod error;
pub mod indexing;
pub mod initial;
pub mod presets;
pub mod rational;
pub mod recurrence;
pub mod sampling;
pub mod symmetry;

pub use analysis::{
    check_theorem_conditions, fixed_points, minimal_period, stability, Classification, FixedPoint, PeriodReport,
    StabilityReport, TheoremConditions,
};
pub use closed_form::{
    f_closed, x_backshift, x_closed_a_neg1, x_closed_constant, x_closed_general, BackshiftQuery, ClosedFormQuery,
    GeneralSolution, KnownCase,
};
pub use coefficients::CoefficientSequence;
pub use error::{Error, Result};
pub use indexing::{backshift_index, tau_floor};
pub use initial::InitialConditions;
pub use presets::Figure;
pub use rational::Rational;
pub use recurrence::{invariant_sequence, iterate, step, Orbit};
pub use symmetry::{
    alpha_sum_residual, canonical_invariant, symmetry_residual, CanonicalCoordinate, ComplexF, SymmetryCharacteristic,
};
