use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The ten seed values `x_0..x_9` of the shifted recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct InitialConditions([Rational; 10]);

impl InitialConditions {
    pub fn new(values: [Rational; 10]) -> Self {
        InitialConditions(values)
    }

    pub fn from_slice(values: &[Rational]) -> Result<Self> {
        let arr: [Rational; 10] = values.to_vec().try_into().map_err(|v: Vec<Rational>| {
            Error::InvalidInput(format!("expected exactly 10 initial conditions, got {}", v.len()))
        })?;
        Ok(InitialConditions(arr))
    }

    /// Seeds given in the original presentation, ordered `x_{-9}, ..., x_0`.
    /// Index translation by nine puts them at shifted positions `0..=9`.
    pub fn from_backshifted(ordered: &[Rational]) -> Result<Self> {
        Self::from_slice(ordered)
    }

    /// Seeds given as `a_0..a_9` with `a_j = x_{-j}`.
    pub fn from_a_values(a: &[Rational; 10]) -> Self {
        InitialConditions(std::array::from_fn(|i| a[9 - i].clone()))
    }

    /// The `a_j = x_{-j}` view of these seeds.
    pub fn a_values(&self) -> [Rational; 10] {
        std::array::from_fn(|j| self.0[9 - j].clone())
    }

    pub fn constant(value: Rational) -> Self {
        InitialConditions(std::array::from_fn(|_| value.clone()))
    }

    pub fn values(&self) -> &[Rational; 10] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// `x_t x_{t+2} x_{t+4} x_{t+6} x_{t+8}` for parity `t` in `{0, 1}`.
    pub fn parity_product(&self, t: usize) -> Rational {
        assert!(t <= 1, "parity must be 0 or 1");
        (0..5).map(|m| &self.0[t + 2 * m]).product()
    }
}

impl Index<usize> for InitialConditions {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl TryFrom<Vec<Rational>> for InitialConditions {
    type Error = Error;

    fn try_from(v: Vec<Rational>) -> Result<Self> {
        Self::from_slice(&v)
    }
}

impl From<InitialConditions> for Vec<Rational> {
    fn from(ics: InitialConditions) -> Self {
        ics.0.into_iter().collect()
    }
}
