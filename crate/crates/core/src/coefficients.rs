use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Source of the coefficient pairs `(A_n, B_n)` of the shifted recurrence
/// `x_{n+10} = x_n / (A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientSequence {
    Constant {
        a: Rational,
        b: Rational,
    },
    /// `pairs[n mod len]`; never empty.
    Periodic {
        pairs: Vec<(Rational, Rational)>,
    },
    /// `pairs[n]`; lookups past the end are an error, not a wrap-around.
    Table {
        pairs: Vec<(Rational, Rational)>,
    },
}

impl CoefficientSequence {
    pub fn constant(a: Rational, b: Rational) -> Self {
        CoefficientSequence::Constant { a, b }
    }

    pub fn periodic(pairs: Vec<(Rational, Rational)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidInput("periodic coefficient list must be nonempty".into()));
        }
        Ok(CoefficientSequence::Periodic { pairs })
    }

    pub fn table(pairs: Vec<(Rational, Rational)>) -> Self {
        CoefficientSequence::Table { pairs }
    }

    /// Builds the shifted-form sequence from pairs `(a_n, b_n)` given in the
    /// original indexing, where `A_n = a_{n+offset}`.
    ///
    /// With the shifted initial window `x_0..x_9` the offset is 9; with
    /// back-shifted data `x_{-9}..x_0` it is 0.
    pub fn reindexed(self, offset: usize) -> Self {
        match self {
            CoefficientSequence::Constant { .. } => self,
            CoefficientSequence::Periodic { mut pairs } => {
                let len = pairs.len();
                pairs.rotate_left(offset % len);
                CoefficientSequence::Periodic { pairs }
            }
            CoefficientSequence::Table { pairs } => CoefficientSequence::Table {
                pairs: pairs.into_iter().skip(offset).collect(),
            },
        }
    }

    /// `(A_n, B_n)`.
    pub fn at(&self, n: usize) -> Result<(&Rational, &Rational)> {
        match self {
            CoefficientSequence::Constant { a, b } => Ok((a, b)),
            CoefficientSequence::Periodic { pairs } => {
                let (a, b) = &pairs[n % pairs.len()];
                Ok((a, b))
            }
            CoefficientSequence::Table { pairs } => {
                pairs.get(n).map(|(a, b)| (a, b)).ok_or(Error::CoefficientsExhausted {
                    index: n,
                    len: pairs.len(),
                })
            }
        }
    }

    pub fn a(&self, n: usize) -> Result<&Rational> {
        self.at(n).map(|(a, _)| a)
    }

    pub fn b(&self, n: usize) -> Result<&Rational> {
        self.at(n).map(|(_, b)| b)
    }

    /// `Some((A, B))` when every pair is the same.
    pub fn as_constant(&self) -> Option<(&Rational, &Rational)> {
        match self {
            CoefficientSequence::Constant { a, b } => Some((a, b)),
            CoefficientSequence::Periodic { pairs } => {
                let (a, b) = &pairs[0];
                pairs.iter().all(|(x, y)| x == a && y == b).then_some((a, b))
            }
            CoefficientSequence::Table { .. } => None,
        }
    }

    /// Number of indices available, `None` when unbounded.
    pub fn table_len(&self) -> Option<usize> {
        match self {
            CoefficientSequence::Table { pairs } => Some(pairs.len()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64) -> Rational {
        Rational::integer(p)
    }

    #[test]
    fn constant_and_periodic_lookup() {
        let c = CoefficientSequence::constant(r(2), r(-1));
        assert_eq!(c.at(1000).unwrap(), (&r(2), &r(-1)));

        let p = CoefficientSequence::periodic(vec![(r(1), r(2)), (r(3), r(4))]).unwrap();
        assert_eq!(p.at(0).unwrap(), (&r(1), &r(2)));
        assert_eq!(p.at(5).unwrap(), (&r(3), &r(4)));
        assert!(CoefficientSequence::periodic(vec![]).is_err());
    }

    #[test]
    fn table_errors_past_end() {
        let t = CoefficientSequence::table(vec![(r(1), r(1)); 3]);
        assert!(t.at(2).is_ok());
        assert_eq!(t.at(3), Err(Error::CoefficientsExhausted { index: 3, len: 3 }));
    }

    #[test]
    fn reindexing_shifts_by_nine() {
        let rows: Vec<_> = (0..20).map(|i| (r(i), r(-i))).collect();
        let t = CoefficientSequence::table(rows.clone()).reindexed(9);
        assert_eq!(t.at(0).unwrap(), (&r(9), &r(-9)));
        assert_eq!(t.table_len(), Some(11));

        let p = CoefficientSequence::periodic(rows[..2].to_vec()).unwrap().reindexed(9);
        // a_{n+9} with period 2 starts at a_1.
        assert_eq!(p.at(0).unwrap(), (&r(1), &r(-1)));
        assert_eq!(p.at(1).unwrap(), (&r(0), &r(0)));
    }

    #[test]
    fn detects_constant_periodic() {
        let p = CoefficientSequence::periodic(vec![(r(2), r(1)); 3]).unwrap();
        assert_eq!(p.as_constant(), Some((&r(2), &r(1))));
        let q = CoefficientSequence::periodic(vec![(r(2), r(1)), (r(2), r(3))]).unwrap();
        assert_eq!(q.as_constant(), None);
    }
}
