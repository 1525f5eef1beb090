//! Explicit solution formulas.
//!
//! The invariant `F_n = 1/(x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8})` obeys
//! `F_{n+2} = A_n F_n + B_n`, and `x_{n+10} = x_n F_n / F_{n+2}`. Unrolling
//! both gives `x_{10n+k}` as `x_k` times a product of `n` ratios of invariant
//! values. The functions here evaluate that product in the general
//! variable-coefficient form, in the constant-coefficient form (with the
//! geometric sums summed), in the parity form for `A = -1`, and in the
//! back-shifted presentation `x_{10n-j}` together with its four unit-coefficient
//! special cases.
//!
//! All quantities in a product are multiplied through by
//! `P = x_t x_{t+2} x_{t+4} x_{t+6} x_{t+8}` (`t` the parity of `k`), so a
//! zero seed never forces a division. A vanishing denominator is reported as
//! [`Error::ForbiddenSet`] carrying the shifted index of the first undefined
//! term and the product block `s` in which it appeared.

use crate::coefficients::CoefficientSequence;
use crate::error::{Error, Result};
use crate::indexing::{tau, tau_floor};
use crate::initial::InitialConditions;
use crate::rational::{ProductAccumulator, Rational};

/// For parity `j` and length `m` returns
/// `(prod_{t<m} A_{2t+j}, sum_{i<m} B_{2i+j} prod_{k=i+1}^{m-1} A_{2k+j})`.
fn product_and_weighted_sum(j: usize, m: usize, coeffs: &CoefficientSequence) -> Result<(Rational, Rational)> {
    let mut suffix = Rational::one();
    let mut sum = Rational::zero();
    for i in (0..m).rev() {
        let (a, b) = coeffs.at(2 * i + j)?;
        sum = sum + b * &suffix;
        suffix = suffix * a;
    }
    Ok((suffix, sum))
}

/// `F_{2n+j}` from `F_j` by the unrolled first-order recursion.
pub fn f_closed(j: usize, n: usize, f_j: &Rational, coeffs: &CoefficientSequence) -> Result<Rational> {
    if j > 1 {
        return Err(Error::IndexOutOfRange {
            value: j,
            expected: "0 or 1",
        });
    }
    let (prod, sum) = product_and_weighted_sum(j, n, coeffs)?;
    Ok(f_j * prod + sum)
}

fn check_residue(k: usize) -> Result<()> {
    if k > 9 {
        Err(Error::IndexOutOfRange {
            value: k,
            expected: "0..=9",
        })
    } else {
        Ok(())
    }
}

/// Target `x_{10n+k}` of a closed-form evaluation.
#[derive(Debug, Clone, Copy)]
pub struct ClosedFormQuery<'a> {
    pub k: usize,
    pub n: usize,
    pub ics: &'a InitialConditions,
    pub coeffs: &'a CoefficientSequence,
}

impl<'a> ClosedFormQuery<'a> {
    pub fn new(k: usize, n: usize, ics: &'a InitialConditions, coeffs: &'a CoefficientSequence) -> Self {
        ClosedFormQuery { k, n, ics, coeffs }
    }

    pub fn target_index(&self) -> usize {
        10 * self.n + self.k
    }

    fn constant_coefficients(&self) -> Result<(&'a Rational, &'a Rational)> {
        self.coeffs
            .as_constant()
            .ok_or_else(|| Error::InvalidInput("formula requires constant coefficients".into()))
    }
}

/// Evaluator for the general variable-coefficient solution.
///
/// Keeps the `P`-scaled invariants `P_t F_{2m+t}` of both parities so that a
/// sweep over many `(k, n)` pairs evaluates each one once.
#[derive(Debug, Clone)]
pub struct GeneralSolution<'a> {
    ics: &'a InitialConditions,
    coeffs: &'a CoefficientSequence,
    products: [Rational; 2],
    /// Per parity: `prod_{i<m} A_{2i+t}` and the weighted sum, for `m = 0, 1, ...`.
    prods: [Vec<Rational>; 2],
    sums: [Vec<Rational>; 2],
    scaled: [Vec<Rational>; 2],
}

impl<'a> GeneralSolution<'a> {
    pub fn new(ics: &'a InitialConditions, coeffs: &'a CoefficientSequence) -> Self {
        GeneralSolution {
            ics,
            coeffs,
            products: [ics.parity_product(0), ics.parity_product(1)],
            prods: [vec![Rational::one()], vec![Rational::one()]],
            sums: [vec![Rational::zero()], vec![Rational::zero()]],
            scaled: [Vec::new(), Vec::new()],
        }
    }

    /// `P_t F_{2m+t}`.
    ///
    /// Both the product and the weighted sum for `m + 1` are obtained from
    /// those for `m` by appending one factor, which keeps a sweep over `m`
    /// linear rather than quadratic.
    fn scaled_invariant(&mut self, t: usize, m: usize) -> Result<Rational> {
        while self.prods[t].len() <= m {
            let i = self.prods[t].len() - 1;
            let (a, b) = self.coeffs.at(2 * i + t)?;
            let prod = &self.prods[t][i] * a;
            let sum = &self.sums[t][i] * a + b;
            self.prods[t].push(prod);
            self.sums[t].push(sum);
        }
        while self.scaled[t].len() <= m {
            let i = self.scaled[t].len();
            let value = &self.prods[t][i] + &self.products[t] * &self.sums[t][i];
            self.scaled[t].push(value);
        }
        Ok(self.scaled[t][m].clone())
    }

    /// `x_{10n+k}`.
    pub fn value(&mut self, k: usize, n: usize) -> Result<Rational> {
        check_residue(k)?;
        let (h, t) = tau_floor(k);
        let mut x = ProductAccumulator::new(&self.ics[k]);
        for s in 0..n {
            let m = 5 * s + h;
            let num = self.scaled_invariant(t, m)?;
            let den = self.scaled_invariant(t, m + 1)?;
            if den.is_zero() {
                return Err(Error::forbidden_in_block(10 * (s + 1) + k, s));
            }
            x.mul_ratio(&num, &den);
        }
        Ok(x.finish())
    }

    /// `x_i` for an arbitrary shifted index.
    pub fn at_index(&mut self, index: usize) -> Result<Rational> {
        self.value(index % 10, index / 10)
    }
}

/// General solution for arbitrary coefficient sequences.
pub fn x_closed_general(q: &ClosedFormQuery<'_>) -> Result<Rational> {
    GeneralSolution::new(q.ics, q.coeffs).value(q.k, q.n)
}

/// `sum_{t<m} A^t` in closed form.
fn geometric_sum(a: &Rational, a_pow_m: &Rational, m: usize) -> Rational {
    if a.is_one() {
        Rational::integer(m as i64)
    } else {
        (Rational::one() - a_pow_m) / (Rational::one() - a)
    }
}

/// Constant-coefficient solution, branching on `A = 1` and `A != 1`.
pub fn x_closed_constant(q: &ClosedFormQuery<'_>) -> Result<Rational> {
    check_residue(q.k)?;
    let (a, b) = q.constant_coefficients()?;
    let (h, t) = tau_floor(q.k);
    let p = q.ics.parity_product(t);
    let bp = b * &p;
    let mut x = ProductAccumulator::new(&q.ics[q.k]);

    if a.is_one() {
        for s in 0..q.n {
            let m = (5 * s + h) as i64;
            let num = Rational::one() + &bp * Rational::integer(m);
            let den = Rational::one() + &bp * Rational::integer(m + 1);
            if den.is_zero() {
                return Err(Error::forbidden_in_block(10 * (s + 1) + q.k, s));
            }
            x.mul_ratio(&num, &den);
        }
        return Ok(x.finish());
    }

    let a5 = a.powu(5);
    let mut a_m = a.powu(h as u32);
    for s in 0..q.n {
        let m = 5 * s + h;
        let a_m1 = &a_m * a;
        let num = &a_m + &bp * geometric_sum(a, &a_m, m);
        let den = &a_m1 + &bp * geometric_sum(a, &a_m1, m + 1);
        if den.is_zero() {
            return Err(Error::forbidden_in_block(10 * (s + 1) + q.k, s));
        }
        x.mul_ratio(&num, &den);
        a_m = a_m * &a5;
    }
    Ok(x.finish())
}

/// Solution for `A = -1`: period-two behavior in the block count `n`.
///
/// Even `n` returns `x_k`. Odd `n` divides by `-1 + B P` for
/// `k in {0,1,4,5,8,9}` and multiplies by it for `k in {2,3,6,7}`, where
/// `P` is the product of the five seeds sharing the parity of `k`.
pub fn x_closed_a_neg1(q: &ClosedFormQuery<'_>) -> Result<Rational> {
    check_residue(q.k)?;
    let (a, b) = q.constant_coefficients()?;
    if *a != Rational::integer(-1) {
        return Err(Error::InvalidInput("formula requires A = -1".into()));
    }
    let k = q.k;
    let xk = q.ics[k].clone();
    if q.n == 0 {
        return Ok(xk);
    }
    // (divides, index of the first factor in x_{first} x_{first+2} ... x_{first+8})
    let (divides, first) = match k {
        0 | 1 => (true, k),
        2 | 3 => (false, k - 2),
        4 | 5 => (true, k - 4),
        6 | 7 => (false, k - 6),
        _ => (true, k - 8),
    };
    let p: Rational = (0..5).map(|m| &q.ics[first + 2 * m]).product();
    let factor = Rational::integer(-1) + b * p;
    if factor.is_zero() {
        // -1 + B P is the first denominator met by this parity class, at x_{10 + tau(k)}.
        return Err(Error::forbidden_in_block(10 + tau(k), 0));
    }
    if q.n.is_multiple_of(2) {
        Ok(xk)
    } else if divides {
        Ok(xk / factor)
    } else {
        Ok(xk * factor)
    }
}

/// Target `x_{10n-j}` of the back-shifted presentation, with seeds
/// `a_j = x_{-j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackshiftQuery {
    pub j: usize,
    pub n: usize,
    pub a: [Rational; 10],
    pub coef_a: Rational,
    pub coef_b: Rational,
}

impl BackshiftQuery {
    pub fn new(j: usize, n: usize, a: [Rational; 10], coef_a: Rational, coef_b: Rational) -> Self {
        BackshiftQuery {
            j,
            n,
            a,
            coef_a,
            coef_b,
        }
    }

    /// Builds the query whose answer is the shifted term `x_{10n + 9 - j}` of
    /// the orbit seeded by `ics`.
    pub fn from_shifted(ics: &InitialConditions, j: usize, n: usize, coef_a: Rational, coef_b: Rational) -> Self {
        BackshiftQuery::new(j, n, ics.a_values(), coef_a, coef_b)
    }

    /// `M_j = 5 - floor(j/2)`, in `1..=5`.
    pub fn m_j(&self) -> i64 {
        5 - (self.j / 2) as i64
    }

    /// `P_j = a_{t} a_{t+2} a_{t+4} a_{t+6} a_{t+8}` with `t = tau(j)`, that is
    /// `x_{-t-8} x_{-t-6} x_{-t-4} x_{-t-2} x_{-t}`.
    pub fn p_j(&self) -> Rational {
        let t = tau(self.j);
        (0..5).map(|m| &self.a[t + 2 * m]).product()
    }

    /// Shifted index of `x_{10n-j}`.
    pub fn shifted_index(&self) -> usize {
        10 * self.n + 9 - self.j
    }

    fn check(&self) -> Result<()> {
        if self.j > 9 {
            return Err(Error::IndexOutOfRange {
                value: self.j,
                expected: "0..=9",
            });
        }
        Ok(())
    }

    fn forbidden(&self, s: usize) -> Error {
        Error::forbidden_in_block(10 * (s + 1) + 9 - self.j, s)
    }

    fn product_of<F>(&self, mut factor: F) -> Result<Rational>
    where
        F: FnMut(usize) -> (Rational, Rational),
    {
        let mut x = ProductAccumulator::new(&self.a[self.j]);
        for s in 0..self.n {
            let (num, den) = factor(s);
            if den.is_zero() {
                return Err(self.forbidden(s));
            }
            x.mul_ratio(&num, &den);
        }
        Ok(x.finish())
    }
}

/// The four `(A, B)` pairs with `|A| = |B| = 1` that have dedicated
/// product forms in terms of `M_j` and `P_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownCase {
    /// `A = 1, B = 1`
    PlusPlus,
    /// `A = 1, B = -1`
    PlusMinus,
    /// `A = -1, B = 1`
    MinusPlus,
    /// `A = -1, B = -1`
    MinusMinus,
}

impl KnownCase {
    pub const ALL: [KnownCase; 4] = [
        KnownCase::PlusPlus,
        KnownCase::PlusMinus,
        KnownCase::MinusPlus,
        KnownCase::MinusMinus,
    ];

    pub fn classify(a: &Rational, b: &Rational) -> Option<KnownCase> {
        let one = Rational::one();
        let neg = Rational::integer(-1);
        match (*a == one, *a == neg, *b == one, *b == neg) {
            (true, _, true, _) => Some(KnownCase::PlusPlus),
            (true, _, _, true) => Some(KnownCase::PlusMinus),
            (_, true, true, _) => Some(KnownCase::MinusPlus),
            (_, true, _, true) => Some(KnownCase::MinusMinus),
            _ => None,
        }
    }

    pub fn coefficients(self) -> (Rational, Rational) {
        let (a, b) = match self {
            KnownCase::PlusPlus => (1, 1),
            KnownCase::PlusMinus => (1, -1),
            KnownCase::MinusPlus => (-1, 1),
            KnownCase::MinusMinus => (-1, -1),
        };
        (Rational::integer(a), Rational::integer(b))
    }

    pub fn name(self) -> &'static str {
        match self {
            KnownCase::PlusPlus => "A=1,B=1",
            KnownCase::PlusMinus => "A=1,B=-1",
            KnownCase::MinusPlus => "A=-1,B=1",
            KnownCase::MinusMinus => "A=-1,B=-1",
        }
    }
}

/// `(-1)^e` for any integer exponent.
fn sign_power(e: i64) -> Rational {
    Rational::integer(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Evaluates the dedicated `M_j`/`P_j` product form, or `None` when
/// `(A, B)` is not one of the four known cases.
pub fn known_case_form(q: &BackshiftQuery) -> Option<Result<Rational>> {
    let case = KnownCase::classify(&q.coef_a, &q.coef_b)?;
    if let Err(e) = q.check() {
        return Some(Err(e));
    }
    let m = q.m_j();
    let p = q.p_j();
    let one = Rational::one();
    let two = Rational::integer(2);
    let value = q.product_of(|s| {
        let e = 5 * s as i64 + m;
        match case {
            KnownCase::PlusPlus => (&one + Rational::integer(e - 1) * &p, &one + Rational::integer(e) * &p),
            KnownCase::PlusMinus => (&one - Rational::integer(e - 1) * &p, &one - Rational::integer(e) * &p),
            KnownCase::MinusPlus => (
                sign_power(e - 1) + (&one - sign_power(e - 1)) / &two * &p,
                sign_power(e) + (&one - sign_power(e)) / &two * &p,
            ),
            KnownCase::MinusMinus => (
                sign_power(e - 1) + (-&one - sign_power(e - 2)) / &two * &p,
                sign_power(e) + (-&one - sign_power(e - 1)) / &two * &p,
            ),
        }
    });
    Some(value)
}

/// Back-shifted solution `x_{10n-j}` for constant `(A, B)`.
///
/// For the four known cases the dedicated product form is evaluated as well
/// and must agree with the general branch exactly; disagreement is reported
/// as [`Error::KnownCaseMismatch`].
pub fn x_backshift(q: &BackshiftQuery) -> Result<Rational> {
    q.check()?;
    let general = backshift_general(q);
    if let Some(special) = known_case_form(q) {
        let agree = match (&general, &special) {
            (Ok(g), Ok(s)) => g == s,
            (Err(g), Err(s)) => g.is_forbidden() && s.is_forbidden(),
            _ => false,
        };
        if !agree {
            let formula = KnownCase::classify(&q.coef_a, &q.coef_b)
                .map(KnownCase::name)
                .unwrap_or("known case");
            return Err(Error::KnownCaseMismatch { formula, n: q.n });
        }
    }
    general
}

/// The general back-shifted branch alone (no known-case cross-check).
pub fn backshift_general(q: &BackshiftQuery) -> Result<Rational> {
    q.check()?;
    let a = &q.coef_a;
    let b = &q.coef_b;
    let bp = b * q.p_j();
    let base = 4 - (q.j / 2) as i64;

    if a.is_one() {
        let one = Rational::one();
        return q.product_of(|s| {
            let e = 5 * s as i64 + base;
            (&one + &bp * Rational::integer(e), &one + &bp * Rational::integer(e + 1))
        });
    }

    let one_minus_a = Rational::one() - a;
    let one = Rational::one();
    q.product_of(|s| {
        let e = (5 * s as i64 + base) as u32;
        let a_e = a.powu(e);
        let a_e1 = &a_e * a;
        (
            &a_e + &bp * (&one - &a_e) / &one_minus_a,
            &a_e1 + &bp * (&one - &a_e1) / &one_minus_a,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::Figure;
    use crate::recurrence::{invariant_sequence, iterate};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn ones() -> InitialConditions {
        InitialConditions::constant(Rational::one())
    }

    fn constant(a: i64, b: i64) -> CoefficientSequence {
        CoefficientSequence::constant(Rational::integer(a), Rational::integer(b))
    }

    #[test]
    fn f_closed_examples() {
        let c = constant(2, -1);
        assert_eq!(f_closed(0, 0, &r(7, 3), &c).unwrap(), r(7, 3));
        assert_eq!(f_closed(0, 1, &r(1, 1), &c).unwrap(), r(1, 1));

        let b = r(-3, 7);
        let c1 = CoefficientSequence::constant(Rational::one(), b.clone());
        for n in 0..12 {
            let expected = r(5, 2) + &b * Rational::integer(n as i64);
            assert_eq!(f_closed(1, n, &r(5, 2), &c1).unwrap(), expected);
        }
        assert!(f_closed(2, 1, &r(1, 1), &c).is_err());
    }

    #[test]
    fn f_closed_matches_invariant_sequence() {
        let c = CoefficientSequence::periodic(vec![(r(3, 2), r(1, 5)), (r(-2, 3), r(4, 1))]).unwrap();
        let ics = Figure::Fig2.initial_conditions();
        let orbit = iterate(&ics, &c, 80).unwrap();
        let f = invariant_sequence(&orbit).unwrap();
        for j in 0..2 {
            for n in 0..(f.len() - j) / 2 {
                assert_eq!(f_closed(j, n, &f[j], &c).unwrap(), f[2 * n + j]);
            }
        }
    }

    #[test]
    fn general_examples() {
        let ics = ones();
        let c = constant(1, 1);
        for k in 0..10 {
            assert_eq!(
                x_closed_general(&ClosedFormQuery::new(k, 0, &ics, &c)).unwrap(),
                Rational::one()
            );
        }
        assert_eq!(
            x_closed_general(&ClosedFormQuery::new(0, 1, &ics, &c)).unwrap(),
            r(1, 2)
        );

        let fig2 = Figure::Fig2.initial_conditions();
        let c = constant(2, -1);
        for k in 0..10 {
            assert_eq!(
                x_closed_general(&ClosedFormQuery::new(k, 3, &fig2, &c)).unwrap(),
                fig2[k]
            );
        }
    }

    #[test]
    fn general_handles_zero_seeds() {
        let mut v = vec![r(2, 3); 10];
        v[2] = Rational::zero();
        let ics = InitialConditions::from_slice(&v).unwrap();
        let c = CoefficientSequence::periodic(vec![(r(3, 1), r(1, 1)), (r(1, 2), r(5, 1))]).unwrap();
        let orbit = iterate(&ics, &c, 120).unwrap();
        let mut sol = GeneralSolution::new(&ics, &c);
        for i in 0..120 {
            assert_eq!(sol.at_index(i).unwrap(), orbit.terms[i], "index {i}");
        }
    }

    #[test]
    fn general_reports_forbidden_block() {
        let c = constant(1, -1);
        let err = x_closed_general(&ClosedFormQuery::new(0, 1, &ones(), &c)).unwrap_err();
        assert_eq!(
            err,
            Error::ForbiddenSet {
                index: 10,
                block: Some(0)
            }
        );
    }

    #[test]
    fn constant_examples() {
        let ics = ones();
        let q = |k, n, c: &CoefficientSequence| x_closed_constant(&ClosedFormQuery::new(k, n, &ics, c));
        assert_eq!(q(0, 1, &constant(1, 1)).unwrap(), r(1, 2));
        for k in 0..10 {
            for n in 0..6 {
                assert_eq!(q(k, n, &constant(2, -1)).unwrap(), Rational::one());
            }
        }
        assert_eq!(q(0, 1, &constant(3, -1)).unwrap(), r(1, 2));
        let varying = CoefficientSequence::table(vec![(r(1, 1), r(1, 1))]);
        assert!(x_closed_constant(&ClosedFormQuery::new(0, 1, &ics, &varying)).is_err());
    }

    #[test]
    fn a_neg1_examples() {
        let fig1 = Figure::Fig1.initial_conditions();
        let c = constant(-1, -1);
        let q = |k, n| x_closed_a_neg1(&ClosedFormQuery::new(k, n, &fig1, &c));
        for k in 0..10 {
            assert_eq!(q(k, 0).unwrap(), fig1[k]);
            assert_eq!(q(k, 4).unwrap(), fig1[k]);
        }
        assert_eq!(q(0, 1).unwrap(), r(-1, 2));
        // k = 2 multiplies: 2 * (-1 + (-1)(x0 x2 x4 x6 x8)) = 2 * (-2)
        assert_eq!(q(2, 1).unwrap(), r(-4, 1));

        let b = r(3, 5);
        let ics = InitialConditions::from_slice(&(1..=10).map(|i| r(i, 3)).collect::<Vec<_>>()).unwrap();
        let cb = CoefficientSequence::constant(r(-1, 1), b.clone());
        let p0 = ics.parity_product(0);
        let got = x_closed_a_neg1(&ClosedFormQuery::new(2, 1, &ics, &cb)).unwrap();
        assert_eq!(got, &ics[2] * (r(-1, 1) + &b * p0));

        assert!(x_closed_a_neg1(&ClosedFormQuery::new(0, 1, &ics, &constant(2, 1))).is_err());
    }

    #[test]
    fn a_neg1_agrees_with_oracle_and_constant_branch() {
        let ics = InitialConditions::from_slice(&[3, -1, 2, 5, -4, 7, 1, -2, 6, 3].map(|v| r(v, 4))).unwrap();
        let c = CoefficientSequence::constant(r(-1, 1), r(2, 7));
        let orbit = iterate(&ics, &c, 200).unwrap();
        assert!(!orbit.is_truncated());
        for i in 0..200 {
            let q = ClosedFormQuery::new(i % 10, i / 10, &ics, &c);
            assert_eq!(x_closed_a_neg1(&q).unwrap(), orbit.terms[i]);
            assert_eq!(x_closed_constant(&q).unwrap(), orbit.terms[i]);
        }
    }

    #[test]
    fn backshift_examples() {
        let a: [Rational; 10] = std::array::from_fn(|_| Rational::one());
        let q = BackshiftQuery::new(9, 1, a.clone(), r(1, 1), r(1, 1));
        assert_eq!(q.m_j(), 1);
        assert_eq!(x_backshift(&q).unwrap(), r(1, 2));
        for j in 0..10 {
            let q = BackshiftQuery::new(j, 0, a.clone(), r(3, 2), r(1, 1));
            assert_eq!(x_backshift(&q).unwrap(), a[j]);
        }
    }

    #[test]
    fn backshift_all_ones_minus_plus_is_forbidden_in_every_form() {
        // j = 0 is shifted residue k = 9 of the all-ones seeds with A = -1, B = 1,
        // whose first step divides by -1 + 1 = 0.
        let a: [Rational; 10] = std::array::from_fn(|_| Rational::one());
        let q = BackshiftQuery::new(0, 1, a, r(-1, 1), r(1, 1));
        assert!(x_backshift(&q).unwrap_err().is_forbidden());
        assert!(known_case_form(&q).unwrap().unwrap_err().is_forbidden());
        let ics = ones();
        let c = constant(-1, 1);
        let shifted = ClosedFormQuery::new(9, 1, &ics, &c);
        assert!(x_closed_a_neg1(&shifted).unwrap_err().is_forbidden());
        assert_eq!(iterate(&ics, &c, 20).unwrap().truncated_at, Some(10));
    }

    #[test]
    fn backshift_matches_shifted_orbit() {
        let ics = Figure::Fig2.initial_conditions();
        for (a, b) in [(r(1, 1), r(2, 3)), (r(-3, 2), r(1, 4)), (r(-1, 1), r(-1, 1))] {
            let c = CoefficientSequence::constant(a.clone(), b.clone());
            let orbit = iterate(&ics, &c, 150).unwrap();
            assert!(!orbit.is_truncated());
            for j in 0..10 {
                for n in 0..14 {
                    let q = BackshiftQuery::from_shifted(&ics, j, n, a.clone(), b.clone());
                    assert_eq!(x_backshift(&q).unwrap(), orbit.terms[q.shifted_index()]);
                }
            }
        }
    }

    #[test]
    fn known_case_only_for_unit_pairs() {
        let a: [Rational; 10] = std::array::from_fn(|i| r(i as i64 + 1, 2));
        let q = BackshiftQuery::new(3, 2, a.clone(), r(2, 1), r(1, 1));
        assert!(known_case_form(&q).is_none());
        for case in KnownCase::ALL {
            let (ca, cb) = case.coefficients();
            assert_eq!(KnownCase::classify(&ca, &cb), Some(case));
            let q = BackshiftQuery::new(3, 2, a.clone(), ca, cb);
            assert_eq!(known_case_form(&q).unwrap(), backshift_general(&q));
        }
    }
}
