//! Truncated exponential generating functions.
//!
//! An [`EgfSeries`] of order `T` stores `h_0..=h_T` and stands for
//! `sum_{n <= T} h_n t^n / n!`. In this convention a product is a binomial
//! convolution and `d/dt` is a shift of the coefficient vector.
//!
//! Binary operations on series of different orders truncate to the shorter
//! one. Nothing errors on a mismatch, so callers must size their inputs.

mod polynomial;

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, Rational};

pub use polynomial::Polynomial;

/// Commutative ring of series coefficients.
pub trait Ring: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn mul_int(&self, k: &BigInt) -> Self;
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn mul_int(&self, k: &BigInt) -> Self {
        self * &Rational::from(k)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Ring for Polynomial {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn mul_int(&self, k: &BigInt) -> Self {
        self.scale(&Rational::from(k))
    }

    fn try_inverse(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.recip().ok())
            .map(Polynomial::constant)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EgfSeries<S = Rational> {
    coeffs: Vec<S>,
}

impl<S: Ring> EgfSeries<S> {
    /// `coeffs[n]` is the coefficient of `t^n / n!`; the order is `len - 1`.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Argument("a series needs at least one coefficient".into()));
        }
        Ok(EgfSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        EgfSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The multiplicative identity `1`.
    pub fn unit(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { S::one() } else { S::zero() })
    }

    pub fn constant(c: S, order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { S::zero() })
    }

    /// `e^t`: every coefficient is one.
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |_| S::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `t^n / n!`, or `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&S> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        EgfSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Binomial convolution `c_n = sum_k C(n, k) a_k b_(n-k)`.
    pub fn mul_series(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| {
            (0..=n).fold(S::zero(), |acc, k| {
                let term = self.coeffs[k].mul_ref(&rhs.coeffs[n - k]);
                acc.add_ref(&term.mul_int(&binomial(n, k as i64)))
            })
        })
    }

    pub fn add_series(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].add_ref(&rhs.coeffs[n]))
    }

    pub fn sub_series(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].sub_ref(&rhs.coeffs[n]))
    }

    /// `d/dt`, which drops the order by one.
    pub fn derivative(&self) -> Result<Self> {
        self.nth_derivative(1)
    }

    /// `k`-fold derivative: coefficient `n` of the result is `a_(n+k)`.
    pub fn nth_derivative(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Argument(format!(
                "cannot differentiate a series of order {} {k} times",
                self.order()
            )));
        }
        Ok(EgfSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Series `b` with `a * b = 1` to full order.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv_lead = self.coeffs[0].try_inverse().ok_or(Error::NonInvertible)?;
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_lead.clone());
        for n in 1..=self.order() {
            let acc = (0..n).fold(S::zero(), |acc, k| {
                let term = self.coeffs[n - k].mul_ref(&out[k]);
                acc.add_ref(&term.mul_int(&binomial(n, k as i64)))
            });
            out.push(S::zero().sub_ref(&inv_lead.mul_ref(&acc)));
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// `self^exp` by repeated squaring; `exp = 0` gives the unit.
    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::unit(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_series(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_series(&base);
            }
        }
        result
    }
}

impl EgfSeries<Rational> {
    /// Reinterprets rational coefficients as constant polynomials.
    pub fn to_polynomial_series(&self) -> EgfSeries<Polynomial> {
        EgfSeries {
            coeffs: self.coeffs.iter().cloned().map(Polynomial::constant).collect(),
        }
    }
}

impl<S: Ring> Mul<&EgfSeries<S>> for &EgfSeries<S> {
    type Output = EgfSeries<S>;
    fn mul(self, rhs: &EgfSeries<S>) -> EgfSeries<S> {
        self.mul_series(rhs)
    }
}

impl<S: Ring> Add<&EgfSeries<S>> for &EgfSeries<S> {
    type Output = EgfSeries<S>;
    fn add(self, rhs: &EgfSeries<S>) -> EgfSeries<S> {
        self.add_series(rhs)
    }
}

impl<S: Ring> Sub<&EgfSeries<S>> for &EgfSeries<S> {
    type Output = EgfSeries<S>;
    fn sub(self, rhs: &EgfSeries<S>) -> EgfSeries<S> {
        self.sub_series(rhs)
    }
}

/// `e^(xt)`: coefficient `n` is `x^n`.
pub fn exp_xt<S: Ring>(x: S, order: usize) -> EgfSeries<S> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = S::one();
    for _ in 0..=order {
        coeffs.push(power.clone());
        power = power.mul_ref(&x);
    }
    EgfSeries { coeffs }
}

/// `(1 - u) / (e^t - u)` to order `order`, i.e. the numbers `H_n(u)`.
pub fn frobenius_oracle(u: &Rational, order: usize) -> Result<EgfSeries> {
    if u.is_one() {
        return Err(Error::Parameter("u must differ from 1".into()));
    }
    let one_minus_u = Rational::one() - u;
    let denominator = EgfSeries::from_fn(order, |n| {
        if n == 0 {
            one_minus_u.clone()
        } else {
            Rational::one()
        }
    });
    Ok(denominator.reciprocal()?.scale(&one_minus_u))
}

/// `1 / (e^t - u)` to order `order`.
pub fn frobenius_kernel(u: &Rational, order: usize) -> Result<EgfSeries> {
    let shifted = &EgfSeries::exp(order) - &EgfSeries::constant(u.clone(), order);
    shifted.reciprocal().map_err(|_| Error::Parameter("u must differ from 1".into()))
}

/// `t / (e^t - 1)` to order `order`, i.e. the Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli_oracle(order: usize) -> EgfSeries {
    // (e^t - 1) / t has EGF coefficients 1 / (n + 1).
    let quotient = EgfSeries::from_fn(order, |n| Rational::from_integer(1) / Rational::from(n as i64 + 1));
    quotient
        .reciprocal()
        .expect("constant term of (e^t - 1)/t is 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    fn series(cs: &[i64]) -> EgfSeries {
        EgfSeries::new(cs.iter().map(|&c| Rational::from(c)).collect()).unwrap()
    }

    #[test]
    fn mul_examples() {
        let e = EgfSeries::<Rational>::exp(10);
        let sq = &e * &e;
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert_eq!(c, &Rational::from(1i64 << n));
        }
        let a = series(&[3, -1, 4, 1, 5]);
        assert_eq!(&a * &EgfSeries::unit(4), a);
        let b = series(&[1, 1, 3, 13]);
        // 1*3 + 2*1*1 + 3*1
        assert_eq!((&b * &b).coeff(2), Some(&Rational::from(8)));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = series(&[1, 2, 3, 4]);
        let b = series(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn derivative_is_shift() {
        assert_eq!(series(&[1, 2, 3]).derivative().unwrap(), series(&[2, 3]));
        assert_eq!(
            EgfSeries::<Rational>::exp(6).derivative().unwrap(),
            EgfSeries::exp(5)
        );
        let a = series(&[5, 4, 3, 2, 1, 0]);
        let d3 = a.nth_derivative(3).unwrap();
        for n in 0..=d3.order() {
            assert_eq!(d3.coeff(n), a.coeff(n + 3));
        }
        assert!(matches!(series(&[7]).derivative(), Err(Error::Argument(_))));
    }

    #[test]
    fn reciprocal_examples() {
        let inv = EgfSeries::<Rational>::exp(8).reciprocal().unwrap();
        for (n, c) in inv.coeffs().iter().enumerate() {
            assert_eq!(c, &Rational::from(if n % 2 == 0 { 1 } else { -1 }));
        }
        assert_eq!(
            EgfSeries::<Rational>::unit(5).reciprocal().unwrap(),
            EgfSeries::unit(5)
        );
        let half = EgfSeries::new(vec![r(1, 2), r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(series(&[2, 0, 0]).reciprocal().unwrap(), half);
        assert_eq!(series(&[0, 1, 1]).reciprocal(), Err(Error::NonInvertible));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(EgfSeries::<Rational>::unit(6).pow(5), EgfSeries::unit(6));
        let cube = EgfSeries::<Rational>::exp(8).pow(3);
        for (n, c) in cube.coeffs().iter().enumerate() {
            assert_eq!(c, &Rational::from(3i64.pow(n as u32)));
        }
        let a = series(&[2, -3, 1, 7, 0]);
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(2), &a * &a);
        assert_eq!(a.pow(5), &(&(&(&a * &a) * &a) * &a) * &a);
    }

    #[test]
    fn exp_xt_examples() {
        assert_eq!(exp_xt(Rational::one(), 5), EgfSeries::exp(5));
        assert_eq!(exp_xt(Rational::zero(), 5), EgfSeries::unit(5));
        assert_eq!(exp_xt(r(1, 2), 5).coeff(3), Some(&r(1, 8)));
    }

    #[test]
    fn frobenius_oracle_examples() {
        let euler = frobenius_oracle(&r(-1, 1), 4).unwrap();
        assert_eq!(euler.coeffs(), &[r(1, 1), r(-1, 2), r(0, 1), r(1, 4), r(0, 1)]);
        let two = frobenius_oracle(&r(2, 1), 4).unwrap();
        assert_eq!(two, series(&[1, 1, 3, 13, 75]));
        for u in [r(2, 1), r(-1, 1), r(1, 3), r(-5, 7), r(0, 1)] {
            assert_eq!(frobenius_oracle(&u, 3).unwrap().coeff(0), Some(&Rational::one()));
        }
        assert!(matches!(frobenius_oracle(&r(1, 1), 4), Err(Error::Parameter(_))));
        assert!(matches!(frobenius_kernel(&r(1, 1), 4), Err(Error::Parameter(_))));
    }

    #[test]
    fn kernel_times_shift_is_one() {
        let u = r(-5, 7);
        let f = frobenius_kernel(&u, 10).unwrap();
        let shifted = &EgfSeries::exp(10) - &EgfSeries::constant(u, 10);
        assert_eq!(&f * &shifted, EgfSeries::unit(10));
    }

    #[test]
    fn bernoulli_oracle_examples() {
        let b = bernoulli_oracle(12);
        assert_eq!(b.coeff(0), Some(&r(1, 1)));
        assert_eq!(b.coeff(1), Some(&r(-1, 2)));
        assert_eq!(b.coeff(2), Some(&r(1, 6)));
        assert_eq!(b.coeff(3), Some(&r(0, 1)));
        assert_eq!(b.coeff(12), Some(&r(-691, 2730)));
    }

    #[test]
    fn polynomial_coefficients() {
        // e^(xt) * e^(-xt) = 1 with x symbolic
        let x = Polynomial::x();
        let prod = &exp_xt(x.clone(), 6) * &exp_xt(-x, 6);
        assert_eq!(prod, EgfSeries::unit(6));
        let p = EgfSeries::new(vec![Polynomial::x()]).unwrap();
        assert_eq!(p.reciprocal(), Err(Error::NonInvertible));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = EgfSeries> {
        proptest::collection::vec((-20i64..20, 1i64..6), order + 1).prop_map(|v| {
            EgfSeries::new(v.into_iter().map(|(n, d)| r(n, d)).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn leibniz_rule(a in arb_series(12), b in arb_series(12)) {
            let lhs = (&a * &b).derivative().unwrap();
            let rhs = &(&a.derivative().unwrap() * &b) + &(&a * &b.derivative().unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn reciprocal_inverts(a in arb_series(10)) {
            prop_assume!(!a.coeff(0).unwrap().is_zero());
            prop_assert_eq!(&a * &a.reciprocal().unwrap(), EgfSeries::unit(10));
        }
    }
}
