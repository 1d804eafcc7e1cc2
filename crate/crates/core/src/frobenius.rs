//! Frobenius–Euler numbers `H_n(u)` and polynomials `H_n(x|u)`, their
//! higher-order versions `H_n^(N)(x|u)`, and the Bernoulli and Euler
//! companions.
//!
//! Order-one numbers come from the recurrence `(H + 1)^n = u H_n` (`n > 0`,
//! umbral), which is what `(e^t - u) sum H_n t^n/n! = 1 - u` forces.
//! Higher-order numbers have two independent routes: the `N`-th power of the
//! generating series, and the triangle formula
//!
//! ```text
//! H_n^(N)(u) = c^(N-1) / (N-1)! * sum_k a_k(N) H_(n+k)(u)
//! ```
//!
//! where `c = (u - 1)/u` in the corrected variant and `(1 - u)/u` as printed.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::egf_series::{bernoulli_oracle, frobenius_oracle, Polynomial};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, Rational};
use crate::stirling::triangle_recurrence;

/// Which form of a sign-sensitive identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Exactly as typeset, including the `-F + uF^2` sign slip.
    AsPrinted,
    /// Repaired so that it agrees with the generating function.
    Corrected,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::AsPrinted, Variant::Corrected];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-printed" | "as_printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            other => Err(Error::Argument(format!(
                "unknown variant {other:?}, expected as-printed or corrected"
            ))),
        }
    }
}

/// The parameter `u`, checked against `u != 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusParams {
    u: Rational,
}

impl FrobeniusParams {
    pub fn new(u: Rational) -> Result<Self> {
        if u.is_one() {
            return Err(Error::Parameter("u must differ from 1".into()));
        }
        Ok(FrobeniusParams { u })
    }

    /// Also rejects `u = 0`, for formulas that divide by `u`.
    pub fn new_nonzero(u: Rational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::Parameter("u must be nonzero".into()));
        }
        Self::new(u)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }
}

/// `H_0(u)..=H_(n_max)(u)` from the recurrence.
pub fn fe_numbers(n_max: usize, u: &Rational) -> Result<Vec<Rational>> {
    let params = FrobeniusParams::new(u.clone())?;
    let inv = (params.u() - &Rational::one())
        .recip()
        .expect("u != 1 checked above");
    let mut h: Vec<Rational> = Vec::with_capacity(n_max + 1);
    h.push(Rational::one());
    for n in 1..=n_max {
        let sum: Rational = h
            .iter()
            .enumerate()
            .map(|(l, hl)| Rational::from(binomial(n, l as i64)) * hl)
            .sum();
        h.push(sum * &inv);
    }
    Ok(h)
}

pub fn fe_number(n: usize, u: &Rational) -> Result<Rational> {
    Ok(fe_numbers(n, u)?.pop().expect("at least H_0"))
}

/// `H_n(x|u) = sum_l C(n, l) x^(n-l) H_l(u)`.
pub fn fe_polynomial(n: usize, u: &Rational) -> Result<Polynomial> {
    Ok(Polynomial::appell(n, &fe_numbers(n, u)?))
}

/// `H_0^(N)(u)..=H_(n_max)^(N)(u)` as coefficients of `((1-u)/(e^t-u))^N`.
pub fn fe_higher_numbers_oracle(n_max: usize, order: usize, u: &Rational) -> Result<Vec<Rational>> {
    check_order(order)?;
    Ok(frobenius_oracle(u, n_max)?.pow(order).into_coeffs())
}

pub fn fe_higher_number_oracle(n: usize, order: usize, u: &Rational) -> Result<Rational> {
    Ok(fe_higher_numbers_oracle(n, order, u)?.pop().expect("at least one coefficient"))
}

/// The power `c^(N-1)` in front of the triangle formula.
pub fn order_factor(order: usize, u: &Rational, variant: Variant) -> Result<Rational> {
    check_order(order)?;
    let params = FrobeniusParams::new_nonzero(u.clone())?;
    let u = params.u();
    let numer = match variant {
        Variant::AsPrinted => Rational::one() - u,
        Variant::Corrected => u - &Rational::one(),
    };
    let base = numer.checked_div(u)?;
    base.pow((order - 1) as i32)
}

/// `H_n^(N)(u)` from the coefficient triangle and order-one numbers.
pub fn fe_higher_number_formula(
    n: usize,
    order: usize,
    u: &Rational,
    variant: Variant,
) -> Result<Rational> {
    let factor = order_factor(order, u, variant)?;
    let h = fe_numbers(n + order - 1, u)?;
    let triangle = triangle_recurrence(order)?;
    let row = triangle.row(order).expect("row N exists");
    let sum: Rational = row
        .iter()
        .enumerate()
        .map(|(k, a)| Rational::from(a) * &h[n + k])
        .sum();
    let norm = Rational::new(1, factorial(order - 1)).expect("factorial is positive");
    Ok(factor * norm * sum)
}

/// `H_n^(N)(x|u) = sum_l C(n, l) x^(n-l) H_l^(N)(u)`, using oracle numbers.
pub fn fe_higher_polynomial(n: usize, order: usize, u: &Rational) -> Result<Polynomial> {
    Ok(Polynomial::appell(n, &fe_higher_numbers_oracle(n, order, u)?))
}

/// `E_n(x)`, the `u = -1` specialization.
pub fn euler_polynomial(n: usize) -> Polynomial {
    fe_polynomial(n, &-Rational::one()).expect("u = -1 is admissible")
}

/// `B_0..=B_(n_max)` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    bernoulli_oracle(n_max).into_coeffs()
}

pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    Polynomial::appell(n, &bernoulli_numbers(n))
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::Argument("order N must be at least 1".into()));
    }
    Ok(())
}
