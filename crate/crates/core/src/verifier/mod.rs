//! Two-route verification of the sums-of-products identities.
//!
//! Every check evaluates a closed form and an independent oracle and compares
//! them exactly, coefficient by coefficient. Sign-sensitive identities can be
//! run as printed or corrected; the corrected form of the power identity is
//!
//! ```text
//! (N-1)! (-1)^(N-1) u^(N-1) F^N = sum_k a_k(N) F^(k),   F = 1/(e^t - u)
//! ```
//!
//! since `F' = -F - uF^2`.

mod audit;
mod report;

use num_traits::{One, Zero};

use crate::egf_series::{exp_xt, frobenius_kernel, EgfSeries, Polynomial};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, multinomial, weak_compositions, Rational};
use crate::frobenius::{
    bernoulli_numbers, bernoulli_polynomial, fe_higher_number_formula, fe_higher_number_oracle,
    fe_higher_polynomial, fe_numbers, fe_polynomial, order_factor, FrobeniusParams, Variant,
};
use crate::stirling::triangle_recurrence;

use report::{compare_polynomials, compare_scalars, compare_series};

pub use audit::{
    audit_all, default_grid, AuditReport, BernoulliGrid, CarlitzGrid, GridConfig, NumberGrid,
    ReciprocalGrid, SeriesGrid, Summary, SummaryEntry,
};
pub use report::{
    IdentityId, Mismatch, ReportHeader, ReportVariant, Verdict, VerificationReport,
};

/// A fully parameterized verification request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Theorem1 {
        order: usize,
        u: Rational,
        trunc: usize,
        variant: Variant,
    },
    Corollary2 {
        order: usize,
        u: Rational,
        x: Rational,
        trunc: usize,
        variant: Variant,
    },
    Theorem3 {
        n: usize,
        order: usize,
        u: Rational,
        variant: Variant,
    },
    Corollary4 {
        n: usize,
        order: usize,
        u: Rational,
        variant: Variant,
    },
    Corollary5 {
        n: usize,
        order: usize,
        u: Rational,
        variant: Variant,
    },
    Eq60Multinomial {
        n: usize,
        order: usize,
        u: Rational,
    },
    CarlitzProduct {
        m: usize,
        n: usize,
        alpha: Rational,
        beta: Rational,
        variant: Variant,
    },
    CarlitzReciprocal {
        m: usize,
        n: usize,
        alpha: Rational,
    },
    BernoulliProduct {
        m: usize,
        n: usize,
    },
}

impl Check {
    pub fn identity(&self) -> IdentityId {
        match self {
            Check::Theorem1 { .. } => IdentityId::Theorem1,
            Check::Corollary2 { .. } => IdentityId::Corollary2,
            Check::Theorem3 { .. } => IdentityId::Theorem3,
            Check::Corollary4 { .. } => IdentityId::Corollary4,
            Check::Corollary5 { .. } => IdentityId::Corollary5,
            Check::Eq60Multinomial { .. } => IdentityId::Eq60Multinomial,
            Check::CarlitzProduct { .. } => IdentityId::CarlitzProduct,
            Check::CarlitzReciprocal { .. } => IdentityId::CarlitzReciprocal,
            Check::BernoulliProduct { .. } => IdentityId::BernoulliProduct,
        }
    }

    pub fn header(&self) -> ReportHeader {
        let variant_of = |v: &Variant| ReportVariant::from(*v);
        match self {
            Check::Theorem1 { order, u, trunc, variant } => {
                ReportHeader::new(self.identity(), variant_of(variant))
                    .param("N", order)
                    .param("u", u)
                    .param("trunc", trunc)
            }
            Check::Corollary2 { order, u, x, trunc, variant } => {
                ReportHeader::new(self.identity(), variant_of(variant))
                    .param("N", order)
                    .param("u", u)
                    .param("x", x)
                    .param("trunc", trunc)
            }
            Check::Theorem3 { n, order, u, variant }
            | Check::Corollary4 { n, order, u, variant }
            | Check::Corollary5 { n, order, u, variant } => {
                ReportHeader::new(self.identity(), variant_of(variant))
                    .param("n", n)
                    .param("N", order)
                    .param("u", u)
            }
            Check::Eq60Multinomial { n, order, u } => {
                ReportHeader::new(self.identity(), ReportVariant::NotApplicable)
                    .param("n", n)
                    .param("N", order)
                    .param("u", u)
            }
            Check::CarlitzProduct { m, n, alpha, beta, variant } => {
                ReportHeader::new(self.identity(), variant_of(variant))
                    .param("m", m)
                    .param("n", n)
                    .param("alpha", alpha)
                    .param("beta", beta)
            }
            Check::CarlitzReciprocal { m, n, alpha } => {
                ReportHeader::new(self.identity(), ReportVariant::NotApplicable)
                    .param("m", m)
                    .param("n", n)
                    .param("alpha", alpha)
            }
            Check::BernoulliProduct { m, n } => {
                ReportHeader::new(self.identity(), ReportVariant::NotApplicable)
                    .param("m", m)
                    .param("n", n)
                    .param("r_range", "0 <= 2r <= max(m,n), zero-weight terms skipped")
            }
        }
    }

    /// Runs the comparison; parameter violations surface as `Err`.
    pub fn run(&self) -> Result<VerificationReport> {
        let header = self.header();
        let mismatches = match self {
            Check::Theorem1 { order, u, trunc, variant } => {
                theorem1_mismatches(*order, u, None, *trunc, *variant)?
            }
            Check::Corollary2 { order, u, x, trunc, variant } => {
                theorem1_mismatches(*order, u, Some(x), *trunc, *variant)?
            }
            Check::Theorem3 { n, order, u, variant } => {
                let formula = fe_higher_number_formula(*n, *order, u, *variant)?;
                let oracle = fe_higher_number_oracle(*n, *order, u)?;
                compare_scalars(&formula, &oracle)
            }
            Check::Corollary4 { n, order, u, variant } => {
                FrobeniusParams::new_nonzero(u.clone())?;
                let lhs = product_sum(*n, *order, u)?;
                let rhs = fe_higher_number_formula(*n, *order, u, *variant)?;
                compare_scalars(&lhs, &rhs)
            }
            Check::Corollary5 { n, order, u, variant } => {
                let rhs = corollary5_polynomial(*n, *order, u, *variant)?;
                let lhs = fe_higher_polynomial(*n, *order, u)?;
                compare_polynomials(&lhs, &rhs)
            }
            Check::Eq60Multinomial { n, order, u } => {
                let lhs = product_polynomial(*n, *order, u)?;
                let rhs = fe_higher_polynomial(*n, *order, u)?;
                compare_polynomials(&lhs, &rhs)
            }
            Check::CarlitzProduct { m, n, alpha, beta, variant } => {
                carlitz_mismatches(*m, *n, alpha, beta, *variant)?
            }
            Check::CarlitzReciprocal { m, n, alpha } => reciprocal_mismatches(*m, *n, alpha)?,
            Check::BernoulliProduct { m, n } => bernoulli_product_mismatches(*m, *n)?,
        };
        Ok(header.finish(mismatches))
    }

    /// Like [`Check::run`], but folds a parameter error into an `error` verdict.
    pub fn run_to_report(&self) -> VerificationReport {
        self.run().unwrap_or_else(|err| self.header().error(&err))
    }
}

pub fn verify_theorem1(
    order: usize,
    u: &Rational,
    trunc: usize,
    variant: Variant,
) -> Result<VerificationReport> {
    Check::Theorem1 { order, u: u.clone(), trunc, variant }.run()
}

pub fn verify_corollary2(
    order: usize,
    u: &Rational,
    x: &Rational,
    trunc: usize,
    variant: Variant,
) -> Result<VerificationReport> {
    Check::Corollary2 { order, u: u.clone(), x: x.clone(), trunc, variant }.run()
}

pub fn verify_theorem3(n: usize, order: usize, u: &Rational, variant: Variant) -> Result<VerificationReport> {
    Check::Theorem3 { n, order, u: u.clone(), variant }.run()
}

pub fn verify_corollary4(n: usize, order: usize, u: &Rational, variant: Variant) -> Result<VerificationReport> {
    Check::Corollary4 { n, order, u: u.clone(), variant }.run()
}

pub fn verify_corollary5(n: usize, order: usize, u: &Rational, variant: Variant) -> Result<VerificationReport> {
    Check::Corollary5 { n, order, u: u.clone(), variant }.run()
}

pub fn verify_product_multinomial(n: usize, order: usize, u: &Rational) -> Result<VerificationReport> {
    Check::Eq60Multinomial { n, order, u: u.clone() }.run()
}

pub fn verify_carlitz(
    m: usize,
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    variant: Variant,
) -> Result<VerificationReport> {
    Check::CarlitzProduct { m, n, alpha: alpha.clone(), beta: beta.clone(), variant }.run()
}

pub fn verify_carlitz_reciprocal(m: usize, n: usize, alpha: &Rational) -> Result<VerificationReport> {
    Check::CarlitzReciprocal { m, n, alpha: alpha.clone() }.run()
}

pub fn verify_bernoulli_product(m: usize, n: usize) -> Result<VerificationReport> {
    Check::BernoulliProduct { m, n }.run()
}

fn require_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::Argument("order N must be at least 1".into()));
    }
    Ok(())
}

/// Power identity for `F` (or `F e^(xt)` when `x` is given), compared on
/// `t^0..=t^(trunc - N + 1)`, the range where every derivative is known.
fn theorem1_mismatches(
    order: usize,
    u: &Rational,
    x: Option<&Rational>,
    trunc: usize,
    variant: Variant,
) -> Result<Vec<Mismatch>> {
    require_order(order)?;
    FrobeniusParams::new_nonzero(u.clone())?;
    if trunc < order {
        return Err(Error::Argument(format!(
            "truncation order {trunc} must be at least N = {order}"
        )));
    }
    let upto = trunc + 1 - order;
    let kernel = frobenius_kernel(u, trunc)?;
    let shift = match x {
        Some(x) => exp_xt(x.clone(), trunc),
        None => EgfSeries::unit(trunc),
    };

    let sign = match variant {
        Variant::Corrected if order.is_multiple_of(2) => -Rational::one(),
        _ => Rational::one(),
    };
    let scale = sign * Rational::from(factorial(order - 1)) * u.pow((order - 1) as i32)?;
    let lhs = (&kernel.pow(order) * &shift).scale(&scale).truncate(upto);

    let triangle = triangle_recurrence(order)?;
    let mut rhs = EgfSeries::constant(Rational::zero(), upto);
    // The k = N term of the x-carrying form has a_N(N) = 0 and is skipped.
    let k_max = if x.is_some() { order } else { order - 1 };
    for k in 0..=k_max {
        let a = triangle.get(k, order).expect("row N exists");
        if a.is_zero() {
            continue;
        }
        let term = &kernel.nth_derivative(k)? * &shift;
        rhs = &rhs + &term.scale(&Rational::from(a));
    }
    Ok(compare_series(&lhs, &rhs.truncate(upto), upto))
}

/// `sum_{l_1+...+l_N = n} multinomial(n; l) H_(l_1)(u) ... H_(l_N)(u)`,
/// enumerated directly.
fn product_sum(n: usize, order: usize, u: &Rational) -> Result<Rational> {
    require_order(order)?;
    let h = fe_numbers(n, u)?;
    let mut total = Rational::zero();
    for ls in weak_compositions(n, order) {
        let prod: Rational = ls.iter().map(|&l| h[l].clone()).product();
        total += &(Rational::from(multinomial(n, &ls)?) * prod);
    }
    Ok(total)
}

/// `sum_{l_1+...+l_N+m = n} multinomial(n; l, m) H_(l_1)...H_(l_N) x^m`.
fn product_polynomial(n: usize, order: usize, u: &Rational) -> Result<Polynomial> {
    require_order(order)?;
    let h = fe_numbers(n, u)?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for parts in weak_compositions(n, order + 1) {
        let (ls, m) = parts.split_at(order);
        let prod: Rational = ls.iter().map(|&l| h[l].clone()).product();
        coeffs[m[0]] += &(Rational::from(multinomial(n, &parts)?) * prod);
    }
    Ok(Polynomial::new(coeffs))
}

/// `c^(N-1)/(N-1)! sum_k a_k(N) sum_m C(n, m) H_(m+k)(u) x^(n-m)`.
fn corollary5_polynomial(n: usize, order: usize, u: &Rational, variant: Variant) -> Result<Polynomial> {
    let factor = order_factor(order, u, variant)?;
    let h = fe_numbers(n + order - 1, u)?;
    let triangle = triangle_recurrence(order)?;
    let row = triangle.row(order).expect("row N exists");
    let mut acc = Polynomial::zero();
    for (k, a) in row.iter().enumerate() {
        acc = &acc + &Polynomial::appell(n, &h[k..]).scale(&Rational::from(a));
    }
    let norm = Rational::new(1, factorial(order - 1))?;
    Ok(acc.scale(&(factor * norm)))
}

fn carlitz_mismatches(
    m: usize,
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    variant: Variant,
) -> Result<Vec<Mismatch>> {
    let one = Rational::one();
    let ab = alpha * beta;
    if alpha.is_one() || beta.is_one() || ab.is_one() {
        return Err(Error::Parameter(
            "Carlitz product needs alpha != 1, beta != 1 and alpha*beta != 1".into(),
        ));
    }
    let lhs = &fe_polynomial(m, alpha)? * &fe_polynomial(n, beta)?;

    let total = m + n;
    let h_ab = fe_numbers(total, &ab)?;
    let poly_ab = |j: usize| Polynomial::appell(j, &h_ab);
    let h_a = fe_numbers(m, alpha)?;
    let h_b = fe_numbers(n, beta)?;
    let denom = (&one - &ab).recip()?;

    let c1 = (&one - alpha) * (&one - beta) * &denom;
    let c2 = alpha * &(&one - beta) * &denom;
    let c3 = match variant {
        Variant::AsPrinted => beta * &(&one - beta) * &denom,
        Variant::Corrected => beta * &(&one - alpha) * &denom,
    };

    let mut rhs = poly_ab(total).scale(&c1);
    for (r, hr) in h_a.iter().enumerate() {
        let w = Rational::from(binomial(m, r as i64)) * hr * &c2;
        rhs = &rhs + &poly_ab(total - r).scale(&w);
    }
    for (s, hs) in h_b.iter().enumerate() {
        let w = Rational::from(binomial(n, s as i64)) * hs * &c3;
        rhs = &rhs + &poly_ab(total - s).scale(&w);
    }
    Ok(compare_polynomials(&lhs, &rhs))
}

fn reciprocal_mismatches(m: usize, n: usize, alpha: &Rational) -> Result<Vec<Mismatch>> {
    if alpha.is_zero() || alpha.is_one() {
        return Err(Error::Parameter("reciprocal Carlitz product needs alpha not in {0, 1}".into()));
    }
    let one = Rational::one();
    let beta = alpha.recip()?;
    let lhs = &fe_polynomial(m, alpha)? * &fe_polynomial(n, &beta)?;

    let total = m + n;
    let h_a = fe_numbers(total + 1, alpha)?;
    let h_b = fe_numbers(n, &beta)?;
    // B_j(x)/j for the Bernoulli polynomials in the display
    let bern_over = |j: usize| -> Result<Polynomial> {
        Ok(bernoulli_polynomial(j).scale(&Rational::new(1, j as i64)?))
    };

    let mut rhs = Polynomial::zero();
    let wa = -(&one - alpha);
    for (r, h) in h_a.iter().enumerate().take(m + 1).skip(1) {
        let w = Rational::from(binomial(m, r as i64)) * h * &wa;
        rhs = &rhs + &bern_over(total - r + 1)?.scale(&w);
    }
    let wb = -(&one - &beta);
    for (s, h) in h_b.iter().enumerate().skip(1) {
        let w = Rational::from(binomial(n, s as i64)) * h * &wb;
        rhs = &rhs + &bern_over(total - s + 1)?.scale(&w);
    }
    let sign = if n % 2 == 1 { one.clone() } else { -one.clone() };
    let tail = sign
        * Rational::new(factorial(m) * factorial(n), factorial(total + 1))?
        * (&one - alpha)
        * &h_a[total + 1];
    rhs = &rhs + &Polynomial::constant(tail);
    Ok(compare_polynomials(&lhs, &rhs))
}

fn bernoulli_product_mismatches(m: usize, n: usize) -> Result<Vec<Mismatch>> {
    if m + n < 2 {
        return Err(Error::Argument(format!(
            "Bernoulli product needs m + n >= 2, got m = {m}, n = {n}"
        )));
    }
    let total = m + n;
    let lhs = &bernoulli_polynomial(m) * &bernoulli_polynomial(n);
    let b = bernoulli_numbers(total);

    let mut rhs = Polynomial::zero();
    for r in 0..=m.max(n) / 2 {
        let two_r = 2 * r as i64;
        let weight = binomial(m, two_r) * n + binomial(n, two_r) * m;
        if weight.is_zero() {
            continue;
        }
        let degree = total - 2 * r;
        let w = Rational::from(weight) * &b[2 * r] * &Rational::new(1, degree as i64)?;
        rhs = &rhs + &bernoulli_polynomial(degree).scale(&w);
    }
    let sign = if m % 2 == 1 { Rational::one() } else { -Rational::one() };
    let tail = sign * Rational::new(factorial(m) * factorial(n), factorial(total))? * &b[total];
    rhs = &rhs + &Polynomial::constant(tail);
    Ok(compare_polynomials(&lhs, &rhs))
}
