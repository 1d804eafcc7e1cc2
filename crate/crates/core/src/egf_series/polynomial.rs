//! Dense univariate polynomials in `x` over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact_arith::{binomial, Rational};

/// Ascending-degree coefficients; never carries trailing zeros, and the zero
/// polynomial is stored as a single zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::new(coeffs)
    }

    /// `sum_l C(n, l) x^(n-l) h_l`, the Appell polynomial attached to a number
    /// sequence. `numbers` must hold at least `n + 1` entries.
    pub fn appell(n: usize, numbers: &[Rational]) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (l, h) in numbers.iter().take(n + 1).enumerate() {
            coeffs[n - l] = Rational::from(binomial(n, l as i64)) * h;
        }
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// Constant polynomials are the only units.
    pub fn as_constant(&self) -> Option<&Rational> {
        (self.coeffs.len() == 1).then(|| &self.coeffs[0])
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::constant(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Highest degree first, e.g. `x^2 - x + 1/6`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = magnitude.is_one() && d > 0;
            if !unit {
                write!(f, "{magnitude}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| rat(n, d).unwrap()).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[(1, 1), (0, 1), (0, 1)]).coeffs().len(), 1);
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[(0, 1), (0, 1), (3, 1)]).degree(), Some(2));
    }

    #[test]
    fn square_of_linear() {
        // (x - 1/2)^2 = x^2 - x + 1/4
        let lin = p(&[(-1, 2), (1, 1)]);
        assert_eq!(&lin * &lin, p(&[(1, 4), (-1, 1), (1, 1)]));
        assert_eq!((&lin * &lin).to_string(), "x^2 - x + 1/4");
    }

    #[test]
    fn add_sub_cancel() {
        let a = p(&[(1, 3), (2, 1), (-5, 7)]);
        let b = p(&[(0, 1), (0, 1), (-5, 7)]);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a - &a), Polynomial::zero());
    }

    #[test]
    fn appell_and_eval() {
        let h = [rat(1, 1).unwrap(), rat(1, 1).unwrap()];
        assert_eq!(Polynomial::appell(1, &h), p(&[(1, 1), (1, 1)]));
        let q = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(q.eval(&rat(1, 2).unwrap()), rat(-1, 12).unwrap());
    }
}
