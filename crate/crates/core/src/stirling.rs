//! The coefficient triangle `a_k(N)` expressing powers of `F = 1/(e^t - u)`
//! through its derivatives:
//!
//! ```text
//! (N-1)! (-u)^(N-1) F^N = sum_{k=0}^{N-1} a_k(N) F^(k)
//! ```
//!
//! Rows are built two ways: by the recurrence
//! `a_k(N+1) = N a_k(N) + a_(k-1)(N)` starting from `a_0(1) = 1`, and by the
//! composition sum
//! `a_k(N) = N!/(k+1)! * sum_{l_1+...+l_(k+1) = N} 1/(l_1 ... l_(k+1))`.
//!
//! The entries are the unsigned Stirling numbers of the first kind with `k`
//! shifted by one, `a_k(N) = [N, k+1]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{compositions, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    /// `rows[N - 1][k] = a_k(N)`.
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row `N` as `a_0(N)..=a_(N-1)(N)`.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `a_k(N)`, zero outside `0 <= k < N`. `None` only when `N` exceeds the
    /// table or is zero.
    pub fn get(&self, k: usize, n: usize) -> Option<BigInt> {
        self.row(n)
            .map(|row| row.get(k).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Iterates `(N, k, a_k(N))` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, a)| (i + 1, k, a)))
    }
}

pub fn triangle_recurrence(n_max: usize) -> Result<StirlingTriangle> {
    if n_max == 0 {
        return Err(Error::Argument("triangle needs at least one row".into()));
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max);
    rows.push(vec![BigInt::one()]);
    for n in 1..n_max {
        let prev = &rows[n - 1];
        let next: Vec<BigInt> = (0..=n)
            .map(|k| {
                let stay = prev.get(k).map(|a| a * n).unwrap_or_else(BigInt::zero);
                let carry = k
                    .checked_sub(1)
                    .and_then(|j| prev.get(j))
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                stay + carry
            })
            .collect();
        rows.push(next);
    }
    Ok(StirlingTriangle { rows })
}

/// `a_k(N)` evaluated from the composition sum, exactly.
pub fn coeff_closed_form(k: usize, n: usize) -> Result<Rational> {
    if n == 0 || k >= n {
        return Err(Error::Argument(format!(
            "a_k(N) needs 0 <= k <= N - 1, got k = {k}, N = {n}"
        )));
    }
    let inner: Rational = compositions(n, k + 1)
        .iter()
        .map(|c| {
            let denom: BigInt = c.parts().iter().map(|&l| BigInt::from(l)).product();
            Rational::new(1, denom).expect("composition parts are positive")
        })
        .sum();
    let scale = Rational::new(factorial(n), factorial(k + 1)).expect("factorials are positive");
    Ok(scale * inner)
}
