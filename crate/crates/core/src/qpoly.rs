//! Dense polynomials in `q` with exact nonnegative integer coefficients.
//!
//! Coefficients are `u64`; every operation that could overflow is checked
//! and reports [`Error::Overflow`] instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};

/// `Σ coeffs[e] q^e`, with trailing zeros stripped so that equality is
/// structural. The zero polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^e`.
    pub fn monomial(e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = 1;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Lowest exponent first, without trailing zeros.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> u64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c
                .checked_add(s)
                .ok_or(Error::Overflow("polynomial addition"))?;
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Schoolbook convolution.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let overflow = || Error::Overflow("polynomial multiplication");
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or_else(overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or_else(overflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Every coefficient times `factor`.
    pub fn checked_scale(&self, factor: u64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(factor))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("polynomial scaling"))?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Coefficient sum.
    pub fn eval_at_one(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Smallest exponent where the two differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, u64, u64)> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|e| (e, self.coeff(e), other.coeff(e)))
            .find(|&(_, a, b)| a != b)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, c) => write!(f, "{c}q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, c) => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_{r=0}^{count-1} q^{step·r}`.
///
/// # Panics
///
/// If `step` or `count` is zero.
pub fn geometric(step: usize, count: usize) -> QPolynomial {
    assert!(step >= 1 && count >= 1, "geometric needs step, count >= 1");
    let mut coeffs = vec![0u64; step * (count - 1) + 1];
    for c in coeffs.iter_mut().step_by(step) {
        *c = 1;
    }
    QPolynomial { coeffs }
}

/// `Π_{i=1}^{n-1} Σ_{r=0}^{i-1} q^{(n-i) r}`, the product-of-sums form of
/// `Π (1 − q^{i(n−i)}) / (1 − q^i)`. The constant 1 when `n = 1`.
pub fn rhs_product(n: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    (1..n).try_fold(QPolynomial::one(), |acc, i| {
        acc.checked_mul(&geometric(n - i, i))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[u64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn arithmetic_examples() {
        let one_plus_q = poly(&[1, 1]);
        assert_eq!(
            one_plus_q.checked_mul(&one_plus_q).unwrap(),
            poly(&[1, 2, 1])
        );
        let p = poly(&[3, 0, 7]);
        assert_eq!(p.checked_add(&QPolynomial::zero()).unwrap(), p);
        assert_eq!(
            poly(&[1, 0, 1]).checked_mul(&poly(&[1, 1, 1])).unwrap(),
            poly(&[1, 1, 2, 1, 1])
        );
        assert_eq!(QPolynomial::monomial(3).coeffs(), &[0, 0, 0, 1]);
        assert_eq!(
            p.checked_mul(&QPolynomial::zero()).unwrap(),
            QPolynomial::zero()
        );
    }

    #[test]
    fn normalization_makes_equality_structural() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert_eq!(poly(&[0, 0]), QPolynomial::zero());
        assert_eq!(QPolynomial::zero().degree(), None);
        assert_eq!(poly(&[0, 0, 5]).degree(), Some(2));
        // cancellation cannot happen, but trailing zeros from sums still strip
        assert_eq!(
            poly(&[1]).checked_add(&poly(&[0, 0, 0])).unwrap(),
            poly(&[1])
        );
    }

    #[test]
    fn overflow_is_reported() {
        let big = poly(&[u64::MAX]);
        assert_eq!(
            big.checked_add(&poly(&[1])).unwrap_err(),
            Error::Overflow("polynomial addition")
        );
        assert!(big.checked_mul(&poly(&[2])).is_err());
        assert!(poly(&[u64::MAX, 1]).checked_mul(&poly(&[1, 1])).is_err());
        assert!(big.checked_scale(2).is_err());
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric(2, 2), poly(&[1, 0, 1]));
        assert_eq!(geometric(1, 3), poly(&[1, 1, 1]));
        assert_eq!(geometric(5, 1), QPolynomial::one());
        assert_eq!(geometric(3, 4).degree(), Some(9));
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(rhs_product(1).unwrap(), QPolynomial::one());
        assert_eq!(rhs_product(2).unwrap(), QPolynomial::one());
        assert_eq!(rhs_product(3).unwrap(), poly(&[1, 1]));
        assert_eq!(rhs_product(4).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(rhs_product(4).unwrap().eval_at_one(), 6);
        assert!(rhs_product(7).unwrap().is_palindromic());
        assert_eq!(QPolynomial::zero().eval_at_one(), 0);
        assert_eq!(rhs_product(0).unwrap_err(), Error::ZeroSize);
    }

    #[test]
    fn rhs_fits_at_twenty() {
        let p = rhs_product(20).unwrap();
        assert_eq!(p.eval_at_one(), (1..20u128).product());
    }

    #[test]
    fn display() {
        assert_eq!(
            poly(&[1, 1, 2, 1, 1]).to_string(),
            "1 + q + 2q^2 + q^3 + q^4"
        );
        assert_eq!(poly(&[0, 3]).to_string(), "3q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn first_difference() {
        assert_eq!(poly(&[1, 2]).first_difference(&poly(&[1, 2])), None);
        assert_eq!(
            poly(&[1, 2]).first_difference(&poly(&[1, 2, 3])),
            Some((2, 0, 3))
        );
        assert_eq!(
            poly(&[1, 4]).first_difference(&poly(&[1, 2])),
            Some((1, 4, 2))
        );
    }
}
