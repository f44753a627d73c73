use std::fmt;

use serde::{Deserialize, Serialize};

use super::format_terms;
use crate::graded::GradedDims;

/// Finite Laurent polynomial `Σ c_d t^d` with integer coefficients.
///
/// Stored as the lowest exponent plus a dense coefficient run whose first and
/// last entries are nonzero; the zero polynomial has an empty run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    offset: i64,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: i64, coeff: i64) -> Self {
        Self::from_terms([(degree, coeff)])
    }

    /// Sums `(degree, coeff)` terms.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let terms: Vec<(i64, i64)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (d, c) in terms {
            let slot = &mut coeffs[(d - lo) as usize];
            *slot = slot.checked_add(c).expect("Laurent coefficient overflow");
        }
        Self { offset: lo, coeffs }.normalized()
    }

    /// Polynomial with `coeffs[i]` at `t^i`.
    pub fn from_poly(coeffs: &[i64]) -> Self {
        Self {
            offset: 0,
            coeffs: coeffs.to_vec(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.offset += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, degree: i64) -> i64 {
        let i = degree - self.offset;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.offset + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms().map(|(d, c)| (d, -c))))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).expect("Laurent coefficient overflow");
                coeffs[i + j] = coeffs[i + j].checked_add(t).expect("Laurent coefficient overflow");
            }
        }
        Self {
            offset: self.offset + other.offset,
            coeffs,
        }
        .normalized()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d, c * k)))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `p(1/t)`.
    pub fn reflect(&self) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (-d, c)))
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Interprets the coefficients as dimensions; `None` if any is negative.
    pub fn to_graded_dims(&self) -> Option<GradedDims> {
        self.terms()
            .map(|(d, c)| usize::try_from(c).ok().map(|n| (d, n)))
            .collect::<Option<Vec<_>>>()
            .map(GradedDims::from_pairs)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms()))
    }
}

/// `Σ (-1)^d c_d`.
pub fn euler_char(p: &LaurentPolynomial) -> i64 {
    p.terms()
        .map(|(d, c)| if d.rem_euclid(2) == 0 { c } else { -c })
        .sum()
}

/// True iff `borel_moore(t) = t^top_dim · homology(1/t)`.
pub fn poincare_dual_check(
    homology: &LaurentPolynomial,
    borel_moore: &LaurentPolynomial,
    top_dim: u64,
) -> bool {
    homology.reflect().shift(top_dim as i64) == *borel_moore
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn normalization() {
        let p = lp(&[(-2, 0), (1, 3), (4, 0)]);
        assert_eq!(p.min_degree(), Some(1));
        assert_eq!(p.max_degree(), Some(1));
        assert!(lp(&[(3, 1), (3, -1)]).is_zero());
        assert_eq!(LaurentPolynomial::from_poly(&[0, 0, 1]), lp(&[(2, 1)]));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char(&lp(&[(0, 1), (3, 1)])), 0);
        assert_eq!(euler_char(&lp(&[(2, 1), (5, 1)])), 0);
        // (1 + t^2)(1 + 2t^2)(1 + 3t^2) = 1 + 6t^2 + 11t^4 + 6t^6
        let p = lp(&[(0, 1), (2, 1)])
            .mul(&lp(&[(0, 1), (2, 2)]))
            .mul(&lp(&[(0, 1), (2, 3)]));
        assert_eq!(p, lp(&[(0, 1), (2, 6), (4, 11), (6, 6)]));
        assert_eq!(euler_char(&p), 24);
    }

    #[test]
    fn duality_examples() {
        let hom = lp(&[(2, 1), (5, 1)]);
        let bm = lp(&[(4, 1), (1, 1)]);
        assert!(poincare_dual_check(&hom, &bm, 6));
        assert!(poincare_dual_check(&LaurentPolynomial::one(), &lp(&[(9, 1)]), 9));
        let p = lp(&[(0, 1), (1, 1)]);
        assert!(!poincare_dual_check(&p, &p, 3));
    }

    #[test]
    fn display_handles_negative_degrees() {
        assert_eq!(lp(&[(4, 1), (1, 1)]).to_string(), "t + t^4");
        assert_eq!(lp(&[(-3, 2), (0, -1)]).to_string(), "2t^-3 - 1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }
}
