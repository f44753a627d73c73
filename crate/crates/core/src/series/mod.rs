//! Truncated integer power series in `t`, rational closed forms with
//! denominator `1 + O(t)`, and finite Laurent polynomials.

mod laurent;
pub(crate) mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use laurent::{euler_char, poincare_dual_check, LaurentPolynomial};
pub use tables::table_closed_form;

/// Truncation used when none is given.
pub const DEFAULT_TRUNCATION: usize = 40;

/// Coefficients `c_0, …, c_T` of a power series truncated after `t^T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincareSeries {
    coeffs: Vec<i64>,
}

impl PoincareSeries {
    pub fn zero(truncation: usize) -> Self {
        Self {
            coeffs: vec![0; truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = 1;
        s
    }

    /// Pads or cuts `coeffs` to length `truncation + 1`.
    pub fn from_coeffs(coeffs: &[i64], truncation: usize) -> Self {
        let mut c = coeffs.to_vec();
        c.resize(truncation + 1, 0);
        Self { coeffs: c }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeff_mut(&mut self, degree: usize) -> Option<&mut i64> {
        self.coeffs.get_mut(degree)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        series_arith(self, other, SeriesOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        series_arith(self, other, SeriesOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        series_arith(self, other, SeriesOp::Mul)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", format_poly(&self.coeffs), self.truncation() + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Ring operations on truncated series of equal truncation.
pub fn series_arith(a: &PoincareSeries, b: &PoincareSeries, op: SeriesOp) -> Result<PoincareSeries> {
    if a.coeffs.len() != b.coeffs.len() {
        return Err(Error::TruncationMismatch {
            left: a.truncation(),
            right: b.truncation(),
        });
    }
    let overflow = || Error::Overflow("series arithmetic");
    let coeffs = match op {
        SeriesOp::Add => a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.checked_add(*y).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?,
        SeriesOp::Sub => a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.checked_sub(*y).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?,
        SeriesOp::Mul => {
            let n = a.coeffs.len();
            let mut out = vec![0i64; n];
            for (i, &x) in a.coeffs.iter().enumerate().filter(|(_, x)| **x != 0) {
                for (j, &y) in b.coeffs[..n - i].iter().enumerate() {
                    let term = x.checked_mul(y).ok_or_else(overflow)?;
                    out[i + j] = out[i + j].checked_add(term).ok_or_else(overflow)?;
                }
            }
            out
        }
    };
    Ok(PoincareSeries { coeffs })
}

/// `num(t) / den(t)` with integer polynomials and `den(0) = 1`.
///
/// Serializes as `{"num": [c0, c1, …], "den": [c0, c1, …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalExpr {
    num: Vec<i64>,
    den: Vec<i64>,
}

impl RationalExpr {
    pub fn new(num: Vec<i64>, den: Vec<i64>) -> Result<Self> {
        let c0 = den.first().copied().unwrap_or(0);
        if c0 != 1 {
            return Err(Error::BadDenominator(c0));
        }
        Ok(Self {
            num: trim(num),
            den: trim(den),
        })
    }

    pub fn polynomial(num: Vec<i64>) -> Self {
        Self {
            num: trim(num),
            den: vec![1],
        }
    }

    pub fn one() -> Self {
        Self::polynomial(vec![1])
    }

    /// `1 / (1 - t^k)`, `k >= 1`.
    pub fn geometric(k: usize) -> Self {
        assert!(k >= 1, "geometric series needs a positive step");
        Self {
            num: vec![1],
            den: poly(&[(0, 1), (k, -1)]),
        }
    }

    pub fn num(&self) -> &[i64] {
        &self.num
    }

    pub fn den(&self) -> &[i64] {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            num: trim(poly_mul(&self.num, &other.num)),
            den: trim(poly_mul(&self.den, &other.den)),
        }
    }

    /// Sum over the common denominator `den_a · den_b` (not reduced).
    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self {
                num: trim(poly_add(&self.num, &other.num)),
                den: self.den.clone(),
            };
        }
        Self {
            num: trim(poly_add(
                &poly_mul(&self.num, &other.den),
                &poly_mul(&other.num, &self.den),
            )),
            den: trim(poly_mul(&self.den, &other.den)),
        }
    }

    pub fn expand(&self, truncation: usize) -> Result<PoincareSeries> {
        expand(self, truncation)
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = format_poly(&self.num);
        if self.den == [1] {
            return f.write_str(&n);
        }
        let n = if self.num.iter().filter(|&&c| c != 0).count() > 1 {
            format!("({n})")
        } else {
            n
        };
        write!(f, "{n}/({})", format_poly(&self.den))
    }
}

/// Power-series expansion of `e` up to and including `t^T`.
pub fn expand(e: &RationalExpr, truncation: usize) -> Result<PoincareSeries> {
    let den0 = e.den.first().copied().unwrap_or(0);
    if den0 != 1 {
        return Err(Error::BadDenominator(den0));
    }
    let overflow = || Error::Overflow("series expansion");
    let mut c = vec![0i64; truncation + 1];
    for k in 0..=truncation {
        let mut v = e.num.get(k).copied().unwrap_or(0);
        for j in 1..e.den.len().min(k + 1) {
            let t = e.den[j].checked_mul(c[k - j]).ok_or_else(overflow)?;
            v = v.checked_sub(t).ok_or_else(overflow)?;
        }
        c[k] = v;
    }
    Ok(PoincareSeries { coeffs: c })
}

/// `(k - n)(d + 1)`: below this degree the restriction from non-resultant
/// systems of degree `d` (k polynomials in n variables) to equivariant maps
/// is a cohomology isomorphism.
pub fn stable_range_bound(k: u64, n: u64, d: u64) -> Result<u64> {
    if k <= n {
        return Err(Error::OutOfRange(format!(
            "stable range needs k > n, got k = {k}, n = {n}"
        )));
    }
    (k - n)
        .checked_mul(d + 1)
        .ok_or(Error::Overflow("stable range bound"))
}

/// Dense polynomial from `(exponent, coefficient)` terms.
pub fn poly(terms: &[(usize, i64)]) -> Vec<i64> {
    let len = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
    let mut out = vec![0; len];
    for &(e, c) in terms {
        out[e] += c;
    }
    trim(out)
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

pub(crate) fn format_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> String {
    let mut out = String::new();
    for (deg, c) in terms {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let a = c.unsigned_abs();
        match (deg, a) {
            (0, _) => out.push_str(&a.to_string()),
            (_, 1) => {}
            _ => out.push_str(&a.to_string()),
        }
        match deg {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_poly(c: &[i64]) -> String {
    format_terms(c.iter().enumerate().map(|(i, &v)| (i as i64, v)))
}
