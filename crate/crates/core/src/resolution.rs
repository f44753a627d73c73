//! Euler-characteristic bookkeeping for the simplicial resolution of the
//! space of `N`-point configurations in projective space: first-page block
//! dimensions, the horizontal complexes, and the fiber Poincaré polynomial.
//!
//! Each horizontal complex is acyclic except in its top term, so its
//! homology is pinned down by its Euler characteristic. Three independent
//! routes compute that number: the alternating sum of block dimensions, a
//! closed form in elementary symmetric functions of odd numbers, and a count
//! of decorated permutations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::partitions::partition_weight;
use crate::series::LaurentPolynomial;

/// Largest `N` accepted by [`permutation_oracle`].
pub const MAX_ORACLE_N: usize = 10;

/// Largest `N` for which the block dimensions fit comfortably in `u64`.
pub const MAX_N: usize = 20;

/// Row `q = s·m` of the first page for `N` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorizontalComplexSpec {
    pub n: usize,
    pub s: usize,
}

impl HorizontalComplexSpec {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        check_even(n)?;
        if n > MAX_N {
            return Err(Error::OutOfRange(format!("N = {n} exceeds {MAX_N}")));
        }
        if s + 1 > n / 2 {
            return Err(Error::OutOfRange(format!(
                "s must lie in [0, N/2 - 1] = [0, {}], got {s}",
                n / 2 - 1
            )));
        }
        Ok(Self { n, s })
    }

    /// Filtration indices `p` carrying a nonzero block: `N/2 − 1 ..= N − 2 − s`.
    pub fn p_range(&self) -> std::ops::RangeInclusive<usize> {
        self.n / 2 - 1..=self.n - 2 - self.s
    }
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Parity(format!("N must be even and positive, got {n}")));
    }
    Ok(())
}

fn check_odd_m(m: usize) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::Parity(format!("m must be odd, got {m}")));
    }
    Ok(())
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `n!!`, with `0!! = (−1)!! = 1`.
pub fn double_factorial(n: i64) -> u64 {
    let mut acc = 1u64;
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

/// Weighted count `Σ ∏(|b| − 1)!` over partitions of an `n`-set into `k`
/// blocks of even size, by splitting off the block of the first element.
fn even_weighted_count(n: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for size in 1..=n {
        for blocks in 1..=k {
            let mut total = 0u64;
            for b in (2..=size).step_by(2) {
                // choose the other b − 1 members, then (b − 1)! for the weight
                let ways = binomial(size as u64 - 1, b as u64 - 1) * (1..b as u64).product::<u64>();
                total += ways * table[size - b][blocks - 1];
            }
            table[size][blocks] = total;
        }
    }
    table[n][k]
}

/// Dimension of the block `E_1^{p, s·m}`: partitions of `{1..N}` into
/// `N − p − 1` even parts counted with their weights, times `C(N − p − 2, s)`.
pub fn e1_block_dim(n: usize, p: usize, s: usize) -> Result<u64> {
    let spec = HorizontalComplexSpec::new(n, s)?;
    if !spec.p_range().contains(&p) {
        return Err(Error::OutOfRange(format!(
            "p must lie in [{}, {}] for N = {n}, s = {s}, got {p}",
            spec.p_range().start(),
            spec.p_range().end()
        )));
    }
    let parts = n - p - 1;
    Ok(even_weighted_count(n, parts) * binomial((parts - 1) as u64, s as u64))
}

/// Same as [`e1_block_dim`] but enumerating the partitions explicitly.
pub fn e1_block_dim_enumerated(n: usize, p: usize, s: usize) -> Result<u64> {
    e1_block_dim(n, p, s)?;
    let parts = n - p - 1;
    let weights: u64 = enumerate_partitions(n, parts, true)
        .iter()
        .map(partition_weight)
        .sum();
    Ok(weights * binomial((parts - 1) as u64, s as u64))
}

/// `Σ_p (−1)^p dim E_1^{p, s·m}` over the row.
pub fn horizontal_euler_sum(n: usize, s: usize) -> Result<i64> {
    let spec = HorizontalComplexSpec::new(n, s)?;
    spec.p_range()
        .map(|p| {
            let d = e1_block_dim(n, p, s)? as i64;
            Ok(if p % 2 == 0 { d } else { -d })
        })
        .sum()
}

/// Coefficients of `∏_{r=1}^{N/2−1} (1 + (2r − 1)τ)`.
fn odd_elementary(n: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for r in 1..n / 2 {
        let a = 2 * r as u64 - 1;
        let mut next = vec![0u64; c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            next[i] += x;
            next[i + 1] += a * x;
        }
        c = next;
    }
    c
}

/// `(−1)^s (N − 1)!! · [τ^{N/2−1−s}] ∏_{r=1}^{N/2−1} (1 + (2r − 1)τ)`.
pub fn horizontal_euler_closed(n: usize, s: usize) -> Result<i64> {
    HorizontalComplexSpec::new(n, s)?;
    let e = odd_elementary(n)[n / 2 - 1 - s];
    let v = (double_factorial(n as i64 - 1) * e) as i64;
    Ok(if s % 2 == 0 { v } else { -v })
}

/// Number of permutations `a` of `{1..N}` with `a_1 = 1` whose odd places
/// `i ∈ {3, 5, …, N − 1}` holding an entry smaller than everything after it
/// are exactly `places`, for every possible `places`.
///
/// Returned in increasing order of the place sets (as sorted vectors).
pub fn place_choice_counts(n: usize) -> Result<Vec<(Vec<usize>, u64)>> {
    check_even(n)?;
    if n > MAX_ORACLE_N {
        return Err(Error::SizeBound {
            n,
            max: MAX_ORACLE_N,
        });
    }
    let odd_places: Vec<usize> = (3..n).step_by(2).collect();
    let mut hist = vec![0u64; 1 << odd_places.len()];
    // the tail a_2..a_N runs over permutations of {2..N}
    let mut tail: Vec<usize> = (2..=n).collect();
    loop {
        let mut mask = 0usize;
        let mut suffix_min = usize::MAX;
        // scan right to left; place i (1-based) sits at tail[i - 2]
        for i in (2..=n).rev() {
            let v = tail[i - 2];
            if v < suffix_min {
                if i % 2 == 1 && i >= 3 {
                    mask |= 1 << ((i - 3) / 2);
                }
                suffix_min = v;
            }
        }
        hist[mask] += 1;
        if !next_permutation(&mut tail) {
            break;
        }
    }
    let mut out: Vec<(Vec<usize>, u64)> = hist
        .iter()
        .enumerate()
        .map(|(mask, &c)| {
            let places = odd_places
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            (places, c)
        })
        .collect();
    out.sort();
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Closed count for one choice of places:
/// `(N − 1)!! (N − 3)!! / ∏_{i ∈ places} (N − i)`.
pub fn combi_count(n: usize, places: &[usize]) -> Result<u64> {
    check_even(n)?;
    if let Some(&bad) = places.iter().find(|&&i| i < 3 || i >= n || i % 2 == 0) {
        return Err(Error::OutOfRange(format!("{bad} is not an odd place in 3..{n}")));
    }
    let num = double_factorial(n as i64 - 1) * double_factorial(n as i64 - 3);
    let den: u64 = places.iter().map(|&i| (n - i) as u64).product();
    Ok(num / den)
}

/// Signed decorated-permutation count `(−1)^s Σ_{|places| = s} count(places)`.
pub fn permutation_oracle(n: usize, s: usize) -> Result<i64> {
    HorizontalComplexSpec::new(n, s)?;
    let total: u64 = place_choice_counts(n)?
        .into_iter()
        .filter(|(places, _)| places.len() == s)
        .map(|(_, c)| c)
        .sum();
    Ok(if s % 2 == 0 { total as i64 } else { -(total as i64) })
}

/// `(N − 1)!! t^{(m−1)N/2} ∏_{r=1}^{N/2−1} (1 + (2r − 1) t^{m−1})`.
pub fn phi_poincare_closed(n: usize, m: usize) -> Result<LaurentPolynomial> {
    check_even(n)?;
    check_odd_m(m)?;
    let step = m as i64 - 1;
    let mut p = LaurentPolynomial::monomial(step * n as i64 / 2, double_factorial(n as i64 - 1) as i64);
    for r in 1..n / 2 {
        p = p.mul(&LaurentPolynomial::from_terms([(0, 1), (step, 2 * r as i64 - 1)]));
    }
    Ok(p)
}

/// Places `|χ_s|` in cohomological degree `m(N − 1) − 1 − (p + q)` with
/// `p = N − 2 − s` and `q = s·m`, which simplifies to `(m − 1)(N − 1 − s)`.
pub fn phi_poincare_from_euler(n: usize, m: usize) -> Result<LaurentPolynomial> {
    check_even(n)?;
    check_odd_m(m)?;
    let (n_i, m_i) = (n as i64, m as i64);
    let mut terms = Vec::new();
    for s in 0..n / 2 {
        let chi = horizontal_euler_closed(n, s)?.abs();
        let p = n_i - 2 - s as i64;
        let q = s as i64 * m_i;
        terms.push((m_i * (n_i - 1) - 1 - (p + q), chi));
    }
    Ok(LaurentPolynomial::from_terms(terms))
}
