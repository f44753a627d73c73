//! Exact linear algebra over the rationals: sparse matrices, rank, and
//! homology of finite chain complexes.
//!
//! Rank is computed by fraction-free elimination. Each row is first scaled to
//! a primitive integer vector; a pivot step replaces a row `x` by
//! `(p/g)·x − (a/g)·pivot_row` with `g = gcd(p, a)` and then divides out the
//! row content again, so every intermediate row is a primitive integer vector.
//! Pivots are chosen greedily to limit fill-in: the shortest remaining row,
//! and inside it the column with the fewest remaining entries, preferring
//! unit pivots. Elimination starts in `i64` and restarts over `BigInt` on the
//! first overflow, so the result never depends on the machine-word path.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graded::GradedDims;

pub type Rational = BigRational;

/// A sparse matrix over ℚ. Only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets. Zero values are
    /// skipped; duplicate positions and out-of-range indices are rejected.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut entries = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if entries.contains_key(&(r, c)) {
                return Err(Error::InvalidMatrix(format!("duplicate entry at ({r}, {c})")));
            }
            // zeros are kept until the end so duplicates are still caught
            entries.insert((r, c), v);
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_int_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        Self::from_triplets(
            rows,
            cols,
            triplets
                .into_iter()
                .map(|(r, c, v)| (r, c, Rational::from_integer(BigInt::from(v)))),
        )
    }

    /// Dense row-major integer input, mostly for tests and small examples.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged dense input".into()));
        }
        Self::from_int_triplets(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Rational> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut rhs_rows: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); rhs.rows];
        for (&(r, c), v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        let mut out: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rhs_rows[k] {
                *out.entry((i, j)).or_insert_with(Rational::zero) += a * b;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: out,
        })
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Rows scaled to primitive integer vectors (same row space over ℚ).
    fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            by_row[r].push((c, v));
        }
        by_row
            .into_iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                let mut ints: Vec<(usize, BigInt)> = row
                    .into_iter()
                    .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
                    .collect();
                make_primitive(&mut ints);
                ints
            })
            .collect()
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, [", self.rows, self.cols)?;
        for (i, ((r, c), v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r},{c})={v}")?;
        }
        write!(f, "])")
    }
}

/// Rank over ℚ.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.is_zero() {
        return 0;
    }
    let big_rows = m.integer_rows();
    let small_rows: Option<Vec<Vec<(usize, i64)>>> = big_rows
        .iter()
        .map(|row| row.iter().map(|(c, v)| v.to_i64().map(|x| (*c, x))).collect())
        .collect();
    if let Some(rows) = small_rows {
        if let Some(r) = eliminate(rows, m.cols) {
            return r;
        }
    }
    eliminate(big_rows, m.cols).expect("BigInt elimination cannot overflow")
}

trait ElimScalar: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl ElimScalar for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let v = (*a as i128) * (*x as i128) - (*b as i128) * (*y as i128);
        i64::try_from(v).ok()
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl ElimScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

fn make_primitive<T: ElimScalar>(row: &mut [(usize, T)]) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd_with(v);
        if g.is_unit() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// `a*x - b*pivot` on sorted sparse rows, dropping cancellations.
fn combine_rows<T: ElimScalar>(
    a: &T,
    x: &[(usize, T)],
    b: &T,
    pivot: &[(usize, T)],
) -> Option<Vec<(usize, T)>> {
    let zero = T::zero();
    let mut out = Vec::with_capacity(x.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < pivot.len() {
        let ci = x.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci == cj {
            let v = T::cross(a, &x[i].1, b, &pivot[j].1)?;
            i += 1;
            j += 1;
            (ci, v)
        } else if ci < cj {
            let v = T::cross(a, &x[i].1, b, &zero)?;
            i += 1;
            (ci, v)
        } else {
            let v = T::cross(a, &zero, b, &pivot[j].1)?;
            j += 1;
            (cj, v)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn eliminate<T: ElimScalar>(mut rows: Vec<Vec<(usize, T)>>, ncols: usize) -> Option<usize> {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    let mut active = BTreeSet::new();
    for (i, row) in rows.iter().enumerate() {
        if !row.is_empty() {
            active.insert(i);
        }
        for (c, _) in row {
            col_rows[*c].insert(i);
        }
    }

    let mut rank = 0;
    while let Some(r) = active.iter().copied().min_by_key(|&i| (rows[i].len(), i)) {
        let pivot_row = std::mem::take(&mut rows[r]);
        active.remove(&r);
        for (c, _) in &pivot_row {
            col_rows[*c].remove(&r);
        }
        let (pc, pv) = pivot_row
            .iter()
            .min_by_key(|(c, v)| (col_rows[*c].len(), !v.is_unit(), *c))
            .cloned()
            .expect("active rows are nonempty");
        rank += 1;

        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for k in targets {
            let old = std::mem::take(&mut rows[k]);
            let idx = old
                .binary_search_by_key(&pc, |e| e.0)
                .expect("column index tracks row contents");
            let a = old[idx].1.clone();
            let g = pv.gcd_with(&a);
            let (pa, aa) = (pv.div_exact(&g), a.div_exact(&g));
            let mut new = combine_rows(&pa, &old, &aa, &pivot_row)?;
            make_primitive(&mut new);
            for (c, _) in &old {
                col_rows[*c].remove(&k);
            }
            for (c, _) in &new {
                col_rows[*c].insert(k);
            }
            if new.is_empty() {
                active.remove(&k);
            }
            rows[k] = new;
        }
    }
    Some(rank)
}

/// A bounded chain complex `C_D → … → C_1 → C_0`.
///
/// `boundaries[d]` is the matrix of `∂_d : C_d → C_{d-1}` with shape
/// `dims[d-1] × dims[d]`; `boundaries[0]` is the zero map to the zero group
/// and therefore has zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} chain groups but {} boundary maps",
                dims.len(),
                boundaries.len()
            )));
        }
        for (d, b) in boundaries.iter().enumerate() {
            let expected_rows = if d == 0 { 0 } else { dims[d - 1] };
            if b.rows() != expected_rows || b.cols() != dims[d] {
                return Err(Error::ShapeMismatch(format!(
                    "boundary[{d}] is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    expected_rows,
                    dims[d]
                )));
            }
        }
        Ok(Self { dims, boundaries })
    }

    /// Takes `∂_1, …, ∂_D` and supplies the zero map out of degree 0.
    pub fn from_differentials(dims: Vec<usize>, differentials: Vec<SparseMatrix>) -> Result<Self> {
        let mut boundaries = Vec::with_capacity(differentials.len() + 1);
        if let Some(&d0) = dims.first() {
            boundaries.push(SparseMatrix::zero(0, d0));
        }
        boundaries.extend(differentials);
        Self::new(dims, boundaries)
    }

    /// A complex with every differential zero.
    pub fn zero_differential(dims: Vec<usize>) -> Self {
        let boundaries = (0..dims.len())
            .map(|d| SparseMatrix::zero(if d == 0 { 0 } else { dims[d - 1] }, dims[d]))
            .collect();
        Self { dims, boundaries }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, degree: usize) -> &SparseMatrix {
        &self.boundaries[degree]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Verifies `∂_{d-1} ∘ ∂_d = 0` for every degree.
    pub fn check_boundary_square(&self) -> Result<()> {
        for d in 2..self.dims.len() {
            let composite = self.boundaries[d - 1].mul(&self.boundaries[d])?;
            if !composite.is_zero() {
                return Err(Error::BoundarySquareNonzero {
                    degree: d,
                    lower: d - 1,
                });
            }
        }
        Ok(())
    }
}

/// Rational homology dimensions, `dim H_d = dims[d] − rank ∂_d − rank ∂_{d+1}`.
pub fn homology_dims(c: &ChainComplex) -> Result<GradedDims> {
    c.check_boundary_square()?;
    let ranks: Vec<usize> = c.boundaries.iter().map(rank).collect();
    let mut out = GradedDims::new();
    for d in 0..c.dims.len() {
        let next = ranks.get(d + 1).copied().unwrap_or(0);
        out.add(d as i64, c.dims[d] - ranks[d] - next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_and_rank_one() {
        assert_eq!(rank(&SparseMatrix::identity(2)), 2);
        let ones = SparseMatrix::from_dense(&[vec![1; 3], vec![1; 3], vec![1; 3]]).unwrap();
        assert_eq!(rank(&ones), 1);
        assert_eq!(rank(&SparseMatrix::zero(0, 0)), 0);
        assert_eq!(rank(&SparseMatrix::zero(4, 7)), 0);
    }

    #[test]
    fn rational_entries_are_cleared() {
        let m = SparseMatrix::from_triplets(
            2,
            2,
            [(0, 0, q(1, 2)), (0, 1, q(1, 3)), (1, 0, q(3, 2)), (1, 1, q(1, 1))],
        )
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = SparseMatrix::from_dense(&[
            vec![big, big - 1, 7],
            vec![big - 5, big, 3],
            vec![2 * big - 5, 2 * big - 1, 10],
        ])
        .unwrap();
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn rejects_bad_triplets() {
        assert!(SparseMatrix::from_int_triplets(2, 2, [(2, 0, 1)]).is_err());
        assert!(SparseMatrix::from_int_triplets(2, 2, [(0, 0, 1), (0, 0, 2)]).is_err());
        let m = SparseMatrix::from_int_triplets(2, 2, [(0, 0, 0)]).unwrap();
        assert_eq!(m.nnz(), 0);
    }

    #[test]
    fn zero_differential_homology() {
        let c = ChainComplex::zero_differential(vec![1, 2, 1]);
        assert_eq!(homology_dims(&c).unwrap(), GradedDims::from_pairs([(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn single_edge_is_contractible() {
        // vertices a, b; edge [a, b] with ∂ = b − a
        let d1 = SparseMatrix::from_int_triplets(2, 1, [(0, 0, -1), (1, 0, 1)]).unwrap();
        let c = ChainComplex::from_differentials(vec![2, 1], vec![d1]).unwrap();
        assert_eq!(homology_dims(&c).unwrap(), GradedDims::ones([0]));
    }

    #[test]
    fn hollow_triangle_has_a_loop() {
        // edges 01, 02, 12
        let d1 = SparseMatrix::from_dense(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        let c = ChainComplex::from_differentials(vec![3, 3], vec![d1]).unwrap();
        assert_eq!(homology_dims(&c).unwrap(), GradedDims::ones([0, 1]));
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = SparseMatrix::from_dense(&[vec![1]]).unwrap();
        let d2 = SparseMatrix::from_dense(&[vec![1]]).unwrap();
        let c = ChainComplex::from_differentials(vec![1, 1, 1], vec![d1, d2]).unwrap();
        let err = homology_dims(&c).unwrap_err();
        assert_eq!(err, Error::BoundarySquareNonzero { degree: 2, lower: 1 });
        assert!(err.to_string().contains("degree 2"));
    }

    #[test]
    fn rejects_bad_shapes() {
        let d1 = SparseMatrix::zero(3, 1);
        assert!(ChainComplex::from_differentials(vec![2, 1], vec![d1]).is_err());
        assert!(ChainComplex::new(vec![1], vec![]).is_err());
    }
}
