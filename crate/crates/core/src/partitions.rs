//! Set partitions of `{1..n}`, the refinement order, and the relative order
//! complexes `(Δ_A, ∂Δ_A)` attached to a partition `A`.
//!
//! `Δ_A` is the order complex of the non-discrete partitions refining `A`
//! (`A` itself included) and `∂Δ_A` is the subcomplex of chains avoiding `A`.
//! The discrete partition is left out: it lies below every other vertex, so
//! keeping it would make both complexes cones and kill the relative homology.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::linalg::{homology_dims, ChainComplex, SparseMatrix};

/// Largest ground set accepted by [`order_complex_pair`].
pub const MAX_ORDER_COMPLEX_N: usize = 8;

/// A partition of `{1..n}` with sorted blocks, ordered by least element.
///
/// Serializes as an array of blocks of 1-based indices, e.g. `[[1,2],[3,4]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and normalizes `blocks` as a partition of `{1..n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("{x} is not in 1..={n}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPartition(format!("{x} appears twice")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("{x} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// From a restricted growth string: `rgs[i]` is the block of `i + 1`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        Self {
            n: rgs.len(),
            blocks,
        }
    }

    /// The one-block partition of `{1..n}`.
    pub fn single_block(n: usize) -> Self {
        Self {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// Block index of each element, as a restricted growth string.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x - 1] = i;
            }
        }
        out
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let owner = other.rgs();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| owner[x - 1] == owner[b[0] - 1]))
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n < 10 { "" } else { "," };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// All partitions of `{1..n}` in lexicographic order of their restricted
/// growth strings.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            out.push(SetPartition::from_rgs(rgs));
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Partitions of `{1..n}` into exactly `k` blocks, optionally with every
/// block of even size.
pub fn enumerate_partitions(n: usize, k: usize, even_only: bool) -> Vec<SetPartition> {
    all_partitions(n)
        .into_iter()
        .filter(|p| p.num_blocks() == k)
        .filter(|p| !even_only || p.blocks.iter().all(|b| b.len() % 2 == 0))
        .collect()
}

/// `∏ (|b| − 1)!` over the blocks.
pub fn partition_weight(a: &SetPartition) -> u64 {
    a.blocks
        .iter()
        .map(|b| (1..b.len() as u64).product::<u64>())
        .product()
}

/// The pair `(Δ_A, ∂Δ_A)` with every simplex stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialPair {
    pub root: SetPartition,
    /// Non-discrete refinements of the root, the root last.
    pub vertices: Vec<SetPartition>,
    /// Chains as vertex indices, finest first.
    pub simplices: Vec<Vec<usize>>,
    /// `true` for simplices of `∂Δ_A`, the chains not containing the root.
    pub in_boundary: Vec<bool>,
}

impl SimplicialPair {
    pub fn root_index(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Number of simplices of each dimension in `Δ_A` and in `∂Δ_A`.
    pub fn face_counts(&self) -> (Vec<usize>, Vec<usize>) {
        let top = self.simplices.iter().map(Vec::len).max().unwrap_or(0);
        let mut all = vec![0; top];
        let mut bd = vec![0; top];
        for (s, &b) in self.simplices.iter().zip(&self.in_boundary) {
            all[s.len() - 1] += 1;
            if b {
                bd[s.len() - 1] += 1;
            }
        }
        (all, bd)
    }

    /// `χ(Δ_A) − χ(∂Δ_A)` from the face counts.
    pub fn relative_euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .zip(&self.in_boundary)
            .filter(|(_, &b)| !b)
            .map(|(s, _)| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }
}

/// Builds `(Δ_A, ∂Δ_A)` for a non-discrete partition on at most
/// [`MAX_ORDER_COMPLEX_N`] elements.
pub fn order_complex_pair(a: &SetPartition) -> Result<SimplicialPair> {
    if a.n > MAX_ORDER_COMPLEX_N {
        return Err(Error::SizeBound {
            n: a.n,
            max: MAX_ORDER_COMPLEX_N,
        });
    }
    if a.is_discrete() {
        return Err(Error::InvalidPartition(format!(
            "{a} is discrete and has no non-discrete refinements"
        )));
    }
    let mut vertices: Vec<SetPartition> = all_partitions(a.n)
        .into_iter()
        .filter(|p| !p.is_discrete() && p != a && p.refines(a))
        .collect();
    vertices.push(a.clone());
    // Strict refinement; a coarser partition has strictly fewer blocks.
    let up: Vec<Vec<usize>> = vertices
        .iter()
        .map(|v| {
            (0..vertices.len())
                .filter(|&j| vertices[j].num_blocks() < v.num_blocks() && v.refines(&vertices[j]))
                .collect()
        })
        .collect();
    let root = vertices.len() - 1;
    let mut simplices = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..vertices.len()).map(|v| vec![v]).collect();
    stack.reverse();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        for &next in up[last].iter().rev() {
            let mut c = chain.clone();
            c.push(next);
            stack.push(c);
        }
        simplices.push(chain);
    }
    simplices.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let in_boundary = simplices.iter().map(|s| *s.last().unwrap() != root).collect();
    Ok(SimplicialPair {
        root: a.clone(),
        vertices,
        simplices,
        in_boundary,
    })
}

/// The simplicial chain complex of `Δ_A` modulo `∂Δ_A`.
pub fn relative_chain_complex(pair: &SimplicialPair) -> Result<ChainComplex> {
    let top = pair.simplices.iter().map(Vec::len).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<&[usize]>> = vec![Vec::new(); top];
    for (s, &b) in pair.simplices.iter().zip(&pair.in_boundary) {
        if !b {
            by_dim[s.len() - 1].push(s);
        }
    }
    let index: Vec<HashMap<&[usize], usize>> = by_dim
        .iter()
        .map(|ss| ss.iter().enumerate().map(|(i, s)| (*s, i)).collect())
        .collect();
    let dims: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    let mut diffs = Vec::new();
    for d in 1..top {
        let mut triplets = Vec::new();
        for (col, s) in by_dim[d].iter().enumerate() {
            for i in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                // faces lying in the subcomplex vanish in the quotient
                if let Some(&row) = index[d - 1].get(face.as_slice()) {
                    triplets.push((row, col, if i % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
        diffs.push(SparseMatrix::from_int_triplets(dims[d - 1], dims[d], triplets)?);
    }
    ChainComplex::from_differentials(dims, diffs)
}

/// `H_*(Δ_A, ∂Δ_A; ℚ)`.
pub fn relative_partition_homology(a: &SetPartition) -> Result<GradedDims> {
    let pair = order_complex_pair(a)?;
    homology_dims(&relative_chain_complex(&pair)?)
}
