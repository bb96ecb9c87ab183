//! Generalized walk matrices over a degree partition.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::graph::{degree_partition, truncated_partition, DegreePartition, Graph};
use crate::linalg::{last_invariant_factor, IntMatrix};

/// Which partition the walk matrix is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WalkKind {
    /// Every distinct degree gets its own cell.
    Full,
    /// `ceil(log2 n) + 1` cells with a catch-all last cell.
    Truncated,
}

/// `n x (p·n)` matrix with blocks `[e_i, A e_i, ..., A^{n-1} e_i]`, one block
/// per cell `i` in partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    pub matrix: IntMatrix,
    pub partition: DegreePartition,
    pub kind: WalkKind,
}

impl WalkMatrix {
    /// `d_n`, zero iff the rows are dependent.
    pub fn last_factor(&self) -> BigInt {
        last_invariant_factor(&self.matrix).expect("walk matrices have at least as many columns as rows")
    }
}

pub fn partition_for(g: &Graph, kind: WalkKind) -> DegreePartition {
    match kind {
        WalkKind::Full => degree_partition(g),
        WalkKind::Truncated => truncated_partition(g),
    }
}

/// Builds the walk matrix of `g` over the given partition.
pub fn walk_matrix_over(g: &Graph, partition: &DegreePartition) -> IntMatrix {
    let n = g.order();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(n * partition.len());
    for i in 0..partition.len() {
        let mut v: Vec<BigInt> = partition
            .indicator(i)
            .into_iter()
            .map(|b| if b { BigInt::one() } else { BigInt::zero() })
            .collect();
        for _ in 0..n {
            let next = neighbors
                .iter()
                .map(|nb| nb.iter().map(|&w| &v[w]).sum())
                .collect();
            columns.push(std::mem::replace(&mut v, next));
        }
    }
    IntMatrix::from_columns(n, &columns)
}

pub fn build_walk_matrix(g: &Graph, kind: WalkKind) -> WalkMatrix {
    let partition = partition_for(g, kind);
    WalkMatrix {
        matrix: walk_matrix_over(g, &partition),
        partition,
        kind,
    }
}

/// `d_n` of the walk matrix of `g`. The empty graph gives 1.
pub fn last_factor(g: &Graph, kind: WalkKind) -> Result<BigInt> {
    if g.order() == 0 {
        return Ok(BigInt::one());
    }
    last_invariant_factor(&build_walk_matrix(g, kind).matrix)
}
