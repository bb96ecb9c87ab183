use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{last_invariant_factor, solve_right, IntMatrix, RatMatrix};
use crate::walk::{partition_for, walk_matrix_over, WalkKind};

/// A rational orthogonal `Q` with `Q^T A Q = B` and `Q^T e_i(G) = e_i(H)`
/// for every cell indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalCertificate {
    pub q: RatMatrix,
    pub level: BigInt,
    /// `d_n` of the walk matrix of the first graph.
    pub d_n: BigInt,
}

impl OrthogonalCertificate {
    /// `perm` with `Q[u][perm[u]] = 1` when `Q` is a permutation matrix.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.q.rows();
        let mut perm = Vec::with_capacity(n);
        for u in 0..n {
            let mut image = None;
            for v in 0..n {
                let x = self.q.get(u, v);
                if x.is_one() && image.is_none() {
                    image = Some(v);
                } else if !x.is_zero() {
                    return None;
                }
            }
            perm.push(image?);
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            if std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(perm)
    }
}

impl Serialize for OrthogonalCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.q.rows())
            .map(|i| (0..self.q.cols()).map(|j| self.q.get(i, j).to_string()).collect())
            .collect();
        let mut st = serializer.serialize_struct("OrthogonalCertificate", 3)?;
        st.serialize_field("level", &self.level.to_string())?;
        st.serialize_field("d_n", &self.d_n.to_string())?;
        st.serialize_field("q", &rows)?;
        st.end()
    }
}

/// [`reconstruct_q_over`] with the full degree partition.
pub fn reconstruct_q(g: &Graph, h: &Graph) -> Result<Option<OrthogonalCertificate>> {
    reconstruct_q_over(g, h, WalkKind::Full)
}

/// Solves `Q^T W_A = W_B` and checks that the solution is an orthogonal
/// similarity carrying cells to cells.
///
/// `Ok(None)` when the partitions have different shapes or any check fails;
/// an `Unsupported` error when the walk matrix of `g` is rank deficient.
pub fn reconstruct_q_over(g: &Graph, h: &Graph, kind: WalkKind) -> Result<Option<OrthogonalCertificate>> {
    let n = g.order();
    if n != h.order() {
        return Ok(None);
    }
    let (pg, ph) = (partition_for(g, kind), partition_for(h, kind));
    if pg.shape() != ph.shape() {
        return Ok(None);
    }
    let (wa, wb) = (walk_matrix_over(g, &pg), walk_matrix_over(h, &ph));
    let d_n = if n == 0 { BigInt::one() } else { last_invariant_factor(&wa)? };
    if d_n.is_zero() {
        return Err(Error::Unsupported("walk matrix is rank deficient; Q is not unique".into()));
    }
    let r = match solve_right(&wa, &wb) {
        Ok(r) => r,
        Err(Error::Inconsistent) => return Ok(None),
        Err(e) => return Err(e),
    };
    let q = r.transpose();
    let qt = r;
    if !(&qt * &q).is_identity() {
        return Ok(None);
    }
    let (a, b) = (g.adjacency_matrix().to_rational(), h.adjacency_matrix().to_rational());
    if &(&qt * &a) * &q != b {
        return Ok(None);
    }
    for i in 0..pg.len() {
        let column = |bits: Vec<bool>| IntMatrix::from_fn(n, 1, |u, _| BigInt::from(bits[u] as u8)).to_rational();
        if &qt * &column(pg.indicator(i)) != column(ph.indicator(i)) {
            return Ok(None);
        }
    }
    let level = q.level();
    if !d_n.is_multiple_of(&level) {
        return Err(Error::Contract(format!("level {level} does not divide d_n = {d_n}")));
    }
    Ok(Some(OrthogonalCertificate { q, level, d_n }))
}
