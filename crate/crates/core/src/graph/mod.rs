//! Simple undirected graphs on labeled vertices `0..n`.

mod enumerate;
pub mod families;
mod graph6;
mod orbits;
mod partition;

pub use enumerate::{canonical_form, enumerate_graphs};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6};
pub use orbits::{automorphism_orbits, find_isomorphism, OrbitBasis, MAX_ORBIT_ORDER};
pub use partition::{degree_partition, truncated_cell_count, truncated_partition, DegreePartition};

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A simple undirected graph stored as a dense adjacency bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric zero-one matrix with zero diagonal.
    pub fn from_adjacency(m: &IntMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Shape(format!(
                "adjacency matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut g = Graph::empty(n);
        let one = BigInt::from(1);
        for u in 0..n {
            for v in 0..n {
                let x = m.get(u, v);
                let bit = if x == &one {
                    true
                } else if x == &BigInt::from(0) {
                    false
                } else {
                    return Err(Error::Contract(format!("entry ({u},{v}) is not 0/1")));
                };
                if bit != (m.get(v, u) == &one) || (u == v && bit) {
                    return Err(Error::Contract(
                        "adjacency matrix must be symmetric with zero diagonal".into(),
                    ));
                }
                g.adj[u * n + v] = bit;
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Contract(format!(
                "edge ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Contract(format!("loop at vertex {u}")));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.n..(u + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Degree sequence sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.adj[u * self.n + v])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// The complementary graph: every non-edge becomes an edge and vice versa.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[u * n + v] = u != v && !self.adj[u * n + v];
            }
        }
        Graph { n, adj }
    }

    /// Zero-one adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |u, v| {
            BigInt::from(u8::from(self.has_edge(u, v)))
        })
    }

    /// Relabels vertex `u` as `perm[u]`; `{u, v}` is an edge of `self` iff
    /// `{perm[u], perm[v]}` is an edge of the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if self.adj[u * n + v] {
                    adj[perm[u] * n + perm[v]] = true;
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Whether `perm` maps the graph onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|u| (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(perm[u], perm[v])))
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
        for (u, v) in other.edges() {
            let (a, b) = (u + self.n, v + self.n);
            g.adj[a * n + b] = true;
            g.adj[b * n + a] = true;
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Shape(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Contract("not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}
