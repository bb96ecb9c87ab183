use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_partition, truncated_partition, DegreePartition, Graph};
use crate::linalg::modular::{char_poly_mod, is_prime_u64};
use crate::linalg::{char_poly, IntMatrix, IntPolynomial};

/// Which matrices join the adjacency matrix in the pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `A` alone.
    Spectrum,
    /// `A` and the all-ones matrix `J`.
    Generalized,
    /// `A` and the diagonal cell indicators `D_i`.
    Gdls,
    /// `A` and the diagonal blocks `J_{i,i}`.
    Gbdls,
    /// `A` and every block `J_{i,j}`.
    Gbls,
    /// [`Variant::Gbls`] over the truncated partition.
    GblsTruncated,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Spectrum,
        Variant::Generalized,
        Variant::Gdls,
        Variant::Gbdls,
        Variant::Gbls,
        Variant::GblsTruncated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Spectrum => "spectrum",
            Variant::Generalized => "generalized",
            Variant::Gdls => "gdls",
            Variant::Gbdls => "gbdls",
            Variant::Gbls => "gbls",
            Variant::GblsTruncated => "gbls_truncated",
        }
    }

    /// Whether the pencil refers to the degree cells.
    pub fn uses_cells(self) -> bool {
        matches!(self, Variant::Gdls | Variant::Gbdls | Variant::Gbls | Variant::GblsTruncated)
    }

    pub fn is_truncated(self) -> bool {
        self == Variant::GblsTruncated
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variant {s:?}")))
    }
}

/// A rank-structured term of the pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BlockTerm {
    /// `J`.
    AllOnes,
    /// `D_i = diag(e_i)`.
    Diag(usize),
    /// `J_{i,j} = e_i e_j^T`.
    Block(usize, usize),
}

/// `W(s) = s_0 A + sum_k s_k B_k` with the `B_k` drawn from [`BlockTerm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub base: IntMatrix,
    pub blocks: Vec<BlockTerm>,
    pub partition: DegreePartition,
}

impl Pencil {
    pub fn order(&self) -> usize {
        self.base.rows()
    }

    /// Number of pencil variables, `1 + blocks.len()`.
    pub fn arity(&self) -> usize {
        1 + self.blocks.len()
    }

    /// `(k, u, v)` entry of the `k`-th term; term 0 is the adjacency matrix.
    pub fn term_entry(&self, k: usize, u: usize, v: usize, cell: &[usize]) -> bool {
        if k == 0 {
            return !self.base.get(u, v).is_zero();
        }
        match self.blocks[k - 1] {
            BlockTerm::AllOnes => true,
            BlockTerm::Diag(i) => u == v && cell[u] == i,
            BlockTerm::Block(i, j) => cell[u] == i && cell[v] == j,
        }
    }

    fn check_arity(&self, len: usize) -> Result<()> {
        if len != self.arity() {
            return Err(Error::Shape(format!(
                "pencil has {} variables, got a point of length {len}",
                self.arity()
            )));
        }
        Ok(())
    }

    /// The integer matrix `W(s)`.
    pub fn evaluate(&self, s: &[BigInt]) -> Result<IntMatrix> {
        self.check_arity(s.len())?;
        let n = self.order();
        let cell = self.partition.cell_of();
        Ok(IntMatrix::from_fn(n, n, |u, v| {
            (0..self.arity())
                .filter(|&k| self.term_entry(k, u, v, &cell))
                .map(|k| &s[k])
                .sum()
        }))
    }

    /// `W(s)` reduced modulo `p`, row-major. Coordinates are taken mod `p`.
    pub fn evaluate_mod(&self, s: &[u64], p: u64) -> Result<Vec<u64>> {
        self.check_arity(s.len())?;
        let n = self.order();
        let cell = self.partition.cell_of();
        let mut out = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                let mut acc: u128 = 0;
                for (k, &sk) in s.iter().enumerate() {
                    if self.term_entry(k, u, v, &cell) {
                        acc += (sk % p) as u128;
                    }
                }
                out.push((acc % p as u128) as u64);
            }
        }
        Ok(out)
    }
}

/// The pencil of `g` for a spectral variant.
pub fn pencil_for(g: &Graph, variant: Variant) -> Pencil {
    let partition = if variant.is_truncated() {
        if g.order() == 0 {
            degree_partition(g)
        } else {
            truncated_partition(g)
        }
    } else {
        degree_partition(g)
    };
    let p = partition.len();
    let blocks = match variant {
        Variant::Spectrum => Vec::new(),
        Variant::Generalized => vec![BlockTerm::AllOnes],
        Variant::Gdls => (0..p).map(BlockTerm::Diag).collect(),
        Variant::Gbdls => (0..p).map(|i| BlockTerm::Block(i, i)).collect(),
        Variant::Gbls | Variant::GblsTruncated => {
            (0..p).flat_map(|i| (0..p).map(move |j| BlockTerm::Block(i, j))).collect()
        }
    };
    Pencil {
        base: g.adjacency_matrix(),
        blocks,
        partition,
    }
}

/// `det(tI - W(s))`, exactly or with coefficients reduced into `[0, p)`.
pub fn eval_char_poly(pencil: &Pencil, s: &[BigInt], modulus: Option<u64>) -> Result<IntPolynomial> {
    match modulus {
        None => char_poly(&pencil.evaluate(s)?),
        Some(p) => {
            if !is_prime_u64(p) {
                return Err(Error::Contract(format!("modulus {p} is not prime")));
            }
            let pb = BigInt::from(p);
            let reduced: Vec<u64> = s
                .iter()
                .map(|x| x.mod_floor(&pb).to_u64().expect("reduced below p"))
                .collect();
            let m = pencil.evaluate_mod(&reduced, p)?;
            let coeffs = char_poly_mod(&m, pencil.order(), p);
            Ok(IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect()))
        }
    }
}
