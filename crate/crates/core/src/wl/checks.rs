use std::collections::HashMap;

use num_bigint::BigInt;

use super::{closure, wl2_joint, ColoredMatrix};
use crate::graph::{degree_partition, Graph};
use crate::linalg::IntMatrix;

/// How degree-cell information is attached to the adjacency tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellTagging {
    /// Adjacency alone.
    Plain,
    /// Cell index on the diagonal, i.e. the `D_i` terms.
    Diagonal,
    /// Cell index on pairs inside one cell, i.e. the `J_{i,i}` terms.
    DiagonalBlocks,
    /// Ordered cell pair on every entry, i.e. all `J_{i,j}` terms.
    AllBlocks,
}

impl CellTagging {
    pub const ALL: [CellTagging; 4] = [
        CellTagging::Plain,
        CellTagging::Diagonal,
        CellTagging::DiagonalBlocks,
        CellTagging::AllBlocks,
    ];
}

/// Product-alphabet token matrix: bit 0 is adjacency, the rest is the tag.
pub fn cell_tagged_matrix(g: &Graph, tagging: CellTagging) -> ColoredMatrix {
    let cell = degree_partition(g).cell_of();
    let p = cell.iter().max().map_or(0, |&c| c + 1) as u64;
    ColoredMatrix::from_fn(g.order(), |u, v| {
        let (cu, cv) = (cell[u] as u64, cell[v] as u64);
        let tag = match tagging {
            CellTagging::Plain => 0,
            CellTagging::Diagonal if u == v => 1 + cu,
            CellTagging::DiagonalBlocks if cu == cv => 1 + cu,
            CellTagging::AllBlocks => 1 + cu * p + cv,
            _ => 0,
        };
        g.has_edge(u, v) as u64 | tag << 1
    })
}

/// Whether the 2-WL closures of the adjacency matrix and of its three
/// cell-tagged variants are the same partition.
pub fn verify_partial_refinement(g: &Graph) -> bool {
    let reference = closure(&cell_tagged_matrix(g, CellTagging::Plain));
    CellTagging::ALL[1..]
        .iter()
        .all(|&t| closure(&cell_tagged_matrix(g, t)) == reference)
}

/// Pairs sharing a joint stable 2-WL color have equal entries in `A^r` for
/// every `r <= r_max`. Vacuously true for 2-WL-inequivalent inputs.
pub fn verify_power_invariant(g: &Graph, h: &Graph, r_max: u32) -> bool {
    if !super::wl2_equivalent(g, h) {
        return true;
    }
    let (cg, ch) = wl2_joint(g, h).expect("equivalent graphs share an order");
    let n = g.order();
    let powers = |m: IntMatrix| -> Vec<IntMatrix> {
        let mut out = vec![IntMatrix::identity(n)];
        for _ in 0..r_max {
            out.push(out.last().unwrap() * &m);
        }
        out
    };
    let (pg, ph) = (powers(g.adjacency_matrix()), powers(h.adjacency_matrix()));
    let mut seen: HashMap<u32, Vec<&BigInt>> = HashMap::new();
    for (coloring, pw) in [(&cg, &pg), (&ch, &ph)] {
        for u in 0..n {
            for v in 0..n {
                let entries: Vec<&BigInt> = pw.iter().map(|m| m.get(u, v)).collect();
                match seen.get(&coloring.color(u, v)) {
                    Some(prev) if *prev != entries => return false,
                    Some(_) => {}
                    None => {
                        seen.insert(coloring.color(u, v), entries);
                    }
                }
            }
        }
    }
    true
}
