use serde::Serialize;

use super::Graph;

/// An ordered partition of the vertex set into degree cells.
///
/// Cells are listed by strictly decreasing degree. In a truncated partition the
/// last cell is a catch-all whose vertices may have several degrees; its
/// `degrees` entry is `None`. Empty cells are only produced by the truncated
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePartition {
    cells: Vec<Vec<usize>>,
    degrees: Vec<Option<usize>>,
    n: usize,
}

impl DegreePartition {
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn degrees(&self) -> &[Option<usize>] {
        &self.degrees
    }

    /// Number of cells (`p`, or `r` for a truncated partition).
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The zero-one indicator vector of cell `i`.
    pub fn indicator(&self, i: usize) -> Vec<bool> {
        let mut e = vec![false; self.n];
        for &v in &self.cells[i] {
            e[v] = true;
        }
        e
    }

    /// `cell_of[v]` is the index of the cell holding `v`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i;
            }
        }
        out
    }

    /// Cell sizes paired with cell degrees; two graphs whose partitions share
    /// this shape admit pencils over the same block structure.
    pub fn shape(&self) -> Vec<(usize, Option<usize>)> {
        self.cells
            .iter()
            .zip(&self.degrees)
            .map(|(c, &d)| (c.len(), d))
            .collect()
    }

    /// Checks the partition laws against a vertex count.
    pub fn is_partition_of(&self, n: usize) -> bool {
        if self.n != n {
            return false;
        }
        let mut seen = vec![false; n];
        for cell in &self.cells {
            for &v in cell {
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Groups vertices by degree, cells ordered by strictly decreasing degree.
pub fn degree_partition(g: &Graph) -> DegreePartition {
    let degs = g.degrees();
    let mut distinct: Vec<usize> = degs.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let cells = distinct
        .iter()
        .map(|&d| (0..g.order()).filter(|&v| degs[v] == d).collect())
        .collect();
    DegreePartition {
        cells,
        degrees: distinct.into_iter().map(Some).collect(),
        n: g.order(),
    }
}

/// `r = ceil(log2 n) + 1`, the number of cells of a truncated partition.
pub fn truncated_cell_count(n: usize) -> usize {
    assert!(n >= 1, "truncated partition needs at least one vertex");
    let ceil_log2 = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    ceil_log2 + 1
}

/// The truncated degree partition: the `r - 1` highest distinct degrees get a
/// cell each, every other vertex goes to the final catch-all cell. Missing
/// cells are filled with empty sets so exactly `r` cells are always emitted.
pub fn truncated_partition(g: &Graph) -> DegreePartition {
    let n = g.order();
    let r = truncated_cell_count(n);
    let full = degree_partition(g);
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for i in 0..r - 1 {
        match full.cells.get(i) {
            Some(cell) => {
                cells.push(cell.clone());
                degrees.push(full.degrees[i]);
            }
            None => {
                cells.push(Vec::new());
                degrees.push(None);
            }
        }
    }
    let mut rest: Vec<usize> = full.cells.iter().skip(r - 1).flatten().copied().collect();
    rest.sort_unstable();
    let rest_degree = match full.degrees.get(r - 1..) {
        Some([single]) => *single,
        _ => None,
    };
    cells.push(rest);
    degrees.push(rest_degree);
    DegreePartition { cells, degrees, n }
}
