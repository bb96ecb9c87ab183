use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map `V x V -> tokens`; tokens are only compared for equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl ColoredMatrix {
    pub fn new(n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Shape(format!(
                "colored matrix of order {n} needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(ColoredMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let entries = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| f(u, v)).collect();
        ColoredMatrix { n, entries }
    }

    /// Adjacency bits as tokens.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_fn(g.order(), |u, v| g.has_edge(u, v) as u64)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.entries[u * self.n + v]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

/// A partition of `V x V`, stored as class indices numbered by first
/// occurrence in row-major order, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    n: usize,
    class_of: Vec<u32>,
}

impl PairPartition {
    /// Normalizes any labelling of the pairs into a partition.
    pub fn from_labels<T: Eq + std::hash::Hash>(n: usize, labels: &[T]) -> Self {
        assert_eq!(labels.len(), n * n);
        let mut ids: HashMap<&T, u32> = HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(l).or_insert(next)
            })
            .collect();
        PairPartition { n, class_of }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn class(&self, u: usize, v: usize) -> u32 {
        self.class_of[u * self.n + v]
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (idx, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push((idx / self.n, idx % self.n));
        }
        out
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &PairPartition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let mut image: Vec<Option<u32>> = vec![None; self.class_count()];
        self.class_of.iter().zip(&coarser.class_of).all(|(&c, &d)| {
            let slot = &mut image[c as usize];
            *slot.get_or_insert(d) == d
        })
    }

    /// The partition re-encoded as a colored matrix (class index as token).
    pub fn to_colored_matrix(&self) -> ColoredMatrix {
        ColoredMatrix {
            n: self.n,
            entries: self.class_of.iter().map(|&c| c as u64).collect(),
        }
    }
}
