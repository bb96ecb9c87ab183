use std::collections::BTreeMap;

use serde::Serialize;

use super::{ColoredMatrix, PairPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stable 2-WL pair coloring with its refinement history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WlColoring {
    n: usize,
    /// Row-major canonical color ids of the pairs `(u, v)`.
    pub stable: Vec<u32>,
    /// Refinement rounds run, including the final one that split nothing.
    pub rounds: usize,
    /// `(color id, count)` per round; index 0 is the atomic-type coloring.
    pub histograms: Vec<Vec<(u32, usize)>>,
}

impl WlColoring {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: usize, v: usize) -> u32 {
        self.stable[u * self.n + v]
    }

    pub fn partition(&self) -> PairPartition {
        PairPartition::from_labels(self.n, &self.stable)
    }

    pub fn class_count(&self) -> usize {
        self.histograms.last().map_or(0, Vec::len)
    }
}

/// Replaces every signature by its rank among all distinct signatures.
fn canonical_ids(sigs: &[Vec<Vec<u64>>]) -> Vec<Vec<u32>> {
    let mut all: Vec<&Vec<u64>> = sigs.iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    sigs.iter()
        .map(|group| {
            group
                .iter()
                .map(|s| all.binary_search(&s).expect("signature was pooled") as u32)
                .collect()
        })
        .collect()
}

fn distinct(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(colors: &[u32]) -> Vec<(u32, usize)> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_default() += 1;
    }
    counts.into_iter().collect()
}

fn atomic_ids(ms: &[&ColoredMatrix]) -> Vec<Vec<u32>> {
    let sigs: Vec<Vec<Vec<u64>>> = ms
        .iter()
        .map(|m| {
            let n = m.order();
            (0..n * n)
                .map(|idx| {
                    let (u, v) = (idx / n, idx % n);
                    vec![(u == v) as u64, m.get(u, u), m.get(u, v), m.get(v, u), m.get(v, v)]
                })
                .collect()
        })
        .collect();
    canonical_ids(&sigs)
}

/// One round: `(X(u,v), {{ (X(u,w), X(w,v)) : w }})`. The atomic type of the
/// triple `(u, v, w)` is a function of the three pair colors, since every
/// round refines the atomic coloring.
fn refine_pairs(colors: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let sigs: Vec<Vec<Vec<u64>>> = colors
        .iter()
        .map(|c| {
            (0..n * n)
                .map(|idx| {
                    let (u, v) = (idx / n, idx % n);
                    let mut walk: Vec<u64> = (0..n)
                        .map(|w| (c[u * n + w] as u64) << 32 | c[w * n + v] as u64)
                        .collect();
                    walk.sort_unstable();
                    let mut sig = Vec::with_capacity(n + 2);
                    sig.push(c[idx] as u64);
                    sig.push(n as u64);
                    sig.extend(walk);
                    sig
                })
                .collect()
        })
        .collect();
    canonical_ids(&sigs)
}

fn run_wl2(ms: &[&ColoredMatrix], max_rounds: Option<usize>) -> Result<Vec<WlColoring>> {
    let n = ms.first().map_or(0, |m| m.order());
    if ms.iter().any(|m| m.order() != n) {
        return Err(Error::Shape("joint refinement needs equal orders".into()));
    }
    let mut colors = atomic_ids(ms);
    let mut histories: Vec<Vec<Vec<(u32, usize)>>> = colors.iter().map(|c| vec![histogram(c)]).collect();
    let mut count = distinct(&colors);
    let mut rounds = 0;
    while n > 0 && max_rounds.is_none_or(|r| rounds < r) {
        let next = refine_pairs(&colors, n);
        rounds += 1;
        for (h, c) in histories.iter_mut().zip(&next) {
            h.push(histogram(c));
        }
        colors = next;
        let next_count = distinct(&colors);
        if next_count == count {
            break;
        }
        count = next_count;
    }
    Ok(colors
        .into_iter()
        .zip(histories)
        .map(|(stable, histograms)| WlColoring {
            n,
            stable,
            rounds,
            histograms,
        })
        .collect())
}

/// The round-0 partition of pairs by atomic type.
pub fn atomic_type_coloring(m: &ColoredMatrix) -> PairPartition {
    PairPartition::from_labels(m.order(), &atomic_ids(&[m])[0])
}

pub fn wl2_stable(m: &ColoredMatrix) -> WlColoring {
    run_wl2(&[m], None).expect("single input").remove(0)
}

/// The partition after at most `rounds` refinement rounds.
pub fn wl2_rounds(m: &ColoredMatrix, rounds: usize) -> PairPartition {
    run_wl2(&[m], Some(rounds)).expect("single input")[0].partition()
}

/// Stable partition of the 2-WL process on `m`.
pub fn closure(m: &ColoredMatrix) -> PairPartition {
    wl2_stable(m).partition()
}

/// Joint refinement of several matrices of one order with shared color ids;
/// stops when the pooled class count stops growing.
pub fn wl2_joint_colored(ms: &[&ColoredMatrix]) -> Result<Vec<WlColoring>> {
    run_wl2(ms, None)
}

pub fn wl2_joint(g: &Graph, h: &Graph) -> Result<(WlColoring, WlColoring)> {
    let (a, b) = (ColoredMatrix::from_graph(g), ColoredMatrix::from_graph(h));
    let mut out = run_wl2(&[&a, &b], None)?;
    let second = out.pop().unwrap();
    Ok((out.pop().unwrap(), second))
}

/// True iff the per-round histograms of a joint run agree at every round.
pub fn wl2_equivalent(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let (cg, ch) = wl2_joint(g, h).expect("orders checked");
    cg.histograms == ch.histograms
}

fn run_wl1(gs: &[&Graph]) -> Vec<Vec<u32>> {
    let neighbors: Vec<Vec<Vec<usize>>> = gs
        .iter()
        .map(|g| (0..g.order()).map(|u| g.neighbors(u).collect()).collect())
        .collect();
    let mut colors: Vec<Vec<u32>> = gs.iter().map(|g| vec![0; g.order()]).collect();
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<Vec<Vec<u64>>> = colors
            .iter()
            .zip(&neighbors)
            .map(|(c, nb)| {
                nb.iter()
                    .enumerate()
                    .map(|(u, list)| {
                        let mut around: Vec<u64> = list.iter().map(|&w| c[w] as u64).collect();
                        around.sort_unstable();
                        let mut sig = vec![c[u] as u64, around.len() as u64];
                        sig.extend(around);
                        sig
                    })
                    .collect()
            })
            .collect();
        colors = canonical_ids(&sigs);
        let next = distinct(&colors);
        if next == count {
            return colors;
        }
        count = next;
    }
}

/// Color refinement from a uniform start, canonical ids.
pub fn wl1_stable(g: &Graph) -> Vec<u32> {
    run_wl1(&[g]).remove(0)
}

/// Joint color refinement; ids are shared so the two colorings are comparable.
pub fn wl1_joint(g: &Graph, h: &Graph) -> (Vec<u32>, Vec<u32>) {
    let mut out = run_wl1(&[g, h]);
    let second = out.pop().unwrap();
    (out.pop().unwrap(), second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn atomic_types() {
        let k3 = ColoredMatrix::from_graph(&families::complete(3));
        assert_eq!(atomic_type_coloring(&k3).class_count(), 2);
        let p3 = ColoredMatrix::from_graph(&families::path(3));
        assert_eq!(atomic_type_coloring(&p3).class_count(), 3);
        let e = ColoredMatrix::from_graph(&Graph::empty(3));
        assert_eq!(atomic_type_coloring(&e).class_count(), 2);
    }

    #[test]
    fn complete_graph_is_stable_immediately() {
        for n in 2..7 {
            let c = wl2_stable(&ColoredMatrix::from_graph(&families::complete(n)));
            assert_eq!(c.rounds, 1);
            assert_eq!(c.class_count(), 2);
        }
    }

    #[test]
    fn cycles_against_triangles() {
        let c6 = families::cycle(6);
        let two_c3 = families::cycle(3).disjoint_union(&families::cycle(3));
        let (a, b) = wl1_joint(&c6, &two_c3);
        assert_eq!(a, b);
        assert!(!wl2_equivalent(&c6, &two_c3));
        let (ca, cb) = wl2_joint(&c6, &two_c3).unwrap();
        assert_ne!(ca.histograms.last(), cb.histograms.last());
    }

    #[test]
    fn strongly_regular_pair_is_equivalent() {
        let (s, r) = (families::shrikhande(), families::rook(4));
        assert!(wl2_equivalent(&s, &r));
        assert_eq!(crate::graph::find_isomorphism(&s, &r).unwrap(), None);
    }

    #[test]
    fn one_wl() {
        assert_eq!(wl1_stable(&families::cycle(7)), vec![0; 7]);
        let p4 = wl1_stable(&families::path(4));
        assert_eq!(p4[0], p4[3]);
        assert_eq!(p4[1], p4[2]);
        assert_ne!(p4[0], p4[1]);
    }

    #[test]
    fn random_graph_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let n = rng.random_range(1..=9);
            let g = random_graph(&mut rng, n);
            let m = ColoredMatrix::from_graph(&g);
            let c = wl2_stable(&m);
            let stable = c.partition();
            assert!(stable.refines(&atomic_type_coloring(&m)));
            assert!(c.rounds <= n * n);
            // fixed point
            assert_eq!(closure(&stable.to_colored_matrix()), stable);
            // determinism
            assert_eq!(wl2_stable(&m), c);
            // 2-WL diagonal refines 1-WL
            let w1 = wl1_stable(&g);
            for u in 0..n {
                for v in 0..n {
                    if c.color(u, u) == c.color(v, v) {
                        assert_eq!(w1[u], w1[v]);
                    }
                }
            }
            // monotone rounds
            for r in 0..c.rounds {
                assert!(wl2_rounds(&m, r + 1).refines(&wl2_rounds(&m, r)));
            }
            let perm: Vec<usize> = {
                let mut p: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    p.swap(i, rng.random_range(0..=i));
                }
                p
            };
            assert!(wl2_equivalent(&g, &g.relabel(&perm).unwrap()));
        }
    }

    #[test]
    fn empty_inputs() {
        let c = wl2_stable(&ColoredMatrix::from_graph(&Graph::empty(0)));
        assert_eq!(c.rounds, 0);
        assert!(c.stable.is_empty());
        assert!(wl2_joint(&Graph::empty(2), &Graph::empty(3)).is_err());
        assert!(!wl2_equivalent(&Graph::empty(2), &Graph::empty(3)));
    }
}
