//! Enumeration of all graphs on a few vertices up to isomorphism.

use std::collections::BTreeSet;

use super::Graph;
use crate::wl::wl1_joint;

/// A canonical relabeling of `g`: the lexicographically largest upper-triangle
/// bit string over all labelings that order vertices by refined color class.
///
/// Two graphs are isomorphic iff their canonical forms are equal. The cost is
/// the product of factorials of the color class sizes, fine up to n ≈ 8.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    let (colors, _) = wl1_joint(g, g);
    let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
    for v in 0..n {
        match classes.iter_mut().find(|(c, _)| *c == colors[v]) {
            Some((_, members)) => members.push(v),
            None => classes.push((colors[v], vec![v])),
        }
    }
    classes.sort_by_key(|(c, _)| *c);
    let mut best: Option<Vec<bool>> = None;
    let mut best_order: Vec<usize> = Vec::new();
    let mut order = Vec::with_capacity(n);
    walk_orders(&classes, 0, &mut order, &mut |ord| {
        let bits = upper_bits(g, ord);
        if best.as_ref().is_none_or(|b| bits > *b) {
            best = Some(bits);
            best_order = ord.to_vec();
        }
    });
    // best_order[i] is the old vertex placed at position i
    let mut perm = vec![0; n];
    for (pos, &v) in best_order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm).expect("valid permutation")
}

fn upper_bits(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

fn walk_orders(
    classes: &[(u32, Vec<usize>)],
    idx: usize,
    order: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == classes.len() {
        visit(order);
        return;
    }
    let mut members = classes[idx].1.clone();
    permute(&mut members, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        walk_orders(classes, idx + 1, order, visit);
        order.truncate(len);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// All graphs on `n` vertices up to isomorphism, in canonical form.
///
/// Built by adding a vertex with every possible neighborhood to each graph on
/// `n - 1` vertices and deduplicating canonical forms.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let smaller = enumerate_graphs(n - 1);
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut out = Vec::new();
    for base in &smaller {
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut g = Graph::empty(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v).unwrap();
            }
            for u in 0..n - 1 {
                if mask >> u & 1 == 1 {
                    g.add_edge(u, n - 1).unwrap();
                }
            }
            let c = canonical_form(&g);
            let key: Vec<bool> = upper_bits(&c, &(0..n).collect::<Vec<_>>());
            if seen.insert(key) {
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // OEIS A000088
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = crate::graph::families::smallest_asymmetric();
        let h = g.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let c6 = crate::graph::families::cycle(6);
        let two_c3 = crate::graph::families::cycle(3).disjoint_union(&crate::graph::families::cycle(3));
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }
}
