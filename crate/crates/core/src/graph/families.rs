//! Small named graphs used in tests, fixtures and examples.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 1..n {
        g.add_edge(u - 1, u).unwrap();
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).unwrap();
    }
    g
}

/// `K_{1, n-1}` with centre 0.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// The `k x k` rook's graph: cells of a chessboard, adjacent when they share a
/// row or column. For `k = 4` this is SRG(16, 6, 2, 2).
pub fn rook(k: usize) -> Graph {
    let mut g = Graph::empty(k * k);
    for a in 0..k * k {
        for b in a + 1..k * k {
            if a / k == b / k || a % k == b % k {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// The Shrikhande graph: the Cayley graph of `Z_4 x Z_4` with connection set
/// `{±(0,1), ±(1,0), ±(1,1)}`. Shares the parameters SRG(16, 6, 2, 2) with
/// [`rook(4)`](rook) but is not isomorphic to it.
pub fn shrikhande() -> Graph {
    let mut g = Graph::empty(16);
    let gens = [(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)];
    for a in 0..16 {
        for b in a + 1..16 {
            let d = ((b / 4 + 4 - a / 4) % 4, (b % 4 + 4 - a % 4) % 4);
            if gens.contains(&d) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// The smallest asymmetric graph: a path `0-1-2-3-4-5` with chord `{1, 3}`.
pub fn smallest_asymmetric() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap()
}
