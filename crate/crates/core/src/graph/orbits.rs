//! Automorphism orbits and isomorphism search by backtracking.
//!
//! Candidate images are restricted to vertices of the same refined color
//! (degree-seeded color refinement), which keeps the search small for the
//! orders handled here.

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::wl::wl1_joint;

/// Largest order accepted by [`automorphism_orbits`].
pub const MAX_ORBIT_ORDER: usize = 12;
const MAX_ISOMORPHISM_ORDER: usize = 64;

/// Orbits of `Aut(G)` with their indicator vectors.
///
/// The indicator vectors span the space of vectors fixed by every
/// automorphism, so `basis.len()` is that space's dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitBasis {
    pub orbits: Vec<Vec<usize>>,
    pub basis: Vec<Vec<u8>>,
    /// Automorphisms discovered while merging orbits (`perm[u]` is the image of `u`).
    pub generators: Vec<Vec<usize>>,
}

impl OrbitBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Computes the orbits of the full automorphism group (`n <= 12`).
pub fn automorphism_orbits(g: &Graph) -> Result<OrbitBasis> {
    let n = g.order();
    if n > MAX_ORBIT_ORDER {
        return Err(Error::Unsupported(format!(
            "automorphism orbits need n <= {MAX_ORBIT_ORDER}, got {n}"
        )));
    }
    let (colors, _) = wl1_joint(g, g);
    let mut parent: Vec<usize> = (0..n).collect();
    let mut generators = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if colors[u] != colors[w] || find(&mut parent, u) == find(&mut parent, w) {
                continue;
            }
            if let Some(perm) = search(g, g, &colors, &colors, Some((u, w))) {
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, perm[v]));
                    parent[a] = b;
                }
                generators.push(perm);
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => orbits[i].push(v),
            None => {
                roots.push(r);
                orbits.push(vec![v]);
            }
        }
    }
    let basis = orbits
        .iter()
        .map(|orbit| {
            let mut e = vec![0u8; n];
            for &v in orbit {
                e[v] = 1;
            }
            e
        })
        .collect();
    Ok(OrbitBasis {
        orbits,
        basis,
        generators,
    })
}

/// Finds `perm` with `{u,v}` an edge of `g` iff `{perm[u], perm[v]}` is an
/// edge of `h`, i.e. `h == g.relabel(&perm)`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.order() > MAX_ISOMORPHISM_ORDER {
        return Err(Error::Unsupported(format!(
            "isomorphism search needs n <= {MAX_ISOMORPHISM_ORDER}, got {}",
            g.order()
        )));
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (cg, ch) = wl1_joint(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }
    Ok(search(g, h, &cg, &ch, None))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn search(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    fixed: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let n = g.order();
    // visit the fixed vertex first, then by ascending class size so that
    // constrained vertices are placed early
    let mut order: Vec<usize> = (0..n).collect();
    let class_size = |c: u32| cg.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (Some(v) != fixed.map(|f| f.0), class_size(cg[v]), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, cg, ch, &order, 0, &mut map, &mut used, fixed) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    fixed: Option<(usize, usize)>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let candidates: Vec<usize> = match fixed {
        Some((a, b)) if a == u => vec![b],
        _ => (0..h.order()).collect(),
    };
    for w in candidates {
        if used[w] || cg[u] != ch[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g.has_edge(u, x) == h.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if extend(g, h, cg, ch, order, depth + 1, map, used, fixed) {
            return true;
        }
        used[w] = false;
        map[u] = usize::MAX;
    }
    false
}
