//! Backtracking search for small fixed patterns inside a host graph.
//!
//! Pattern vertices are placed in a connectivity-first order so that
//! each new vertex (after the first of its component) is drawn from the
//! neighbourhood of an already-placed image. Candidates are always tried
//! in ascending host id, which makes the first witness reproducible.

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Edges and non-edges preserved.
    Induced,
    /// Induced, and host degrees must equal pattern degrees.
    Isomorphism,
    /// Only edges preserved.
    Subgraph,
}

/// Placement order: highest degree first, then repeatedly the vertex with
/// the most already-placed neighbours (ties: higher degree, lower id).
/// Returns the order and, per position, an earlier position adjacent to it.
fn placement_order(h: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    let mut pos = vec![usize::MAX; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = h.neighbors(v).filter(|&w| placed[w]).count();
                (links, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        let a = h
            .neighbors(next)
            .filter(|&w| placed[w])
            .map(|w| pos[w])
            .min();
        placed[next] = true;
        pos[next] = order.len();
        order.push(next);
        anchor.push(a);
    }
    (order, anchor)
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn fits(&self, depth: usize, c: usize) -> bool {
        let hv = self.order[depth];
        if self.used[c] {
            return false;
        }
        let (dg, dh) = (self.g.degree(c), self.h.degree(hv));
        match self.mode {
            Mode::Isomorphism if dg != dh => return false,
            _ if dg < dh => return false,
            _ => {}
        }
        (0..depth).all(|k| {
            let hw = self.order[k];
            let gw = self.image[k];
            let he = self.h.has_edge(hv, hw);
            let ge = self.g.has_edge(c, gw);
            match self.mode {
                Mode::Subgraph => !he || ge,
                _ => he == ge,
            }
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(a) => self.g.neighbors(self.image[a]).collect(),
            None => (0..self.g.n()).collect(),
        };
        for c in candidates {
            if !self.fits(depth, c) {
                continue;
            }
            self.image.push(c);
            self.used[c] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.image.pop();
        }
        false
    }
}

/// Returns `map` with `map[v]` the host image of pattern vertex `v`.
fn find(g: &Graph, h: &Graph, mode: Mode) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    let (order, anchor) = placement_order(h);
    let mut m = Matcher {
        g,
        h,
        mode,
        order,
        anchor,
        image: Vec::with_capacity(h.n()),
        used: vec![false; g.n()],
    };
    if !m.run(0) {
        return None;
    }
    let mut map = vec![0; h.n()];
    for (k, &hv) in m.order.iter().enumerate() {
        map[hv] = m.image[k];
    }
    Some(map)
}

/// An injective map from `h` into `g` preserving adjacency and
/// non-adjacency, so that the returned vertices induce a copy of `h`.
pub fn find_induced_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find(g, h, Mode::Induced)
}

/// A vertex subset of `g` inducing a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    find_induced_embedding(g, h).map(VertexSet::new)
}

/// An injective, edge-preserving map from `h` into `g` (non-edges may map
/// onto edges).
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find(g, h, Mode::Subgraph)
}

/// An isomorphism `a -> b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    find(b, a, Mode::Isomorphism)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_in_k4() {
        let s = contains_induced(&Graph::complete(4), &Graph::complete(3)).unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn no_triangle_in_c4() {
        assert!(contains_induced(&Graph::cycle(4), &Graph::complete(3)).is_none());
    }

    #[test]
    fn induced_respects_non_edges() {
        // K4 has P3 as a subgraph but not as an induced subgraph
        let k4 = Graph::complete(4);
        assert!(contains_induced(&k4, &Graph::path(3)).is_none());
        assert!(contains_subgraph(&k4, &Graph::path(3)).is_some());
    }

    #[test]
    fn spanning_cycle_in_k4() {
        let map = contains_subgraph(&Graph::complete(4), &Graph::cycle(4)).unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
    }

    #[test]
    fn tree_has_no_triangle_subgraph() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(contains_subgraph(&star, &Graph::complete(3)).is_none());
    }

    #[test]
    fn disconnected_pattern() {
        let h = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let g = Graph::complete(3).disjoint_union(&Graph::path(4));
        let s = contains_induced(&g, &h).unwrap();
        assert_eq!(g.induced(&s).unwrap().edge_count(), 4);
        assert!(is_isomorphic(&g.induced(&s).unwrap(), &h));
    }

    #[test]
    fn isomorphism_of_relabelled_graph() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        let map = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
        assert!(!is_isomorphic(&g, &Graph::path(5)));
    }
}
