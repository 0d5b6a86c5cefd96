//! Chordality recognition with certificates, and a random chordal
//! graph generator.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

/// Either a perfect elimination ordering or a chordless cycle of length
/// at least four.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChordalityCertificate {
    Peo(Vec<usize>),
    Hole(Vec<usize>),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Peo(_))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChordalError {
    #[error("a random chordal graph needs at least one vertex")]
    NoVertices,
    #[error("attach bias must lie in [0, 1], got {0}")]
    BadBias(f64),
}

/// Lexicographic breadth-first search by partition refinement. Ties go to
/// the lowest vertex id. Returns vertices in visit order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        order.push(v);
        let mut next = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (adj, rest): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&u| g.has_edge(v, u));
            if !adj.is_empty() {
                next.push(adj);
            }
            if !rest.is_empty() {
                next.push(rest);
            }
        }
        classes = next;
    }
    order
}

/// Whether each vertex's neighbours that come later in `order` form a clique.
pub fn verify_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().enumerate().all(|(i, &v)| {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > i).collect();
        g.is_clique(&later)
    })
}

/// Whether `cycle` is a chordless cycle of length at least four.
pub fn verify_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Recognises chordal graphs. The peo is the reverse LexBFS order; when
/// it fails, a hole is extracted instead.
pub fn is_chordal(g: &Graph) -> ChordalityCertificate {
    let mut peo = lex_bfs(g);
    peo.reverse();
    match first_peo_failure(g, &peo) {
        None => ChordalityCertificate::Peo(peo),
        Some(v) => {
            let hole = hole_through(g, v)
                .or_else(|| (0..g.n()).find_map(|u| hole_through(g, u)))
                .expect("a graph without a peo has a hole");
            ChordalityCertificate::Hole(hole)
        }
    }
}

fn first_peo_failure(g: &Graph, peo: &[usize]) -> Option<usize> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    peo.iter().enumerate().find_map(|(i, &v)| {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > i).collect();
        (!g.is_clique(&later)).then_some(v)
    })
}

/// A hole through `v`: for non-adjacent neighbours `a`, `b` of `v`, a
/// shortest `a`-`b` path avoiding the rest of `N[v]` closes a chordless
/// cycle with `v`.
fn hole_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                continue;
            }
            let blocked = |u: usize| u == v || (u != b && g.has_edge(v, u));
            let mut parent = vec![usize::MAX; g.n()];
            parent[a] = a;
            let mut queue = VecDeque::from([a]);
            while let Some(u) = queue.pop_front() {
                if u == b {
                    break;
                }
                for w in g.neighbors(u) {
                    if parent[w] == usize::MAX && !blocked(w) {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if parent[b] == usize::MAX {
                continue;
            }
            let mut cycle = vec![v];
            let mut cur = b;
            while cur != a {
                cycle.push(cur);
                cur = parent[cur];
            }
            cycle.push(a);
            return Some(cycle);
        }
    }
    None
}

/// Grows a connected chordal graph one simplicial vertex at a time.
///
/// Each new vertex picks a uniformly random existing vertex `v`, grows a
/// random maximal clique around `v`, and attaches to `v` plus a random
/// part of that clique. The neighbourhood size is `1 + G` capped at the
/// clique size, where `G` counts failures before the first success of a
/// Bernoulli(`attach_bias`) trial: bias 1 gives trees, bias 0 attaches to
/// the whole clique.
pub fn random_chordal(n: usize, attach_bias: f64, seed: u64) -> Result<Graph, ChordalError> {
    if n == 0 {
        return Err(ChordalError::NoVertices);
    }
    if !(0.0..=1.0).contains(&attach_bias) {
        return Err(ChordalError::BadBias(attach_bias));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for new in 1..n {
        let v = rng.gen_range(0..new);
        let mut candidates: Vec<usize> = (0..new).filter(|&u| b.has_edge(v, u)).collect();
        candidates.shuffle(&mut rng);
        let mut clique = vec![v];
        for u in candidates {
            if clique.iter().all(|&w| b.has_edge(u, w)) {
                clique.push(u);
            }
        }
        let mut size = 1;
        while size < clique.len() && !rng.gen_bool(attach_bias) {
            size += 1;
        }
        clique[1..].shuffle(&mut rng);
        for &u in &clique[..size] {
            b.set(new, u);
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_graph6;

    #[test]
    fn complete_graph_is_chordal() {
        let g = Graph::complete(4);
        let ChordalityCertificate::Peo(peo) = is_chordal(&g) else { panic!() };
        assert!(verify_peo(&g, &peo));
    }

    #[test]
    fn c4_hole_is_the_cycle() {
        let g = Graph::cycle(4);
        let ChordalityCertificate::Hole(h) = is_chordal(&g) else { panic!() };
        assert_eq!(h.len(), 4);
        assert!(verify_hole(&g, &h));
    }

    #[test]
    fn long_hole_with_pendant() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (6, 7), (1, 7)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        let ChordalityCertificate::Hole(h) = is_chordal(&g) else { panic!() };
        assert!(verify_hole(&g, &h));
    }

    #[test]
    fn lex_bfs_prefers_low_ids() {
        let g = Graph::path(4);
        assert_eq!(lex_bfs(&g), vec![0, 1, 2, 3]);
        assert!(lex_bfs(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn verify_peo_rejects_bad_orders() {
        let g = Graph::cycle(4);
        assert!(!verify_peo(&g, &[0, 1, 2, 3]));
        assert!(!verify_peo(&Graph::path(3), &[0, 0, 1]));
        // the centre of P3 first: its later neighbours 0 and 2 are non-adjacent
        assert!(!verify_peo(&Graph::path(3), &[1, 0, 2]));
        assert!(verify_peo(&Graph::path(3), &[0, 1, 2]));
    }

    #[test]
    fn verify_hole_rejects_chords() {
        let mut g = GraphBuilder::new(4);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(!verify_hole(&g.build(), &[0, 1, 2, 3]));
        assert!(!verify_hole(&Graph::complete(3), &[0, 1, 2]));
    }

    #[test]
    fn random_single_vertex() {
        let g = random_chordal(1, 0.5, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn random_is_chordal_connected_and_deterministic() {
        let g = random_chordal(200, 0.5, 7).unwrap();
        assert!(g.is_connected());
        let ChordalityCertificate::Peo(peo) = is_chordal(&g) else { panic!() };
        assert!(verify_peo(&g, &peo));
        assert_eq!(to_graph6(&g), to_graph6(&random_chordal(200, 0.5, 7).unwrap()));
    }

    #[test]
    fn random_bias_extremes() {
        let tree = random_chordal(50, 1.0, 1).unwrap();
        assert_eq!(tree.edge_count(), 49);
        let dense = random_chordal(50, 0.0, 1).unwrap();
        assert!(dense.edge_count() > 49);
    }

    #[test]
    fn random_errors() {
        assert_eq!(random_chordal(0, 0.5, 1), Err(ChordalError::NoVertices));
        assert!(matches!(random_chordal(3, 1.5, 1), Err(ChordalError::BadBias(_))));
        assert!(matches!(random_chordal(3, f64::NAN, 1), Err(ChordalError::BadBias(_))));
    }
}
