//! Simple undirected graphs on dense vertex ids, stored as per-vertex
//! adjacency bitsets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a multi-word bitset in ascending order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + bit)
        })
    })
}

/// An immutable simple graph. Vertices are `0..n`.
///
/// Adjacency is kept as one bitset row per vertex; rows are always
/// symmetric and the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            for u in 0..v {
                b.set(u, v);
            }
        }
        b.build()
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.set(v - 1, v);
        }
        b.build()
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.set(v, (v + 1) % n);
        }
        b.build()
    }

    /// Vertices of `self` keep their ids, vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.set(u, v);
        }
        for (u, v) in other.edges() {
            b.set(u + self.n, v + self.n);
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitset row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a single word. Only meaningful when `n <= 64`.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.0.last() {
            Some(&v) if v >= self.n => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// The subgraph induced by `s`. Vertex `s[i]` (ascending) becomes `i`.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        let mut b = GraphBuilder::new(s.len());
        for (i, &u) in s.0.iter().enumerate() {
            for (j, &v) in s.0.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.set(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// `G - v`, relabelled order-preservingly.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep = VertexSet((0..self.n).filter(|&u| u != v).collect());
        self.induced(&keep).expect("vertex set is in range")
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.set(perm[u], perm[v]);
        }
        b.build()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-colours the graph, or returns an odd cycle.
    ///
    /// BFS runs from the lowest unvisited vertex of each component. A
    /// monochromatic edge closes an odd cycle through the BFS tree.
    pub fn bipartition(&self) -> Bipartition {
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::OddCycle(close_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Bipartite(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Bipartite(_))
    }

    /// All triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                for c in self.neighbors(b).filter(|&c| c > b) {
                    if self.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Whether every pair of `s` is adjacent.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// Same-depth endpoints `u`, `w` of a monochromatic BFS edge; walks both up
/// to their common ancestor.
fn close_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    debug_assert_eq!(depth[u], depth[w]);
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the ancestor; right's copy of it is dropped.
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Result of [`Graph::bipartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour (0 or 1) of every vertex; every edge is bichromatic.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle in cyclic order.
    OddCycle(Vec<usize>),
}

/// Mutable staging area for a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    inner: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            inner: Graph::empty(n),
        }
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        let n = self.inner.n;
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        let w = self.inner.words;
        self.inner.rows[u * w + v / 64] |= 1 << (v % 64);
        self.inner.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        self.inner
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Maps every member through `f` (e.g. back into a host graph's ids).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        VertexSet::new(self.0.iter().map(|&v| f(v)))
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn builder_rejects_loops_and_range() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop(1));
        assert!(matches!(b.add_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })));
        b.add_edge(0, 1).unwrap().add_edge(1, 0).unwrap();
        assert_eq!(b.build().edge_count(), 1);
    }

    #[test]
    fn multiword_rows() {
        let g = Graph::path(130);
        assert_eq!(g.edge_count(), 129);
        assert!(g.has_edge(63, 64));
        assert!(g.has_edge(128, 129));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
    }

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        let s = VertexSet::new([0, 2, 3]);
        assert_eq!(k4.induced(&s).unwrap(), Graph::complete(3));

        let p = c4().induced(&VertexSet::new([0, 1, 2])).unwrap();
        assert_eq!(p, Graph::path(3));

        let g = c4();
        assert_eq!(g.induced(&g.vertices()).unwrap(), g);

        assert!(matches!(
            g.induced(&VertexSet::new([1, 4])),
            Err(GraphError::VertexOutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn induced_relabels_in_ascending_order() {
        // path 0-1-2-3-4, take {1, 3, 4}: only 3-4 survives, as 1-2
        let g = Graph::path(5);
        let h = g.induced(&VertexSet::new([4, 1, 3])).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn bipartition_examples() {
        match c4().bipartition() {
            Bipartition::Bipartite(c) => assert_eq!(c, vec![0, 1, 0, 1]),
            other => panic!("{other:?}"),
        }
        match Graph::complete(3).bipartition() {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("{other:?}"),
        }
        assert_eq!(Graph::empty(0).bipartition(), Bipartition::Bipartite(vec![]));
    }

    #[test]
    fn odd_cycle_is_a_real_cycle() {
        // C5 with a pendant path hanging off it
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let Bipartition::OddCycle(c) = g.bipartition() else { panic!() };
        assert_eq!(c.len() % 2, 1);
        assert_eq!(VertexSet::new(c.clone()).len(), c.len());
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn components_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let comps = g.components();
        assert_eq!(comps.iter().map(VertexSet::len).collect::<Vec<_>>(), vec![3, 2]);
        assert_eq!(c4().components().len(), 1);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(Graph::complete(4).triangles().len(), 4);
        assert!(c4().triangles().is_empty());
    }
}
