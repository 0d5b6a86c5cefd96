//! Canonical forms for small graphs and exhaustive enumeration of
//! connected chordal graphs up to isomorphism.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};
use crate::par;

/// Largest order supported by [`canonical_form`]; the upper triangle must
/// fit in one `u64`.
pub const CANON_MAX_N: usize = 11;

/// Largest order accepted by [`enumerate_connected_chordal`].
pub const ENUMERATE_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("max_n must be between 1 and {ENUMERATE_MAX_N}, got {0}")]
    OutOfRange(usize),
}

/// The lexicographically smallest upper-triangle bitstring (graph6 bit
/// order, first bit most significant) over all admissible relabellings.
/// Two graphs are isomorphic iff their keys are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: usize,
    pub bits: u64,
}

/// Stable colour refinement, started from degrees. Colours are ranks of
/// sorted signatures, so they are isomorphism invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                nc.sort_unstable();
                (colour[v], nc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Twin classes: vertices with the same open or the same closed
/// neighbourhood are interchangeable by an automorphism.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if class[u] != u {
                continue;
            }
            let (mu, mv) = (g.mask(u), g.mask(v));
            let open = mu == mv;
            let closed = (mu | 1 << u) == (mv | 1 << v);
            if open || closed {
                class[v] = u;
                break;
            }
        }
    }
    class
}

struct CanonSearch<'a> {
    g: &'a Graph,
    // colour class required at each position
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    twin: Vec<usize>,
    total_bits: u32,
    perm: Vec<usize>,
    placed: u64,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn dfs(&mut self, pos: usize, bits: u64, below: bool) {
        let n = self.g.n();
        if pos == n {
            if below || self.best.is_none() {
                self.best = Some((bits, self.perm.clone()));
            }
            return;
        }
        let want = self.slot_colour[pos];
        for v in 0..n {
            if self.placed >> v & 1 == 1 || self.colour[v] != want {
                continue;
            }
            // twins are placed in ascending id order
            let t = self.twin[v];
            if (0..v).any(|u| self.twin[u] == t && self.placed >> u & 1 == 0) {
                continue;
            }
            let mut next = bits;
            let nbrs = self.g.mask(v);
            for &u in &self.perm {
                next = next << 1 | (nbrs >> u & 1);
            }
            let mut now_below = below;
            if !below {
                if let Some((best, _)) = &self.best {
                    let len = ((pos + 1) * pos / 2) as u32;
                    let prefix = if len == 0 { 0 } else { best >> (self.total_bits - len) };
                    if next > prefix {
                        continue;
                    }
                    now_below = next < prefix;
                }
            }
            self.perm.push(v);
            self.placed |= 1 << v;
            self.dfs(pos + 1, next, now_below);
            self.placed &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical key and the relabelling achieving it (`perm[i]` is the
/// original vertex placed at position `i`).
///
/// Positions are filled class by class in colour-refinement order, so
/// the minimum is taken over refinement-respecting orders only.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.n();
    assert!(n <= CANON_MAX_N, "canonical form supports at most {CANON_MAX_N} vertices");
    let colour = refine(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut s = CanonSearch {
        g,
        slot_colour,
        colour,
        twin: twin_classes(g),
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        perm: Vec::with_capacity(n),
        placed: 0,
        best: None,
    };
    s.dfs(0, 0, false);
    let (bits, perm) = s.best.expect("at least one ordering");
    (CanonicalKey { n, bits }, perm)
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).0
}

/// The canonical representative: vertex at position `i` becomes `i`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    let mut inv = vec![0; g.n()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    g.relabel(&inv)
}

/// All non-empty cliques of `g` as bitmasks (`n <= 64`).
fn cliques(g: &Graph) -> Vec<u64> {
    fn grow(g: &Graph, current: u64, candidates: u64, out: &mut Vec<u64>) {
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = current | 1 << v;
            out.push(c);
            grow(g, c, rest & g.mask(v), out);
        }
    }
    let mut out = Vec::new();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    grow(g, 0, all, &mut out);
    out
}

fn extend(g: &Graph, clique: u64) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n + 1);
    for (u, v) in g.edges() {
        b.set(u, v);
    }
    for v in 0..n {
        if clique >> v & 1 == 1 {
            b.set(v, n);
        }
    }
    b.build()
}

/// Connected chordal graphs on exactly `1..=max_n` vertices, one
/// canonical representative per isomorphism class, grouped by order.
///
/// Level `k + 1` is every level-`k` graph plus a new vertex joined to a
/// non-empty clique. Deleting a simplicial vertex from a connected
/// chordal graph leaves it connected and chordal, so the closure is
/// complete.
pub fn enumerate_by_order(max_n: usize) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    if max_n == 0 || max_n > ENUMERATE_MAX_N {
        return Err(EnumerateError::OutOfRange(max_n));
    }
    let mut levels = vec![vec![Graph::empty(1)]];
    while levels.len() < max_n {
        let parents = levels.last().expect("non-empty");
        let children: Vec<Vec<(CanonicalKey, Graph)>> = par::map(parents, |g| {
            cliques(g)
                .into_iter()
                .map(|c| {
                    let child = canonical_graph(&extend(g, c));
                    (canonical_key(&child), child)
                })
                .collect()
        });
        let mut seen: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
        for (key, child) in children.into_iter().flatten() {
            seen.entry(key).or_insert(child);
        }
        levels.push(seen.into_values().collect());
    }
    Ok(levels)
}

/// Flattened [`enumerate_by_order`], ascending order then canonical key.
pub fn enumerate_connected_chordal(max_n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(enumerate_by_order(max_n)?.into_iter().flatten().collect())
}
