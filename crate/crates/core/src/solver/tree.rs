use std::collections::VecDeque;

use crate::graph::Graph;

/// BFS layering from `root` inside `g` minus `blocked`. In the settings
/// where this is used the explored component is a tree, so layers are
/// depths.
#[derive(Debug, Clone)]
pub(crate) struct RootedTree {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

impl RootedTree {
    pub fn grow(g: &Graph, root: usize, blocked: &[usize]) -> Self {
        let mut parent = vec![usize::MAX; g.n()];
        for &b in blocked {
            // usize::MAX - 1 marks "never enter"
            parent[b] = usize::MAX - 1;
        }
        parent[root] = root;
        let mut layers = vec![vec![root]];
        let mut frontier = VecDeque::from([root]);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in frontier.drain(..) {
                for w in g.neighbors(u) {
                    if parent[w] == usize::MAX {
                        parent[w] = u;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            frontier.extend(next.iter().copied());
            layers.push(next);
        }
        RootedTree { root, layers, parent }
    }

    pub fn height(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, depth: usize) -> &[usize] {
        self.layers.get(depth).map_or(&[], Vec::as_slice)
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    /// Lowest-id vertex at `depth` and its ancestors up to depth 1,
    /// deepest first.
    pub fn branch(&self, depth: usize) -> Vec<usize> {
        let mut v = self.layers[depth][0];
        let mut out = Vec::with_capacity(depth);
        for _ in 0..depth {
            out.push(v);
            v = self.parent[v];
        }
        out
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().copied()
    }
}
