//! Matrix partitions for arbitrary symmetric patterns over `{0, 1, *}`:
//! certificate checking and an exhaustive backtracking solver.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{words_for, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    /// Parts completely non-adjacent (independent set on the diagonal).
    Zero,
    /// Parts completely adjacent (clique on the diagonal).
    One,
    /// No constraint.
    Star,
}

impl Cell {
    fn symbol(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Star => '*',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern must have at least one part")]
    Empty,
    #[error("pattern row {row} has {len} cells, expected {m}")]
    Ragged { row: usize, len: usize, m: usize },
    #[error("illegal pattern symbol {symbol:?} at row {row}, column {col}")]
    BadSymbol { row: usize, col: usize, symbol: char },
    #[error("pattern is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("diagonal cell {0} is `*`: that part could absorb every vertex, making the partition trivial")]
    StarDiagonal(usize),
    #[error("assignment covers {got} vertices, graph has {n}")]
    NotTotal { got: usize, n: usize },
    #[error("vertex {vertex} assigned to part {part}, pattern has {m} parts")]
    PartOutOfRange { vertex: usize, part: usize, m: usize },
}

/// A symmetric `m x m` pattern with no `*` on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    m: usize,
    cells: Vec<Cell>,
}

impl Pattern {
    pub fn new(rows: Vec<Vec<Cell>>) -> Result<Self, PatternError> {
        let m = rows.len();
        if m == 0 {
            return Err(PatternError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != m {
                return Err(PatternError::Ragged { row, len: r.len(), m });
            }
        }
        for i in 0..m {
            if rows[i][i] == Cell::Star {
                return Err(PatternError::StarDiagonal(i));
            }
            for j in i + 1..m {
                if rows[i][j] != rows[j][i] {
                    return Err(PatternError::Asymmetric { i, j });
                }
            }
        }
        Ok(Pattern {
            m,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Three independent parts; parts 1 and 2 completely adjacent.
    pub fn m1() -> Self {
        "0**\n*01\n*10".parse().expect("valid constant")
    }

    /// The `k`-colouring pattern: zero diagonal, `*` elsewhere.
    pub fn colouring(k: usize) -> Self {
        let rows = (0..k)
            .map(|i| (0..k).map(|j| if i == j { Cell::Zero } else { Cell::Star }).collect())
            .collect();
        Pattern::new(rows).expect("valid pattern")
    }

    pub fn parts(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        self.cells[i * self.m + j]
    }
}

/// One line per row, one of `0`, `1`, `*` per cell. Whitespace between
/// cells is allowed; blank lines are ignored.
impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row = rows.len();
            let cells = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .enumerate()
                .map(|(col, c)| match c {
                    '0' => Ok(Cell::Zero),
                    '1' => Ok(Cell::One),
                    '*' => Ok(Cell::Star),
                    symbol => Err(PatternError::BadSymbol { row, col, symbol }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(cells);
        }
        Pattern::new(rows)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            let row: String = (0..self.m).map(|j| self.cell(i, j).symbol()).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Part index of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub Vec<usize>);

impl Assignment {
    pub fn part(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Members of each of the `m` parts, ascending.
    pub fn parts(&self, m: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); m];
        for (v, &p) in self.0.iter().enumerate() {
            out[p].push(v);
        }
        out
    }

    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Option<Self> {
        let mut a = vec![usize::MAX; n];
        for (p, members) in parts.iter().enumerate() {
            for &v in members {
                if v >= n || a[v] != usize::MAX {
                    return None;
                }
                a[v] = p;
            }
        }
        a.iter().all(|&p| p != usize::MAX).then_some(Assignment(a))
    }
}

/// A vertex pair breaking the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub parts: (usize, usize),
    /// `true`: the cell demands an edge that is missing; `false`: the cell
    /// forbids an edge that is present.
    pub missing_edge: bool,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.parts;
        if self.missing_edge {
            write!(f, "vertices {} and {} (parts {i}, {j}) must be adjacent", self.u, self.v)
        } else {
            write!(f, "vertices {} and {} (parts {i}, {j}) must not be adjacent", self.u, self.v)
        }
    }
}

/// `Ok(None)` accepts; `Ok(Some(_))` names the first offending pair in
/// `(u, v)` lexicographic order.
pub fn verify_assignment(
    g: &Graph,
    p: &Pattern,
    a: &Assignment,
) -> Result<Option<Violation>, PatternError> {
    if a.0.len() != g.n() {
        return Err(PatternError::NotTotal { got: a.0.len(), n: g.n() });
    }
    if let Some((vertex, &part)) = a.0.iter().enumerate().find(|(_, &q)| q >= p.parts()) {
        return Err(PatternError::PartOutOfRange { vertex, part, m: p.parts() });
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (i, j) = (a.0[u], a.0[v]);
            let edge = g.has_edge(u, v);
            let bad = match p.cell(i, j) {
                Cell::One => !edge,
                Cell::Zero => edge,
                Cell::Star => false,
            };
            if bad {
                return Ok(Some(Violation {
                    u,
                    v,
                    parts: (i, j),
                    missing_edge: !edge,
                }));
            }
        }
    }
    Ok(None)
}

struct Backtrack<'a> {
    g: &'a Graph,
    p: &'a Pattern,
    order: Vec<usize>,
    words: usize,
    // members[part * words ..] is the bitset of vertices placed in `part`
    members: Vec<u64>,
    part_of: Vec<usize>,
}

impl Backtrack<'_> {
    fn allowed(&self, v: usize, part: usize) -> bool {
        let row = self.g.row(v);
        let w = self.words;
        (0..self.p.parts()).all(|q| {
            let set = &self.members[q * w..(q + 1) * w];
            match self.p.cell(part, q) {
                Cell::Star => true,
                Cell::Zero => set.iter().zip(row).all(|(s, r)| s & r == 0),
                // v itself is never in `set` yet
                Cell::One => set.iter().zip(row).all(|(s, r)| s & !r == 0),
            }
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let w = self.words;
        for part in 0..self.p.parts() {
            if !self.allowed(v, part) {
                continue;
            }
            self.members[part * w + v / 64] |= 1 << (v % 64);
            self.part_of[v] = part;
            if self.run(depth + 1) {
                return true;
            }
            self.members[part * w + v / 64] &= !(1 << (v % 64));
        }
        false
    }
}

/// Exhaustive search for an `M`-partition. Vertices are tried in
/// descending degree (ties by id), parts in ascending index.
pub fn solve(g: &Graph, p: &Pattern) -> Option<Assignment> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let words = words_for(g.n());
    let mut bt = Backtrack {
        g,
        p,
        order,
        words,
        members: vec![0; p.parts() * words],
        part_of: vec![0; g.n()],
    };
    bt.run(0).then_some(Assignment(bt.part_of))
}

/// Not partitionable, but every single-vertex deletion is. Heredity makes
/// single deletions sufficient.
pub fn is_minimal_obstruction(g: &Graph, p: &Pattern) -> bool {
    solve(g, p).is_none() && (0..g.n()).all(|v| solve(&g.without_vertex(v), p).is_some())
}
