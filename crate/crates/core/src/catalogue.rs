//! The chordal minimal obstructions for the M1 pattern, the auxiliary
//! two-triangle graphs, and detection of members inside host graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::search::contains_induced;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObstructionKind {
    /// Two disjoint triangles, `2K3`.
    F0,
    /// Two triangles joined by one edge.
    F01,
    /// Two disjoint triangles with one vertex adjacent to two vertices of
    /// the other triangle.
    F02,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    /// Odd path on `2k + 2` vertices plus an apex on its interior.
    Fan(usize),
}

impl ObstructionKind {
    pub const FINITE: [ObstructionKind; 7] = [
        ObstructionKind::F1,
        ObstructionKind::F2,
        ObstructionKind::F3,
        ObstructionKind::F4,
        ObstructionKind::F5,
        ObstructionKind::F6,
        ObstructionKind::F7,
    ];

    pub const AUXILIARY: [ObstructionKind; 3] =
        [ObstructionKind::F0, ObstructionKind::F01, ObstructionKind::F02];

    /// Auxiliary kinds are not minimal obstructions.
    pub fn role(self) -> Role {
        match self {
            ObstructionKind::F0 | ObstructionKind::F01 | ObstructionKind::F02 => Role::Auxiliary,
            _ => Role::Minimal,
        }
    }

    /// The concrete graph of this kind.
    pub fn graph(self) -> Result<Graph, CatalogueError> {
        Ok(match self {
            ObstructionKind::Fan(k) => fan(k)?,
            kind => {
                let (n, edges) = edge_list(kind);
                Graph::from_edges(n, edges).expect("catalogue edge lists are valid")
            }
        })
    }

    /// Tag without the fan parameter, as used in certificate JSON.
    pub fn tag(self) -> &'static str {
        match self {
            ObstructionKind::F0 => "F0",
            ObstructionKind::F01 => "F01",
            ObstructionKind::F02 => "F02",
            ObstructionKind::F1 => "F1",
            ObstructionKind::F2 => "F2",
            ObstructionKind::F3 => "F3",
            ObstructionKind::F4 => "F4",
            ObstructionKind::F5 => "F5",
            ObstructionKind::F6 => "F6",
            ObstructionKind::F7 => "F7",
            ObstructionKind::Fan(_) => "Fan",
        }
    }

    /// Inverse of [`ObstructionKind::tag`]; `k` is required for fans only.
    pub fn from_tag(tag: &str, k: Option<usize>) -> Option<Self> {
        let kind = match tag {
            "F0" => ObstructionKind::F0,
            "F01" => ObstructionKind::F01,
            "F02" => ObstructionKind::F02,
            "F1" => ObstructionKind::F1,
            "F2" => ObstructionKind::F2,
            "F3" => ObstructionKind::F3,
            "F4" => ObstructionKind::F4,
            "F5" => ObstructionKind::F5,
            "F6" => ObstructionKind::F6,
            "F7" => ObstructionKind::F7,
            "Fan" => return k.filter(|&k| k >= 2).map(ObstructionKind::Fan),
            _ => return None,
        };
        k.is_none().then_some(kind)
    }
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionKind::Fan(k) => write!(f, "Fan({k})"),
            kind => f.write_str(kind.tag()),
        }
    }
}

/// Accepts `F1`..`F7`, `F0`, `F01`, `F02`, and fans as `Fan(3)`, `Fan3`
/// or `fan3`.
impl FromStr for ObstructionKind {
    type Err = CatalogueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("fan") {
            let digits = rest.trim_start_matches('(').trim_end_matches(')');
            let k = digits
                .parse()
                .map_err(|_| CatalogueError::UnknownKind(s.to_string()))?;
            if k < 2 {
                return Err(CatalogueError::FanTooShort(k));
            }
            return Ok(ObstructionKind::Fan(k));
        }
        ObstructionKind::from_tag(&s.trim().to_ascii_uppercase(), None)
            .ok_or_else(|| CatalogueError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Minimal,
    Auxiliary,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogueError {
    #[error("fan(k) needs k >= 2, got {0}")]
    FanTooShort(usize),
    #[error("unknown obstruction kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub kind: ObstructionKind,
    pub role: Role,
    pub graph: Graph,
}

// Vertex labels follow the configurations used in the structural
// arguments: F5 and F6 are labelled so that vertex i here is vertex i + 1
// in the case analyses, F4 so that vertex i is v_i.
fn edge_list(kind: ObstructionKind) -> (usize, &'static [(usize, usize)]) {
    match kind {
        ObstructionKind::F0 => (6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]),
        ObstructionKind::F01 => (6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)]),
        ObstructionKind::F02 => {
            (6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (0, 4)])
        }
        // K3 + K2
        ObstructionKind::F1 => (5, &[(0, 1), (0, 2), (1, 2), (3, 4)]),
        // net: triangle with a pendant at each corner
        ObstructionKind::F2 => (6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
        // triangle with two-edge legs at two corners
        ObstructionKind::F3 => (7, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (2, 5), (5, 6)]),
        // apex 0 over the path 6-1-2-5, pendants 3 at 1 and 4 at 2
        ObstructionKind::F4 => (
            7,
            &[(0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (2, 4), (2, 5), (1, 6)],
        ),
        // 3-sun: central triangle {1, 3, 5}, ears 0, 2, 4
        ObstructionKind::F5 => (
            6,
            &[(0, 1), (0, 5), (1, 2), (1, 3), (1, 5), (2, 3), (3, 4), (3, 5), (4, 5)],
        ),
        // diamond {0, 1, 4, 5} on the edge 1-4, ears 3 on 0-4 and 2 on 1-5
        ObstructionKind::F6 => (
            6,
            &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (1, 5), (2, 5), (3, 4), (4, 5)],
        ),
        ObstructionKind::F7 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ObstructionKind::Fan(_) => unreachable!("fans are generated"),
    }
}

/// The fan with path `w0 .. w(2k+1)` on vertices `0 ..= 2k+1` and apex
/// `2k + 2` adjacent to `w1 .. w(2k)`.
pub fn fan(k: usize) -> Result<Graph, CatalogueError> {
    if k < 2 {
        return Err(CatalogueError::FanTooShort(k));
    }
    let len = 2 * k + 2;
    let apex = len;
    let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
    edges.extend((1..len - 1).map(|i| (i, apex)));
    Ok(Graph::from_edges(len + 1, &edges).expect("fan edges are valid"))
}

/// Auxiliary graphs first, then F1..F7.
pub fn catalogue() -> Vec<CatalogueEntry> {
    ObstructionKind::AUXILIARY
        .into_iter()
        .chain(ObstructionKind::FINITE)
        .map(|kind| CatalogueEntry {
            kind,
            role: kind.role(),
            graph: kind.graph().expect("finite kinds always build"),
        })
        .collect()
}

/// Searches `g` for an induced member of the obstruction family: F1..F7
/// in order, then fans by increasing `k` while they fit.
pub fn find_obstruction_by_scan(g: &Graph) -> Option<(ObstructionKind, VertexSet)> {
    let fans = (2..).take_while(|k| 2 * k + 3 <= g.n()).map(ObstructionKind::Fan);
    ObstructionKind::FINITE.into_iter().chain(fans).find_map(|kind| {
        let h = kind.graph().expect("kinds in the scan are valid");
        contains_induced(g, &h).map(|s| (kind, s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::is_isomorphic;

    #[test]
    fn fan_two_shape() {
        let f = fan(2).unwrap();
        assert_eq!(f.n(), 7);
        assert_eq!(f.edge_count(), 9);
        assert_eq!(f.degree(6), 4);
        assert_eq!((f.degree(0), f.degree(5)), (1, 1));
        assert_eq!(fan(1), Err(CatalogueError::FanTooShort(1)));
    }

    #[test]
    fn fixed_members() {
        let f7 = ObstructionKind::F7.graph().unwrap();
        assert_eq!(f7, Graph::complete(4));
        let f1 = ObstructionKind::F1.graph().unwrap();
        assert!(is_isomorphic(&f1, &Graph::complete(3).disjoint_union(&Graph::complete(2))));
        let f0 = ObstructionKind::F0.graph().unwrap();
        assert!(is_isomorphic(&f0, &Graph::complete(3).disjoint_union(&Graph::complete(3))));
    }

    #[test]
    fn orders_of_members() {
        let sizes: Vec<usize> = catalogue().iter().map(|e| e.graph.n()).collect();
        assert_eq!(sizes, vec![6, 6, 6, 5, 6, 7, 7, 6, 6, 4]);
    }

    #[test]
    fn k5_contains_f7() {
        let (kind, s) = find_obstruction_by_scan(&Graph::complete(5)).unwrap();
        assert_eq!(kind, ObstructionKind::F7);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn fan_plus_isolated_vertex() {
        let g = fan(2).unwrap().disjoint_union(&Graph::empty(1));
        let (kind, s) = find_obstruction_by_scan(&g).unwrap();
        assert_eq!(kind, ObstructionKind::Fan(2));
        assert_eq!(s.as_slice(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Fan(3)".parse(), Ok(ObstructionKind::Fan(3)));
        assert_eq!("fan4".parse(), Ok(ObstructionKind::Fan(4)));
        assert_eq!("f6".parse(), Ok(ObstructionKind::F6));
        assert_eq!("F01".parse(), Ok(ObstructionKind::F01));
        assert_eq!("Fan1".parse::<ObstructionKind>(), Err(CatalogueError::FanTooShort(1)));
        assert!("F9".parse::<ObstructionKind>().is_err());
        assert_eq!(ObstructionKind::from_tag("Fan", Some(5)), Some(ObstructionKind::Fan(5)));
        assert_eq!(ObstructionKind::from_tag("F2", Some(5)), None);
        assert_eq!(ObstructionKind::Fan(5).to_string(), "Fan(5)");
    }
}
