//! No vertex meets every triangle: some small union of triangles already
//! induces an obstruction.

use super::{SolveError, Witness};
use crate::catalogue::{find_obstruction_by_scan, ObstructionKind};
use crate::graph::{Graph, VertexSet};

type Tri = [usize; 3];

fn meet(a: &Tri, b: &Tri) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

fn witness(kind: ObstructionKind, vs: impl IntoIterator<Item = usize>) -> Witness {
    Witness {
        kind,
        vertices: VertexSet::new(vs),
    }
}

/// Searches the (constant-size) union `s` for an induced member of the
/// family.
fn resolve(g: &Graph, s: impl IntoIterator<Item = usize>) -> Result<Witness, SolveError> {
    let s = VertexSet::new(s);
    let sub = g.induced(&s).expect("triangle vertices are in range");
    let (kind, local) = find_obstruction_by_scan(&sub)
        .ok_or_else(|| SolveError::Internal(format!("{s:?} induces no obstruction")))?;
    Ok(witness(kind, local.iter().map(|i| s.as_slice()[i])))
}

/// Two vertex-disjoint triangles.
fn disjoint_pair(g: &Graph, a: Tri, b: Tri) -> Result<Witness, SolveError> {
    for (x, y) in [(a, b), (b, a)] {
        if let Some(&v) = x.iter().find(|&&v| y.iter().all(|&u| g.has_edge(v, u))) {
            return Ok(witness(ObstructionKind::F7, y.into_iter().chain([v])));
        }
    }
    let cross: Vec<(usize, usize)> = a
        .iter()
        .flat_map(|&u| b.iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    let rest = |t: Tri, v: usize| t.into_iter().filter(move |&u| u != v);
    match *cross.as_slice() {
        [] => Ok(witness(ObstructionKind::F1, a.into_iter().chain([b[0], b[1]]))),
        [(_, w)] => Ok(witness(ObstructionKind::F1, a.into_iter().chain(rest(b, w)))),
        [(u1, _), (u2, _)] if u1 == u2 => Ok(witness(ObstructionKind::F1, b.into_iter().chain(rest(a, u1)))),
        [(_, w1), (_, w2)] if w1 == w2 => Ok(witness(ObstructionKind::F1, a.into_iter().chain(rest(b, w1)))),
        [(u1, w1), (u2, w2)] => Err(SolveError::Internal(format!(
            "chordless cycle {u1} {w1} {w2} {u2} between triangles"
        ))),
        _ => resolve(g, a.into_iter().chain(b)),
    }
}

/// `a` and `b` share exactly the vertex `v0`.
fn corner_pair(g: &Graph, tri: &[Tri], a: Tri, b: Tri, v0: usize) -> Result<Witness, SolveError> {
    let c = *tri
        .iter()
        .find(|t| !t.contains(&v0))
        .ok_or_else(|| SolveError::Precondition(format!("vertex {v0} lies in every triangle")))?;
    if meet(&a, &c) == 0 {
        return disjoint_pair(g, a, c);
    }
    if meet(&b, &c) == 0 {
        return disjoint_pair(g, b, c);
    }
    resolve(g, a.into_iter().chain(b).chain(c))
}

/// For a connected chordal graph in which no vertex lies in every
/// triangle, returns an induced minimal obstruction.
pub fn extract_bipartizer_obstruction(g: &Graph) -> Result<Witness, SolveError> {
    let tri = g.triangles();
    let &a = tri
        .first()
        .ok_or_else(|| SolveError::Precondition("graph has no triangle".into()))?;
    if let Some(&d) = tri.iter().find(|t| meet(&a, t) == 0) {
        return disjoint_pair(g, a, d);
    }
    let mut avoiding = Vec::with_capacity(3);
    for v in a {
        let c = *tri
            .iter()
            .find(|t| !t.contains(&v))
            .ok_or_else(|| SolveError::Precondition(format!("vertex {v} lies in every triangle")))?;
        if meet(&a, &c) == 1 {
            let v0 = *a.iter().find(|u| c.contains(u)).expect("one shared vertex");
            return corner_pair(g, &tri, a, c, v0);
        }
        avoiding.push(c);
    }
    // every triangle found shares an edge with `a`
    let (t2, c) = (avoiding[0], avoiding[1]);
    match meet(&t2, &c) {
        1 => {
            let v0 = *t2.iter().find(|u| c.contains(u)).expect("one shared vertex");
            corner_pair(g, &tri, t2, c, v0)
        }
        _ => Ok(witness(ObstructionKind::F7, a.into_iter().chain(t2).chain(c))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::is_isomorphic;

    fn check(g: &Graph, expect: ObstructionKind) {
        let w = extract_bipartizer_obstruction(g).unwrap();
        assert_eq!(w.kind, expect);
        assert!(is_isomorphic(&g.induced(&w.vertices).unwrap(), &expect.graph().unwrap()));
    }

    #[test]
    fn k4_and_k5() {
        check(&Graph::complete(4), ObstructionKind::F7);
        check(&Graph::complete(5), ObstructionKind::F7);
    }

    #[test]
    fn sun_and_ears() {
        check(&ObstructionKind::F5.graph().unwrap(), ObstructionKind::F5);
        check(&ObstructionKind::F6.graph().unwrap(), ObstructionKind::F6);
    }

    #[test]
    fn two_triangles() {
        for kind in ObstructionKind::AUXILIARY {
            check(&kind.graph().unwrap(), ObstructionKind::F1);
        }
    }

    #[test]
    fn bowtie_with_bridge() {
        // triangles 0 1 2 and 2 3 4 share 2; triangle 4 5 6 avoids it
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        check(&g, ObstructionKind::F1);
    }

    #[test]
    fn needs_a_triangle() {
        assert!(matches!(
            extract_bipartizer_obstruction(&Graph::path(3)),
            Err(SolveError::Precondition(_))
        ));
    }
}
