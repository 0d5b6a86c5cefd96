//! The three constructive cases, by size of the bipartizer set of a
//! connected, chordal, non-bipartite graph. Each either colours the
//! graph or names the induced obstruction that blocks the colouring.
//!
//! Part 0 is the unconstrained independent set; parts 1 and 2 are the
//! completely adjacent pair.

use super::tree::RootedTree;
use super::{Colouring, M1Certificate, SolveError};
use crate::catalogue::ObstructionKind;
use crate::graph::Graph;

fn triangle_avoiding(g: &Graph, v: usize) -> Result<[usize; 3], SolveError> {
    g.triangles()
        .into_iter()
        .find(|t| !t.contains(&v))
        .ok_or_else(|| SolveError::Internal(format!("no triangle avoids vertex {v}")))
}

/// Exactly one triangle `b`; the rest hangs off its corners as trees.
pub fn case1(g: &Graph, b: [usize; 3]) -> Result<M1Certificate, SolveError> {
    let mut b = b;
    b.sort_unstable();
    if !g.is_clique(&b) {
        return Err(SolveError::Precondition(format!("{b:?} is not a triangle")));
    }
    let trees: Vec<RootedTree> = (0..3)
        .map(|i| {
            let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| b[j]).collect();
            RootedTree::grow(g, b[i], &others)
        })
        .collect();

    if trees.iter().all(|t| t.height() >= 1) {
        let feet = trees.iter().map(|t| t.layer(1)[0]);
        return Ok(M1Certificate::no(ObstructionKind::F2, b.into_iter().chain(feet)));
    }
    let top = (0..3).find(|&i| trees[i].height() == 0).expect("some tree is trivial");
    let mut rest: Vec<usize> = (0..3).filter(|&i| i != top).collect();
    rest.sort_by_key(|&i| (std::cmp::Reverse(trees[i].height()), b[i]));
    let (tall, short) = (&trees[rest[0]], &trees[rest[1]]);

    if short.height() > 1 {
        let legs = tall.branch(2).into_iter().chain(short.branch(2));
        return Ok(M1Certificate::no(ObstructionKind::F3, b.into_iter().chain(legs)));
    }
    if tall.height() > 2 {
        let far = tall.branch(3);
        return Ok(M1Certificate::no(ObstructionKind::F1, b.into_iter().chain(far[..2].iter().copied())));
    }

    let mut c = Colouring::new(g.n());
    c.set(b[top], 0)?;
    c.set(tall.root, 2)?;
    c.set(short.root, 1)?;
    c.set_all(short.layer(1), 0)?;
    c.set_all(tall.layer(1), 1)?;
    c.set_all(tall.layer(2), 0)?;
    c.finish()
}

/// Every triangle contains the edge `b`; the apexes are the common
/// neighbours of its ends.
pub fn case2(g: &Graph, b: [usize; 2]) -> Result<M1Certificate, SolveError> {
    let [x, y] = if b[0] < b[1] { b } else { [b[1], b[0]] };
    if !g.has_edge(x, y) {
        return Err(SolveError::Precondition(format!("{x} and {y} are not adjacent")));
    }
    let apexes: Vec<usize> = g.neighbors(x).filter(|&v| g.has_edge(v, y)).collect();
    if apexes.len() < 2 {
        return Err(SolveError::Precondition(format!(
            "edge {x}-{y} lies in {} triangles, need at least 2",
            apexes.len()
        )));
    }
    let side = |root: usize, other: usize| {
        let mut blocked = apexes.clone();
        blocked.push(other);
        RootedTree::grow(g, root, &blocked)
    };
    let (tx, ty) = (side(x, y), side(y, x));
    let apex_trees: Vec<RootedTree> = apexes.iter().map(|&a| RootedTree::grow(g, a, &[x, y])).collect();

    if let Some(t) = apex_trees.iter().find(|t| t.height() >= 2) {
        let other = *apexes.iter().find(|&&a| a != t.root).expect("two apexes");
        let leg = t.branch(2);
        return Ok(M1Certificate::no(ObstructionKind::F1, [x, y, other].into_iter().chain(leg)));
    }
    // ties keep the lower id on the tall side
    let (tall, short) = if ty.height() > tx.height() { (&ty, &tx) } else { (&tx, &ty) };
    let far_end = |tall: &RootedTree| {
        let far = tall.branch(3);
        M1Certificate::no(ObstructionKind::F1, [x, y, apexes[0], far[0], far[1]])
    };

    let mut c = Colouring::new(g.n());
    if let Some(t) = apex_trees.iter().find(|t| t.height() == 1) {
        if tx.height() >= 1 && ty.height() >= 1 {
            let feet = [t.root, t.layer(1)[0], tx.layer(1)[0], ty.layer(1)[0]];
            return Ok(M1Certificate::no(ObstructionKind::F2, [x, y].into_iter().chain(feet)));
        }
        if tall.height() > 2 {
            return Ok(far_end(tall));
        }
        c.set(tall.root, 2)?;
        c.set(short.root, 0)?;
        c.set_all(&apexes, 1)?;
        for t in &apex_trees {
            // pendants of apexes are not adjacent to the part-2 vertex
            c.set_all(t.layer(1), 0)?;
        }
    } else {
        if short.height() >= 2 {
            let legs = tall.branch(2).into_iter().chain(short.branch(2));
            return Ok(M1Certificate::no(ObstructionKind::F3, [x, y, apexes[0]].into_iter().chain(legs)));
        }
        if tall.height() > 2 {
            return Ok(far_end(tall));
        }
        c.set(tall.root, 2)?;
        c.set(short.root, 1)?;
        c.set_all(&apexes, 0)?;
        c.set_all(short.layer(1), 0)?;
    }
    c.set_all(tall.layer(1), 1)?;
    c.set_all(tall.layer(2), 0)?;
    c.finish()
}

/// Every triangle contains `v0`, and no other vertex is in all of them.
pub fn case3(g: &Graph, v0: usize) -> Result<M1Certificate, SolveError> {
    if v0 >= g.n() {
        return Err(SolveError::Precondition(format!("vertex {v0} out of range")));
    }
    let layers = RootedTree::grow(g, v0, &[]);
    if layers.height() >= 3 {
        let path = layers.branch(3);
        let (v3, v2, v1) = (path[0], path[1], path[2]);
        let a = triangle_avoiding(g, v1)?;
        return Ok(M1Certificate::no(ObstructionKind::F1, a.into_iter().chain([v2, v3])));
    }
    let l1 = layers.layer(1).to_vec();
    let l2 = layers.layer(2).to_vec();
    let mut in_l2 = vec![false; g.n()];
    for &v in &l2 {
        in_l2[v] = true;
    }
    let foot = |v: usize| g.neighbors(v).find(|&u| in_l2[u]);

    // adjacent first-layer vertices that both reach the second layer
    for &v1 in &l1 {
        for v2 in g.neighbors(v1).filter(|&u| u > v1 && l1.binary_search(&u).is_ok()) {
            let (Some(v3), Some(v4)) = (foot(v1), foot(v2)) else { continue };
            return adjacent_feet(g, [v0, v1, v2, v3, v4]);
        }
    }

    let mut c = Colouring::new(g.n());
    c.set(v0, 2)?;
    c.set_all(&l2, 0)?;
    let mut blocked = l2.clone();
    blocked.push(v0);
    let mut done = vec![false; g.n()];
    for &s in &l1 {
        if done[s] {
            continue;
        }
        let comp = RootedTree::grow(g, s, &blocked);
        let depth_parity = |v: usize| comp.layers.iter().position(|l| l.contains(&v)).expect("member") % 2;
        let mut attached: Vec<usize> = comp.members().filter(|&v| foot(v).is_some()).collect();
        attached.sort_unstable();
        let side = attached.first().map(|&a| depth_parity(a));
        if let Some(&a) = attached.first() {
            if let Some(&b) = attached.iter().find(|&&v| depth_parity(v) != depth_parity(a)) {
                return Ok(odd_fan(g, v0, a, b, &blocked, &foot));
            }
        }
        let upper = side.unwrap_or(0);
        for v in comp.members() {
            done[v] = true;
            c.set(v, if depth_parity(v) == upper { 1 } else { 0 })?;
        }
    }
    c.finish()
}

/// `v1 v2` adjacent in the first layer with second-layer neighbours `v3`,
/// `v4`. A triangle avoiding `v1` either misses `v2` (net) or passes
/// through `v2`; symmetrically for `v2`. Both through gives F4.
fn adjacent_feet(g: &Graph, [v0, v1, v2, v3, v4]: [usize; 5]) -> Result<M1Certificate, SolveError> {
    let loose = |t: [usize; 3]| {
        t.into_iter()
            .find(|&x| x != v0 && !g.has_edge(x, v1) && !g.has_edge(x, v2))
            .ok_or_else(|| SolveError::Internal(format!("triangle {t:?} has no vertex free of {v1}, {v2}")))
    };
    let a = triangle_avoiding(g, v1)?;
    if !a.contains(&v2) {
        let x = loose(a)?;
        return Ok(M1Certificate::no(ObstructionKind::F2, [v0, v1, v2, v3, v4, x]));
    }
    let v5 = *a.iter().find(|&&u| u != v0 && u != v2).expect("third corner");
    let b = triangle_avoiding(g, v2)?;
    if !b.contains(&v1) {
        let x = loose(b)?;
        return Ok(M1Certificate::no(ObstructionKind::F2, [v0, v1, v2, v3, v4, x]));
    }
    let v6 = *b.iter().find(|&&u| u != v0 && u != v1).expect("third corner");
    Ok(M1Certificate::no(ObstructionKind::F4, [v0, v1, v2, v3, v4, v5, v6]))
}

/// `a`, `b` attached first-layer vertices at odd distance in the same
/// component of the first layer: the path between them, one foot at each
/// end and the apex `v0` induce a fan.
fn odd_fan(
    g: &Graph,
    v0: usize,
    a: usize,
    b: usize,
    blocked: &[usize],
    foot: &impl Fn(usize) -> Option<usize>,
) -> M1Certificate {
    let from_a = RootedTree::grow(g, a, blocked);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = from_a.parent(cur);
        path.push(cur);
    }
    let k = path.len() / 2;
    let feet = [foot(a).expect("attached"), foot(b).expect("attached"), v0];
    M1Certificate::no(ObstructionKind::Fan(k), path.into_iter().chain(feet))
}
