//! Certifying solver for the M1 partition problem on chordal graphs.
//!
//! A yes-answer carries an assignment of every vertex to part 0, 1 or 2;
//! a no-answer carries a vertex set inducing a member of the obstruction
//! family. Both are cheap to check independently with
//! [`check_certificate`].
//!
//! The construction case-splits on the set of vertices whose deletion
//! leaves a bipartite graph (see [`bipartizer_set`]): empty, or one,
//! two or three vertices that lie in every triangle.

mod cases;
mod extract;
mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalogue::{ObstructionKind, Role};
use crate::chordal::{is_chordal, ChordalityCertificate};
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::pattern::{verify_assignment, Assignment, Pattern, PatternError, Violation};
use crate::search::is_isomorphic;

pub use cases::{case1, case2, case3};
pub use extract::extract_bipartizer_obstruction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not chordal; chordless cycle {hole:?}")]
    NotChordal { hole: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// The induced obstruction reported for a no-instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: ObstructionKind,
    pub vertices: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CertificateJson", try_from = "CertificateJson")]
pub enum M1Certificate {
    Yes(Assignment),
    No(Witness),
}

impl M1Certificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, M1Certificate::Yes(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            M1Certificate::No(w) => Some(w),
            M1Certificate::Yes(_) => None,
        }
    }

    pub(crate) fn no(kind: ObstructionKind, vertices: impl IntoIterator<Item = usize>) -> Self {
        M1Certificate::No(Witness {
            kind,
            vertices: VertexSet::new(vertices),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct WitnessJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CertificateJson {
    decision: String,
    parts: Option<Vec<Vec<usize>>>,
    witness: Option<WitnessJson>,
}

impl From<M1Certificate> for CertificateJson {
    fn from(c: M1Certificate) -> Self {
        match c {
            M1Certificate::Yes(a) => CertificateJson {
                decision: "yes".into(),
                parts: Some(a.parts(3)),
                witness: None,
            },
            M1Certificate::No(w) => CertificateJson {
                decision: "no".into(),
                parts: None,
                witness: Some(WitnessJson {
                    kind: w.kind.tag().into(),
                    k: match w.kind {
                        ObstructionKind::Fan(k) => Some(k),
                        _ => None,
                    },
                    vertices: w.vertices.as_slice().to_vec(),
                }),
            },
        }
    }
}

impl TryFrom<CertificateJson> for M1Certificate {
    type Error = String;

    fn try_from(j: CertificateJson) -> Result<Self, Self::Error> {
        match (j.decision.as_str(), j.parts, j.witness) {
            ("yes", Some(parts), None) => {
                let n = parts.iter().map(Vec::len).sum();
                Assignment::from_parts(n, &parts)
                    .map(M1Certificate::Yes)
                    .ok_or_else(|| "parts do not partition 0..n".to_string())
            }
            ("no", None, Some(w)) => {
                let kind = ObstructionKind::from_tag(&w.kind, w.k)
                    .ok_or_else(|| format!("unknown witness kind {:?} (k = {:?})", w.kind, w.k))?;
                Ok(M1Certificate::no(kind, w.vertices))
            }
            (d, _, _) => Err(format!("inconsistent certificate with decision {d:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("assignment is malformed: {0}")]
    Malformed(#[from] PatternError),
    #[error("assignment breaks M1: {0}")]
    Violation(Violation),
    #[error("{0} is auxiliary, not a minimal obstruction")]
    AuxiliaryKind(ObstructionKind),
    #[error("witness vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("witness vertices do not induce {0}")]
    NotInduced(ObstructionKind),
}

/// Independent check of a certificate against `g`.
pub fn check_certificate(g: &Graph, cert: &M1Certificate) -> Result<(), CertificateError> {
    match cert {
        M1Certificate::Yes(a) => match verify_assignment(g, &Pattern::m1(), a)? {
            None => Ok(()),
            Some(v) => Err(CertificateError::Violation(v)),
        },
        M1Certificate::No(w) => {
            if w.kind.role() == Role::Auxiliary {
                return Err(CertificateError::AuxiliaryKind(w.kind));
            }
            let sub = g.induced(&w.vertices).map_err(|_| {
                CertificateError::OutOfRange(w.vertices.as_slice().last().copied().unwrap_or(0))
            })?;
            let member = w.kind.graph().map_err(|_| CertificateError::NotInduced(w.kind))?;
            if is_isomorphic(&sub, &member) {
                Ok(())
            } else {
                Err(CertificateError::NotInduced(w.kind))
            }
        }
    }
}

/// All `v` such that `G - v` is bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartizerSet(pub VertexSet);

pub fn bipartizer_set(g: &Graph) -> BipartizerSet {
    BipartizerSet(VertexSet::new(
        (0..g.n()).filter(|&v| g.without_vertex(v).is_bipartite()),
    ))
}

/// Decides M1-partitionability of a chordal graph with a certificate.
pub fn solve_certifying(g: &Graph) -> Result<M1Certificate, SolveError> {
    if let ChordalityCertificate::Hole(hole) = is_chordal(g) {
        return Err(SolveError::NotChordal { hole });
    }
    certify_chordal(g)
}

/// [`solve_certifying`] without the chordality check.
pub(crate) fn certify_chordal(g: &Graph) -> Result<M1Certificate, SolveError> {
    if let Bipartition::Bipartite(colour) = g.bipartition() {
        return Ok(M1Certificate::Yes(Assignment(
            colour.into_iter().map(usize::from).collect(),
        )));
    }

    let comps = g.components();
    let main = comps
        .iter()
        .position(|c| c.len() >= 3 && !g.induced(c).expect("in range").is_bipartite())
        .ok_or_else(|| SolveError::Internal("non-bipartite graph without an odd component".into()))?;

    // Any edge outside the triangle-bearing component gives K3 + K2.
    let main_set = &comps[main];
    if let Some((u, v)) = g
        .edges()
        .into_iter()
        .find(|&(u, _)| !main_set.contains(u))
    {
        let t = g
            .triangles()
            .into_iter()
            .find(|t| main_set.contains(t[0]))
            .ok_or_else(|| SolveError::Internal("odd chordal component without a triangle".into()))?;
        return Ok(M1Certificate::no(ObstructionKind::F1, t.into_iter().chain([u, v])));
    }

    let members = main_set.as_slice();
    let sub = g.induced(main_set).expect("in range");
    let cert = if members.len() == g.n() {
        certify_connected(&sub)?
    } else {
        certify_connected(&sub)?.lift(g.n(), members)
    };
    Ok(cert)
}

impl M1Certificate {
    /// Maps a certificate of `G[members]` back to the host on `n`
    /// vertices; vertices outside `members` go to part 0.
    fn lift(self, n: usize, members: &[usize]) -> M1Certificate {
        match self {
            M1Certificate::Yes(a) => {
                let mut parts = vec![0; n];
                for (i, &v) in members.iter().enumerate() {
                    parts[v] = a.part(i);
                }
                M1Certificate::Yes(Assignment(parts))
            }
            M1Certificate::No(w) => M1Certificate::No(Witness {
                kind: w.kind,
                vertices: w.vertices.map(|i| members[i]),
            }),
        }
    }
}

/// Connected, chordal, non-bipartite input.
fn certify_connected(g: &Graph) -> Result<M1Certificate, SolveError> {
    let b = bipartizer_set(g).0;
    match *b.as_slice() {
        [] => {
            let w = extract_bipartizer_obstruction(g)?;
            Ok(M1Certificate::No(w))
        }
        [v0] => case3(g, v0),
        [v1, v2] => case2(g, [v1, v2]),
        [v0, v1, v2] => case1(g, [v0, v1, v2]),
        _ => Err(SolveError::Internal(format!(
            "non-bipartite chordal graph with {} bipartizing vertices",
            b.len()
        ))),
    }
}

/// Part assignment under construction; every vertex must be set once.
pub(crate) struct Colouring {
    part: Vec<Option<usize>>,
}

impl Colouring {
    pub fn new(n: usize) -> Self {
        Colouring { part: vec![None; n] }
    }

    pub fn set(&mut self, v: usize, part: usize) -> Result<(), SolveError> {
        match self.part[v] {
            Some(p) if p != part => Err(SolveError::Internal(format!(
                "vertex {v} coloured both {p} and {part}"
            ))),
            _ => {
                self.part[v] = Some(part);
                Ok(())
            }
        }
    }

    pub fn set_all(&mut self, vs: &[usize], part: usize) -> Result<(), SolveError> {
        vs.iter().try_for_each(|&v| self.set(v, part))
    }

    pub fn finish(self) -> Result<M1Certificate, SolveError> {
        let parts = self
            .part
            .iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| SolveError::Internal(format!("vertex {v} left uncoloured"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(M1Certificate::Yes(Assignment(parts)))
    }
}
