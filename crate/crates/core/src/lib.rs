//! Certifying solver for the M1 matrix-partition problem on chordal
//! graphs, with a generic pattern oracle, the obstruction catalogue, and
//! enumeration tooling for small chordal graphs.

pub mod catalogue;
pub mod chordal;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod harness;
mod par;
pub mod pattern;
pub mod search;
pub mod solver;

pub use catalogue::{catalogue, fan, find_obstruction_by_scan, ObstructionKind};
pub use chordal::{is_chordal, random_chordal, ChordalityCertificate};
pub use format::{from_graph6, parse_auto, to_graph6};
pub use graph::{Graph, VertexSet};
pub use pattern::{solve, verify_assignment, Assignment, Pattern};
pub use solver::{bipartizer_set, check_certificate, solve_certifying, M1Certificate, SolveError, Witness};
