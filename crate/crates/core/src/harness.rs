//! Batch verification over graph collections, with reports whose JSON
//! depends only on the inputs.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalogue::{find_obstruction_by_scan, ObstructionKind, Role};
use crate::chordal::{random_chordal, ChordalError};
use crate::enumerate::{enumerate_connected_chordal, EnumerateError};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::par;
use crate::pattern::{is_minimal_obstruction, solve, Pattern};
use crate::solver::{check_certificate, solve_certifying, M1Certificate};

pub const DEFAULT_ATTACH_BIAS: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    SolverError,
    BadCertificate,
    OracleDisagrees,
    ScanDisagrees,
    NotMinimal,
    UnexpectedlyMinimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub certificates_verified: usize,
    pub certifying_vs_oracle: usize,
    pub certifying_vs_scan: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    pub graphs: usize,
    pub counts_by_n: BTreeMap<usize, usize>,
    pub partitionable: usize,
    pub obstructed: usize,
    pub witness_kinds: BTreeMap<String, usize>,
    pub agreement: Agreement,
    pub failures: Vec<Failure>,
    /// Kept out of the JSON so that reruns are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            ..RunReport::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy)]
struct Checks {
    oracle: bool,
    scan: bool,
}

#[derive(Debug, Default)]
struct Outcome {
    n: usize,
    decision: Option<bool>,
    witness: Option<String>,
    verified: bool,
    oracle_agrees: bool,
    scan_agrees: bool,
    failures: Vec<Failure>,
}

fn examine(g: &Graph, checks: Checks) -> Outcome {
    let mut out = Outcome {
        n: g.n(),
        ..Outcome::default()
    };
    let fail = |kind, detail: String| Failure {
        graph6: to_graph6(g),
        kind,
        detail,
    };
    let cert = match solve_certifying(g) {
        Ok(c) => c,
        Err(e) => {
            out.failures.push(fail(FailureKind::SolverError, e.to_string()));
            return out;
        }
    };
    let yes = cert.is_yes();
    out.decision = Some(yes);
    if let M1Certificate::No(w) = &cert {
        out.witness = Some(w.kind.to_string());
    }
    match check_certificate(g, &cert) {
        Ok(()) => out.verified = true,
        Err(e) => out.failures.push(fail(FailureKind::BadCertificate, e.to_string())),
    }
    if checks.oracle {
        let oracle = solve(g, &Pattern::m1()).is_some();
        out.oracle_agrees = oracle == yes;
        if !out.oracle_agrees {
            out.failures.push(fail(
                FailureKind::OracleDisagrees,
                format!("certifying says {yes}, oracle says {oracle}"),
            ));
        }
    }
    if checks.scan {
        let free = find_obstruction_by_scan(g);
        out.scan_agrees = free.is_none() == yes;
        if !out.scan_agrees {
            out.failures.push(fail(
                FailureKind::ScanDisagrees,
                format!("certifying says {yes}, scan found {:?}", free.map(|(k, _)| k.to_string())),
            ));
        }
    }
    out
}

fn aggregate(command: String, outcomes: Vec<Outcome>, start: Instant) -> RunReport {
    let mut r = RunReport::new(command);
    for o in outcomes {
        r.graphs += 1;
        *r.counts_by_n.entry(o.n).or_default() += 1;
        match o.decision {
            Some(true) => r.partitionable += 1,
            Some(false) => r.obstructed += 1,
            None => {}
        }
        if let Some(k) = o.witness {
            *r.witness_kinds.entry(k).or_default() += 1;
        }
        r.agreement.certificates_verified += usize::from(o.verified);
        r.agreement.certifying_vs_oracle += usize::from(o.oracle_agrees);
        r.agreement.certifying_vs_scan += usize::from(o.scan_agrees);
        r.failures.extend(o.failures);
    }
    r.wall_time = start.elapsed();
    r
}

/// Certifies every graph and checks the certificate; optionally compares
/// with the brute-force oracle and the obstruction scan.
pub fn verify_graphs(command: &str, graphs: &[Graph], oracle: bool, scan: bool) -> RunReport {
    let start = Instant::now();
    let checks = Checks { oracle, scan };
    let outcomes = par::map(graphs, |g| examine(g, checks));
    aggregate(command.to_string(), outcomes, start)
}

/// All connected chordal graphs on at most `max_n` vertices: certifying
/// decision, oracle decision and scan verdict must coincide.
pub fn enumerate_verify(max_n: usize) -> Result<RunReport, EnumerateError> {
    let start = Instant::now();
    let corpus = enumerate_connected_chordal(max_n)?;
    let mut r = verify_graphs(&format!("enumerate --max-n {max_n} --verify"), &corpus, true, true);
    r.wall_time = start.elapsed();
    Ok(r)
}

/// The per-trial generator seeds derived from `seed`.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.next_u64()).collect()
}

/// Random connected chordal graphs on `n` vertices; every certificate
/// must verify. No oracle at this size.
pub fn random_validate(n: usize, trials: usize, seed: u64, attach_bias: f64) -> Result<RunReport, ChordalError> {
    let start = Instant::now();
    let graphs = trial_seeds(seed, trials)
        .into_iter()
        .map(|s| random_chordal(n, attach_bias, s))
        .collect::<Result<Vec<_>, _>>()?;
    let cmd = format!("random --n {n} --trials {trials} --seed {seed}");
    let outcomes = par::map(&graphs, |g| examine(g, Checks { oracle: false, scan: false }));
    Ok(aggregate(cmd, outcomes, start))
}

/// Minimal kinds must be minimal obstructions; auxiliary kinds must not.
pub fn minimality(kinds: &[ObstructionKind]) -> RunReport {
    let start = Instant::now();
    let names: Vec<String> = kinds.iter().map(ToString::to_string).collect();
    let mut r = RunReport::new(format!("minimality {}", names.join(" ")));
    let verdicts = par::map(kinds, |&k| {
        let g = k.graph().expect("kinds are valid");
        let minimal = is_minimal_obstruction(&g, &Pattern::m1());
        (k, g, minimal)
    });
    for (k, g, minimal) in verdicts {
        r.graphs += 1;
        *r.counts_by_n.entry(g.n()).or_default() += 1;
        let expected = k.role() == Role::Minimal;
        if minimal != expected {
            r.failures.push(Failure {
                graph6: to_graph6(&g),
                kind: if expected {
                    FailureKind::NotMinimal
                } else {
                    FailureKind::UnexpectedlyMinimal
                },
                detail: k.to_string(),
            });
        }
    }
    r.wall_time = start.elapsed();
    r
}

/// F1..F7 and fans 2..=`fan_max`.
pub fn minimal_kinds(fan_max: usize) -> Vec<ObstructionKind> {
    ObstructionKind::FINITE
        .into_iter()
        .chain((2..=fan_max).map(ObstructionKind::Fan))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let r = enumerate_verify(3).unwrap();
        assert!(r.ok());
        assert_eq!((r.graphs, r.partitionable), (4, 4));
        let r = enumerate_verify(4).unwrap();
        assert!(r.ok());
        assert_eq!(r.obstructed, 1);
        assert_eq!(r.witness_kinds.get("F7"), Some(&1));
        assert_eq!(r.agreement.certifying_vs_oracle, 9);
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_validate(30, 20, 5, DEFAULT_ATTACH_BIAS).unwrap();
        let b = random_validate(30, 20, 5, DEFAULT_ATTACH_BIAS).unwrap();
        assert!(a.ok());
        assert_eq!(a.to_json(), b.to_json());
        let one = random_validate(1, 1, 0, DEFAULT_ATTACH_BIAS).unwrap();
        assert_eq!(one.partitionable, 1);
    }

    #[test]
    fn minimality_roles() {
        assert!(minimality(&[ObstructionKind::F7, ObstructionKind::F0]).ok());
        assert_eq!(minimal_kinds(5).len(), 11);
    }
}
