use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use m1part::catalogue::{catalogue, Role};
use m1part::format::{parse_auto, to_dot, to_edge_list, to_graph6};
use m1part::harness::{self, RunReport, DEFAULT_ATTACH_BIAS};
use m1part::pattern::{solve, Pattern};
use m1part::solver::{check_certificate, solve_certifying, M1Certificate, SolveError};
use m1part::{find_obstruction_by_scan, Graph, ObstructionKind, VertexSet};

const ENUMERATE_GUARDRAIL: usize = 8;

/// Certifying M1 partition solver for chordal graphs.
///
/// Exit codes: 0 partitionable / no failures, 1 obstruction / failures,
/// 2 input error or not chordal.
#[derive(Parser)]
#[command(name = "m1part", version)]
struct Cli {
    /// Output format for commands that print graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Fall back to the brute-force oracle on non-chordal input.
    #[arg(long, global = true)]
    force_oracle: bool,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide partitionability and print the certificate as JSON.
    Check { input: Option<PathBuf> },
    /// Check a certificate file against a graph.
    Verify { certificate: PathBuf, input: Option<PathBuf> },
    /// Scan for an induced member of the obstruction family.
    Obstruction { input: Option<PathBuf> },
    /// Brute-force partition under an arbitrary pattern.
    Solve {
        #[arg(long)]
        pattern: PathBuf,
        input: Option<PathBuf>,
    },
    /// List connected chordal graphs, or verify the characterization on them.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Certify random connected chordal graphs.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ATTACH_BIAS)]
        bias: f64,
    },
    /// Check minimal-obstruction status of catalogue kinds.
    Minimality {
        /// Kinds such as F3, Fan(4) or fan4. Default: F1..F7 and fans 2..5.
        kinds: Vec<String>,
    },
    /// Print the catalogue.
    Catalogue {
        #[arg(long, default_value_t = 5)]
        fan_max: usize,
    },
    /// Re-encode a graph in the chosen format.
    Convert { input: Option<PathBuf> },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let text = read_input(path)?;
    parse_auto(&text).context("parsing graph")
}

fn render(g: &Graph, format: Format, name: &str, highlight: Option<&VertexSet>) -> String {
    match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::Edgelist => to_edge_list(g),
        Format::Dot => to_dot(g, name, highlight),
    }
}

fn print_report(r: &RunReport, json: bool) -> u8 {
    eprintln!("wall time: {:.3}s", r.wall_time.as_secs_f64());
    if json {
        println!("{}", r.to_json());
    } else {
        println!("{}: {} graphs, {} partitionable, {} obstructed", r.command, r.graphs, r.partitionable, r.obstructed);
        for (n, c) in &r.counts_by_n {
            println!("  n={n}: {c}");
        }
        for (k, c) in &r.witness_kinds {
            println!("  witness {k}: {c}");
        }
        for f in &r.failures {
            println!("FAIL {} {:?} {}", f.graph6, f.kind, f.detail);
        }
        println!("{}", if r.ok() { "ok" } else { "FAILED" });
    }
    u8::from(!r.ok())
}

fn check(cli: &Cli, input: Option<&Path>) -> Result<u8> {
    let g = read_graph(input)?;
    match solve_certifying(&g) {
        Ok(cert) => {
            println!("{}", serde_json::to_string(&cert)?);
            Ok(u8::from(!cert.is_yes()))
        }
        Err(SolveError::NotChordal { hole }) if cli.force_oracle => {
            let parts = solve(&g, &Pattern::m1()).map(|a| a.parts(3));
            let yes = parts.is_some();
            let out = json!({
                "decision": if yes { "yes" } else { "no" },
                "parts": parts,
                "witness": null,
                "hole": hole,
            });
            println!("{out}");
            Ok(u8::from(!yes))
        }
        Err(SolveError::NotChordal { hole }) => {
            println!("{}", json!({ "error": "not chordal", "hole": hole }));
            Ok(2)
        }
        Err(e) => bail!(e),
    }
}

fn verify(certificate: &Path, input: Option<&Path>) -> Result<u8> {
    let text = fs::read_to_string(certificate).with_context(|| format!("reading {}", certificate.display()))?;
    let cert: M1Certificate = serde_json::from_str(&text).context("parsing certificate")?;
    let g = read_graph(input)?;
    match check_certificate(&g, &cert) {
        Ok(()) => {
            println!("valid");
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(1)
        }
    }
}

fn obstruction(cli: &Cli, input: Option<&Path>) -> Result<u8> {
    let g = read_graph(input)?;
    let found = find_obstruction_by_scan(&g);
    if cli.format == Format::Dot {
        print!("{}", render(&g, Format::Dot, "g", found.as_ref().map(|(_, s)| s)));
    } else if cli.json {
        let w = found.as_ref().map(|(k, s)| json!({ "kind": k.tag(), "k": fan_k(*k), "vertices": s }));
        println!("{}", json!({ "obstruction": w }));
    } else {
        match &found {
            Some((k, s)) => println!("{k} {:?}", s.as_slice()),
            None => println!("none"),
        }
    }
    Ok(u8::from(found.is_some()))
}

fn fan_k(k: ObstructionKind) -> Option<usize> {
    match k {
        ObstructionKind::Fan(k) => Some(k),
        _ => None,
    }
}

fn solve_pattern(pattern: &Path, input: Option<&Path>) -> Result<u8> {
    let text = fs::read_to_string(pattern).with_context(|| format!("reading {}", pattern.display()))?;
    let p: Pattern = text.parse().context("parsing pattern")?;
    let g = read_graph(input)?;
    let parts = solve(&g, &p).map(|a| a.parts(p.parts()));
    let yes = parts.is_some();
    println!("{}", json!({ "decision": if yes { "yes" } else { "no" }, "parts": parts }));
    Ok(u8::from(!yes))
}

fn enumerate(cli: &Cli, max_n: usize, verify: bool) -> Result<u8> {
    if max_n > ENUMERATE_GUARDRAIL {
        bail!("--max-n {max_n} is above the guardrail of {ENUMERATE_GUARDRAIL}");
    }
    if verify {
        let r = harness::enumerate_verify(max_n)?;
        return Ok(print_report(&r, cli.json));
    }
    for (i, g) in m1part::enumerate::enumerate_connected_chordal(max_n)?.iter().enumerate() {
        print!("{}", render(g, cli.format, &format!("g{i}"), None));
    }
    Ok(0)
}

fn minimality(cli: &Cli, kinds: &[String]) -> Result<u8> {
    let kinds = if kinds.is_empty() {
        harness::minimal_kinds(5)
    } else {
        kinds
            .iter()
            .map(|s| s.parse::<ObstructionKind>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let r = harness::minimality(&kinds);
    if !cli.json {
        for k in &kinds {
            let bad = r.failures.iter().any(|f| f.detail == k.to_string());
            let role = match k.role() {
                Role::Minimal => "minimal",
                Role::Auxiliary => "not minimal",
            };
            println!("{k}: {}{role}", if bad { "FAIL expected " } else { "" });
        }
    }
    Ok(print_report(&r, cli.json))
}

fn print_catalogue(cli: &Cli, fan_max: usize) -> Result<u8> {
    let mut entries: Vec<(ObstructionKind, Role, Graph)> =
        catalogue().into_iter().map(|e| (e.kind, e.role, e.graph)).collect();
    for k in 2..=fan_max {
        let kind = ObstructionKind::Fan(k);
        entries.push((kind, kind.role(), kind.graph()?));
    }
    if cli.json {
        let list: Vec<_> = entries
            .iter()
            .map(|(k, role, g)| {
                json!({
                    "kind": k.tag(),
                    "k": fan_k(*k),
                    "role": role,
                    "n": g.n(),
                    "edges": g.edges(),
                    "graph6": to_graph6(g),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&list)?);
        return Ok(0);
    }
    for (k, _, g) in &entries {
        let name = k.to_string().replace(['(', ')'], "");
        match cli.format {
            Format::Graph6 => println!("{k}\t{}", to_graph6(g)),
            f => print!("{}", render(g, f, &name, None)),
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Check { input } => check(cli, input.as_deref()),
        Command::Verify { certificate, input } => verify(certificate, input.as_deref()),
        Command::Obstruction { input } => obstruction(cli, input.as_deref()),
        Command::Solve { pattern, input } => solve_pattern(pattern, input.as_deref()),
        Command::Enumerate { max_n, verify } => enumerate(cli, *max_n, *verify),
        Command::Random { n, trials, seed, bias } => {
            let r = harness::random_validate(*n, *trials, *seed, *bias)?;
            Ok(print_report(&r, cli.json))
        }
        Command::Minimality { kinds } => minimality(cli, kinds),
        Command::Catalogue { fan_max } => print_catalogue(cli, *fan_max),
        Command::Convert { input } => {
            let g = read_graph(input.as_deref())?;
            print!("{}", render(&g, cli.format, "g", None));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
