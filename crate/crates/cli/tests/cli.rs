use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_m1part"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the binary may exit before reading stdin, e.g. on a bad argument
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const FAN2: &str = "FhCJo";

#[test]
fn check_bipartite_star() {
    let o = run(&["check"], "D?{\n");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["witness"], serde_json::Value::Null);
    assert_eq!(v["parts"][2], serde_json::json!([]));
}

#[test]
fn check_fan() {
    let o = run(&["check"], FAN2);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["decision"], "no");
    assert_eq!(v["parts"], serde_json::Value::Null);
    assert_eq!(v["witness"]["kind"], "Fan");
    assert_eq!(v["witness"]["k"], 2);
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 7);
}

#[test]
fn check_non_chordal() {
    let o = run(&["check"], "Cr");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["hole"].as_array().unwrap().len(), 4);
    let forced = run(&["check", "--force-oracle"], "Cr");
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(json(&forced)["decision"], "yes");
}

#[test]
fn check_bad_input() {
    assert_eq!(run(&["check"], "B!").status.code(), Some(2));
    assert_eq!(run(&["check", "/no/such/file"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn check_edge_list_input() {
    let o = run(&["check"], "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"decision":"no","parts":null,"witness":{"kind":"F7","vertices":[0,1,2,3]}}"#
    );
}

#[test]
fn verify_round_trip() {
    let cert = stdout(&run(&["check"], FAN2));
    let good = scratch("fan_cert.json", &cert);
    let o = run(&["verify", good.to_str().unwrap()], FAN2);
    assert_eq!(o.status.code(), Some(0));
    let bad = scratch("bad_cert.json", r#"{"decision":"no","parts":null,"witness":{"kind":"F7","vertices":[0,1,2,3]}}"#);
    assert_eq!(run(&["verify", bad.to_str().unwrap()], FAN2).status.code(), Some(1));
    let junk = scratch("junk_cert.json", "{");
    assert_eq!(run(&["verify", junk.to_str().unwrap()], FAN2).status.code(), Some(2));
}

#[test]
fn obstruction_scan() {
    let o = run(&["obstruction", "--json"], FAN2);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["obstruction"]["kind"], "Fan");
    let free = run(&["obstruction"], "D?{");
    assert_eq!((free.status.code(), stdout(&free).trim()), (Some(0), "none"));
    let dot = run(&["obstruction", "--format", "dot"], "C~");
    assert!(stdout(&dot).contains("fillcolor"));
}

#[test]
fn solve_with_pattern() {
    let m1 = scratch("m1.txt", "0**\n*01\n*10\n");
    let o = run(&["solve", "--pattern", m1.to_str().unwrap()], "Bw");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["decision"], "yes");
    let two = scratch("k2.txt", "0*\n*0\n");
    assert_eq!(run(&["solve", "--pattern", two.to_str().unwrap()], "Bw").status.code(), Some(1));
    let bad = scratch("bad.txt", "0*\n10\n");
    assert_eq!(run(&["solve", "--pattern", bad.to_str().unwrap()], "Bw").status.code(), Some(2));
}

#[test]
fn enumerate_commands() {
    let o = run(&["enumerate", "--max-n", "3"], "");
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["enumerate", "--max-n", "5", "--verify", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["graphs"], 24);
    assert_eq!(v["failures"], serde_json::json!([]));
    let o = run(&["enumerate", "--max-n", "4", "--verify", "--json"], "");
    assert_eq!(json(&o)["witness_kinds"]["F7"], 1);
    assert_eq!(run(&["enumerate", "--max-n", "12"], "").status.code(), Some(2));
}

#[test]
fn random_is_reproducible() {
    let args = ["random", "--n", "40", "--trials", "30", "--seed", "9", "--json"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let one = run(&["random", "--n", "1", "--trials", "1", "--seed", "0", "--json"], "");
    assert_eq!(json(&one)["partitionable"], 1);
}

#[test]
fn minimality_and_catalogue() {
    let o = run(&["minimality", "F7", "Fan(4)", "F0"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("F0: not minimal"));
    assert_eq!(run(&["minimality", "F9"], "").status.code(), Some(2));
    let o = run(&["catalogue", "--fan-max", "3", "--json"], "");
    let list = json(&o);
    assert_eq!(list.as_array().unwrap().len(), 12);
    assert_eq!(list[0]["role"], "auxiliary");
    let o = run(&["catalogue", "--fan-max", "2"], "");
    assert!(stdout(&o).contains("F7\tC~"));
}

#[test]
fn convert_formats() {
    let o = run(&["convert", "--format", "edgelist"], "Bw");
    assert_eq!(stdout(&o), "3 3\n0 1\n0 2\n1 2\n");
    let o = run(&["convert"], "3 3\n0 1\n0 2\n1 2\n");
    assert_eq!(stdout(&o).trim(), "Bw");
    let o = run(&["convert", "--format", "dot"], "Bw");
    assert!(stdout(&o).contains("0 -- 1"));
}
