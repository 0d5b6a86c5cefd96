use m1part_wasm::{catalogue_text, certify_text, random_text};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn certify_yes_and_no() {
    let v = parse(&certify_text("Bw").unwrap());
    assert_eq!(v["certificate"]["decision"], "yes");
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    let v = parse(&certify_text("C~").unwrap());
    assert_eq!(v["certificate"]["witness"]["kind"], "F7");
}

#[test]
fn certify_reports_holes_and_errors() {
    let v = parse(&certify_text("Cr").unwrap());
    assert_eq!(v["certificate"], Value::Null);
    assert_eq!(v["hole"].as_array().unwrap().len(), 4);
    assert!(certify_text("B!").is_err());
}

#[test]
fn random_is_deterministic() {
    let a = random_text(25, 0.6, 4).unwrap();
    assert_eq!(a, random_text(25, 0.6, 4).unwrap());
    assert_eq!(parse(&a)["n"], 25);
    assert!(random_text(0, 0.6, 4).is_err());
    assert!(random_text(10_000, 0.6, 4).is_err());
}

#[test]
fn catalogue_members() {
    let v = parse(&catalogue_text("Fan(3)").unwrap());
    assert_eq!(v["certificate"]["witness"]["k"], 3);
    assert_eq!(v["n"], 9);
    assert!(catalogue_text("F9").is_err());
}
