//! Browser bindings: each operation returns a JSON document describing
//! the graph and its certificate, ready for drawing.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use m1part::catalogue::ObstructionKind;
use m1part::chordal::random_chordal;
use m1part::solver::{check_certificate, solve_certifying, SolveError};
use m1part::{parse_auto, to_graph6, Graph};

/// Largest graph the demo will draw.
pub const MAX_N: usize = 400;

fn describe(g: &Graph, label: String) -> Result<String, String> {
    let (certificate, hole) = match solve_certifying(g) {
        Ok(c) => {
            check_certificate(g, &c).map_err(|e| e.to_string())?;
            (serde_json::to_value(&c).map_err(|e| e.to_string())?, Value::Null)
        }
        Err(SolveError::NotChordal { hole }) => (Value::Null, json!(hole)),
        Err(e) => return Err(e.to_string()),
    };
    Ok(json!({
        "label": label,
        "n": g.n(),
        "edges": g.edges(),
        "graph6": to_graph6(g),
        "certificate": certificate,
        "hole": hole,
    })
    .to_string())
}

/// Certifies a graph given as graph6 or as an edge list.
pub fn certify_text(input: &str) -> Result<String, String> {
    let g = parse_auto(input).map_err(|e| e.to_string())?;
    if g.n() > MAX_N {
        return Err(format!("{} vertices is more than the demo draws ({MAX_N})", g.n()));
    }
    describe(&g, "input".into())
}

/// Generates a random connected chordal graph and certifies it.
pub fn random_text(n: usize, attach_bias: f64, seed: u32) -> Result<String, String> {
    if n > MAX_N {
        return Err(format!("n = {n} is more than the demo draws ({MAX_N})"));
    }
    let g = random_chordal(n, attach_bias, u64::from(seed)).map_err(|e| e.to_string())?;
    describe(&g, format!("random n={n} bias={attach_bias} seed={seed}"))
}

/// A catalogue member (`F1`..`F7`, `F0`, `F01`, `F02`, `Fan(k)`) and its
/// certificate.
pub fn catalogue_text(kind: &str) -> Result<String, String> {
    let kind: ObstructionKind = kind.parse().map_err(|e: m1part::catalogue::CatalogueError| e.to_string())?;
    let g = kind.graph().map_err(|e| e.to_string())?;
    if g.n() > MAX_N {
        return Err(format!("{kind} is too large to draw"));
    }
    describe(&g, kind.to_string())
}

#[wasm_bindgen]
pub fn certify(input: &str) -> Result<String, JsValue> {
    certify_text(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn random(n: usize, attach_bias: f64, seed: u32) -> Result<String, JsValue> {
    random_text(n, attach_bias, seed).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn catalogue(kind: &str) -> Result<String, JsValue> {
    catalogue_text(kind).map_err(|e| JsValue::from_str(&e))
}
