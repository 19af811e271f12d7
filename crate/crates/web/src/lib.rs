//! WebAssembly bindings for the browser demo in `www/`. Every export takes
//! the group as `(family, m, n)` plus a diagram string and returns JSON text.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use superchar::diagrams::{cap_diagram, p_set};
use superchar::functors::{translate_euler, Functor};
use superchar::kgroup::{Basis, KElement};
use superchar::lattice::fmt_half;
use superchar::pims::pim_decomposition;
use superchar::{Family, SupergroupKind, WeightDiagram};

#[derive(Serialize)]
struct Vertex {
    pos: String,
    x: f64,
    label: String,
}

fn kind(family: &str, m: usize, n: usize) -> Result<SupergroupKind, String> {
    let f = Family::from_name(family).map_err(|e| e.to_string())?;
    SupergroupKind::new(f, m, n).map_err(|e| e.to_string())
}

fn parse(family: &str, m: usize, n: usize, diagram: &str) -> Result<WeightDiagram, String> {
    WeightDiagram::parse(kind(family, m, n)?, diagram).map_err(|e| e.to_string())
}

/// Occupied vertices with drawing coordinates; the tail vertex carries the
/// tail text.
fn vertices(d: &WeightDiagram) -> Vec<Vertex> {
    let mut out = Vec::new();
    let text = d.to_string();
    if let Some((tail, _)) = text.split_once(';') {
        let tail = tail.trim();
        if !tail.is_empty() && !tail.starts_with('@') {
            let t = superchar::diagrams::tail_pos(d.kind()).expect("osp");
            out.push(Vertex { pos: fmt_half(t.0), x: t.0 as f64 / 2.0, label: tail.to_string() });
        }
    }
    for (p, s) in d.body() {
        out.push(Vertex { pos: fmt_half(p.0), x: p.0 as f64 / 2.0, label: s.as_char().to_string() });
    }
    out
}

fn terms_json(x: &KElement) -> Result<Value, String> {
    let kind_terms: Vec<Value> = x
        .iter()
        .map(|(d, c)| json!({"coeff": c, "diagram": d.to_string(), "vertices": vertices(d)}))
        .collect();
    Ok(Value::Array(kind_terms))
}

pub fn decompose_json(family: &str, m: usize, n: usize, diagram: &str) -> Result<Value, String> {
    let d = parse(family, m, n, diagram)?;
    let dec = pim_decomposition(&d).map_err(|e| e.to_string())?;
    Ok(json!({
        "source": d.to_string(),
        "vertices": vertices(&d),
        "terms": terms_json(&dec.terms)?,
    }))
}

pub fn caps_json(family: &str, m: usize, n: usize, diagram: &str) -> Result<Value, String> {
    let d = parse(family, m, n, diagram)?;
    let cd = cap_diagram(&d).map_err(|e| e.to_string())?;
    let caps: Vec<Value> = cd.caps.iter().map(|c| json!({"left": c.left.0 as f64 / 2.0, "right": c.right.0 as f64 / 2.0})).collect();
    let mut pset: Vec<String> = p_set(&d).map_err(|e| e.to_string())?.iter().map(|x| x.to_string()).collect();
    pset.sort();
    Ok(json!({"source": d.to_string(), "vertices": vertices(&d), "caps": caps, "pset": pset}))
}

pub fn translate_json(family: &str, m: usize, n: usize, diagram: &str, functor: &str) -> Result<Value, String> {
    let d = parse(family, m, n, diagram)?;
    let f: Functor = functor.parse().map_err(|e: superchar::Error| e.to_string())?;
    f.check(d.kind()).map_err(|e| e.to_string())?;
    let out = translate_euler(&KElement::single(Basis::Euler, d.clone()), f).map_err(|e| e.to_string())?;
    Ok(json!({"source": d.to_string(), "functor": f.to_string(), "vertices": vertices(&d), "terms": terms_json(&out)?}))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decompose(family: &str, m: usize, n: usize, diagram: &str) -> Result<String, JsValue> {
    to_js(decompose_json(family, m, n, diagram))
}

#[wasm_bindgen]
pub fn caps(family: &str, m: usize, n: usize, diagram: &str) -> Result<String, JsValue> {
    to_js(caps_json(family, m, n, diagram))
}

#[wasm_bindgen]
pub fn translate(family: &str, m: usize, n: usize, diagram: &str, functor: &str) -> Result<String, JsValue> {
    to_js(translate_json(family, m, n, diagram, functor))
}
