//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON or SVG
//! string; errors surface as JavaScript exceptions carrying the message.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Classification of the family `(ξ + t, u)`, as JSON.
#[wasm_bindgen]
pub fn classify(u: &str) -> Result<String, JsValue> {
    js(demo::classify(u))
}

/// Envelope of `(ξ + t, u)` on `[-r, r]²`, as JSON with an embedded SVG.
#[wasm_bindgen]
pub fn envelope(u: &str, radius: f64, resolution: usize) -> Result<String, JsValue> {
    js(demo::envelope(u, radius, resolution))
}

/// One frame of the beaks deformation of the normal form, as JSON with an embedded SVG.
#[wasm_bindgen]
pub fn beaks_frame(a: &str, b: &str, lambda: f64, radius: f64, resolution: usize) -> Result<String, JsValue> {
    js(demo::beaks_frame(a, b, lambda, radius, resolution))
}
