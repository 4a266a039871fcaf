//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes a permutation in one-line notation and
//! returns a JSON document for the page to draw. The plain `*_json`
//! functions carry the logic and are tested natively; the `#[wasm_bindgen]`
//! wrappers only convert errors.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use signed_crossings::enumeration::InvolutionMap;
use signed_crossings::fillings::{
    default_budget, find_max_pattern, interchange_psi, xi, xi_inverse, FillingPattern, YoungFilling,
};
use signed_crossings::statistics::{max_crossing_chain, max_nesting_chain, PatternCounts};
use signed_crossings::{PermutationStats, SignedPermutation};

fn parse(text: &str) -> Result<SignedPermutation, String> {
    text.parse().map_err(|e| format!("cannot parse `{}`: {e}", text.trim()))
}

fn describe_value(p: &SignedPermutation) -> Value {
    let d = p.upper_diagram();
    let arcs: Vec<Value> = d
        .arcs()
        .iter()
        .map(|a| json!({ "start": a.start, "end": a.end, "loop": a.is_loop() }))
        .collect();
    let vertices: Vec<Value> = d
        .vertex_kinds()
        .into_iter()
        .map(|(v, kind)| json!({ "vertex": v, "kind": kind }))
        .collect();
    json!({
        "permutation": p,
        "n": p.rank(),
        "stats": PermutationStats::of(p),
        "patterns": PatternCounts::of(&d),
        "vertices": vertices,
        "arcs": arcs,
        "crossing_chain": max_crossing_chain(&d).arcs,
        "nesting_chain": max_nesting_chain(&d).arcs,
    })
}

fn filling_value(f: &YoungFilling) -> Value {
    json!({
        "shape": f.shape(),
        "cells": f.ones().collect::<Vec<_>>(),
        "openers": f.openers(),
        "closers": f.closers(),
        "anti_identity": find_max_pattern(f, FillingPattern::AntiIdentity).cells,
        "identity": find_max_pattern(f, FillingPattern::Identity).cells,
    })
}

/// Upper arcs, vertex kinds, statistics and one longest chain of each kind.
pub fn describe_json(permutation: &str) -> Result<String, String> {
    Ok(describe_value(&parse(permutation)?).to_string())
}

/// Image under `theorem24` or `theta`, with both sides described.
pub fn involute_json(permutation: &str, map: &str) -> Result<String, String> {
    let p = parse(permutation)?;
    let map: InvolutionMap = map.parse()?;
    let image = map.apply(&p).map_err(|e| format!("{map} failed on {p}: {e}"))?;
    Ok(json!({
        "map": map,
        "before": describe_value(&p),
        "after": describe_value(&image),
    })
    .to_string())
}

/// The filling of the permutation and, when the interchange succeeds, the
/// filling it produces.
pub fn filling_json(permutation: &str) -> Result<String, String> {
    let p = parse(permutation)?;
    let f = xi(&p.upper_diagram()).map_err(|e| e.to_string())?;
    let interchange = match interchange_psi(&f, default_budget(f.rows())) {
        Ok(outcome) => {
            let image = xi_inverse(&outcome.filling)
                .and_then(|d| SignedPermutation::from_upper(&d))
                .map_err(|e| e.to_string())?;
            json!({
                "image": image,
                "steps": outcome.steps,
                "trace": outcome.trace,
                "filling": filling_value(&outcome.filling),
            })
        }
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({
        "permutation": p,
        "filling": filling_value(&f),
        "interchange": interchange,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn describe(permutation: &str) -> Result<String, JsError> {
    describe_json(permutation).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn involute(permutation: &str, map: &str) -> Result<String, JsError> {
    involute_json(permutation, map).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn filling(permutation: &str) -> Result<String, JsError> {
    filling_json(permutation).map_err(|e| JsError::new(&e))
}
