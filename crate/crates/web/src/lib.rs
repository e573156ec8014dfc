//! wasm-bindgen exports for the static demo page in `www/`.
//!
//! Each export takes a graph document as JSON text and returns text. The
//! plain functions carry the logic so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use rcop_toric::blockpath::is_block_graph;
use rcop_toric::graph::parse_graph;
use rcop_toric::markov::rcop_basis;
use rcop_toric::symmetry::is_rcop;
use rcop_toric::toric::{exponent_matrix, PathMap};

#[derive(Serialize)]
struct Summary {
    vertices: usize,
    edges: usize,
    colors: usize,
    block: bool,
    rcop: bool,
    group_order: String,
    generators: Vec<String>,
    witness: Option<String>,
}

/// Block and RCOP verdicts with the automorphism group, as pretty JSON.
pub fn check_graph(graph_json: &str) -> Result<String, String> {
    let g = parse_graph(graph_json).map_err(|e| e.to_string())?;
    let block = is_block_graph(&g).map_err(|e| e.to_string())?.is_block();
    let verdict = is_rcop(&g).map_err(|e| e.to_string())?;
    let summary = Summary {
        vertices: g.n(),
        edges: g.edge_count(),
        colors: g.color_count(),
        block,
        rcop: verdict.rcop,
        group_order: verdict.group.order.to_string(),
        generators: verdict
            .group
            .generators
            .iter()
            .map(ToString::to_string)
            .collect(),
        witness: verdict.witness.map(|w| w.to_string()),
    };
    Ok(serde_json::to_string_pretty(&summary).expect("summary serializes"))
}

/// The exponent matrix as an aligned table; `map` is `"endpoint"` or `"full"`.
pub fn matrix_text(graph_json: &str, map: &str) -> Result<String, String> {
    let map = match map {
        "endpoint" => PathMap::Endpoint,
        "full" => PathMap::Full,
        other => return Err(format!("unknown map {other:?}")),
    };
    let g = parse_graph(graph_json).map_err(|e| e.to_string())?;
    Ok(exponent_matrix(&g, map)
        .map_err(|e| e.to_string())?
        .to_text())
}

/// The Markov basis, one move per line.
pub fn basis_text(graph_json: &str) -> Result<String, String> {
    let g = parse_graph(graph_json).map_err(|e| e.to_string())?;
    let moves = rcop_basis(&g).map_err(|e| e.to_string())?;
    Ok(moves.iter().map(|m| format!("{m}\n")).collect())
}

#[wasm_bindgen]
pub fn check(graph_json: &str) -> Result<String, JsValue> {
    check_graph(graph_json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn matrix(graph_json: &str, map: &str) -> Result<String, JsValue> {
    matrix_text(graph_json, map).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn basis(graph_json: &str) -> Result<String, JsValue> {
    basis_text(graph_json).map_err(|e| JsValue::from_str(&e))
}
