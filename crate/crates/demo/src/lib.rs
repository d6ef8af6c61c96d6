//! Browser bindings: generate a family graph, build a labeling, and compare
//! it with the exact optimum. Every entry point takes and returns JSON text.

use hublab::approx::{run_cohen_hl, MdsMode};
use hublab::center::UncoveredSet;
use hublab::generators as gen;
use hublab::greedy::{run_greedy, Algorithm};
use hublab::highway::{greedy_multiscale_sphs, sphs_to_hhl, DEFAULT_PATH_CAP};
use hublab::labeling::verify_cover;
use hublab::oracles::{optimal_hhl_bruteforce, optimal_hl_bnb};
use hublab::{DistMatrix, Graph, Labeling, Order};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const BNB_BUDGET: u64 = 2_000_000;
const HHL_LIMIT: usize = 14;

pub fn generate_graph(family: &str, k: usize, seed: u64) -> Result<Value, String> {
    let g = match family {
        "bad-g" => gen::gen_bad_g(k),
        "bad-w" => gen::gen_bad_w(k),
        "separator" => gen::gen_separator(k),
        "cycle4" => Ok(gen::gen_cycle4(false)),
        "cycle4-directed" => Ok(gen::gen_cycle4(true)),
        "random" => gen::gen_random(k, k + k / 2, 4, seed),
        other => return Err(format!("unknown family {other}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(json!({ "graph": g.to_text(), "n": g.n(), "m": g.m(), "directed": g.is_directed() }))
}

fn labeling_for(g: &Graph, d: &DistMatrix, algo: &str) -> Result<(Labeling, Option<Order>), String> {
    let greedy = |a| {
        let (order, l, _) = run_greedy(d, a);
        (l, Some(order))
    };
    Ok(match algo {
        "g-hhl" => greedy(Algorithm::GHhl),
        "w-hhl" => greedy(Algorithm::WHhl),
        "d-hhl" => greedy(Algorithm::DHhl),
        "cohen" => (run_cohen_hl(d, UncoveredSet::initial(d), MdsMode::Peel).0, None),
        "sphs" => {
            let ms = greedy_multiscale_sphs(g, d, DEFAULT_PATH_CAP).map_err(|e| e.to_string())?;
            let (order, l) = sphs_to_hhl(g, d, &ms, DEFAULT_PATH_CAP).map_err(|e| e.to_string())?;
            (l, Some(order))
        }
        other => return Err(format!("unknown algorithm {other}")),
    })
}

fn parse(graph: &str) -> Result<Graph, String> {
    Graph::parse(graph).map_err(|e| e.to_string())
}

pub fn build_labeling(graph: &str, algo: &str) -> Result<Value, String> {
    let g = parse(graph)?;
    let d = DistMatrix::compute(&g);
    let (l, order) = labeling_for(&g, &d, algo)?;
    let sizes: Vec<usize> = (0..g.n()).map(|v| l.label_size(v)).collect();
    Ok(json!({
        "algo": algo,
        "size": l.size(),
        "max_label": l.max_label_size(),
        "valid": verify_cover(&l, &d).is_valid(),
        "order": order.map(|o| o.sequence().to_vec()),
        "label_sizes": sizes,
        "labels": l.to_text(),
    }))
}

pub fn compare_with_optimum(graph: &str, algo: &str) -> Result<Value, String> {
    let g = parse(graph)?;
    let d = DistMatrix::compute(&g);
    let (l, _) = labeling_for(&g, &d, algo)?;
    let bnb = optimal_hl_bnb(&d, &UncoveredSet::initial(&d), Some(BNB_BUDGET)).map_err(|e| e.to_string())?;
    let hhl = optimal_hhl_bruteforce(&d, HHL_LIMIT).ok().map(|(size, _)| size);
    Ok(json!({
        "algo": algo,
        "size": l.size(),
        "hl_lower": bnb.lower,
        "hl_upper": bnb.upper,
        "hl_complete": bnb.complete,
        "optimal_hhl": hhl,
    }))
}

fn to_js(result: Result<Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, k: usize, seed: u64) -> Result<String, JsError> {
    to_js(generate_graph(family, k, seed))
}

#[wasm_bindgen]
pub fn build(graph: &str, algo: &str) -> Result<String, JsError> {
    to_js(build_labeling(graph, algo))
}

#[wasm_bindgen]
pub fn compare(graph: &str, algo: &str) -> Result<String, JsError> {
    to_js(compare_with_optimum(graph, algo))
}
