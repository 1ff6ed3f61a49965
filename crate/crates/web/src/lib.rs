//! WebAssembly bindings for the demo page. Every function takes a family name
//! and a parameter string such as `"7,3"`, and returns a JSON string; failures
//! come back as `{"error": "..."}`.

use serde_json::{json, Value};
use subdeg::coprime::{all_subgroups_small, coprime_factorizations, mu_from_lattice, mu_prime_bound};
use subdeg::corpus::analyze_full;
use subdeg::subdegree::common_divisor_graph;
use subdeg::{constructions, PermGroup};
use wasm_bindgen::prelude::*;

/// Largest degree the page will build.
pub const MAX_DEGREE: usize = 5_000;
/// Largest order for the subgroup lattice.
pub const LATTICE_CAP: usize = 2_000;
const MAX_FACTORIZATIONS: usize = 200;

fn parse_params(params: &str) -> Result<Vec<usize>, String> {
    params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad parameter {s:?}")))
        .collect()
}

fn build(family: &str, params: &str) -> Result<PermGroup, String> {
    let params = parse_params(params)?;
    let group = constructions::construct(family, &params).map_err(|e| e.to_string())?;
    if group.degree() > MAX_DEGREE {
        return Err(format!("degree {} is above the demo limit {MAX_DEGREE}", group.degree()));
    }
    Ok(group)
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn check_point(group: &PermGroup, point: usize) -> Result<usize, String> {
    point
        .checked_sub(1)
        .filter(|&p| p < group.degree())
        .ok_or_else(|| format!("point must be in 1..={}", group.degree()))
}

/// Report, suborbits (1-based representatives) and the common-divisor graph
/// of the non-trivial subdegrees.
#[wasm_bindgen]
pub fn analyze(family: &str, params: &str, point: usize) -> String {
    respond((|| {
        let group = build(family, params)?;
        let point = check_point(&group, point)?;
        let analysis = analyze_full(&group, point);
        let report = serde_json::to_value(&analysis.report).map_err(|e| e.to_string())?;
        let (suborbits, graph) = match &analysis.profile {
            Some(profile) => {
                let suborbits: Vec<Value> = profile
                    .suborbits
                    .iter()
                    .map(|s| json!({ "representative": s.representative + 1, "length": s.length }))
                    .collect();
                let graph = common_divisor_graph(profile);
                let edges: Vec<[usize; 2]> = graph.edges().into_iter().map(|(a, b)| [a, b]).collect();
                (
                    json!(suborbits),
                    json!({
                        "vertices": graph.vertices,
                        "edges": edges,
                        "independence_number": graph.independence_number(),
                    }),
                )
            }
            None => (Value::Null, Value::Null),
        };
        Ok(json!({ "report": report, "suborbits": suborbits, "graph": graph }))
    })())
}

/// Finest block system in which points `a` and `b` (1-based) share a block.
#[wasm_bindgen]
pub fn block_system(family: &str, params: &str, a: usize, b: usize) -> String {
    respond((|| {
        let group = build(family, params)?;
        let (a, b) = (check_point(&group, a)?, check_point(&group, b)?);
        if !group.is_transitive() {
            return Err("block systems need a transitive group".into());
        }
        let sys = group.minimal_block_system(a, b).map_err(|e| e.to_string())?;
        let blocks: Vec<Vec<usize>> = sys
            .blocks()
            .into_iter()
            .map(|blk| blk.into_iter().map(|x| x + 1).collect())
            .collect();
        Ok(json!({
            "degree": group.degree(),
            "block_size": sys.block_size,
            "num_blocks": sys.num_blocks,
            "trivial": sys.is_trivial(),
            "primitive": group.is_primitive(),
            "blocks": blocks,
        }))
    })())
}

/// Subgroup lattice summary: maximal subgroup indices, the coprime clique of
/// indices, and pairs of subgroups with coprime indices.
#[wasm_bindgen]
pub fn coprime_indices(family: &str, params: &str) -> String {
    respond((|| {
        let group = build(family, params)?;
        let lattice = all_subgroups_small(&group, LATTICE_CAP).map_err(|e| e.to_string())?;
        let mut maximal: Vec<u64> = lattice.maximal_indices().iter().map(|&i| lattice.index_of(i)).collect();
        maximal.sort();
        let fs = coprime_factorizations(&group, &lattice).map_err(|e| e.to_string())?;
        let shown: Vec<Value> = fs
            .iter()
            .take(MAX_FACTORIZATIONS)
            .map(|f| {
                json!({
                    "index_a": f.index_a,
                    "index_b": f.index_b,
                    "intersection_order": f.intersection_order,
                    "maximal": f.maximal,
                })
            })
            .collect();
        Ok(json!({
            "order": group.order().to_string(),
            "subgroups": lattice.len(),
            "maximal_indices": maximal,
            "mu": mu_from_lattice(&lattice),
            "prime_bound": mu_prime_bound(&group.order()),
            "factorization_count": fs.len(),
            "factorizations": shown,
        }))
    })())
}
