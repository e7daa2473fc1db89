//! Browser bindings. Each exported function takes plain strings and numbers
//! and returns JSON or text, so the page needs no generated glue beyond
//! wasm-bindgen's.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ordmotif::enumeration::{motif_stats, EnumerationConfig, MotifInventory};
use ordmotif::{
    build_scale, explain_covering, greedy_cover, parse_context, ContextFormat, FormalContext,
    HeuristicKind, LabelMap, ObjectSet, ScaleFamily,
};

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Standard scale with its extents and the cover relation between them.
pub fn scale_lattice_json(family: &str, n: usize) -> Result<String, String> {
    let family: ScaleFamily = family.parse().map_err(err)?;
    let scale = build_scale(family, n).map_err(err)?;
    let extents = scale.extents();
    let incidence: Vec<String> = (0..scale.num_objects())
        .map(|g| {
            (0..scale.num_attributes())
                .map(|m| if scale.incident(g, m) { 'X' } else { '.' })
                .collect()
        })
        .collect();
    Ok(json!({
        "family": family,
        "n": n,
        "objects": scale.objects(),
        "attributes": scale.attributes(),
        "incidence": incidence,
        "extents": extents.iter().map(ObjectSet::to_vec).collect::<Vec<_>>(),
        "covers": cover_pairs(&extents),
    })
    .to_string())
}

/// Pairs `(i, j)` with extent `i` directly below extent `j`.
fn cover_pairs(extents: &[ObjectSet]) -> Vec<(usize, usize)> {
    let below = |a: &ObjectSet, b: &ObjectSet| a != b && a.is_subset(b);
    let mut out = Vec::new();
    for (i, a) in extents.iter().enumerate() {
        for (j, b) in extents.iter().enumerate() {
            if below(a, b) && !extents.iter().any(|c| below(a, c) && below(c, b)) {
                out.push((i, j));
            }
        }
    }
    out
}

struct Prepared {
    context: FormalContext,
    labels: LabelMap,
}

fn prepare(text: &str, format: &str, clarify: bool) -> Result<Prepared, String> {
    let format = match format {
        "csv" => ContextFormat::Csv,
        _ => ContextFormat::Burmeister,
    };
    let mut context = parse_context(text.as_bytes(), format).map_err(err)?;
    let mut map = None;
    if clarify {
        let (c, m) = context.clarify_objects();
        context = c;
        map = Some(m);
    }
    let labels = LabelMap::from_context(&context, map.as_ref());
    Ok(Prepared { context, labels })
}

/// Motif statistics and the greedy coverage curve for a pasted context.
pub fn analyze_json(
    text: &str,
    format: &str,
    k: usize,
    heuristic: &str,
    clarify: bool,
) -> Result<String, String> {
    let p = prepare(text, format, clarify)?;
    let heuristic: HeuristicKind = heuristic.parse().map_err(err)?;
    let inventory =
        MotifInventory::build(&p.context, &EnumerationConfig::default()).map_err(err)?;
    let steps = greedy_cover(&p.context, &inventory.pool(false), k, heuristic);
    let curve: Vec<Value> = steps
        .iter()
        .map(|s| {
            let names: Vec<&str> = s
                .motif
                .domain
                .iter()
                .filter_map(|&g| p.labels.name(g).ok())
                .collect();
            json!({
                "families": s.families(),
                "elements": names,
                "new_extents": s.new_extents,
                "cumulative": s.cumulative,
            })
        })
        .collect();
    Ok(json!({
        "objects": p.context.num_objects(),
        "attributes": p.context.num_attributes(),
        "extent_count": p.context.extents().len(),
        "stats": motif_stats(&inventory),
        "curve": curve,
    })
    .to_string())
}

/// Numbered explanations of the first `k` greedy picks.
pub fn explain_text(
    text: &str,
    format: &str,
    k: usize,
    heuristic: &str,
    clarify: bool,
) -> Result<String, String> {
    let p = prepare(text, format, clarify)?;
    let heuristic: HeuristicKind = heuristic.parse().map_err(err)?;
    let inventory =
        MotifInventory::build(&p.context, &EnumerationConfig::default()).map_err(err)?;
    let steps = greedy_cover(&p.context, &inventory.pool(false), k, heuristic);
    Ok(explain_covering(&steps, &p.labels).map_err(err)?.to_text())
}

#[wasm_bindgen]
pub fn scale_lattice(family: &str, n: usize) -> Result<String, JsValue> {
    scale_lattice_json(family, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(
    text: &str,
    format: &str,
    k: usize,
    heuristic: &str,
    clarify: bool,
) -> Result<String, JsValue> {
    analyze_json(text, format, k, heuristic, clarify).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explain(
    text: &str,
    format: &str,
    k: usize,
    heuristic: &str,
    clarify: bool,
) -> Result<String, JsValue> {
    explain_text(text, format, k, heuristic, clarify).map_err(|e| JsValue::from_str(&e))
}
