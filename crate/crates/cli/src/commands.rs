use std::time::Instant;

use gpoly_core::enumerate::connected_simple_graphs_up_to;
use gpoly_core::equivalence::{
    to_augmented_monomial, u_to_polychromate, ubar_to_ybar, ybar_to_extended_polychromate,
    ybar_to_ubar,
};
use gpoly_core::invariants::{compute as compute_invariant, InvariantResult};
use gpoly_core::search::{graph_id, search as run_search, SearchOptions};
use gpoly_core::verify::{self, extended_to_plain_polychromate, Suite, VerifyOptions};
use gpoly_core::{
    ComputeOptions, Error, Family, Invariant, InvariantValue, Multigraph, PairedBasis,
    PairedCoefficientMap, Poly, Route,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{load_graphs, load_one_graph, read_text};
use crate::{ConvertFrom, ConvertTo, Failure, Format, Global};

/// Largest size accepted by `search --enumerate`.
const MAX_ENUMERATE: usize = 7;

fn json_value(text: &str) -> Value {
    serde_json::from_str(text).expect("engine emits valid JSON")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn result_json(g: &Multigraph, r: &InvariantResult) -> Value {
    json!({
        "graph": graph_id(g),
        "invariant": r.invariant.name(),
        "provenance": r.provenance.to_string(),
        "value": json_value(&r.value.to_json()),
    })
}

pub fn compute(
    global: &Global,
    invariant: Invariant,
    path: &str,
    truncate: Option<usize>,
    route: Route,
) -> Result<(), Failure> {
    let graphs = load_graphs(path, false)?;
    let opts = ComputeOptions {
        limits: global.limits(),
        truncate,
        route,
    };
    let results = graphs
        .par_iter()
        .map(|g| compute_invariant(invariant, g, &opts))
        .collect::<Result<Vec<_>, Error>>()?;
    match global.format_or(Format::Text) {
        Format::Text => {
            for r in &results {
                println!("{}", r.value);
            }
        }
        Format::Json => {
            let mut items: Vec<Value> = graphs
                .iter()
                .zip(&results)
                .map(|(g, r)| result_json(g, r))
                .collect();
            let v = if items.len() == 1 {
                items.pop().expect("one item")
            } else {
                Value::Array(items)
            };
            println!("{}", pretty(&v));
        }
    }
    Ok(())
}

fn basis_name(b: PairedBasis) -> &'static str {
    match b {
        PairedBasis::PowerSum => "pbar",
        PairedBasis::AugmentedMonomial => "mbar",
    }
}

/// The first term, in canonical order, where two values disagree.
fn first_difference(a: &InvariantValue, b: &InvariantValue) -> Option<(String, String, String)> {
    match (a, b) {
        (InvariantValue::Poly(p), InvariantValue::Poly(q)) => p
            .first_difference(q)
            .map(|(m, x, y)| (m.to_string(), x.to_string(), y.to_string())),
        (InvariantValue::Paired(p), InvariantValue::Paired(q)) => {
            let keys: std::collections::BTreeSet<_> = p.iter().chain(q.iter()).map(|(k, _)| k).collect();
            keys.into_iter().find_map(|k| {
                let (x, y) = (p.get(k), q.get(k));
                (x != y).then(|| {
                    (
                        format!("{}[{k}]", basis_name(p.basis())),
                        x.to_string(),
                        y.to_string(),
                    )
                })
            })
        }
        _ => Some(("<kind>".into(), a.to_string(), b.to_string())),
    }
}

pub fn compare(
    global: &Global,
    invariant: Invariant,
    first: &str,
    second: &str,
    truncate: Option<usize>,
    route: Route,
) -> Result<(), Failure> {
    let g1 = load_one_graph(first)?;
    let g2 = load_one_graph(second)?;
    // Symmetric-function outputs are compared with the same number of variables.
    let truncate = truncate.or(Some(g1.vertex_count().max(g2.vertex_count())));
    let opts = ComputeOptions {
        limits: global.limits(),
        truncate,
        route,
    };
    let (r1, r2) = rayon::join(
        || compute_invariant(invariant, &g1, &opts),
        || compute_invariant(invariant, &g2, &opts),
    );
    let (r1, r2) = (r1.map_err(|e| Failure::Core(e).within(first))?, r2.map_err(|e| Failure::Core(e).within(second))?);
    let diff = first_difference(&r1.value, &r2.value);
    match global.format_or(Format::Text) {
        Format::Text => match &diff {
            None => println!("EQUAL"),
            Some((m, a, b)) => {
                println!("DIFFER");
                println!("first difference at {m}: {a} vs {b}");
            }
        },
        Format::Json => {
            let v = match &diff {
                None => json!({ "invariant": invariant.name(), "verdict": "EQUAL" }),
                Some((m, a, b)) => json!({
                    "invariant": invariant.name(),
                    "verdict": "DIFFER",
                    "monomial": m,
                    "first": a,
                    "second": b,
                }),
            };
            println!("{}", pretty(&v));
        }
    }
    if diff.is_some() {
        return Err(Failure::Negative);
    }
    Ok(())
}

pub fn verify(
    global: &Global,
    suite: Option<Suite>,
    max_vertices: Option<usize>,
    max_edges: Option<usize>,
    seed: Option<u64>,
) -> Result<(), Failure> {
    let mut opts = VerifyOptions {
        limits: global.limits(),
        max_vertices,
        max_edges,
        ..VerifyOptions::default()
    };
    if let Some(s) = seed {
        opts.seed = s;
    }
    let suites = suite.map_or(Suite::ALL.to_vec(), |s| vec![s]);
    let format = global.format_or(Format::Text);
    let mut reports = Vec::new();
    for s in suites {
        let report = verify::run(s, &opts)?;
        if format == Format::Text {
            print!("{}", report.to_text());
        }
        let passed = report.passed();
        reports.push(report);
        if !passed {
            break;
        }
    }
    if format == Format::Json {
        let items: Vec<Value> = reports.iter().map(|r| json_value(&r.to_json())).collect();
        println!("{}", pretty(&Value::Array(items)));
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

pub fn search(
    global: &Global,
    files: &[String],
    graph_files: &[String],
    enumerate: Option<usize>,
    loopless: bool,
    lenient: bool,
) -> Result<(), Failure> {
    if files.is_empty() && graph_files.is_empty() && enumerate.is_none() {
        return Err(Failure::Usage(
            "search needs --graphs FILE, --enumerate MAX_N or graph files".into(),
        ));
    }
    let start = Instant::now();
    let mut graphs = Vec::new();
    for path in graph_files.iter().chain(files) {
        graphs.extend(load_graphs(path, lenient)?);
    }
    if let Some(n) = enumerate {
        if n > MAX_ENUMERATE {
            return Err(Failure::Core(Error::Precondition(format!(
                "--enumerate is limited to {MAX_ENUMERATE} vertices"
            ))));
        }
        graphs.extend(connected_simple_graphs_up_to(n));
    }
    let limits = global.limits();
    let report = run_search(&graphs, &SearchOptions { limits, loopless })?;
    let bad = report.verify(&limits)?;
    match global.format_or(Format::Text) {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    if !bad.is_empty() {
        for (a, b) in &bad {
            eprintln!("error: pair {a} {b} does not reproduce on recomputation");
        }
        return Err(Failure::Negative);
    }
    Ok(())
}

/// The vertex count of a U-polynomial, read off its x-degrees.
fn u_vertex_count(u: &Poly) -> Result<u32, Error> {
    let mut n = None;
    for (mono, _) in u.terms() {
        let total: u32 = mono
            .factors()
            .iter()
            .filter(|(v, _)| v.family() == Family::X)
            .map(|(v, e)| v.first() * e)
            .sum();
        match n {
            Some(n0) if n0 != total => {
                return Err(Error::Malformed(format!(
                    "monomials with x-degree totals {n0} and {total}"
                )))
            }
            _ => n = Some(total),
        }
    }
    n.ok_or_else(|| Error::Malformed("empty polynomial".into()))
}

fn power_sum_map(text: &str) -> Result<PairedCoefficientMap, Error> {
    let map = PairedCoefficientMap::from_json(text)?;
    if map.basis() != PairedBasis::PowerSum {
        return Err(Error::Precondition(
            "ybar-p input must be in the paired power-sum basis".into(),
        ));
    }
    Ok(map)
}

pub fn convert(global: &Global, from: ConvertFrom, to: ConvertTo, path: &str) -> Result<(), Failure> {
    let text = unwrap_compute_output(read_text(path)?);
    let inner = |e: Error| Failure::Core(e).within(path);
    let out = match from {
        ConvertFrom::U => {
            let u = Poly::from_json(&text).map_err(inner)?;
            match to {
                ConvertTo::Polychromate => {
                    let n = u_vertex_count(&u).map_err(inner)?;
                    InvariantValue::Poly(u_to_polychromate(&u, n).map_err(inner)?)
                }
                _ => {
                    return Err(Failure::Core(Error::Precondition(format!(
                        "u determines only the polychromate, not {}",
                        to_name(to)
                    ))))
                }
            }
        }
        ConvertFrom::Ubar | ConvertFrom::YbarP => {
            let ybar = if from == ConvertFrom::Ubar {
                ubar_to_ybar(&Poly::from_json(&text).map_err(inner)?).map_err(inner)?
            } else {
                power_sum_map(&text).map_err(inner)?
            };
            match to {
                ConvertTo::YbarP => InvariantValue::Paired(ybar),
                ConvertTo::YbarM => InvariantValue::Paired(to_augmented_monomial(&ybar)),
                ConvertTo::ExtPolychromate => {
                    InvariantValue::Poly(ybar_to_extended_polychromate(&ybar))
                }
                ConvertTo::Ubar => InvariantValue::Poly(ybar_to_ubar(&ybar).map_err(inner)?),
                ConvertTo::Polychromate => InvariantValue::Poly(extended_to_plain_polychromate(
                    &ybar_to_extended_polychromate(&ybar),
                )),
            }
        }
    };
    match global.format_or(Format::Json) {
        Format::Text => println!("{out}"),
        Format::Json => println!("{}", out.to_json()),
    }
    Ok(())
}

/// Accepts the JSON printed by `compute` as well as a bare value.
fn unwrap_compute_output(text: String) -> String {
    match serde_json::from_str::<Value>(&text) {
        Ok(Value::Object(mut obj)) if obj.contains_key("invariant") => obj
            .remove("value")
            .map_or(text, |v| v.to_string()),
        _ => text,
    }
}

fn to_name(to: ConvertTo) -> &'static str {
    match to {
        ConvertTo::YbarP => "ybar-p",
        ConvertTo::YbarM => "ybar-m",
        ConvertTo::ExtPolychromate => "ext-polychromate",
        ConvertTo::Ubar => "ubar",
        ConvertTo::Polychromate => "polychromate",
    }
}
