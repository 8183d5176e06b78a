//! Structured JSON export of analysis results. Field names are the stable
//! machine contract documented in docs/format.md; docs/schema.json carries
//! the schema. Rationals are serialized as strings ("p" or "p/q"), states
//! as sorted name lists of their 1-valued vertices, inequalities as
//! `{"normal": [...], "bound": b, "sense": "ge"}`.

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::coloring::{ChromaticCertificate, Coloring, ColoringReport, SeparationReport};
use crate::hypergraph::Hypergraph;
use crate::polytope::{EvaluatedPoints, LinearInequality, PolytopeHRep};
use crate::realization::{RealizationReport, Violation};
use crate::state::{
    AggregabilityReport, ColorValueMap, RationalState, SeparatingReport, StateCheck,
    TwoValuedState,
};

pub fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn json_hypergraph(h: &Hypergraph) -> Value {
    let contexts: Vec<Value> = h
        .contexts()
        .iter()
        .map(|c| {
            Value::Array(
                c.members
                    .iter()
                    .map(|&v| Value::String(h.name(v).to_owned()))
                    .collect(),
            )
        })
        .collect();
    let profile = h.incidence_profile();
    json!({
        "vertices": h.names(),
        "contexts": contexts,
        "uniformity": h.uniformity().ok(),
        "degrees": profile.degrees,
        "intertwiners": profile.intertwiners.iter().map(|&v| h.name(v)).collect::<Vec<_>>(),
    })
}

pub fn json_coloring(h: &Hypergraph, c: &Coloring) -> Value {
    let assignment: Value = h
        .vertices()
        .map(|v| (h.name(v).to_owned(), json!(c.color(v))))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    json!({ "k": c.k, "assignment": assignment })
}

pub fn json_coloring_report(r: &ColoringReport) -> Value {
    json!({
        "exclusive": r.exclusive,
        "complete": r.complete,
        "admissible": r.admissible,
        "equitable": r.equitable,
    })
}

pub fn json_chromatic(h: &Hypergraph, cert: &ChromaticCertificate) -> Value {
    json!({
        "chromatic_number": cert.chromatic_number,
        "witness": json_coloring(h, &cert.witness),
        "exhausted": cert.exhausted,
    })
}

pub fn json_state(h: &Hypergraph, s: &TwoValuedState) -> Value {
    let mut ones: Vec<String> = s.support().iter().map(|&v| h.name(v).to_owned()).collect();
    ones.sort();
    Value::Array(ones.into_iter().map(Value::String).collect())
}

pub fn json_states(h: &Hypergraph, states: &[TwoValuedState]) -> Value {
    Value::Array(states.iter().map(|s| json_state(h, s)).collect())
}

pub fn json_state_check(c: &StateCheck) -> Value {
    json!({
        "valid": c.valid,
        "offending": c.offending.iter()
            .map(|&(ctx, ones)| json!({"context": ctx, "ones": ones}))
            .collect::<Vec<_>>(),
    })
}

pub fn json_separating(h: &Hypergraph, r: &SeparatingReport) -> Value {
    json!({
        "separating": r.separating,
        "unseparated_pairs": r.unseparated_pairs.iter()
            .map(|&(u, v)| json!([h.name(u), h.name(v)]))
            .collect::<Vec<_>>(),
    })
}

pub fn json_chromatic_separation(h: &Hypergraph, r: &SeparationReport) -> Value {
    json!({
        "separated": r.separated.iter()
            .map(|&(u, v)| json!([h.name(u), h.name(v)]))
            .collect::<Vec<_>>(),
        "unseparated": r.unseparated.iter()
            .map(|&(u, v)| json!([h.name(u), h.name(v)]))
            .collect::<Vec<_>>(),
    })
}

pub fn json_aggregability(h: &Hypergraph, r: &AggregabilityReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let witness = e.witness.as_ref().map(|(c, color)| {
                json!({ "coloring": json_coloring(h, c), "color": color })
            });
            json!({
                "state": json_state(h, &e.state),
                "aggregable": e.witness.is_some(),
                "witness": witness,
            })
        })
        .collect();
    json!({ "entries": entries })
}

pub fn json_rational_state(h: &Hypergraph, s: &RationalState) -> Value {
    h.vertices()
        .map(|v| (h.name(v).to_owned(), Value::String(rational_str(s.value(v)))))
        .collect::<serde_json::Map<String, Value>>()
        .into()
}

pub fn json_color_value_map(m: &ColorValueMap) -> Value {
    Value::Array(
        m.values
            .iter()
            .map(|v| Value::String(rational_str(v)))
            .collect(),
    )
}

pub fn json_realization_report(h: &Hypergraph, r: &RealizationReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| match v {
            Violation::NotOrthogonal { context, u, v, dot } => json!({
                "kind": "not_orthogonal",
                "context": context,
                "pair": [h.name(*u), h.name(*v)],
                "dot": dot.to_string(),
            }),
            Violation::RankDeficient { context, rank } => json!({
                "kind": "rank_deficient",
                "context": context,
                "rank": rank,
            }),
            Violation::ExtraOrthogonality { u, v } => json!({
                "kind": "extra_orthogonality",
                "pair": [h.name(*u), h.name(*v)],
            }),
        })
        .collect();
    json!({
        "contexts_ok": r.contexts_ok,
        "faithful": r.faithful,
        "violations": violations,
    })
}

pub fn json_inequality(q: &LinearInequality) -> Value {
    json!({
        "normal": q.normal.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "bound": q.bound.to_string(),
        "sense": "ge",
    })
}

pub fn json_hrep(hrep: &PolytopeHRep) -> Value {
    json!({
        "dimension": hrep.dimension,
        "equalities": hrep.equalities.iter().map(json_inequality).collect::<Vec<_>>(),
        "facets": hrep.facets.iter().map(json_inequality).collect::<Vec<_>>(),
    })
}

pub fn json_points(points: &EvaluatedPoints) -> Value {
    let pts: Vec<Value> = points
        .points
        .iter()
        .zip(&points.state_indices)
        .map(|(p, idxs)| {
            json!({
                "coords": p.iter().map(rational_str).collect::<Vec<_>>(),
                "states": idxs,
            })
        })
        .collect();
    Value::Array(pts)
}

/// Renders any report value as stable, pretty-printed JSON text.
pub fn export_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}
