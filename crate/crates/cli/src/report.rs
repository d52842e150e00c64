//! JSON rendering. Objects use `serde_json`'s default ordered map, so keys come
//! out sorted; exact rationals are `"p/q"` strings and floats are rounded to
//! 15 significant digits.

use grover_core::families::CensusRecord;
use grover_core::graph::{Classification, Graph};
use grover_core::linalg::CharPoly;
use grover_core::periodicity::{PeriodError, PeriodReport};
use grover_core::walk::SpectralMapReport;
use serde::Serialize;
use serde_json::{json, Value};

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Recursively rounds every float in `v`.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| serde_json::Number::from_f64(round_sig(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&round_floats(v)).expect("values serialize");
    s.push('\n');
    s
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "edges": g.edges().iter().map(|e| [e.0, e.1]).collect::<Vec<_>>(),
    })
}

pub fn classification_json(c: &Classification) -> Value {
    to_value(c)
}

/// Ascending coefficients, `coefficients[j]` multiplying `x^j`.
pub fn charpoly_json(cp: &CharPoly) -> Value {
    json!({
        "degree": cp.degree(),
        "coefficients": cp.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn period_json(p: &Result<PeriodReport, PeriodError>) -> Value {
    match p {
        Ok(r) => to_value(r),
        Err(e) => json!({ "error": e.to_string(), "budget_exceeded": matches!(e, PeriodError::BudgetExceeded { .. }) }),
    }
}

pub fn spectral_map_json(r: &SpectralMapReport) -> Value {
    json!({
        "matched": r.matched,
        "dimension": r.dimension,
        "predicted": r.predicted,
        "max_residual": r.max_residual,
        "unexplained_plus_one": r.unexplained_plus_one,
        "unexplained_minus_one": r.unexplained_minus_one,
    })
}

pub fn census_record_json(r: &CensusRecord) -> Value {
    json!({
        "graph": graph_json(&r.graph),
        "classification": classification_json(&r.classification),
        "charpoly": charpoly_json(&r.charpoly),
        "integrality_failing": r.integrality_failing,
        "period": period_json(&r.period),
    })
}
