//! Report rendering: stable JSON values, CSV rows, and text lines.
//!
//! JSON objects are built through `serde_json::Value`, whose map is
//! ordered, so identical requests produce byte-identical output.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use artin_core::kms::{AlgebraicT, BetaComponent, GValue, TemperatureSpace};
use artin_core::poly::format_rational;
use artin_core::sets::{Cell, SymbolicSet};
use artin_core::word::Word;
use artin_core::{IntPoly, MonoidPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn word_str(pres: &MonoidPresentation, w: &Word) -> String {
    if w.is_identity() {
        "e".to_string()
    } else {
        pres.format_word(w)
    }
}

pub fn words_value(pres: &MonoidPresentation, ws: &[Word]) -> Value {
    Value::Array(ws.iter().map(|w| json!(word_str(pres, w))).collect())
}

pub fn rational_value(r: &BigRational) -> Value {
    json!({
        "approx": r.to_f64().unwrap_or(f64::NAN),
        "exact": format_rational(r),
    })
}

pub fn poly_value(p: &IntPoly) -> Value {
    let coeffs: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|c| match c.to_i64() {
            Some(v) => json!(v),
            None => json!(c.to_string()),
        })
        .collect();
    json!({
        "coefficients": coeffs,
        "display": p.to_string(),
    })
}

pub fn algebraic_value(a: &AlgebraicT) -> Value {
    json!({
        "beta": a.beta_approx,
        "t": a.t_approx,
        "t_interval": { "hi": format_rational(&a.t_hi), "lo": format_rational(&a.t_lo) },
        "t_polynomial": poly_value(&a.poly),
    })
}

pub fn component_value(c: &BetaComponent) -> Value {
    match c {
        BetaComponent::Point(p) => json!({
            "kind": "point",
            "beta": algebraic_value(p),
        }),
        BetaComponent::Interval {
            lower,
            lower_closed,
            upper,
            upper_closed,
        } => json!({
            "kind": "interval",
            "lower": algebraic_value(lower),
            "lower_closed": lower_closed,
            "upper": upper.as_ref().map(algebraic_value),
            "upper_closed": upper_closed,
        }),
    }
}

pub fn space_value(pres: &MonoidPresentation, s: &TemperatureSpace) -> Value {
    json!({
        "beta_zero_included": s.beta_zero_included,
        "components": s.components.iter().map(component_value).collect::<Vec<_>>(),
        "full_set_equality": s.full_set_equality.iter().map(algebraic_value).collect::<Vec<_>>(),
        "includes_plus_infinity": s.includes_plus_infinity,
        "polynomials": s.polynomials.iter().map(|f| json!({
            "poly": poly_value(&f.poly),
            "witness_j": words_value(pres, &f.witness_j),
        })).collect::<Vec<_>>(),
    })
}

pub fn component_text(c: &BetaComponent) -> String {
    match c {
        BetaComponent::Point(p) => format!("{{β = {:.12}}}", p.beta_approx),
        BetaComponent::Interval {
            lower,
            lower_closed,
            upper,
            upper_closed,
        } => {
            let open = if *lower_closed { "[" } else { "(" };
            match upper {
                None => format!("{open}{:.12}, ∞)", lower.beta_approx),
                Some(u) => {
                    let close = if *upper_closed { "]" } else { ")" };
                    format!(
                        "{open}{:.12}, {:.12}{close}",
                        lower.beta_approx, u.beta_approx
                    )
                }
            }
        }
    }
}

pub fn cell_str(pres: &MonoidPresentation, c: &Cell) -> String {
    let blockers: Vec<String> = c.blockers.iter().map(|b| word_str(pres, b)).collect();
    format!("{} | {}", word_str(pres, &c.prefix), blockers.join(", "))
}

pub fn set_value(pres: &MonoidPresentation, s: &SymbolicSet) -> Value {
    Value::Array(
        s.cells
            .iter()
            .map(|c| {
                json!({
                    "blockers": words_value(pres, &c.blockers),
                    "prefix": word_str(pres, &c.prefix),
                })
            })
            .collect(),
    )
}

pub fn gvalue_value(v: &GValue) -> Value {
    match v {
        GValue::Exact(r) => json!({
            "approx": r.to_f64().unwrap_or(f64::NAN),
            "exact": format_rational(r),
        }),
        GValue::Approx(f) => json!({ "approx": f }),
    }
}

/// One CSV line; fields with commas or quotes are not produced by this
/// tool, so plain joining is enough.
pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}
