//! Plain-text and JSON renderings of command results. Every number is an
//! exact rational string, never a float.

use horadam_core::{Poly, Rational, RationalFn};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Scalar(Rational),
    Function(RationalFn),
    Series(Vec<Rational>),
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

impl Output {
    pub fn plain(&self) -> String {
        match self {
            Output::Scalar(v) => v.to_string(),
            Output::Function(rf) => rf.to_string(),
            Output::Series(cs) => strings(cs).join(" "),
        }
    }

    pub fn json(&self) -> String {
        let value = match self {
            Output::Scalar(v) => json!({ "value": v.to_string() }),
            Output::Function(rf) => json!({
                "num": strings(rf.num().coeffs()),
                "den": strings(rf.den().coeffs()),
            }),
            Output::Series(cs) => json!({ "coefficients": strings(cs) }),
        };
        value.to_string()
    }

    /// Reads back what [`Output::json`] emits.
    pub fn from_json(text: &str) -> Result<Output, String> {
        let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let rationals = |v: &Value| -> Result<Vec<Rational>, String> {
            v.as_array()
                .ok_or("expected an array")?
                .iter()
                .map(|c| {
                    c.as_str()
                        .ok_or_else(|| "expected a string".to_string())?
                        .parse::<Rational>()
                        .map_err(|e| e.to_string())
                })
                .collect()
        };
        if let Some(v) = value.get("value") {
            let s = v.as_str().ok_or("value must be a string")?;
            return s.parse().map(Output::Scalar).map_err(|e| e.to_string());
        }
        if let (Some(num), Some(den)) = (value.get("num"), value.get("den")) {
            let rf = RationalFn::new(Poly::new(rationals(num)?), Poly::new(rationals(den)?))
                .map_err(|e| e.to_string())?;
            return Ok(Output::Function(rf));
        }
        if let Some(cs) = value.get("coefficients") {
            return Ok(Output::Series(rationals(cs)?));
        }
        Err("unrecognised JSON shape".into())
    }
}
