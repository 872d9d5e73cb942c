//! Text and machine renderings of [`LaurentPoly`].
//!
//! Text: terms in ascending `(i, j)` order as `c*q^i*z^j` joined by ` + `;
//! unit coefficients and exponents are elided and a negative coefficient
//! keeps its sign inline (`1 + -q*z`). Machine: a JSON array of
//! `[i, j, "coefficient"]` triples in the same order.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

fn render_var(out: &mut Vec<String>, name: &str, exp: i64) {
    match exp {
        0 => {}
        1 => out.push(name.to_string()),
        e => out.push(format!("{name}^{e}")),
    }
}

pub fn render_text(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .iter()
        .map(|(&(i, j), c)| {
            let mut vars = Vec::new();
            render_var(&mut vars, "q", i);
            render_var(&mut vars, "z", j);
            if vars.is_empty() {
                return c.to_string();
            }
            let body = vars.join("*");
            if c.is_one() {
                body
            } else if (-c).is_one() {
                format!("-{body}")
            } else {
                format!("{c}*{body}")
            }
        })
        .collect();
    terms.join(" + ")
}

/// Machine form: `[[i, j, "c"], ...]`.
pub fn to_machine(p: &LaurentPoly) -> Value {
    Value::Array(
        p.iter()
            .map(|(&(i, j), c)| serde_json::json!([i, j, c.to_string()]))
            .collect(),
    )
}

pub fn from_machine(v: &Value) -> Result<LaurentPoly> {
    let bad = |msg: &str| Error::Parse(format!("machine polynomial: {msg}"));
    let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
    let mut p = LaurentPoly::zero();
    let mut last = None;
    for item in arr {
        let t = item
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad("each term must be [i, j, \"c\"]"))?;
        let i = t[0].as_i64().ok_or_else(|| bad("q-exponent is not an integer"))?;
        let j = t[1].as_i64().ok_or_else(|| bad("z-exponent is not an integer"))?;
        let c = t[2]
            .as_str()
            .and_then(|s| BigInt::from_str(s).ok())
            .ok_or_else(|| bad("coefficient must be a decimal string"))?;
        if c.is_zero() {
            return Err(bad("zero coefficient"));
        }
        if last.is_some_and(|prev| prev >= (i, j)) {
            return Err(bad("terms must be strictly ascending in (i, j)"));
        }
        last = Some((i, j));
        p.add_term((i, j), c);
    }
    Ok(p)
}
