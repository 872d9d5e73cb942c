use std::fmt::Write as _;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use agpoly_core::algebra::format::{from_machine, to_machine};
use agpoly_core::verify::Status;
use agpoly_core::Params;

use crate::commands::{point_text, ComputeResult, Report};
use crate::{Format, Method};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MachineResult {
    params: Params,
    method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cutoff: Option<i64>,
    terms: Value,
    #[serde(default)]
    meta: Value,
}

pub fn render_compute(result: &ComputeResult, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(result.poly.to_string()),
        Format::Machine => {
            let m = MachineResult {
                params: result.params,
                method: result.method,
                cutoff: result.cutoff,
                terms: to_machine(&result.poly),
                meta: result.meta.clone(),
            };
            Ok(serde_json::to_string(&m)?)
        }
    }
}

pub fn parse_compute(text: &str) -> Result<ComputeResult> {
    let m: MachineResult = serde_json::from_str(text).context("not a machine-format result")?;
    let p = m.params;
    let params = Params::new(p.n, p.k, p.l, p.r)?;
    Ok(ComputeResult {
        params,
        method: m.method,
        cutoff: m.cutoff,
        poly: from_machine(&m.terms)?,
        meta: if m.meta.is_null() { json!({}) } else { m.meta },
    })
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
        Status::NotDivisible => "not-divisible",
    }
}

pub fn render_report(report: &Report, format: Format) -> Result<String> {
    let statuses = [Status::Pass, Status::Fail, Status::Skipped, Status::NotDivisible];
    match format {
        Format::Machine => {
            let points: Vec<Value> = report
                .points
                .iter()
                .map(|p| {
                    let mut v = json!({"params": p.label, "checks": p.checks});
                    if let Some(r) = &p.report {
                        v["report"] = r.clone();
                    }
                    v
                })
                .collect();
            let summary: serde_json::Map<String, Value> = statuses
                .iter()
                .map(|&s| (status_name(s).to_string(), json!(report.count(s))))
                .collect();
            let out = json!({
                "suite": report.suite.name(),
                "grid": report.grid,
                "points": points,
                "summary": summary,
            });
            Ok(serde_json::to_string_pretty(&out)? + "\n")
        }
        Format::Text => {
            let mut out = String::new();
            for p in &report.points {
                let at = point_text(&p.label);
                for c in &p.checks {
                    writeln!(out, "{at}  {c}")?;
                }
                if let Some(division) = p.report.as_ref().map(|r| &r["division"]) {
                    match division["P_text"].as_str() {
                        Some(text) => writeln!(
                            out,
                            "{at}  P_N = {text}  support {}",
                            division["support_box"]
                        )?,
                        None => writeln!(out, "{at}  P_N not a polynomial")?,
                    }
                }
            }
            let summary = statuses
                .iter()
                .map(|&s| format!("{} {}", report.count(s), status_name(s)))
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(out, "{} over {} points: {summary}", report.suite.name(), report.points.len())?;
            Ok(out)
        }
    }
}
