use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use agpoly_core::bosonic::{bosonic_sum, default_cutoff, preferred_parity};
use agpoly_core::fermionic::fermionic_sum;
use agpoly_core::polyhedral::{degree_bounds, hilbert_by_enumeration, hilbert_by_transfer, recursion_rhs};
use agpoly_core::quotient::hilbert_by_quotient;
use agpoly_core::verify::{self, Check, CrossMethod, Status};
use agpoly_core::{LaurentPoly, Params};

use crate::grid::Grid;
use crate::{exit, CrossMethodArg, Method, Suite};

#[derive(Clone, Debug, PartialEq)]
pub struct ComputeResult {
    pub params: Params,
    pub method: Method,
    pub cutoff: Option<i64>,
    pub poly: LaurentPoly,
    pub meta: Value,
}

pub fn compute(n: i64, k: i64, l: i64, r: i64, method: Method, cutoff: Option<i64>) -> Result<ComputeResult> {
    let params = Params::new(n, k, l, r)?;
    let (poly, cutoff, meta) = match method {
        Method::Fermionic => (fermionic_sum(&params)?, None, json!({})),
        Method::Enumerate => (hilbert_by_enumeration(&params)?, None, json!({})),
        Method::Transfer => (hilbert_by_transfer(&params)?, None, json!({})),
        Method::Recursion => (recursion_rhs(&params)?, None, json!({})),
        Method::Bosonic => {
            let cutoff = match cutoff {
                Some(c) => c,
                None => default_cutoff(&params)?,
            };
            let parity = preferred_parity(&params);
            let series = bosonic_sum(&params, parity, cutoff)?;
            (series.into_poly(), Some(cutoff), json!({ "parity": parity }))
        }
        Method::Oracle => {
            let qbound = match cutoff {
                Some(c) => c,
                None => degree_bounds(&params)?.0,
            };
            (hilbert_by_quotient(&params, qbound)?, Some(qbound), json!({}))
        }
    };
    Ok(ComputeResult {
        params,
        method,
        cutoff,
        poly,
        meta,
    })
}

/// Default grids and cutoff read from a JSON file:
/// `{"grids": {"stp": "N=2..4,..."}, "cutoff": 20}`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub grids: BTreeMap<String, String>,
    #[serde(default)]
    pub cutoff: Option<i64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn grid_for(&self, suite: Suite) -> Option<String> {
        self.grids
            .get(suite.name())
            .or_else(|| self.grids.get("default"))
            .cloned()
    }
}

#[derive(Debug)]
pub struct PointResult {
    pub label: Value,
    pub checks: Vec<Check>,
    pub report: Option<Value>,
}

#[derive(Debug)]
pub struct Report {
    pub suite: Suite,
    pub grid: String,
    pub points: Vec<PointResult>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.points
            .iter()
            .flat_map(|p| &p.checks)
            .filter(|c| c.status == status)
            .count()
    }

    pub fn exit_code(&self) -> u8 {
        if self.count(Status::Fail) > 0 {
            exit::MISMATCH
        } else if self.count(Status::NotDivisible) > 0 {
            exit::NOT_DIVISIBLE
        } else {
            exit::OK
        }
    }
}

fn cross_methods(methods: Option<&[CrossMethodArg]>) -> Vec<CrossMethod> {
    let chosen = methods.unwrap_or(&[
        CrossMethodArg::Fermionic,
        CrossMethodArg::Transfer,
        CrossMethodArg::Oracle,
    ]);
    chosen
        .iter()
        .map(|m| match m {
            CrossMethodArg::Fermionic => CrossMethod::Fermionic,
            CrossMethodArg::Enumerate => CrossMethod::Enumerate,
            CrossMethodArg::Transfer => CrossMethod::Transfer,
            CrossMethodArg::Oracle => CrossMethod::Oracle,
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn per_params(suite: Suite) -> bool {
    !matches!(suite, Suite::Grouped | Suite::AndrewsGordon | Suite::Conjecture)
}

pub fn verify(
    suite: Suite,
    spec: &str,
    methods: Option<&[CrossMethodArg]>,
    cutoff: Option<i64>,
) -> Result<Report> {
    if methods.is_some() && suite != Suite::Crosscheck {
        bail!("--methods only applies to the crosscheck suite");
    }
    let grid = Grid::parse(spec)?;
    let points = if per_params(suite) {
        grid.with_default("l", "0..k")?.with_default("r", "0..k")?.points()?
    } else {
        let mut seen = BTreeSet::new();
        grid.with_default("l", "k")?
            .with_default("r", "k")?
            .points()?
            .into_iter()
            .filter(|p| seen.insert((p[0], p[1])))
            .collect()
    };
    ensure!(!points.is_empty(), "grid `{spec}` has no points");
    let methods = cross_methods(methods);

    let results: Vec<Result<PointResult>> = points
        .par_iter()
        .map(|&[n, k, l, r]| {
            let label = if per_params(suite) {
                json!({"N": n, "k": k, "l": l, "r": r})
            } else {
                json!({"N": n, "k": k})
            };
            run_point(suite, [n, k, l, r], &methods, cutoff)
                .map(|(checks, report)| PointResult {
                    label: label.clone(),
                    checks,
                    report,
                })
                .with_context(|| format!("at {}", point_text(&label)))
        })
        .collect();
    let points = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Report {
        suite,
        grid: spec.to_string(),
        points,
    })
}

fn run_point(
    suite: Suite,
    [n, k, l, r]: [i64; 4],
    methods: &[CrossMethod],
    cutoff: Option<i64>,
) -> Result<(Vec<Check>, Option<Value>)> {
    let checks = match suite {
        Suite::Crosscheck => verify::crosscheck(&Params::new(n, k, l, r)?, methods)?,
        Suite::Stp => verify::stp(&Params::new(n, k, l, r)?, cutoff)?,
        Suite::Recursion => verify::recursion(&Params::new(n, k, l, r)?)?,
        Suite::Symmetry => verify::symmetry(&Params::new(n, k, l, r)?)?,
        Suite::Lemmas => verify::lemmas(&Params::new(n, k, l, r)?, cutoff)?,
        Suite::Grouped => verify::grouped(n, k)?,
        Suite::AndrewsGordon => verify::andrews_gordon(n, k, cutoff)?,
        Suite::Conjecture => {
            let outcome = verify::conjecture(n, k, cutoff)?;
            return Ok((outcome.checks, Some(outcome.report)));
        }
    };
    Ok((checks, None))
}

pub fn point_text(label: &Value) -> String {
    label
        .as_object()
        .map(|o| {
            ["N", "k", "l", "r"]
                .iter()
                .filter_map(|key| o.get(*key).map(|v| format!("{key}={v}")))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}
