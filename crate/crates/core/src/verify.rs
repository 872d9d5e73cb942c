//! Verification suites over single parameter points.
//!
//! Each check returns [`Check`] records; callers decide how to aggregate
//! them. Polynomial mismatches report the first differing coefficient.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::format::to_machine;
use crate::algebra::{LaurentPoly, Series};
use crate::bosonic::{
    andrews_gordon_check, bosonic_sum, default_cutoff, grouped_contribution, select_case,
    factor_table, singular_contribution, singular_self_consistent, vertex_series, Parity,
    SingularContribution,
};
use crate::error::Result;
use crate::fermionic::{andrews_gordon_lhs_terms, fermionic_sum, fermionic_terms};
use crate::params::Params;
use crate::polyhedral::{degree_bounds, hilbert_by_enumeration, hilbert_by_transfer, recursion_rhs, reflect_check};
use crate::quotient::hilbert_by_quotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable at this point (e.g. recursion with `r = 0`).
    Skipped,
    /// Conjecture data: the division left a non-polynomial remainder.
    NotDivisible,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, status: Status, detail: Option<String>) -> Self {
        Self {
            name: name.into(),
            status,
            detail,
        }
    }

    fn pass(name: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, None)
    }

    fn skipped(name: impl Into<String>, why: &str) -> Self {
        Self::new(name, Status::Skipped, Some(why.to_string()))
    }

    fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::new(name, Status::Fail, Some(detail()))
        }
    }

    fn compare(name: impl Into<String>, left: &LaurentPoly, right: &LaurentPoly) -> Self {
        Self::from_bool(name, left == right, || describe_difference(left, right))
    }

    fn compare_series(name: impl Into<String>, left: &Series, right: &Series) -> Self {
        let cutoff = left.cutoff().min(right.cutoff());
        let (a, b) = (left.poly().truncate_q(cutoff), right.poly().truncate_q(cutoff));
        Self::from_bool(name, a == b, || {
            format!("{} (through q^{cutoff})", describe_difference(&a, &b))
        })
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::NotDivisible => "NDIV",
        };
        write!(f, "{tag} {}", self.name)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

pub fn describe_difference(left: &LaurentPoly, right: &LaurentPoly) -> String {
    match left.first_difference(right) {
        None => "equal".into(),
        Some(((i, j), a, b)) => format!("first difference at q^{i} z^{j}: {a} vs {b}"),
    }
}

/// Methods compared by the cross-check suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossMethod {
    Fermionic,
    Enumerate,
    Transfer,
    Oracle,
}

/// Fermionic sum, enumeration, transfer sweep and (optionally) the quotient
/// oracle against each other.
pub fn crosscheck(params: &Params, methods: &[CrossMethod]) -> Result<Vec<Check>> {
    let reference = hilbert_by_enumeration(params)?;
    let mut out = Vec::new();
    for m in methods {
        let (name, value) = match m {
            CrossMethod::Enumerate => continue,
            CrossMethod::Fermionic => ("fermionic = enumeration", fermionic_sum(params)?),
            CrossMethod::Transfer => ("transfer = enumeration", hilbert_by_transfer(params)?),
            CrossMethod::Oracle => {
                let (maxdeg_q, _) = degree_bounds(params)?;
                ("quotient = enumeration", hilbert_by_quotient(params, maxdeg_q)?)
            }
        };
        out.push(Check::compare(name, &value, &reference));
    }
    Ok(out)
}

/// The selected parity sums equal `d_N` through `cutoff`, and agree with each
/// other when both apply.
pub fn stp(params: &Params, cutoff: Option<i64>) -> Result<Vec<Check>> {
    let cutoff = match cutoff {
        Some(c) => c,
        None => default_cutoff(params)?,
    };
    let d = hilbert_by_transfer(params)?;
    let mut out = Vec::new();
    let mut sums = Vec::new();
    for parity in select_case(params) {
        let s = bosonic_sum(params, parity, cutoff)?;
        out.push(Check::from_bool(
            format!("d^{} = d_N through q^{cutoff}", short(parity)),
            s.agrees_with_poly(&d),
            || describe_difference(s.poly(), &d.truncate_q(cutoff)),
        ));
        sums.push(s);
    }
    if let [a, b] = sums.as_slice() {
        out.push(Check::compare_series("d^e = d^o", a, b));
    }
    Ok(out)
}

fn short(p: Parity) -> &'static str {
    match p {
        Parity::Even => "e",
        Parity::Odd => "o",
    }
}

/// `d_N(k,l,r) = d_N(k,l,r-1) + (q^N z)^r d_{N-1}(k,l,k-r)`.
pub fn recursion(params: &Params) -> Result<Vec<Check>> {
    if params.r < 1 || params.n < 3 {
        return Ok(vec![Check::skipped("recursion", "needs r >= 1 and N >= 3")]);
    }
    Ok(vec![Check::compare(
        "recursion",
        &hilbert_by_transfer(params)?,
        &recursion_rhs(params)?,
    )])
}

pub fn symmetry(params: &Params) -> Result<Vec<Check>> {
    let ok = reflect_check(params)?;
    Ok(vec![Check::from_bool("reflection e_i -> e_{N+1-i}", ok, || {
        "d_N(k,l,r) differs from the reflected d_N(k,r,l)".into()
    })])
}

/// Per-vertex recursion in `r`, for every vertex `(m, n)` of the chain.
pub fn lemma_vertex_recursion(params: &Params, cutoff: i64) -> Result<Vec<Check>> {
    let Params { n: big_n, k, l, r } = *params;
    let here = Params::formal(big_n, k, l, r)?;
    let lower = Params::formal(big_n, k, l, r - 1)?;
    let shorter = Params::formal(big_n - 1, k, l, k - r)?;
    let mut out = Vec::new();
    for m in 0..=big_n {
        for n in 0..=big_n - m {
            let lhs = vertex_series(&here, m, n, cutoff)?;
            let mut rhs = vertex_series(&lower, m, n, cutoff)?;
            let name = format!("l1 vertex ({m},{n})");
            if n > 0 {
                if r < 0 {
                    out.push(Check::skipped(name, "needs r >= 0"));
                    continue;
                }
                let tail = vertex_series(&shorter, m, n - 1, cutoff)?.shift(big_n * r, r)?;
                rhs = rhs.add(&tail);
            }
            out.push(Check::compare_series(name, &lhs, &rhs));
        }
    }
    Ok(out)
}

/// Vanishing at `r = -1` of the even sum (odd `N`) or odd sum (even `N`),
/// and the pairwise cancellation behind it.
pub fn lemma_vanishing(big_n: i64, k: i64, l: i64, cutoff: i64) -> Result<Vec<Check>> {
    let par = Params::formal(big_n, k, l, -1)?;
    let parity = if big_n % 2 != 0 { Parity::Even } else { Parity::Odd };
    let mut out = Vec::new();
    let s = bosonic_sum(&par, parity, cutoff)?;
    out.push(Check::from_bool(
        format!("l2 d^{}(r=-1) = 0", short(parity)),
        s.is_zero(),
        || format!("nonzero: {}", s.poly()),
    ));
    for m in 0..=big_n {
        for n in (0..).take_while(|n| m + 2 * n < big_n) {
            let a = vertex_series(&par, m, 2 * n, cutoff)?;
            let b = vertex_series(&par, m, 2 * n + 1, cutoff)?;
            out.push(Check::compare_series(
                format!("l2 pair ({m},{}) = -({m},{})", 2 * n, 2 * n + 1),
                &a,
                &b.neg(),
            ));
        }
    }
    Ok(out)
}

/// Even and odd sums coincide for even `N` and `l + r = k`.
pub fn lemma_balanced(params: &Params, cutoff: i64) -> Result<Vec<Check>> {
    if params.n % 2 != 0 || params.l + params.r != params.k {
        return Ok(vec![Check::skipped("l3", "needs even N and l + r = k")]);
    }
    let even = bosonic_sum(params, Parity::Even, cutoff)?;
    let odd = bosonic_sum(params, Parity::Odd, cutoff)?;
    Ok(vec![Check::compare_series("l3 d^e = d^o", &even, &odd)])
}

/// All three lemma checks at one `(N, k, l, r)` point.
pub fn lemmas(params: &Params, cutoff: Option<i64>) -> Result<Vec<Check>> {
    let cutoff = match cutoff {
        Some(c) => c,
        None => default_cutoff(params)?,
    };
    let mut out = lemma_vertex_recursion(params, cutoff)?;
    out.extend(lemma_vanishing(params.n, params.k, params.l, cutoff)?);
    out.extend(lemma_balanced(params, cutoff)?);
    Ok(out)
}

/// Closed form of each merged vertex against the four-term sum.
pub fn grouped(big_n: i64, k: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in 0..=big_n / 2 {
        for n in 0..=big_n / 2 - m {
            let (closed, sum4) = grouped_contribution(big_n, k, m, n)?;
            out.push(Check::from_bool(format!("grouped ({m},{n})"), closed == sum4, || {
                format!("closed {closed} differs from {sum4}")
            }));
        }
    }
    Ok(out)
}

/// The Andrews-Gordon type identity for even `N`, plus term-by-term
/// agreement of the two left-side implementations.
pub fn andrews_gordon(big_n: i64, k: i64, cutoff: Option<i64>) -> Result<Vec<Check>> {
    let params = Params::new(big_n, k, k, k)?;
    if big_n % 2 != 0 {
        return Ok(vec![Check::skipped("andrews-gordon", "needs even N")]);
    }
    let cutoff = match cutoff {
        Some(c) => c,
        None => default_cutoff(&params)?,
    };
    let general = fermionic_terms(&params)?;
    let direct = andrews_gordon_lhs_terms(big_n, k);
    let same_terms = general == direct;
    Ok(vec![
        Check::from_bool("fermionic summands at l = r = k", same_terms, || {
            format!("{} vs {} nonzero summands", general.len(), direct.len())
        }),
        Check::from_bool(
            format!("identity through q^{cutoff}"),
            andrews_gordon_check(big_n, k, cutoff)?,
            || "series sides differ".into(),
        ),
    ])
}

/// Result of the conjecture experiment at one `(N, k)`.
#[derive(Clone, Debug)]
pub struct ConjectureOutcome {
    pub checks: Vec<Check>,
    pub report: Value,
}

pub fn conjecture(big_n: i64, k: i64, cutoff: Option<i64>) -> Result<ConjectureOutcome> {
    let params = Params::new(big_n, k, k, k)?;
    let cutoff = match cutoff {
        Some(c) => c,
        None => default_cutoff(&params)?,
    };
    let sc = singular_contribution(big_n, k)?;
    let consistent = singular_self_consistent(&sc, cutoff)?;
    let mut checks = vec![Check::from_bool(
        format!("d_M' series = sum of vertex series through q^{cutoff}"),
        consistent,
        || "rational and series forms of d_M' disagree".into(),
    )];
    checks.push(match &sc.p {
        Some(_) => Check::pass("P_N is a Laurent polynomial"),
        None => Check::new(
            "P_N is a Laurent polynomial",
            Status::NotDivisible,
            Some(format!(
                "remaining factors: {}",
                sc.obstruction()
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )),
        ),
    });
    let report = conjecture_report(&sc, cutoff, consistent);
    Ok(ConjectureOutcome { checks, report })
}

fn conjecture_report(sc: &SingularContribution, cutoff: i64, consistent: bool) -> Value {
    let factors: Vec<Value> = factor_table(&sc.dm)
        .into_iter()
        .map(|((a, b), m)| json!({"a": a, "b": b, "multiplicity": m}))
        .collect();
    let division = match &sc.p {
        Some(p) => {
            let support = p.support_box().map(|(qlo, qhi, zlo, zhi)| {
                json!({"q": [qlo, qhi], "z": [zlo, zhi]})
            });
            json!({
                "divisible": true,
                "P": to_machine(p),
                "P_text": p.to_string(),
                "support_box": support,
                "nonnegative_exponents": p.iter().all(|(&(i, j), _)| i >= 0 && j >= 0),
            })
        }
        None => json!({
            "divisible": false,
            "obstruction": sc.obstruction().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
    };
    json!({
        "N": sc.big_n,
        "k": sc.k,
        "cutoff": cutoff,
        "self_consistent": consistent,
        "dM": {
            "unit": [sc.dm.unit().0, sc.dm.unit().1],
            "sign": sc.dm.sign(),
            "numerator": to_machine(sc.dm.numerator()),
            "denominator": factors,
        },
        "division": division,
    })
}
