//! Lattice points of `P_N(k, l, r)`: exponent vectors `a >= 0` with
//! `a_1 <= l`, `a_N <= r` and `a_i + a_{i+1} <= k`.
//!
//! Each point contributes `q^{phi_q(a)} z^{phi_z(a)}` with
//! `phi_q = sum i a_i` and `phi_z = sum a_i`.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::params::Params;

/// Exponent vector `(a_1, .., a_N)` of the monomial `e_1^{a_1} .. e_N^{a_N}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn is_admissible(&self, params: &Params) -> bool {
        let a = &self.0;
        a.len() == params.n as usize
            && a.iter().all(|&x| x >= 0)
            && a[0] <= params.l
            && a[a.len() - 1] <= params.r
            && a.windows(2).all(|w| w[0] + w[1] <= params.k)
    }

    pub fn phi_q(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| (i as i64 + 1) * x)
            .sum()
    }

    pub fn phi_z(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// All admissible vectors in lexicographic order.
pub fn enumerate_basis(params: &Params) -> Result<Vec<ExponentVector>> {
    params.require_nonnegative()?;
    let n = params.n as usize;
    let mut out = Vec::new();
    let mut a = vec![0i64; n];
    fn rec(pos: usize, a: &mut Vec<i64>, p: &Params, out: &mut Vec<ExponentVector>) {
        let n = a.len();
        if pos == n {
            out.push(ExponentVector(a.clone()));
            return;
        }
        let mut hi = p.k;
        if pos == 0 {
            hi = hi.min(p.l);
        } else {
            hi = hi.min(p.k - a[pos - 1]);
        }
        if pos == n - 1 {
            hi = hi.min(p.r);
        }
        for x in 0..=hi {
            a[pos] = x;
            rec(pos + 1, a, p, out);
        }
        a[pos] = 0;
    }
    rec(0, &mut a, params, &mut out);
    Ok(out)
}

/// `sum_{a in P_N(k,l,r)} q^{phi_q(a)} z^{phi_z(a)}` by explicit enumeration.
pub fn hilbert_by_enumeration(params: &Params) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for a in enumerate_basis(params)? {
        p.add_term((a.phi_q(), a.phi_z()), BigInt::one());
    }
    Ok(p)
}

/// Same polynomial by a left-to-right sweep whose state is the value of the
/// last coordinate, `0..=k`.
pub fn hilbert_by_transfer(params: &Params) -> Result<LaurentPoly> {
    params.require_nonnegative()?;
    let k = params.k;
    let width = k as usize + 1;
    let mut state: Vec<LaurentPoly> = (0..=k)
        .map(|a| {
            if a <= params.l {
                LaurentPoly::unit(a, a)
            } else {
                LaurentPoly::zero()
            }
        })
        .collect();
    for pos in 2..=params.n {
        // prefix[b] = sum_{a <= b} state[a]
        let mut prefix = Vec::with_capacity(width);
        let mut acc = LaurentPoly::zero();
        for s in &state {
            acc += s;
            prefix.push(acc.clone());
        }
        state = (0..=k)
            .map(|b| prefix[(k - b) as usize].shift(pos * b, b))
            .collect();
    }
    let mut total = LaurentPoly::zero();
    for (a, s) in state.iter().enumerate() {
        if a as i64 <= params.r {
            total += s;
        }
    }
    Ok(total)
}

/// `d_N(k, l, r - 1) + (q^N z)^r d_{N-1}(k, l, k - r)`, both by the
/// transfer sweep. Requires `r >= 1` and `N >= 3`.
pub fn recursion_rhs(params: &Params) -> Result<LaurentPoly> {
    params.require_nonnegative()?;
    if params.r < 1 {
        return Err(Error::Precondition(format!(
            "recursion needs r >= 1, got r = {}",
            params.r
        )));
    }
    if params.n < 3 {
        return Err(Error::Precondition(format!(
            "recursion needs N >= 3, got N = {}",
            params.n
        )));
    }
    let first = hilbert_by_transfer(&params.with_r(params.r - 1))?;
    let tail = params.k - params.r;
    if tail < 0 {
        // a_N <= r is already implied by a_N <= k.
        return Ok(first);
    }
    let shorter = Params {
        n: params.n - 1,
        r: tail,
        ..*params
    };
    let second = hilbert_by_transfer(&shorter)?.shift(params.n * params.r, params.r);
    Ok(first + second)
}

/// The image of `p` under `e_i -> e_{N+1-i}`: `q^i z^j -> q^{(N+1)j - i} z^j`.
pub fn reflect(p: &LaurentPoly, n: i64) -> LaurentPoly {
    p.map_exponents(|i, j| ((n + 1) * j - i, j))
}

/// `d_N(k, l, r)` equals the reflection of `d_N(k, r, l)`.
pub fn reflect_check(params: &Params) -> Result<bool> {
    let d = hilbert_by_transfer(params)?;
    let mirrored = hilbert_by_transfer(&params.swapped())?;
    Ok(d == reflect(&mirrored, params.n))
}

/// `(max phi_q, max phi_z)` over the admissible vectors, via a max-plus
/// version of the transfer sweep.
pub fn degree_bounds(params: &Params) -> Result<(i64, i64)> {
    params.require_nonnegative()?;
    let k = params.k;
    let sweep = |weight: &dyn Fn(i64, i64) -> i64| -> i64 {
        let mut best: Vec<Option<i64>> = (0..=k)
            .map(|a| (a <= params.l).then(|| weight(1, a)))
            .collect();
        for pos in 2..=params.n {
            best = (0..=k)
                .map(|b| {
                    best[..=(k - b) as usize]
                        .iter()
                        .flatten()
                        .max()
                        .map(|m| m + weight(pos, b))
                })
                .collect();
        }
        best.iter()
            .enumerate()
            .filter(|(a, _)| *a as i64 <= params.r)
            .filter_map(|(_, v)| *v)
            .max()
            .unwrap_or(0)
    };
    Ok((sweep(&|pos, a| pos * a), sweep(&|_, a| a)))
}
