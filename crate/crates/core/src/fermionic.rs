//! Fermionic (Gordon-type) sum for `d_N(k, l, r; q, z)`.
//!
//! `d_N = sum_v q^{v^t Q v + L^t v} z^{sum i v_i}
//!        prod_i [ (N+1)i - (2Qv + L + R - v)_i ; v_i ]_q`
//! with `Q_{ij} = min(i, j)`, `L_i = max(i - l, 0)`, `R_i = max(i - r, 0)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::LaurentPoly;
use crate::error::Result;
use crate::params::Params;

/// Matrix `Q` and vectors `L`, `R` of the fermionic sum. Indices are
/// zero-based here; entry `i` corresponds to the one-based index `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GordonData {
    pub k: usize,
    pub q: Vec<Vec<i64>>,
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

pub fn gordon_data(k: i64, l: i64, r: i64) -> GordonData {
    let k = k.max(0) as usize;
    let idx = |i: usize| i as i64 + 1;
    GordonData {
        k,
        q: (0..k)
            .map(|i| (0..k).map(|j| idx(i).min(idx(j))).collect())
            .collect(),
        left: (0..k).map(|i| (idx(i) - l).max(0)).collect(),
        right: (0..k).map(|i| (idx(i) - r).max(0)).collect(),
    }
}

/// Memoized Gaussian binomials as dense coefficient vectors in `q`.
#[derive(Default)]
pub struct BinomialCache {
    memo: HashMap<(i64, i64), Vec<BigInt>>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[n; m]_q`, zero unless `0 <= m <= n`.
    ///
    /// Uses `[n; m] = [n-1; m-1] + q^m [n-1; m]`.
    pub fn get(&mut self, n: i64, m: i64) -> Vec<BigInt> {
        if m < 0 || n < 0 || m > n {
            return Vec::new();
        }
        if m == 0 || m == n {
            return vec![BigInt::from(1)];
        }
        let m = m.min(n - m);
        if let Some(v) = self.memo.get(&(n, m)) {
            return v.clone();
        }
        let a = self.get(n - 1, m - 1);
        let b = self.get(n - 1, m);
        let deg = (m * (n - m)) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i + m as usize] += c;
        }
        self.memo.insert((n, m), out.clone());
        out
    }
}

/// Gaussian binomial `[n; m]_q` as a polynomial in `q`.
pub fn gaussian_binomial(n: i64, m: i64) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(&BinomialCache::new().get(n, m))
}

fn multiply_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// One summand of the fermionic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicTerm {
    pub v: Vec<i64>,
    /// `q^a z^b` times the binomial product, expanded.
    pub value: LaurentPoly,
}

struct Enumerator<'a> {
    data: &'a GordonData,
    n: i64,
    /// Current binomial tops `(N+1)i - (2Qv + L + R - v)_i`.
    tops: Vec<i64>,
    v: Vec<i64>,
}

impl Enumerator<'_> {
    /// Adds `delta` to `v[j]` and updates every top accordingly.
    fn bump(&mut self, j: usize, delta: i64) {
        self.v[j] += delta;
        for i in 0..self.data.k {
            let coeff = -2 * self.data.q[i][j] + i64::from(i == j);
            self.tops[i] += coeff * delta;
        }
    }

    /// A branch is dead once some binomial is already zero; tops only
    /// decrease as components grow, so it stays zero.
    fn dead(&self) -> bool {
        self.tops
            .iter()
            .zip(&self.v)
            .any(|(&t, &vi)| t < 0 || t < vi)
    }

    fn walk(&mut self, j: usize, visit: &mut dyn FnMut(&[i64], &[i64])) {
        if j == self.data.k {
            visit(&self.v, &self.tops);
            return;
        }
        let bound = (self.n + 1) * (j as i64 + 1);
        let start = self.v[j];
        while self.v[j] <= bound && !self.dead() {
            self.walk(j + 1, visit);
            self.bump(j, 1);
        }
        let taken = self.v[j] - start;
        self.bump(j, -taken);
    }
}

/// Calls `visit(v, tops)` for every `v` whose binomial product is nonzero,
/// in lexicographic order.
fn for_each_support_vector(params: &Params, visit: &mut dyn FnMut(&[i64], &[i64])) {
    let data = gordon_data(params.k, params.l, params.r);
    let k = data.k;
    let tops = (0..k)
        .map(|i| (params.n + 1) * (i as i64 + 1) - data.left[i] - data.right[i])
        .collect();
    let mut e = Enumerator {
        data: &data,
        n: params.n,
        tops,
        v: vec![0; k],
    };
    e.walk(0, visit);
}

/// Nonzero summands of the fermionic sum, in lexicographic order of `v`.
pub fn fermionic_terms(params: &Params) -> Result<Vec<FermionicTerm>> {
    params.require_nonnegative()?;
    let data = gordon_data(params.k, params.l, params.r);
    let mut cache = BinomialCache::new();
    let mut out = Vec::new();
    for_each_support_vector(params, &mut |v, tops| {
        let mut qexp = 0;
        let mut zexp = 0;
        for i in 0..data.k {
            let qv: i64 = (0..data.k).map(|j| data.q[i][j] * v[j]).sum();
            qexp += v[i] * qv + data.left[i] * v[i];
            zexp += (i as i64 + 1) * v[i];
        }
        let mut prod = vec![BigInt::from(1)];
        for i in 0..data.k {
            prod = multiply_dense(&prod, &cache.get(tops[i], v[i]));
        }
        let value = LaurentPoly::from_q_coeffs(&prod).shift(qexp, zexp);
        if !value.is_zero() {
            out.push(FermionicTerm {
                v: v.to_vec(),
                value,
            });
        }
    });
    Ok(out)
}

/// `d_N(k, l, r; q, z)` from the fermionic formula.
pub fn fermionic_sum(params: &Params) -> Result<LaurentPoly> {
    let mut total = LaurentPoly::zero();
    for t in fermionic_terms(params)? {
        total += &t.value;
    }
    Ok(total)
}

/// Summands of the left side of the Andrews-Gordon type identity for even
/// `N`, written directly from that identity:
/// `q^{sum_{i,j} v_i v_j min(i,j)} z^{sum i v_i}
///  prod_i [ (N+1)i - 2 sum_j v_j min(i,j) + v_i ; v_i ]_q`,
/// enumerated over the box `0 <= v_i <= (N+1)i` without pruning.
pub fn andrews_gordon_lhs_terms(n: i64, k: i64) -> Vec<FermionicTerm> {
    let k = k.max(0) as usize;
    let bounds: Vec<i64> = (1..=k as i64).map(|i| (n + 1) * i).collect();
    let mut cache = BinomialCache::new();
    let mut out = Vec::new();
    let mut v = vec![0i64; k];
    loop {
        let mut qexp = 0;
        let mut zexp = 0;
        let mut prod = vec![BigInt::from(1)];
        for i in 0..k {
            let ii = i as i64 + 1;
            let mut s = 0;
            for j in 0..k {
                let m = ii.min(j as i64 + 1);
                qexp += v[i] * v[j] * m;
                s += v[j] * m;
            }
            zexp += ii * v[i];
            prod = multiply_dense(&prod, &cache.get((n + 1) * ii - 2 * s + v[i], v[i]));
        }
        let value = LaurentPoly::from_q_coeffs(&prod).shift(qexp, zexp);
        if !value.is_zero() {
            out.push(FermionicTerm {
                v: v.clone(),
                value,
            });
        }
        // Odometer over the box, last coordinate fastest.
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if v[pos] < bounds[pos] {
                v[pos] += 1;
                for x in v.iter_mut().skip(pos + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Left side of the Andrews-Gordon type identity.
pub fn andrews_gordon_lhs(n: i64, k: i64) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for t in andrews_gordon_lhs_terms(n, k) {
        total += &t.value;
    }
    total
}
