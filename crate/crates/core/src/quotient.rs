//! Graded dimensions of `C[e_1..e_N] / I_N(k, l, r)` by linear algebra.
//!
//! The ideal is generated by `e_1^{l+1}`, `e_N^{r+1}` and the coefficients of
//! `t^i` in `e(t)^{k+1}`, `e(t) = sum_s e_s t^s`. With `deg e_s = (s, 1)` each
//! graded piece of the ideal is spanned by monomial multiples of the
//! generators, so the quotient dimension is `#monomials - rank`.
//!
//! This module depends only on [`crate::algebra`] and never consults the
//! monomial-basis or fermionic descriptions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::params::Params;

/// Exponent vector of a monomial in `e_1..e_N`.
pub type Monomial = Vec<u32>;

/// Word-sized prime used for ranks: `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

/// A homogeneous polynomial in `e_1..e_N` with its bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub deg_q: i64,
    pub deg_z: i64,
    pub terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGeneratorSet {
    pub n: usize,
    pub generators: Vec<Generator>,
}

/// Monomials `e^a` with `sum a_s = deg_z` and `sum s a_s = deg_q`.
pub fn monomials_of_bidegree(n: usize, deg_q: i64, deg_z: i64) -> Vec<Monomial> {
    fn rec(s: usize, n: usize, q: i64, z: i64, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if s > n {
            if q == 0 && z == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = s as i64;
        // the remaining variables have weight >= s, so z of them need >= s*z
        if q < 0 || z < 0 || q < w * z || q > n as i64 * z {
            return;
        }
        let mut a = 0;
        while a <= z && w * a <= q {
            cur[s - 1] = a as u32;
            rec(s + 1, n, q - w * a, z - a, cur, out);
            a += 1;
        }
        cur[s - 1] = 0;
    }
    let mut out = Vec::new();
    if n == 0 || deg_q < 0 || deg_z < 0 {
        return out;
    }
    rec(1, n, deg_q, deg_z, &mut vec![0; n], &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

fn power_generator(n: usize, var: usize, exp: u32) -> Generator {
    let mut mono = vec![0u32; n];
    mono[var] = exp;
    Generator {
        deg_q: (var as i64 + 1) * exp as i64,
        deg_z: exp as i64,
        terms: BTreeMap::from([(mono, BigInt::one())]),
    }
}

/// Generators of `I_N(k, l, r)`; each coefficient of `e(t)^{k+1}` is divided
/// by the gcd of its multinomial coefficients.
pub fn ideal_generators(params: &Params) -> Result<IdealGeneratorSet> {
    params.require_nonnegative()?;
    let n = params.n as usize;
    let k1 = params.k + 1;
    let mut generators = vec![
        power_generator(n, 0, (params.l + 1) as u32),
        power_generator(n, n - 1, (params.r + 1) as u32),
    ];
    for i in k1..=params.n * k1 {
        // ordered tuples (alpha_1..alpha_{k+1}) with sum i, grouped by the
        // monomial they produce: multinomial (k+1)! / prod a_s!
        let mut terms = BTreeMap::new();
        for mono in monomials_of_bidegree(n, i, k1) {
            let denom = mono
                .iter()
                .fold(BigInt::one(), |acc, &a| acc * factorial(a));
            terms.insert(mono, factorial(k1 as u32) / denom);
        }
        let g = terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in terms.values_mut() {
                *c /= &g;
            }
        }
        generators.push(Generator {
            deg_q: i,
            deg_z: k1,
            terms,
        });
    }
    Ok(IdealGeneratorSet { n, generators })
}

/// Basis monomials and the spanning rows of the ideal in one bidegree.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub deg_q: i64,
    pub deg_z: i64,
    pub basis: Vec<Monomial>,
    /// Rows over `basis`, deduplicated.
    pub rows: Vec<Vec<BigInt>>,
}

pub fn graded_piece(ideal: &IdealGeneratorSet, deg_q: i64, deg_z: i64) -> GradedPiece {
    let basis = monomials_of_bidegree(ideal.n, deg_q, deg_z);
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = BTreeSet::new();
    for g in &ideal.generators {
        for mult in monomials_of_bidegree(ideal.n, deg_q - g.deg_q, deg_z - g.deg_z) {
            let mut row = vec![BigInt::zero(); basis.len()];
            for (mono, c) in &g.terms {
                let prod: Monomial = mono.iter().zip(&mult).map(|(a, b)| a + b).collect();
                row[index[&prod]] += c;
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.insert(row);
            }
        }
    }
    GradedPiece {
        deg_q,
        deg_z,
        basis,
        rows: rows.into_iter().collect(),
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<BigInt>], p: u64) -> usize {
    let big_p = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| c.mod_floor(&big_p).to_u64().expect("reduced mod p"))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank over the rationals (fraction-free Bareiss elimination).
pub fn rank_exact(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..m.len() {
            for j in col + 1..cols {
                let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// `dim (D_N(k, l, r))^{i, j}` with ranks over `F_PRIME`.
pub fn graded_dimension(params: &Params, deg_q: i64, deg_z: i64) -> Result<usize> {
    let ideal = ideal_generators(params)?;
    Ok(piece_dimension(&graded_piece(&ideal, deg_q, deg_z), false))
}

/// Same, with the exact rational rank.
pub fn graded_dimension_exact(params: &Params, deg_q: i64, deg_z: i64) -> Result<usize> {
    let ideal = ideal_generators(params)?;
    Ok(piece_dimension(&graded_piece(&ideal, deg_q, deg_z), true))
}

fn piece_dimension(piece: &GradedPiece, exact: bool) -> usize {
    if piece.basis.is_empty() {
        return 0;
    }
    let rank = if exact {
        rank_exact(&piece.rows)
    } else {
        rank_mod_p(&piece.rows, PRIME)
    };
    piece.basis.len() - rank
}

/// `sum_{0 <= j <= i <= qbound} dim^{i,j} q^i z^j`. This is the whole
/// Hilbert polynomial once `qbound` reaches the top q-degree of the quotient.
pub fn hilbert_by_quotient(params: &Params, qbound: i64) -> Result<LaurentPoly> {
    if qbound < 0 {
        return Err(Error::Precondition(format!("qbound must be >= 0, got {qbound}")));
    }
    let ideal = ideal_generators(params)?;
    let mut out = LaurentPoly::zero();
    for i in 0..=qbound {
        for j in 0..=i {
            let dim = piece_dimension(&graded_piece(&ideal, i, j), false);
            out.add_term((i, j), BigInt::from(dim));
        }
    }
    Ok(out)
}
