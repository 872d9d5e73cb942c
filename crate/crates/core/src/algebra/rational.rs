//! Rational functions whose denominators are products of binomials
//! `1 - q^a z^b`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::LaurentPoly;
use super::series::{expand_factor, series_mul, Series};
use crate::error::{Error, Result};

/// The factor `1 - q^a z^b` in canonical orientation: `a > 0`, or `a = 0`
/// and `b > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    a: i64,
    b: i64,
}

impl BinomialFactor {
    /// Canonical factor, or `None` when `(a, b)` is not canonically oriented.
    pub fn new(a: i64, b: i64) -> Option<Self> {
        (a > 0 || (a == 0 && b > 0)).then_some(Self { a, b })
    }

    /// Canonicalizes `1 - q^a z^b`. Returns the factor and, when the
    /// orientation was flipped, the unit monomial `-q^{-a} z^{-b}` that
    /// multiplies `1 / (1 - q^{-a} z^{-b})`.
    pub fn canonicalize(a: i64, b: i64) -> Result<(Self, Option<(i64, i64)>)> {
        if a == 0 && b == 0 {
            return Err(Error::Precondition("binomial factor 1 - q^0 z^0".into()));
        }
        Ok(match Self::new(a, b) {
            Some(f) => (f, None),
            None => (Self { a: -a, b: -b }, Some((-a, -b))),
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `1 - q^a z^b` as a polynomial.
    pub fn as_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms([(0, 0, 1), (self.a, self.b, -1)])
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 - q^{}*z^{})", self.a, self.b)
    }
}

/// `sign * q^c * z^d * numerator / prod(denominator)`.
#[derive(Clone, Debug)]
pub struct RationalFn {
    sign: i8,
    unit: (i64, i64),
    numerator: LaurentPoly,
    denominator: BTreeMap<BinomialFactor, u32>,
}

impl RationalFn {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn from_poly(numerator: LaurentPoly) -> Self {
        Self {
            sign: 1,
            unit: (0, 0),
            numerator,
            denominator: BTreeMap::new(),
        }
    }

    /// `q^c z^d / prod_k (1 - q^{a_k} z^{b_k})` with raw (possibly
    /// non-canonical) factor exponents; flipped factors feed the unit.
    pub fn monomial_over(c: i64, d: i64, factors: &[(i64, i64)]) -> Result<Self> {
        let mut out = Self {
            sign: 1,
            unit: (c, d),
            numerator: LaurentPoly::one(),
            denominator: BTreeMap::new(),
        };
        for &(a, b) in factors {
            out.divide_by_raw(a, b)?;
        }
        Ok(out)
    }

    /// Divides by `1 - q^a z^b`, canonicalizing the factor.
    pub fn divide_by_raw(&mut self, a: i64, b: i64) -> Result<()> {
        let (f, flip) = BinomialFactor::canonicalize(a, b)?;
        if let Some((x, y)) = flip {
            self.sign = -self.sign;
            self.unit.0 += x;
            self.unit.1 += y;
        }
        *self.denominator.entry(f).or_insert(0) += 1;
        Ok(())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn unit(&self) -> (i64, i64) {
        self.unit
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<BinomialFactor, u32> {
        &self.denominator
    }

    /// Denominator factors with multiplicity, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = BinomialFactor> + '_ {
        self.denominator
            .iter()
            .flat_map(|(&f, &m)| std::iter::repeat_n(f, m as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `sign * q^c z^d * numerator`.
    pub fn full_numerator(&self) -> LaurentPoly {
        self.numerator
            .shift(self.unit.0, self.unit.1)
            .scale(&BigInt::from(self.sign))
    }

    fn numerator_over(&self, common: &BTreeMap<BinomialFactor, u32>) -> LaurentPoly {
        let mut num = self.full_numerator();
        for (f, &m) in common {
            let own = self.denominator.get(f).copied().unwrap_or(0);
            for _ in own..m {
                num = &num * &f.as_poly();
            }
        }
        num
    }

    fn common_denominator(&self, other: &Self) -> BTreeMap<BinomialFactor, u32> {
        let mut common = self.denominator.clone();
        for (&f, &m) in &other.denominator {
            let e = common.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
        common
    }

    /// Cancels denominator factors that divide the numerator exactly.
    pub fn reduce(&self) -> Self {
        let mut out = self.clone();
        if out.numerator.is_zero() {
            return Self::zero();
        }
        let factors: Vec<_> = self.factors().collect();
        for f in factors {
            if let Some(g) = divide_exact(&out.numerator, &f) {
                out.numerator = g;
                if let Some(m) = out.denominator.get_mut(&f) {
                    *m -= 1;
                    if *m == 0 {
                        out.denominator.remove(&f);
                    }
                }
            }
        }
        out
    }

    /// Numerator/denominator form with the unit folded into the numerator.
    pub fn normalized(&self) -> Self {
        Self {
            sign: 1,
            unit: (0, 0),
            numerator: self.full_numerator(),
            denominator: self.denominator.clone(),
        }
    }
}

impl PartialEq for RationalFn {
    /// Denominator-insensitive: cross-multiplies over the common denominator.
    fn eq(&self, other: &Self) -> bool {
        let common = self.common_denominator(other);
        self.numerator_over(&common) == other.numerator_over(&common)
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.full_numerator();
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        write!(f, "({num}) / (")?;
        for (idx, factor) in self.factors().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "{factor}")?;
        }
        f.write_str(")")
    }
}

/// Exact sum over the least common multiple of the two denominators.
pub fn rational_add(x: &RationalFn, y: &RationalFn) -> RationalFn {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.clone();
    }
    let common = x.common_denominator(y);
    let numerator = &x.numerator_over(&common) + &y.numerator_over(&common);
    if numerator.is_zero() {
        return RationalFn::zero();
    }
    RationalFn {
        sign: 1,
        unit: (0, 0),
        numerator,
        denominator: common,
    }
}

/// Sum of an iterator of rational functions.
pub fn rational_sum<'a>(items: impl IntoIterator<Item = &'a RationalFn>) -> RationalFn {
    items
        .into_iter()
        .fold(RationalFn::zero(), |acc, x| rational_add(&acc, x))
}

/// Exact quotient `num / (1 - q^a z^b)` when it is a Laurent polynomial.
///
/// Synthetic division along the direction `(a, b)`: terms are consumed in
/// increasing weight `a*i + b*j`, since multiplying by `q^a z^b` raises the
/// weight by `a^2 + b^2`.
pub fn divide_exact(num: &LaurentPoly, f: &BinomialFactor) -> Option<LaurentPoly> {
    if num.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (a, b) = (f.a, f.b);
    let weight = |i: i64, j: i64| a * i + b * j;
    let step = a * a + b * b;
    let max_weight = num.iter().map(|(&(i, j), _)| weight(i, j)).max()?;

    let mut rem: BTreeMap<(i64, i64, i64), BigInt> = num
        .iter()
        .map(|(&(i, j), c)| ((weight(i, j), i, j), c.clone()))
        .collect();
    let mut quotient = LaurentPoly::zero();
    while let Some(((w, i, j), c)) = rem.pop_first() {
        // Every quotient term times q^a z^b must stay within the numerator.
        if w + step > max_weight {
            return None;
        }
        let key = (w + step, i + a, j + b);
        let entry = rem.entry(key).or_insert_with(BigInt::zero);
        *entry += &c;
        if entry.is_zero() {
            rem.remove(&key);
        }
        quotient.add_term((i, j), c);
    }
    Some(quotient)
}

/// Series expansion of a rational function through q-degree `cutoff`.
///
/// Canonical factors are expanded as ordinary geometric series; because the
/// flipped orientation was absorbed into the unit, this agrees with the
/// `-sum_{i<0}` convention for the original factor.
pub fn expand_rational(x: &RationalFn, cutoff: i64) -> Result<Series> {
    let num = x.full_numerator();
    if num.is_zero() {
        return Ok(Series::zero(cutoff));
    }
    let low = num.min_q().unwrap_or(0).min(0);
    let inner = cutoff - low;
    let mut acc = Series::one(inner);
    for f in x.factors() {
        if f.b < 0 {
            return Err(Error::UnsupportedRegion { alpha: f.a, beta: f.b });
        }
        acc = series_mul(&acc, &expand_factor(f.a, f.b, inner)?);
    }
    let mut out = LaurentPoly::zero();
    for (&(i, j), c) in num.iter() {
        for (&(u, v), d) in acc.poly().iter() {
            if i + u > cutoff {
                break;
            }
            out.add_term((i + u, j + v), c * d);
        }
    }
    Series::new(out, cutoff)
}

impl RationalFn {
    /// Multiplies by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let mut out = self.clone();
        out.numerator = &out.numerator * p;
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.sign = -out.sign;
        out
    }

    /// `true` when the denominator is empty.
    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// Multiset difference `self.denominator - factors`; factors absent from
    /// the denominator move into the numerator.
    pub fn cancel_factors(&self, factors: &[BinomialFactor]) -> Self {
        let mut out = self.clone();
        for f in factors {
            match out.denominator.get_mut(f) {
                Some(m) => {
                    *m -= 1;
                    if *m == 0 {
                        out.denominator.remove(f);
                    }
                }
                None => out.numerator = &out.numerator * &f.as_poly(),
            }
        }
        out
    }

    /// Clears every denominator factor by exact division; `None` if some
    /// factor does not divide.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let mut num = self.full_numerator();
        for f in self.factors() {
            num = divide_exact(&num, &f)?;
        }
        Some(num)
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn over(num: LaurentPoly, factors: &[(i64, i64)]) -> RationalFn {
        RationalFn::monomial_over(0, 0, factors)
            .unwrap()
            .mul_poly(&num)
    }

    #[test]
    fn canonical_orientation() {
        assert!(BinomialFactor::new(1, -3).is_some());
        assert!(BinomialFactor::new(0, 2).is_some());
        assert!(BinomialFactor::new(0, -2).is_none());
        assert!(BinomialFactor::new(-1, 5).is_none());
        let (f, unit) = BinomialFactor::canonicalize(-2, -1).unwrap();
        assert_eq!((f.a(), f.b()), (2, 1));
        assert_eq!(unit, Some((2, 1)));
        assert!(BinomialFactor::canonicalize(0, 0).is_err());
    }

    #[test]
    fn flipped_factor_equals_unit_times_canonical() {
        // 1/(1 - q^-2 z^-1) = -q^2 z / (1 - q^2 z)
        let flipped = RationalFn::monomial_over(0, 0, &[(-2, -1)]).unwrap();
        let canonical = over(p(&[(2, 1, -1)]), &[(2, 1)]);
        assert_eq!(flipped, canonical);
        assert_eq!(flipped.sign(), -1);
        assert_eq!(flipped.unit(), (2, 1));
    }

    #[test]
    fn add_zero_and_inverse() {
        let x = over(LaurentPoly::one(), &[(1, 1)]);
        assert_eq!(rational_add(&x, &RationalFn::zero()), x);
        let minus = over(LaurentPoly::constant(-1), &[(1, 1)]);
        let s = rational_add(&x, &minus);
        assert!(s.is_zero());
        assert_eq!(s, RationalFn::zero());
    }

    #[test]
    fn add_over_common_denominator() {
        let x = over(LaurentPoly::one(), &[(1, 0)]);
        let y = over(LaurentPoly::one(), &[(2, 0)]);
        let s = rational_add(&x, &y);
        // (1 - q^2) + (1 - q) over (1 - q)(1 - q^2)
        assert_eq!(s.full_numerator(), p(&[(0, 0, 2), (1, 0, -1), (2, 0, -1)]));
        let keys: Vec<_> = s.factors().map(|f| (f.a(), f.b())).collect();
        assert_eq!(keys, vec![(1, 0), (2, 0)]);
        // Same value as (2 + q) / (1 - q^2).
        assert_eq!(s, over(p(&[(0, 0, 2), (1, 0, 1)]), &[(2, 0)]));
    }

    #[test]
    fn equality_is_denominator_insensitive() {
        let x = over(p(&[(0, 0, 1), (1, 1, 1)]), &[(2, 2)]);
        let y = over(LaurentPoly::one(), &[(1, 1)]);
        assert_eq!(x, y);
        let z = over(LaurentPoly::one(), &[(1, 0)]);
        assert_ne!(y, z);
    }

    #[test]
    fn divide_exact_examples() {
        let f = BinomialFactor::new(1, 1).unwrap();
        assert_eq!(
            divide_exact(&p(&[(0, 0, 1), (2, 2, -1)]), &f),
            Some(p(&[(0, 0, 1), (1, 1, 1)]))
        );
        assert_eq!(divide_exact(&p(&[(0, 0, 1), (1, 0, -1)]), &f), None);
        assert_eq!(divide_exact(&LaurentPoly::zero(), &f), Some(LaurentPoly::zero()));
    }

    #[test]
    fn divide_exact_with_laurent_terms() {
        let f = BinomialFactor::new(2, -1).unwrap();
        let g = p(&[(-3, 2, 4), (0, 0, -1), (5, -2, 7)]);
        assert_eq!(divide_exact(&(&g * &f.as_poly()), &f), Some(g));
    }

    #[test]
    fn expand_rational_examples() {
        let x = RationalFn::monomial_over(0, 0, &[(1, 1), (2, 1)]).unwrap();
        let s = expand_rational(&x, 2).unwrap();
        assert_eq!(s.poly(), &p(&[(0, 0, 1), (1, 1, 1), (2, 1, 1), (2, 2, 1)]));

        let unit_only = RationalFn::monomial_over(2, 1, &[]).unwrap().neg();
        let s = expand_rational(&unit_only, 5).unwrap();
        assert_eq!(s.poly(), &p(&[(2, 1, -1)]));
    }

    #[test]
    fn expand_rational_rejects_mixed_factor() {
        let x = RationalFn::monomial_over(0, 0, &[(2, -1)]).unwrap();
        assert!(matches!(
            expand_rational(&x, 4),
            Err(Error::UnsupportedRegion { .. })
        ));
    }

    #[test]
    fn to_poly_clears_divisible_denominators() {
        let x = over(p(&[(0, 0, 1), (2, 0, -1)]), &[(1, 0)]);
        assert_eq!(x.to_poly(), Some(p(&[(0, 0, 1), (1, 0, 1)])));
        let y = over(LaurentPoly::one(), &[(1, 0)]);
        assert_eq!(y.to_poly(), None);
    }
}
