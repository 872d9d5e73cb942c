//! Sparse bivariate Laurent polynomials in `q` and `z` with big-integer
//! coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(i, j)` of the monomial `q^i z^j`.
pub type Exponent = (i64, i64);

/// An exact Laurent polynomial `sum c_{i,j} q^i z^j`.
///
/// Terms are kept in a `BTreeMap` ordered by `(i, j)`; a zero coefficient is
/// never stored, so two polynomials are equal iff their maps are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * q^i * z^j`.
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// `q^i * z^j`.
    pub fn unit(i: i64, j: i64) -> Self {
        Self::monomial(1, i, j)
    }

    /// Builds a polynomial from `(i, j, c)` triples, summing repeated
    /// exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    /// Univariate polynomial in `q` from a dense coefficient list.
    pub fn from_q_coeffs<C: Clone + Into<BigInt>>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, 0, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(i, j)` order.
    pub fn iter(&self) -> btree_map::Iter<'_, Exponent, BigInt> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^i * z^j`.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Keeps only the terms with q-exponent at most `max_q`.
    pub fn truncate_q(&self, max_q: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i <= max_q)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `(min_i, max_i, min_j, max_j)`, or `None` for the zero polynomial.
    pub fn support_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        let (mut lo_i, mut hi_i, mut lo_j, mut hi_j) = (i0, i0, j0, j0);
        for &(i, j) in it {
            lo_i = lo_i.min(i);
            hi_i = hi_i.max(i);
            lo_j = lo_j.min(j);
            hi_j = hi_j.max(j);
        }
        Some((lo_i, hi_i, lo_j, hi_j))
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().next().map(|&(i, _)| i)
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|&(i, _)| i)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes `q = z = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies `q^i z^j -> q^{f(i,j).0} z^{f(i,j).1}` to every term.
    pub fn map_exponents(&self, f: impl Fn(i64, i64) -> Exponent) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(f(i, j), c.clone());
        }
        out
    }

    /// First exponent (in `(i, j)` order) where the two polynomials differ,
    /// with the coefficient on each side.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponent, BigInt, BigInt)> {
        let diff = self - other;
        diff.terms
            .keys()
            .next()
            .map(|&(i, j)| ((i, j), self.coeff(i, j), other.coeff(i, j)))
    }
}

/// Exact coefficient-wise sum.
pub fn poly_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

/// Exact convolution product.
pub fn poly_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> IntoIterator for &'a LaurentPoly {
    type Item = (&'a Exponent, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, Exponent, BigInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::render_text(self))
    }
}
