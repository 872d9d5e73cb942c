//! Power series in `q` and `z` known exactly through a q-degree cutoff.

use num_bigint::BigInt;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// A series exact for every q-degree `<= cutoff`.
///
/// Stored exponents satisfy `0 <= i <= cutoff` and `j >= 0`; nothing is
/// claimed about coefficients beyond the cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    poly: LaurentPoly,
    cutoff: i64,
}

impl Series {
    /// Truncates `poly` at `cutoff` and checks the support condition.
    pub fn new(poly: LaurentPoly, cutoff: i64) -> Result<Self> {
        if cutoff < 0 {
            return Err(Error::Precondition(format!(
                "series cutoff must be >= 0, got {cutoff}"
            )));
        }
        let poly = poly.truncate_q(cutoff);
        if let Some((&(i, j), _)) = poly.iter().find(|(&(i, j), _)| i < 0 || j < 0) {
            return Err(Error::NegativeSupport { i, j });
        }
        Ok(Self { poly, cutoff })
    }

    pub fn zero(cutoff: i64) -> Self {
        Self {
            poly: LaurentPoly::zero(),
            cutoff: cutoff.max(0),
        }
    }

    pub fn one(cutoff: i64) -> Self {
        Self {
            poly: LaurentPoly::one(),
            cutoff: cutoff.max(0),
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowers the cutoff to `cutoff` (never raises it).
    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = cutoff.min(self.cutoff).max(0);
        Self {
            poly: self.poly.truncate_q(cutoff),
            cutoff,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        Self {
            poly: (&self.poly + &other.poly).truncate_q(cutoff),
            cutoff,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        Self {
            poly: (&self.poly - &other.poly).truncate_q(cutoff),
            cutoff,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            poly: -&self.poly,
            cutoff: self.cutoff,
        }
    }

    /// Multiplies by `q^i z^j` with `i, j >= 0`; the result stays exact
    /// through the same cutoff.
    pub fn shift(&self, i: i64, j: i64) -> Result<Self> {
        if i < 0 || j < 0 {
            return Err(Error::Precondition(format!(
                "series shift must be nonnegative, got q^{i} z^{j}"
            )));
        }
        Ok(Self {
            poly: self.poly.shift(i, j).truncate_q(self.cutoff),
            cutoff: self.cutoff,
        })
    }

    /// Equality of the coefficients through `min` of both cutoffs.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let cutoff = self.cutoff.min(other.cutoff);
        self.poly.truncate_q(cutoff) == other.poly.truncate_q(cutoff)
    }

    /// Compares with a polynomial through the cutoff, including the vanishing
    /// of every coefficient the polynomial does not have.
    pub fn agrees_with_poly(&self, p: &LaurentPoly) -> bool {
        self.poly == p.truncate_q(self.cutoff)
    }
}

/// Truncated product; the cutoff is the smaller of the two.
pub fn series_mul(x: &Series, y: &Series) -> Series {
    let cutoff = x.cutoff.min(y.cutoff);
    let mut out = LaurentPoly::zero();
    for (&(a, b), c) in x.poly.iter() {
        if a > cutoff {
            break;
        }
        for (&(u, v), d) in y.poly.iter() {
            if a + u > cutoff {
                break;
            }
            out.add_term((a + u, b + v), c * d);
        }
    }
    Series { poly: out, cutoff }
}

/// Expansion of `1 / (1 - q^alpha z^beta)` through q-degree `cutoff`.
///
/// For `alpha, beta >= 0` this is `sum_{i >= 0} q^{i alpha} z^{i beta}`; for
/// `alpha, beta <= 0` it is `-sum_{i < 0} q^{i alpha} z^{i beta}`. Mixed
/// signs are rejected.
pub fn expand_factor(alpha: i64, beta: i64, cutoff: i64) -> Result<Series> {
    if alpha == 0 && beta == 0 {
        return Err(Error::Precondition(
            "expand_factor: (alpha, beta) = (0, 0)".into(),
        ));
    }
    if cutoff < 0 {
        return Err(Error::Precondition(format!(
            "series cutoff must be >= 0, got {cutoff}"
        )));
    }
    let (step_q, step_z, start, sign) = if alpha >= 0 && beta >= 0 {
        (alpha, beta, 0, 1)
    } else if alpha <= 0 && beta <= 0 {
        (-alpha, -beta, 1, -1)
    } else {
        return Err(Error::UnsupportedRegion { alpha, beta });
    };
    if step_q == 0 {
        // A pure power of z never reaches a q-degree bound.
        return Err(Error::Precondition(format!(
            "expand_factor: 1/(1 - q^{alpha} z^{beta}) has no q-degree truncation"
        )));
    }
    let mut poly = LaurentPoly::zero();
    let mut t = start;
    while t * step_q <= cutoff {
        poly.add_term((t * step_q, t * step_z), BigInt::from(sign));
        t += 1;
    }
    Ok(Series { poly, cutoff })
}
