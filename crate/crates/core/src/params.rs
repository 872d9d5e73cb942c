use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The quadruple `(N, k, l, r)` indexing the quotient space `D_N(k, l, r)`.
///
/// [`Params::new`] enforces `N >= 2` and `k >= 0`. Methods that read the
/// quotient or its monomial basis also need `l, r >= 0`
/// ([`Params::require_nonnegative`]); the vertex formulas accept any
/// integers and are built with [`Params::formal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "N")]
    pub n: i64,
    pub k: i64,
    pub l: i64,
    pub r: i64,
}

impl Params {
    pub fn new(n: i64, k: i64, l: i64, r: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("N >= 2 required, got N = {n}")));
        }
        if k < 0 {
            return Err(Error::InvalidParams(format!("k >= 0 required, got k = {k}")));
        }
        Ok(Self { n, k, l, r })
    }

    /// Parameters for the vertex formulas only: any integers with `N >= 1`
    /// (so that `N - 1` chains appearing in per-vertex recursions exist).
    pub fn formal(n: i64, k: i64, l: i64, r: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams(format!("N >= 1 required, got N = {n}")));
        }
        Ok(Self { n, k, l, r })
    }

    /// Validates `N >= 2`, `k >= 0` and `l, r >= 0`.
    pub fn require_nonnegative(&self) -> Result<()> {
        Self::new(self.n, self.k, self.l, self.r)?;
        if self.l < 0 || self.r < 0 {
            return Err(Error::InvalidParams(format!(
                "l, r >= 0 required, got l = {}, r = {}",
                self.l, self.r
            )));
        }
        Ok(())
    }

    pub fn with_r(self, r: i64) -> Self {
        Self { r, ..self }
    }

    pub fn with_n(self, n: i64) -> Self {
        Self { n, ..self }
    }

    /// `(N, k, r, l)`: the parameters of the reflected chain.
    pub fn swapped(self) -> Self {
        Self {
            l: self.r,
            r: self.l,
            ..self
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} k={} l={} r={}", self.n, self.k, self.l, self.r)
    }
}
