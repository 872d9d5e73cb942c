//! Exact computation of the bigraded Hilbert polynomials `d_N(k, l, r; q, z)`
//! of the quotients `C[e_1..e_N] / I_N(k, l, r)`.
//!
//! The same polynomial is produced by several independent routes:
//!
//! * [`fermionic`]: a sum over `v in Z_+^k` of q-binomial products;
//! * [`polyhedral`]: lattice points of the polytope `P_N(k, l, r)`, by direct
//!   enumeration and by a transfer sweep, plus the recursion in `r`;
//! * [`bosonic`]: an alternating sum of vertex-cone contributions, expanded
//!   as truncated series;
//! * [`quotient`]: ranks of graded pieces of the ideal, with no reference to
//!   any closed formula.
//!
//! All arithmetic is exact ([`algebra`]).

pub mod algebra;
pub mod bosonic;
pub mod error;
pub mod fermionic;
pub mod params;
pub mod polyhedral;
pub mod quotient;
pub mod verify;

pub use algebra::{BinomialFactor, LaurentPoly, RationalFn, Series};
pub use error::{Error, Result};
pub use params::Params;
