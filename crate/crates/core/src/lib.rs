//! Exact q-series engine for the Rogers-Ramanujan continued fraction.
//!
//! Everything is a truncated power series with arbitrary-precision integer
//! coefficients ([`Series`]). On top of the series ring sit q-Pochhammer and
//! Euler products ([`qproducts`]), named constructions of R(q) and its
//! relatives ([`rr`]), and finite-order identity checks and sign-pattern
//! scans ([`verify`]). The [`cli`] module backs the `qser` binary.

pub mod cli;
pub mod error;
pub mod qproducts;
pub mod rr;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use qproducts::{euler_f, expand_product, pochhammer_inf, Factor, ProductSpec};
pub use rr::{build, build_sum_form, coefficient, NamedSeries, SeriesCache};
pub use series::Series;
