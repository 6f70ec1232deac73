//! Filled Julia sets of `f_n(z) = z^n + q(z)`, the limit set `K_∞` they
//! approach as `n → ∞`, and the diagnostics used to measure that approach.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod error;
pub mod exec;
pub mod limitsets;
pub mod orbits;
pub mod poly;
pub mod roots;
pub mod setmetrics;

pub use error::{Error, Result};
pub use poly::{Complex, Polynomial, PowerPlusQMap};
pub use exec::Exec;
pub use limitsets::{GridSpec, Label, RasterMask, Sampling};
pub use orbits::EscapeParams;
