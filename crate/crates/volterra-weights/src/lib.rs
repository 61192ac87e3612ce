//! Numerical boundedness analysis for Volterra integral operators with
//! kernels of the form `A(x,t) = a_0(x) + a_1(x) t + … + a_m(x) t^m` acting
//! between weighted L² spaces on (0, ∞).
//!
//! The crate decides boundedness through the weighted-Hardy reduction: the
//! operator splits into components `a_k(x) ∫_0^x t^k f(t) dt`, each governed
//! by a supremum of tail/head norm products, and the whole operator is
//! bounded exactly when every component is. Alongside the criterion the crate
//! provides direct norm estimation on truncation grids, the Gram-matrix
//! non-degeneracy machinery behind the criterion, and the pointwise-multiplier
//! conditions for weighted Sobolev spaces that these operators characterize.
//!
//! ```
//! use volterra_weights::expr::Expression;
//! use volterra_weights::hardy::{coefficient_constant, SearchConfig};
//!
//! // the averaging kernel a_0(x) = 1/x between unweighted L2 spaces
//! let one: Expression = "1".parse()?;
//! let a0: Expression = "x^(-1)".parse()?;
//! let result = coefficient_constant(&one, &one, &a0, 0, &SearchConfig::default())?;
//! assert!((result.supremum - 1.0).abs() < 1e-6);
//! # Ok::<(), volterra_weights::Error>(())
//! ```
//!
//! A configuration-driven CLI (`volterra-weights run <config.toml>`) exposes
//! every analysis; see the book under `book/` for a guided tour.

// `!(x > 0.0)` is the crate's precondition idiom: it rejects NaN along with
// nonpositive values, which `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod expr;
pub mod gram;
pub mod hardy;
pub mod job;
pub mod multiplier;
pub mod operator;
pub mod quadrature;

pub use error::{Error, Result};
