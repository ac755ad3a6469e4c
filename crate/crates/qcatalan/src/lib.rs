//! Exact computation with q-Catalan bases and their dual coefficients.
//!
//! Everything is computed over the field of rational functions of q
//! (optionally extended by a fixed root q^{1/L}) with arbitrary-precision
//! rational coefficients. There is no floating point anywhere: every check
//! the library performs is an exact identity of truncated formal series.
//!
//! Module map:
//! - [`qfield`]: the scalar field of rational functions of q.
//! - [`fps`]: truncated formal power / Laurent series in z, and truncated
//!   bivariate series in (z, t).
//! - [`catalan`]: Catalan power series, normalized bases, predual bases,
//!   dual coefficients by two independent algorithms, and dual forms.
//! - [`qweyl`]: normal-ordered polynomials in two q-commuting variables.
//! - [`pary`]: p-ary and Garsia powers, the diamond involution, and four
//!   constructions of the generating function of the diagonal dual
//!   coefficients.
//! - [`fuss`]: Carlitz and q-Fuss-Catalan tables, q-Airy series, and the
//!   Rogers-Ramanujan continued fraction.
//! - [`expr`] and [`cli`]: expression parsing and the command-line layer.

pub mod catalan;
pub mod cli;
pub mod error;
pub mod expr;
pub mod fps;
pub mod fuss;
pub mod pary;
pub mod qfield;
pub mod qweyl;

pub use error::{Error, Result};
