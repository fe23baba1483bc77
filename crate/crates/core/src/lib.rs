//! Wright functions of the first and second kind, exact Caputo
//! fractional differentiation on generalized power series, and a
//! verification harness for the Bessel-type fractional differential
//! equations these functions solve.
//!
//! The crate is organized around five modules:
//!
//! * [`special`] — certified pointwise evaluation of reciprocal gamma,
//!   Wright, Mittag-Leffler, and the Bessel/Bessel-Clifford/Tricomi
//!   family through their Wright representations.
//! * [`series`] — finite generalized power series (real exponents >= 0)
//!   and the exact algebra the solution identities operate on.
//! * [`fracops`] — the Caputo power rule applied termwise to series,
//!   an independent L1 grid discretization, and the composed
//!   variable-coefficient operators.
//! * [`verify`] — machine-checked residuals, at coefficient level and
//!   on numeric grids, for every closed-form solution identity,
//!   including dual-hypothesis reports where two candidate constants
//!   compete.
//! * [`transforms`] — numerical Laplace-transform checks connecting
//!   Wright functions to Mittag-Leffler closed forms, with certified
//!   quadrature and tail bounds.
//!
//! The library is `no_std` (with `alloc`); IO, file formats and the
//! command-line surface live in the companion `wrightfn-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fracops;
pub mod series;
pub mod special;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
