//! Pointwise evaluation of the special functions used everywhere else:
//! reciprocal gamma, Wright, Mittag-Leffler, and the Bessel family via
//! their Wright representations.
//!
//! All operations are pure functions of their arguments; evaluations
//! return an [`EvalResult`] carrying a rigorous truncation-tail bound.

mod bessel;
mod gamma;
mod wright;

pub use bessel::{
    bessel_clifford, bessel_i_wright, bessel_j_wright, tricomi_c0, tricomi_jt, wright_gen_bessel,
};
pub use gamma::{log_gamma, recip_gamma};
pub use wright::{ml_eval, wright_eval, EvalResult, WrightKind, WrightParams, MAX_TERMS};

pub(crate) use gamma::lgamma_pos;
