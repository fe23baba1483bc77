//! Finite generalized power series: real coefficients times real powers
//! of a single variable, kept in a normal form with strictly increasing
//! exponents and no zero coefficients.
//!
//! Public constructors require nonnegative exponents. Fractional
//! operators may legitimately produce terms that are singular at the
//! origin (e.g. t^(nu-1) with nu < 1); such series are representable,
//! report themselves as not evaluable at 0, and arise only through the
//! operators in [`crate::fracops`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::special::{recip_gamma, WrightParams};

/// Default relative scale for exponent merging in [`linear_combine`]:
/// exponents closer than `tol * (1 + |e|)` are considered equal.
///
/// [`linear_combine`]: GenPowerSeries::linear_combine
pub const DEFAULT_MATCH_TOL: f64 = 1e-12;

/// One term `coeff * var^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub exponent: f64,
}

/// A finite sum of real-coefficient terms with real exponents, in
/// normal form: exponents strictly increasing, no coefficient exactly 0.
#[derive(Debug, Clone, PartialEq)]
pub struct GenPowerSeries {
    terms: Vec<Term>,
    var: String,
}

/// Sign of the series argument in `W(sign * t^power)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Names a truncated member of the family W_{lambda,mu}(sign * t^power).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    pub params: WrightParams,
    pub sign: Sign,
    pub power: f64,
    pub order: usize,
}

impl SeriesSpec {
    /// Requires `power > 0` and `order >= 1`.
    pub fn new(params: WrightParams, sign: Sign, power: f64, order: usize) -> Result<Self> {
        if !(power > 0.0) || !power.is_finite() {
            return Err(Error::Domain(format!("series power must be positive, got {power}")));
        }
        if order < 1 {
            return Err(Error::Domain("series order must be >= 1".to_string()));
        }
        Ok(Self { params, sign, power, order })
    }
}

impl GenPowerSeries {
    /// The zero series (empty term list).
    pub fn zero(var: &str) -> Self {
        Self { terms: Vec::new(), var: var.to_string() }
    }

    /// Builds a series from `(coeff, exponent)` pairs, normalizing:
    /// terms are sorted by exponent, exactly equal exponents merged, and
    /// zero coefficients dropped. All exponents must be finite and >= 0.
    pub fn new(var: &str, terms: &[(f64, f64)]) -> Result<Self> {
        for &(c, e) in terms {
            if !c.is_finite() || !e.is_finite() {
                return Err(Error::Domain(format!("non-finite term ({c}, {e})")));
            }
            if e < 0.0 {
                return Err(Error::Invariant(format!(
                    "exponent {e} is negative; series constructors require exponents >= 0"
                )));
            }
        }
        Ok(Self::from_raw(var, terms.iter().map(|&(c, e)| Term { coeff: c, exponent: e })))
    }

    /// Normalizing constructor without the nonnegativity gate; used by
    /// the fractional operators whose outputs may carry negative powers.
    pub(crate) fn from_raw(var: &str, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut v: Vec<Term> = terms.into_iter().collect();
        v.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.exponent == t.exponent => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0.0);
        Self { terms: out, var: var.to_string() }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<f64> {
        self.terms.first().map(|t| t.exponent)
    }

    /// False when some term has a negative exponent, i.e. the series is
    /// singular at the origin.
    pub fn evaluable_at_origin(&self) -> bool {
        self.min_exponent().map_or(true, |e| e >= 0.0)
    }

    /// Same terms under a different variable tag.
    pub fn rename_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    /// Evaluates at `t >= 0`, summing in increasing-exponent order.
    /// `t = 0` is rejected when the series carries negative exponents;
    /// `t < 0` is always rejected (fractional exponents).
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!(
                "series in {} has fractional exponents; t must be >= 0, got {t}",
                self.var
            )));
        }
        if t == 0.0 && !self.evaluable_at_origin() {
            return Err(Error::Domain(
                "series has negative exponents and is singular at 0".to_string(),
            ));
        }
        let mut sum = 0.0;
        for term in &self.terms {
            sum += term.coeff * libm::pow(t, term.exponent);
        }
        Ok(sum)
    }

    /// Termwise derivative: exponent-0 terms are dropped, each remaining
    /// `(c, e)` maps to `(c e, e - 1)`. Errors when a resulting exponent
    /// would be negative; the operators always restore nonnegative
    /// exponents with a power factor, so a bare derivative that drops
    /// below 0 signals a mis-composed operator.
    pub fn derivative(&self) -> Result<Self> {
        if let Some(t) = self.terms.iter().find(|t| t.exponent != 0.0 && t.exponent < 1.0) {
            return Err(Error::Invariant(format!(
                "derivative of {}^{} has negative exponent {}; multiply by a power first",
                self.var,
                t.exponent,
                t.exponent - 1.0
            )));
        }
        Ok(self.derivative_unchecked())
    }

    /// Derivative without the nonnegativity gate, for compositions that
    /// immediately restore the exponent range.
    pub(crate) fn derivative_unchecked(&self) -> Self {
        Self::from_raw(
            &self.var,
            self.terms
                .iter()
                .filter(|t| t.exponent != 0.0)
                .map(|t| Term { coeff: t.coeff * t.exponent, exponent: t.exponent - 1.0 }),
        )
    }

    /// Multiplies by `var^rho`, shifting every exponent. Requires
    /// `rho + min exponent >= 0`.
    pub fn mul_power(&self, rho: f64) -> Result<Self> {
        if let Some(min) = self.min_exponent() {
            if min + rho < 0.0 {
                return Err(Error::Invariant(format!(
                    "shift by rho = {rho} would give negative exponent {}",
                    min + rho
                )));
            }
        }
        Ok(self.mul_power_unchecked(rho))
    }

    /// Exponent shift without the nonnegativity gate.
    pub(crate) fn mul_power_unchecked(&self, rho: f64) -> Self {
        Self::from_raw(
            &self.var,
            self.terms.iter().map(|t| Term { coeff: t.coeff, exponent: t.exponent + rho }),
        )
    }

    /// Fused `var^rho * d/dvar`: each `(c, e)` with `e != 0` maps to
    /// `(c e, e - 1 + rho)`; constants are annihilated. The composed
    /// operators use this so that transiently negative exponents between
    /// the derivative and the power factor never materialize.
    pub(crate) fn derivative_then_mul_power(&self, rho: f64) -> Self {
        Self::from_raw(
            &self.var,
            self.terms
                .iter()
                .filter(|t| t.exponent != 0.0)
                .map(|t| Term { coeff: t.coeff * t.exponent, exponent: t.exponent - 1.0 + rho }),
        )
    }

    /// `a * s1 + b * s2` with tolerance-based exponent merging: exponents
    /// within `match_tol * (1 + |e|)` of each other collapse to one term
    /// (the smaller exponent is kept). Both series must share a variable.
    pub fn linear_combine(
        a: f64,
        s1: &Self,
        b: f64,
        s2: &Self,
        match_tol: f64,
    ) -> Result<Self> {
        if s1.var != s2.var {
            return Err(Error::Domain(format!(
                "cannot combine series in different variables {} and {}",
                s1.var, s2.var
            )));
        }
        if !(match_tol >= 0.0) {
            return Err(Error::Domain(format!("match_tol must be >= 0, got {match_tol}")));
        }
        let mut out: Vec<Term> = Vec::with_capacity(s1.len() + s2.len());
        let mut i = 0;
        let mut j = 0;
        let push = |out: &mut Vec<Term>, coeff: f64, exponent: f64| {
            if let Some(last) = out.last_mut() {
                let thr = match_tol * (1.0 + libm::fabs(last.exponent).max(libm::fabs(exponent)));
                if exponent - last.exponent <= thr {
                    last.coeff += coeff;
                    return;
                }
            }
            out.push(Term { coeff, exponent });
        };
        while i < s1.terms.len() || j < s2.terms.len() {
            let take_first = match (s1.terms.get(i), s2.terms.get(j)) {
                (Some(t1), Some(t2)) => t1.exponent <= t2.exponent,
                (Some(_), None) => true,
                _ => false,
            };
            if take_first {
                push(&mut out, a * s1.terms[i].coeff, s1.terms[i].exponent);
                i += 1;
            } else {
                push(&mut out, b * s2.terms[j].coeff, s2.terms[j].exponent);
                j += 1;
            }
        }
        out.retain(|t| t.coeff != 0.0);
        Ok(Self { terms: out, var: s1.var.clone() })
    }
}

/// Truncation of W_{lambda,mu}(sign * t^power) to `spec.order` terms:
/// sum_{k=0}^{order-1} sign^k t^(power k) / (k! Gamma(lambda k + mu)).
pub fn wright_series(spec: &SeriesSpec) -> GenPowerSeries {
    let lambda = spec.params.lambda();
    let mu = spec.params.mu();
    let sgn = spec.sign.as_f64();
    let mut inv_fact = 1.0f64;
    let mut sign_k = 1.0f64;
    let mut terms = Vec::with_capacity(spec.order);
    for k in 0..spec.order {
        if k > 0 {
            inv_fact /= k as f64;
            sign_k *= sgn;
        }
        terms.push(Term {
            coeff: sign_k * inv_fact * recip_gamma(lambda * k as f64 + mu),
            exponent: spec.power * k as f64,
        });
    }
    GenPowerSeries::from_raw("t", terms)
}

/// Truncation of u(t) = sum_k t^(k beta) / (k!^2 Gamma(k beta + nu)),
/// the solution ansatz for the higher-order operator.
pub fn higher_order_series(beta: f64, nu: f64, order: usize) -> Result<GenPowerSeries> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!("beta must lie in (0, 1], got {beta}")));
    }
    if !(nu > 0.0) {
        return Err(Error::Domain(format!("nu must be positive, got {nu}")));
    }
    if order < 1 {
        return Err(Error::Domain("series order must be >= 1".to_string()));
    }
    let mut inv_fact = 1.0f64;
    let mut terms = Vec::with_capacity(order);
    for k in 0..order {
        if k > 0 {
            inv_fact /= k as f64;
        }
        terms.push(Term {
            coeff: inv_fact * inv_fact * recip_gamma(beta * k as f64 + nu),
            exponent: beta * k as f64,
        });
    }
    Ok(GenPowerSeries::from_raw("t", terms))
}
