//! Wright and Mittag-Leffler functions by certified series summation.
//!
//! Both functions are sums of the shape sum_n z^n / (n!^p Gamma(a n + b))
//! (p = 1 for Wright, p = 0 for Mittag-Leffler). Terms are formed in log
//! space through the gamma kernels, summed with compensation, and the
//! truncation tail is bounded rigorously before the sum is reported:
//!
//! * For a nonnegative gamma slope the consecutive-term ratio is
//!   nonincreasing once the gamma argument is positive (log-convexity of
//!   ln Gamma), so a measured ratio <= 1/2 at term n bounds the tail by
//!   the geometric series from term n+1.
//! * For a negative slope (Wright functions of the second kind) the
//!   reflection formula majorizes |1/Gamma| by Gamma(1 - a n - b)/pi,
//!   and the majorant's ratio is bounded by an explicit smooth function
//!   that is eventually decreasing; the geometric bound is applied to
//!   the majorant instead.

use crate::error::{Error, Result};
use alloc::format;

use super::gamma::{gamma_sign, is_gamma_pole, lgamma_pos, log_abs_gamma, recip_gamma, sin_pi};

/// Hard cap on summed terms; exceeding it raises [`Error::NonConvergence`].
pub const MAX_TERMS: usize = 10_000;

const LN_PI: f64 = 1.1447298858494002;

/// Parameters (lambda, mu) of the Wright function W_{lambda,mu}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    lambda: f64,
    mu: f64,
}

/// Classification of a Wright function by its first parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WrightKind {
    /// lambda >= 0: entire of exponential order <= 1.
    First,
    /// -1 < lambda < 0: entire but not of exponential order.
    Second,
}

impl WrightParams {
    /// Requires `lambda > -1` (the series is undefined at and below -1)
    /// and finite `mu`.
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !(lambda > -1.0) || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "Wright parameter lambda must satisfy lambda > -1, got {lambda}"
            )));
        }
        if !mu.is_finite() {
            return Err(Error::Domain(format!("Wright parameter mu must be finite, got {mu}")));
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn kind(&self) -> WrightKind {
        if self.lambda >= 0.0 {
            WrightKind::First
        } else {
            WrightKind::Second
        }
    }
}

/// A certified pointwise evaluation: `abs_error_bound` is a rigorous
/// bound on the truncation tail (rounding is not included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_bound: f64,
    pub terms_used: usize,
}

/// One family of series terms: z^n / (n!^p Gamma(slope n + offset))
/// with p = 1 when `factorial` is set.
struct SeriesFamily {
    slope: f64,
    offset: f64,
    factorial: bool,
}

impl SeriesFamily {
    fn gamma_arg(&self, n: usize) -> f64 {
        self.slope * n as f64 + self.offset
    }

    /// ln of the term magnitude at index n >= 1 (caller handles n = 0
    /// and z = 0); -inf when the gamma argument sits on a pole.
    fn ln_term_mag(&self, ln_abs_z: f64, n: usize) -> f64 {
        let a = self.gamma_arg(n);
        if is_gamma_pole(a) {
            return f64::NEG_INFINITY;
        }
        let mut m = n as f64 * ln_abs_z - log_abs_gamma(a);
        if self.factorial {
            m -= lgamma_pos(n as f64 + 1.0);
        }
        m
    }

    /// Signed term value at index n >= 1.
    fn term(&self, z: f64, ln_abs_z: f64, n: usize) -> f64 {
        let a = self.gamma_arg(n);
        if is_gamma_pole(a) {
            return 0.0;
        }
        let mut sign = gamma_sign(a);
        if z < 0.0 && n % 2 == 1 {
            sign = -sign;
        }
        sign * libm::exp(self.ln_term_mag(ln_abs_z, n))
    }

    /// Tail bound for sum_{m >= n+1} |t_m|, when certifiable at index n.
    fn tail_bound(&self, abs_z: f64, ln_abs_z: f64, n: usize) -> Option<f64> {
        if self.slope > 0.0 {
            // ln-term is concave in n only through ln Gamma terms, which
            // are convex, so the term ratio is nonincreasing once the
            // gamma argument is positive.
            if self.gamma_arg(n) <= 0.0 {
                return None;
            }
            let ln_cur = self.ln_term_mag(ln_abs_z, n);
            let ln_next = self.ln_term_mag(ln_abs_z, n + 1);
            let rho = libm::exp(ln_next - ln_cur);
            if rho.is_finite() && rho <= 0.5 {
                return Some(libm::exp(ln_next) / (1.0 - rho));
            }
            return None;
        }
        // Second kind: majorize |1/Gamma(a_m)| by Gamma(1 - a_m)/pi via
        // |sin| <= 1, then bound the majorant ratio by
        // R(m) = |z| (c + d m)^d / (m + 1), c = 1 - offset, d = -slope,
        // which decreases for m >= (d^2 - c) / (d (1 - d)).
        let d = -self.slope;
        let c = 1.0 - self.offset;
        let m = n as f64 + 1.0;
        if self.gamma_arg(n + 1) >= 0.5 {
            return None;
        }
        let m_star = (d * d - c) / (d * (1.0 - d));
        if m < m_star {
            return None;
        }
        let big_r = abs_z * libm::pow(c + d * m, d) / (m + 1.0);
        if !(big_r <= 0.5) {
            return None;
        }
        let ln_u = m * ln_abs_z - lgamma_pos(m + 1.0) + lgamma_pos(c + d * m) - LN_PI;
        Some(libm::exp(ln_u) / (1.0 - big_r))
    }

    fn eval(&self, z: f64, tol: f64) -> Result<EvalResult> {
        debug_assert!(self.slope != 0.0, "zero slope is handled in closed form by the caller");
        if !(tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        if !z.is_finite() {
            return Err(Error::Domain(format!("series argument must be finite, got {z}")));
        }
        let first = recip_gamma(self.offset);
        if z == 0.0 {
            return Ok(EvalResult { value: first, abs_error_bound: 0.0, terms_used: 1 });
        }
        let abs_z = libm::fabs(z);
        let ln_abs_z = libm::log(abs_z);
        // Neumaier-compensated accumulation
        let mut sum = first;
        let mut comp = 0.0f64;
        for n in 1..=MAX_TERMS {
            if let Some(bound) = self.tail_bound(abs_z, ln_abs_z, n - 1) {
                if bound <= tol {
                    return Ok(EvalResult {
                        value: sum + comp,
                        abs_error_bound: bound,
                        terms_used: n,
                    });
                }
            }
            let t = self.term(z, ln_abs_z, n);
            let s = sum + t;
            comp += if libm::fabs(sum) >= libm::fabs(t) { (sum - s) + t } else { (t - s) + sum };
            sum = s;
        }
        Err(Error::NonConvergence { max_terms: MAX_TERMS })
    }
}

/// Wright function W_{lambda,mu}(z) = sum_n z^n / (n! Gamma(lambda n + mu)),
/// truncated so that the certified tail bound does not exceed `tol`.
///
/// The trivial case lambda = 0 collapses to e^z / Gamma(mu) and is
/// evaluated in that closed form (the alternating series would lose
/// relative accuracy to cancellation on the negative axis).
pub fn wright_eval(p: WrightParams, z: f64, tol: f64) -> Result<EvalResult> {
    if p.lambda == 0.0 {
        if !(tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        if !z.is_finite() {
            return Err(Error::Domain(format!("series argument must be finite, got {z}")));
        }
        return Ok(EvalResult {
            value: libm::exp(z) * recip_gamma(p.mu),
            abs_error_bound: 0.0,
            terms_used: 1,
        });
    }
    SeriesFamily { slope: p.lambda, offset: p.mu, factorial: true }.eval(z, tol)
}

/// Mittag-Leffler function E_{alpha,beta}(z) = sum_n z^n / Gamma(alpha n + beta),
/// with the same certification scheme as [`wright_eval`].
pub fn ml_eval(alpha: f64, beta: f64, z: f64, tol: f64) -> Result<EvalResult> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "Mittag-Leffler parameter alpha must be positive, got {alpha}"
        )));
    }
    if !beta.is_finite() {
        return Err(Error::Domain(format!("Mittag-Leffler parameter beta must be finite, got {beta}")));
    }
    SeriesFamily { slope: alpha, offset: beta, factorial: false }.eval(z, tol)
}

/// Used by transform checks: sin(pi x) with exact reduction, re-exported
/// for the reflection-based closed forms in tests.
#[allow(dead_code)]
pub(crate) fn sin_pi_internal(x: f64) -> f64 {
    sin_pi(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(l: f64, m: f64) -> WrightParams {
        WrightParams::new(l, m).unwrap()
    }

    #[test]
    fn params_reject_lambda_at_or_below_minus_one() {
        assert!(WrightParams::new(-1.0, 1.0).is_err());
        assert!(WrightParams::new(-1.5, 1.0).is_err());
        assert!(WrightParams::new(f64::NAN, 1.0).is_err());
        assert!(WrightParams::new(0.5, f64::INFINITY).is_err());
    }

    #[test]
    fn kind_classification() {
        assert_eq!(wp(0.0, 1.0).kind(), WrightKind::First);
        assert_eq!(wp(1.0, 2.0).kind(), WrightKind::First);
        assert_eq!(wp(-0.5, 0.5).kind(), WrightKind::Second);
    }

    #[test]
    fn wright_lambda_zero_is_scaled_exponential() {
        let r = wright_eval(wp(0.0, 1.0), 1.0, 1e-14).unwrap();
        assert!((r.value - core::f64::consts::E).abs() < 1e-13);
        assert!(r.abs_error_bound <= 1e-14);
    }

    #[test]
    fn wright_at_zero_is_single_term() {
        let r = wright_eval(wp(0.5, 1.0), 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.terms_used, 1);
        assert_eq!(r.abs_error_bound, 0.0);
    }

    #[test]
    fn wright_one_one_at_one_is_bessel_i0_of_two() {
        let r = wright_eval(wp(1.0, 1.0), 1.0, 1e-14).unwrap();
        assert!((r.value - 2.2795853023360673).abs() < 1e-14);
    }

    #[test]
    fn wright_first_kind_reference_values() {
        let r = wright_eval(wp(0.5, 1.0), 1.0, 1e-14).unwrap();
        assert!((r.value - 2.7773451005009957).abs() < 1e-13);
        let r = wright_eval(wp(0.5, 1.0), -1.0, 1e-14).unwrap();
        assert!((r.value - 0.26478660052626588).abs() < 1e-13);
        let r = wright_eval(wp(0.5, 0.5), -0.7, 1e-14).unwrap();
        assert!((r.value - 0.090347746053394025).abs() < 1e-13);
    }

    #[test]
    fn wright_second_kind_matches_gaussian_reduction() {
        // W_{-1/2,1/2}(-x) = exp(-x^2/4)/sqrt(pi)
        let p = wp(-0.5, 0.5);
        let cases = [(-1.0, 0.4393912894677224), (-2.0, 0.20755374871029735)];
        for (z, want) in cases {
            let r = wright_eval(p, z, 1e-14).unwrap();
            assert!(
                (r.value - want).abs() <= 1e-13 + r.abs_error_bound,
                "W(-0.5,0.5)({z}) = {}, want {want}",
                r.value
            );
        }
        let r = wright_eval(wp(-0.3, 0.7), -1.5, 1e-14).unwrap();
        assert!((r.value - 0.26115102031517886).abs() < 1e-13);
    }

    #[test]
    fn wright_tail_bound_is_honest() {
        // Coarse tolerance: the certified bound must cover the distance
        // to a much more accurate evaluation.
        let p = wp(0.5, 1.0);
        for z in [-3.0, -1.0, 0.3, 2.0, 7.5] {
            let coarse = wright_eval(p, z, 1e-4).unwrap();
            let fine = wright_eval(p, z, 1e-15).unwrap();
            assert!(
                (coarse.value - fine.value).abs() <= coarse.abs_error_bound + 1e-12,
                "bound too small at z = {z}"
            );
            assert!(coarse.terms_used >= 1);
        }
    }

    #[test]
    fn ml_special_cases() {
        let r = ml_eval(1.0, 1.0, 1.0, 1e-14).unwrap();
        assert!((r.value - core::f64::consts::E).abs() < 1e-13);
        let r = ml_eval(1.0, 2.0, 0.0, 1e-14).unwrap();
        assert_eq!(r.value, 1.0);
        let r = ml_eval(1.0, 2.0, 1.0, 1e-14).unwrap();
        assert!((r.value - (core::f64::consts::E - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn ml_rejects_bad_parameters() {
        assert!(ml_eval(0.0, 1.0, 1.0, 1e-10).is_err());
        assert!(ml_eval(-0.5, 1.0, 1.0, 1e-10).is_err());
        assert!(ml_eval(1.0, 1.0, 1.0, 0.0).is_err());
        assert!(ml_eval(1.0, 1.0, f64::NAN, 1e-10).is_err());
    }

    #[test]
    fn ml_tiny_alpha_fails_as_nonconvergent() {
        // Ratio decays like alpha*ln(n); |z|=10 with alpha=0.01 cannot be
        // certified within the term cap.
        let err = ml_eval(0.01, 1.0, 10.0, 1e-8).unwrap_err();
        assert_eq!(err, Error::NonConvergence { max_terms: MAX_TERMS });
    }

    #[test]
    fn bound_shrinks_with_tolerance() {
        let p = wp(0.5, 1.0);
        let mut prev = f64::INFINITY;
        for tol in [1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12] {
            let r = wright_eval(p, 4.0, tol).unwrap();
            assert!(r.abs_error_bound <= tol);
            assert!(r.abs_error_bound <= prev);
            prev = r.abs_error_bound;
        }
    }
}
