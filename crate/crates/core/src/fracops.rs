//! Caputo fractional differentiation: exact on generalized power series
//! via the power rule, numerical on uniform grids via the L1 scheme,
//! plus the composed variable-coefficient operators
//! d^beta/dt^beta (t^nu d/dt .), d^beta/dt^beta (t^nu d/dt t d/dt .)
//! and d/dt (t^lambda d^lambda/dt^lambda .).

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::series::{GenPowerSeries, Term};
use crate::special::lgamma_pos;

/// A Caputo differentiation order beta in (0, 1]. beta = 1 is the
/// classical derivative and is handled exactly, without gamma ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaputoOrder {
    beta: f64,
}

impl CaputoOrder {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::Domain(format!(
                "Caputo order must lie in (0, 1], got {beta}"
            )));
        }
        Ok(Self { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn is_classical(&self) -> bool {
        self.beta == 1.0
    }
}

/// A function sampled on the uniform grid t_i = t0 + i h.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    t0: f64,
    h: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(t0: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if !(t0 >= 0.0) {
            return Err(Error::Domain(format!("grid start must be >= 0, got {t0}")));
        }
        if !(h > 0.0) {
            return Err(Error::Domain(format!("grid step must be positive, got {h}")));
        }
        if values.len() < 2 {
            return Err(Error::Domain("grid needs at least 2 points".to_string()));
        }
        Ok(Self { t0, h, values })
    }

    /// Samples `f` at `len` points starting from `t0`.
    pub fn sample(t0: f64, h: f64, len: usize, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        let values = (0..len).map(|i| f(t0 + i as f64 * h)).collect();
        Self::new(t0, h, values)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn point(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.h
    }
}

/// Coefficient of the Caputo power rule,
/// d^beta/dt^beta t^s = Gamma(s+1)/Gamma(s+1-beta) t^(s-beta):
/// returns the gamma ratio for s > 0, 0 for s = 0 (constants are
/// annihilated), and a domain error for s < 0 where the rule does not
/// hold.
pub fn caputo_power_rule(s: f64, order: CaputoOrder) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(Error::Domain(format!(
            "power rule requires exponent s >= 0, got {s}"
        )));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    if order.is_classical() {
        return Ok(s);
    }
    Ok(libm::exp(lgamma_pos(s + 1.0) - lgamma_pos(s + 1.0 - order.beta)))
}

/// Termwise Caputo derivative of a series with nonnegative exponents:
/// constants vanish, each remaining (c, e) maps to
/// (c Gamma(e+1)/Gamma(e+1-beta), e - beta).
///
/// Exponents in (0, beta) produce negative output exponents; that is the
/// legitimate t^(s-beta) singularity at the origin, and the result
/// reports it through [`GenPowerSeries::evaluable_at_origin`].
pub fn caputo_series(s: &GenPowerSeries, order: CaputoOrder) -> Result<GenPowerSeries> {
    if let Some(min) = s.min_exponent() {
        if min < 0.0 {
            return Err(Error::Domain(format!(
                "Caputo power rule does not apply to negative exponent {min}"
            )));
        }
    }
    let mut terms = Vec::with_capacity(s.len());
    for t in s.terms() {
        if t.exponent == 0.0 {
            continue;
        }
        let factor = caputo_power_rule(t.exponent, order)?;
        terms.push(Term { coeff: t.coeff * factor, exponent: t.exponent - order.beta });
    }
    Ok(GenPowerSeries::from_raw(s.var(), terms))
}

/// L1 discretization of the Caputo derivative of order beta in (0, 1) on
/// a uniform grid anchored at t0 = 0:
///
/// D^beta f(t_i) ~ h^(-beta)/Gamma(2-beta) *
///                 sum_{j=0}^{i-1} w_j (f_{i-j} - f_{i-j-1}),
/// w_j = (j+1)^(1-beta) - j^(1-beta).
///
/// The first output point is t_1 = h. Serves as the independent
/// numerical oracle for [`caputo_series`]; converges at order 2 - beta
/// for smooth functions.
pub fn caputo_l1(f: &GridFunction, order: CaputoOrder) -> Result<GridFunction> {
    if order.is_classical() {
        return Err(Error::Domain(
            "L1 scheme requires beta < 1; use the exact derivative at beta = 1".to_string(),
        ));
    }
    if f.t0 != 0.0 {
        return Err(Error::Domain(format!(
            "L1 scheme is anchored at the Caputo lower limit 0, got t0 = {}",
            f.t0
        )));
    }
    let beta = order.beta;
    let n = f.len();
    let one_minus = 1.0 - beta;
    let weights: Vec<f64> = (0..n - 1)
        .map(|j| libm::pow((j + 1) as f64, one_minus) - libm::pow(j as f64, one_minus))
        .collect();
    let scale = libm::pow(f.h, -beta) / libm::exp(lgamma_pos(2.0 - beta));
    let vals = &f.values;
    let out: Vec<f64> = (1..n)
        .map(|i| {
            let mut acc = 0.0;
            for j in 0..i {
                acc += weights[j] * (vals[i - j] - vals[i - j - 1]);
            }
            scale * acc
        })
        .collect();
    GridFunction::new(f.h, f.h, out)
}

/// Checks that every exponent of the inner series (after the fused
/// derivative-and-shift) admits the power rule.
fn require_rule_applies(inner: &GenPowerSeries, context: &str) -> Result<()> {
    if let Some(min) = inner.min_exponent() {
        if min < 0.0 {
            return Err(Error::Precondition(format!(
                "{context}: inner exponent {min} is negative, outside the power rule's validity"
            )));
        }
    }
    Ok(())
}

/// The operator d^beta/dt^beta (t^nu d/dt .) applied to a series.
///
/// The derivative and the t^nu factor are fused, so the transiently
/// negative exponents between the two steps never materialize; the
/// combined exponents must be nonnegative.
pub fn laguerre_frac_operator(
    s: &GenPowerSeries,
    beta: CaputoOrder,
    nu: f64,
) -> Result<GenPowerSeries> {
    let inner = s.derivative_then_mul_power(nu);
    require_rule_applies(&inner, "laguerre operator")?;
    caputo_series(&inner, beta)
}

/// The higher-order operator d^beta/dt^beta (t^nu d/dt t d/dt .).
pub fn higher_laguerre_operator(
    s: &GenPowerSeries,
    beta: CaputoOrder,
    nu: f64,
) -> Result<GenPowerSeries> {
    // t d/dt keeps each exponent, scaling the coefficient by it
    let stage1 = s.derivative_then_mul_power(1.0);
    let inner = stage1.derivative_then_mul_power(nu);
    require_rule_applies(&inner, "higher-order laguerre operator")?;
    caputo_series(&inner, beta)
}

/// The operator d/dt (t^lambda d^lambda/dt^lambda .) with
/// lambda in (0, 1]; at lambda = 1 it reduces to the Laguerre derivative
/// d/dt t d/dt. The final derivative may leave a t^(lambda-1)-type
/// singularity at the origin, mirroring the equation's right side.
pub fn eq1_operator(s: &GenPowerSeries, lambda: f64) -> Result<GenPowerSeries> {
    let order = CaputoOrder::new(lambda)?;
    let shifted = caputo_series(s, order)?.mul_power_unchecked(lambda);
    debug_assert!(shifted.evaluable_at_origin());
    Ok(shifted.derivative_unchecked())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{wright_series, SeriesSpec, Sign, DEFAULT_MATCH_TOL};
    use crate::special::WrightParams;

    const SQRT_PI: f64 = 1.7724538509055160;

    fn order(beta: f64) -> CaputoOrder {
        CaputoOrder::new(beta).unwrap()
    }

    #[test]
    fn order_validation() {
        assert!(CaputoOrder::new(0.0).is_err());
        assert!(CaputoOrder::new(1.5).is_err());
        assert!(CaputoOrder::new(f64::NAN).is_err());
        assert!(CaputoOrder::new(1.0).unwrap().is_classical());
    }

    #[test]
    fn power_rule_values() {
        assert_eq!(caputo_power_rule(0.0, order(0.5)).unwrap(), 0.0);
        assert_eq!(caputo_power_rule(1.0, order(1.0)).unwrap(), 1.0);
        let got = caputo_power_rule(1.0, order(0.5)).unwrap();
        assert!((got - 2.0 / SQRT_PI).abs() < 1e-14);
        assert!(caputo_power_rule(-0.5, order(0.5)).is_err());
    }

    #[test]
    fn caputo_series_annihilates_constants() {
        let c = GenPowerSeries::new("t", &[(5.0, 0.0)]).unwrap();
        assert!(caputo_series(&c, order(0.3)).unwrap().is_empty());
    }

    #[test]
    fn caputo_series_of_t() {
        let s = GenPowerSeries::new("t", &[(1.0, 1.0)]).unwrap();
        let d = caputo_series(&s, order(0.5)).unwrap();
        assert_eq!(d.len(), 1);
        assert!((d.terms()[0].coeff - 2.0 / SQRT_PI).abs() < 1e-14);
        assert_eq!(d.terms()[0].exponent, 0.5);
    }

    #[test]
    fn caputo_series_flags_origin_singularity() {
        // 0 < s < beta gives a negative output exponent
        let s = GenPowerSeries::new("t", &[(1.0, 0.25)]).unwrap();
        let d = caputo_series(&s, order(0.5)).unwrap();
        assert!(!d.evaluable_at_origin());
        assert!(d.eval(0.0).is_err());
        assert!(d.eval(0.5).is_ok());
    }

    #[test]
    fn caputo_series_index_shift_identity() {
        // Caputo of W_{l,1}(t^l) at order l drops the k = 0 term and
        // shifts indices: coefficient j becomes 1/((j+1)! Gamma(l j + 1)).
        let lambda = 0.5;
        let p = WrightParams::new(lambda, 1.0).unwrap();
        let w = wright_series(&SeriesSpec::new(p, Sign::Plus, lambda, 6).unwrap());
        let d = caputo_series(&w, order(lambda)).unwrap();
        // independent expected values: Gamma at half-integers in closed form
        let gamma_half: [f64; 5] = [
            1.0,                 // Gamma(1)
            0.5 * SQRT_PI,       // Gamma(1.5)
            1.0,                 // Gamma(2)
            1.5 * 0.5 * SQRT_PI, // Gamma(2.5)
            2.0,                 // Gamma(3)
        ];
        let mut factorial = 1.0;
        for (j, term) in d.terms().iter().enumerate() {
            factorial *= (j + 1) as f64;
            let want = 1.0 / (factorial * gamma_half[j]);
            assert!(
                (term.coeff - want).abs() <= 1e-14 * want,
                "coefficient {j}: {} vs {want}",
                term.coeff
            );
            assert!((term.exponent - lambda * j as f64).abs() < 1e-15);
        }
        assert_eq!(d.len(), 5);
    }

    #[test]
    fn l1_annihilates_constants() {
        let f = GridFunction::sample(0.0, 0.125, 9, |_| 1.0).unwrap();
        let d = caputo_l1(&f, order(0.5)).unwrap();
        assert!(d.values().iter().all(|&v| v == 0.0));
        assert_eq!(d.t0(), 0.125);
        assert_eq!(d.len(), 8);
    }

    #[test]
    fn l1_exact_on_linear_functions() {
        // piecewise-linear reproduction makes f(t) = t exact up to roundoff
        let h = 1.0 / 512.0;
        let f = GridFunction::sample(0.0, h, 513, |t| t).unwrap();
        let d = caputo_l1(&f, order(0.5)).unwrap();
        let mut max_err = 0.0f64;
        for (i, &v) in d.values().iter().enumerate() {
            let t = d.point(i);
            let exact = 2.0 / SQRT_PI * t.sqrt();
            max_err = max_err.max((v - exact).abs());
        }
        assert!(max_err <= 1e-3, "max error {max_err}");
        let at_one = *d.values().last().unwrap();
        assert!((at_one - 1.1283791670955126).abs() < 1e-3);
    }

    #[test]
    fn l1_order_on_quadratic() {
        let beta = 0.5;
        let exact = |t: f64| {
            caputo_power_rule(2.0, order(beta)).unwrap() * libm::pow(t, 2.0 - beta)
        };
        let max_err = |h: f64| {
            let n = (1.0 / h) as usize + 1;
            let f = GridFunction::sample(0.0, h, n, |t| t * t).unwrap();
            let d = caputo_l1(&f, order(beta)).unwrap();
            d.values()
                .iter()
                .enumerate()
                .map(|(i, &v)| (v - exact(d.point(i))).abs())
                .fold(0.0f64, f64::max)
        };
        let e1 = max_err(1.0 / 64.0);
        let e2 = max_err(1.0 / 128.0);
        let observed = (e1 / e2).log2();
        assert!(observed >= 1.4, "observed order {observed}");
    }

    #[test]
    fn l1_rejects_classical_order_and_shifted_grid() {
        let f = GridFunction::sample(0.0, 0.1, 11, |t| t).unwrap();
        assert!(caputo_l1(&f, order(1.0)).is_err());
        let g = GridFunction::sample(0.5, 0.1, 11, |t| t).unwrap();
        assert!(caputo_l1(&g, order(0.5)).is_err());
    }

    #[test]
    fn operators_annihilate_constants() {
        let c = GenPowerSeries::new("t", &[(1.0, 0.0)]).unwrap();
        assert!(laguerre_frac_operator(&c, order(0.5), 0.8).unwrap().is_empty());
        assert!(higher_laguerre_operator(&c, order(0.5), 1.2).unwrap().is_empty());
        assert!(eq1_operator(&c, 0.5).unwrap().is_empty());
    }

    #[test]
    fn laguerre_reduces_to_classical_identity() {
        // beta = nu = 1 on C0: d/dt t d/dt C0 = C0 through the shared indices
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let n = 8;
        let w = wright_series(&SeriesSpec::new(p, Sign::Plus, 1.0, n).unwrap());
        let lhs = laguerre_frac_operator(&w, order(1.0), 1.0).unwrap();
        assert_eq!(lhs.len(), n - 1);
        for (got, want) in lhs.terms().iter().zip(w.terms()) {
            assert!((got.coeff - want.coeff).abs() <= 1e-14 * want.coeff.abs());
            assert!((got.exponent - want.exponent).abs() < 1e-12);
        }
    }

    #[test]
    fn laguerre_matches_scaled_shift_identity() {
        // d^b(t^nu W') = b t^(nu-1) W with W = W_{b,nu}(t^b), checked
        // coefficientwise through the jointly valid index
        let beta = 0.5;
        let nu = 0.8;
        let n = 8;
        let p = WrightParams::new(beta, nu).unwrap();
        let w = wright_series(&SeriesSpec::new(p, Sign::Plus, beta, n).unwrap());
        let lhs = laguerre_frac_operator(&w, order(beta), nu).unwrap();
        let mut rhs = w.mul_power_unchecked(nu - 1.0);
        rhs = GenPowerSeries::from_raw(
            "t",
            rhs.terms()
                .iter()
                .take(n - 1)
                .map(|t| Term { coeff: beta * t.coeff, exponent: t.exponent }),
        );
        let res = GenPowerSeries::linear_combine(1.0, &lhs, -1.0, &rhs, DEFAULT_MATCH_TOL).unwrap();
        let max = res.terms().iter().map(|t| t.coeff.abs()).fold(0.0f64, f64::max);
        assert!(max < 1e-13, "residual {max}");
    }

    #[test]
    fn laguerre_precondition_violation() {
        // nu <= 1 - beta makes the first fused exponent nonpositive
        let beta = 0.3;
        let nu = 0.5;
        let p = WrightParams::new(beta, nu).unwrap();
        let w = wright_series(&SeriesSpec::new(p, Sign::Plus, beta, 6).unwrap());
        let err = laguerre_frac_operator(&w, order(beta), nu).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn higher_operator_constant_annihilation_at_zero_exponent() {
        // beta = 1, nu = 0 on {t}: inner reduces to the constant {1},
        // which the Caputo step annihilates
        let s = GenPowerSeries::new("t", &[(1.0, 1.0)]).unwrap();
        let out = higher_laguerre_operator(&s, order(1.0), 0.0).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn eq1_operator_scaled_identity() {
        // d/dt(t^l d^l W) = l t^(l-1) W with W = W_{l,1}(t^l)
        let lambda = 0.5;
        let n = 8;
        let p = WrightParams::new(lambda, 1.0).unwrap();
        let w = wright_series(&SeriesSpec::new(p, Sign::Plus, lambda, n).unwrap());
        let lhs = eq1_operator(&w, lambda).unwrap();
        assert!(!lhs.evaluable_at_origin());
        let rhs = GenPowerSeries::from_raw(
            "t",
            w.terms()
                .iter()
                .take(n - 1)
                .map(|t| Term { coeff: lambda * t.coeff, exponent: t.exponent + lambda - 1.0 }),
        );
        let res = GenPowerSeries::linear_combine(1.0, &lhs, -1.0, &rhs, DEFAULT_MATCH_TOL).unwrap();
        let max = res.terms().iter().map(|t| t.coeff.abs()).fold(0.0f64, f64::max);
        assert!(max < 1e-13, "residual {max}");
    }
}
