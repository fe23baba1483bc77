//! Bessel-type functions expressed through the Wright function of the
//! first kind: J_nu, I_nu, the Bessel-Clifford and Tricomi variants
//! without the singular factor, and the generalized Bessel function
//! with gamma slope lambda.

use crate::error::{Error, Result};
use alloc::format;

use super::wright::{wright_eval, EvalResult, WrightParams};

/// (z/2)^nu for the real branch: z < 0 is only allowed with integer nu.
fn half_power(z: f64, nu: f64) -> Result<f64> {
    if z < 0.0 && nu != libm::floor(nu) {
        return Err(Error::Domain(format!(
            "negative argument z = {z} needs an integer order, got nu = {nu}"
        )));
    }
    Ok(libm::pow(z / 2.0, nu))
}

fn require_nonneg(name: &str, v: f64) -> Result<()> {
    if !(v >= 0.0) {
        return Err(Error::Domain(format!("{name} must be >= 0, got {v}")));
    }
    Ok(())
}

fn scaled(prefactor: f64, inner: EvalResult) -> EvalResult {
    EvalResult {
        value: prefactor * inner.value,
        abs_error_bound: libm::fabs(prefactor) * inner.abs_error_bound,
        terms_used: inner.terms_used,
    }
}

/// Tricomi function C0(t) = sum_k t^k / k!^2 = W_{1,1}(t).
///
/// For t >= 0 it also equals I_0(2 sqrt(t)).
pub fn tricomi_c0(t: f64, tol: f64) -> Result<EvalResult> {
    wright_eval(WrightParams::new(1.0, 1.0)?, t, tol)
}

/// Bessel function J_nu(z) = (z/2)^nu W_{1,nu+1}(-z^2/4).
pub fn bessel_j_wright(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    require_nonneg("nu", nu)?;
    let pre = half_power(z, nu)?;
    let inner = wright_eval(WrightParams::new(1.0, nu + 1.0)?, -z * z / 4.0, tol)?;
    Ok(scaled(pre, inner))
}

/// Modified Bessel function I_nu(z) = (z/2)^nu W_{1,nu+1}(z^2/4).
pub fn bessel_i_wright(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    require_nonneg("nu", nu)?;
    let pre = half_power(z, nu)?;
    let inner = wright_eval(WrightParams::new(1.0, nu + 1.0)?, z * z / 4.0, tol)?;
    Ok(scaled(pre, inner))
}

/// Bessel-Clifford function J^C_nu(z) = sum_k (-1)^k z^k / (k! Gamma(k+nu+1)),
/// i.e. W_{1,nu+1}(-z); entire, so any real z is accepted.
pub fn bessel_clifford(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    require_nonneg("nu", nu)?;
    wright_eval(WrightParams::new(1.0, nu + 1.0)?, -z, tol)
}

/// Tricomi's entire Bessel variant J^T_nu(z) = (z/2)^{-nu} J_nu(z)
/// = W_{1,nu+1}(-z^2/4); entire in z.
pub fn tricomi_jt(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    require_nonneg("nu", nu)?;
    wright_eval(WrightParams::new(1.0, nu + 1.0)?, -z * z / 4.0, tol)
}

/// Wright generalized Bessel function
/// J_nu^(lambda)(z) = (z/2)^nu W_{lambda,nu+1}(-z^2/4), lambda >= 0.
///
/// Reduces to the classical J_nu at lambda = 1.
pub fn wright_gen_bessel(lambda: f64, nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    require_nonneg("lambda", lambda)?;
    require_nonneg("nu", nu)?;
    let pre = half_power(z, nu)?;
    let inner = wright_eval(WrightParams::new(lambda, nu + 1.0)?, -z * z / 4.0, tol)?;
    Ok(scaled(pre, inner))
}

#[cfg(test)]
mod tests {
    use super::*;

    const J0_2: f64 = 0.22389077914123567;
    const I0_2: f64 = 2.2795853023360673;

    #[test]
    fn tricomi_c0_values() {
        assert_eq!(tricomi_c0(0.0, 1e-12).unwrap().value, 1.0);
        let r = tricomi_c0(1.0, 1e-14).unwrap();
        assert!((r.value - I0_2).abs() < 1e-14);
        let r = tricomi_c0(-1.0, 1e-14).unwrap();
        assert!((r.value - J0_2).abs() < 1e-14);
    }

    #[test]
    fn bessel_j_values() {
        assert_eq!(bessel_j_wright(0.0, 0.0, 1e-12).unwrap().value, 1.0);
        assert_eq!(bessel_j_wright(1.0, 0.0, 1e-12).unwrap().value, 0.0);
        let r = bessel_j_wright(0.0, 2.0, 1e-14).unwrap();
        assert!((r.value - J0_2).abs() < 1e-14);
    }

    #[test]
    fn bessel_i_values() {
        assert_eq!(bessel_i_wright(0.0, 0.0, 1e-12).unwrap().value, 1.0);
        assert_eq!(bessel_i_wright(2.0, 0.0, 1e-12).unwrap().value, 0.0);
        let r = bessel_i_wright(0.0, 2.0, 1e-14).unwrap();
        assert!((r.value - I0_2).abs() < 1e-14);
    }

    #[test]
    fn clifford_and_tricomi_variants() {
        assert_eq!(bessel_clifford(0.0, 0.0, 1e-12).unwrap().value, 1.0);
        assert_eq!(bessel_clifford(1.0, 0.0, 1e-12).unwrap().value, 1.0);
        let r = bessel_clifford(0.0, 1.0, 1e-14).unwrap();
        assert!((r.value - J0_2).abs() < 1e-14);
        assert_eq!(tricomi_jt(0.0, 0.0, 1e-12).unwrap().value, 1.0);
        assert_eq!(tricomi_jt(1.0, 0.0, 1e-12).unwrap().value, 1.0);
        let r = tricomi_jt(0.0, 2.0, 1e-14).unwrap();
        assert!((r.value - J0_2).abs() < 1e-14);
        // entire in z: negative arguments are fine
        assert!(tricomi_jt(0.5, -3.0, 1e-12).is_ok());
        assert!(bessel_clifford(0.5, -2.0, 1e-12).is_ok());
    }

    #[test]
    fn gen_bessel_reduces_to_classical_at_lambda_one() {
        let r = wright_gen_bessel(1.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r.value - J0_2).abs() < 1e-14);
        assert_eq!(wright_gen_bessel(0.5, 0.0, 0.0, 1e-12).unwrap().value, 1.0);
        assert_eq!(wright_gen_bessel(1.0, 1.0, 0.0, 1e-12).unwrap().value, 0.0);
    }

    #[test]
    fn real_branch_domain_errors() {
        assert!(bessel_j_wright(0.5, -1.0, 1e-10).is_err());
        assert!(bessel_i_wright(1.5, -2.0, 1e-10).is_err());
        assert!(wright_gen_bessel(0.5, 0.5, -1.0, 1e-10).is_err());
        // integer order keeps the real branch on z < 0
        assert!(bessel_j_wright(1.0, -1.0, 1e-10).is_ok());
        // nu < 0 rejected everywhere
        assert!(bessel_j_wright(-0.5, 1.0, 1e-10).is_err());
        assert!(wright_gen_bessel(-1.0, 0.0, 1.0, 1e-10).is_err());
    }
}
