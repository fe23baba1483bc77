//! Independent oracles shared by the integration tests.
//!
//! Everything here deliberately avoids the library's own evaluation
//! paths: gamma comes from a Spouge approximation (the library uses
//! Lanczos), and the Bessel/Mittag-Leffler values come from their
//! classical defining series with multiplicative term recurrences (the
//! library forms terms in log space).

#![allow(dead_code)]

/// Spouge's gamma approximation with a = 17, accurate to ~1e-14
/// relative on the positive axis.
pub fn spouge_gamma(x: f64) -> f64 {
    const A: usize = 17;
    if x < 0.5 {
        return std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin() * spouge_gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = (2.0 * std::f64::consts::PI).sqrt();
    for k in 1..A {
        let kf = k as f64;
        let mut ck = ((A as f64 - kf).powf(kf - 0.5) * (A as f64 - kf).exp()) / fact(k - 1);
        if k % 2 == 0 {
            ck = -ck;
        }
        acc += ck / (z + kf);
    }
    acc * (z + A as f64).powf(z + 0.5) * (-(z + A as f64)).exp()
}

fn fact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Bessel J_nu by its defining series with a term recurrence.
pub fn bessel_j_series(nu: f64, z: f64) -> f64 {
    let x = z * z / 4.0;
    let mut term = (z / 2.0).powf(nu) / spouge_gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term *= -x / (kf * (kf + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-30) && k > 8 {
            break;
        }
    }
    sum
}

/// Modified Bessel I_nu by its defining series.
pub fn bessel_i_series(nu: f64, z: f64) -> f64 {
    let x = z * z / 4.0;
    let mut term = (z / 2.0).powf(nu) / spouge_gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term *= x / (kf * (kf + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-30) && k > 8 {
            break;
        }
    }
    sum
}

/// Mittag-Leffler E_{alpha,beta} by brute-force summation with Spouge
/// gamma; adequate for the moderate arguments the tests use.
pub fn mittag_leffler_series(alpha: f64, beta: f64, z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zp = 1.0;
    for n in 0..600 {
        let arg = alpha * n as f64 + beta;
        if arg > 0.0 || arg.fract() != 0.0 {
            sum += zp / spouge_gamma(arg);
        }
        zp *= z;
        if zp.abs() / spouge_gamma(alpha * (n + 1) as f64 + beta).abs() < 1e-18 && n > 10 {
            break;
        }
    }
    sum
}

/// Least-squares slope of ln(err) against ln(h): the observed
/// convergence order of a grid scheme.
pub fn fitted_order(hs: &[f64], errs: &[f64]) -> f64 {
    let n = hs.len() as f64;
    let lx: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
    let ly: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

#[test]
fn oracle_self_checks() {
    // Spouge gamma against exact factorials and sqrt(pi)
    assert!((spouge_gamma(1.0) - 1.0).abs() < 1e-13);
    assert!((spouge_gamma(5.0) - 24.0).abs() < 24.0 * 1e-13);
    assert!((spouge_gamma(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    // frozen 40-digit references
    assert!((bessel_j_series(0.0, 2.0) - 0.22389077914123567).abs() < 1e-13);
    assert!((bessel_i_series(0.0, 2.0) - 2.2795853023360673).abs() < 1e-13);
    assert!((mittag_leffler_series(1.0, 1.0, 1.0) - std::f64::consts::E).abs() < 1e-13);
}
