//! Oracle equivalence: the exact Caputo power rule on truncated series
//! against the independent L1 grid discretization.
//!
//! For a series whose smallest positive exponent is p, the L1 scheme
//! converges at order min(1 + p, 2 - beta): the 2 - beta rate of the
//! smooth theory, capped by the first-cell interpolation error of t^p
//! when p < 1. The corpus below exercises both regimes.

mod common;

use common::fitted_order;
use wrightfn::fracops::{caputo_l1, caputo_series, CaputoOrder, GridFunction};
use wrightfn::series::{wright_series, SeriesSpec, Sign};
use wrightfn::special::WrightParams;

struct Case {
    lambda: f64,
    mu: f64,
    power: f64,
    sign: Sign,
    beta: f64,
}

const CORPUS: [Case; 8] = [
    Case { lambda: 0.3, mu: 0.9, power: 0.7, sign: Sign::Minus, beta: 0.2 },
    Case { lambda: 0.5, mu: 1.0, power: 1.0, sign: Sign::Plus, beta: 0.2 },
    Case { lambda: 0.5, mu: 1.0, power: 0.5, sign: Sign::Minus, beta: 0.5 },
    Case { lambda: 0.7, mu: 1.4, power: 0.8, sign: Sign::Plus, beta: 0.5 },
    Case { lambda: 0.4, mu: 0.8, power: 1.2, sign: Sign::Minus, beta: 0.5 },
    Case { lambda: 0.8, mu: 0.7, power: 0.3, sign: Sign::Minus, beta: 0.8 },
    Case { lambda: 0.9, mu: 1.1, power: 0.9, sign: Sign::Plus, beta: 0.8 },
    Case { lambda: 0.2, mu: 1.0, power: 0.2, sign: Sign::Minus, beta: 0.9 },
];

#[test]
fn l1_converges_to_exact_rule_on_series_corpus() {
    for case in &CORPUS {
        let params = WrightParams::new(case.lambda, case.mu).unwrap();
        let spec = SeriesSpec::new(params, case.sign, case.power, 10).unwrap();
        let series = wright_series(&spec);
        let order = CaputoOrder::new(case.beta).unwrap();
        let exact = caputo_series(&series, order).unwrap();

        let mut hs = Vec::new();
        let mut errs = Vec::new();
        for k in 6..=9u32 {
            let h = 0.5f64.powi(k as i32);
            let n = (1.0 / h) as usize + 1;
            let grid = GridFunction::sample(0.0, h, n, |t| series.eval(t).unwrap()).unwrap();
            let l1 = caputo_l1(&grid, order).unwrap();
            let mut max_err = 0.0f64;
            for (i, &v) in l1.values().iter().enumerate() {
                let t = l1.point(i);
                if t < 0.1 {
                    continue;
                }
                max_err = max_err.max((v - exact.eval(t).unwrap()).abs());
            }
            hs.push(h);
            errs.push(max_err);
        }

        // errors decay monotonically as h halves
        for w in errs.windows(2) {
            assert!(w[1] < w[0], "errors not decreasing: {errs:?}");
        }
        let observed = fitted_order(&hs, &errs);
        let expected = (1.0 + case.power).min(2.0 - case.beta);
        assert!(
            observed >= expected - 0.2,
            "beta {} power {}: observed order {observed:.3}, expected ~{expected:.2}",
            case.beta,
            case.power
        );
        // on the subdomain where the first-cell cap is inactive, the
        // smooth-theory rate 2 - beta itself must show
        if case.power >= 0.8 - case.beta + 0.15 {
            assert!(
                observed >= 2.0 - case.beta - 0.2,
                "beta {} power {}: observed order {observed:.3} below 2 - beta - 0.2",
                case.beta,
                case.power
            );
        }
    }
}
