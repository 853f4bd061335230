use hypeig_core::asymptotics::{bounds, expansion_constant, fit_expansion_constant, small_r_expansion, trial_exponent_sequence};
use hypeig_core::hyperball_eigen::{eigen, BallSpec, Method};
use std::f64::consts::PI;

const RADII: [f64; 5] = [0.5, 1.0, 2.0, 5.0, 10.0];

#[test]
fn three_dimensional_law_all_methods() {
    for kappa in [0.5, 1.0, 2.0] {
        for r in [0.25, 1.0, PI, 10.0] {
            let spec = BallSpec::new(3, kappa, r).unwrap();
            let exact = kappa * kappa + PI * PI / (r * r);
            for m in Method::ALL {
                let res = eigen(&spec, Some(m)).unwrap();
                assert!((res.lambda - exact).abs() <= 1e-9 * exact, "{m} κ={kappa} r={r}: {} vs {exact}", res.lambda);
            }
        }
    }
}

#[test]
fn methods_agree_n2_to_9() {
    for n in 2..=9 {
        for r in RADII {
            let spec = BallSpec::new(n, 1.0, r).unwrap();
            let h = eigen(&spec, Some(Method::HypergeomRoot)).unwrap();
            let s = eigen(&spec, Some(Method::OdeShooting)).unwrap();
            assert!((h.lambda - s.lambda).abs() <= 1e-8 * h.lambda, "n={n} r={r}: {} vs {}", h.lambda, s.lambda);
            assert!(h.residual.abs() <= 1e-8 * h.residual_scale, "n={n} r={r} residual {:e} scale {:e}", h.residual, h.residual_scale);
            if n % 2 == 1 {
                let o = eigen(&spec, Some(Method::SRecursion)).unwrap();
                assert!((h.lambda - o.lambda).abs() <= 1e-8 * h.lambda, "n={n} r={r}: odd {}", o.lambda);
            }
        }
    }
}

#[test]
fn bound_sandwich() {
    for n in 2..=9 {
        for r in RADII {
            let spec = BallSpec::new(n, 1.0, r).unwrap();
            let lam = eigen(&spec, None).unwrap().lambda;
            let b = bounds(&spec);
            assert!(b.mckean_lower < lam);
            // For n = 3 the Borisov–Freitas interval collapses onto the exact
            // value, so membership is judged up to rounding.
            let slack = 1e-12 * lam;
            assert!(b.bf_lower.unwrap() - slack <= lam && lam <= b.bf_upper.unwrap() + slack, "BF n={n} r={r}: {lam} {b:?}");
            assert!(b.savo_lower - slack <= lam && lam <= b.savo_upper + slack, "Savo n={n} r={r}: {lam} {b:?}");
        }
    }
}

#[test]
fn decreasing_in_radius() {
    for n in [2, 4, 7] {
        let mut prev = f64::INFINITY;
        for i in 1..30 {
            let r = 0.3 * i as f64;
            let lam = eigen(&BallSpec::new(n, 1.0, r).unwrap(), None).unwrap().lambda;
            assert!(lam < prev, "n={n} r={r}");
            prev = lam;
        }
    }
}

#[test]
fn mckean_limit_at_r50() {
    for n in 2..=7 {
        let lam = eigen(&BallSpec::new(n, 1.0, 50.0).unwrap(), None).unwrap().lambda;
        let floor = ((n - 1) * (n - 1)) as f64 / 4.0;
        assert!(lam - floor <= 5e-3 && lam > floor, "n={n}: {lam}");
    }
}

#[test]
fn expansion_constants_recovered() {
    let grid = [20.0, 40.0, 80.0, 160.0];
    for n in [2, 4, 5, 6, 7, 9] {
        let fit = fit_expansion_constant(n, &grid).unwrap();
        let c = expansion_constant(n).unwrap();
        assert!((fit.c_l - c).abs() <= 0.01 * c.abs(), "n={n}: fit {} vs {c}", fit.c_l);
    }
    let fit3 = fit_expansion_constant(3, &grid).unwrap();
    assert!(fit3.c_l.abs() < 1e-6);
}

#[test]
fn wrong_exponents_drift() {
    let grid = [20.0, 40.0, 80.0, 160.0];
    let low = trial_exponent_sequence(5, &grid, 1.5).unwrap();
    let high = trial_exponent_sequence(5, &grid, 2.5).unwrap();
    assert!(low.windows(2).all(|w| w[1].abs() < w[0].abs()));
    assert!(high.windows(2).all(|w| w[1].abs() > w[0].abs()));
}

#[test]
fn small_radius_residual_shrinks() {
    let mut prev = f64::INFINITY;
    for r in [0.2, 0.1, 0.05, 0.025] {
        let lam = eigen(&BallSpec::new(5, 1.0, r).unwrap(), None).unwrap().lambda;
        let d = lam - small_r_expansion(5, 1.0, r).unwrap();
        assert!((d * r * r).abs() < prev);
        prev = (d * r * r).abs();
        if r == 0.025 {
            assert!(d.abs() <= 1e-2, "residual {d}");
        }
    }
}
