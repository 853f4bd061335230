//! Deterministic invariant suites.
//!
//! Every suite draws its random instances from a seeded ChaCha stream, so a
//! given seed always exercises the same cases. Suites never panic; numerical
//! errors are counted as failed cases and described in the outcome.

use crate::error::Result;
use crate::funk_finsler::{funk_cometric, funk_distance, funk_metric, polar_transform_sup, FunkPoint};
use crate::hyperball_eigen::{s_function, BallSpec};
use crate::hypergeom2f1::{eval_2f1, eval_2f1_derivative, eval_2f1_with, ratio_cf, HypergeomParams, Strategy};
use crate::mm_comparison::{check_hypotheses, find_rho0_in, transplant_functions, RadialMeasure};
use crate::radial_sturm::{count_zeros, is_oscillatory, is_oscillatory_by_shooting, shoot_funk, shoot_hyperbolic, shoot_t_form, RHO_CAP};
use crate::roots::{first_root, grid, RootOptions};
use crate::unit_ball_volume;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x6879_7065_6967;

/// Result of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Largest error measure seen (in the suite's own units).
    pub worst: f64,
    pub tolerance: f64,
    /// First failing case, or a short summary.
    pub note: String,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

struct Tally {
    name: &'static str,
    tol: f64,
    cases: usize,
    failures: usize,
    worst: f64,
    note: Option<String>,
}

impl Tally {
    fn new(name: &'static str, tol: f64) -> Self {
        Tally { name, tol, cases: 0, failures: 0, worst: 0.0, note: None }
    }

    /// Record an error measure; NaN counts as failure.
    fn check(&mut self, err: f64, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !(err <= self.tol) {
            self.failures += 1;
            if self.note.is_none() {
                self.note = Some(format!("{}: error {err:e}", what()));
            }
        }
        if err > self.worst || err.is_nan() {
            self.worst = err;
        }
    }

    fn check_bool(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.check(if ok { 0.0 } else { f64::INFINITY }, what);
    }

    fn absorb<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.failures += 1;
                self.worst = f64::INFINITY;
                if self.note.is_none() {
                    self.note = Some(format!("{}: {e}", what()));
                }
                None
            }
        }
    }

    fn finish(self) -> SuiteOutcome {
        let note = self.note.unwrap_or_else(|| format!("{} cases, worst {:.3e}", self.cases, self.worst));
        SuiteOutcome { name: self.name, cases: self.cases, failures: self.failures, worst: self.worst, tolerance: self.tol, note }
    }
}

fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.abs().max(f64::MIN_POSITIVE)
}

fn z_of_rho(rho: f64) -> f64 {
    let r2 = rho * rho;
    r2 / ((rho - 1.0) * (rho + 1.0))
}

/// Parameters of the regular radial solution `₂F₁(m ± √(m² − C/4); n/2)`,
/// `m = (n−1)/2`, written as a conjugate pair above the threshold.
pub fn radial_params(n: usize, c_osc: f64) -> Result<HypergeomParams> {
    let m = 0.5 * (n as f64 - 1.0);
    let d = m * m - 0.25 * c_osc;
    if d < 0.0 {
        HypergeomParams::conjugate(m, (-d).sqrt(), 0.5 * n as f64)
    } else {
        let s = d.sqrt();
        HypergeomParams::real(m + s, m - s, 0.5 * n as f64)
    }
}

/// `₂F₁(1+iγ, 1−iγ; 3/2; −sinh²(x/2)) = sin(γx)/(γ sinh x)` for random
/// `(γ, x) ∈ (0,5)²`, absolute error ≤ 10⁻⁹.
pub fn identity_sine(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("identity_sine", 1e-9);
    for _ in 0..20 {
        let g: f64 = rng.gen_range(1e-3..5.0);
        let x: f64 = rng.gen_range(1e-3..5.0);
        let what = || format!("γ={g} x={x}");
        let Some(p) = t.absorb(HypergeomParams::conjugate(1.0, g, 1.5), what) else { continue };
        let z = -(0.5 * x).sinh().powi(2);
        if let Some(v) = t.absorb(eval_2f1(&p, z), what) {
            t.check((v.value - (g * x).sin() / (g * x.sinh())).abs(), what);
        }
    }
    t.finish()
}

fn double_factorial_odd(k: usize) -> f64 {
    (1..=k).map(|j| (2 * j - 1) as f64).product()
}

/// `₂F₁(k ± iγ; (2k+1)/2; −sinh²(x/2)) = (−1)^{k−1}(2k−1)!!/∏(j²+γ²) · S_k(γ, x)`
/// for `k = 1, 2, 3`, relative error ≤ 10⁻⁸.
pub fn identity_s_recursion(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("identity_s_recursion", 1e-8);
    for k in 1..=3usize {
        for _ in 0..10 {
            let g: f64 = rng.gen_range(0.1..5.0);
            let x: f64 = rng.gen_range(0.1..5.0);
            let what = || format!("k={k} γ={g} x={x}");
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let pref = sign * double_factorial_odd(k) / (1..k).map(|j| (j * j) as f64 + g * g).product::<f64>();
            let Some(p) = t.absorb(HypergeomParams::conjugate(k as f64, g, k as f64 + 0.5), what) else { continue };
            let z = -(0.5 * x).sinh().powi(2);
            let (Some(lhs), Some(s)) = (t.absorb(eval_2f1(&p, z), what), t.absorb(s_function(k, g, x), what)) else { continue };
            let rhs = pref * s;
            t.check(rel(lhs.value, rhs, lhs.value.abs().max(rhs.abs())), what);
        }
    }
    t.finish()
}

/// Forced direct series vs forced Pfaff series on `z ∈ (−0.9, −0.05)`,
/// real parameters, relative error ≤ 10⁻¹⁰.
pub fn pfaff_consistency(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("pfaff_consistency", 1e-10);
    for _ in 0..30 {
        let a: f64 = rng.gen_range(-1.5..3.0);
        let b: f64 = rng.gen_range(-1.5..3.0);
        let c: f64 = rng.gen_range(0.5..4.0);
        let z: f64 = rng.gen_range(-0.9..-0.05);
        let what = || format!("a={a} b={b} c={c} z={z}");
        let Some(p) = t.absorb(HypergeomParams::real(a, b, c), what) else { continue };
        let (Some(s), Some(q)) = (
            t.absorb(eval_2f1_with(&p, z, Strategy::Series), what),
            t.absorb(eval_2f1_with(&p, z, Strategy::PfaffSeries), what),
        ) else {
            continue;
        };
        t.check(rel(s.value, q.value, s.value.abs().max(s.est_error)), what);
    }
    t.finish()
}

/// `d/dz ₂F₁` from the contiguous formula vs a Richardson-extrapolated
/// central difference, 50 instances with `−10 ≤ z < 0`, relative error ≤ 10⁻⁶.
pub fn derivative_vs_difference(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("derivative_vs_difference", 1e-6);
    for i in 0..50 {
        let p = if i % 2 == 0 {
            HypergeomParams::conjugate(rng.gen_range(0.5..4.0), rng.gen_range(0.1..4.0), rng.gen_range(1.0..5.0))
        } else {
            HypergeomParams::real(rng.gen_range(-1.0..3.0), rng.gen_range(-1.0..3.0), rng.gen_range(0.5..4.0))
        };
        let z: f64 = -rng.gen_range(0.05..10.0);
        let Some(p) = t.absorb(p, || format!("z={z}")) else { continue };
        let what = || format!("{p:?} z={z}");
        let h = 2e-3 * z.abs().min(1.0);
        let f = |x: f64| eval_2f1(&p, x).map(|r| r.value);
        let diff = |h: f64| -> Result<f64> { Ok((f(z + h)? - f(z - h)?) / (2.0 * h)) };
        let fd = match (diff(h), diff(0.5 * h)) {
            (Ok(d1), Ok(d2)) => Ok((4.0 * d2 - d1) / 3.0),
            (Err(e), _) | (_, Err(e)) => Err(e),
        };
        let (Some(fd), Some(d)) = (t.absorb(fd, what), t.absorb(eval_2f1_derivative(&p, z), what)) else { continue };
        t.check(rel(d, fd, d), what);
    }
    t.finish()
}

/// Shooting solution of the hyperbolic radial equation vs the closed form
/// `₂F₁(·; ρ²/(ρ²−1))` at 10 interior points, 20 random `(n, C)`; error
/// relative to the largest sampled value, ≤ 10⁻⁶.
pub fn shooting_vs_closed_form(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("shooting_vs_closed_form", 1e-6);
    for _ in 0..20 {
        let n: usize = rng.gen_range(2..=9);
        let c: f64 = rng.gen_range(0.5..80.0);
        let what = || format!("n={n} C={c}");
        let Some(p) = t.absorb(radial_params(n, c), what) else { continue };
        let pts: Vec<f64> = (1..=10).map(|i| 0.09 * i as f64).collect();
        let mut closed = Vec::with_capacity(pts.len());
        let mut shot = Vec::with_capacity(pts.len());
        for &rho in &pts {
            let a = t.absorb(eval_2f1(&p, z_of_rho(rho)), what).map(|r| r.value);
            let b = t.absorb(shoot_hyperbolic(n, c, rho), what).and_then(|s| s.samples.last().map(|v| v.1));
            if let (Some(a), Some(b)) = (a, b) {
                closed.push(a);
                shot.push(b);
            }
        }
        let scale = closed.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let err = closed.iter().zip(&shot).fold(0.0f64, |m, (a, b)| m.max(rel(*a, *b, scale)));
        t.check(err, what);
    }
    t.finish()
}

/// The `t = ρ²/(1−ρ²)` form of the equation reproduces the ρ-form shooting
/// values to 10⁻⁸ (relative to the largest sampled value).
pub fn t_form_consistency(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("t_form_consistency", 1e-8);
    for _ in 0..10 {
        let n: usize = rng.gen_range(2..=7);
        let c: f64 = rng.gen_range(0.5..60.0);
        let what = || format!("n={n} C={c}");
        let rhos: Vec<f64> = (1..=8).map(|i| 0.11 * i as f64).collect();
        let ts: Vec<f64> = rhos.iter().map(|r| r * r / (1.0 - r * r)).collect();
        let Some(tw) = t.absorb(shoot_t_form(n, c, &ts), what) else { continue };
        let mut vals = Vec::new();
        for &rho in &rhos {
            if let Some(s) = t.absorb(shoot_hyperbolic(n, c, rho), what) {
                vals.push(s.samples.last().map(|v| v.1).unwrap_or(f64::NAN));
            }
        }
        let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let err = tw.iter().zip(&vals).fold(0.0f64, |m, (a, b)| m.max(rel(a.1, *b, scale)));
        t.check(err, what);
    }
    t.finish()
}

/// Smallest root in `ρ` of the closed form for `(n, C)` on `(0, rho_max]`.
pub fn closed_form_first_zero(n: usize, c_osc: f64, rho_max: f64) -> Result<f64> {
    let p = radial_params(n, c_osc)?;
    let g = grid(1e-3, rho_max, 2000, false);
    let opts = RootOptions { rel_tol: 1e-14, ..RootOptions::default() };
    Ok(first_root(|rho| eval_2f1(&p, z_of_rho(rho)).map(|r| r.value), &g, "closed-form radial zero", &opts)?.x)
}

/// `(n, C) = (5, 30)`: first zero by shooting vs the closed form, ≤ 10⁻⁶;
/// plus the `n = 3` zero `tanh(r′/2)`.
pub fn cross_oracle(_seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("cross_oracle", 1e-6);
    let what = || String::from("n=5 C=30");
    let a = t.absorb(shoot_hyperbolic(5, 30.0, 0.999), what).and_then(|s| s.first_zero);
    let b = t.absorb(closed_form_first_zero(5, 30.0, 0.999), what);
    match (a, b) {
        (Some(a), Some(b)) => t.check((a - b).abs(), what),
        (None, Some(_)) => t.check_bool(false, || String::from("n=5 C=30: shooting found no zero")),
        _ => {}
    }
    let g = core::f64::consts::PI / 2.0;
    let w3 = || String::from("n=3 r′=2");
    if let Some(s) = t.absorb(shoot_hyperbolic(3, 4.0 * (g * g + 1.0), 0.99), w3) {
        t.check(s.first_zero.map_or(f64::INFINITY, |z| (z - 1f64.tanh()).abs()), w3);
    }
    t.finish()
}

/// Outcome of the randomized sweep around the oscillation threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct OscillationSweep {
    pub cases: usize,
    pub misclassified: usize,
    pub oscillatory_cases: usize,
    /// Oscillatory cases whose shooting solution shows ≥ 2 zeros before the cap.
    pub with_two_zeros: usize,
    pub errors: usize,
    pub first_problem: Option<String>,
}

/// 100 cases `C = (n−1)² ± δ` with `δ ∈ [0.5, 4)` (and `C > 0`), `n ∈ 2..=9`; each
/// classified by shooting (a zero before `1 − 10⁻⁶`) and by the analytic
/// criterion.
pub fn oscillation_sweep(seed: u64) -> OscillationSweep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = OscillationSweep { cases: 0, misclassified: 0, oscillatory_cases: 0, with_two_zeros: 0, errors: 0, first_problem: None };
    for _ in 0..100 {
        let n: usize = rng.gen_range(2..=9);
        let n1 = (n - 1) as f64;
        let above = rng.gen_bool(0.5);
        // Below the threshold C must stay positive (only binds for n = 2).
        let delta_max = if above { 4.0 } else { (n1 * n1 - 0.01).min(4.0) };
        let delta: f64 = rng.gen_range(0.5..delta_max);
        let c = if above { n1 * n1 + delta } else { n1 * n1 - delta };
        out.cases += 1;
        let analytic = is_oscillatory(n, c);
        match (is_oscillatory_by_shooting(n, c), count_zeros(n, c)) {
            (Ok(shot), Ok(zeros)) => {
                if shot != analytic {
                    out.misclassified += 1;
                    out.first_problem.get_or_insert_with(|| format!("n={n} C={c}: analytic {analytic}, shooting {shot}"));
                }
                if analytic {
                    out.oscillatory_cases += 1;
                    if zeros >= 2 {
                        out.with_two_zeros += 1;
                    }
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                out.errors += 1;
                out.first_problem.get_or_insert_with(|| format!("n={n} C={c}: {e}"));
            }
        }
    }
    out
}

pub fn oscillation_dichotomy(seed: u64) -> SuiteOutcome {
    let s = oscillation_sweep(seed);
    let failures = s.misclassified + s.errors;
    let note = s.first_problem.clone().unwrap_or_else(|| {
        format!(
            "{} cases, {} oscillatory ({} with ≥ 2 zeros before ρ = {RHO_CAP})",
            s.cases, s.oscillatory_cases, s.with_two_zeros
        )
    });
    SuiteOutcome { name: "oscillation_dichotomy", cases: s.cases, failures, worst: failures as f64, tolerance: 0.0, note }
}

/// Funk radial equation: a zero exists for `(n, λ) = (2, 0.24)`, the first
/// zero moves towards 1 as `λ ↓ 0`, the sign is constant before the zero
/// and the profile keeps `f ≤ 0`, `f′ ≥ 0` up to it.
pub fn funk_shooting(_seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("funk_shooting", 0.0);
    let w = || String::from("n=2 λ=0.24");
    if let Some(s) = t.absorb(shoot_funk(2, 0.24, 0.999999), w) {
        t.check_bool(s.first_zero.is_some(), w);
    }
    let mut prev = 0.0;
    for lam in [0.2, 0.1, 0.05, 0.02, 0.01] {
        let w = || format!("n=3 λ={lam}");
        if let Some(s) = t.absorb(shoot_funk(3, lam, 0.999999), w) {
            let z = s.first_zero.unwrap_or(1.0);
            t.check_bool(z > prev, w);
            prev = z;
        }
    }
    let w = || String::from("n=2 λ=0.2");
    if let Some(s) = t.absorb(shoot_funk(2, 0.2, 0.999999), w) {
        let z = s.first_zero.unwrap_or(1.0);
        let before: Vec<&(f64, f64)> = s.samples.iter().filter(|v| v.0 < z).collect();
        t.check_bool(before.iter().all(|v| v.1 < 0.0), w);
        t.check_bool(before.windows(2).all(|p| p[1].1 >= p[0].1), w);
    }
    t.finish()
}

/// Transplanted-eigenfunction monotonicities on a small grid: `R_n`
/// decreases, `R_n/(R_{n+2} sinh κρ)` decreases and agrees with its
/// continued-fraction value, and `H` changes sign exactly at `ρ₀`.
pub fn transplant_monotonicity(_seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("transplant_monotonicity", 1e-8);
    for (n, kappa, r) in [(2, 1.0, 1.0), (3, 0.5, 2.0), (5, 2.0, 0.7), (4, 1.0, 4.0)] {
        let what = || format!("n={n} κ={kappa} r={r}");
        let Some(spec) = t.absorb(BallSpec::new(n, kappa, r), what) else { continue };
        let Some(tr) = t.absorb(transplant_functions(&spec), what) else { continue };
        let Some(rho0) = t.absorb(find_rho0_in(&tr), what) else { continue };
        let (mut prev_r, mut prev_q) = (f64::INFINITY, f64::INFINITY);
        for i in 1..40 {
            let rho = r * i as f64 / 40.0;
            let vals = (|| -> Result<(f64, f64, f64)> { Ok((tr.r_n(rho)?, tr.r_n2(rho)?, tr.h(rho)?)) })();
            let Some((rn, rn2, h)) = t.absorb(vals, what) else { continue };
            let q = rn / (rn2 * (kappa * rho).sinh());
            t.check_bool(rn < prev_r && q < prev_q, what);
            (prev_r, prev_q) = (rn, q);
            if let Some(cf) = t.absorb(ratio_cf(n, kappa, tr.lambda, rho), what) {
                t.check(rel(cf, q, q), what);
            }
            if (rho - rho0).abs() > 1e-9 * r {
                t.check_bool((h > 0.0) == (rho > rho0), what);
            }
        }
    }
    t.finish()
}

/// Funk eikonal identity `F*(x, ∇d_F(0,·)) = 1`, polar duality of the
/// cometric, and the quasimetric axioms of `d_F`.
pub fn funk_geometry(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("funk_geometry", 1e-6);
    for _ in 0..40 {
        let n: usize = rng.gen_range(2..=4);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-0.5..0.5)).collect();
        let what = || format!("x={x:?}");
        let Some(p) = t.absorb(FunkPoint::new(x.clone()), what) else { continue };
        let s = p.norm();
        if s < 1e-3 {
            continue;
        }
        let grad: Vec<f64> = x.iter().map(|c| c / (s * (1.0 - s))).collect();
        if let Some(v) = t.absorb(funk_cometric(&p, &grad), what) {
            t.check((v - 1.0).abs(), what);
        }
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if let (Some(a), Some(b)) = (t.absorb(funk_cometric(&p, &y), what), t.absorb(polar_transform_sup(&p, &y), what)) {
            t.check(rel(a, b, a), what);
        }
        // F(x, y) for y = x is |x|/(1 − |x|).
        if let Some(v) = t.absorb(funk_metric(&p, &x), what) {
            t.check(rel(v, s / (1.0 - s), v), what);
        }
    }
    for _ in 0..30 {
        let pts: Vec<FunkPoint> = (0..3)
            .filter_map(|_| FunkPoint::new((0..2).map(|_| rng.gen_range(-0.6..0.6)).collect()).ok())
            .collect();
        let what = || String::from("triangle");
        let d = |i: usize, j: usize| funk_distance(&pts[i], &pts[j]);
        let v = (|| -> Result<(f64, f64, f64)> { Ok((d(0, 1)?, d(1, 2)?, d(0, 2)?)) })();
        if let Some((a, b, c)) = t.absorb(v, what) {
            t.check_bool(a > 0.0 && c <= a + b + 1e-12, what);
        }
    }
    t.finish()
}

/// A tabulated copy of the hyperbolic area density reproduces the closed
/// form volume and passes both comparison hypotheses.
pub fn tabulated_density(_seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("tabulated_density", 1e-6);
    let (n, kappa, r) = (3usize, 1.0, 2.0);
    // Geometric nodes near the origin (so the small-sphere limit is
    // resolved), then a uniform grid.
    let rho: Vec<f64> = (0..60)
        .map(|i| 1e-4 * 500f64.powf(i as f64 / 60.0))
        .chain((0..=780).map(|i| 0.05 + (r - 0.05) * i as f64 / 780.0))
        .collect();
    let exact = RadialMeasure::hyperbolic(n, kappa);
    let a: Vec<f64> = rho.iter().map(|&x| exact.area(x)).collect();
    let what = || String::from("tabulated hyperbolic n=3");
    let Some(m) = t.absorb(RadialMeasure::tabulated(n, rho, a, "hyperbolic-table"), what) else { return t.finish() };
    for x in [0.5, 1.0, 2.0] {
        if let (Some(v), Some(e)) = (t.absorb(m.volume(x), what), t.absorb(exact.volume(x), what)) {
            t.check(rel(v, e, e), what);
        }
    }
    if let Some(h) = t.absorb(check_hypotheses(&m, kappa, r), what) {
        t.check_bool(h.passed(), || format!("hypotheses {h:?}"));
    }
    let w = || String::from("euclidean volume");
    if let Some(v) = t.absorb(RadialMeasure::euclidean(4).volume(1.5), w) {
        t.check(rel(v, unit_ball_volume(4) * 1.5f64.powi(4), v), w);
    }
    t.finish()
}

pub type SuiteFn = fn(u64) -> SuiteOutcome;

/// All suites, in reporting order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("identity_sine", identity_sine),
    ("identity_s_recursion", identity_s_recursion),
    ("pfaff_consistency", pfaff_consistency),
    ("derivative_vs_difference", derivative_vs_difference),
    ("shooting_vs_closed_form", shooting_vs_closed_form),
    ("t_form_consistency", t_form_consistency),
    ("cross_oracle", cross_oracle),
    ("oscillation_dichotomy", oscillation_dichotomy),
    ("funk_shooting", funk_shooting),
    ("transplant_monotonicity", transplant_monotonicity),
    ("funk_geometry", funk_geometry),
    ("tabulated_density", tabulated_density),
];

pub fn run_all(seed: u64) -> Vec<SuiteOutcome> {
    SUITES.iter().map(|(_, f)| f(seed)).collect()
}
