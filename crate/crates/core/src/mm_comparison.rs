//! Cheng-type comparison on radial metric-measure models.
//!
//! A model is described by its area density `ρ ↦ A(ρ)` about a centre
//! point (`μ(B_ρ) = ∫₀^ρ A`). Under the local density hypothesis (D)
//! (`A(ρ)/(nω_n ρ^{n−1}) → 1`) and the Bishop–Gromov hypothesis (BG)
//! (`A(ρ)/sinh^{n−1}(κρ)` non-increasing), the hyperbolic eigenfunction
//! transplanted along the distance function certifies
//! `λ₁(B_r) ≤ λ₁(B_r^κ)`; equality forces `μ(B_ρ) = V_ρ^κ`.
//!
//! With `R_θ(ρ) = ₂F₁((θ−1)/2 ± iα/κ; θ/2; −sinh²(κρ/2))` the key
//! objects are
//!
//! * `R_{n+2}(ρ) = −κn R_n′(ρ)/(λ sinh κρ)`,
//! * `H(ρ) = λ R²_{n+2}(ρ) sinh²(κρ) − κ²n² R²_n(ρ)`, which changes sign
//!   exactly once, at `ρ₀`,
//! * `Ψ(ρ) = 1 − κ^{n−1} A(ρ)/(nω_n sinh^{n−1}(κρ))`.

use crate::error::{Error, Result};
use crate::hyperball_eigen::{eigen, hyperbolic_volume, BallSpec};
use crate::hypergeom2f1::{eval_2f1_derivative, eval_2f1_geodesic, z_of_x, HypergeomParams};
use crate::quad::{integrate, integrate_from_origin, QuadOptions};
use crate::roots::{refine, scan, RootOptions};
use crate::special::{ln_sinh, unit_ball_volume};
use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

/// Area density sampled at strictly increasing radii, with a monotone
/// cubic (Hermite) interpolant of the cumulative measure `μ(B_ρ)`.
///
/// Node slopes of the interpolant are the sampled densities, limited by the
/// Fritsch–Carlson condition so that `μ` stays increasing; `A` is the
/// interpolant's derivative. Below the first node `A ∝ ρ^{n−1}` is assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct TabulatedDensity {
    rho: Vec<f64>,
    /// The sampled densities as supplied.
    samples: Vec<f64>,
    mu: Vec<f64>,
    slope: Vec<f64>,
    n: usize,
}

impl TabulatedDensity {
    pub fn new(n: usize, rho: Vec<f64>, density: Vec<f64>) -> Result<Self> {
        if rho.len() != density.len() || rho.len() < 2 {
            return Err(Error::InvalidParameter("tabulated density needs ≥ 2 (ρ, A) pairs of equal length".into()));
        }
        if !(rho[0] > 0.0) || rho.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter("tabulated radii must be positive and strictly increasing".into()));
        }
        if let Some((i, a)) = density.iter().enumerate().find(|(_, a)| !(**a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidParameter(alloc::format!("density must be positive; row {i} has {a}")));
        }
        let nf = n as f64;
        let mut mu = Vec::with_capacity(rho.len());
        // Mass inside the first node under the power-law assumption.
        mu.push(density[0] * rho[0] / nf);
        // Trapezoid with the Euler–Maclaurin end correction h²(A′ᵢ − A′ᵢ₊₁)/12,
        // the derivatives taken from finite differences of the samples.
        let m = rho.len();
        let d: Vec<f64> = (0..m).map(|i| three_point_slope(&rho, &density, i)).collect();
        for i in 1..m {
            let h = rho[i] - rho[i - 1];
            let trap = 0.5 * h * (density[i - 1] + density[i]);
            let corr = if m > 2 { h * h * (d[i - 1] - d[i]) / 12.0 } else { 0.0 };
            // Rough data can make the correction dominate; keep μ increasing.
            let inc = if trap + corr > 0.0 { trap + corr } else { trap };
            mu.push(mu[i - 1] + inc);
        }
        let mut slope = density.clone();
        for i in 0..rho.len() - 1 {
            let delta = (mu[i + 1] - mu[i]) / (rho[i + 1] - rho[i]);
            let (a, b) = (slope[i] / delta, slope[i + 1] / delta);
            let s = a * a + b * b;
            if s > 9.0 {
                let t = 3.0 / s.sqrt();
                slope[i] = t * a * delta;
                slope[i + 1] = t * b * delta;
            }
        }
        Ok(TabulatedDensity { rho, samples: density, mu, slope, n })
    }

    pub fn first_radius(&self) -> f64 {
        self.rho[0]
    }

    pub fn last_radius(&self) -> f64 {
        *self.rho.last().expect("at least two nodes")
    }

    pub fn nodes(&self) -> &[f64] {
        &self.rho
    }

    fn locate(&self, x: f64) -> usize {
        match self.rho.binary_search_by(|v| v.partial_cmp(&x).unwrap_or(core::cmp::Ordering::Less)) {
            Ok(i) => i.min(self.rho.len() - 2),
            Err(i) => (i - 1).min(self.rho.len() - 2),
        }
    }

    /// `(μ(B_ρ), A(ρ))`.
    fn eval(&self, x: f64) -> (f64, f64) {
        let nf = self.n as f64;
        if x <= self.rho[0] {
            let q = x / self.rho[0];
            return (self.mu[0] * q.powf(nf), self.slope[0] * q.powf(nf - 1.0));
        }
        let i = self.locate(x);
        let (x0, x1) = (self.rho[i], self.rho[i + 1]);
        let h = x1 - x0;
        let t = (x - x0) / h;
        let (y0, y1, m0, m1) = (self.mu[i], self.mu[i + 1], self.slope[i] * h, self.slope[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        let v = (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * m0 + (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * m1;
        let d = (6.0 * t2 - 6.0 * t) * y0 + (3.0 * t2 - 4.0 * t + 1.0) * m0 + (-6.0 * t2 + 6.0 * t) * y1 + (3.0 * t2 - 2.0 * t) * m1;
        (v, d / h)
    }
}

/// Second-order derivative estimate at node `i` of a non-uniform grid from
/// the three nearest nodes (two-point slope when only two exist).
fn three_point_slope(x: &[f64], y: &[f64], i: usize) -> f64 {
    let m = x.len();
    if m < 3 {
        return (y[1] - y[0]) / (x[1] - x[0]);
    }
    let j = i.clamp(1, m - 2);
    let (h1, h2) = (x[j] - x[j - 1], x[j + 1] - x[j]);
    let (y0, y1, y2) = (y[j - 1], y[j], y[j + 1]);
    let s = h1 + h2;
    if i < j {
        -y0 * (2.0 * h1 + h2) / (h1 * s) + y1 * s / (h1 * h2) - y2 * h1 / (h2 * s)
    } else if i > j {
        y0 * h2 / (h1 * s) - y1 * s / (h1 * h2) + y2 * (h1 + 2.0 * h2) / (h2 * s)
    } else {
        -y0 * h2 / (h1 * s) + y1 * (h2 - h1) / (h1 * h2) + y2 * h1 / (h2 * s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Density {
    /// `nω_n (sinh(κρ)/κ)^{n−1}`.
    Hyperbolic { kappa: f64 },
    /// `nω_n ρ^{n−1}`.
    Euclidean,
    /// Busemann–Hausdorff measure of the Funk ball about the origin:
    /// `nω_n e^{−ρ}(1 − e^{−ρ})^{n−1}`.
    Funk,
    Tabulated(TabulatedDensity),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadialMeasure {
    pub n: usize,
    pub density: Density,
    pub label: String,
}

impl RadialMeasure {
    pub fn hyperbolic(n: usize, kappa: f64) -> Self {
        RadialMeasure { n, density: Density::Hyperbolic { kappa }, label: alloc::format!("hyperbolic(n={n}, kappa={kappa})") }
    }

    pub fn euclidean(n: usize) -> Self {
        RadialMeasure { n, density: Density::Euclidean, label: alloc::format!("euclidean(n={n})") }
    }

    pub fn funk(n: usize) -> Self {
        RadialMeasure { n, density: Density::Funk, label: alloc::format!("funk(n={n})") }
    }

    pub fn tabulated(n: usize, rho: Vec<f64>, density: Vec<f64>, label: &str) -> Result<Self> {
        Ok(RadialMeasure { n, density: Density::Tabulated(TabulatedDensity::new(n, rho, density)?), label: label.into() })
    }

    fn area_const(&self) -> f64 {
        self.n as f64 * unit_ball_volume(self.n)
    }

    /// `ln A(ρ)`, `ρ > 0`.
    pub fn ln_area(&self, rho: f64) -> f64 {
        let n1 = self.n as f64 - 1.0;
        let c = self.area_const().ln();
        match &self.density {
            Density::Hyperbolic { kappa } => c + n1 * (ln_sinh(kappa * rho) - kappa.ln()),
            Density::Euclidean => c + n1 * rho.ln(),
            Density::Funk => c - rho + n1 * (-(-rho).exp_m1()).ln(),
            Density::Tabulated(t) => t.eval(rho).1.ln(),
        }
    }

    /// Area density `A(ρ)` of the metric sphere of radius `ρ`.
    pub fn area(&self, rho: f64) -> f64 {
        if rho <= 0.0 {
            return if self.n == 1 { self.area_const() } else { 0.0 };
        }
        self.ln_area(rho).exp()
    }

    /// `μ(B_ρ)`.
    pub fn volume(&self, rho: f64) -> Result<f64> {
        let n = self.n;
        let w = unit_ball_volume(n);
        match &self.density {
            Density::Hyperbolic { kappa } => hyperbolic_volume(n, *kappa, rho),
            Density::Euclidean => Ok(w * rho.powi(n as i32)),
            Density::Funk => Ok(w * (-(-rho).exp_m1()).powi(n as i32)),
            Density::Tabulated(t) => {
                if rho > t.last_radius() * (1.0 + 1e-12) {
                    return Err(Error::InvalidParameter(alloc::format!("ρ = {rho} beyond the tabulated range")));
                }
                Ok(t.eval(rho).0)
            }
        }
    }

    fn covers(&self, r: f64) -> Result<()> {
        if let Density::Tabulated(t) = &self.density {
            if t.last_radius() < r * (1.0 - 1e-12) {
                return Err(Error::InvalidParameter(alloc::format!(
                    "tabulated density ends at ρ = {} but r = {r}",
                    t.last_radius()
                )));
            }
        }
        Ok(())
    }

    /// Sub-interval boundaries of `(0, r)` where the density is only
    /// piecewise smooth.
    fn breakpoints(&self, r: f64) -> Vec<f64> {
        let mut v = alloc::vec![0.0];
        if let Density::Tabulated(t) = &self.density {
            v.extend(t.nodes().iter().copied().filter(|&x| x < r));
        }
        v.push(r);
        v
    }

    /// `∫₀^r A(ρ)·f(ρ) dρ`, integrating piecewise over the smooth pieces of
    /// `A` with the power-law-aware rule on the first one.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, r: f64, rel_tol: f64) -> Result<f64> {
        self.covers(r)?;
        let opts = QuadOptions::relative(rel_tol);
        let bp = self.breakpoints(r);
        let mut total = 0.0;
        for w in bp.windows(2) {
            let g = |rho: f64| if rho <= 0.0 { 0.0 } else { self.area(rho) * f(rho) };
            let q = if w[0] == 0.0 {
                integrate_from_origin(g, w[1], self.n as f64 - 1.0, &opts)?
            } else {
                integrate(g, w[0], w[1], &opts)?
            };
            total += q.value;
        }
        Ok(total)
    }
}

/// Layer-cake integral `∫_{B_r} f(d(x₀, x)) dμ = ∫₀^r A(ρ) f(ρ) dρ`, to 10⁻¹⁰
/// relative. Bounded-variation `f` need not be monotone: the quadrature
/// does not rely on monotonicity.
pub fn layer_cake<F: FnMut(f64) -> f64>(measure: &RadialMeasure, f: F, r: f64) -> Result<f64> {
    measure.integrate(f, r, 1e-10)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DensityCheck {
    /// The limit of `A(ρ)/(nω_n ρ^{n−1})` as `ρ → 0`, extrapolated.
    Measured(f64),
    /// A tabulated density that does not reach down to `ρ = 10⁻²`.
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypothesisReport {
    pub density: DensityCheck,
    pub density_ok: bool,
    /// Largest relative increase of `A(ρ)/sinh^{n−1}(κρ)` between consecutive
    /// grid points (0 if non-increasing).
    pub bg_violation: f64,
    pub bg_ok: bool,
    pub kappa: f64,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.density_ok && self.bg_ok
    }
}

pub const BG_TOLERANCE: f64 = 1e-9;
pub const DENSITY_TOLERANCE: f64 = 1e-6;

/// Check hypotheses (D) and (BG) for `measure` with curvature parameter
/// `κ` on `(0, r]`.
pub fn check_hypotheses(measure: &RadialMeasure, kappa: f64, r: f64) -> Result<HypothesisReport> {
    if !(kappa > 0.0 && r > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("need κ > 0 and r > 0 (κ={kappa}, r={r})")));
    }
    measure.covers(r)?;
    let n1 = measure.n as f64 - 1.0;
    let c = measure.area_const();
    let hs = [1e-2, 1e-3, 1e-4];
    let density = match &measure.density {
        Density::Tabulated(t) if t.first_radius() > 1e-2 => DensityCheck::Indeterminate,
        _ => {
            let q: Vec<f64> = hs.iter().map(|&h| (measure.ln_area(h) - c.ln() - n1 * h.ln()).exp()).collect();
            // Quadratic extrapolation to ρ = 0.
            let mut lim = 0.0;
            for i in 0..3 {
                let mut w = 1.0;
                for j in 0..3 {
                    if i != j {
                        w *= hs[j] / (hs[j] - hs[i]);
                    }
                }
                lim += w * q[i];
            }
            DensityCheck::Measured(lim)
        }
    };
    let density_ok = matches!(density, DensityCheck::Measured(l) if (l - 1.0).abs() <= DENSITY_TOLERANCE);
    // ln(A/sinh^{n−1}κρ) must not increase. Tabulated data are judged on
    // their own samples: the interpolant's derivative carries O(h³) wiggles
    // that are not part of the data.
    let points: Vec<(f64, f64)> = match &measure.density {
        Density::Tabulated(t) => t.rho.iter().zip(&t.samples).take_while(|(x, _)| **x <= r).map(|(x, a)| (*x, a.ln())).collect(),
        _ => (1..=1000).map(|i| r * i as f64 / 1000.0).map(|x| (x, measure.ln_area(x))).collect(),
    };
    let mut prev = f64::NAN;
    let mut worst = 0.0f64;
    for (i, (rho, ln_a)) in points.into_iter().enumerate() {
        let g = ln_a - n1 * ln_sinh(kappa * rho);
        if i > 0 {
            worst = worst.max((g - prev).exp_m1());
        }
        prev = g;
    }
    Ok(HypothesisReport { density, density_ok, bg_violation: worst, bg_ok: worst <= BG_TOLERANCE, kappa })
}

/// `R_n`, `R_{n+2}`, `H` and `Ψ` for the ball `B_r^κ`.
#[derive(Clone, Copy, Debug)]
pub struct Transplant {
    pub spec: BallSpec,
    pub lambda: f64,
    /// `α/κ`.
    pub beta: f64,
    p_n: HypergeomParams,
    p_n2: HypergeomParams,
}

pub fn transplant_functions(spec: &BallSpec) -> Result<Transplant> {
    let res = eigen(spec, None)?;
    let beta = res.alpha / spec.kappa;
    let nf = spec.n as f64;
    Ok(Transplant {
        spec: *spec,
        lambda: res.lambda,
        beta,
        p_n: HypergeomParams::radial(nf, beta)?,
        p_n2: HypergeomParams::radial(nf + 2.0, beta)?,
    })
}

impl Transplant {
    fn r_theta(p: &HypergeomParams, x: f64) -> Result<f64> {
        if x == 0.0 {
            return Ok(1.0);
        }
        Ok(eval_2f1_geodesic(p, x)?.value())
    }

    pub fn r_n(&self, rho: f64) -> Result<f64> {
        Self::r_theta(&self.p_n, self.spec.kappa * rho)
    }

    pub fn r_n2(&self, rho: f64) -> Result<f64> {
        Self::r_theta(&self.p_n2, self.spec.kappa * rho)
    }

    /// `R_n′(ρ)` from the derivative of `₂F₁` in `z`.
    pub fn r_n_prime(&self, rho: f64) -> Result<f64> {
        let k = self.spec.kappa;
        let z = z_of_x(k * rho);
        let dz = -0.5 * k * (k * rho).sinh();
        Ok(eval_2f1_derivative(&self.p_n, z)? * dz)
    }

    pub fn h(&self, rho: f64) -> Result<f64> {
        let k = self.spec.kappa;
        let n = self.spec.n as f64;
        let s = (k * rho).sinh();
        let (a, b) = (self.r_n2(rho)?, self.r_n(rho)?);
        Ok(self.lambda * a * a * s * s - k * k * n * n * b * b)
    }

    /// `Ψ(ρ) = 1 − κ^{n−1} A(ρ)/(nω_n sinh^{n−1}(κρ))`.
    pub fn psi(&self, measure: &RadialMeasure, rho: f64) -> f64 {
        let k = self.spec.kappa;
        let n1 = self.spec.n as f64 - 1.0;
        let ln_c = (self.spec.n as f64 * unit_ball_volume(self.spec.n)).ln();
        -(n1 * k.ln() + measure.ln_area(rho) - ln_c - n1 * ln_sinh(k * rho)).exp_m1()
    }

    /// `∫₀^r R²_n A` and `∫₀^r R²_{n+2} sinh²(κρ) A`.
    fn weighted_integrals(&self, measure: &RadialMeasure) -> Result<(f64, f64)> {
        let r = self.spec.r;
        let k = self.spec.kappa;
        let mut err = None;
        let i_n = measure.integrate(
            |rho| match self.r_n(rho) {
                Ok(v) => v * v,
                Err(e) => {
                    err.get_or_insert(e);
                    0.0
                }
            },
            r,
            1e-11,
        )?;
        let i_n2 = measure.integrate(
            |rho| match self.r_n2(rho) {
                Ok(v) => {
                    let s = (k * rho).sinh();
                    v * v * s * s
                }
                Err(e) => {
                    err.get_or_insert(e);
                    0.0
                }
            },
            r,
            1e-11,
        )?;
        match err {
            Some(e) => Err(e),
            None => Ok((i_n, i_n2)),
        }
    }
}

/// The unique zero of `H` in `(0, r)`.
pub fn find_rho0(spec: &BallSpec) -> Result<f64> {
    find_rho0_in(&transplant_functions(spec)?)
}

pub fn find_rho0_in(t: &Transplant) -> Result<f64> {
    let r = t.spec.r;
    let grid: Vec<f64> = (0..=100).map(|i| r * i as f64 / 100.0).collect();
    let br = scan(|x| t.h(x), &grid)?.ok_or(Error::NoBracket { what: "H(ρ) on (0, r)", lo: 0.0, hi: r, samples: grid.len() })?;
    let root = refine(|x| t.h(x), br, &RootOptions { rel_tol: 1e-14, ..RootOptions::default() })?;
    Ok(root.x)
}

/// Relative residual of `λ∫R²_{n+2} sinh^{n+1} = κ²n² ∫R²_n sinh^{n−1}`.
pub fn integral_identity_residual(spec: &BallSpec) -> Result<f64> {
    let t = transplant_functions(spec)?;
    let (i_n, i_n2) = t.weighted_integrals(&RadialMeasure::hyperbolic(spec.n, spec.kappa))?;
    let k = spec.kappa;
    let n = spec.n as f64;
    let lhs = t.lambda * i_n2;
    let rhs = k * k * n * n * i_n;
    Ok((lhs - rhs).abs() / rhs.abs())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    /// `λ₁(B_r^κ)`.
    pub lambda_model: f64,
    /// Rayleigh quotient `∫|w′|²A / ∫w²A` of `w = R_n ∘ d(x₀, ·)`, an upper
    /// bound for the first eigenvalue of the metric ball.
    pub rayleigh_upper: f64,
    pub inequality_ok: bool,
    /// `max_ρ |μ(B_ρ) − V_ρ^κ|/V_ρ^κ` over a 100-point grid on `(0, r]`.
    pub rigidity_gap: f64,
    pub rho0: f64,
    /// `∫₀^r Ψ sinh^{n−1}(κρ) H dρ` (non-negative under (D) and (BG)).
    pub sign_integral: f64,
    pub hypotheses: HypothesisReport,
}

pub const INEQUALITY_TOLERANCE: f64 = 1e-8;

/// Transplant the hyperbolic eigenfunction onto `measure` and compare.
pub fn compare(measure: &RadialMeasure, spec: &BallSpec) -> Result<ComparisonReport> {
    if measure.n != spec.n {
        return Err(Error::InvalidParameter(alloc::format!("measure dimension {} ≠ ball dimension {}", measure.n, spec.n)));
    }
    let hyp = check_hypotheses(measure, spec.kappa, spec.r)?;
    if !hyp.density_ok {
        return Err(Error::Precondition(alloc::format!("hypothesis (D) fails for {}: {:?}", measure.label, hyp.density)));
    }
    if !hyp.bg_ok {
        return Err(Error::Precondition(alloc::format!(
            "hypothesis (BG) fails for {} with κ = {}: violation {:e}",
            measure.label, spec.kappa, hyp.bg_violation
        )));
    }
    let t = transplant_functions(spec)?;
    let (k, n) = (spec.kappa, spec.n as f64);
    let (i_n, i_n2) = t.weighted_integrals(measure)?;
    let lam = t.lambda;
    let rayleigh_upper = lam * lam / (k * k * n * n) * i_n2 / i_n;
    let rho0 = find_rho0_in(&t)?;

    let mut rigidity_gap = 0.0f64;
    for i in 1..=100 {
        let rho = spec.r * i as f64 / 100.0;
        let v = hyperbolic_volume(spec.n, k, rho)?;
        rigidity_gap = rigidity_gap.max((measure.volume(rho)? - v).abs() / v);
    }

    let n1 = n - 1.0;
    let h_scale = k * k * n * n * (hyperbolic_volume(spec.n, k, spec.r)? * k.powf(n1) / (n * unit_ball_volume(spec.n)));
    let mut err = None;
    let sign_integral = integrate_from_origin(
        |rho| {
            if rho <= 0.0 {
                return 0.0;
            }
            match t.h(rho) {
                Ok(h) => t.psi(measure, rho) * (n1 * ln_sinh(k * rho)).exp() * h,
                Err(e) => {
                    err.get_or_insert(e);
                    0.0
                }
            }
        },
        spec.r,
        n1,
        // Ψ ≡ 0 for the hyperbolic model, so the tolerance must be absolute,
        // relative to the size of the unweighted integrand |sinh^{n−1}·H|.
        &QuadOptions { abs_tol: 1e-10 * h_scale, ..QuadOptions::relative(1e-9) },
    )?
    .value;
    if let Some(e) = err {
        return Err(e);
    }

    Ok(ComparisonReport {
        lambda_model: lam,
        rayleigh_upper,
        inequality_ok: rayleigh_upper <= lam * (1.0 + INEQUALITY_TOLERANCE),
        rigidity_gap,
        rho0,
        sign_integral,
        hypotheses: hyp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_layer_cake() {
        let m = RadialMeasure::euclidean(3);
        let r = 1.3;
        let v = layer_cake(&m, |rho| r - rho, r).unwrap();
        let w = 3.0 * unit_ball_volume(3) * r.powi(4) * (1.0 / 3.0 - 1.0 / 4.0);
        assert!((v - w).abs() < 1e-12 * w);
    }

    #[test]
    fn funk_volume_by_layer_cake() {
        let m = RadialMeasure::funk(4);
        let v = layer_cake(&m, |_| 1.0, 2.0).unwrap();
        assert!((v - m.volume(2.0).unwrap()).abs() < 1e-11 * v);
    }

    #[test]
    fn hypotheses_registry() {
        for m in [RadialMeasure::hyperbolic(3, 1.0), RadialMeasure::funk(3), RadialMeasure::euclidean(3)] {
            let h = check_hypotheses(&m, 1.0, 3.0).unwrap();
            assert!(h.passed(), "{}: {h:?}", m.label);
        }
        // A density growing faster than sinh² violates (BG) with κ = 1.
        let h = check_hypotheses(&RadialMeasure::hyperbolic(3, 2.0), 1.0, 3.0).unwrap();
        assert!(!h.bg_ok);
    }

    #[test]
    fn tabulated_reproduces_closed_form() {
        let exact = RadialMeasure::hyperbolic(3, 1.0);
        let rho: Vec<f64> = (1..=400).map(|i| i as f64 * 0.005).collect();
        let a: Vec<f64> = rho.iter().map(|&x| exact.area(x)).collect();
        let tab = RadialMeasure::tabulated(3, rho, a, "sampled").unwrap();
        for x in [0.003, 0.5, 1.234, 2.0] {
            let (u, v) = (tab.volume(x).unwrap(), exact.volume(x).unwrap());
            assert!((u - v).abs() < 1e-5 * v, "ρ={x}: {u} vs {v}");
        }
        assert!(tab.volume(2.5).is_err());
    }

    #[test]
    fn hyperbolic_equality_case() {
        let spec = BallSpec::new(3, 1.0, 1.0).unwrap();
        let rep = compare(&RadialMeasure::hyperbolic(3, 1.0), &spec).unwrap();
        assert!((rep.rayleigh_upper - rep.lambda_model).abs() < 1e-8 * rep.lambda_model);
        assert!(rep.rigidity_gap < 1e-8);
    }
}
