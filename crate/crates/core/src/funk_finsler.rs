//! The Funk metric on the unit ball and its Riemannian symmetrization, the
//! Klein (Beltrami–Klein) model of hyperbolic space.
//!
//! The Funk structure
//! `F(x, y) = (√(|y|² − (|x|²|y|² − ⟨x,y⟩²)) + ⟨x,y⟩)/(1 − |x|²)`
//! is non-reversible, has Lebesgue measure as its Busemann–Hausdorff volume
//! and `d_F(0, x) = −ln(1 − |x|)`. Its fundamental frequency vanishes, which
//! is certified here three ways: the comparison route (Cheng-type comparison
//! with `κ ↓ 0`), explicit Rayleigh quotients `α²` of `u_α = −(1−|x|)^α`,
//! and the first radial Dirichlet eigenvalue `λ_ρ` of Euclidean balls of
//! radius `ρ ↑ 1`. The Klein model, by contrast, has `λ₁ = (n−1)²/4`.

use crate::error::{Error, Result};
use crate::hyperball_eigen::{eigen, BallSpec};
use crate::hypergeom2f1::{eval_2f1_positive, HypergeomParams};
use crate::mm_comparison::{compare, RadialMeasure};
use crate::quad::{integrate, integrate_endpoint_power, QuadOptions};
use crate::roots::{refine, scan, RootOptions};
use crate::special::unit_ball_volume;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm2(a: &[f64]) -> f64 {
    dot(a, a)
}

/// A point of the open unit ball.
#[derive(Clone, Debug, PartialEq)]
pub struct FunkPoint {
    x: Vec<f64>,
}

impl FunkPoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        let r2 = norm2(&x);
        if x.is_empty() || !(r2 < 1.0) {
            return Err(Error::InvalidParameter(alloc::format!("point must lie in the open unit ball (|x|² = {r2})")));
        }
        Ok(FunkPoint { x })
    }

    pub fn origin(n: usize) -> Self {
        FunkPoint { x: alloc::vec![0.0; n] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.x
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn norm(&self) -> f64 {
        norm2(&self.x).sqrt()
    }
}

fn check_dim(p: &FunkPoint, v: &[f64]) -> Result<()> {
    if p.dim() != v.len() {
        return Err(Error::InvalidParameter(alloc::format!("dimension mismatch: point {} vs vector {}", p.dim(), v.len())));
    }
    Ok(())
}

/// The Funk metric `F(x, y)`.
pub fn funk_metric(x: &FunkPoint, y: &[f64]) -> Result<f64> {
    check_dim(x, y)?;
    let (xx, yy, xy) = (norm2(&x.x), norm2(y), dot(&x.x, y));
    let rad = (yy - (xx * yy - xy * xy)).max(0.0);
    Ok((rad.sqrt() + xy) / (1.0 - xx))
}

/// The co-metric `F*(x, ξ) = |ξ| − ⟨x, ξ⟩`.
pub fn funk_cometric(x: &FunkPoint, xi: &[f64]) -> Result<f64> {
    check_dim(x, xi)?;
    Ok(norm2(xi).sqrt() - dot(&x.x, xi))
}

/// `sup_{v ≠ 0} ξ(v)/F(x, v)` by pattern search over the unit sphere: an
/// independent numerical evaluation of the polar transform of `F`.
pub fn polar_transform_sup(x: &FunkPoint, xi: &[f64]) -> Result<f64> {
    check_dim(x, xi)?;
    let n = xi.len();
    let objective = |v: &[f64]| -> f64 {
        let f = funk_metric(x, v).unwrap_or(f64::INFINITY);
        if f > 0.0 {
            dot(xi, v) / f
        } else {
            f64::NEG_INFINITY
        }
    };
    let normalize = |v: &mut Vec<f64>| {
        let s = norm2(v).sqrt();
        v.iter_mut().for_each(|c| *c /= s);
    };
    let mut starts: Vec<Vec<f64>> = Vec::new();
    let xn = norm2(xi).sqrt();
    if xn > 0.0 {
        starts.push(xi.iter().map(|c| c / xn).collect());
    }
    for i in 0..n {
        for s in [1.0, -1.0] {
            let mut e = alloc::vec![0.0; n];
            e[i] = s;
            starts.push(e);
        }
    }
    let mut best = f64::NEG_INFINITY;
    for mut v in starts {
        let mut val = objective(&v);
        let mut h = 0.25;
        while h > 1e-11 {
            let mut improved = false;
            for j in 0..n {
                for s in [1.0, -1.0] {
                    let mut w = v.clone();
                    w[j] += s * h;
                    normalize(&mut w);
                    let fw = objective(&w);
                    if fw > val {
                        v = w;
                        val = fw;
                        improved = true;
                    }
                }
            }
            if !improved {
                h *= 0.5;
            }
        }
        best = best.max(val);
    }
    Ok(best)
}

/// Funk distance `d_F(x₁, x₂)`; `d_F(0, x) = −ln(1−|x|)`, `d_F(x, 0) = ln(1+|x|)`.
pub fn funk_distance(x1: &FunkPoint, x2: &FunkPoint) -> Result<f64> {
    check_dim(x1, &x2.x)?;
    let d: Vec<f64> = x2.x.iter().zip(&x1.x).map(|(b, a)| b - a).collect();
    let dd = norm2(&d);
    if dd == 0.0 {
        return Ok(0.0);
    }
    let (a, b) = (&x1.x, &x2.x);
    let (aa, bb, ab) = (norm2(a), norm2(b), dot(a, b));
    let root = (dd - (aa * bb - ab * ab)).max(0.0).sqrt();
    let num = root - dot(a, &d);
    let den = root - dot(b, &d);
    Ok((num / den).ln())
}

/// The Klein co-metric `F_K*(x, ξ) = √((1−|x|²)(|ξ|² − ⟨x,ξ⟩²))`.
pub fn klein_cometric(x: &FunkPoint, xi: &[f64]) -> Result<f64> {
    check_dim(x, xi)?;
    let xx = norm2(&x.x);
    let xxi = dot(&x.x, xi);
    Ok(((1.0 - xx) * (norm2(xi) - xxi * xxi)).max(0.0).sqrt())
}

/// Numerator, denominator and quotient of a Rayleigh quotient.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RayleighSample {
    pub parameter: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub quotient: f64,
}

/// `B(2α+1, n) = (n−1)!/∏_{i=0}^{n−1}(2α+1+i)`.
fn beta_2a1_n(alpha: f64, n: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..n {
        v *= (i.max(1)) as f64 / (2.0 * alpha + 1.0 + i as f64);
    }
    v
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(alloc::format!("dimension n = {n} must be ≥ 2")));
    }
    Ok(())
}

/// Closed-form Rayleigh quotient of `u_α = −(1−|x|)^α`:
/// `α² nω_n B(2α+1, n) / (nω_n B(2α+1, n)) = α²`.
pub fn funk_rayleigh(n: usize, alpha: f64) -> Result<RayleighSample> {
    check_n(n)?;
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("α = {alpha} must be positive")));
    }
    let c = n as f64 * unit_ball_volume(n);
    let den = c * beta_2a1_n(alpha, n);
    let num = alpha * alpha * den;
    Ok(RayleighSample { parameter: alpha, numerator: num, denominator: den, quotient: num / den })
}

/// The same quotient by radial quadrature, with `F*(x, Du_α)` evaluated
/// through [`funk_cometric`] on the point `t·e₁`.
pub fn funk_rayleigh_quadrature(n: usize, alpha: f64) -> Result<RayleighSample> {
    check_n(n)?;
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("α = {alpha} must be positive")));
    }
    let c = n as f64 * unit_ball_volume(n);
    let opts = QuadOptions::relative(1e-12);
    let n1 = n as i32 - 1;
    // Du_α(t e₁) = α(1−t)^{α−1} e₁; divide out (1−t)^{2α} and let the
    // endpoint rule carry it.
    let mut err = None;
    let num = integrate_endpoint_power(
        |t| {
            let mut e = alloc::vec![0.0; n];
            e[0] = alpha;
            let mut x = alloc::vec![0.0; n];
            x[0] = t;
            let p = FunkPoint { x };
            // F*(x, α(1−t)^{α−1}e₁) = (1−t)^{α−1}·F*(x, αe₁)
            match funk_cometric(&p, &e) {
                Ok(f) => {
                    let g = f / (1.0 - t);
                    g * g * t.powi(n1)
                }
                Err(er) => {
                    err.get_or_insert(er);
                    0.0
                }
            }
        },
        2.0 * alpha + 1.0,
        &opts,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    let den = integrate_endpoint_power(|t| t.powi(n1), 2.0 * alpha + 1.0, &opts)?;
    let (num, den) = (c * num.value, c * den.value);
    Ok(RayleighSample { parameter: alpha, numerator: num, denominator: den, quotient: num / den })
}

/// Shell integrals of `∫ F*²(x, −Du_α) dx` over `|x| ∈ [1−2⁻ᵏ, 1−2⁻ᵏ⁻¹]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShellReport {
    pub alpha: f64,
    pub shells: Vec<f64>,
    /// Ratio of the last two shells.
    pub last_ratio: f64,
    /// Shells fail to decay geometrically, i.e. the integral is infinite.
    pub diverges: bool,
}

pub const SHELL_COUNT: usize = 40;

/// Divergence test for the reversed gradient `−Du_α`, whose co-metric is
/// `α(1−t)^{α−1}(1+t)`: the integral is infinite exactly when `α ≤ 1/2`.
pub fn reversed_gradient_shells(n: usize, alpha: f64) -> Result<ShellReport> {
    check_n(n)?;
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("α = {alpha} must be positive")));
    }
    let c = n as f64 * unit_ball_volume(n);
    let opts = QuadOptions::relative(1e-12);
    let mut shells = Vec::with_capacity(SHELL_COUNT + 1);
    for k in 0..=SHELL_COUNT {
        let (s_lo, s_hi) = (0.5f64.powi(k as i32 + 1), 0.5f64.powi(k as i32));
        // In s = 1 − t.
        let q = integrate(
            |s| {
                let t = 1.0 - s;
                let mut xi = alloc::vec![0.0; n];
                xi[0] = -alpha * s.powf(alpha - 1.0);
                let mut x = alloc::vec![0.0; n];
                x[0] = t;
                let f = funk_cometric(&FunkPoint { x }, &xi).unwrap_or(f64::NAN);
                f * f * t.powi(n as i32 - 1)
            },
            s_lo,
            s_hi,
            &opts,
        )?;
        shells.push(c * q.value);
    }
    let ratios: Vec<f64> = shells.windows(2).map(|w| w[1] / w[0]).collect();
    let last_ratio = *ratios.last().expect("at least two shells");
    // A convergent tail has ratio 2^{1−2α} < 1 for every k; a ratio ≥ 1
    // at the deep end means the partial sums grow without bound.
    let diverges = last_ratio >= 1.0 - 1e-9;
    Ok(ShellReport { alpha, shells, last_ratio, diverges })
}

/// Rayleigh quotient of `w_γ = e^{−γ d_K(0,·)} = ((1−t)/(1+t))^{γ/2}` in the
/// Klein model: `γ²`, finite iff `γ > (n−1)/2`. Both integrals are computed
/// by radial quadrature of `nω_n∫₀¹(1−t)^{γ−(n+1)/2}(1+t)^{−γ−(n+1)/2}t^{n−1}dt`.
pub fn klein_rayleigh(n: usize, gamma: f64) -> Result<RayleighSample> {
    check_n(n)?;
    let beta = gamma - 0.5 * (n as f64 - 1.0);
    if !(beta > 0.0) {
        return Err(Error::Divergent(alloc::format!(
            "w_γ is not square integrable for γ = {gamma} ≤ (n−1)/2 = {}",
            0.5 * (n as f64 - 1.0)
        )));
    }
    let c = n as f64 * unit_ball_volume(n);
    let opts = QuadOptions::relative(1e-12);
    let nf = n as f64;
    // w²·(1−t²)^{−(n+1)/2}·t^{n−1} = (1−t)^{β−1} · g(t)
    let g = |t: f64| (1.0 + t).powf(-gamma - 0.5 * (nf + 1.0)) * t.powi(n as i32 - 1);
    let den = integrate_endpoint_power(g, beta, &opts)?.value * c;
    // For radial w, F_K*(x, Dw) = (1−t²)|w′| = γw (see `klein_cometric`);
    // the numerator is integrated in that form because the substitution
    // puts most nodes where 1 − t is below rounding.
    let num = integrate_endpoint_power(|t| gamma * gamma * g(t), beta, &opts)?.value * c;
    Ok(RayleighSample { parameter: gamma, numerator: num, denominator: den, quotient: num / den })
}

fn lambda_rho_params(n: usize, lam: f64) -> Result<HypergeomParams> {
    let nf = n as f64;
    let p = (nf * nf - 4.0 * lam).sqrt();
    let q = (1.0 - 4.0 * lam).sqrt();
    let m = 0.5 * (nf - 1.0);
    HypergeomParams::real(m + 0.5 * (p - q), m - 0.5 * (p + q), nf - 1.0)
}

/// `₂F₁(a(λ), b(λ); n−1; ρ)` whose smallest zero in `λ` is `λ_ρ`.
pub fn funk_boundary_function(n: usize, lam: f64, rho: f64) -> Result<f64> {
    Ok(eval_2f1_positive(&lambda_rho_params(n, lam)?, rho)?.value)
}

/// Smallest `λ_ρ ∈ (0, 1/4)` with `₂F₁(a, b; n−1; ρ) = 0`, or `None` when no
/// root lies in that interval (small `ρ`).
pub fn funk_lambda_rho(n: usize, rho: f64) -> Result<Option<f64>> {
    check_n(n)?;
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParameter(alloc::format!("ρ = {rho} must lie in (0, 1)")));
    }
    let hi = 0.25 * (1.0 - 1e-12);
    let count = 400;
    let lo = 1e-14f64;
    let grid: Vec<f64> = (0..=count).map(|i| lo * (hi / lo).powf(i as f64 / count as f64)).collect();
    let f = |lam: f64| funk_boundary_function(n, lam, rho);
    match scan(f, &grid)? {
        None => Ok(None),
        Some(br) => Ok(Some(refine(f, br, &RootOptions { rel_tol: 1e-13, ..RootOptions::default() })?.x)),
    }
}

/// Which certificate produced a Funk frequency bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Comparison,
    Rayleigh,
    Laplace,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Comparison => "comparison",
            Route::Rayleigh => "rayleigh",
            Route::Laplace => "laplace",
        }
    }
}

/// One route's sequence of upper bounds and its limit estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct RouteResult {
    pub route: Route,
    /// `(parameter, upper bound)` pairs: `κ`, `α` or `ρ`.
    pub samples: Vec<(f64, f64)>,
    /// The smallest certified bound among the samples.
    pub bound: f64,
    /// Extrapolated limit of the sequence (for the comparison route, linear in `κ²`).
    pub limit: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FunkFrequencyReport {
    pub n: usize,
    /// Minimum over routes of the certified upper bound on `λ₁` of the Funk ball.
    pub bound: f64,
    pub tightest: Route,
    pub routes: Vec<RouteResult>,
    /// Infimum of the Klein Rayleigh quotients, approaching `(n−1)²/4`.
    pub klein: f64,
}

pub const COMPARISON_RADIUS: f64 = 1000.0;
pub const COMPARISON_KAPPAS: [f64; 4] = [1.0, 0.5, 0.1, 0.01];
pub const RAYLEIGH_ALPHAS: [f64; 4] = [1.0, 0.1, 0.01, 1e-3];
pub const LAPLACE_RHOS: [f64; 4] = [0.99, 0.999, 0.9999, 0.999999];
/// Offset of the Klein test exponent above `(n−1)/2`.
pub const KLEIN_OFFSET: f64 = 1e-4;

/// Comparison route: `λ₁(B_R) ≤ λ₁(B_R^κ)` for every `κ > 0` since the Funk
/// measure satisfies (BG) for every `κ`. The full transplant comparison is
/// run where `κR ≤ 20`; elsewhere the hyperbolic eigenvalue is the bound.
pub fn comparison_route(n: usize) -> Result<RouteResult> {
    let r = COMPARISON_RADIUS;
    let mut samples = Vec::new();
    for k in COMPARISON_KAPPAS {
        let spec = BallSpec::new(n, k, r)?;
        let lam = if k * r <= 20.0 {
            let rep = compare(&RadialMeasure::funk(n), &spec)?;
            if !rep.inequality_ok {
                return Err(Error::Precondition(alloc::format!(
                    "comparison inequality failed for the Funk ball: {} > {}",
                    rep.rayleigh_upper, rep.lambda_model
                )));
            }
            rep.lambda_model
        } else {
            eigen(&spec, None)?.lambda
        };
        samples.push((k, lam));
    }
    let bound = samples.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    let (k1, l1) = samples[samples.len() - 2];
    let (k2, l2) = samples[samples.len() - 1];
    let slope = (l1 - l2) / (k1 * k1 - k2 * k2);
    let limit = l2 - slope * k2 * k2;
    Ok(RouteResult { route: Route::Comparison, samples, bound, limit })
}

pub fn rayleigh_route(n: usize) -> Result<RouteResult> {
    let samples: Vec<(f64, f64)> =
        RAYLEIGH_ALPHAS.iter().map(|&a| funk_rayleigh(n, a).map(|s| (a, s.quotient))).collect::<Result<_>>()?;
    let bound = samples.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    Ok(RouteResult { route: Route::Rayleigh, samples, bound, limit: 0.0 })
}

pub fn laplace_route(n: usize) -> Result<RouteResult> {
    let mut samples = Vec::new();
    for rho in LAPLACE_RHOS {
        if let Some(l) = funk_lambda_rho(n, rho)? {
            samples.push((rho, l));
        }
    }
    if samples.is_empty() {
        return Err(Error::NoBracket { what: "λ_ρ on the Laplace route", lo: LAPLACE_RHOS[0], hi: 0.999999, samples: 4 });
    }
    let bound = samples.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    Ok(RouteResult { route: Route::Laplace, samples, bound, limit: bound })
}

/// Upper bound on the fundamental frequency of the Funk ball from all
/// three routes, plus the Klein contrast value.
pub fn funk_fundamental_frequency(n: usize) -> Result<FunkFrequencyReport> {
    check_n(n)?;
    let routes = alloc::vec![comparison_route(n)?, rayleigh_route(n)?, laplace_route(n)?];
    let best = routes
        .iter()
        .min_by(|a, b| a.bound.partial_cmp(&b.bound).unwrap_or(core::cmp::Ordering::Equal))
        .expect("three routes");
    let (bound, tightest) = (best.bound, best.route);
    let klein = klein_rayleigh(n, 0.5 * (n as f64 - 1.0) + KLEIN_OFFSET)?.quotient;
    Ok(FunkFrequencyReport { n, bound, tightest, routes, klein })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_basics() {
        let o = FunkPoint::origin(3);
        assert!((funk_metric(&o, &[3.0, 4.0, 0.0]).unwrap() - 5.0).abs() < 1e-15);
        let x = FunkPoint::new(alloc::vec![0.3, -0.2, 0.1]).unwrap();
        let t = x.norm();
        assert!((funk_metric(&x, x.coords()).unwrap() - t / (1.0 - t)).abs() < 1e-14);
        let y = [0.1, 0.5, -0.7];
        let neg: Vec<f64> = y.iter().map(|c| -c).collect();
        assert!((funk_metric(&x, &y).unwrap() - funk_metric(&x, &neg).unwrap()).abs() > 1e-3);
    }

    #[test]
    fn distances() {
        let x = FunkPoint::new(alloc::vec![1.0 - (-1.0f64).exp(), 0.0]).unwrap();
        let o = FunkPoint::origin(2);
        assert!((funk_distance(&o, &x).unwrap() - 1.0).abs() < 1e-14);
        let h = FunkPoint::new(alloc::vec![0.3, 0.4]).unwrap();
        assert!((funk_distance(&h, &o).unwrap() - 1.5f64.ln()).abs() < 1e-14);
        assert_eq!(funk_distance(&h, &h).unwrap(), 0.0);
    }

    #[test]
    fn polar_transform_matches() {
        let x = FunkPoint::new(alloc::vec![0.5, -0.3]).unwrap();
        let xi = [0.7, 1.1];
        let a = funk_cometric(&x, &xi).unwrap();
        let b = polar_transform_sup(&x, &xi).unwrap();
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
    }

    #[test]
    fn rayleigh_closed_form_and_quadrature() {
        let s = funk_rayleigh(2, 0.5).unwrap();
        assert!((s.quotient - 0.25).abs() < 1e-15);
        // B(2, 2) = 1/6
        assert!((s.denominator - 2.0 * core::f64::consts::PI / 6.0).abs() < 1e-14);
        let q = funk_rayleigh_quadrature(3, 1e-3).unwrap();
        let c = funk_rayleigh(3, 1e-3).unwrap();
        assert!((q.numerator - c.numerator).abs() < 1e-8 * c.numerator);
        assert!((q.denominator - c.denominator).abs() < 1e-8 * c.denominator);
    }

    #[test]
    fn reversed_gradient_divergence() {
        assert!(reversed_gradient_shells(2, 0.5).unwrap().diverges);
        assert!(reversed_gradient_shells(3, 0.25).unwrap().diverges);
        assert!(!reversed_gradient_shells(2, 0.75).unwrap().diverges);
    }

    #[test]
    fn klein_quotients() {
        let s = klein_rayleigh(2, 0.51).unwrap();
        assert!((s.quotient - 0.2601).abs() < 1e-8);
        assert!(matches!(klein_rayleigh(3, 0.9), Err(Error::Divergent(_))));
    }

    #[test]
    fn klein_cometric_radial_and_tangential() {
        // Radial covectors: F_K* = (1−t²)|ξ|; tangential: √(1−t²)|ξ|.
        let x = FunkPoint::new(alloc::vec![0.6, 0.0]).unwrap();
        assert!((klein_cometric(&x, &[2.0, 0.0]).unwrap() - 0.64 * 2.0).abs() < 1e-15);
        assert!((klein_cometric(&x, &[0.0, 2.0]).unwrap() - 0.8 * 2.0).abs() < 1e-15);
    }
}
