//! Shooting integrators for the radial equations.
//!
//! In the Poincaré ball a radial Dirichlet eigenfunction `f(ρ)` of the
//! hyperbolic Laplacian satisfies
//!
//! ```text
//! (ρ^{n−1}/(1−ρ²)^{n−2} · f′)′ + C·ρ^{n−1}/(1−ρ²)^n · f = 0,   f(0) = 1, f′(0) = 0,
//! ```
//!
//! with `C = 4λ/κ²`. The regular solution decays like
//! `((1−ρ)/(1+ρ))^{(n−1)/2}` toward the boundary, so the integrator works with
//! `g = f·((1+ρ)/(1−ρ))^{(n−1)/2}` instead, which stays of unit size and
//! makes the tolerances meaningful all the way up to the cap `1 − 10⁻⁶`.
//!
//! The Funk-ball equation `(f′(1−s)²)′ + f′(1−s)²(n−1)/s + λ f = 0` is
//! handled the same way (without scaling; its regular solution grows).

use crate::error::{Error, Result};
use crate::ode::{self, Control, Options};
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

/// Where integration starts (the origin is a regular singular point).
pub const RHO_START: f64 = 1e-6;
/// Integration never goes beyond this radius.
pub const RHO_CAP: f64 = 1.0 - 1e-6;
/// Zero locations are refined on the dense output to this width.
const ZERO_TOL: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadialKind {
    HyperbolicBall,
    FunkBall,
}

/// Which radial equation to integrate. Only the fields relevant to `kind`
/// are read: `c_osc` for the hyperbolic ball, `lambda_rho` for the Funk ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialOdeSpec {
    pub kind: RadialKind,
    pub n: usize,
    pub c_osc: f64,
    pub lambda_rho: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShootResult {
    pub first_zero: Option<f64>,
    /// `(abscissa, f)` at every accepted integrator step.
    pub samples: Vec<(f64, f64)>,
    /// At least one zero was seen before the cap.
    pub oscillatory_within_domain: bool,
    pub zero_count: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct ShootOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Stop at the first zero instead of integrating the whole range.
    pub stop_at_first_zero: bool,
}

impl Default for ShootOptions {
    fn default() -> Self {
        ShootOptions { rtol: 1e-10, atol: 1e-12, stop_at_first_zero: false }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(alloc::format!("dimension n = {n} must be ≥ 2")));
    }
    Ok(())
}

fn check_rho(rho_max: f64) -> Result<()> {
    if !(rho_max > RHO_START && rho_max < 1.0) {
        return Err(Error::InvalidParameter(alloc::format!("rho_max = {rho_max} must lie in ({RHO_START}, 1)")));
    }
    Ok(())
}

/// `((1+ρ)/(1−ρ))^m`, the envelope removed from the hyperbolic solution.
fn envelope(rho: f64, m: f64) -> f64 {
    (m * ((1.0 + rho) / (1.0 - rho)).ln()).exp()
}

struct Hyperbolic {
    n1: f64,
    c: f64,
}

impl Hyperbolic {
    /// Right-hand side for `g = f·((1+ρ)/(1−ρ))^m`:
    /// `g'' + [(n−1)/ρ + (2(n−2)ρ − 2(n−1))/(1−ρ²)] g' + q̃ g = 0`,
    /// `q̃ = [(C − (n−1)²)ρ − (n−1)²(1−ρ)²] / (ρ(1−ρ²)²)`.
    fn rhs(&self, rho: f64, y: &[f64; 2]) -> [f64; 2] {
        let n1 = self.n1;
        let om = 1.0 - rho;
        let om2 = om * (1.0 + rho);
        let damp = n1 / rho + (2.0 * (n1 - 1.0) * rho - 2.0 * n1) / om2;
        let pot = ((self.c - n1 * n1) * rho - n1 * n1 * om * om) / (rho * om2 * om2);
        [y[1], -damp * y[1] - pot * y[0]]
    }

    fn seed(&self, rho0: f64) -> [f64; 2] {
        let nf = self.n1 + 1.0;
        let f = 1.0 - self.c * rho0 * rho0 / (2.0 * nf);
        let fp = -self.c * rho0 / nf;
        let m = 0.5 * self.n1;
        let e = envelope(rho0, m);
        let e1 = self.n1 / ((1.0 - rho0) * (1.0 + rho0));
        [f * e, (fp + f * e1) * e]
    }
}

/// Integrate the hyperbolic radial equation on `(0, rho_max]`.
pub fn shoot_hyperbolic(n: usize, c_osc: f64, rho_max: f64) -> Result<ShootResult> {
    shoot_hyperbolic_with(n, c_osc, rho_max, &ShootOptions::default())
}

pub fn shoot_hyperbolic_with(n: usize, c_osc: f64, rho_max: f64, o: &ShootOptions) -> Result<ShootResult> {
    check_n(n)?;
    check_rho(rho_max)?;
    if !(c_osc > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("C = {c_osc} must be positive")));
    }
    let sys = Hyperbolic { n1: n as f64 - 1.0, c: c_osc };
    let m = 0.5 * sys.n1;
    let y0 = sys.seed(RHO_START);
    let mut samples = alloc::vec![(RHO_START, y0[0] / envelope(RHO_START, m))];
    let mut first_zero = None;
    let mut zeros = 0usize;
    let opts = Options::with_tolerances(o.rtol, o.atol);
    ode::integrate(|r, y| sys.rhs(r, y), RHO_START, y0, rho_max, &opts, |st| {
        samples.push((st.t1, st.y1[0] / envelope(st.t1, m)));
        if st.y1[0] == 0.0 || st.y0[0].signum() != st.y1[0].signum() {
            zeros += 1;
            if first_zero.is_none() {
                first_zero = st.sign_change(0, ZERO_TOL);
                if o.stop_at_first_zero {
                    return Control::Stop;
                }
            }
        }
        Control::Continue
    })
    .map_err(|e| match e {
        Error::StepFailure { at, .. } => Error::StepFailure { what: "hyperbolic shooting", at },
        other => other,
    })?;
    Ok(ShootResult { first_zero, samples, oscillatory_within_domain: zeros > 0, zero_count: zeros })
}

/// Scaled boundary value `g(ρ_end) = f(ρ_end)·((1+ρ_end)/(1−ρ_end))^{(n−1)/2}`;
/// its sign is the sign of `f(ρ_end)`.
pub fn hyperbolic_boundary_value(n: usize, c_osc: f64, rho_end: f64, o: &ShootOptions) -> Result<f64> {
    check_n(n)?;
    check_rho(rho_end)?;
    let sys = Hyperbolic { n1: n as f64 - 1.0, c: c_osc };
    let out = ode::solve(|r, y| sys.rhs(r, y), RHO_START, sys.seed(RHO_START), rho_end, &Options::with_tolerances(o.rtol, o.atol))?;
    Ok(out.y[0])
}

/// Scaled boundary value of the radial equation in geodesic form,
/// `u'' + (n−1)coth(x)·u' + L·u = 0` with `L = λ/κ²`, returned as
/// `u(x_end)·e^{(n−1)x_end/2}`. Used where the Poincaré radius of the ball
/// would exceed [`RHO_CAP`].
pub fn geodesic_boundary_value(n: usize, l: f64, x_end: f64, o: &ShootOptions) -> Result<f64> {
    check_n(n)?;
    let n1 = n as f64 - 1.0;
    let m = 0.5 * n1;
    let x0 = 1e-5f64.min(0.5 * x_end);
    let u = 1.0 - l * x0 * x0 / (2.0 * n as f64);
    let up = -l * x0 / n as f64;
    let e = (m * x0).exp();
    let y0 = [u * e, (up + m * u) * e];
    // y = u·e^{mx}: y'' + n1(coth x − 1)y' + (L − m² − m·n1(coth x − 1))y = 0, written
    // with coth − 1 = 2/(e^{2x} − 1); near the origin use (n−1)coth x − 2m directly.
    let rhs = move |x: f64, y: &[f64; 2]| {
        let cm1 = 2.0 / (2.0 * x).exp_m1();
        let damp = n1 * cm1;
        let pot = l - m * m - m * damp;
        [y[1], -damp * y[1] - pot * y[0]]
    };
    let out = ode::solve(rhs, x0, y0, x_end, &Options::with_tolerances(o.rtol, o.atol))?;
    Ok(out.y[0])
}

/// Integrate the transformed equation `t(t+1)w'' + n(t+½)w' + (C/4)w = 0`
/// (with `t = ρ²/(1−ρ²)`, `w(t) = f(ρ)`) from the origin to `t_max`,
/// sampling `w` at the requested abscissae (increasing, in `(0, t_max]`).
pub fn shoot_t_form(n: usize, c_osc: f64, t_points: &[f64]) -> Result<Vec<(f64, f64)>> {
    check_n(n)?;
    let Some(&t_max) = t_points.last() else {
        return Ok(Vec::new());
    };
    let nf = n as f64;
    let t0 = RHO_START * RHO_START;
    let slope = -c_osc / (2.0 * nf);
    let y0 = [1.0 + slope * t0, slope];
    let rhs = move |t: f64, y: &[f64; 2]| [y[1], -(nf * (t + 0.5) * y[1] + 0.25 * c_osc * y[0]) / (t * (t + 1.0))];
    let mut out = Vec::with_capacity(t_points.len());
    let mut idx = 0usize;
    ode::integrate(rhs, t0, y0, t_max, &Options::with_tolerances(1e-12, 1e-15), |st| {
        while idx < t_points.len() && t_points[idx] <= st.t1 {
            let t = t_points[idx].max(st.t0);
            out.push((t_points[idx], st.eval(t)[0]));
            idx += 1;
        }
        Control::Continue
    })?;
    Ok(out)
}

/// Analytic oscillation criterion: solutions have infinitely many zeros in
/// `(0, 1)` exactly when `C > (n−1)²`.
pub fn is_oscillatory(n: usize, c_osc: f64) -> bool {
    let n1 = n as f64 - 1.0;
    c_osc > n1 * n1
}

/// Diagnostic companion of [`is_oscillatory`]: number of zeros of the
/// regular solution on `(0, 1 − 10⁻⁶]`.
pub fn count_zeros(n: usize, c_osc: f64) -> Result<usize> {
    Ok(shoot_hyperbolic(n, c_osc, RHO_CAP)?.zero_count)
}

/// Classification by shooting: `true` if at least one zero occurs before
/// the cap. With the cap at `1 − 10⁻⁶` the phase accumulated just above the
/// threshold is only a few radians, so one zero (not two) is what can be
/// observed there.
pub fn is_oscillatory_by_shooting(n: usize, c_osc: f64) -> Result<bool> {
    Ok(count_zeros(n, c_osc)? >= 1)
}

struct Funk {
    n1: f64,
    lambda: f64,
}

impl Funk {
    fn rhs(&self, s: f64, y: &[f64; 2]) -> [f64; 2] {
        let om = 1.0 - s;
        [y[1], -(self.n1 / s - 2.0 / om) * y[1] - self.lambda / (om * om) * y[0]]
    }
}

/// Integrate the Funk radial equation from the origin with `f(0) = −1`,
/// `f′(0) = 0`, `f″(0) = λ/n` (the regular branch).
pub fn shoot_funk(n: usize, lambda_rho: f64, rho_max: f64) -> Result<ShootResult> {
    check_n(n)?;
    check_rho(rho_max)?;
    if !(lambda_rho > 0.0 && lambda_rho < 0.25) {
        return Err(Error::InvalidParameter(alloc::format!("λ_ρ = {lambda_rho} must lie in (0, 1/4)")));
    }
    let nf = n as f64;
    let sys = Funk { n1: nf - 1.0, lambda: lambda_rho };
    let s0 = RHO_START;
    let y0 = [-1.0 + lambda_rho * s0 * s0 / (2.0 * nf), lambda_rho * s0 / nf];
    let mut samples = alloc::vec![(s0, y0[0])];
    let mut first_zero = None;
    let mut zeros = 0usize;
    ode::integrate(|s, y| sys.rhs(s, y), s0, y0, rho_max, &Options::with_tolerances(1e-11, 1e-13), |st| {
        samples.push((st.t1, st.y1[0]));
        if st.y1[0] == 0.0 || st.y0[0].signum() != st.y1[0].signum() {
            zeros += 1;
            if first_zero.is_none() {
                first_zero = st.sign_change(0, ZERO_TOL);
            }
        }
        Control::Continue
    })
    .map_err(|e| match e {
        Error::StepFailure { at, .. } => Error::StepFailure { what: "Funk shooting", at },
        other => other,
    })?;
    Ok(ShootResult { first_zero, samples, oscillatory_within_domain: zeros > 0, zero_count: zeros })
}

/// Dispatch on a [`RadialOdeSpec`].
pub fn shoot(spec: &RadialOdeSpec, rho_max: f64) -> Result<ShootResult> {
    match spec.kind {
        RadialKind::HyperbolicBall => shoot_hyperbolic(spec.n, spec.c_osc, rho_max),
        RadialKind::FunkBall => shoot_funk(spec.n, spec.lambda_rho, rho_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_closed_form_zero() {
        let r = 2.0;
        let g = core::f64::consts::PI / r;
        let res = shoot_hyperbolic(3, 4.0 * (g * g + 1.0), 0.99).unwrap();
        assert!((res.first_zero.unwrap() - 1f64.tanh()).abs() < 1e-9);
    }

    #[test]
    fn threshold_has_no_zero() {
        let res = shoot_hyperbolic(3, 4.0, RHO_CAP).unwrap();
        assert!(res.first_zero.is_none());
        assert!(!is_oscillatory(3, 4.0));
        assert!(is_oscillatory(3, 4.5));
        // Just above the threshold only one zero fits before the cap.
        assert_eq!(count_zeros(3, 4.5).unwrap(), 1);
        assert!(!is_oscillatory(2, 0.5));
    }

    #[test]
    fn samples_change_sign_across_zero() {
        let res = shoot_hyperbolic(5, 30.0, 0.999).unwrap();
        let z = res.first_zero.unwrap();
        let before = res.samples.iter().rfind(|s| s.0 < z).unwrap().1;
        let after = res.samples.iter().find(|s| s.0 > z).unwrap().1;
        assert!(before > 0.0 && after < 0.0);
    }
}
