//! Gauss hypergeometric function `₂F₁(a, b; c; z)` for real `z ≤ 0`.
//!
//! Two parameter families are supported: independent real `a, b`, and
//! complex-conjugate pairs `a = a_re + i·a_im`, `b = a_re − i·a_im`, for
//! which the function is real on the real axis. Evaluation picks one of
//! three strategies:
//!
//! * the defining series for `−1 < z ≤ 0`;
//! * the Pfaff-transformed series `(1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))` for
//!   `−19 ≤ z < −1`;
//! * integration of the hypergeometric equation in the geodesic variable
//!   `x` (with `z = −sinh²(x/2)`) from a small anchor where the series is
//!   well conditioned, for `z < −19` or whenever a series would cancel
//!   catastrophically (large `a_im`).
//!
//! The geodesic-variable integrator works with `y = w·e^{s x}` where `s`
//! is the decay exponent of `w`, so values far below the double range are
//! still represented (see [`eval_2f1_geodesic`]).

use crate::error::{Error, Result};
use crate::ode::{self, Control, Options};
use num_complex::Complex64;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

const EPS: f64 = f64::EPSILON;
const MAX_TERMS: usize = 1_000_000;
/// A series whose largest term exceeds this (relative to the leading 1) is
/// considered too cancellation-prone for automatic use.
const PEAK_LIMIT: f64 = 1e3;
const PFAFF_Z_MIN: f64 = -19.0;
const POSITIVE_SERIES_MAX: f64 = 0.95;

/// Parameters `(a, b; c)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypergeomParams {
    pub a_re: f64,
    /// Imaginary part of `a`; when positive, `b` is the conjugate of `a`.
    pub a_im: f64,
    /// The real second parameter when `a_im == 0`; equal to `a_re` for pairs.
    pub b_re: f64,
    pub c: f64,
}

fn check_c(c: f64) -> Result<()> {
    if !c.is_finite() || c == 0.0 || (c < 0.0 && c == c.round()) {
        return Err(Error::InvalidParameter(alloc::format!("c = {c} must not be zero or a negative integer")));
    }
    Ok(())
}

impl HypergeomParams {
    /// `a = a_re + i·a_im`, `b = a_re − i·a_im`.
    pub fn conjugate(a_re: f64, a_im: f64, c: f64) -> Result<Self> {
        check_c(c)?;
        if !(a_im >= 0.0) || !a_re.is_finite() || !a_im.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!("invalid conjugate pair {a_re} ± {a_im}i")));
        }
        Ok(HypergeomParams { a_re, a_im, b_re: a_re, c })
    }

    /// Independent real parameters.
    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        check_c(c)?;
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!("non-finite parameters a = {a}, b = {b}")));
        }
        Ok(HypergeomParams { a_re: a, a_im: 0.0, b_re: b, c })
    }

    /// The pair `((θ−1)/2 ± iβ; θ/2)` that describes radial eigenfunctions in
    /// dimension `θ` with spectral parameter `β`.
    pub fn radial(theta: f64, beta: f64) -> Result<Self> {
        Self::conjugate(0.5 * (theta - 1.0), beta, 0.5 * theta)
    }

    pub fn is_conjugate_pair(&self) -> bool {
        self.a_im > 0.0
    }

    pub fn a(&self) -> Complex64 {
        Complex64::new(self.a_re, self.a_im)
    }

    pub fn b(&self) -> Complex64 {
        Complex64::new(self.b_re, -self.a_im)
    }

    /// `a·b` (real for both families).
    pub fn ab(&self) -> f64 {
        self.pair(0.0)
    }

    /// `a + b`.
    pub fn sum_ab(&self) -> f64 {
        self.a_re + self.b_re
    }

    /// `(a + k)(b + k)`.
    fn pair(&self, k: f64) -> f64 {
        if self.a_im > 0.0 {
            let r = self.a_re + k;
            r * r + self.a_im * self.a_im
        } else {
            (self.a_re + k) * (self.b_re + k)
        }
    }

    /// `(a+1, b+1; c+1)`, the parameters of the derivative.
    pub fn shifted(&self) -> Self {
        HypergeomParams { a_re: self.a_re + 1.0, a_im: self.a_im, b_re: self.b_re + 1.0, c: self.c + 1.0 }
    }

    /// Decay exponent used to scale solutions in the geodesic variable:
    /// `min(Re a, Re b)`.
    fn decay_exponent(&self) -> f64 {
        self.a_re.min(self.b_re)
    }

    /// `s² − s(a+b) + ab` for `s = decay_exponent()`, computed without cancellation.
    fn scaled_potential(&self) -> f64 {
        if self.a_im > 0.0 {
            self.a_im * self.a_im
        } else {
            let s = self.decay_exponent();
            (s - self.a_re) * (s - self.b_re)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Series,
    PfaffSeries,
    OdeContinuation,
}

impl Strategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::Series => "series",
            Strategy::PfaffSeries => "pfaff_series",
            Strategy::OdeContinuation => "ode_continuation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalReport {
    pub value: f64,
    pub est_error: f64,
    pub strategy: Strategy,
    pub terms_or_steps: usize,
}

/// A value represented as `mantissa · exp(−log_factor)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledValue {
    pub mantissa: f64,
    pub log_factor: f64,
    pub est_error: f64,
    pub strategy: Strategy,
    pub terms_or_steps: usize,
}

impl ScaledValue {
    pub fn value(&self) -> f64 {
        if self.log_factor == 0.0 {
            self.mantissa
        } else {
            self.mantissa * (-self.log_factor).exp()
        }
    }
}

/// Neumaier-compensated accumulator.
#[derive(Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }
    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Clone, Copy, Debug)]
struct SeriesSum {
    value: f64,
    peak: f64,
    terms: usize,
    est_error: f64,
}

/// The defining series at real `z` with `|z| < 1` (any real parameters).
fn direct_series(p: &HypergeomParams, z: f64) -> Result<SeriesSum> {
    let mut acc = Compensated::default();
    acc.add(1.0);
    let mut term = 1.0f64;
    let (mut peak, mut abs_sum) = (1.0f64, 1.0f64);
    let mut small_run = 0;
    let mut k = 0usize;
    while k < MAX_TERMS {
        let kf = k as f64;
        term *= p.pair(kf) / ((p.c + kf) * (kf + 1.0)) * z;
        k += 1;
        acc.add(term);
        let at = term.abs();
        abs_sum += at;
        peak = peak.max(at);
        let scale = acc.value().abs().max(peak);
        if at <= 1e-16 * scale {
            small_run += 1;
            if small_run >= 2 {
                // Tail of a series whose term ratio tends to z.
                let q = z.abs();
                let tail = if q < 1.0 { at * q / (1.0 - q) } else { at };
                return Ok(SeriesSum {
                    value: acc.value(),
                    peak,
                    terms: k + 1,
                    est_error: 4.0 * EPS * abs_sum + tail,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence { what: "hypergeometric series", partial: acc.value(), iterations: k })
}

#[derive(Clone, Copy, Debug)]
struct ComplexSum {
    value: Complex64,
    peak: f64,
    abs_sum: f64,
    terms: usize,
}

/// Series with complex parameters `(a, b; c)` at real `w ∈ [0, 1)`.
fn complex_series(a: Complex64, b: Complex64, c: f64, w: f64) -> Result<ComplexSum> {
    let mut re = Compensated::default();
    let mut im = Compensated::default();
    re.add(1.0);
    let mut term = Complex64::new(1.0, 0.0);
    let (mut peak, mut abs_sum) = (1.0f64, 1.0f64);
    let mut small_run = 0;
    let mut k = 0usize;
    while k < MAX_TERMS {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) * (w / ((c + kf) * (kf + 1.0)));
        k += 1;
        re.add(term.re);
        im.add(term.im);
        let at = term.norm();
        abs_sum += at;
        peak = peak.max(at);
        let scale = Complex64::new(re.value(), im.value()).norm().max(peak);
        if at <= 1e-16 * scale {
            small_run += 1;
            if small_run >= 2 {
                return Ok(ComplexSum { value: Complex64::new(re.value(), im.value()), peak, abs_sum, terms: k + 1 });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence { what: "Pfaff-transformed series", partial: re.value(), iterations: k })
}

fn eval_series(p: &HypergeomParams, z: f64) -> Result<(EvalReport, f64)> {
    if !(z > -1.0 && z < 1.0) {
        return Err(Error::InvalidParameter(alloc::format!("direct series needs |z| < 1, got {z}")));
    }
    let s = direct_series(p, z)?;
    Ok((EvalReport { value: s.value, est_error: s.est_error, strategy: Strategy::Series, terms_or_steps: s.terms }, s.peak))
}

fn eval_pfaff(p: &HypergeomParams, z: f64) -> Result<(EvalReport, f64)> {
    if !(z < 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("Pfaff transformation used for z < 0, got {z}")));
    }
    let w = z / (z - 1.0);
    let a = p.a();
    let b = p.b();
    let s = complex_series(a, Complex64::new(p.c, 0.0) - b, p.c, w)?;
    // (1 − z)^{−a} with 1 − z > 0 real.
    let l = (1.0 - z).ln();
    let pref = (-a * l).exp();
    let v = pref * s.value;
    let scale = pref.norm() * s.abs_sum;
    let residue = if p.is_conjugate_pair() { v.im.abs() } else { 0.0 };
    if residue > 1e-12 * scale.max(v.re.abs()) {
        return Err(Error::ImaginaryResidue { residue, scale });
    }
    let tail_q = w;
    let est = 4.0 * EPS * scale * (s.terms as f64).sqrt() + residue + 1e-16 * scale * tail_q / (1.0 - tail_q);
    Ok((
        EvalReport { value: v.re, est_error: est, strategy: Strategy::PfaffSeries, terms_or_steps: s.terms },
        s.peak,
    ))
}

/// `z = −sinh²(x/2)` and the inverse `x = 2·asinh(√(−z))`.
pub fn z_of_x(x: f64) -> f64 {
    let s = (0.5 * x).sinh();
    -s * s
}

pub fn x_of_z(z: f64) -> f64 {
    2.0 * (-z).sqrt().asinh()
}

/// Integrate the hypergeometric equation in `x` from a well-conditioned
/// anchor up to `x_target`, returning the scaled solution.
fn ode_geodesic(p: &HypergeomParams, x_target: f64) -> Result<ScaledValue> {
    let s = p.decay_exponent();
    let ab = p.ab();
    // Anchor: |ab·z| ≲ 1/2 keeps the series terms O(1); stay well inside the target.
    let z_t = z_of_x(x_target);
    let mut z_a = -(0.25f64.min(0.5 / (1.0 + ab.abs() + p.sum_ab().abs())));
    if z_a < 0.5 * z_t {
        z_a = 0.5 * z_t;
    }
    let x_a = x_of_z(z_a);
    let f0 = direct_series(p, z_a)?;
    let f1 = direct_series(&p.shifted(), z_a)?;
    let w = f0.value;
    let dwdz = ab / p.c * f1.value;
    let dwdx = dwdz * (-0.5 * x_a.sinh());
    let e = (s * x_a).exp();
    let y0 = [w * e, (dwdx + s * w) * e];

    let c1 = 2.0 * p.c - p.sum_ab() - 1.0;
    let sum = p.sum_ab();
    let lead = sum - 2.0 * s; // limit of P − 2s as x → ∞
    let q0 = p.scaled_potential();
    let rhs = move |x: f64, y: &[f64; 2]| {
        let inv_sinh = 1.0 / x.sinh();
        let coth_m1 = 2.0 / (2.0 * x).exp_m1();
        // P(x) − 2s and s² − sP + ab, split so that the x → ∞ limits are exact.
        let extra = c1 * inv_sinh + sum * coth_m1;
        let damp = lead + extra;
        let pot = q0 - s * extra;
        [y[1], -damp * y[1] - pot * y[0]]
    };
    let opts = Options::with_tolerances(1e-12, 1e-15 * y0[0].abs().max(y0[1].abs()).max(1e-300));
    let mut ymax = y0[0].abs();
    let out = if x_target > x_a {
        ode::integrate(rhs, x_a, y0, x_target, &opts, |st| {
            ymax = ymax.max(st.y1[0].abs());
            Control::Continue
        })?
    } else {
        ode::Outcome { t: x_a, y: y0, accepted: 0, rejected: 0, stopped: false }
    };
    let steps = out.accepted + out.rejected;
    let est = 1e-11 * ymax + f0.est_error * (s * x_a).exp();
    Ok(ScaledValue {
        mantissa: out.y[0],
        log_factor: s * x_target,
        est_error: est,
        strategy: Strategy::OdeContinuation,
        terms_or_steps: steps + f0.terms + f1.terms,
    })
}

fn validate_z(z: f64) -> Result<()> {
    if !(z <= 0.0) || !z.is_finite() {
        return Err(Error::InvalidParameter(alloc::format!("argument must satisfy z ≤ 0, got {z}")));
    }
    Ok(())
}

fn scaled_to_report(v: ScaledValue) -> EvalReport {
    let f = (-v.log_factor).exp();
    EvalReport { value: v.mantissa * f, est_error: v.est_error * f, strategy: v.strategy, terms_or_steps: v.terms_or_steps }
}

/// `₂F₁(a, b; c; z)` for `z ≤ 0` with automatic strategy selection.
pub fn eval_2f1(p: &HypergeomParams, z: f64) -> Result<EvalReport> {
    validate_z(z)?;
    check_c(p.c)?;
    if z == 0.0 {
        return Ok(EvalReport { value: 1.0, est_error: 0.0, strategy: Strategy::Series, terms_or_steps: 1 });
    }
    if z > -1.0 {
        if let Ok((r, peak)) = eval_series(p, z) {
            if peak <= PEAK_LIMIT {
                return Ok(r);
            }
        }
    } else if z >= PFAFF_Z_MIN {
        if let Ok((r, peak)) = eval_pfaff(p, z) {
            if peak <= PEAK_LIMIT {
                return Ok(r);
            }
        }
    }
    Ok(scaled_to_report(ode_geodesic(p, x_of_z(z))?))
}

/// `₂F₁(a, b; c; z)` with a forced strategy.
pub fn eval_2f1_with(p: &HypergeomParams, z: f64, strategy: Strategy) -> Result<EvalReport> {
    validate_z(z)?;
    check_c(p.c)?;
    match strategy {
        Strategy::Series => eval_series(p, z).map(|r| r.0),
        Strategy::PfaffSeries => eval_pfaff(p, z).map(|r| r.0),
        Strategy::OdeContinuation => {
            if z == 0.0 {
                return Ok(EvalReport { value: 1.0, est_error: 0.0, strategy, terms_or_steps: 0 });
            }
            Ok(scaled_to_report(ode_geodesic(p, x_of_z(z))?))
        }
    }
}

/// `₂F₁(a, b; c; −sinh²(x/2))` as a scaled value, usable for arbitrarily
/// large `x ≥ 0` where the function itself underflows.
pub fn eval_2f1_geodesic(p: &HypergeomParams, x: f64) -> Result<ScaledValue> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::InvalidParameter(alloc::format!("geodesic argument must be finite and ≥ 0, got {x}")));
    }
    check_c(p.c)?;
    if x < 10.0 {
        let z = z_of_x(x);
        let r = eval_2f1(p, z)?;
        if r.strategy != Strategy::OdeContinuation {
            return Ok(ScaledValue {
                mantissa: r.value,
                log_factor: 0.0,
                est_error: r.est_error,
                strategy: r.strategy,
                terms_or_steps: r.terms_or_steps,
            });
        }
    }
    ode_geodesic(p, x)
}

/// `d/dz ₂F₁(a, b; c; z) = (ab/c)·₂F₁(a+1, b+1; c+1; z)`.
pub fn eval_2f1_derivative(p: &HypergeomParams, z: f64) -> Result<f64> {
    let r = eval_2f1(&p.shifted(), z)?;
    Ok(p.ab() / p.c * r.value)
}

/// `₂F₁(a, b; c; z)` for real parameters and `0 ≤ z < 1`.
///
/// Up to `z = 0.95` the series is summed with compensation; beyond, the
/// equation is integrated in `t = −ln(1−z)` from the anchor `z = 1/2`,
/// where it reads `z·w'' + (c − (a+b)z)·w' − ab(1−z)·w = 0` with bounded
/// coefficients all the way to `z → 1`.
pub fn eval_2f1_positive(p: &HypergeomParams, z: f64) -> Result<EvalReport> {
    check_c(p.c)?;
    if p.is_conjugate_pair() {
        return Err(Error::InvalidParameter("positive-argument evaluation needs real parameters".into()));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::InvalidParameter(alloc::format!("positive argument must lie in [0, 1), got {z}")));
    }
    if z <= POSITIVE_SERIES_MAX {
        return eval_series(p, z).map(|r| r.0);
    }
    let za = 0.5;
    let f0 = direct_series(p, za)?;
    let f1 = direct_series(&p.shifted(), za)?;
    let ab = p.ab();
    let (c, sum) = (p.c, p.sum_ab());
    let t_a = core::f64::consts::LN_2;
    let y0 = [f0.value, (1.0 - za) * ab / c * f1.value];
    let t_end = -(-z).ln_1p();
    let rhs = move |t: f64, y: &[f64; 2]| {
        let zt = -(-t).exp_m1();
        let one_m = (-t).exp();
        [y[1], (ab * one_m * y[0] - (c - sum * zt) * y[1]) / zt]
    };
    let opts = Options::with_tolerances(1e-12, 1e-15);
    let out = ode::solve(rhs, t_a, y0, t_end, &opts)?;
    Ok(EvalReport {
        value: out.y[0],
        est_error: 1e-11 * out.y[0].abs().max(1.0),
        strategy: Strategy::OdeContinuation,
        terms_or_steps: out.accepted + out.rejected + f0.terms + f1.terms,
    })
}

/// `R_n(ρ)/(R_{n+2}(ρ)·sinh κρ)` from the continued fraction
/// `T(t) = x₀t − y₁/(x₁t − y₂/(x₂t − …))`, `t = coth κρ`,
/// `x_l = (n+2l)/2`, `y_l = (l² + l(n−1) + λ/κ²)/4`.
///
/// Here `R_θ(ρ) = ₂F₁((θ−1)/2 ± iα; θ/2; −sinh²(κρ/2))` with
/// `λ = (n−1)²κ²/4 + α²κ²`. The quotient equals `(2/n)·T(t)`.
pub fn ratio_cf(n: usize, kappa: f64, lambda: f64, rho: f64) -> Result<f64> {
    if n < 2 || !(kappa > 0.0) || !(rho > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("ratio_cf needs n ≥ 2, κ > 0, ρ > 0 (n={n}, κ={kappa}, ρ={rho})")));
    }
    let nf = n as f64;
    if !(lambda > (nf - 1.0).powi(2) * kappa * kappa / 4.0) {
        return Err(Error::InvalidParameter(alloc::format!("λ = {lambda} must exceed (n−1)²κ²/4")));
    }
    let t = 1.0 / (kappa * rho).tanh();
    let lk = lambda / (kappa * kappa);
    let tiny = 1e-300;
    let xl = |l: f64| 0.5 * (nf + 2.0 * l) * t;
    let yl = |l: f64| 0.25 * (l * l + l * (nf - 1.0) + lk);
    // Modified Lentz for b₀ + a₁/(b₁ + a₂/(b₂ + …)), a_l = −y_l, b_l = x_l·t.
    let mut f = xl(0.0);
    if f == 0.0 {
        f = tiny;
    }
    let mut cc = f;
    let mut d = 0.0;
    for j in 1..100_000 {
        let jf = j as f64;
        let (aj, bj) = (-yl(jf), xl(jf));
        d = bj + aj * d;
        if d == 0.0 {
            return Err(Error::Breakdown("continued fraction"));
        }
        cc = bj + aj / cc;
        if cc == 0.0 {
            return Err(Error::Breakdown("continued fraction"));
        }
        d = 1.0 / d;
        let delta = cc * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            return Ok(2.0 / nf * f);
        }
    }
    Err(Error::NonConvergence { what: "continued fraction", partial: 2.0 / nf * f, iterations: 100_000 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conj(a: f64, g: f64, c: f64) -> HypergeomParams {
        HypergeomParams::conjugate(a, g, c).unwrap()
    }

    #[test]
    fn zero_argument_is_one() {
        let r = eval_2f1(&conj(1.0, 3.0, 1.5), 0.0).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn log_closed_form() {
        let p = HypergeomParams::real(1.0, 1.0, 2.0).unwrap();
        for &z in &[-0.3, -0.9, -3.0, -18.0, -50.0, -1e4] {
            let v = eval_2f1(&p, z).unwrap().value;
            let exact = -(1.0 - z).ln() / z;
            assert!((v - exact).abs() < 1e-11 * exact.abs(), "z={z}: {v} vs {exact}");
        }
    }

    #[test]
    fn conjugate_closed_form_all_strategies() {
        // F(1+iγ, 1−iγ; 3/2; −sinh²(x/2)) = sin(γx)/(γ sinh x)
        let g = 1.3;
        let p = conj(1.0, g, 1.5);
        for &x in &[0.5, 2.0, 4.0, 9.0, 30.0] {
            let z = z_of_x(x);
            let exact = (g * x).sin() / (g * x.sinh());
            let v = eval_2f1(&p, z).unwrap();
            assert!((v.value - exact).abs() < 1e-10 * (1.0 / x.sinh()), "x={x}: {} vs {exact}", v.value);
            let o = eval_2f1_with(&p, z, Strategy::OdeContinuation).unwrap();
            assert!((o.value - exact).abs() < 1e-9 * (1.0 / x.sinh()), "ode x={x}");
        }
    }

    #[test]
    fn strategy_selection() {
        let p = conj(1.0, 1.0, 1.5);
        assert_eq!(eval_2f1(&p, -0.5).unwrap().strategy, Strategy::Series);
        assert_eq!(eval_2f1(&p, -5.0).unwrap().strategy, Strategy::PfaffSeries);
        assert_eq!(eval_2f1(&p, -100.0).unwrap().strategy, Strategy::OdeContinuation);
        // Large imaginary part: the series would cancel, so the ODE is used.
        let q = conj(1.0, 60.0, 1.5);
        assert_eq!(eval_2f1(&q, -0.9).unwrap().strategy, Strategy::OdeContinuation);
    }

    #[test]
    fn invalid_c_rejected() {
        assert!(HypergeomParams::real(1.0, 1.0, -2.0).is_err());
        assert!(HypergeomParams::conjugate(1.0, 1.0, 0.0).is_err());
        assert!(eval_2f1(&conj(1.0, 1.0, 1.5), 0.5).is_err());
    }

    #[test]
    fn scaled_geodesic_far_out() {
        // sin(γx)/(γ sinh x) at x = 800 underflows; the scaled form does not.
        let g = 0.7;
        let p = conj(1.0, g, 1.5);
        let x = 800.0;
        let v = eval_2f1_geodesic(&p, x).unwrap();
        // value = mantissa·e^{−x}; sinh x ≈ e^x/2
        let exact_mantissa = 2.0 * (g * x).sin() / g;
        assert!((v.mantissa - exact_mantissa).abs() < 1e-8, "{} vs {}", v.mantissa, exact_mantissa);
        assert_eq!(v.log_factor, x);
    }

    #[test]
    fn positive_argument_polynomial_and_log() {
        let p = HypergeomParams::real(3.0, -1.0, 3.0).unwrap();
        for &z in &[0.2, 0.9, 0.99, 0.999999] {
            let v = eval_2f1_positive(&p, z).unwrap().value;
            assert!((v - (1.0 - z)).abs() < 1e-10, "z={z}: {v}");
        }
        let q = HypergeomParams::real(0.5, 1.0, 1.5).unwrap();
        // F(1/2, 1; 3/2; z) = atanh(√z)/√z
        for &z in &[0.3, 0.97, 0.9999] {
            let v = eval_2f1_positive(&q, z).unwrap().value;
            let e = z.sqrt().atanh() / z.sqrt();
            assert!((v - e).abs() < 1e-10 * e, "z={z}: {v} vs {e}");
        }
    }

    #[test]
    fn continued_fraction_matches_quotient() {
        let (n, kappa, rho) = (3usize, 1.0, 0.5);
        let lambda = 1.0 + core::f64::consts::PI.powi(2);
        let beta = (lambda - 1.0).sqrt();
        let z = z_of_x(kappa * rho);
        let rn = eval_2f1(&HypergeomParams::radial(3.0, beta).unwrap(), z).unwrap().value;
        let rn2 = eval_2f1(&HypergeomParams::radial(5.0, beta).unwrap(), z).unwrap().value;
        let q = rn / (rn2 * (kappa * rho).sinh());
        let cf = ratio_cf(n, kappa, lambda, rho).unwrap();
        assert!((q - cf).abs() < 1e-10 * q.abs(), "{q} vs {cf}");
    }
}
