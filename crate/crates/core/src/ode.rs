//! Dormand–Prince 5(4) integrator with dense output.
//!
//! Fixed-size state vectors (`[f64; N]`), forward integration only. Every
//! accepted step is handed to an observer together with its continuous
//! extension, which is how callers sample the solution and locate sign
//! changes without restarting the integration.

use crate::error::{Error, Result};
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// Integration controls.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub rtol: f64,
    pub atol: f64,
    /// Initial step; `None` picks one automatically.
    pub h0: Option<f64>,
    /// Largest step allowed; `None` means the whole interval.
    pub h_max: Option<f64>,
    pub max_steps: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { rtol: 1e-10, atol: 1e-12, h0: None, h_max: None, max_steps: 1_000_000 }
    }
}

impl Options {
    pub fn with_tolerances(rtol: f64, atol: f64) -> Self {
        Options { rtol, atol, ..Default::default() }
    }
}

/// One accepted step with its continuous extension.
#[derive(Clone, Copy, Debug)]
pub struct Step<const N: usize> {
    pub t0: f64,
    pub t1: f64,
    pub y0: [f64; N],
    pub y1: [f64; N],
    cont: [[f64; N]; 5],
}

impl<const N: usize> Step<N> {
    /// Evaluate the dense-output polynomial at `t ∈ [t0, t1]`.
    pub fn eval(&self, t: f64) -> [f64; N] {
        let h = self.t1 - self.t0;
        let th = (t - self.t0) / h;
        let th1 = 1.0 - th;
        let c = &self.cont;
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = c[0][i] + th * (c[1][i] + th1 * (c[2][i] + th * (c[3][i] + th1 * c[4][i])));
        }
        out
    }

    /// Locate a sign change of component `i` inside the step by bisection on
    /// the dense output, down to `tol` in `t`.
    pub fn sign_change(&self, i: usize, tol: f64) -> Option<f64> {
        let (a, b) = (self.y0[i], self.y1[i]);
        if a == 0.0 {
            return Some(self.t0);
        }
        if a.signum() == b.signum() && b != 0.0 {
            return None;
        }
        let (mut lo, mut hi) = (self.t0, self.t1);
        let sa = a.signum();
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let v = self.eval(mid)[i];
            if v == 0.0 {
                return Some(mid);
            }
            if v.signum() == sa {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(0.5 * (lo + hi))
    }
}

/// What the observer wants after seeing a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

/// Summary of a finished integration.
#[derive(Clone, Copy, Debug)]
pub struct Outcome<const N: usize> {
    pub t: f64,
    pub y: [f64; N],
    pub accepted: usize,
    pub rejected: usize,
    /// `true` if the observer stopped the integration before `t_end`.
    pub stopped: bool,
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for &(c, k) in terms {
        if c != 0.0 {
            for i in 0..N {
                out[i] += h * c * k[i];
            }
        }
    }
    out
}

fn initial_step<const N: usize, F>(f: &mut F, t0: f64, y0: &[f64; N], k1: &[f64; N], o: &Options, span: f64) -> f64
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
{
    let (mut dnf, mut dny) = (0.0, 0.0);
    for i in 0..N {
        let sk = (o.atol + o.rtol * y0[i].abs()).max(f64::MIN_POSITIVE);
        dnf += (k1[i] / sk).powi(2);
        dny += (y0[i] / sk).powi(2);
    }
    let mut h = if dnf <= 1e-10 || dny <= 1e-10 { 1e-6 } else { 0.01 * (dny / dnf).sqrt() };
    h = h.min(span);
    let y1 = axpy(y0, h, &[(1.0, k1)]);
    let k2 = f(t0 + h, &y1);
    let mut der2 = 0.0;
    for i in 0..N {
        let sk = (o.atol + o.rtol * y0[i].abs()).max(f64::MIN_POSITIVE);
        der2 += ((k2[i] - k1[i]) / sk).powi(2);
    }
    let der2 = der2.sqrt() / h;
    let der12 = der2.max(dnf.sqrt());
    let h1 = if der12 <= 1e-15 { (h * 1e-3).max(1e-6) } else { (0.01 / der12).powf(0.2) };
    (100.0 * h).min(h1).min(span)
}

/// Integrate `y' = f(t, y)` from `t0` to `t_end > t0`.
///
/// `observe` is called after every accepted step; returning
/// [`Control::Stop`] ends the integration early.
pub fn integrate<const N: usize, F, O>(
    mut f: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: &Options,
    mut observe: O,
) -> Result<Outcome<N>>
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
    O: FnMut(&Step<N>) -> Control,
{
    if !(t_end > t0) {
        return Err(Error::InvalidParameter(alloc::format!(
            "integration interval must be increasing: [{t0}, {t_end}]"
        )));
    }
    let span = t_end - t0;
    let h_max = opts.h_max.unwrap_or(span).min(span);
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = opts.h0.unwrap_or_else(|| initial_step(&mut f, t0, &y0, &k1, opts, span)).min(h_max);
    let (beta, safe, fac1, fac2) = (0.04, 0.9, 0.2, 10.0);
    let expo1 = 0.2 - beta * 0.75;
    let mut facold: f64 = 1e-4;
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    let mut last_rejected = false;

    loop {
        if accepted + rejected >= opts.max_steps {
            return Err(Error::StepFailure { what: "step limit reached", at: t });
        }
        if h < 1e-14 * t.abs().max(1e-300) || h <= 0.0 || !h.is_finite() {
            return Err(Error::StepFailure { what: "step size underflow", at: t });
        }
        let last = t + 1.01 * h >= t_end;
        if last {
            h = t_end - t;
        }
        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(t + C5 * h, &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let ysti = axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]);
        let k6 = f(t + h, &ysti);
        let y1 = axpy(&y, h, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let t1 = if last { t_end } else { t + h };
        let k7 = f(t1, &y1);

        let mut err = 0.0;
        for i in 0..N {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sk = (opts.atol + opts.rtol * y[i].abs().max(y1[i].abs())).max(f64::MIN_POSITIVE);
            err += (e / sk).powi(2);
        }
        let err = (err / N as f64).sqrt();
        if !err.is_finite() {
            rejected += 1;
            h *= 0.1;
            last_rejected = true;
            continue;
        }
        let fac11 = err.powf(expo1);
        if err <= 1.0 {
            let fac = (fac11 / facold.powf(beta) / safe).clamp(1.0 / fac2, 1.0 / fac1);
            facold = err.max(1e-4);
            accepted += 1;
            let mut cont = [[0.0; N]; 5];
            for i in 0..N {
                let ydiff = y1[i] - y[i];
                let bspl = h * k1[i] - ydiff;
                cont[0][i] = y[i];
                cont[1][i] = ydiff;
                cont[2][i] = bspl;
                cont[3][i] = ydiff - h * k7[i] - bspl;
                cont[4][i] =
                    h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
            }
            let step = Step { t0: t, t1, y0: y, y1, cont };
            t = t1;
            y = y1;
            k1 = k7;
            if observe(&step) == Control::Stop {
                return Ok(Outcome { t, y, accepted, rejected, stopped: true });
            }
            if last {
                return Ok(Outcome { t, y, accepted, rejected, stopped: false });
            }
            let mut hnew = h / fac;
            if last_rejected {
                hnew = hnew.min(h);
            }
            last_rejected = false;
            h = hnew.min(h_max);
        } else {
            rejected += 1;
            last_rejected = true;
            h /= (fac11 / safe).min(1.0 / fac1);
        }
    }
}

/// Integrate to `t_end` and return only the final state.
pub fn solve<const N: usize, F>(f: F, t0: f64, y0: [f64; N], t_end: f64, opts: &Options) -> Result<Outcome<N>>
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
{
    integrate(f, t0, y0, t_end, opts, |_| Control::Continue)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_period() {
        let o = Options::with_tolerances(1e-12, 1e-14);
        let out = solve(|_, y: &[f64; 2]| [y[1], -y[0]], 0.0, [0.0, 1.0], 2.0 * core::f64::consts::PI, &o)
            .unwrap();
        assert!(out.y[0].abs() < 1e-10 && (out.y[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn dense_output_finds_first_zero_of_sine() {
        let o = Options::with_tolerances(1e-12, 1e-14);
        let mut zero = None;
        integrate(|_, y: &[f64; 2]| [y[1], -y[0]], 0.1, [0.1f64.sin(), 0.1f64.cos()], 10.0, &o, |s| {
            if let Some(z) = s.sign_change(0, 1e-13) {
                zero = Some(z);
                Control::Stop
            } else {
                Control::Continue
            }
        })
        .unwrap();
        assert!((zero.unwrap() - core::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn exponential_growth_relative_accuracy() {
        let o = Options::with_tolerances(1e-11, 0.0);
        let out = solve(|_, y: &[f64; 1]| [y[0]], 0.0, [1.0], 30.0, &o).unwrap();
        assert!((out.y[0] / 30f64.exp() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn rejects_backward_interval() {
        assert!(solve(|_, y: &[f64; 1]| [y[0]], 1.0, [1.0], 0.0, &Options::default()).is_err());
    }
}
