//! Adaptive Gauss–Kronrod (7/15) quadrature and a few substitutions for
//! endpoint singularities.

// Kronrod nodes and weights are kept as tabulated, beyond f64 precision.
#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use alloc::collections::BinaryHeap;
use core::cmp::Ordering;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { abs_tol: 0.0, rel_tol: 1e-12, max_intervals: 4000 }
    }
}

impl QuadOptions {
    pub fn relative(rel_tol: f64) -> Self {
        QuadOptions { rel_tol, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_error: f64,
    pub intervals: usize,
}

/// One 15-point Kronrod panel: (integral, error estimate, Σ|f|·w).
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[7];
    let mut rg = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        rk += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            rg += WG[j / 2] * (f1 + f2);
        }
    }
    let value = rk * h;
    let err = ((rk - rg) * h).abs();
    (value, err)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.partial_cmp(&o.err).unwrap_or(Ordering::Equal)
    }
}

/// Globally adaptive integration of `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<Quadrature> {
    if a == b {
        return Ok(Quadrature { value: 0.0, abs_error: 0.0, intervals: 0 });
    }
    if b < a {
        let q = integrate(f, b, a, opts)?;
        return Ok(Quadrature { value: -q.value, ..q });
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value: v, err: e });
    let (mut total, mut total_err) = (v, e);
    loop {
        if !total.is_finite() || !total_err.is_finite() {
            return Err(Error::Divergent(alloc::format!("integrand not finite on [{a}, {b}]")));
        }
        let tol = opts.abs_tol.max(opts.rel_tol * total.abs());
        if total_err <= tol {
            break;
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::NonConvergence { what: "adaptive quadrature", partial: total, iterations: heap.len() });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel cannot be split further; accept what we have.
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
    }
    // Re-sum to shed the drift of the running totals.
    let (mut value, mut abs_error) = (0.0, 0.0);
    let intervals = heap.len();
    for p in heap.into_iter() {
        value += p.value;
        abs_error += p.err;
    }
    Ok(Quadrature { value, abs_error, intervals })
}

/// `∫₀¹ (1−t)^{β−1} g(t) dt` for `β > 0`, via `1 − t = s^{1/β}` which
/// removes the endpoint power: the result is `(1/β)∫₀¹ g(1 − s^{1/β}) ds`.
pub fn integrate_endpoint_power<G: FnMut(f64) -> f64>(mut g: G, beta: f64, opts: &QuadOptions) -> Result<Quadrature> {
    if !(beta > 0.0) {
        return Err(Error::Divergent(alloc::format!("endpoint exponent β−1 = {} ≤ −1", beta - 1.0)));
    }
    let inv = 1.0 / beta;
    let q = integrate(
        |s| {
            let t = 1.0 - s.powf(inv);
            g(t)
        },
        0.0,
        1.0,
        opts,
    )?;
    Ok(Quadrature { value: q.value * inv, abs_error: q.abs_error * inv, intervals: q.intervals })
}

/// `∫₀^δ f(ρ) dρ` for integrands behaving like `ρ^p` at the origin.
///
/// Substituting `ρ = δ·u^{1/(p+1)}` turns the power law into a constant,
/// so the transformed integrand is smooth at `u = 0`.
pub fn integrate_power_origin<F: FnMut(f64) -> f64>(mut f: F, delta: f64, p: f64, opts: &QuadOptions) -> Result<Quadrature> {
    let q1 = p + 1.0;
    let e = 1.0 / q1;
    let q = integrate(
        |u| {
            if u <= 0.0 {
                return 0.0;
            }
            let rho = delta * u.powf(e);
            let ratio = if p == 0.0 { 1.0 } else { (rho / delta).powf(p) };
            f(rho) / ratio
        },
        0.0,
        1.0,
        opts,
    )?;
    let scale = delta * e;
    Ok(Quadrature { value: q.value * scale, abs_error: q.abs_error * scale, intervals: q.intervals })
}

/// `∫₀^b f` for integrands with a `ρ^p` power law at the origin: the piece
/// `[0, min(10⁻³, b)]` uses [`integrate_power_origin`], the rest plain
/// adaptive quadrature.
pub fn integrate_from_origin<F: FnMut(f64) -> f64>(mut f: F, b: f64, p: f64, opts: &QuadOptions) -> Result<Quadrature> {
    let split = b.min(1e-3);
    let head = integrate_power_origin(&mut f, split, p, opts)?;
    if split >= b {
        return Ok(head);
    }
    let tail = integrate(&mut f, split, b, opts)?;
    Ok(Quadrature {
        value: head.value + tail.value,
        abs_error: head.abs_error + tail.abs_error,
        intervals: head.intervals + tail.intervals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let q = integrate(|x| x * x * x - 2.0 * x, 0.0, 2.0, &QuadOptions::default()).unwrap();
        assert!((q.value - 0.0).abs() < 1e-14);
    }

    #[test]
    fn sqrt_singularity() {
        let q = integrate(|x| x.sqrt(), 0.0, 1.0, &QuadOptions::relative(1e-12)).unwrap();
        assert!((q.value - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn endpoint_power_beta() {
        // ∫₀¹ (1−t)^{-0.7} t² dt = B(3, 0.3)
        let b = 2.0 / (0.3 * 1.3 * 2.3);
        let q = integrate_endpoint_power(|t| t * t, 0.3, &QuadOptions::relative(1e-13)).unwrap();
        assert!((q.value - b).abs() < 1e-11 * b);
        assert!(integrate_endpoint_power(|t| t, 0.0, &QuadOptions::default()).is_err());
    }

    #[test]
    fn power_origin() {
        let q = integrate_from_origin(|r| r.powi(4) * r.cos(), 2.0, 4.0, &QuadOptions::relative(1e-13)).unwrap();
        // ∫ r⁴ cos r = r⁴ sin r + 4r³ cos r − 12 r² sin r − 24 r cos r + 24 sin r
        let f = |r: f64| {
            r.powi(4) * r.sin() + 4.0 * r.powi(3) * r.cos() - 12.0 * r * r * r.sin() - 24.0 * r * r.cos()
                + 24.0 * r.sin()
        };
        assert!((q.value - f(2.0)).abs() < 1e-12);
    }
}
