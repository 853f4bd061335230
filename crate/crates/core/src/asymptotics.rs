//! Expansions of the first eigenvalue for small and large radius, the
//! classical bound set, and the `1/r²` correction constants `c_l` in
//! `α ∼ π/r + c_l/r²`.

use crate::error::{Error, Result};
use crate::hyperball_eigen::{eigen, BallSpec};
use crate::quad::{integrate, QuadOptions};
use crate::special::Dd;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};
use core::sync::atomic::{AtomicU64, Ordering};
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

/// `Γ(ν+1)(2/x)^ν J_ν(x) = Σ (−x²/4)^k / (k! (ν+1)_k)`, summed in
/// double-double so that the cancellation for `x ≈ 10–20` is harmless.
fn bessel_scaled(nu: f64, x: f64) -> f64 {
    let q = Dd::square(0.5 * x).neg();
    let mut term = Dd::new(1.0);
    let mut sum = Dd::new(1.0);
    let mut peak = 1.0f64;
    let mut k = 1.0;
    loop {
        term = term.mul(q).div_f(k * (nu + k));
        sum = sum.add(term);
        let t = term.to_f64().abs();
        peak = peak.max(t);
        if t < 1e-34 * peak && k * (nu + k) > 0.25 * x * x {
            break;
        }
        k += 1.0;
        if k > 10_000.0 {
            break;
        }
    }
    sum.to_f64()
}

/// First positive zero `j_{ν,1}` of the Bessel function `J_ν`, `ν ≥ 0`.
pub fn bessel_first_zero(nu: f64) -> Result<f64> {
    if !(nu >= 0.0 && nu.is_finite()) {
        return Err(Error::InvalidParameter(alloc::format!("Bessel order ν = {nu} must be ≥ 0")));
    }
    // j_{ν,1} > √((ν+1)(ν+5)) is a classical lower bound; start a little
    // below it and walk up.
    let mut lo = 0.99 * ((nu + 1.0) * (nu + 5.0)).sqrt();
    let mut f_lo = bessel_scaled(nu, lo);
    if f_lo <= 0.0 {
        return Err(Error::Breakdown("Bessel series negative below the first-zero lower bound"));
    }
    let mut hi = lo;
    loop {
        hi += 0.1;
        let f_hi = bessel_scaled(nu, hi);
        if f_hi <= 0.0 {
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }
    let _ = f_lo;
    while hi - lo > 4.0 * f64::EPSILON * hi {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        if bessel_scaled(nu, m) > 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_dimension(n: usize) -> (Parity, usize) {
        if n % 2 == 1 {
            (Parity::Odd, (n - 1) / 2)
        } else {
            (Parity::Even, n / 2)
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// Correction constant `c_l` for `n = 2l+1` (odd) or `n = 2l` (even).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionCoeffs {
    pub parity: Parity,
    pub l: usize,
    /// Closed form: `π·H_{l−1}` (odd), `2π(1 + 1/3 + … + 1/(2l−3) − ln 2)` (even).
    pub c_l: f64,
    /// `H_{l−1}` (odd) or `1 + 1/3 + … + 1/(2l−3)` (even).
    pub harmonic_sum: f64,
    /// The same constant obtained from the `P/Q` (odd) or `p/q` (even)
    /// recurrences at `γ → 0`.
    pub c_l_recurrence: f64,
}

const MAX_L: usize = 150;

/// `c_l` by both routes; they must agree to 10⁻¹² relative.
pub fn recurrence_constants(parity: Parity, l: usize) -> Result<ExpansionCoeffs> {
    let min_l = if parity == Parity::Odd { 2 } else { 1 };
    if l < min_l || l > MAX_L {
        return Err(Error::InvalidParameter(alloc::format!(
            "l = {l} out of range [{min_l}, {MAX_L}] for {} parity",
            parity.as_str()
        )));
    }
    let (harmonic_sum, c_l, c_rec) = match parity {
        Parity::Odd => {
            let h: f64 = (1..l).map(|k| 1.0 / k as f64).sum();
            // P₁ = sin-coefficient, Q₁ = cos-coefficient at γ → 0:
            // Q₁(0) = 1, P₁′(0) = 0, then
            // P′_{k+1}(0) = Q_k(0) − k P′_k(0), Q_{k+1}(0) = −k Q_k(0).
            let (mut dp, mut q) = (0.0f64, 1.0f64);
            for k in 1..l {
                let kf = k as f64;
                let dp_next = q - kf * dp;
                q *= -kf;
                dp = dp_next;
            }
            (h, PI * h, -PI * dp / q)
        }
        Parity::Even => {
            let s: f64 = (1..l).map(|k| 1.0 / (2 * k - 1) as f64).sum();
            // p₁′(0) = 2π ln 2, q_k(0) = (−1)^{k−1} π (2k−3)!!/2^{k−1},
            // p′_{k+1}(0) = q_k(0) + (1/2 − k) p′_k(0).
            let q_of = |k: usize| {
                let mut dfact = 1.0f64;
                let mut j = 2 * k as i64 - 3;
                while j > 1 {
                    dfact *= j as f64;
                    j -= 2;
                }
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * PI * dfact / 2f64.powi(k as i32 - 1)
            };
            let mut dp = 2.0 * PI * LN_2;
            for k in 1..l {
                dp = q_of(k) + (0.5 - k as f64) * dp;
            }
            (s, 2.0 * PI * (s - LN_2), -PI * dp / q_of(l))
        }
    };
    let rel = (c_l - c_rec).abs() / c_l.abs().max(f64::MIN_POSITIVE);
    if rel > 1e-12 {
        return Err(Error::IllConditioned { what: "c_l recurrence vs closed form", condition: rel });
    }
    Ok(ExpansionCoeffs { parity, l, c_l, harmonic_sum, c_l_recurrence: c_rec })
}

/// `c_l` for dimension `n` (`n = 3` gives `0`: `α = π/r` exactly).
pub fn expansion_constant(n: usize) -> Result<f64> {
    if n == 3 {
        return Ok(0.0);
    }
    if n < 2 {
        return Err(Error::InvalidParameter(alloc::format!("dimension n = {n} must be ≥ 2")));
    }
    let (p, l) = Parity::of_dimension(n);
    Ok(recurrence_constants(p, l)?.c_l)
}

/// Large-radius expansion `(n−1)²κ²/4 + (π/r)²[1 + c_l/(π κ r)]²`.
pub fn large_r_expansion(n: usize, kappa: f64, r: f64) -> Result<f64> {
    let c = expansion_constant(n)?;
    let m = 0.5 * (n as f64 - 1.0);
    let br = 1.0 + c / (PI * kappa * r);
    Ok(m * m * kappa * kappa + (PI / r).powi(2) * br * br)
}

/// Small-radius expansion `j²_{n/2−1,1}/r² + n(n−1)κ²/6`.
pub fn small_r_expansion(n: usize, kappa: f64, r: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(alloc::format!("dimension n = {n} must be ≥ 2")));
    }
    let j = bessel_first_zero(0.5 * n as f64 - 1.0)?;
    let nf = n as f64;
    Ok(j * j / (r * r) + nf * (nf - 1.0) * kappa * kappa / 6.0)
}

/// Classical bounds for the first eigenvalue of `B_r^κ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundSet {
    /// `(n−1)²κ²/4`, valid for every ball.
    pub mckean_lower: f64,
    /// `(n−1)²κ²/4` as well: the value approached by the comparison upper
    /// bound as `r → ∞`, not a bound at finite `r`.
    pub cheng_upper: f64,
    /// Borisov–Freitas interval, available for `κ = 1` only.
    pub bf_lower: Option<f64>,
    pub bf_upper: Option<f64>,
    pub savo_lower: f64,
    pub savo_upper: f64,
}

static SAVO_INTEGRAL_BITS: AtomicU64 = AtomicU64::new(0);

/// `∫₀^∞ s²/sinh²(s) ds` (= π²/6), computed once and cached.
pub fn savo_integral() -> f64 {
    let bits = SAVO_INTEGRAL_BITS.load(Ordering::Acquire);
    if bits != 0 {
        return f64::from_bits(bits);
    }
    let f = |s: f64| {
        if s < 1e-6 {
            1.0 - s * s / 3.0
        } else {
            let q = s / s.sinh();
            q * q
        }
    };
    // Tail beyond s = 40 is below 4·40²·e⁻⁸⁰ ≈ 1e-31.
    let v = integrate(f, 0.0, 40.0, &QuadOptions::relative(1e-14))
        .map(|q| q.value)
        .expect("smooth integrand on a finite interval");
    SAVO_INTEGRAL_BITS.store(v.to_bits(), Ordering::Release);
    v
}

/// The constant `C = π²(n²−1)/2 · ∫₀^∞ s²/sinh²(s) ds` of the Savo upper bound.
pub fn savo_constant(n: usize) -> f64 {
    let nf = n as f64;
    PI * PI * (nf * nf - 1.0) / 2.0 * savo_integral()
}

pub fn bounds(spec: &BallSpec) -> BoundSet {
    let n = spec.n;
    let nf = n as f64;
    let (k, r) = (spec.kappa, spec.r);
    let floor = spec.spectral_floor();
    // Savo, for κ = 1: m² + π²/r² ∓ (4π²/((n−1)r³), C/r³); general κ by scaling.
    let rs = k * r;
    let core = floor + (PI / r).powi(2);
    let savo_lower = core - k * k * 4.0 * PI * PI / ((nf - 1.0) * rs.powi(3));
    let savo_upper = core + k * k * savo_constant(n) / rs.powi(3);
    let (bf_lower, bf_upper) = if k == 1.0 {
        let j = bessel_first_zero(0.5 * nf - 1.0).expect("ν ≥ 0 for n ≥ 2");
        let j2 = j * j / (r * r);
        let inv_sh2 = (-2.0 * crate::special::ln_sinh(r)).exp();
        if n == 2 {
            (Some(j2 + 0.25 * (1.0 / (r * r) - inv_sh2 + 1.0)), Some(j2 + 1.0 / 3.0))
        } else {
            let lo = j2 + nf * (nf - 1.0) / 6.0;
            let hi = j2 + (nf - 1.0).powi(2) / 4.0 + (nf - 1.0) * (nf - 3.0) / 4.0 * (inv_sh2 - 1.0 / (r * r));
            (Some(lo), Some(hi))
        }
    } else {
        (None, None)
    };
    BoundSet { mckean_lower: floor, cheng_upper: floor, bf_lower, bf_upper, savo_lower, savo_upper }
}

/// Result of extrapolating `r²(α(r) − π/r)` to `r = ∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionFit {
    pub c_l: f64,
    /// `(r, r²(α − π/r))` for each grid point.
    pub samples: Vec<(f64, f64)>,
    /// `Σ|w_i|` of the extrapolation weights (1 for a perfectly conditioned fit).
    pub condition: f64,
}

fn validate_grid(r_grid: &[f64]) -> Result<()> {
    if r_grid.len() < 4 {
        return Err(Error::InvalidParameter(alloc::format!("need at least 4 radii, got {}", r_grid.len())));
    }
    if r_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter("radius grid must be strictly increasing".into()));
    }
    if r_grid[0] < 20.0 {
        return Err(Error::InvalidParameter(alloc::format!("smallest radius {} is below 20", r_grid[0])));
    }
    Ok(())
}

/// `r^s(α(r) − π/r)` for each radius (κ = 1). With the correct exponent
/// `s = 2` the sequence converges to `c_l`; other exponents drift.
pub fn trial_exponent_sequence(n: usize, r_grid: &[f64], s: f64) -> Result<Vec<f64>> {
    r_grid
        .iter()
        .map(|&r| {
            let res = eigen(&BallSpec::new(n, 1.0, r)?, None)?;
            Ok(r.powf(s) * (res.alpha - PI / r))
        })
        .collect()
}

/// Richardson (polynomial in `1/r`) extrapolation of `r²(α − π/r)`.
pub fn fit_expansion_constant(n: usize, r_grid: &[f64]) -> Result<ExpansionFit> {
    validate_grid(r_grid)?;
    let ys = trial_exponent_sequence(n, r_grid, 2.0)?;
    let hs: Vec<f64> = r_grid.iter().map(|r| 1.0 / r).collect();
    // Lagrange weights at h = 0.
    let mut c = 0.0;
    let mut cond = 0.0;
    for i in 0..hs.len() {
        let mut w = 1.0;
        for j in 0..hs.len() {
            if i != j {
                w *= hs[j] / (hs[j] - hs[i]);
            }
        }
        c += w * ys[i];
        cond += w.abs();
    }
    if !(cond < 1e4) || !c.is_finite() {
        return Err(Error::IllConditioned { what: "Richardson extrapolation of r²(α − π/r)", condition: cond });
    }
    Ok(ExpansionFit { c_l: c, samples: r_grid.iter().copied().zip(ys).collect(), condition: cond })
}
