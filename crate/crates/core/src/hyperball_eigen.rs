//! First Dirichlet eigenvalue of a geodesic ball `B_r^κ ⊂ ℍⁿ(−κ²)`.
//!
//! Writing `λ = (n−1)²κ²/4 + α²`, the radial eigenfunction is
//! `₂F₁((n−1)/2 ± iα/κ; n/2; −sinh²(κρ/2))` and `α` is its smallest positive
//! zero at `ρ = r`. Three solvers are provided:
//!
//! * [`Method::HypergeomRoot`] — root of the hypergeometric boundary
//!   function (any `n`);
//! * [`Method::SRecursion`] — for odd `n = 2l+1` the eigenfunction is an
//!   elementary function, `S_l(α/κ, κρ)`, with
//!   `S₁(γ,x) = sin(γx)/(γ sinh x)`, `S_{k+1} = (∂ₓS_k)/sinh x`;
//! * [`Method::OdeShooting`] — shooting on the radial equation.
//!
//! Internally everything is expressed through the dimensionless pair
//! `β = α/κ`, `R = κr`, so that `λ(n, κ, r) = κ²·λ(n, 1, κr)` holds by
//! construction.

use crate::asymptotics::{bessel_first_zero, small_r_expansion};
use crate::error::{Error, Result};
use crate::hypergeom2f1::{eval_2f1_geodesic, HypergeomParams};
use crate::quad::{integrate_from_origin, QuadOptions};
use crate::radial_sturm::{geodesic_boundary_value, hyperbolic_boundary_value, ShootOptions, RHO_CAP};
use crate::roots::{refine, scan, Bracket, RootOptions};
use crate::special::{ln_sinh, unit_ball_volume};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

/// Largest `k` for which the `S_k` tables are built (odd `n ≤ 25`).
pub const K_MAX: usize = 12;
const DIM: usize = K_MAX + 2;

/// A hyperbolic ball instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BallSpec {
    pub n: usize,
    pub kappa: f64,
    pub r: f64,
}

impl BallSpec {
    pub fn new(n: usize, kappa: f64, r: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(alloc::format!("dimension n = {n} must be ≥ 2")));
        }
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(Error::InvalidParameter(alloc::format!("κ = {kappa} must be positive")));
        }
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidParameter(alloc::format!("r = {r} must be positive")));
        }
        Ok(BallSpec { n, kappa, r })
    }

    /// `(n−1)²κ²/4`, the bottom of the spectrum of the whole space.
    pub fn spectral_floor(&self) -> f64 {
        let m = 0.5 * (self.n as f64 - 1.0);
        m * m * self.kappa * self.kappa
    }

    /// Dimensionless radius `κr`.
    pub fn scaled_radius(&self) -> f64 {
        self.kappa * self.r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    HypergeomRoot,
    SRecursion,
    OdeShooting,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::HypergeomRoot, Method::SRecursion, Method::OdeShooting];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::HypergeomRoot => "hypergeom_root",
            Method::SRecursion => "s_recursion",
            Method::OdeShooting => "ode_shooting",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypergeom_root" | "hypergeom" => Ok(Method::HypergeomRoot),
            "s_recursion" | "odd" => Ok(Method::SRecursion),
            "ode_shooting" | "ode" | "shooting" => Ok(Method::OdeShooting),
            other => Err(Error::InvalidParameter(alloc::format!("unknown method '{other}'"))),
        }
    }
}

/// A computed eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    /// `α = √(λ − (n−1)²κ²/4)`.
    pub alpha: f64,
    pub method: Method,
    /// Boundary function at the root, in the normalization used by the method.
    pub residual: f64,
    /// Magnitude of the boundary function at the ends of the scan bracket,
    /// the local scale against which `residual` should be judged.
    pub residual_scale: f64,
    /// Final bracket on `α`.
    pub bracket: (f64, f64),
}

/// Solver controls.
#[derive(Clone, Copy, Debug, Default)]
pub struct EigenOptions {
    pub root: RootOptions,
}

impl EigenOptions {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        EigenOptions { root: RootOptions { rel_tol, ..RootOptions::default() } }
    }
}

// --- S_k tables -----------------------------------------------------------
//
// sinh^k(x)·S_k(γ, x) = A_k(γ, u)·sin(γx) + B_k(γ, u)·cos(γx),   u = coth x,
// where A_k, B_k are polynomials in u and γ (with one γ⁻¹ term). From
// S_{k+1} = ∂ₓS_k / sinh x and d(coth x)/dx = 1 − coth² x:
//   A_{k+1} = −k·u·A_k + (1 − u²)·∂_u A_k − γ·B_k
//   B_{k+1} = −k·u·B_k + (1 − u²)·∂_u B_k + γ·A_k
// Entry [i][j] multiplies γ^{i−1}·u^j.

type Poly = [[i64; DIM]; DIM];

struct STables {
    a: [Poly; K_MAX + 1],
    b: [Poly; K_MAX + 1],
}

const fn build_tables() -> STables {
    let mut a = [[[0i64; DIM]; DIM]; K_MAX + 1];
    let mut b = [[[0i64; DIM]; DIM]; K_MAX + 1];
    a[1][0][0] = 1; // S₁ = sin(γx)/(γ sinh x)
    let mut k = 1;
    while k < K_MAX {
        let kk = k as i64;
        let mut i = 0;
        while i < DIM {
            let mut j = 0;
            while j < DIM {
                let av = a[k][i][j];
                let bv = b[k][i][j];
                if av != 0 {
                    a[k + 1][i][j + 1] -= kk * av;
                    if j > 0 {
                        a[k + 1][i][j - 1] += (j as i64) * av;
                        a[k + 1][i][j + 1] -= (j as i64) * av;
                    }
                    b[k + 1][i + 1][j] += av;
                }
                if bv != 0 {
                    b[k + 1][i][j + 1] -= kk * bv;
                    if j > 0 {
                        b[k + 1][i][j - 1] += (j as i64) * bv;
                        b[k + 1][i][j + 1] -= (j as i64) * bv;
                    }
                    a[k + 1][i + 1][j] -= bv;
                }
                j += 1;
            }
            i += 1;
        }
        k += 1;
    }
    STables { a, b }
}

static TABLES: STables = build_tables();

fn eval_poly(p: &Poly, gamma: f64, u: f64) -> f64 {
    let mut acc = 0.0;
    let mut gp = 1.0 / gamma;
    for row in p.iter() {
        let mut s = 0.0;
        for &c in row.iter().rev() {
            s = s * u + c as f64;
        }
        acc += s * gp;
        gp *= gamma;
    }
    acc
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > K_MAX {
        return Err(Error::Unsupported { what: "S_k recursion", requested: k, max: K_MAX });
    }
    Ok(())
}

/// `sinh^k(x)·S_k(γ, x)`, bounded for large `x`.
pub fn s_scaled(k: usize, gamma: f64, x: f64) -> Result<f64> {
    check_k(k)?;
    let u = 1.0 / x.tanh();
    let (s, c) = (gamma * x).sin_cos();
    Ok(eval_poly(&TABLES.a[k], gamma, u) * s + eval_poly(&TABLES.b[k], gamma, u) * c)
}

/// `S_k(γ, x)` for `1 ≤ k ≤ K_MAX`, `γ > 0`, `x > 0`.
pub fn s_function(k: usize, gamma: f64, x: f64) -> Result<f64> {
    if !(gamma > 0.0 && x > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("S_k needs γ > 0 and x > 0 (γ={gamma}, x={x})")));
    }
    let v = s_scaled(k, gamma, x)?;
    Ok(v * (-(k as f64) * ln_sinh(x)).exp())
}

/// Nonzero polynomial terms `(γ power, coth power, coefficient)`.
pub type Terms = Vec<(i32, u32, i64)>;

/// Integer coefficients of `A_k` (multiplying `sin γx`) and `B_k`
/// (multiplying `cos γx`): entries `(γ power, coth power, coefficient)`.
pub fn s_coefficients(k: usize) -> Result<(Terms, Terms)> {
    check_k(k)?;
    let collect = |p: &Poly| {
        let mut v = Vec::new();
        for (i, row) in p.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    v.push((i as i32 - 1, j as u32, c));
                }
            }
        }
        v
    };
    Ok((collect(&TABLES.a[k]), collect(&TABLES.b[k])))
}

// --- solvers --------------------------------------------------------------

fn result_from_beta(spec: &BallSpec, method: Method, beta: f64, residual: f64, scale: f64, br: (f64, f64)) -> EigenResult {
    let k = spec.kappa;
    let alpha = beta * k;
    EigenResult {
        lambda: spec.spectral_floor() + alpha * alpha,
        alpha,
        method,
        residual,
        residual_scale: scale,
        bracket: (br.0 * k, br.1 * k),
    }
}

fn solve_bracketed<F>(spec: &BallSpec, method: Method, mut f: F, grid: &[f64], what: &'static str, opts: &EigenOptions) -> Result<EigenResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let br: Bracket = scan(&mut f, grid)?.ok_or(Error::NoBracket {
        what,
        lo: grid.first().copied().unwrap_or(0.0),
        hi: grid.last().copied().unwrap_or(0.0),
        samples: grid.len(),
    })?;
    let scale = br.f_lo.abs().max(br.f_hi.abs());
    let root = refine(&mut f, br, &opts.root)?;
    Ok(result_from_beta(spec, method, root.x, root.fx, scale, root.bracket))
}

/// Scan grid in `β`: geometric from 10⁻⁴ until the ratio step would exceed
/// `π/(8R)`, then linear with that step up to `β_max`.
fn scan_grid(r_scaled: f64, beta_max: f64) -> Vec<f64> {
    let step = core::f64::consts::PI / (8.0 * r_scaled);
    let mut g = Vec::new();
    let mut b = 1e-4f64.min(0.5 * beta_max);
    while b < beta_max {
        g.push(b);
        let next = (2.0 * b).min(b + step);
        b = next;
    }
    g.push(beta_max);
    g
}

fn bessel_beta_max(n: usize, r_scaled: f64) -> Result<f64> {
    let j = bessel_first_zero(0.5 * n as f64 - 1.0)?;
    Ok((j + 1.0) / r_scaled)
}

/// Run `solve` on the standard scan grid, extending the search range up to
/// four times when no sign change is found.
fn with_extension<F>(spec: &BallSpec, method: Method, mut f: F, what: &'static str, opts: &EigenOptions) -> Result<EigenResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let r_scaled = spec.scaled_radius();
    let beta_max = bessel_beta_max(spec.n, r_scaled)?;
    let mut grid = scan_grid(r_scaled, beta_max);
    let mut last_err = None;
    for ext in 0..4 {
        match solve_bracketed(spec, method, &mut f, &grid, what, opts) {
            Ok(res) => return Ok(res),
            Err(e @ Error::NoBracket { .. }) => {
                last_err = Some(e);
                let lo = *grid.last().expect("grid is non-empty");
                let hi = beta_max * (ext as f64 + 2.0);
                let step = core::f64::consts::PI / (8.0 * r_scaled);
                let mut b = lo;
                let mut next = alloc::vec![lo];
                while b < hi {
                    b = (b + step).min(hi);
                    next.push(b);
                }
                grid = next;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(Error::NoBracket { what, lo: 0.0, hi: beta_max, samples: 0 }))
}

fn small_radius_guard(spec: &BallSpec, method: Method, res: Result<EigenResult>) -> Result<EigenResult> {
    if spec.scaled_radius() >= 1e-3 {
        return res;
    }
    log::warn!(
        "radius κr = {:e} is below 1e-3: eigenvalue is O(1/r²) and accuracy is limited; compare with the small-radius expansion",
        spec.scaled_radius()
    );
    match res {
        Ok(r) => Ok(r),
        Err(e) => {
            log::warn!("{method} failed ({e}); falling back to the small-radius expansion");
            let lambda = small_r_expansion(spec.n, spec.kappa, spec.r)?;
            let alpha = (lambda - spec.spectral_floor()).max(0.0).sqrt();
            Ok(EigenResult { lambda, alpha, method, residual: f64::NAN, residual_scale: f64::NAN, bracket: (alpha, alpha) })
        }
    }
}

/// Boundary function for the hypergeometric method, normalized by the
/// fixed factor `e^{−sR}` so that values for different `β` are comparable.
fn hypergeom_boundary(n: usize, r_scaled: f64, beta: f64) -> Result<f64> {
    let p = HypergeomParams::radial(n as f64, beta)?;
    let v = eval_2f1_geodesic(&p, r_scaled)?;
    let s = 0.5 * (n as f64 - 1.0);
    Ok(v.mantissa * (s * r_scaled - v.log_factor).exp())
}

/// `λ` from the smallest zero of `β ↦ ₂F₁((n−1)/2 ± iβ; n/2; −sinh²(R/2))`.
pub fn eigen_hypergeom(spec: &BallSpec) -> Result<EigenResult> {
    eigen_hypergeom_with(spec, &EigenOptions::default())
}

pub fn eigen_hypergeom_with(spec: &BallSpec, opts: &EigenOptions) -> Result<EigenResult> {
    let r_scaled = spec.scaled_radius();
    let n = spec.n;
    let res = with_extension(spec, Method::HypergeomRoot, |b| hypergeom_boundary(n, r_scaled, b), "hypergeometric boundary function", opts);
    small_radius_guard(spec, Method::HypergeomRoot, res)
}

/// `λ` for odd `n = 2l+1` from the smallest zero of `S_l(β, R)`, searched
/// in `βR ∈ (0, 1.01·j_{l−1/2,1}]`.
pub fn eigen_odd(spec: &BallSpec) -> Result<EigenResult> {
    eigen_odd_with(spec, &EigenOptions::default())
}

pub fn eigen_odd_with(spec: &BallSpec, opts: &EigenOptions) -> Result<EigenResult> {
    if spec.n % 2 == 0 {
        return Err(Error::InvalidParameter(alloc::format!("S_l recursion needs odd n, got {}", spec.n)));
    }
    let l = (spec.n - 1) / 2;
    check_k(l)?;
    let r_scaled = spec.scaled_radius();
    let j = bessel_first_zero(l as f64 - 0.5)?;
    let hi = 1.01 * j / r_scaled;
    let count = 256;
    let grid: Vec<f64> = (1..=count).map(|i| hi * i as f64 / count as f64).collect();
    let res = solve_bracketed(spec, Method::SRecursion, |b| s_scaled(l, b, r_scaled), &grid, "S_l boundary function", opts);
    small_radius_guard(spec, Method::SRecursion, res)
}

/// `λ` by shooting on the radial equation and root finding in `β`.
pub fn eigen_shooting(spec: &BallSpec) -> Result<EigenResult> {
    eigen_shooting_with(spec, &EigenOptions::default())
}

pub fn eigen_shooting_with(spec: &BallSpec, opts: &EigenOptions) -> Result<EigenResult> {
    let n = spec.n;
    let r_scaled = spec.scaled_radius();
    let m = 0.5 * (n as f64 - 1.0);
    let rho_end = (0.5 * r_scaled).tanh();
    let so = ShootOptions { rtol: 1e-12, atol: 1e-14, stop_at_first_zero: false };
    let f = move |beta: f64| -> Result<f64> {
        let l = m * m + beta * beta;
        if rho_end <= RHO_CAP {
            hyperbolic_boundary_value(n, 4.0 * l, rho_end, &so)
        } else {
            geodesic_boundary_value(n, l, r_scaled, &so)
        }
    };
    let res = with_extension(spec, Method::OdeShooting, f, "shooting boundary value", opts);
    small_radius_guard(spec, Method::OdeShooting, res)
}

/// Dispatcher: the requested method, or the `S_l` recursion for odd
/// `n ≤ 2·K_MAX + 1` and the hypergeometric root otherwise.
pub fn eigen(spec: &BallSpec, method: Option<Method>) -> Result<EigenResult> {
    eigen_with(spec, method, &EigenOptions::default())
}

pub fn eigen_with(spec: &BallSpec, method: Option<Method>, opts: &EigenOptions) -> Result<EigenResult> {
    let method = method.unwrap_or(if spec.n % 2 == 1 && (spec.n - 1) / 2 <= K_MAX {
        Method::SRecursion
    } else {
        Method::HypergeomRoot
    });
    match method {
        Method::HypergeomRoot => eigen_hypergeom_with(spec, opts),
        Method::SRecursion => eigen_odd_with(spec, opts),
        Method::OdeShooting => eigen_shooting_with(spec, opts),
    }
}

/// Volume of `B_r^κ`: `nω_n ∫₀^r (sinh(κρ)/κ)^{n−1} dρ`.
pub fn hyperbolic_volume(n: usize, kappa: f64, r: f64) -> Result<f64> {
    let n1 = n as f64 - 1.0;
    let c = n as f64 * unit_ball_volume(n);
    let q = integrate_from_origin(
        |rho| if rho <= 0.0 { 0.0 } else { (n1 * (ln_sinh(kappa * rho) - kappa.ln())).exp() },
        r,
        n1,
        &QuadOptions::relative(1e-13),
    )?;
    Ok(c * q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn s2_and_s3_tables() {
        let (a2, b2) = s_coefficients(2).unwrap();
        assert_eq!(a2, alloc::vec![(-1, 1, -1)]);
        assert_eq!(b2, alloc::vec![(0, 0, 1)]);
        // sinh³·S₃ = ((3u²−1)/γ − γ)·sin − 3u·cos  ⇒ zero set of 3α cos tanh + sin[(α²+1)tanh² − 3]
        let (g, x) = (0.8, 1.7);
        let v = s_scaled(3, g, x).unwrap();
        let u = 1.0 / x.tanh();
        let e = ((3.0 * u * u - 1.0) / g - g) * (g * x).sin() - 3.0 * u * (g * x).cos();
        assert!((v - e).abs() < 1e-13);
    }

    #[test]
    fn s1_zero_at_pi() {
        assert!(s_function(1, PI / 2.0, 2.0).unwrap().abs() < 1e-15);
        assert!(s_function(13, 1.0, 1.0).is_err());
    }

    #[test]
    fn exact_three_dimensional_law() {
        let spec = BallSpec::new(3, 1.0, PI).unwrap();
        for m in Method::ALL {
            let res = eigen(&spec, Some(m)).unwrap();
            assert!((res.lambda - 2.0).abs() < 1e-10, "{m}: {}", res.lambda);
        }
    }

    #[test]
    fn scaling_in_kappa() {
        let a = eigen(&BallSpec::new(4, 2.0, 0.7).unwrap(), None).unwrap();
        let b = eigen(&BallSpec::new(4, 1.0, 1.4).unwrap(), None).unwrap();
        assert!((a.lambda - 4.0 * b.lambda).abs() < 1e-10 * a.lambda);
    }

    #[test]
    fn volume_n2() {
        // n = 2: 2π(cosh r − 1)
        let v = hyperbolic_volume(2, 1.0, 1.5).unwrap();
        assert!((v - 2.0 * PI * (1.5f64.cosh() - 1.0)).abs() < 1e-12 * v);
    }
}
