//! Bracketed scalar root finding: grid scan, bisection, safeguarded secant.

use crate::error::{Error, Result};
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;

#[derive(Clone, Copy, Debug)]
pub struct RootOptions {
    /// Bisection shrinks the bracket to this width (relative to |x|, with
    /// an absolute floor of the same size) before switching to secant.
    pub bisect_width: f64,
    /// Final relative tolerance on the root.
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { bisect_width: 1e-6, rel_tol: 1e-12, max_iter: 300 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    /// Final bracket `(lo, hi)` that still contains a sign change.
    pub bracket: (f64, f64),
    pub evaluations: usize,
}

/// A sign change found by [`scan`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

/// Evaluate `f` on `grid` (increasing) and return the first sign change.
pub fn scan<F: FnMut(f64) -> Result<f64>>(mut f: F, grid: &[f64]) -> Result<Option<Bracket>> {
    let mut prev: Option<(f64, f64)> = None;
    for &x in grid {
        let v = f(x)?;
        if let Some((xp, vp)) = prev {
            if vp == 0.0 {
                return Ok(Some(Bracket { lo: xp, hi: xp, f_lo: 0.0, f_hi: 0.0 }));
            }
            if v == 0.0 || v.signum() != vp.signum() {
                return Ok(Some(Bracket { lo: xp, hi: x, f_lo: vp, f_hi: v }));
            }
        }
        prev = Some((x, v));
    }
    Ok(None)
}

fn converged(lo: f64, hi: f64, tol: f64) -> bool {
    (hi - lo).abs() <= tol * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
}

/// Refine a bracket: bisection until the width is below
/// `opts.bisect_width`, then a secant iteration safeguarded by the bracket
/// (Illinois modification) down to `opts.rel_tol`.
pub fn refine<F: FnMut(f64) -> Result<f64>>(mut f: F, br: Bracket, opts: &RootOptions) -> Result<Root> {
    let (mut a, mut b, mut fa, mut fb) = (br.lo, br.hi, br.f_lo, br.f_hi);
    if a == b || fa == 0.0 {
        return Ok(Root { x: a, fx: fa, bracket: (a, a), evaluations: 0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, fx: 0.0, bracket: (b, b), evaluations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { what: "root refinement", lo: a, hi: b, samples: 2 });
    }
    let mut evals = 0usize;
    // Bisection phase.
    while (b - a).abs() > opts.bisect_width * a.abs().max(b.abs()).max(1.0) && !converged(a, b, opts.rel_tol) {
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        evals += 1;
        if fm == 0.0 {
            return Ok(Root { x: m, fx: 0.0, bracket: (m, m), evaluations: evals });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
        if evals > opts.max_iter {
            return Err(Error::NonConvergence { what: "bisection", partial: m, iterations: evals });
        }
    }
    // Illinois (regula falsi with halving) phase — secant steps that never leave the bracket.
    let mut side = 0i8;
    while !converged(a, b, opts.rel_tol) {
        let mut x = (a * fb - b * fa) / (fb - fa);
        if !(x > a.min(b) && x < a.max(b)) {
            x = 0.5 * (a + b);
        }
        let fx = f(x)?;
        evals += 1;
        if fx == 0.0 {
            return Ok(Root { x, fx, bracket: (x, x), evaluations: evals });
        }
        if fx.signum() == fb.signum() {
            b = x;
            fb = fx;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = x;
            fa = fx;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if evals > opts.max_iter {
            return Err(Error::NonConvergence { what: "secant refinement", partial: x, iterations: evals });
        }
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    // fa/fb may have been halved by the Illinois step; pick by magnitude anyway.
    let (x, fx) = if fa.abs() < fb.abs() { (a, fa) } else { (b, fb) };
    Ok(Root { x, fx, bracket: (lo, hi), evaluations: evals })
}

/// Scan `grid` for the first sign change of `f`, then refine it.
pub fn first_root<F: FnMut(f64) -> Result<f64>>(mut f: F, grid: &[f64], what: &'static str, opts: &RootOptions) -> Result<Root> {
    let br = scan(&mut f, grid)?.ok_or(Error::NoBracket {
        what,
        lo: grid.first().copied().unwrap_or(0.0),
        hi: grid.last().copied().unwrap_or(0.0),
        samples: grid.len(),
    })?;
    refine(f, br, opts)
}

/// `count` points from `a` to `b`, geometric or linear.
pub fn grid(a: f64, b: f64, count: usize, geometric: bool) -> Vec<f64> {
    if count == 1 {
        return alloc::vec![a];
    }
    (0..count)
        .map(|i| {
            let s = i as f64 / (count - 1) as f64;
            if geometric {
                a * (b / a).powf(s)
            } else {
                a + (b - a) * s
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cos_root() {
        let g = grid(0.1, 3.0, 30, false);
        let r = first_root(|x| Ok(x.cos()), &g, "cos", &RootOptions::default()).unwrap();
        assert!((r.x - core::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn first_of_several() {
        let g = grid(0.5, 20.0, 200, false);
        let r = first_root(|x| Ok(x.sin()), &g, "sin", &RootOptions::default()).unwrap();
        assert!((r.x - core::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn no_bracket_reports_error() {
        let g = grid(1.0, 2.0, 10, true);
        assert!(matches!(first_root(Ok, &g, "pos", &RootOptions::default()), Err(Error::NoBracket { .. })));
    }

    #[test]
    fn steep_function() {
        let g = grid(1e-3, 1.0, 40, true);
        let r = first_root(|x| Ok((x - 0.3).powi(3) * 1e6), &g, "cubic", &RootOptions::default()).unwrap();
        assert!((r.x - 0.3).abs() < 1e-6);
    }
}
