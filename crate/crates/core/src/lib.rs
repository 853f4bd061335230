//! First Dirichlet eigenvalues of geodesic balls in hyperbolic space.
//!
//! The crate bundles everything needed to compute `λ₁(B_r^κ)` in
//! `ℍⁿ(−κ²)` several independent ways and to cross-check the classical
//! estimates around it:
//!
//! * [`hypergeom2f1`] — Gauss `₂F₁` on the negative real axis for real and
//!   complex-conjugate parameter pairs, plus the positive-argument case
//!   needed by the Funk model.
//! * [`radial_sturm`] — shooting integrators for the radial equations,
//!   used as an ODE oracle.
//! * [`hyperball_eigen`] — the eigenvalue solvers (hypergeometric root,
//!   closed-form `S_k` recursion for odd dimensions, shooting).
//! * [`asymptotics`] — small/large radius expansions, the McKean, Cheng,
//!   Borisov–Freitas and Savo bounds, and extraction of expansion constants.
//! * [`mm_comparison`] — Cheng-type comparison on radial metric-measure models.
//! * [`funk_finsler`] — Funk and Klein ball computations.
//!
//! The crate is `no_std` (it needs `alloc`). Numerical kernels — an
//! embedded Runge–Kutta integrator, adaptive Gauss–Kronrod quadrature and a
//! bracketing root finder — live in [`ode`], [`quad`] and [`roots`];
//! [`selftest`] bundles the randomized invariant suites.
#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod error;
pub mod funk_finsler;
pub mod hyperball_eigen;
pub mod hypergeom2f1;
pub mod mm_comparison;
pub mod ode;
pub mod quad;
pub mod radial_sturm;
pub mod roots;
pub mod selftest;
mod special;

pub use error::{Error, Result};
pub use special::{ln_sinh, unit_ball_volume};
