#[allow(unused_imports)] // needed without std; shadowed when std is linked
use num_traits::Float;


/// `ln sinh x` for `x > 0`, without overflow for large `x`.
pub fn ln_sinh(x: f64) -> f64 {
    if x > 20.0 {
        x - core::f64::consts::LN_2 + (-(-2.0 * x).exp()).ln_1p()
    } else {
        x.sinh().ln()
    }
}

/// Volume `ω_n` of the Euclidean unit ball in `ℝⁿ`.
///
/// Uses `ω_0 = 1`, `ω_1 = 2`, `ω_n = (2π/n)·ω_{n−2}`, which is exact in
/// structure for every `n` (no Gamma function evaluation).
pub fn unit_ball_volume(n: usize) -> f64 {
    let mut w = if n % 2 == 0 { 1.0 } else { 2.0 };
    let mut k = if n % 2 == 0 { 2 } else { 3 };
    while k <= n {
        w *= 2.0 * core::f64::consts::PI / k as f64;
        k += 2;
    }
    w
}

/// Double-double arithmetic, just enough for cancellation-prone series.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: e }
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        Dd { hi: p, lo: a.mul_add(b, -p) }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = Self::two_sum(self.hi, o.hi);
        let t = Self::two_sum(self.lo, o.lo);
        let s = Self::quick_two_sum(s.hi, s.lo + t.hi);
        Self::quick_two_sum(s.hi, s.lo + t.lo)
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = Self::two_prod(self.hi, o.hi);
        Self::quick_two_sum(p.hi, p.lo + (self.hi * o.lo + self.lo * o.hi))
    }

    pub fn div_f(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let p = Self::two_prod(q1, b);
        let r = Self::two_sum(self.hi, -p.hi);
        let q2 = (r.hi + (r.lo - p.lo + self.lo)) / b;
        Self::quick_two_sum(q1, q2)
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn square(x: f64) -> Dd {
        Self::two_prod(x, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_volumes() {
        let pi = core::f64::consts::PI;
        assert!((unit_ball_volume(2) - pi).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * pi / 3.0).abs() < 1e-15);
        assert!((unit_ball_volume(4) - pi * pi / 2.0).abs() < 1e-14);
    }

    #[test]
    fn ln_sinh_matches_direct_and_large() {
        assert!((ln_sinh(1.5) - 1.5f64.sinh().ln()).abs() < 1e-15);
        assert!((ln_sinh(1000.0) - (1000.0 - core::f64::consts::LN_2)).abs() < 1e-12);
    }

    #[test]
    fn dd_recovers_lost_bits() {
        let a = Dd::new(1.0).add(Dd::new(1e-20));
        let b = a.add(Dd::new(-1.0));
        assert!((b.to_f64() - 1e-20).abs() < 1e-35);
        let third = Dd::new(1.0).div_f(3.0).mul(Dd::new(3.0));
        assert!((third.to_f64() - 1.0).abs() < 1e-30);
    }
}
