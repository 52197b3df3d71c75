//! Scalar bracketing helpers shared by the tangency, threshold and
//! intermediate-state searches.

/// Bisects `[lo, hi]` (with `f(lo)`, `f(hi)` of opposite sign) until the
/// endpoints are adjacent floats or `f` vanishes. Returns the final bracket
/// with its function values.
pub(crate) fn bisect<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    mut f_hi: f64,
) -> Bracket {
    debug_assert!(f_lo.signum() != f_hi.signum() || f_lo == 0.0 || f_hi == 0.0);
    for _ in 0..2100 {
        if f_lo == 0.0 {
            return Bracket { lo, hi: lo, f_lo, f_hi: f_lo };
        }
        if f_hi == 0.0 {
            return Bracket { lo: hi, hi, f_lo: f_hi, f_hi };
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 || f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Bracket { lo, hi, f_lo, f_hi }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Endpoint with the smaller residual.
    pub fn best(&self) -> (f64, f64) {
        if self.f_lo.abs() <= self.f_hi.abs() {
            (self.lo, self.f_lo)
        } else {
            (self.hi, self.f_hi)
        }
    }

    /// One Newton step from the best endpoint, kept only if it stays inside
    /// the bracket and lowers the residual.
    pub fn newton_polish<F, D>(&self, mut f: F, mut df: D) -> (f64, f64)
    where
        F: FnMut(f64) -> f64,
        D: FnMut(f64) -> f64,
    {
        let (x, fx) = self.best();
        let slope = df(x);
        if fx == 0.0 || slope == 0.0 || !slope.is_finite() {
            return (x, fx);
        }
        let candidate = x - fx / slope;
        let (a, b) = (self.lo.min(self.hi), self.lo.max(self.hi));
        if candidate >= a && candidate <= b {
            let fc = f(candidate);
            if fc.abs() < fx.abs() {
                return (candidate, fc);
            }
        }
        (x, fx)
    }
}

/// Number of sign changes of `f` sampled on `pieces` equal subintervals of `[a, b]`.
pub(crate) fn count_sign_changes<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, pieces: usize) -> usize {
    let mut prev = f(a);
    let mut changes = 0;
    for k in 1..=pieces {
        let x = if k == pieces { b } else { a + (b - a) * k as f64 / pieces as f64 };
        let cur = f(x);
        if cur != 0.0 && prev != 0.0 && cur.signum() != prev.signum() {
            changes += 1;
        }
        if cur != 0.0 {
            prev = cur;
        }
    }
    changes
}
