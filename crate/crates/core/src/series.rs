//! The power-series kernel shared by J, I and the generalized function.
//!
//! Every series in this crate has the shape
//! `(w/2)^p / Gamma(s) * R(u)` with `u = (w/2)^2` and the reduced series
//!
//! ```text
//! R(u) = sum_k Gamma(s) (-c)^k u^k / (k! Gamma(a k + s)),   R(0) = 1.
//! ```
//!
//! `R` depends on `w` only through `u`, so it carries no branch.

use num_complex::Complex64;

use crate::config::SeriesConfig;
use crate::error::{Error, Result};

/// Outcome of summing the reduced series.
#[derive(Debug, Clone, Copy)]
pub struct ReducedSum {
    /// `R(u)`.
    pub value: Complex64,
    /// `w dR/dw = sum_k 2k t_k`.
    pub w_deriv: Complex64,
    /// Number of terms summed, including `k = 0`.
    pub terms: usize,
    /// Magnitude of the last term added.
    pub last_term: f64,
}

impl ReducedSum {
    /// `w R'(w) / R(w)`.
    pub fn log_deriv(&self) -> Complex64 {
        self.w_deriv / self.value
    }
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.trunc()
}

/// Reduced series for family index `a`, gamma offset `s`, coefficient `c`,
/// at `u = (w/2)^2`.
pub fn reduced_series(
    a: u32,
    s: f64,
    c: f64,
    u: Complex64,
    cfg: &SeriesConfig,
) -> Result<ReducedSum> {
    cfg.validate()?;
    if a == 0 {
        return Err(Error::Precondition("family index a must be >= 1".into()));
    }
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(s));
    }
    let af = a as f64;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut w_deriv = Complex64::new(0.0, 0.0);
    let mut prev_mag = 1.0_f64;
    let mut max_mag = 1.0_f64;
    let step = u * (-c);
    for k in 1..cfg.max_terms {
        let kf = k as f64;
        // Gamma(a k + s) / Gamma(a (k-1) + s) = prod_{m<a} (a (k-1) + s + m)
        let base = af * (kf - 1.0) + s;
        let mut denom = kf;
        for m in 0..a {
            denom *= base + m as f64;
        }
        term = term * step / denom;
        sum += term;
        w_deriv += term * (2.0 * kf);
        let mag = term.norm();
        max_mag = max_mag.max(mag);
        let floor = sum.norm().max(f64::EPSILON * max_mag);
        if mag <= cfg.rel_tol * floor && mag <= prev_mag {
            return Ok(ReducedSum {
                value: sum,
                w_deriv,
                terms: k + 1,
                last_term: mag,
            });
        }
        if !mag.is_finite() {
            return Err(Error::NonConvergence(k + 1));
        }
        prev_mag = mag;
    }
    Err(Error::NonConvergence(cfg.max_terms))
}

/// Principal branch of `z^p`: `exp(p Log z)`, integer powers taken exactly.
pub fn principal_pow(z: Complex64, p: f64) -> Result<Complex64> {
    if p == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let integer = p == p.trunc() && p.abs() < i32::MAX as f64;
    if z == Complex64::new(0.0, 0.0) {
        return if p > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::SingularAtOrigin(p))
        };
    }
    if integer {
        return Ok(z.powi(p as i32));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCut);
    }
    Ok((z.ln() * p).exp())
}
