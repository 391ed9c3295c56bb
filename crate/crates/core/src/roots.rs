//! Bracketed root refinement and the `RootResult` record every solver returns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which defining equation a root satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationId {
    /// `J_nu(r) = 0`.
    BesselZero,
    /// `alpha J_nu(r) + gamma r J'_nu(r) = 0`.
    DiniJ,
    /// `r I'_nu(r) + alpha I_nu(r) = 0`.
    ModifiedDiniI,
    /// Radius of `f_{a,nu}`, J case.
    RadiusFBesselJ,
    /// Radius of `f_{a,nu}`, modified (I) case.
    RadiusFModifiedI,
    /// Radius of `g_{a,nu}`.
    RadiusG,
    /// Radius of `h_{a,nu}`.
    RadiusH,
    /// Starlikeness threshold nu_f(a, beta).
    ThresholdF,
    /// Starlikeness threshold nu_g(a, beta).
    ThresholdG,
    /// The order nu with `j_{nu,1} = 1`.
    UnitFirstZeroOrder,
}

impl EquationId {
    pub fn token(&self) -> &'static str {
        match self {
            EquationId::BesselZero => "bessel-zero",
            EquationId::DiniJ => "dini-j",
            EquationId::ModifiedDiniI => "modified-dini-i",
            EquationId::RadiusFBesselJ => "radius-f-bessel-j",
            EquationId::RadiusFModifiedI => "radius-f-modified-i",
            EquationId::RadiusG => "radius-g",
            EquationId::RadiusH => "radius-h",
            EquationId::ThresholdF => "threshold-f",
            EquationId::ThresholdG => "threshold-g",
            EquationId::UnitFirstZeroOrder => "unit-first-zero-order",
        }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A solved root with its certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub value: f64,
    /// Absolute residual of the defining equation at `value`.
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
    pub equation_id: EquationId,
}

/// Output of `refine_bracket`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

pub const BISECTION_WIDTH: f64 = 1e-13;
const POLISH_STEPS: usize = 3;

/// Bisection down to `BISECTION_WIDTH`, then three Newton polish steps that
/// fall back to bisection whenever Newton would leave the bracket.
///
/// `f_lo` and `f_hi` are the signs-bearing values at the endpoints; they
/// may be supplied instead of evaluated (the lower end is often a limit).
/// `newton`, if given, returns `(f(x), f'(x))`; otherwise a secant step on
/// the final bracket is used.
pub fn refine_bracket<F>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    mut f_hi: f64,
    newton: Option<&dyn Fn(f64) -> Result<(f64, f64)>>,
) -> Result<Refined>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) {
        return Err(Error::Bracketing(format!("empty bracket [{lo}, {hi}]")));
    }
    if f_lo.signum() == f_hi.signum() && f_lo != 0.0 && f_hi != 0.0 {
        return Err(Error::Bracketing(format!(
            "no sign change on [{lo}, {hi}]: f = {f_lo}, {f_hi}"
        )));
    }
    let mut iterations = 0;
    while hi - lo > BISECTION_WIDTH * hi.abs().max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        iterations += 1;
        if fm == 0.0 {
            return Ok(Refined { value: mid, lo, hi, iterations });
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
        if iterations > 400 {
            break;
        }
    }
    // start the polish from the secant point of the final bracket
    let mut x = if f_hi != f_lo {
        lo - f_lo * (hi - lo) / (f_hi - f_lo)
    } else {
        0.5 * (lo + hi)
    };
    if !(x > lo && x < hi) {
        x = 0.5 * (lo + hi);
    }
    if let Some(nf) = newton {
        for _ in 0..POLISH_STEPS {
            let (fx, dfx) = nf(x)?;
            iterations += 1;
            if fx == 0.0 || dfx == 0.0 || !dfx.is_finite() {
                break;
            }
            let next = x - fx / dfx;
            x = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        }
    }
    // the reported bracket must strictly contain the value
    if !(x > lo) {
        lo = x - f64::EPSILON * x.abs().max(1.0);
    }
    if !(x < hi) {
        hi = x + f64::EPSILON * x.abs().max(1.0);
    }
    Ok(Refined { value: x, lo, hi, iterations })
}

/// First sign change of `f` on the uniform grid `lo + i (hi - lo) / steps`,
/// `i = 1..=steps`, given `f`'s sign-bearing value just above `lo`.
pub fn first_sign_change<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    f_lo: f64,
    steps: usize,
) -> Result<Option<(f64, f64, f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut prev_x = lo;
    let mut prev_f = f_lo;
    for i in 1..=steps {
        let x = lo + (hi - lo) * i as f64 / steps as f64;
        let fx = f(x)?;
        if fx == 0.0 || fx.signum() != prev_f.signum() {
            return Ok(Some((prev_x, x, prev_f, fx)));
        }
        prev_x = x;
        prev_f = fx;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refines_simple_root() {
        let f = |x: f64| Ok(x * x - 2.0);
        let d = |x: f64| Ok((x * x - 2.0, 2.0 * x));
        let r = refine_bracket(f, 0.0, 2.0, -2.0, 2.0, Some(&d)).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() < 1e-15);
        assert!(r.lo < r.value && r.value < r.hi);
    }

    #[test]
    fn refines_without_derivative() {
        let r = refine_bracket(|x: f64| Ok(x.cos()), 1.0, 2.0, 1f64.cos(), 2f64.cos(), None).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn keeps_the_bracketed_root() {
        // roots at 1 and 3; bracket only contains 1, so Newton must not jump to 3
        let f = |x: f64| Ok((x - 1.0) * (x - 3.0));
        let d = |x: f64| Ok(((x - 1.0) * (x - 3.0), 2.0 * x - 4.0));
        let r = refine_bracket(f, 0.0, 1.9, 3.0, -0.99, Some(&d)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_no_sign_change() {
        let err = refine_bracket(|x: f64| Ok(x * x + 1.0), -1.0, 1.0, 2.0, 2.0, None).unwrap_err();
        assert!(matches!(err, Error::Bracketing(_)));
    }

    #[test]
    fn scan_finds_first_change() {
        let got = first_sign_change(|x: f64| Ok(x.sin()), 0.5, 10.0, 1.0, 64).unwrap().unwrap();
        assert!(got.0 < std::f64::consts::PI && std::f64::consts::PI <= got.1);
        assert!(first_sign_change(|x: f64| Ok(x + 1.0), 0.0, 1.0, 1.0, 8).unwrap().is_none());
    }
}
