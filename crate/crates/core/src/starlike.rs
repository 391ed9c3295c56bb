//! Radius-of-starlikeness and starlikeness-threshold solvers for the
//! normalized families `f_{a,nu}`, `g_{a,nu}` and `h_{a,nu}`.
//!
//! Every radius equation has the shape `a^{a/2} r J'_nu(r) + C J_nu(r) = 0`
//! (or the same with `I_nu`), i.e. a Dini function with `alpha = C / a^{a/2}`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_i_x_deriv, bessel_j_real, bessel_j_reduced, eval_bessel_i};
use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::roots::{first_sign_change, refine_bracket, EquationId, RootResult};
use crate::zeros::{bessel_j_zero, dini_smallest_positive_root, j_and_deriv, modified_dini_root, DiniSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
    H,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "f",
            Family::G => "g",
            Family::H => "h",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(Family::F),
            "g" => Ok(Family::G),
            "h" => Ok(Family::H),
            other => Err(Error::InvalidConfig(format!("unknown family {other:?}, expected f, g or h"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery {
    pub a: u32,
    pub nu: f64,
    pub beta: f64,
    pub family: Family,
}

impl RadiusQuery {
    pub fn new(a: u32, nu: f64, beta: f64, family: Family) -> Result<Self> {
        let q = RadiusQuery { a, nu, beta, family };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        check_a(self.a)?;
        check_beta(self.beta)?;
        let bound = -1.0 / self.a as f64;
        if !(self.nu > bound) {
            return Err(Error::Precondition(format!("needs nu > -1/a = {bound}, got {}", self.nu)));
        }
        Ok(())
    }
}

fn check_a(a: u32) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition("a must be a positive integer".into()));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::Precondition(format!("beta must lie in [0, 1), got {beta}")));
    }
    Ok(())
}

/// `a^{a/2}` on the positive real branch.
pub fn a_scale(a: u32) -> f64 {
    let af = a as f64;
    (0.5 * af * af.ln()).exp()
}

/// `(a nu - a + 1)(a^{a/2} - beta) / (2 a^{a/2} + (a nu - a + 1)(a^{a/2} - beta)) > -1`.
pub fn condition_asum(a: u32, nu: f64, beta: f64) -> Result<bool> {
    check_a(a)?;
    let s = a_scale(a);
    let af = a as f64;
    let num = (af * nu - af + 1.0) * (s - beta);
    let den = 2.0 * s + num;
    if den == 0.0 {
        return Err(Error::DivisionByZero(format!(
            "condition denominator vanishes at a = {a}, nu = {nu}, beta = {beta}"
        )));
    }
    Ok(num / den > -1.0)
}

/// Coefficient `C` in `a^{a/2} r J'_nu(r) + C J_nu(r) = 0` for the J-type equations.
fn j_coefficient(q: &RadiusQuery) -> f64 {
    let af = q.a as f64;
    let s = a_scale(q.a);
    let nu = q.nu;
    let beta = q.beta;
    match q.family {
        Family::F => -((nu - 1.0) * (1.0 - af) * s + beta * (af * nu - af + 1.0)),
        Family::G => -((nu - 1.0) * (1.0 - af) * s - af * (1.0 - nu) + beta),
        Family::H => (s - 1.0) * (1.0 - af + af * nu) - s * nu + 2.0 * (1.0 - beta),
    }
}

/// Left-hand side of the radius equation at `r > 0`, in the equation's own scaling.
///
/// For family F with `nu < (a-1)/a` this is the modified (I) equation.
pub fn radius_defining_function(q: &RadiusQuery, r: f64) -> Result<f64> {
    q.validate()?;
    let cfg = SeriesConfig::default();
    let s = a_scale(q.a);
    let c = j_coefficient(q);
    if q.family == Family::F && uses_modified_case(q) {
        return Ok(s * bessel_i_x_deriv(q.nu, r, &cfg)? + c * eval_bessel_i(q.nu, r, &cfg)?);
    }
    let (j, dj) = j_and_deriv(q.nu, r, &cfg)?;
    Ok(s * r * dj + c * j)
}

fn uses_modified_case(q: &RadiusQuery) -> bool {
    let af = q.a as f64;
    q.nu < (af - 1.0) / af
}

fn unsupported(solver: &str, hypothesis: String) -> Error {
    Error::Unsupported(format!("{solver} radius undetermined: {hypothesis}"))
}

/// Smallest positive root of `alpha J_nu + r J'_nu` inside `(0, j_{nu,1})`.
fn smallest_root_before_first_zero(nu: f64, alpha: f64) -> Result<RootResult> {
    if nu + alpha > 0.0 {
        return dini_smallest_positive_root(&DiniSpec::new(nu, alpha));
    }
    let cfg = SeriesConfig::default();
    let first = bessel_j_zero(nu, 1)?.value;
    let reduced = |r: f64| -> Result<f64> {
        let s = bessel_j_reduced(nu, Complex64::new(r, 0.0), &cfg)?;
        Ok((alpha + nu) * s.value.re + s.w_deriv.re)
    };
    let start = 1e-6 * first;
    let f0 = reduced(start)?;
    let (lo, hi, f_lo, f_hi) = first_sign_change(reduced, start, first, f0, 256)?.ok_or_else(|| {
        Error::Bracketing(format!("no root of the Dini equation below j_{{{nu},1}} = {first} (nu + alpha = {})", nu + alpha))
    })?;
    let refined = refine_bracket(reduced, lo, hi, f_lo, f_hi, None)?;
    let (j, dj) = j_and_deriv(nu, refined.value, &cfg)?;
    Ok(RootResult {
        value: refined.value,
        residual: (alpha * j + refined.value * dj).abs(),
        bracket_lo: refined.lo,
        bracket_hi: refined.hi,
        iterations: refined.iterations,
        equation_id: EquationId::DiniJ,
    })
}

fn rescale(mut root: RootResult, scale: f64, id: EquationId) -> RootResult {
    root.residual *= scale;
    root.equation_id = id;
    root
}

/// Radius of starlikeness of order `beta` of `f_{a,nu}`.
pub fn radius_f(q: &RadiusQuery) -> Result<RootResult> {
    q.validate()?;
    if q.family != Family::F {
        return Err(Error::Precondition(format!("radius_f called with family {}", q.family)));
    }
    let af = q.a as f64;
    let s = a_scale(q.a);
    let alpha = j_coefficient(q) / s;
    let edge = (af - 1.0) / af;
    if q.nu > edge {
        let root = smallest_root_before_first_zero(q.nu, alpha)?;
        return Ok(rescale(root, s, EquationId::RadiusFBesselJ));
    }
    if q.nu == edge {
        return Err(unsupported("f", format!("nu = (a-1)/a = {edge} is excluded")));
    }
    if !condition_asum(q.a, q.nu, q.beta)? {
        return Err(unsupported(
            "f",
            format!(
                "for -1/a < nu < (a-1)/a the condition (a nu-a+1)(a^(a/2)-beta)/(2a^(a/2)+(a nu-a+1)(a^(a/2)-beta)) > -1 fails at a = {}, nu = {}, beta = {}",
                q.a, q.nu, q.beta
            ),
        ));
    }
    let root = modified_dini_root(q.nu, alpha)?;
    let cfg = SeriesConfig::default();
    let r = root.value;
    let residual = (s * bessel_i_x_deriv(q.nu, r, &cfg)? + s * alpha * eval_bessel_i(q.nu, r, &cfg)?).abs();
    Ok(RootResult { residual, equation_id: EquationId::RadiusFModifiedI, ..root })
}

/// Radius of starlikeness of order `beta` of `g_{a,nu}`.
pub fn radius_g(q: &RadiusQuery) -> Result<RootResult> {
    q.validate()?;
    if q.family != Family::G {
        return Err(Error::Precondition(format!("radius_g called with family {}", q.family)));
    }
    let af = q.a as f64;
    let s = a_scale(q.a);
    let cond = af * (q.nu - 1.0) * (s - 1.0) + s - q.beta;
    if !(cond >= 0.0) {
        return Err(unsupported(
            "g",
            format!("a(nu-1)(a^(a/2)-1) + a^(a/2) - beta >= 0 fails (value {cond})"),
        ));
    }
    let root = smallest_root_before_first_zero(q.nu, j_coefficient(q) / s)?;
    Ok(rescale(root, s, EquationId::RadiusG))
}

/// Root of the radius equation of `h_{a,nu}`. The variable is `sqrt|z|`, so
/// the disk radius is the square of the value (see [`in_disk_radius`]).
pub fn radius_h(q: &RadiusQuery) -> Result<RootResult> {
    q.validate()?;
    if q.family != Family::H {
        return Err(Error::Precondition(format!("radius_h called with family {}", q.family)));
    }
    let af = q.a as f64;
    let s = a_scale(q.a);
    let cond = (s - 1.0) * (1.0 - af + af * q.nu) + 2.0 * (1.0 - q.beta);
    if !(cond > 0.0) {
        return Err(unsupported(
            "h",
            format!("(a^(a/2)-1)(1-a+a nu) + 2(1-beta) > 0 fails (value {cond})"),
        ));
    }
    let root = smallest_root_before_first_zero(q.nu, j_coefficient(q) / s)?;
    Ok(rescale(root, s, EquationId::RadiusH))
}

pub fn radius(q: &RadiusQuery) -> Result<RootResult> {
    match q.family {
        Family::F => radius_f(q),
        Family::G => radius_g(q),
        Family::H => radius_h(q),
    }
}

/// Radius of the largest disk inside the unit disk on which the family is
/// starlike of order beta, given the solver's root.
pub fn in_disk_radius(family: Family, value: f64) -> f64 {
    match family {
        Family::F | Family::G => value.min(1.0),
        Family::H => (value * value).min(1.0),
    }
}

/// Disk radius implied by the root, not clipped to the unit disk.
pub fn disk_radius(family: Family, value: f64) -> f64 {
    match family {
        Family::F | Family::G => value,
        Family::H => value * value,
    }
}

const THRESHOLD_NU_MAX: f64 = 100.0;
const THRESHOLD_FIRST_STEP: f64 = 1e-2;
const THRESHOLD_GROWTH: f64 = 1.5;

/// `(a nu-a+1)(a^{a/2}-beta) J_nu(1) - a^{a/2} J_{nu+1}(1)`.
pub fn threshold_f_function(a: u32, beta: f64, nu: f64) -> Result<f64> {
    let cfg = SeriesConfig::default();
    let af = a as f64;
    let s = a_scale(a);
    Ok((af * nu - af + 1.0) * (s - beta) * bessel_j_real(nu, 1.0, &cfg)? - s * bessel_j_real(nu + 1.0, 1.0, &cfg)?)
}

/// `(a(nu-1)(a^{a/2}-1) + a^{a/2} - beta) J_nu(1) - a^{a/2} J_{nu+1}(1)`.
pub fn threshold_g_function(a: u32, beta: f64, nu: f64) -> Result<f64> {
    let cfg = SeriesConfig::default();
    let af = a as f64;
    let s = a_scale(a);
    Ok((af * (nu - 1.0) * (s - 1.0) + s - beta) * bessel_j_real(nu, 1.0, &cfg)? - s * bessel_j_real(nu + 1.0, 1.0, &cfg)?)
}

fn scan_threshold<F>(t: F, start: f64, id: EquationId) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut lo = start;
    let mut f_lo = t(lo)?;
    let mut step = THRESHOLD_FIRST_STEP;
    loop {
        let hi = (lo + step).min(THRESHOLD_NU_MAX);
        let f_hi = t(hi)?;
        if f_hi == 0.0 || f_hi.signum() != f_lo.signum() {
            let refined = refine_bracket(&t, lo, hi, f_lo, f_hi, None)?;
            return Ok(RootResult {
                value: refined.value,
                residual: t(refined.value)?.abs(),
                bracket_lo: refined.lo,
                bracket_hi: refined.hi,
                iterations: refined.iterations,
                equation_id: id,
            });
        }
        if hi >= THRESHOLD_NU_MAX {
            return Err(Error::Bracketing(format!(
                "no sign change of the {id} equation on ({start}, {THRESHOLD_NU_MAX}]"
            )));
        }
        lo = hi;
        f_lo = f_hi;
        step *= THRESHOLD_GROWTH;
    }
}

/// Smallest order `nu_f(a, beta)` for which `f_{a,nu}` is starlike of order
/// beta in the unit disk.
pub fn threshold_nu_f(a: u32, beta: f64) -> Result<RootResult> {
    check_a(a)?;
    check_beta(beta)?;
    let af = a as f64;
    scan_threshold(|nu| threshold_f_function(a, beta, nu), (af - 1.0) / af + 1e-6, EquationId::ThresholdF)
}

/// The order `nu` in `(-1, 0)` with `j_{nu,1} = 1`.
pub fn nu_tilde() -> Result<RootResult> {
    let f = |nu: f64| -> Result<f64> { Ok(bessel_j_zero(nu, 1)?.value - 1.0) };
    // j_{nu,1} -> 0 as nu -> -1 and j_{0,1} > 1
    let refined = refine_bracket(f, -1.0, 0.0, -1.0, f(0.0)?, None)?;
    Ok(RootResult {
        value: refined.value,
        residual: f(refined.value)?.abs(),
        bracket_lo: refined.lo,
        bracket_hi: refined.hi,
        iterations: refined.iterations,
        equation_id: EquationId::UnitFirstZeroOrder,
    })
}

/// Smallest order `nu_g(a, beta)` for which `g_{a,nu}` is starlike of order
/// beta in the unit disk, searched above `max(nu_tilde, -1/a)`.
pub fn threshold_nu_g(a: u32, beta: f64) -> Result<RootResult> {
    check_a(a)?;
    check_beta(beta)?;
    let lower = nu_tilde()?.value.max(-1.0 / a as f64);
    scan_threshold(|nu| threshold_g_function(a, beta, nu), lower + 1e-6, EquationId::ThresholdG)
}
