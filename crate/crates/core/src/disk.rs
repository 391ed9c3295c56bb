//! The normalized functions `f_{a,nu}`, `g_{a,nu}`, `h_{a,nu}` on the complex
//! disk and a sampled check of `Re(z F'(z)/F(z)) > beta`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_j_log_deriv, GBesselParams};
use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::gamma::gamma_fn;
use crate::series::{principal_pow, reduced_series};
use crate::starlike::{a_scale, Family};
use crate::zeros::{bessel_j_zero, gbessel_smallest_positive_zero};

fn check_order(a: u32, nu: f64, bound: f64) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition("a must be a positive integer".into()));
    }
    if !(nu > bound) {
        return Err(Error::Precondition(format!("needs nu > {bound}, got {nu}")));
    }
    Ok(())
}

/// `1 + sum_{k>=1} c_k u^k`, with `u = a^a x / 4`; `x = z^2` for f and g,
/// `x = z` for h.
fn inner(a: u32, nu: f64, x: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    let params = GBesselParams::normalized_family(a, nu);
    let af = a as f64;
    let u = x * (af.powi(a as i32) * 0.25);
    Ok(reduced_series(a, params.gamma_offset(), 1.0, u, cfg)?.value)
}

/// `z (1 + sum_{k>=1} c_k z^{2k})^{1/(a nu-a+1)}` on the principal branch.
pub fn eval_f(a: u32, nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    let af = a as f64;
    check_order(a, nu, (af - 1.0) / af)?;
    let zero = gbessel_smallest_positive_zero(a, nu)?;
    if !(z.norm() < zero) {
        return Err(Error::Precondition(format!(
            "|z| = {} must stay below the zero bound {zero}",
            z.norm()
        )));
    }
    let base = inner(a, nu, z * z, cfg)?;
    Ok(z * principal_pow(base, 1.0 / (af * nu - af + 1.0))?)
}

/// `sum_{k>=0} c_k z^{2k+1}`.
pub fn eval_g(a: u32, nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_order(a, nu, -1.0 / a as f64)?;
    Ok(z * inner(a, nu, z * z, cfg)?)
}

/// `sum_{k>=0} c_k z^{k+1}`.
pub fn eval_h(a: u32, nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_order(a, nu, -1.0 / a as f64)?;
    Ok(z * inner(a, nu, z, cfg)?)
}

/// `c_k = (-1)^k Gamma(a nu+1) a^{ak} / (k! 4^k Gamma(ak+a nu+1))` for `k < n`.
pub fn normalized_coefficients(a: u32, nu: f64, n: usize) -> Result<Vec<f64>> {
    check_order(a, nu, -1.0 / a as f64)?;
    let af = a as f64;
    let g0 = gamma_fn(af * nu + 1.0)?;
    let mut out = Vec::with_capacity(n);
    let mut scale = 1.0;
    for k in 0..n {
        if k > 0 {
            scale *= -af.powi(a as i32) / (4.0 * k as f64);
        }
        out.push(scale * g0 / gamma_fn(af * k as f64 + af * nu + 1.0)?);
    }
    Ok(out)
}

/// `Re(z F'(z)/F(z)) - beta` from the closed forms in terms of
/// `L(w) = w J'_nu(w) / J_nu(w)`:
///
/// * F: `(a^{a/2}/(a nu-a+1)) (L(z) - (nu-1)(1-a))`
/// * G: `a(1-nu) + a^{a/2} (L(z) - (nu-1)(1-a))`
/// * H: `(1+a-a nu)/2 + (a^{a/2}/2) (L(sqrt z) - (nu-1)(1-a))`
///
/// For `a = 1` these are the log-derivatives of `eval_f`, `eval_g` and
/// `eval_h`; for larger `a` they are not.
pub fn starlike_functional(a: u32, nu: f64, beta: f64, z: Complex64, family: Family) -> Result<f64> {
    if a == 0 {
        return Err(Error::Precondition("a must be a positive integer".into()));
    }
    let cfg = SeriesConfig::default();
    let af = a as f64;
    let s = a_scale(a);
    let shift = (nu - 1.0) * (1.0 - af);
    let value = match family {
        Family::F => (bessel_j_log_deriv(nu, z, &cfg)? - shift) * (s / (af * nu - af + 1.0)),
        Family::G => (bessel_j_log_deriv(nu, z, &cfg)? - shift) * s + af * (1.0 - nu),
        // L is even, so the branch of the square root is immaterial
        Family::H => (bessel_j_log_deriv(nu, z.sqrt(), &cfg)? - shift) * (0.5 * s) + 0.5 * (1.0 + af - af * nu),
    };
    if !value.re.is_finite() {
        return Err(Error::LogDerivPole(format!("{z}")));
    }
    Ok(value.re - beta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_circles: usize,
    pub n_angles: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { n_circles: 32, n_angles: 720 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskReport {
    pub argmin_im: f64,
    pub argmin_re: f64,
    pub family: Family,
    /// The verdict comes from finitely many samples, not a proof.
    pub heuristic: bool,
    pub minimum: f64,
    pub radius: f64,
    pub samples: usize,
    pub verdict: Verdict,
}

/// Smallest positive zero of the Bessel factor, in the variable of `z`.
pub fn bessel_factor_zero(nu: f64, family: Family) -> Result<f64> {
    let j = bessel_j_zero(nu, 1)?.value;
    Ok(match family {
        Family::F | Family::G => j,
        Family::H => j * j,
    })
}

/// Minimum of [`starlike_functional`] over the circles
/// `|z| = radius 10^{-3 i/(n_circles-1)}` sampled at `n_angles` angles
/// (offset by half a step for H, which keeps off the negative real axis).
pub fn verify_starlike_on_disk(
    a: u32,
    nu: f64,
    beta: f64,
    radius: f64,
    grid: GridSpec,
    family: Family,
) -> Result<DiskReport> {
    if !(radius > 0.0) {
        return Err(Error::Precondition(format!("radius must be positive, got {radius}")));
    }
    if grid.n_circles == 0 || grid.n_angles == 0 {
        return Err(Error::Precondition("grid needs at least one circle and one angle".into()));
    }
    let limit = bessel_factor_zero(nu, family)?;
    if !(radius < limit) {
        return Err(Error::Precondition(format!(
            "radius {radius} reaches the Bessel factor zero {limit}"
        )));
    }
    let offset = if family == Family::H { 0.5 } else { 0.0 };
    let circles: Vec<f64> = (0..grid.n_circles)
        .map(|i| {
            if grid.n_circles == 1 {
                radius
            } else {
                radius * 10f64.powf(-3.0 * i as f64 / (grid.n_circles - 1) as f64)
            }
        })
        .collect();
    let n = grid.n_angles;
    let best = circles
        .par_iter()
        .map(|&r| -> Result<(f64, Complex64)> {
            let mut best = (f64::INFINITY, Complex64::new(r, 0.0));
            for j in 0..n {
                let theta = 2.0 * PI * (j as f64 + offset) / n as f64;
                let z = Complex64::from_polar(r, theta);
                let v = starlike_functional(a, nu, beta, z, family)?;
                if v < best.0 {
                    best = (v, z);
                }
            }
            Ok(best)
        })
        .try_reduce(
            || (f64::INFINITY, Complex64::new(0.0, 0.0)),
            |x, y| Ok(if y.0 < x.0 { y } else { x }),
        )?;
    Ok(DiskReport {
        argmin_im: best.1.im,
        argmin_re: best.1.re,
        family,
        heuristic: true,
        minimum: best.0,
        radius,
        samples: grid.n_circles * n,
        verdict: if best.0 > 0.0 { Verdict::Pass } else { Verdict::Fail },
    })
}

/// `z F'(z)/F(z)` by central differences with step `1e-6 max(1, |z|)`.
pub fn log_deriv_by_differences<F>(eval: F, z: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let h = 1e-6 * z.norm().max(1.0);
    let d = (eval(z + h)? - eval(z - h)?) / (2.0 * h);
    Ok(z * d / eval(z)?)
}
