//! Zeros of `J_nu`, of the Dini functions `alpha J_nu + gamma z J'_nu`, of the
//! modified Dini equation `r I'_nu + alpha I_nu = 0`, and of the generalized
//! function behind the normalized families.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_i_log_deriv, bessel_i_x_deriv, bessel_j_reduced, eval_bessel_i, GBesselParams};
use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::gamma::gamma_fn;
use crate::roots::{first_sign_change, refine_bracket, EquationId, RootResult};
use crate::series::reduced_series;

/// The `n`-th positive zero of `J_nu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselZero {
    pub nu: f64,
    pub n: usize,
    pub value: f64,
}

/// The Dini function `r -> alpha J_nu(r) + gamma_coef r J'_nu(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiniSpec {
    pub nu: f64,
    pub alpha: f64,
    pub gamma_coef: f64,
}

impl DiniSpec {
    pub fn new(nu: f64, alpha: f64) -> Self {
        DiniSpec { nu, alpha, gamma_coef: 1.0 }
    }
}

/// Above this argument the zero finder evaluates `J_nu` by Miller's
/// backward recurrence instead of the power series.
const SERIES_LIMIT: f64 = 8.0;
const SCAN_STEP: f64 = 0.25;
const DINI_SCAN_STEPS: usize = 64;

/// `J_nu(x)` and `J_{nu+1}(x)` for real `x > 0`, `nu > -1`, by backward
/// recurrence normalized with `(x/2)^nu = sum_k (nu + 2k) Gamma(nu + k) / k! J_{nu+2k}(x)`.
pub fn bessel_j_miller(nu: f64, x: f64) -> Result<(f64, f64)> {
    if !(nu > -1.0) || !(x > 0.0) {
        return Err(Error::Precondition(format!(
            "backward recurrence needs nu > -1 and x > 0, got nu = {nu}, x = {x}"
        )));
    }
    let mut top = (x + 20.0 + 12.0 * x.cbrt()).ceil() as usize;
    if top % 2 == 1 {
        top += 1;
    }
    // weights w_{2m} / Gamma(nu + 1): w_0 = 1, w_{2m} = (nu + 2m) g_m, g_1 = 1,
    // g_{m+1} = g_m (nu + m) / (m + 1)
    let half = top / 2;
    let mut weights = vec![0.0; half + 1];
    weights[0] = 1.0;
    let mut g = 1.0;
    for (m, w) in weights.iter_mut().enumerate().skip(1) {
        if m > 1 {
            g *= (nu + m as f64 - 1.0) / m as f64;
        }
        *w = (nu + 2.0 * m as f64) * g;
    }
    let mut f_next = 0.0; // order nu + k + 1
    let mut f_here = 1e-30; // order nu + k
    let mut norm = if top.is_multiple_of(2) { weights[half] * f_here } else { 0.0 };
    let mut f1 = 0.0;
    for k in (1..=top).rev() {
        let f_prev = 2.0 * (nu + k as f64) / x * f_here - f_next;
        f_next = f_here;
        f_here = f_prev;
        let order = k - 1;
        if order % 2 == 0 {
            norm += weights[order / 2] * f_here;
        }
        if order == 0 {
            f1 = f_next;
        }
        if f_here.abs() > 1e250 {
            f_here *= 1e-250;
            f_next *= 1e-250;
            norm *= 1e-250;
        }
    }
    let scale = (0.5 * x).powf(nu) / (gamma_fn(nu + 1.0)? * norm);
    Ok((f_here * scale, f1 * scale))
}

/// `(J_nu(x), J'_nu(x))` for real `x > 0`.
pub(crate) fn j_and_deriv(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<(f64, f64)> {
    if x <= SERIES_LIMIT {
        let r = bessel_j_reduced(nu, Complex64::new(x, 0.0), cfg)?;
        let pre = (0.5 * x).powf(nu) / gamma_fn(nu + 1.0)?;
        let j = pre * r.value.re;
        let xdj = pre * (nu * r.value.re + r.w_deriv.re);
        Ok((j, xdj / x))
    } else {
        let (j, j1) = bessel_j_miller(nu, x)?;
        Ok((j, nu / x * j - j1))
    }
}

/// McMahon's leading-order estimate `(n + nu/2 - 1/4) pi`.
pub fn mcmahon_guess(nu: f64, n: usize) -> f64 {
    (n as f64 + 0.5 * nu - 0.25) * PI
}

/// Asymptotic McMahon expansion of `j_{nu,n}` through `beta^-7`.
pub fn mcmahon_expansion(nu: f64, n: usize) -> f64 {
    let beta = mcmahon_guess(nu, n);
    let mu = 4.0 * nu * nu;
    let e = 8.0 * beta;
    beta - (mu - 1.0) / e
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e.powi(5))
        - 64.0
            * (mu - 1.0)
            * (6949.0 * mu.powi(3) - 153_855.0 * mu * mu + 1_585_743.0 * mu - 6_277_237.0)
            / (105.0 * e.powi(7))
}

fn refine_j_zero(nu: f64, lo: f64, hi: f64, f_lo: f64, f_hi: f64, cfg: &SeriesConfig) -> Result<f64> {
    let newton = |x: f64| j_and_deriv(nu, x, cfg);
    let r = refine_bracket(
        |x| j_and_deriv(nu, x, cfg).map(|v| v.0),
        lo,
        hi,
        f_lo,
        f_hi,
        Some(&newton),
    )?;
    Ok(r.value)
}

/// The first `count` positive zeros of `J_nu`, in increasing order.
pub fn bessel_j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    if !(nu > -1.0) {
        return Err(Error::Precondition(format!("zeros of J_nu need nu > -1, got {nu}")));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let cfg = SeriesConfig::default();
    let horizon = mcmahon_guess(nu.max(0.0), count) + 4.0 * PI + 2.0 * nu.max(0.0) + 10.0;
    let mut zeros = Vec::with_capacity(count);
    // J_nu > 0 just above the origin
    let mut prev_x = 0.0;
    let mut prev_f = 1.0_f64;
    let mut i = 1;
    while zeros.len() < count {
        let x = i as f64 * SCAN_STEP;
        if x > horizon {
            return Err(Error::Bracketing(format!(
                "found {} of {count} zeros of J_{nu} below {horizon}",
                zeros.len()
            )));
        }
        let fx = j_and_deriv(nu, x, &cfg)?.0;
        if fx == 0.0 {
            zeros.push(x);
            prev_f = -prev_f;
        } else if fx.signum() != prev_f.signum() {
            zeros.push(refine_j_zero(nu, prev_x, x, prev_f, fx, &cfg)?);
            prev_f = fx;
        } else {
            prev_f = fx;
        }
        prev_x = x;
        i += 1;
    }
    Ok(zeros)
}

/// `j_{nu,n}`, the `n`-th positive zero of `J_nu`.
pub fn bessel_j_zero(nu: f64, n: usize) -> Result<BesselZero> {
    if n == 0 {
        return Err(Error::Precondition("zero index n starts at 1".into()));
    }
    let zeros = bessel_j_zeros(nu, n)?;
    Ok(BesselZero { nu, n, value: zeros[n - 1] })
}

/// `alpha J_nu(r) + gamma r J'_nu(r)`.
pub fn dini_value(spec: &DiniSpec, r: f64, cfg: &SeriesConfig) -> Result<f64> {
    let (j, dj) = j_and_deriv(spec.nu, r, cfg)?;
    Ok(spec.alpha * j + spec.gamma_coef * r * dj)
}

/// Smallest positive zero of a Dini function; requires `nu + alpha/gamma > 0`.
pub fn dini_smallest_positive_root(spec: &DiniSpec) -> Result<RootResult> {
    let cfg = SeriesConfig::default();
    let nu = spec.nu;
    if !(nu > -1.0) {
        return Err(Error::Precondition(format!("Dini function needs nu > -1, got {nu}")));
    }
    if spec.gamma_coef == 0.0 {
        if spec.alpha == 0.0 {
            return Err(Error::Precondition("Dini function is identically zero".into()));
        }
        let z = bessel_j_zero(nu, 1)?;
        let (j, _) = j_and_deriv(nu, z.value, &cfg)?;
        return Ok(RootResult {
            value: z.value,
            residual: (spec.alpha * j).abs(),
            bracket_lo: z.value - 1e-13,
            bracket_hi: z.value + 1e-13,
            iterations: 0,
            equation_id: EquationId::BesselZero,
        });
    }
    let alpha = spec.alpha / spec.gamma_coef;
    if !(nu + alpha > 0.0) {
        return Err(Error::Precondition(format!(
            "smallest Dini root needs nu + alpha/gamma > 0, got {}; use the modified-Bessel root",
            nu + alpha
        )));
    }
    let first = bessel_j_zero(nu, 1)?.value;
    // sign-bearing reduced form: (alpha + nu) R + w R', positive at 0+
    let reduced_dini = |r: f64| -> Result<f64> {
        let s = bessel_j_reduced(nu, Complex64::new(r, 0.0), &cfg)?;
        Ok((alpha + nu) * s.value.re + s.w_deriv.re)
    };
    let (lo, hi, f_lo, f_hi) = first_sign_change(reduced_dini, 0.0, first, nu + alpha, DINI_SCAN_STEPS)?
        .ok_or_else(|| Error::Bracketing(format!("no Dini root below j_{{{nu},1}} = {first}")))?;
    let unit = DiniSpec { nu, alpha, gamma_coef: 1.0 };
    let newton = |r: f64| -> Result<(f64, f64)> {
        let (j, dj) = j_and_deriv(nu, r, &cfg)?;
        // d/dr [alpha J + r J'] = alpha J' - (r - nu^2 / r) J
        Ok((alpha * j + r * dj, alpha * dj - (r - nu * nu / r) * j))
    };
    let refined = refine_bracket(reduced_dini, lo, hi, f_lo, f_hi, Some(&newton))?;
    let residual = (spec.gamma_coef * dini_value(&unit, refined.value, &cfg)?).abs();
    Ok(RootResult {
        value: refined.value,
        residual,
        bracket_lo: refined.lo,
        bracket_hi: refined.hi,
        iterations: refined.iterations,
        equation_id: EquationId::DiniJ,
    })
}

fn check_modified_domain(nu: f64, alpha: f64) -> Result<()> {
    if !(-1.0 < nu && nu < -alpha) {
        return Err(Error::Precondition(format!(
            "needs -1 < nu < -alpha, got nu = {nu}, alpha = {alpha}"
        )));
    }
    Ok(())
}

/// Upper bound `sqrt(-(alpha+nu)/(2+alpha+nu)) j_{nu,1}` for the purely
/// imaginary Dini zeros `+-i zeta`.
pub fn dini_imaginary_zero_bound(spec: &DiniSpec) -> Result<f64> {
    let alpha = spec.alpha / spec.gamma_coef;
    check_modified_domain(spec.nu, alpha)?;
    let denom = 2.0 + alpha + spec.nu;
    if !(denom > 0.0) {
        return Err(Error::Domain(format!("2 + alpha + nu must be positive, got {denom}")));
    }
    let j1 = bessel_j_zero(spec.nu, 1)?.value;
    Ok((-(alpha + spec.nu) / denom).sqrt() * j1)
}

/// `q(r) = r I'_nu(r) / I_nu(r) + alpha`.
pub fn modified_dini_q(nu: f64, alpha: f64, r: f64) -> Result<f64> {
    Ok(bessel_i_log_deriv(nu, r, &SeriesConfig::default())? + alpha)
}

/// Unique positive root of `r I'_nu(r) + alpha I_nu(r) = 0`, `-1 < nu < -alpha`.
pub fn modified_dini_root(nu: f64, alpha: f64) -> Result<RootResult> {
    check_modified_domain(nu, alpha)?;
    let cfg = SeriesConfig::default();
    let q = |r: f64| modified_dini_q(nu, alpha, r);
    // q -> nu + alpha < 0 at 0+, increasing, unbounded
    let mut lo = 0.0;
    let mut f_lo = nu + alpha;
    let mut hi = 1.0;
    let mut f_hi = q(hi)?;
    let mut expansions = 0;
    while f_hi < 0.0 {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = q(hi)?;
        expansions += 1;
        if expansions > 20 {
            return Err(Error::Bracketing(format!(
                "q(r) stays negative up to r = {hi} for nu = {nu}, alpha = {alpha}"
            )));
        }
    }
    let refined = refine_bracket(q, lo, hi, f_lo, f_hi, None)?;
    let r = refined.value;
    let residual = (bessel_i_x_deriv(nu, r, &cfg)? + alpha * eval_bessel_i(nu, r, &cfg)?).abs();
    Ok(RootResult {
        value: r,
        residual,
        bracket_lo: refined.lo,
        bracket_hi: refined.hi,
        iterations: refined.iterations + expansions,
        equation_id: EquationId::ModifiedDiniI,
    })
}

fn check_family_order(a: u32, nu: f64) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition("a must be >= 1".into()));
    }
    let af = a as f64;
    if !(nu > (af - 1.0) / af) {
        return Err(Error::Precondition(format!(
            "needs nu > (a-1)/a = {}, got {nu}",
            (af - 1.0) / af
        )));
    }
    Ok(())
}

/// `min_j j_{nu-1+j/a, 1} = j_{nu-1+1/a, 1}`, the zero bound for
/// `aB_{2a-1, a nu-a+1, 1}(a^{a/2} z)` obtained from its product form.
///
/// Exact for `a = 1`. For `a >= 2` the product form is only an
/// approximation and the true first zero (see [`gbessel_first_zero_direct`])
/// lies further out, so this value acts as a conservative bound.
pub fn gbessel_smallest_positive_zero(a: u32, nu: f64) -> Result<f64> {
    check_family_order(a, nu)?;
    let af = a as f64;
    let mut best = f64::INFINITY;
    for j in 1..=a {
        best = best.min(bessel_j_zero(nu - 1.0 + j as f64 / af, 1)?.value);
    }
    Ok(best)
}

/// First positive zero of `r -> aB_{2a-1, a nu-a+1, 1}(a^{a/2} r)` found by
/// scanning the series directly.
pub fn gbessel_first_zero_direct(a: u32, nu: f64) -> Result<f64> {
    check_family_order(a, nu)?;
    let cfg = SeriesConfig::default();
    let params = GBesselParams::normalized_family(a, nu);
    let af = a as f64;
    let scale = af.powf(0.5 * af);
    // R(u) with u = (a^{a/2} r / 2)^2, positive at 0
    let reduced = |r: f64| -> Result<f64> {
        let u = 0.25 * scale * scale * r * r;
        Ok(reduced_series(a, params.gamma_offset(), 1.0, Complex64::new(u, 0.0), &cfg)?.value.re)
    };
    let (lo, hi, f_lo, f_hi) = first_sign_change(reduced, 0.0, 12.0, 1.0, 480)?
        .ok_or_else(|| Error::Bracketing(format!("no zero of the a = {a} series below r = 12")))?;
    Ok(refine_bracket(reduced, lo, hi, f_lo, f_hi, None)?.value)
}
