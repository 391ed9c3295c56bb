//! Structural identities of `aB_{b,p,c}`: the factorization into `a` Bessel
//! series, the two derivative recurrences and their combination, the
//! log-derivative of `aB_{2a-1, a nu-a+1, 1}(a^{a/2} z)` written through
//! `J_nu`, and the Weierstrass partial-fraction form of `z J'_nu / J_nu`.
//!
//! The factorization is exact only when `c = 0` or `a = 1`; for `a >= 2` and
//! `c != 0` it is a different function (a product of series is not the
//! series of products of coefficients). The log-derivative reduction
//! inherits that limitation. Both are still provided so the gap can be
//! measured.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bessel::{bessel_j_log_deriv, eval_gbessel, gbessel_log_deriv, gbessel_z_deriv, GBesselParams};
use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::series::principal_pow;
use crate::zeros::bessel_j_zeros;

/// Exponent of the `2 pi` prefactor in the factorized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductPrefactor {
    /// `(2 pi)^{(a-1)/2}`, the Gauss multiplication constant.
    HalfAMinusOne,
    /// `(2 pi)^{(a-1)/a}`.
    AMinusOneOverA,
}

impl ProductPrefactor {
    pub fn exponent(&self, a: u32) -> f64 {
        let af = a as f64;
        match self {
            ProductPrefactor::HalfAMinusOne => 0.5 * (af - 1.0),
            ProductPrefactor::AMinusOneOverA => (af - 1.0) / af,
        }
    }
}

/// `(2pi)^e a^{-p-b/2} (z/2)^p prod_{j=1}^a (z/(2 a^{a/2}))^{-(p+j-1)/a} B_{(b+1-a)/a, (p+j-1)/a, c}(z / a^{a/2})`.
pub fn eval_gbessel_via_product(
    params: &GBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
    prefactor: ProductPrefactor,
) -> Result<Complex64> {
    params.validate()?;
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    let a = params.a;
    let af = a as f64;
    let scale = af.powf(0.5 * af);
    let inner_b = (params.b + 1.0 - af) / af;
    let mut acc = Complex64::new((2.0 * PI).powf(prefactor.exponent(a)), 0.0)
        * af.powf(-params.p - 0.5 * params.b)
        * principal_pow(z * 0.5, params.p)?;
    for j in 1..=a {
        let order = (params.p + j as f64 - 1.0) / af;
        if !(order > -1.0) {
            return Err(Error::Precondition(format!(
                "factor order (p + {j} - 1)/a = {order} must exceed -1"
            )));
        }
        let factor = GBesselParams::new(1, inner_b, order, params.c)?;
        acc *= principal_pow(z / (2.0 * scale), -order)? * eval_gbessel(&factor, z / scale, cfg)?;
    }
    Ok(acc)
}

/// Relative mismatch of the factorized form for each prefactor choice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrefactorReport {
    pub half_a_minus_one: f64,
    pub a_minus_one_over_a: f64,
    /// The choice whose relative residual is at most `1e-12`, if any.
    pub exact: Option<ProductPrefactor>,
}

pub fn compare_product_prefactors(
    params: &GBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<PrefactorReport> {
    let direct = eval_gbessel(params, z, cfg)?;
    let rel = |p: ProductPrefactor| -> Result<f64> {
        Ok(((eval_gbessel_via_product(params, z, cfg, p)? - direct) / direct).norm())
    };
    let half = rel(ProductPrefactor::HalfAMinusOne)?;
    let root = rel(ProductPrefactor::AMinusOneOverA)?;
    let exact = if half <= 1e-12 {
        Some(ProductPrefactor::HalfAMinusOne)
    } else if root <= 1e-12 {
        Some(ProductPrefactor::AMinusOneOverA)
    } else {
        None
    };
    Ok(PrefactorReport {
        half_a_minus_one: half,
        a_minus_one_over_a: root,
        exact,
    })
}

/// Residuals of
/// (i)   `z B' = p B_p - c (z/2)^{1-a} z B_{p+a}`,
/// (ii)  `z B' = (z/a) B_{p-1} - ((2p+b-1)/a - p) B_p`,
/// (iii) `(z/a) B_{p-1} + c (z/2)^{1-a} z B_{p+a} = ((2p+b-1)/a) B_p`,
/// each divided by `max(1, |B_p(z)|)`.
pub fn recurrence_residuals(
    params: &GBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<(f64, f64, f64)> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Precondition("recurrences are checked at z != 0".into()));
    }
    let p = params.p;
    let af = params.a as f64;
    let b_p = eval_gbessel(params, z, cfg)?;
    let zb = gbessel_z_deriv(params, z, cfg)?;
    let b_lower = eval_gbessel(&params.with_p(p - 1.0), z, cfg)?;
    let b_upper = eval_gbessel(&params.with_p(p + af), z, cfg)?;
    let shift = (z * 0.5).powi(1 - params.a as i32) * z * params.c;
    let k = (2.0 * p + params.b - 1.0) / af;
    let scale = b_p.norm().max(1.0);
    let r1 = (zb - (b_p * p - shift * b_upper)).norm() / scale;
    let r2 = (zb - (z / af * b_lower - b_p * (k - p))).norm() / scale;
    let r3 = (z / af * b_lower + shift * b_upper - b_p * k).norm() / scale;
    Ok((r1, r2, r3))
}

fn check_normalized_order(a: u32, nu: f64) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition("a must be >= 1".into()));
    }
    if !(nu > -1.0 / a as f64) {
        return Err(Error::Precondition(format!("needs nu > -1/a, got {nu}")));
    }
    Ok(())
}

/// `z J_{nu-1}(z) / J_nu(z) - (2 - a) nu + 1 - a`.
///
/// Uses `z J_{nu-1} / J_nu = z J'_nu / J_nu + nu`. Equal to
/// [`log_deriv_gbessel_direct`] for `a = 1`.
pub fn log_deriv_gbessel_normalized(a: u32, nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_normalized_order(a, nu)?;
    let af = a as f64;
    let ratio = bessel_j_log_deriv(nu, z, cfg)? + nu;
    Ok(ratio - (2.0 - af) * nu + 1.0 - af)
}

/// `w B'(w) / B(w)` at `w = a^{a/2} z` for `B = aB_{2a-1, a nu-a+1, 1}`,
/// evaluated from the series itself.
pub fn log_deriv_gbessel_direct(a: u32, nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_normalized_order(a, nu)?;
    let af = a as f64;
    gbessel_log_deriv(&GBesselParams::normalized_family(a, nu), z * af.powf(0.5 * af), cfg)
}

/// `nu - sum_{n<=N} 2 z^2 / (j_{nu,n}^2 - z^2)` over the given zeros.
pub fn weierstrass_log_deriv_with_zeros(nu: f64, z: Complex64, zeros: &[f64]) -> Result<Complex64> {
    let z2 = z * z;
    let mut acc = Complex64::new(0.0, 0.0);
    for &j in zeros {
        let d = j * j - z2;
        if d.norm() <= 1e-14 * j * j {
            return Err(Error::LogDerivPole(format!("{z}")));
        }
        acc += z2 * 2.0 / d;
    }
    Ok(Complex64::new(nu, 0.0) - acc)
}

/// Partial-fraction approximation of `z J'_nu(z) / J_nu(z)` with the first
/// `n_zeros` zeros.
pub fn weierstrass_log_deriv(nu: f64, z: Complex64, n_zeros: usize) -> Result<Complex64> {
    if n_zeros == 0 {
        return Err(Error::Precondition("n_zeros must be positive".into()));
    }
    let zeros = bessel_j_zeros(nu, n_zeros)?;
    weierstrass_log_deriv_with_zeros(nu, z, &zeros)
}

/// Estimate of the omitted tail `2|z|^2 sum_{n>N} 1/(j_{nu,n}^2 - |z|^2)`,
/// taking `j_{nu,n} >= (n + nu/2 - 1/4) pi - 1`.
pub fn weierstrass_tail_estimate(nu: f64, z_abs: f64, n_zeros: usize) -> f64 {
    let z2 = z_abs * z_abs;
    let explicit = 100_000;
    let mut sum = 0.0;
    for n in (n_zeros + 1)..=(n_zeros + explicit) {
        let j = (n as f64 + 0.5 * nu - 0.25) * PI - 1.0;
        sum += 1.0 / (j * j - z2);
    }
    let last = (n_zeros + explicit) as f64 + 0.5 * nu - 0.25;
    sum += 1.0 / (PI * PI * last);
    2.0 * z2 * sum
}
