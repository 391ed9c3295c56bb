//! Series evaluation of `J_nu`, `I_nu` and the generalized Bessel function
//! `aB_{b,p,c}(z) = sum_k (-c)^k / (k! Gamma(a k + p + (b+1)/2)) (z/2)^(2k+p)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::gamma::gamma_fn;
use crate::series::{is_nonpositive_integer, principal_pow, reduced_series, ReducedSum};

/// Complex argument and value type.
pub type ComplexValue = Complex64;

/// Parameters `(a, b, p, c)` of `aB_{b,p,c}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GBesselParams {
    pub a: u32,
    pub b: f64,
    pub p: f64,
    pub c: f64,
}

impl GBesselParams {
    pub fn new(a: u32, b: f64, p: f64, c: f64) -> Result<Self> {
        let params = GBesselParams { a, b, p, c };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a == 0 {
            return Err(Error::Precondition("a must be >= 1".into()));
        }
        if !(self.b.is_finite() && self.p.is_finite() && self.c.is_finite()) {
            return Err(Error::Precondition("b, p, c must be finite".into()));
        }
        if is_nonpositive_integer(self.gamma_offset()) {
            return Err(Error::Pole(self.gamma_offset()));
        }
        Ok(())
    }

    /// `J_nu` as `1B_{1,nu,1}`.
    pub fn bessel_j(nu: f64) -> Self {
        GBesselParams { a: 1, b: 1.0, p: nu, c: 1.0 }
    }

    /// `I_nu` as `1B_{1,nu,-1}`.
    pub fn bessel_i(nu: f64) -> Self {
        GBesselParams { a: 1, b: 1.0, p: nu, c: -1.0 }
    }

    /// `aB_{2a-1, a nu - a + 1, 1}`, the function behind the normalized families.
    pub fn normalized_family(a: u32, nu: f64) -> Self {
        let af = a as f64;
        GBesselParams {
            a,
            b: 2.0 * af - 1.0,
            p: af * nu - af + 1.0,
            c: 1.0,
        }
    }

    pub fn with_p(self, p: f64) -> Self {
        GBesselParams { p, ..self }
    }

    /// The gamma argument at `k = 0`: `p + (b + 1)/2`.
    pub fn gamma_offset(&self) -> f64 {
        self.p + 0.5 * (self.b + 1.0)
    }
}

/// A series value together with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms: usize,
    pub last_term: f64,
}

fn reduced(params: &GBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<ReducedSum> {
    let half = z * 0.5;
    reduced_series(params.a, params.gamma_offset(), params.c, half * half, cfg)
}

fn prefactor(params: &GBesselParams, z: Complex64) -> Result<Complex64> {
    let s = params.gamma_offset();
    let g = gamma_fn(s)?;
    Ok(principal_pow(z * 0.5, params.p)? / g)
}

/// `aB_{b,p,c}(z)` with truncation diagnostics.
pub fn eval_gbessel_detailed(
    params: &GBesselParams,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesValue> {
    params.validate()?;
    let r = reduced(params, z, cfg)?;
    let pre = prefactor(params, z)?;
    Ok(SeriesValue {
        value: pre * r.value,
        terms: r.terms,
        last_term: r.last_term,
    })
}

/// `aB_{b,p,c}(z)`, principal branch of `(z/2)^p`.
pub fn eval_gbessel(params: &GBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    eval_gbessel_detailed(params, z, cfg).map(|v| v.value)
}

/// `z d/dz aB_{b,p,c}(z)` by term-wise differentiation.
pub fn gbessel_z_deriv(params: &GBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    params.validate()?;
    let r = reduced(params, z, cfg)?;
    if z == Complex64::new(0.0, 0.0) {
        // only the k = 0 term survives: p (z/2)^p / Gamma(s)
        if params.p == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Ok(prefactor(params, z)? * params.p);
    }
    let pre = prefactor(params, z)?;
    Ok(pre * (r.value * params.p + r.w_deriv))
}

/// `z B'(z) / B(z) = p + w R'(w)/R(w)`, free of the `(z/2)^p` branch.
pub fn gbessel_log_deriv(params: &GBesselParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    params.validate()?;
    let r = reduced(params, z, cfg)?;
    log_deriv_from(params.p, &r, z)
}

fn log_deriv_from(p: f64, r: &ReducedSum, z: Complex64) -> Result<Complex64> {
    let v = r.log_deriv() + p;
    if r.value.norm() == 0.0 || !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::LogDerivPole(format!("{z}")));
    }
    Ok(v)
}

fn negative_integer_order(nu: f64) -> Option<(f64, f64)> {
    if nu < 0.0 && nu == nu.trunc() {
        let n = -nu;
        let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        Some((n, sign))
    } else {
        None
    }
}

/// `J_nu(z)` with truncation diagnostics.
pub fn eval_bessel_j_detailed(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    if !nu.is_finite() {
        return Err(Error::Precondition("order must be finite".into()));
    }
    if let Some((n, sign)) = negative_integer_order(nu) {
        // J_{-n} = (-1)^n J_n
        let mut v = eval_gbessel_detailed(&GBesselParams::bessel_j(n), z, cfg)?;
        v.value *= sign;
        return Ok(v);
    }
    eval_gbessel_detailed(&GBesselParams::bessel_j(nu), z, cfg)
}

/// Bessel function of the first kind `J_nu(z)`.
pub fn eval_bessel_j(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    eval_bessel_j_detailed(nu, z, cfg).map(|v| v.value)
}

/// `J_nu(x)` for real `x >= 0`.
pub fn bessel_j_real(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::Domain(format!("real evaluation needs x >= 0, got {x}")));
    }
    Ok(eval_bessel_j(nu, Complex64::new(x, 0.0), cfg)?.re)
}

/// `J'_nu(z)` from `z J'_nu(z) = z J_{nu-1}(z) - nu J_nu(z)`.
pub fn eval_bessel_j_deriv(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    if let Some((n, sign)) = negative_integer_order(nu) {
        return Ok(eval_bessel_j_deriv(n, z, cfg)? * sign);
    }
    if z == Complex64::new(0.0, 0.0) {
        // leading term (z/2)^nu / Gamma(nu + 1)
        return if nu == 0.0 || nu > 1.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else if nu == 1.0 {
            Ok(Complex64::new(0.5, 0.0))
        } else {
            Err(Error::SingularAtOrigin(nu))
        };
    }
    let lower = eval_bessel_j(nu - 1.0, z, cfg)?;
    let here = eval_bessel_j(nu, z, cfg)?;
    Ok(lower - here * nu / z)
}

/// `J'_nu` by term-wise differentiation of the series (independent of the
/// recurrence route).
pub fn bessel_j_deriv_termwise(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return eval_bessel_j_deriv(nu, z, cfg);
    }
    Ok(gbessel_z_deriv(&GBesselParams::bessel_j(nu), z, cfg)? / z)
}

/// `z J'_nu(z) / J_nu(z)` for `nu > -1`, computed from the even reduced
/// series so it is valid on the whole plane, negative axis included.
pub fn bessel_j_log_deriv(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    if !(nu > -1.0) {
        return Err(Error::Precondition(format!("log-derivative needs nu > -1, got {nu}")));
    }
    gbessel_log_deriv(&GBesselParams::bessel_j(nu), z, cfg)
}

/// Components of the J series kept in reduced form:
/// `J_nu(z) = (z/2)^nu / Gamma(nu+1) * value` and `z J'_nu(z) = (z/2)^nu / Gamma(nu+1) * (nu value + w_deriv)`.
pub fn bessel_j_reduced(nu: f64, z: Complex64, cfg: &SeriesConfig) -> Result<ReducedSum> {
    if !(nu > -1.0) {
        return Err(Error::Precondition(format!("reduced series needs nu > -1, got {nu}")));
    }
    reduced(&GBesselParams::bessel_j(nu), z, cfg)
}

/// Modified Bessel function `I_nu(x)` with diagnostics, `x >= 0`, `nu > -1`.
pub fn eval_bessel_i_detailed(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    if !(x >= 0.0) {
        return Err(Error::Precondition(format!("I_nu needs x >= 0, got {x}")));
    }
    if !(nu > -1.0) {
        return Err(Error::Precondition(format!("I_nu needs nu > -1, got {nu}")));
    }
    eval_gbessel_detailed(&GBesselParams::bessel_i(nu), Complex64::new(x, 0.0), cfg)
}

/// Modified Bessel function of the first kind `I_nu(x)`.
pub fn eval_bessel_i(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    eval_bessel_i_detailed(nu, x, cfg).map(|v| v.value.re)
}

/// `x I'_nu(x)`, via term-wise differentiation.
pub fn bessel_i_x_deriv(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    eval_bessel_i(nu, x, cfg)?;
    Ok(gbessel_z_deriv(&GBesselParams::bessel_i(nu), Complex64::new(x, 0.0), cfg)?.re)
}

/// `x I'_nu(x) / I_nu(x)`.
pub fn bessel_i_log_deriv(nu: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !(nu > -1.0) || !(x >= 0.0) {
        return Err(Error::Precondition(format!(
            "I_nu log-derivative needs nu > -1 and x >= 0, got nu = {nu}, x = {x}"
        )));
    }
    Ok(gbessel_log_deriv(&GBesselParams::bessel_i(nu), Complex64::new(x, 0.0), cfg)?.re)
}
