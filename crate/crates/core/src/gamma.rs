//! Real gamma function.
//!
//! Lanczos approximation (g = 607/128, 15 coefficients) on `x >= 0.5`,
//! reflection below. Integer arguments up to 23 are computed as exact
//! products.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

/// Largest argument whose gamma value is finite in f64.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// `sin(pi * x)` with exact argument reduction.
pub(crate) fn sin_pi(x: f64) -> f64 {
    // reduce to [-1, 1) exactly
    let r = x - 2.0 * (0.5 * x).round();
    if r == 0.0 || r == 1.0 || r == -1.0 {
        return 0.0;
    }
    if r.abs() <= 0.25 {
        (PI * r).sin()
    } else if r > 0.75 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.75 {
        -(PI * (1.0 + r)).sin()
    } else if r > 0.0 {
        (PI * (0.5 - r)).cos()
    } else {
        -(PI * (0.5 + r)).cos()
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.trunc()
}

fn lanczos(x: f64) -> f64 {
    // Gamma(x) = Gamma(y + 1), y = x - 1
    let y = x - 1.0;
    let mut series = LANCZOS_COEF[0];
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (y + k as f64);
    }
    let t = y + LANCZOS_G + 0.5;
    // split the power so t^(y + 1/2) does not overflow near the top of the range
    let half = t.powf(0.5 * (y + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * series
}

/// Gamma function on the real line.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(x));
    }
    if x == x.trunc() && x <= 23.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return Ok(acc);
    }
    if x >= 0.5 {
        return Ok(lanczos(x));
    }
    // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    let s = sin_pi(x);
    let other = 1.0 - x;
    if other > GAMMA_MAX_ARG {
        return Ok(0.0_f64.copysign(s));
    }
    Ok(PI / (s * lanczos(other)))
}

/// `1 / Gamma(x)`, which is entire: returns 0 at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > GAMMA_MAX_ARG {
        return 0.0;
    }
    match gamma_fn(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}
