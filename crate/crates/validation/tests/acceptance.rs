//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use gbessel::disk::{verify_starlike_on_disk, GridSpec, Verdict};
use gbessel::identities::{
    compare_product_prefactors, log_deriv_gbessel_direct, log_deriv_gbessel_normalized, recurrence_residuals,
    weierstrass_log_deriv,
};
use gbessel::starlike::{radius_defining_function, radius_f, radius_g, threshold_nu_f, Family, RadiusQuery};
use gbessel::tables::{compute_table, TableId};
use gbessel::zeros::{modified_dini_q, modified_dini_root};
use gbessel::{bessel_j_zero, nu_tilde, GBesselParams, Result, SeriesConfig};
use gbessel::bessel::bessel_j_log_deriv;
use num_complex::Complex64;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

const A: [u32; 3] = [1, 2, 3];
const BETA: [f64; 3] = [0.0, 0.5, 0.95];

const TABLE_1: [[f64; 3]; 3] = [[0.39001, 0.645715, 2.72421], [0.659908, 0.706779, 0.781815], [0.766251, 0.776181, 0.786989]];
const TABLE_2: [[f64; 3]; 3] = [[1.44678, 1.05621, 0.343848], [1.12397, 0.982365, 0.828745], [0.577726, 0.549716, 0.523133]];
const TABLE_3: [[f64; 3]; 3] = [[-0.340092, 0.122499, 9.02272], [0.39002, 0.586273, 0.772587], [0.714616, 0.751407, 0.784626]];
const TABLE_4: [[f64; 3]; 3] = [[1.68326, 1.24519, 0.410407], [1.44678, 1.1867, 0.856647], [0.939782, 0.763126, 0.549716]];
const NU_TILDE: f64 = -0.7745;

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn samples<S: Strategy>(strategy: S, n: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..n).map(|_| strategy.new_tree(&mut runner).unwrap().current()).collect()
}

/// Max deviation of a computed table from the published grid, with the worst cell.
fn table_check(id: TableId, expect: &[[f64; 3]; 3]) -> Result<(f64, String, f64)> {
    let start = Instant::now();
    let table = compute_table(id)?;
    let elapsed = start.elapsed().as_secs_f64();
    let mut worst = (0.0, String::new());
    for (i, &a) in A.iter().enumerate() {
        for (j, &beta) in BETA.iter().enumerate() {
            let got = table.cell(a, beta).expect("grid cell").value;
            let dev = (got - expect[i][j]).abs();
            if dev > worst.0 {
                worst = (dev, format!("a={a} beta={beta}: {got:.8} vs {}", expect[i][j]));
            }
        }
    }
    Ok((worst.0, worst.1, elapsed))
}

fn criterion_table(id: TableId, expect: &[[f64; 3]; 3]) -> Result<Outcome> {
    let (dev, cell, secs) = table_check(id, expect)?;
    Ok(outcome(dev <= 5e-6 && secs < 5.0, format!("max |dev| {dev:.2e} ({cell}), {secs:.2}s")))
}

fn criterion_3() -> Result<Outcome> {
    let (dev, cell, _) = table_check(TableId::ThresholdG, &TABLE_3)?;
    let t = nu_tilde()?.value;
    let tdev = (t - NU_TILDE).abs();
    Ok(outcome(
        dev <= 5e-6 && tdev <= 5e-5,
        format!("max |dev| {dev:.2e} ({cell}); nu_tilde {t:.7} vs {NU_TILDE}, |dev| {tdev:.2e}"),
    ))
}

fn criterion_4() -> Result<Outcome> {
    let (dev, cell, secs) = table_check(TableId::RadiusG, &TABLE_4)?;
    let g = radius_g(&RadiusQuery::new(2, 0.7, 0.0, Family::G)?)?.value;
    let f = radius_f(&RadiusQuery::new(1, 0.7, 0.0, Family::F)?)?.value;
    let coincide = (g - f).abs();
    Ok(outcome(
        dev <= 5e-6 && secs < 5.0 && coincide <= 1e-10,
        format!("max |dev| {dev:.2e} ({cell}); |r_g(2) - r_f(1)| {coincide:.1e}"),
    ))
}

fn criterion_5() -> Result<Outcome> {
    let j0 = bessel_j_zero(0.0, 1)?.value;
    let j07 = bessel_j_zero(0.7, 1)?.value;
    let jh = bessel_j_zero(0.5, 1)?.value;
    let pass = (j0 - 2.40483).abs() <= 1e-5 && (j07 - 3.42189).abs() <= 1e-5 && (jh - PI).abs() <= 1e-12;
    Ok(outcome(pass, format!("j_0,1 {j0:.8}, j_0.7,1 {j07:.8}, |j_1/2,1 - pi| {:.1e}", (jh - PI).abs())))
}

fn criterion_6() -> Result<Outcome> {
    let cfg = SeriesConfig::default();
    let mut lines = Vec::new();

    let tuples = samples(
        (1u32..=3, 0.5f64..3.0, 0.5f64..3.0, 0u8..=1, 0.05f64..1.0, -PI..PI),
        100,
    );
    let mut worst_rec: f64 = 0.0;
    for (a, b, p, c, r, t) in tuples {
        let params = GBesselParams::new(a, b, p, c as f64)?;
        let (r1, r2, r3) = recurrence_residuals(&params, Complex64::from_polar(r, t), &cfg)?;
        worst_rec = worst_rec.max(r1).max(r2).max(r3);
    }
    let rec_ok = worst_rec <= 1e-10;
    lines.push(format!("recurrences max {worst_rec:.1e}"));

    let mut worst_prod: f64 = 0.0;
    for (a, b, p, z) in [(2, 3.0, 1.4, 0.7), (3, 5.0, 2.1, 1.3)] {
        let rep = compare_product_prefactors(&GBesselParams::new(a, b, p, 1.0)?, Complex64::new(z, 0.0), &cfg)?;
        worst_prod = worst_prod.max(rep.half_a_minus_one.min(rep.a_minus_one_over_a));
    }
    let prod_ok = worst_prod <= 1e-12;
    lines.push(format!("product best-exponent residual {worst_prod:.2e}"));

    let points = samples((1u32..=3, 0.05f64..0.9, -PI..PI, 0.0f64..1.0), 50);
    let mut worst_reduction: f64 = 0.0;
    let mut worst_unit_a: f64 = 0.0;
    for (a, r, t, s) in points {
        let nu = -1.0 / a as f64 + 0.05 + 2.0 * s;
        // stay well inside the first zero of J_nu
        let z = Complex64::from_polar(r.min(0.5 * bessel_j_zero(nu, 1)?.value), t);
        let formula = log_deriv_gbessel_normalized(a, nu, z, &cfg)?;
        let direct = log_deriv_gbessel_direct(a, nu, z, &cfg)?;
        let rel = (formula - direct).norm() / direct.norm().max(1e-300);
        worst_reduction = worst_reduction.max(rel);
        if a == 1 {
            worst_unit_a = worst_unit_a.max(rel);
        }
    }
    let reduction_ok = worst_reduction <= 1e-10;
    lines.push(format!("log-derivative reduction max rel {worst_reduction:.2e} (a=1 only: {worst_unit_a:.1e})"));

    let mut worst_w: f64 = 0.0;
    for z in [Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.5)] {
        let w = weierstrass_log_deriv(0.7, z, 200)?;
        worst_w = worst_w.max((w - bessel_j_log_deriv(0.7, z, &cfg)?).norm());
    }
    let w_ok = worst_w <= 1e-6;
    lines.push(format!("Weierstrass n=200 |diff| {worst_w:.2e}"));

    Ok(outcome(rec_ok && prod_ok && reduction_ok && w_ok, lines.join("; ")))
}

fn criterion_7() -> Result<Outcome> {
    let grid = GridSpec::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for family in [Family::F, Family::G] {
        let j1 = bessel_j_zero(0.7, 1)?.value;
        for a in A {
            for beta in BETA {
                let q = RadiusQuery::new(a, 0.7, beta, family)?;
                let r = if family == Family::F { radius_f(&q)? } else { radius_g(&q)? }.value;
                if r + 1e-2 >= j1 {
                    continue;
                }
                checked += 1;
                let inside = verify_starlike_on_disk(a, 0.7, beta, r - 1e-3, grid, family)?;
                let outside = verify_starlike_on_disk(a, 0.7, beta, r + 1e-2, grid, family)?;
                if inside.verdict != Verdict::Pass || outside.verdict != Verdict::Fail {
                    failures.push(format!("{family} a={a} beta={beta}"));
                }
            }
        }
    }
    for a in [1, 2] {
        for beta in [0.0, 0.5] {
            let nu = threshold_nu_f(a, beta)?.value;
            checked += 1;
            let above = verify_starlike_on_disk(a, nu + 1e-3, beta, 1.0 - 1e-6, grid, Family::F)?;
            let below = verify_starlike_on_disk(a, nu - 1e-3, beta, 1.0 - 1e-6, grid, Family::F)?;
            if above.verdict != Verdict::Pass || below.verdict != Verdict::Fail {
                failures.push(format!("threshold a={a} beta={beta}"));
            }
        }
    }
    Ok(outcome(failures.is_empty(), format!("{checked} cases, failing: {failures:?}")))
}

/// First sign change of the defining function on a 1e-4 grid, bisected.
fn dense_scan_root(q: &RadiusQuery) -> Result<f64> {
    let step = 1e-4;
    let mut x = step;
    let mut fx = radius_defining_function(q, x)?;
    loop {
        let next = x + step;
        let fn_ = radius_defining_function(q, next)?;
        if fn_.signum() != fx.signum() {
            let (mut lo, mut hi, flo) = (x, next, fx);
            for _ in 0..40 {
                let mid = 0.5 * (lo + hi);
                if radius_defining_function(q, mid)?.signum() == flo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(0.5 * (lo + hi));
        }
        x = next;
        fx = fn_;
        if x > 10.0 {
            return Err(gbessel::Error::Bracketing("dense scan found no sign change".into()));
        }
    }
}

fn criterion_8() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for family in [Family::F, Family::G] {
        for a in A {
            for beta in BETA {
                let q = RadiusQuery::new(a, 0.7, beta, family)?;
                let r = if family == Family::F { radius_f(&q)? } else { radius_g(&q)? }.value;
                worst = worst.max((r - dense_scan_root(&q)?).abs());
            }
        }
    }
    let pairs = samples((-0.95f64..-0.05, 0.05f64..2.0), 10);
    let mut unique = 0;
    for &(nu, gap) in &pairs {
        let alpha = -nu - gap;
        let root = modified_dini_root(nu, alpha)?.value;
        let (lo, hi) = (root * 1e-2, root * 1e1);
        let mut changes = 0;
        let mut prev = modified_dini_q(nu, alpha, lo)?;
        for i in 1..50 {
            let r = lo * (hi / lo).powf(i as f64 / 49.0);
            let q = modified_dini_q(nu, alpha, r)?;
            if q.signum() != prev.signum() {
                changes += 1;
            }
            prev = q;
        }
        if changes == 1 {
            unique += 1;
        }
    }
    Ok(outcome(
        worst <= 1e-3 && unique == pairs.len(),
        format!("max |solver - dense scan| {worst:.1e}; single sign change {unique}/{}", pairs.len()),
    ))
}

fn criterion_9() -> Result<Outcome> {
    let betas = [0.0, 0.25, 0.5, 0.75, 0.95];
    let radii: Vec<f64> = betas
        .iter()
        .map(|&b| Ok(radius_f(&RadiusQuery::new(1, 0.7, b, Family::F)?)?.value))
        .collect::<Result<_>>()?;
    let decreasing = radii.windows(2).all(|w| w[1] < w[0]);
    let witness: Vec<f64> = A
        .iter()
        .map(|&a| Ok(radius_f(&RadiusQuery::new(a, 0.7, 0.95, Family::F)?)?.value))
        .collect::<Result<_>>()?;
    let expect = [0.343848, 0.828745, 0.523133];
    let matches = witness.iter().zip(expect).all(|(w, e)| (w - e).abs() <= 5e-6);
    let non_monotone = !(witness[0] <= witness[1] && witness[1] <= witness[2])
        && !(witness[0] >= witness[1] && witness[1] >= witness[2]);
    Ok(outcome(
        decreasing && matches && non_monotone,
        format!("radii over beta {radii:.6?}; beta=0.95 over a {witness:.6?}"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table 1 thresholds nu_f", || criterion_table(TableId::ThresholdF, &TABLE_1)),
        ("table 2 radii of f", || criterion_table(TableId::RadiusF, &TABLE_2)),
        ("table 3 thresholds nu_g and nu_tilde", criterion_3),
        ("table 4 radii of g", criterion_4),
        ("Bessel zero benchmarks", criterion_5),
        ("identity suite", criterion_6),
        ("sharpness suite", criterion_7),
        ("oracle equivalence", criterion_8),
        ("monotonicity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!("{} criterion {}: {name}: {detail}", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
