mod format;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gbessel::disk::{verify_starlike_on_disk, DiskReport, GridSpec, Verdict};
use gbessel::starlike::{disk_radius, RadiusQuery};
use gbessel::tables::{Table, TableId, TABLE_A, TABLE_BETA};
use gbessel::{
    bessel::{eval_bessel_i_detailed, eval_bessel_j_detailed, eval_gbessel_detailed, SeriesValue},
    in_disk_radius, nu_tilde, radius, threshold_nu_f, threshold_nu_g, Family, GBesselParams, RootResult,
    SeriesConfig,
};
use gbessel::ComplexValue as Complex64;
use serde::Serialize;

use format::{json, sig, Format, Record};

#[derive(Parser)]
#[command(name = "gbessel", version, about = "Generalized Bessel functions and starlikeness radii")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Significant figures in text and CSV output.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=12))]
    digits: u8,
    /// Relative truncation tolerance of the series.
    #[arg(long, global = true, env = "GBESSEL_TOL")]
    tol: Option<f64>,
    /// Term cap of the series.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate J_nu, I_nu or aB_{b,p,c} at a point.
    Eval(EvalArgs),
    /// Radius of starlikeness of order beta.
    Radius(RadiusArgs),
    /// Smallest order nu for starlikeness of order beta in the unit disk.
    Threshold(ThresholdArgs),
    /// Recompute one of the four reference tables.
    Table(TableArgs),
    /// Sample Re(zF'/F) - beta over a disk.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Gbessel,
    Besselj,
    Besseli,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    /// Real part of the argument.
    #[arg(long, allow_hyphen_values = true)]
    z: f64,
    /// Imaginary part of the argument.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    zi: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    F,
    G,
    H,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::F => Family::F,
            FamilyArg::G => Family::G,
            FamilyArg::H => Family::H,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ThresholdFamily {
    F,
    G,
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    a: u32,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long)]
    beta: f64,
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long, value_enum)]
    family: ThresholdFamily,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    beta: f64,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    id: u8,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    a: u32,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    radius: f64,
    #[arg(long, default_value_t = 32)]
    circles: usize,
    #[arg(long, default_value_t = 720)]
    angles: usize,
}

/// Outcome of a subcommand: its rendered output and whether its checks passed.
struct Report {
    output: String,
    pass: bool,
}

type CmdResult = Result<Report, String>;

#[derive(Serialize)]
struct EvalOutput {
    function: &'static str,
    im: f64,
    last_term: f64,
    re: f64,
    terms: usize,
}

#[derive(Serialize)]
struct RadiusOutput {
    a: u32,
    beta: f64,
    bracket_hi: f64,
    bracket_lo: f64,
    disk_radius: f64,
    equation_id: String,
    family: String,
    in_disk_radius: f64,
    iterations: usize,
    nu: f64,
    residual: f64,
    value: f64,
}

#[derive(Serialize)]
struct ThresholdOutput {
    a: u32,
    beta: f64,
    bracket_hi: f64,
    bracket_lo: f64,
    equation_id: String,
    family: String,
    iterations: usize,
    nu_tilde: Option<f64>,
    residual: f64,
    value: f64,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn series_config(cli: &Cli) -> Result<SeriesConfig, String> {
    let mut cfg = SeriesConfig::default();
    if let Some(tol) = cli.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(format!("tolerance must be a positive real, got {tol}"));
        }
        cfg.rel_tol = tol;
    }
    if let Some(m) = cli.max_terms {
        cfg.max_terms = m;
    }
    cfg.validate().map_err(err)?;
    Ok(cfg)
}

fn render(format: Format, record: &Record, value: &impl Serialize) -> String {
    match format {
        Format::Text => record.text(),
        Format::Csv => record.csv(),
        Format::Json => json(value),
    }
}

fn need<T>(v: Option<T>, name: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--{name} is required for this function"))
}

fn cmd_eval(cli: &Cli, args: &EvalArgs) -> CmdResult {
    let cfg = series_config(cli)?;
    let z = Complex64::new(args.z, args.zi);
    let (name, v): (&'static str, SeriesValue) = match args.function {
        Function::Besselj => ("besselj", eval_bessel_j_detailed(need(args.nu, "nu")?, z, &cfg).map_err(err)?),
        Function::Besseli => {
            if args.zi != 0.0 {
                return Err("besseli takes a real argument".into());
            }
            ("besseli", eval_bessel_i_detailed(need(args.nu, "nu")?, args.z, &cfg).map_err(err)?)
        }
        Function::Gbessel => {
            let params = GBesselParams::new(
                need(args.a, "a")?,
                need(args.b, "b")?,
                need(args.p, "p")?,
                need(args.c, "c")?,
            )
            .map_err(err)?;
            ("gbessel", eval_gbessel_detailed(&params, z, &cfg).map_err(err)?)
        }
    };
    let d = cli.digits as usize;
    let out = EvalOutput { function: name, im: v.value.im, last_term: v.last_term, re: v.value.re, terms: v.terms };
    let mut rec = Record::new();
    rec.push("function", name);
    rec.push("re", sig(out.re, d));
    rec.push("im", sig(out.im, d));
    rec.push("terms", out.terms.to_string());
    rec.push("last_term", sig(out.last_term, d));
    Ok(Report { output: render(cli.format, &rec, &out), pass: true })
}

fn push_root(rec: &mut Record, r: &RootResult, d: usize) {
    rec.push("value", sig(r.value, d));
    rec.push("residual", sig(r.residual, d));
    rec.push("bracket_lo", sig(r.bracket_lo, d));
    rec.push("bracket_hi", sig(r.bracket_hi, d));
    rec.push("iterations", r.iterations.to_string());
    rec.push("equation_id", r.equation_id.token());
}

fn cmd_radius(cli: &Cli, args: &RadiusArgs) -> CmdResult {
    let family = Family::from(args.family);
    let q = RadiusQuery::new(args.a, args.nu, args.beta, family).map_err(err)?;
    let r = radius(&q).map_err(err)?;
    let d = cli.digits as usize;
    let out = RadiusOutput {
        a: args.a,
        beta: args.beta,
        bracket_hi: r.bracket_hi,
        bracket_lo: r.bracket_lo,
        disk_radius: disk_radius(family, r.value),
        equation_id: r.equation_id.token().into(),
        family: family.to_string(),
        in_disk_radius: in_disk_radius(family, r.value),
        iterations: r.iterations,
        nu: args.nu,
        residual: r.residual,
        value: r.value,
    };
    let mut rec = Record::new();
    rec.push("family", out.family.clone());
    rec.push("a", args.a.to_string());
    rec.push("nu", sig(args.nu, d));
    rec.push("beta", sig(args.beta, d));
    push_root(&mut rec, &r, d);
    rec.push("disk_radius", sig(out.disk_radius, d));
    rec.push("in_disk_radius", sig(out.in_disk_radius, d));
    Ok(Report { output: render(cli.format, &rec, &out), pass: true })
}

fn cmd_threshold(cli: &Cli, args: &ThresholdArgs) -> CmdResult {
    let (r, family, tilde) = match args.family {
        ThresholdFamily::F => (threshold_nu_f(args.a, args.beta).map_err(err)?, "f", None),
        ThresholdFamily::G => (
            threshold_nu_g(args.a, args.beta).map_err(err)?,
            "g",
            Some(nu_tilde().map_err(err)?.value),
        ),
    };
    let d = cli.digits as usize;
    let out = ThresholdOutput {
        a: args.a,
        beta: args.beta,
        bracket_hi: r.bracket_hi,
        bracket_lo: r.bracket_lo,
        equation_id: r.equation_id.token().into(),
        family: family.into(),
        iterations: r.iterations,
        nu_tilde: tilde,
        residual: r.residual,
        value: r.value,
    };
    let mut rec = Record::new();
    rec.push("family", family);
    rec.push("a", args.a.to_string());
    rec.push("beta", sig(args.beta, d));
    push_root(&mut rec, &r, d);
    if let Some(t) = tilde {
        rec.push("nu_tilde", sig(t, d));
    }
    Ok(Report { output: render(cli.format, &rec, &out), pass: true })
}

fn table_csv(table: &Table, digits: usize) -> String {
    let mut out = String::from("a");
    for b in TABLE_BETA {
        out.push_str(&format!(",beta={b}"));
    }
    out.push('\n');
    for a in TABLE_A {
        out.push_str(&a.to_string());
        for b in TABLE_BETA {
            let cell = table.cell(a, b).expect("full grid");
            out.push(',');
            out.push_str(&sig(cell.value, digits));
            if !cell.within_tolerance {
                out.push('*');
            }
        }
        out.push('\n');
    }
    out
}

fn cmd_table(cli: &Cli, args: &TableArgs) -> CmdResult {
    let id = TableId::from_number(args.id).map_err(err)?;
    let table = gbessel::compute_table(id).map_err(err)?;
    let body = match cli.format {
        Format::Json => json(&table.cells),
        Format::Text | Format::Csv => table_csv(&table, cli.digits as usize),
    };
    let pass = table.all_within_tolerance();
    let mut output = String::new();
    match &args.output {
        Some(path) => fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display()))?,
        None => output = body,
    }
    if !pass {
        let flagged: Vec<String> = table
            .cells
            .iter()
            .filter(|c| !c.within_tolerance)
            .map(|c| format!("a={} beta={} value {} reference {}", c.a, c.beta, c.value, c.reference))
            .collect();
        eprintln!("cells deviating from the published table: {}", flagged.join("; "));
    }
    Ok(Report { output, pass })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> CmdResult {
    let grid = GridSpec { n_circles: args.circles, n_angles: args.angles };
    let report: DiskReport =
        verify_starlike_on_disk(args.a, args.nu, args.beta, args.radius, grid, args.family.into()).map_err(err)?;
    let d = cli.digits as usize;
    let verdict = match report.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
    };
    let mut rec = Record::new();
    rec.push("family", report.family.to_string());
    rec.push("radius", sig(report.radius, d));
    rec.push("minimum", sig(report.minimum, d));
    rec.push("argmin_re", sig(report.argmin_re, d));
    rec.push("argmin_im", sig(report.argmin_im, d));
    rec.push("samples", report.samples.to_string());
    rec.push("heuristic", report.heuristic.to_string());
    rec.push("verdict", verdict);
    Ok(Report { output: render(cli.format, &rec, &report), pass: report.verdict == Verdict::Pass })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(&cli, a),
        Command::Radius(a) => cmd_radius(&cli, a),
        Command::Threshold(a) => cmd_threshold(&cli, a),
        Command::Table(a) => cmd_table(&cli, a),
        Command::Verify(a) => cmd_verify(&cli, a),
    };
    match result {
        Ok(report) => {
            print!("{}", report.output);
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
