//! Command-line front end. Every report embeds the resolved run configuration.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::berezin::{
    berezin_operator, berezin_quadrature, berezin_series, commutator_compactness_indicator,
    decay_profile, dyadic_schedule, harmonic_sum_boundary_quantity, invariant_laplacian,
    is_reliable, localization_norm, reliable_radius, ApproachPath, BerezinConfig, DecayProfile,
    FdPolicy, SampleFlag, ScalarField,
};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::operator::{
    toeplitz_exact, toeplitz_quadrature, unitary_uz, uz_column_tails, TruncatedOperator,
};
use crate::report::{format_float, to_json_string};
use crate::suite::{run_suite, SuiteConfig};
use crate::symbol::{
    parse_complex, parse_complex_list, AnalyticSymbol, BlaschkeProduct, HarmonicProductSum,
    MonomialSymbol,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNRELIABLE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "bergman-lab",
    version,
    about = "Berezin transforms and Toeplitz truncations on the Bergman space of the disk"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CommonArgs {
    /// Truncation dimension N.
    #[arg(long, global = true, default_value_t = 64)]
    pub trunc: usize,
    /// Radial Gauss-Legendre nodes.
    #[arg(long, global = true, default_value_t = 80)]
    pub nr: usize,
    /// Angular nodes.
    #[arg(long, global = true, default_value_t = 256)]
    pub ntheta: usize,
    /// Series and reliable-radius tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Finite-difference step scale h0 (h = h0 (1 - |z|)).
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub fd_step: f64,
    /// Richardson extrapolation of finite differences.
    #[arg(long, global = true)]
    pub richardson: bool,
    /// Verdict threshold on the final path sample.
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub threshold: f64,
    /// Exit with status 3 when any sample is flagged unreliable.
    #[arg(long, global = true)]
    pub strict: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Series,
    Quadrature,
    Operator,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixRoute {
    Exact,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecayField {
    /// `u~ - u`
    FixedPoint,
    /// `(1 - |z|^2)^2 (Delta u~)(z)`
    InvariantLaplacian,
    /// `||(u - u(z)) k_z||`
    Localization,
    /// `(1 - |z|^2)^2 (Delta u)(z)` for `u` given by `--product`
    BoundaryLaplacian,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PathArgs {
    /// Number of dyadic radii 1 - 2^-k, k = 1..K.
    #[arg(long, default_value_t = 10)]
    pub k: u32,
    /// Boundary angle.
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Nontangential aperture in [0, pi/2); radial when absent.
    #[arg(long)]
    pub aperture: Option<f64>,
}

impl PathArgs {
    fn resolve(&self) -> Result<(ApproachPath, Vec<f64>)> {
        if self.k == 0 {
            return Err(Error::Parse("--k must be at least 1".into()));
        }
        let path = match self.aperture {
            Some(a) => ApproachPath::nontangential(self.theta, a)?,
            None => ApproachPath::radial(self.theta),
        };
        let schedule = dyadic_schedule(self.k);
        path.validate(&schedule)?;
        Ok((path, schedule))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Berezin transform of a polynomial symbol at a list of points.
    Berezin {
        /// Polynomial symbol as `j,k:c` terms joined by `;`, e.g. `1,1:1` for |w|^2.
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        /// Comma-separated points such as `0,0.3+0.2i`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
    },
    /// Truncated Toeplitz matrix of a symbol.
    Toeplitz {
        /// Polynomial symbol as `j,k:c` terms joined by `;`, e.g. `1,1:1` for |w|^2.
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(long, value_enum, default_value_t = MatrixRoute::Exact)]
        route: MatrixRoute,
    },
    /// Truncated Moebius unitary U_z with its column tails.
    Uz {
        /// Point of the disk, e.g. `0.5` or `0.3-0.1i`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Seeded identity batteries; exit 4 if any fails.
    IdentitySuite {
        /// Comma-separated battery names.
        #[arg(long)]
        only: Option<String>,
        /// Truncation for the batteries (overrides --trunc).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
    /// Boundary-decay evidence for compactness of [T_conj(f), T_g].
    Commutator {
        /// Analytic polynomial symbol f (terms `j,0:c`).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "blaschke_f")]
        f: Option<String>,
        /// Analytic polynomial symbol g, or `same` to reuse f.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "blaschke_g")]
        g: Option<String>,
        /// Comma-separated zeros of a Blaschke product f.
        #[arg(long, allow_hyphen_values = true)]
        blaschke_f: Option<String>,
        /// Comma-separated zeros of a Blaschke product g, or `same`.
        #[arg(long, allow_hyphen_values = true)]
        blaschke_g: Option<String>,
        #[command(flatten)]
        path: PathArgs,
    },
    /// Decay profile of a field built from a symbol along a boundary path.
    Decay {
        /// Polynomial symbol; use --product instead for products of harmonic factors.
        #[arg(long, allow_hyphen_values = true)]
        symbol: Option<String>,
        /// Harmonic factors joined by `*`; repeat for a sum of products.
        #[arg(long, allow_hyphen_values = true)]
        product: Vec<String>,
        #[arg(long, value_enum, default_value_t = DecayField::FixedPoint)]
        field: DecayField,
        #[command(flatten)]
        path: PathArgs,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.common, &outcome.text) {
                eprintln!("error: {e}");
                return EXIT_FAILURE;
            }
            for line in &outcome.warnings {
                eprintln!("warning: {line}");
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::OutsideDisk(_)
        | Error::NotAnalytic(_)
        | Error::NotHarmonic(_)
        | Error::Config(_)
        | Error::InvalidDimension { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

struct Outcome {
    text: String,
    code: i32,
    warnings: Vec<String>,
}

fn emit(common: &CommonArgs, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn berezin_config(common: &CommonArgs) -> Result<BerezinConfig> {
    let config = BerezinConfig {
        dim: common.trunc,
        tol: common.tol,
        n_radial: common.nr,
        n_angular: common.ntheta,
        fd: FdPolicy {
            h0: common.fd_step,
            richardson: common.richardson,
        },
        threshold: common.threshold,
    };
    config.validate()?;
    Ok(config)
}

#[derive(Serialize)]
struct RunConfig<'a> {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    berezin: &'a BerezinConfig,
    format: Format,
    strict: bool,
    out: Option<String>,
}

fn run_config<'a>(
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    berezin: &'a BerezinConfig,
    common: &CommonArgs,
) -> RunConfig<'a> {
    RunConfig {
        command,
        inputs,
        berezin,
        format: common.format,
        strict: common.strict,
        out: common.out.as_ref().map(|p| p.display().to_string()),
    }
}

fn config_comment(config: &RunConfig<'_>) -> Result<String> {
    Ok(format!("# config: {}\n", serde_json::to_string(config)?))
}

fn parse_points(text: &str) -> Result<Vec<DiskPoint>> {
    parse_complex_list(text)?
        .into_iter()
        .map(DiskPoint::new)
        .collect()
}

fn strict_code(common: &CommonArgs, unreliable: bool) -> i32 {
    if common.strict && unreliable {
        EXIT_UNRELIABLE
    } else {
        EXIT_OK
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Berezin { symbol, z, route } => cmd_berezin(common, symbol, z, *route),
        Command::Toeplitz { symbol, route } => cmd_toeplitz(common, symbol, *route),
        Command::Uz { z } => cmd_uz(common, z),
        Command::IdentitySuite { only, n, seed } => {
            cmd_identity_suite(common, only.as_deref(), *n, *seed)
        }
        Command::Commutator {
            f,
            g,
            blaschke_f,
            blaschke_g,
            path,
        } => cmd_commutator(
            common,
            f.as_deref(),
            g.as_deref(),
            blaschke_f.as_deref(),
            blaschke_g.as_deref(),
            path,
        ),
        Command::Decay {
            symbol,
            product,
            field,
            path,
        } => cmd_decay(common, symbol.as_deref(), product, *field, path),
    }
}

fn cmd_berezin(common: &CommonArgs, symbol: &str, z: &str, route: Route) -> Result<Outcome> {
    let u: MonomialSymbol = symbol.parse()?;
    let points = parse_points(z)?;
    let config = berezin_config(common)?;
    let routes: Vec<Route> = match route {
        Route::All => vec![Route::Series, Route::Quadrature, Route::Operator],
        r => vec![r],
    };
    let rule = if routes.contains(&Route::Quadrature) {
        Some(config.rule()?)
    } else {
        None
    };
    let op = if routes.contains(&Route::Operator) {
        Some(toeplitz_exact(&u, config.dim)?)
    } else {
        None
    };

    let mut rows = Vec::new();
    let mut unreliable = false;
    for z in points {
        let mut values: Vec<(Route, Complex64, SampleFlag)> = Vec::new();
        for &r in &routes {
            let (value, flag) = match r {
                Route::Series => (berezin_series(&u, z, config.tol * 1e-3), SampleFlag::Ok),
                Route::Quadrature => {
                    let est = berezin_quadrature(
                        |w| u.eval(w),
                        z,
                        rule.as_ref().expect("rule built for quadrature"),
                    );
                    let flag = if est.is_reliable(config.tol) {
                        SampleFlag::Ok
                    } else {
                        SampleFlag::Unreliable
                    };
                    (est.value, flag)
                }
                Route::Operator => {
                    let value =
                        berezin_operator(op.as_ref().expect("matrix built for operator route"), z);
                    let flag = if is_reliable(z, config.dim, config.tol) {
                        SampleFlag::Ok
                    } else {
                        SampleFlag::Unreliable
                    };
                    (value, flag)
                }
                Route::All => unreachable!("expanded above"),
            };
            unreliable |= flag == SampleFlag::Unreliable;
            values.push((r, value, flag));
        }
        let gap = values
            .iter()
            .flat_map(|a| values.iter().map(move |b| (a.1 - b.1).norm()))
            .fold(0.0, f64::max);
        rows.push((z, values, gap));
    }

    let mut inputs = BTreeMap::new();
    inputs.insert("symbol", u.to_string());
    inputs.insert("z", z.to_string());
    inputs.insert("route", format!("{route:?}").to_lowercase());
    let run = run_config("berezin", inputs, &config, common);
    let text = match common.format {
        Format::Csv => {
            let mut out = config_comment(&run)?;
            out.push_str("re_z,im_z,route,value_re,value_im,flag,max_route_gap\n");
            for (z, values, gap) in &rows {
                for (r, v, flag) in values {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        format_float(z.value().re),
                        format_float(z.value().im),
                        format!("{r:?}").to_lowercase(),
                        format_float(v.re),
                        format_float(v.im),
                        flag,
                        format_float(*gap)
                    );
                }
            }
            out
        }
        Format::Json => {
            let samples: Vec<_> = rows
                .iter()
                .map(|(z, values, gap)| {
                    let routes: BTreeMap<String, _> = values
                        .iter()
                        .map(|(r, v, flag)| (format!("{r:?}").to_lowercase(), json!({"value": [v.re, v.im], "flag": flag})))
                        .collect();
                    json!({"z": [z.value().re, z.value().im], "routes": routes, "residuals": {"max_route_gap": gap}})
                })
                .collect();
            to_json_string(&json!({"config": run, "samples": samples}))? + "\n"
        }
    };
    Ok(Outcome {
        text,
        code: strict_code(common, unreliable),
        warnings: unreliable_warning(unreliable),
    })
}

fn unreliable_warning(unreliable: bool) -> Vec<String> {
    if unreliable {
        vec!["some samples are flagged unreliable".to_string()]
    } else {
        Vec::new()
    }
}

fn matrix_text(
    op: &TruncatedOperator,
    run: &RunConfig<'_>,
    extra: serde_json::Value,
    format: Format,
) -> Result<String> {
    match format {
        Format::Csv => {
            let mut out = config_comment(run)?;
            out.push_str("q,p,re,im\n");
            for q in 0..op.dim() {
                for p in 0..op.dim() {
                    let v = op.entry(q, p);
                    let _ = writeln!(out, "{q},{p},{},{}", format_float(v.re), format_float(v.im));
                }
            }
            Ok(out)
        }
        Format::Json => Ok(to_json_string(
            &json!({"config": run, "matrix": op.to_dump(), "info": extra}),
        )? + "\n"),
    }
}

fn cmd_toeplitz(common: &CommonArgs, symbol: &str, route: MatrixRoute) -> Result<Outcome> {
    let u: MonomialSymbol = symbol.parse()?;
    let config = berezin_config(common)?;
    let op = match route {
        MatrixRoute::Exact => toeplitz_exact(&u, config.dim)?,
        MatrixRoute::Quadrature => toeplitz_quadrature(|w| u.eval(w), config.dim, &config.rule()?)?,
    };
    let mut inputs = BTreeMap::new();
    inputs.insert("symbol", u.to_string());
    inputs.insert("route", format!("{route:?}").to_lowercase());
    let run = run_config("toeplitz", inputs, &config, common);
    let text = matrix_text(&op, &run, json!({"norm_fro": op.norm_fro()}), common.format)?;
    Ok(Outcome {
        text,
        code: EXIT_OK,
        warnings: Vec::new(),
    })
}

fn cmd_uz(common: &CommonArgs, z: &str) -> Result<Outcome> {
    let z = DiskPoint::new(parse_complex(z)?)?;
    let config = berezin_config(common)?;
    let u = unitary_uz(z, config.dim)?;
    let tails = uz_column_tails(z, config.dim);
    let block = tails.iter().take_while(|&&t| t < 1e-8).count();
    let mut inputs = BTreeMap::new();
    inputs.insert("z", z.to_string());
    let run = run_config("uz", inputs, &config, common);
    let info = json!({"column_tails": tails, "reliable_block": block});
    let text = matrix_text(&u, &run, info, common.format)?;
    let warnings = if block < config.dim / 2 {
        vec![format!(
            "only the leading {block} columns of U_z fit in dimension {}",
            config.dim
        )]
    } else {
        Vec::new()
    };
    Ok(Outcome {
        text,
        code: strict_code(common, block < config.dim / 2),
        warnings,
    })
}

fn cmd_identity_suite(
    common: &CommonArgs,
    only: Option<&str>,
    n: Option<usize>,
    seed: u64,
) -> Result<Outcome> {
    let mut berezin = berezin_config(common)?;
    if let Some(n) = n {
        berezin.dim = n;
    }
    let config = SuiteConfig { seed, berezin };
    let names: Vec<String> = only
        .map(|s| {
            s.split(',')
                .map(|n| n.trim().to_string())
                .filter(|n| !n.is_empty())
                .collect()
        })
        .unwrap_or_default();
    let report = run_suite(&config, &names)?;
    let text = match common.format {
        Format::Csv => {
            let mut inputs = BTreeMap::new();
            inputs.insert("only", names.join(","));
            inputs.insert("seed", seed.to_string());
            config_comment(&run_config(
                "identity-suite",
                inputs,
                &config.berezin,
                common,
            ))? + &report.to_csv()
        }
        Format::Json => report.to_json()? + "\n",
    };
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    };
    let warnings = report
        .results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("battery {} failed", r.name))
        .collect();
    Ok(Outcome {
        text,
        code,
        warnings,
    })
}

fn analytic_input(
    poly: Option<&str>,
    zeros: Option<&str>,
    other: Option<&AnalyticSymbol>,
    name: &str,
) -> Result<AnalyticSymbol> {
    match (poly, zeros) {
        (Some("same"), None) => other
            .cloned()
            .ok_or_else(|| Error::Parse(format!("--{name} same needs another input"))),
        (Some(p), None) => AnalyticSymbol::polynomial(p.parse()?),
        (None, Some("same")) => other
            .filter(|s| matches!(s, AnalyticSymbol::Blaschke(_)))
            .cloned()
            .ok_or_else(|| {
                Error::Parse(format!(
                    "--blaschke-{name} same needs a Blaschke product for the other input"
                ))
            }),
        (None, Some(z)) => Ok(BlaschkeProduct::from_complex(&parse_complex_list(z)?)?.into()),
        (None, None) => Err(Error::Parse(format!("give --{name} or --blaschke-{name}"))),
        (Some(_), Some(_)) => Err(Error::Parse(format!(
            "--{name} and --blaschke-{name} are exclusive"
        ))),
    }
}

fn cmd_commutator(
    common: &CommonArgs,
    f: Option<&str>,
    g: Option<&str>,
    blaschke_f: Option<&str>,
    blaschke_g: Option<&str>,
    path: &PathArgs,
) -> Result<Outcome> {
    let f = analytic_input(f, blaschke_f, None, "f")?;
    let g = analytic_input(g, blaschke_g, Some(&f), "g")?;
    let config = berezin_config(common)?;
    let (approach, schedule) = path.resolve()?;
    let report = commutator_compactness_indicator(&f, &g, approach, &schedule, &config)?;
    let unreliable = report
        .profiles
        .iter()
        .flat_map(|p| &p.samples)
        .any(|s| !s.flag.is_trusted());
    let text = match common.format {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => {
            let mut inputs = BTreeMap::new();
            inputs.insert("f", f.to_string());
            inputs.insert("g", g.to_string());
            inputs.insert("path", serde_json::to_string(&approach)?);
            let mut out = config_comment(&run_config("commutator", inputs, &config, common))?;
            out.push_str("profile,t,re_z,im_z,value_re,value_im,flag\n");
            for p in &report.profiles {
                for line in p.to_csv().lines().skip(1) {
                    let _ = writeln!(out, "{},{line}", p.label);
                }
            }
            for s in &report.zero_profile {
                let _ = writeln!(
                    out,
                    "zeros,,{},{},{},{},ok",
                    format_float(s.zero.re),
                    format_float(s.zero.im),
                    format_float(s.value),
                    format_float(0.0)
                );
            }
            for (k, v) in &report.residuals {
                let _ = writeln!(out, "# {k}: {}", format_float(*v));
            }
            let _ = writeln!(out, "# verdict: {}", report.verdict);
            out
        }
    };
    Ok(Outcome {
        text,
        code: strict_code(common, unreliable),
        warnings: unreliable_warning(unreliable),
    })
}

fn field_name(field: DecayField) -> String {
    field
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn cmd_decay(
    common: &CommonArgs,
    symbol: Option<&str>,
    product: &[String],
    field: DecayField,
    path: &PathArgs,
) -> Result<Outcome> {
    let config = berezin_config(common)?;
    let (approach, schedule) = path.resolve()?;
    let tol = config.tol * 1e-3;
    let fd = config.fd;
    let mut inputs = BTreeMap::new();
    inputs.insert("field", field_name(field));
    let scalar = if field == DecayField::BoundaryLaplacian {
        if product.is_empty() {
            return Err(Error::Parse(
                "--field boundary-laplacian needs at least one --product".into(),
            ));
        }
        let terms = product
            .iter()
            .map(|p| {
                p.split('*')
                    .map(str::parse)
                    .collect::<Result<Vec<MonomialSymbol>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let sum = HarmonicProductSum::new(terms)?;
        inputs.insert("product", product.join(" + "));
        ScalarField::new("boundary-laplacian", move |z| {
            harmonic_sum_boundary_quantity(&sum, z)
        })
    } else {
        let u: MonomialSymbol = symbol
            .ok_or_else(|| Error::Parse(format!("--field {} needs --symbol", field_name(field))))?
            .parse()?;
        inputs.insert("symbol", u.to_string());
        match field {
            DecayField::FixedPoint => ScalarField::new("fixed-point", move |z| {
                berezin_series(&u, z, tol) - u.eval(z)
            }),
            DecayField::Localization => ScalarField::new("localization", move |z| {
                Complex64::new(localization_norm(&u, z, tol), 0.0)
            }),
            DecayField::InvariantLaplacian => {
                let fd_field = u.clone();
                ScalarField::new("invariant-laplacian", move |z| {
                    let f = |w: DiskPoint| berezin_series(&fd_field, w, tol);
                    invariant_laplacian(&f, z, fd).unwrap_or(Complex64::new(f64::NAN, 0.0))
                })
                .with_flag(move |z| {
                    // the stencil must stay inside the disk
                    if z.norm() + fd.step(z) < 1.0 {
                        SampleFlag::Ok
                    } else {
                        SampleFlag::Unreliable
                    }
                })
            }
            DecayField::BoundaryLaplacian => unreachable!("handled above"),
        }
    };
    inputs.insert("path", serde_json::to_string(&approach)?);
    let label = scalar.label().to_string();
    let profile: DecayProfile = decay_profile(&scalar, label, approach, &schedule)?;
    let unreliable = profile.samples.iter().any(|s| !s.flag.is_trusted());
    let run = run_config("decay", inputs, &config, common);
    let text = match common.format {
        Format::Csv => config_comment(&run)? + &profile.to_csv(),
        Format::Json => {
            let extra = json!({"reliable_radius": reliable_radius(config.dim, config.tol)});
            to_json_string(&json!({"config": run, "profiles": [profile], "residuals": extra}))?
                + "\n"
        }
    };
    Ok(Outcome {
        text,
        code: strict_code(common, unreliable),
        warnings: unreliable_warning(unreliable),
    })
}
