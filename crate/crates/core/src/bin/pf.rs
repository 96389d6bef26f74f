//! `pf` — command-line front end for the electron–photon energetics library.
//!
//! Subcommands mirror the library modules: `self-energy`, `field-integrals`,
//! `hydrogen`, `threshold`, `sweep`, and `verify`. Output is a human table by
//! default, or JSON / CSV via `--format`. All output is deterministic:
//! identical invocations produce byte-identical bytes.

use clap::{Parser, Subcommand, ValueEnum};

use pauli_fierz::checks;
use pauli_fierz::field_kernels::{
    dd_commutator, dd_commutator_quadrature, e_field_integral, e_field_integral_quadrature,
    gh_cross_integral, inequality_bound, FieldParams, InequalityKind,
};
use pauli_fierz::hydrogen_dipole::{
    binding_gain_upper, radiative_correction, sum_rule_partial, HydrogenModel, RadiativeMode,
};
use pauli_fierz::output::{sig9, OutputFormat, Table};
use pauli_fierz::self_energy::{self, DEFAULT_SECULAR_TOL};
use pauli_fierz::sweep::{self, SweepSpec, SweepVariable};
use pauli_fierz::threshold::{alpha_max, coefficient_scan, enhancement_certificate, z_min, Branch};
use pauli_fierz::{Error, Result, FINE_STRUCTURE};

const DEFAULT_LAMBDA: f64 = 0.25;
const DEFAULT_A: f64 = 0.5;

#[derive(Parser)]
#[command(
    name = "pf",
    version,
    about = "Ground-state energetics of an electron coupled to a quantized photon field",
    long_about = "Computes self-energy leading order and error envelopes, hydrogenic \
                  radiative corrections, and coupling/charge thresholds for enhanced \
                  binding, in units hbar = c = 1, m = 1/2. Defaults: beta = 1/137 \
                  (override with --beta or the PF_BETA environment variable), \
                  lambda = 1/4, a = 1/2."
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Self-energy report: leading order, variational upper bound, error
    /// envelope, restricted-sector eigenvalue, a-priori bounds.
    SelfEnergy {
        /// Coupling constant alpha (defaults to beta).
        #[arg(long)]
        alpha: Option<f64>,
        /// Ultraviolet cutoff on the photon momentum.
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
        /// Kinetic/field splitting parameter in (0,1).
        #[arg(long, default_value_t = DEFAULT_A)]
        a: f64,
        /// Fine-structure constant (defaults to PF_BETA or 1/137).
        #[arg(long)]
        beta: Option<f64>,
        /// Root tolerance for the restricted-sector eigenvalue.
        #[arg(long, default_value_t = DEFAULT_SECULAR_TOL)]
        secular_tol: f64,
    },
    /// Photon form-factor integrals with their quadrature oracles.
    FieldIntegrals {
        /// Ultraviolet cutoff on the photon momentum.
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
    },
    /// Hydrogenic spectrum, dipole sum rule, and radiative correction.
    Hydrogen {
        /// Nuclear charge.
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        /// Fine-structure constant (defaults to PF_BETA or 1/137).
        #[arg(long)]
        beta: Option<f64>,
        /// Coupling constant alpha (defaults to beta).
        #[arg(long)]
        alpha: Option<f64>,
        /// Ultraviolet cutoff on the photon momentum.
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
        /// Highest principal quantum number in the dipole sum.
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        /// Print the dipole coefficient table instead of the summary.
        #[arg(long)]
        dipoles: bool,
    },
    /// Coupling threshold for enhanced binding and the minimal charge.
    Threshold {
        /// Nuclear charge.
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        /// Fine-structure constant (defaults to PF_BETA or 1/137).
        #[arg(long)]
        beta: Option<f64>,
        /// Coupling tested against the threshold (defaults to beta).
        #[arg(long)]
        alpha: Option<f64>,
        /// Ultraviolet cutoff on the photon momentum.
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
        /// Kinetic/field splitting parameter in (0,1).
        #[arg(long, default_value_t = DEFAULT_A)]
        a: f64,
        /// Tabulate the threshold coefficient over a = 0.01..0.99.
        #[arg(long)]
        scan_a: bool,
    },
    /// Vary one parameter over a grid and tabulate the headline quantities.
    Sweep {
        /// Which parameter to vary.
        #[arg(long, value_enum)]
        variable: SweepVariableArg,
        /// Strictly increasing grid values, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        /// Fixed coupling constant alpha (defaults to beta).
        #[arg(long)]
        alpha: Option<f64>,
        /// Fixed ultraviolet cutoff.
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
        /// Fixed splitting parameter.
        #[arg(long, default_value_t = DEFAULT_A)]
        a: f64,
        /// Fixed nuclear charge.
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        /// Fine-structure constant (defaults to PF_BETA or 1/137).
        #[arg(long)]
        beta: Option<f64>,
    },
    /// Run every oracle-equivalence check; exit nonzero if any fails.
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepVariableArg {
    Alpha,
    Lambda,
    Z,
    A,
}

impl From<SweepVariableArg> for SweepVariable {
    fn from(v: SweepVariableArg) -> Self {
        match v {
            SweepVariableArg::Alpha => SweepVariable::Alpha,
            SweepVariableArg::Lambda => SweepVariable::Lambda,
            SweepVariableArg::Z => SweepVariable::Z,
            SweepVariableArg::A => SweepVariable::A,
        }
    }
}

/// `--beta` flag, else the PF_BETA environment variable, else 1/137.
fn resolve_beta(flag: Option<f64>) -> Result<f64> {
    let beta = match flag {
        Some(b) => b,
        None => match std::env::var("PF_BETA") {
            Ok(raw) => raw.parse::<f64>().map_err(|_| {
                Error::InvalidArgument(format!(
                    "PF_BETA must be a floating-point number, got {raw:?}"
                ))
            })?,
            Err(_) => FINE_STRUCTURE,
        },
    };
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "fine-structure constant beta must be finite and > 0, got {beta}"
        )));
    }
    Ok(beta)
}

fn branch_str(branch: Branch) -> &'static str {
    match branch {
        Branch::ErrorVsCorrection => "error_vs_correction",
        Branch::AprioriConstraint => "apriori_constraint",
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    s.push('\n');
    s
}

/// Key/value table for scalar reports.
fn kv_table(pairs: &[(&str, String)]) -> String {
    let mut t = Table::new(vec!["quantity", "value"]);
    for (k, v) in pairs {
        t.push_row(vec![k.to_string(), v.clone()]);
    }
    t.render_human()
}

/// Single-row CSV with unit-annotated header.
fn csv_single(header: &[&str], row: Vec<String>) -> String {
    let mut t = Table::new(header.to_vec());
    t.push_row(row);
    t.render_csv()
}

#[derive(serde::Serialize)]
struct SelfEnergyOutput {
    alpha: f64,
    lambda: f64,
    a: f64,
    #[serde(flatten)]
    report: self_energy::SelfEnergyReport,
}

fn cmd_self_energy(
    alpha: Option<f64>,
    lambda: f64,
    a: f64,
    beta: Option<f64>,
    secular_tol: f64,
    format: OutputFormat,
) -> Result<String> {
    let beta = resolve_beta(beta)?;
    let params = FieldParams::new(alpha.unwrap_or(beta), lambda, a)?;
    let report = self_energy::report(&params, secular_tol)?;
    let out = SelfEnergyOutput {
        alpha: params.alpha,
        lambda: params.lambda,
        a: params.a,
        report,
    };
    Ok(match format {
        OutputFormat::Json => json_line(&out),
        OutputFormat::Human => kv_table(&[
            ("alpha", sig9(out.alpha)),
            ("lambda", sig9(out.lambda)),
            ("a", sig9(out.a)),
            ("sigma_leading", sig9(report.leading)),
            ("sigma_upper_bound", sig9(report.variational_upper)),
            ("err_envelope", sig9(report.err_envelope)),
            ("sigma_secular", sig9(report.secular_value)),
            ("field_apriori", sig9(report.field_apriori)),
            ("kinetic_apriori", sig9(report.kinetic_apriori)),
        ]),
        OutputFormat::Csv => csv_single(
            &[
                "alpha [1]",
                "lambda [energy]",
                "a [1]",
                "sigma_leading [energy]",
                "sigma_upper_bound [energy]",
                "err_envelope [energy]",
                "sigma_secular [energy]",
                "field_apriori [energy]",
                "kinetic_apriori [energy]",
            ],
            vec![
                sig9(out.alpha),
                sig9(out.lambda),
                sig9(out.a),
                sig9(report.leading),
                sig9(report.variational_upper),
                sig9(report.err_envelope),
                sig9(report.secular_value),
                sig9(report.field_apriori),
                sig9(report.kinetic_apriori),
            ],
        ),
    })
}

#[derive(serde::Serialize)]
struct FieldIntegralsOutput {
    lambda: f64,
    e_field_closed: f64,
    e_field_quadrature: f64,
    dd_commutator_closed: f64,
    dd_commutator_quadrature: f64,
    cross_integral_max_abs: f64,
    ratio_bound_d: f64,
    ratio_bound_e: f64,
}

fn cmd_field_integrals(lambda: f64, format: OutputFormat) -> Result<String> {
    let mut cross_max = 0.0f64;
    for i in 1..=3 {
        for j in 1..=3 {
            cross_max = cross_max.max(gh_cross_integral(lambda, i, j)?.abs());
        }
    }
    let out = FieldIntegralsOutput {
        lambda,
        e_field_closed: e_field_integral(lambda)?,
        e_field_quadrature: e_field_integral_quadrature(lambda)?,
        dd_commutator_closed: dd_commutator(lambda)?,
        dd_commutator_quadrature: dd_commutator_quadrature(lambda)?,
        cross_integral_max_abs: cross_max,
        ratio_bound_d: inequality_bound(InequalityKind::DStarD, lambda)?,
        ratio_bound_e: inequality_bound(InequalityKind::EStarE, lambda)?,
    };
    Ok(match format {
        OutputFormat::Json => json_line(&out),
        OutputFormat::Human => kv_table(&[
            ("lambda", sig9(out.lambda)),
            ("e_field_closed", sig9(out.e_field_closed)),
            ("e_field_quadrature", sig9(out.e_field_quadrature)),
            ("dd_commutator_closed", sig9(out.dd_commutator_closed)),
            (
                "dd_commutator_quadrature",
                sig9(out.dd_commutator_quadrature),
            ),
            ("cross_integral_max_abs", sig9(out.cross_integral_max_abs)),
            ("ratio_bound_d", sig9(out.ratio_bound_d)),
            ("ratio_bound_e", sig9(out.ratio_bound_e)),
        ]),
        OutputFormat::Csv => csv_single(
            &[
                "lambda [energy]",
                "e_field_closed [energy]",
                "e_field_quadrature [energy]",
                "dd_commutator_closed [energy^2]",
                "dd_commutator_quadrature [energy^2]",
                "cross_integral_max_abs [energy]",
                "ratio_bound_d [energy]",
                "ratio_bound_e [energy^3]",
            ],
            vec![
                sig9(out.lambda),
                sig9(out.e_field_closed),
                sig9(out.e_field_quadrature),
                sig9(out.dd_commutator_closed),
                sig9(out.dd_commutator_quadrature),
                sig9(out.cross_integral_max_abs),
                sig9(out.ratio_bound_d),
                sig9(out.ratio_bound_e),
            ],
        ),
    })
}

#[derive(serde::Serialize)]
struct HydrogenOutput {
    z: u32,
    beta: f64,
    alpha: f64,
    lambda: f64,
    n_max: u32,
    e0: f64,
    p_phi_sq: f64,
    dipole_partial_sum: f64,
    dipole_target: f64,
    radiative_approx: f64,
    radiative_spectral: f64,
    binding_gain_upper: f64,
}

#[allow(clippy::too_many_arguments)]
fn cmd_hydrogen(
    z: u32,
    beta: Option<f64>,
    alpha: Option<f64>,
    lambda: f64,
    n_max: u32,
    dipoles: bool,
    format: OutputFormat,
) -> Result<String> {
    let beta = resolve_beta(beta)?;
    let model = HydrogenModel::with_beta(z, beta)?;
    // The splitting parameter does not enter any hydrogenic quantity; any
    // valid value makes the FieldParams carrier.
    let params = FieldParams::new(alpha.unwrap_or(beta), lambda, 0.5)?;
    let spectrum = sum_rule_partial(&model, n_max)?;

    if dipoles {
        return Ok(match format {
            OutputFormat::Json => json_line(&spectrum),
            OutputFormat::Human | OutputFormat::Csv => {
                let header = match format {
                    OutputFormat::Human => vec!["n", "c_n", "c_n_squared"],
                    _ => vec!["n [1]", "c_n [1]", "c_n_squared [1]"],
                };
                let mut t = Table::new(header);
                for &(n, c) in &spectrum.coefficients {
                    t.push_row(vec![n.to_string(), sig9(c), sig9(c * c)]);
                }
                match format {
                    OutputFormat::Human => t.render_human(),
                    _ => t.render_csv(),
                }
            }
        });
    }

    let out = HydrogenOutput {
        z,
        beta,
        alpha: params.alpha,
        lambda,
        n_max,
        e0: model.e0(),
        p_phi_sq: model.p_phi_sq(),
        dipole_partial_sum: spectrum.partial_sum,
        dipole_target: spectrum.target,
        radiative_approx: radiative_correction(&model, &params, RadiativeMode::Approx)?,
        radiative_spectral: radiative_correction(
            &model,
            &params,
            RadiativeMode::Spectral { n_max },
        )?,
        binding_gain_upper: binding_gain_upper(&model, &params),
    };
    Ok(match format {
        OutputFormat::Json => json_line(&out),
        OutputFormat::Human => kv_table(&[
            ("Z", out.z.to_string()),
            ("beta", sig9(out.beta)),
            ("alpha", sig9(out.alpha)),
            ("lambda", sig9(out.lambda)),
            ("n_max", out.n_max.to_string()),
            ("e0", sig9(out.e0)),
            ("p_phi_sq", sig9(out.p_phi_sq)),
            ("dipole_partial_sum", sig9(out.dipole_partial_sum)),
            ("dipole_target", sig9(out.dipole_target)),
            ("radiative_approx", sig9(out.radiative_approx)),
            ("radiative_spectral", sig9(out.radiative_spectral)),
            ("binding_gain_upper", sig9(out.binding_gain_upper)),
        ]),
        OutputFormat::Csv => csv_single(
            &[
                "Z [1]",
                "beta [1]",
                "alpha [1]",
                "lambda [energy]",
                "n_max [1]",
                "e0 [energy]",
                "p_phi_sq [energy]",
                "dipole_partial_sum [1]",
                "dipole_target [1]",
                "radiative_approx [energy]",
                "radiative_spectral [energy]",
                "binding_gain_upper [energy]",
            ],
            vec![
                out.z.to_string(),
                sig9(out.beta),
                sig9(out.alpha),
                sig9(out.lambda),
                out.n_max.to_string(),
                sig9(out.e0),
                sig9(out.p_phi_sq),
                sig9(out.dipole_partial_sum),
                sig9(out.dipole_target),
                sig9(out.radiative_approx),
                sig9(out.radiative_spectral),
                sig9(out.binding_gain_upper),
            ],
        ),
    })
}

#[derive(serde::Serialize)]
struct ThresholdOutput {
    z: u32,
    beta: f64,
    lambda: f64,
    a: f64,
    alpha_tested: f64,
    alpha_max: f64,
    branch: Branch,
    coefficient: f64,
    z_min: Option<u32>,
    enhanced: bool,
    margin: f64,
}

#[derive(serde::Serialize)]
struct ScanRow {
    a: f64,
    coefficient: f64,
    alpha_max: f64,
    branch: Branch,
}

#[allow(clippy::too_many_arguments)]
fn cmd_threshold(
    z: u32,
    beta: Option<f64>,
    alpha: Option<f64>,
    lambda: f64,
    a: f64,
    scan_a: bool,
    format: OutputFormat,
) -> Result<String> {
    let beta = resolve_beta(beta)?;
    let model = HydrogenModel::with_beta(z, beta)?;
    let bz2 = (beta * z as f64).powi(2);

    if scan_a {
        let grid: Vec<f64> = (1..100).map(|i| i as f64 / 100.0).collect();
        let rows: Vec<ScanRow> = coefficient_scan(&model, lambda, &grid)?
            .into_iter()
            .map(|(a, coefficient, branch)| ScanRow {
                a,
                coefficient,
                alpha_max: coefficient * bz2,
                branch,
            })
            .collect();
        return Ok(match format {
            OutputFormat::Json => json_line(&rows),
            OutputFormat::Human | OutputFormat::Csv => {
                let header = match format {
                    OutputFormat::Human => vec!["a", "coefficient", "alpha_max", "branch"],
                    _ => vec!["a [1]", "coefficient [1]", "alpha_max [1]", "branch"],
                };
                let mut t = Table::new(header);
                for r in &rows {
                    t.push_row(vec![
                        sig9(r.a),
                        sig9(r.coefficient),
                        sig9(r.alpha_max),
                        branch_str(r.branch).to_string(),
                    ]);
                }
                match format {
                    OutputFormat::Human => t.render_human(),
                    _ => t.render_csv(),
                }
            }
        });
    }

    let alpha_tested = alpha.unwrap_or(beta);
    let report = alpha_max(&model, lambda, a)?;
    let params = FieldParams::new(alpha_tested, lambda, a)?;
    let (enhanced, margin) = enhancement_certificate(&model, &params)?;
    let minimal_z = match z_min(beta, alpha_tested, lambda, report.coefficient) {
        Ok(zm) => Some(zm),
        Err(Error::ChargeOutOfRange) => None,
        Err(e) => return Err(e),
    };
    let out = ThresholdOutput {
        z,
        beta,
        lambda,
        a,
        alpha_tested,
        alpha_max: report.alpha_max,
        branch: report.branch,
        coefficient: report.coefficient,
        z_min: minimal_z,
        enhanced,
        margin,
    };
    let z_min_str = out
        .z_min
        .map_or_else(|| "none".to_string(), |zm| zm.to_string());
    Ok(match format {
        OutputFormat::Json => json_line(&out),
        OutputFormat::Human => kv_table(&[
            ("Z", out.z.to_string()),
            ("beta", sig9(out.beta)),
            ("lambda", sig9(out.lambda)),
            ("a", sig9(out.a)),
            ("alpha_tested", sig9(out.alpha_tested)),
            ("alpha_max", sig9(out.alpha_max)),
            ("branch", branch_str(out.branch).to_string()),
            ("coefficient", sig9(out.coefficient)),
            ("z_min", z_min_str.clone()),
            ("enhanced", out.enhanced.to_string()),
            ("margin", sig9(out.margin)),
        ]),
        OutputFormat::Csv => csv_single(
            &[
                "Z [1]",
                "beta [1]",
                "lambda [energy]",
                "a [1]",
                "alpha_tested [1]",
                "alpha_max [1]",
                "branch",
                "coefficient [1]",
                "z_min [1]",
                "enhanced",
                "margin [energy]",
            ],
            vec![
                out.z.to_string(),
                sig9(out.beta),
                sig9(out.lambda),
                sig9(out.a),
                sig9(out.alpha_tested),
                sig9(out.alpha_max),
                branch_str(out.branch).to_string(),
                sig9(out.coefficient),
                z_min_str,
                out.enhanced.to_string(),
                sig9(out.margin),
            ],
        ),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    variable: SweepVariableArg,
    values: Vec<f64>,
    alpha: Option<f64>,
    lambda: f64,
    a: f64,
    z: u32,
    beta: Option<f64>,
    format: OutputFormat,
) -> Result<String> {
    let beta = resolve_beta(beta)?;
    let params = FieldParams::new(alpha.unwrap_or(beta), lambda, a)?;
    let model = HydrogenModel::with_beta(z, beta)?;
    let spec = SweepSpec::new(variable.into(), values, params, model)?;
    let rows = sweep::run(&spec)?;
    Ok(match format {
        OutputFormat::Json => json_line(&rows),
        OutputFormat::Human | OutputFormat::Csv => {
            let header = match format {
                OutputFormat::Human => vec![
                    "value",
                    "alpha",
                    "lambda",
                    "a",
                    "Z",
                    "sigma_leading",
                    "sigma_upper_bound",
                    "err_envelope",
                    "sigma_secular",
                    "radiative_approx",
                    "alpha_max",
                    "coefficient",
                    "margin",
                ],
                _ => vec![
                    "value [1]",
                    "alpha [1]",
                    "lambda [energy]",
                    "a [1]",
                    "Z [1]",
                    "sigma_leading [energy]",
                    "sigma_upper_bound [energy]",
                    "err_envelope [energy]",
                    "sigma_secular [energy]",
                    "radiative_approx [energy]",
                    "alpha_max [1]",
                    "coefficient [1]",
                    "margin [energy]",
                ],
            };
            let mut t = Table::new(header);
            for r in &rows {
                t.push_row(vec![
                    sig9(r.value),
                    sig9(r.alpha),
                    sig9(r.lambda),
                    sig9(r.a),
                    r.z.to_string(),
                    sig9(r.sigma_leading),
                    sig9(r.sigma_upper_bound),
                    sig9(r.err_envelope),
                    sig9(r.sigma_secular),
                    sig9(r.radiative_approx),
                    sig9(r.alpha_max),
                    sig9(r.coefficient),
                    sig9(r.margin),
                ]);
            }
            match format {
                OutputFormat::Human => t.render_human(),
                _ => t.render_csv(),
            }
        }
    })
}

fn cmd_verify(format: OutputFormat) -> (String, bool) {
    let outcomes = checks::run_all();
    let all_passed = outcomes.iter().all(|o| o.passed);
    let rendered = match format {
        OutputFormat::Json => json_line(&outcomes),
        OutputFormat::Human | OutputFormat::Csv => {
            let mut t = Table::new(vec!["check", "status", "detail"]);
            for o in &outcomes {
                t.push_row(vec![
                    o.name.clone(),
                    if o.passed { "PASS" } else { "FAIL" }.to_string(),
                    o.detail.clone(),
                ]);
            }
            match format {
                OutputFormat::Human => t.render_human(),
                _ => t.render_csv(),
            }
        }
    };
    (rendered, all_passed)
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.command {
        Command::SelfEnergy {
            alpha,
            lambda,
            a,
            beta,
            secular_tol,
        } => cmd_self_energy(alpha, lambda, a, beta, secular_tol, format),
        Command::FieldIntegrals { lambda } => cmd_field_integrals(lambda, format),
        Command::Hydrogen {
            z,
            beta,
            alpha,
            lambda,
            n_max,
            dipoles,
        } => cmd_hydrogen(z, beta, alpha, lambda, n_max, dipoles, format),
        Command::Threshold {
            z,
            beta,
            alpha,
            lambda,
            a,
            scan_a,
        } => cmd_threshold(z, beta, alpha, lambda, a, scan_a, format),
        Command::Sweep {
            variable,
            values,
            alpha,
            lambda,
            a,
            z,
            beta,
        } => cmd_sweep(variable, values, alpha, lambda, a, z, beta, format),
        Command::Verify => {
            let (rendered, all_passed) = cmd_verify(format);
            print!("{rendered}");
            return if all_passed {
                std::process::ExitCode::SUCCESS
            } else {
                eprintln!("error: one or more verification checks failed");
                std::process::ExitCode::FAILURE
            };
        }
    };
    match result {
        Ok(rendered) => {
            print!("{rendered}");
            std::process::ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::FAILURE
        }
    }
}
