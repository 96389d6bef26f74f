//! Oracle-equivalence checks bundling the library's cross-validations into a
//! reusable, deterministic verification suite (the CLI `verify` subcommand).
//!
//! Each check compares a closed form against an independent numerical route
//! (adaptive quadrature, brute-force scans, random sampling with a fixed
//! seed) and reports pass/fail with a one-line diagnostic. All randomness is
//! seeded, so repeated runs produce identical output.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::field_kernels::{
    dd_commutator, dd_commutator_quadrature, e_field_integral, e_field_integral_quadrature,
    gh_cross_integral, inequality_bound, operator_inequality_ratio, FieldParams, InequalityKind,
};
use crate::self_energy::sigma_leading;

/// Seed for the random-amplitude check; fixed so `verify` is reproducible.
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;
/// Number of random one-photon amplitudes sampled per kind and cutoff.
pub const DEFAULT_SAMPLES: usize = 100;

/// Result of one named identity check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail,
        }
    }
}

const CUTOFF_GRID: [f64; 5] = [0.1, 0.25, 1.0, 4.0, 10.0];

/// `e_field_integral` closed form vs adaptive quadrature over the cutoff grid.
pub fn e_field_closed_form_check() -> CheckOutcome {
    closed_form_check(
        "e_field_integral closed form vs quadrature",
        e_field_integral,
        e_field_integral_quadrature,
    )
}

/// `dd_commutator` closed form vs adaptive quadrature over the cutoff grid.
pub fn dd_commutator_closed_form_check() -> CheckOutcome {
    closed_form_check(
        "dd_commutator closed form vs quadrature",
        dd_commutator,
        dd_commutator_quadrature,
    )
}

fn closed_form_check(
    name: &str,
    closed: impl Fn(f64) -> crate::Result<f64>,
    oracle: impl Fn(f64) -> crate::Result<f64>,
) -> CheckOutcome {
    let mut worst = 0.0f64;
    for &lambda in &CUTOFF_GRID {
        let (c, q) = match (closed(lambda), oracle(lambda)) {
            (Ok(c), Ok(q)) => (c, q),
            (c, q) => {
                return CheckOutcome::fail(
                    name,
                    format!("evaluation failed at lambda = {lambda}: {c:?} / {q:?}"),
                )
            }
        };
        worst = worst.max((c - q).abs() / c.abs());
    }
    let detail = format!(
        "max relative difference {worst:.3e} over {} cutoffs",
        CUTOFF_GRID.len()
    );
    if worst < 1e-9 {
        CheckOutcome::pass(name, detail)
    } else {
        CheckOutcome::fail(name, detail)
    }
}

/// The mixed vector-potential/magnetic-field overlap vanishes for every
/// component pair by transversality.
pub fn cross_integral_check() -> CheckOutcome {
    let name = "gh_cross_integral vanishes for all component pairs";
    let mut worst = 0.0f64;
    for &lambda in &[0.25, 1.0, 5.0] {
        for i in 1..=3 {
            for j in 1..=3 {
                match gh_cross_integral(lambda, i, j) {
                    Ok(v) => worst = worst.max(v.abs()),
                    Err(e) => {
                        return CheckOutcome::fail(
                            name,
                            format!("evaluation failed at lambda = {lambda} ({i};{j}): {e}"),
                        )
                    }
                }
            }
        }
    }
    let detail = format!("max |integral| {worst:.3e} over 27 (lambda; i; j) combinations");
    if worst < 1e-12 {
        CheckOutcome::pass(name, detail)
    } else {
        CheckOutcome::fail(name, detail)
    }
}

/// `α·[D,D*] − α·⟨E(p²+H_f)⁻¹E*⟩ = sigma_leading` across 20 coupling/cutoff
/// pairs — the cancellation that leaves only the logarithmic remainder.
pub fn cancellation_identity_check() -> CheckOutcome {
    let name = "commutator minus field integral reproduces sigma_leading";
    let mut worst = 0.0f64;
    let alphas = [1e-4, 1e-3, 7.3e-3, 0.05];
    let lambdas = [0.1, 0.25, 1.0, 4.0, 10.0];
    for &alpha in &alphas {
        for &lambda in &lambdas {
            let params = match FieldParams::new(alpha, lambda, 0.5) {
                Ok(p) => p,
                Err(e) => return CheckOutcome::fail(name, format!("bad parameters: {e}")),
            };
            let lhs = match (dd_commutator(lambda), e_field_integral(lambda)) {
                (Ok(dd), Ok(ef)) => alpha * dd - alpha * ef,
                (dd, ef) => {
                    return CheckOutcome::fail(
                        name,
                        format!("evaluation failed at lambda = {lambda}: {dd:?} / {ef:?}"),
                    )
                }
            };
            let rhs = sigma_leading(&params);
            worst = worst.max((lhs - rhs).abs() / rhs.abs());
        }
    }
    let detail = format!(
        "max relative difference {worst:.3e} over {} (alpha; lambda) pairs",
        alphas.len() * lambdas.len()
    );
    if worst < 1e-12 {
        CheckOutcome::pass(name, detail)
    } else {
        CheckOutcome::fail(name, detail)
    }
}

/// Rayleigh quotients of seeded random one-photon amplitudes stay below the
/// operator-norm bounds for all four inequality kinds.
pub fn inequality_ratio_check(samples: usize, seed: u64) -> CheckOutcome {
    let name = "operator inequality ratios stay below their bounds";
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut worst_excess = f64::NEG_INFINITY;
    let mut evaluated = 0usize;
    for _ in 0..samples {
        let c: [f64; 3] = [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ];
        for &lambda in &[0.25, 1.0, 4.0] {
            for kind in InequalityKind::ALL {
                let psi = move |k: f64| c[0] + c[1] * k + c[2] * k * k;
                let outcome = operator_inequality_ratio(kind, psi, lambda)
                    .and_then(|r| Ok(r - inequality_bound(kind, lambda)?));
                match outcome {
                    Ok(excess) => worst_excess = worst_excess.max(excess),
                    Err(e) => {
                        return CheckOutcome::fail(
                            name,
                            format!("ratio failed for {kind:?} at lambda = {lambda}: {e}"),
                        )
                    }
                }
                evaluated += 1;
            }
        }
    }
    let detail =
        format!("max (ratio - bound) {worst_excess:.3e} over {evaluated} random amplitudes");
    if worst_excess <= 1e-9 {
        CheckOutcome::pass(name, detail)
    } else {
        CheckOutcome::fail(name, detail)
    }
}

/// The analytic extremal amplitudes recover at least 99.9% of each bound.
pub fn extremal_tightness_check() -> CheckOutcome {
    let name = "extremal amplitudes attain the operator-norm bounds";
    let mut worst_fraction = f64::INFINITY;
    for &lambda in &[0.25, 1.0, 4.0] {
        for kind in InequalityKind::ALL {
            let attained = crate::field_kernels::extremal_amplitude(kind, lambda)
                .and_then(|psi| operator_inequality_ratio(kind, psi, lambda))
                .and_then(|r| Ok(r / inequality_bound(kind, lambda)?));
            match attained {
                Ok(f) => worst_fraction = worst_fraction.min(f),
                Err(e) => {
                    return CheckOutcome::fail(
                        name,
                        format!("extremal failed for {kind:?} at lambda = {lambda}: {e}"),
                    )
                }
            }
        }
    }
    let detail = format!("min attained fraction of bound {worst_fraction:.6}");
    if worst_fraction >= 0.999 {
        CheckOutcome::pass(name, detail)
    } else {
        CheckOutcome::fail(name, detail)
    }
}

/// Run the full suite in a fixed order with the default seed.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        e_field_closed_form_check(),
        dd_commutator_closed_form_check(),
        cross_integral_check(),
        cancellation_identity_check(),
        inequality_ratio_check(DEFAULT_SAMPLES, DEFAULT_SEED),
        extremal_tightness_check(),
    ]
}
