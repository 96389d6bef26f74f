//! Photon form factors and the closed-form field integrals they produce.
//!
//! The one-photon profiles created by the vector-potential part `D*` and the
//! magnetic-field part `E*` enter every formula only through their
//! polarization-summed densities
//!
//! ```text
//! |G(k)|² = χ(k) / (2π²k),        |H(k)|² = χ(k) · k / (2π²),
//! ```
//!
//! with `χ(k) = 1` for `k ≤ Λ` and `0` beyond — the sharp ultraviolet cutoff.
//! Spin is already eliminated (`|H·(σ↑)|² = |H|²`, the form factor being
//! purely imaginary), so all amplitudes here are scalar radial functions.
//! Each closed form below is paired with a quadrature oracle over the same
//! density so that tests can compare the two routes independently.

use std::f64::consts::PI;

use crate::numerics::{self, integrate_default, Interval};
use crate::{Error, Result};

/// The knobs of every formula: coupling `α`, cutoff `Λ`, and the
/// estimate-splitting parameter `a` used by the error envelope.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FieldParams {
    pub alpha: f64,
    pub lambda: f64,
    pub a: f64,
}

impl FieldParams {
    pub fn new(alpha: f64, lambda: f64, a: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "coupling alpha must be finite and >= 0, got {alpha}"
            )));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "cutoff lambda must be finite and > 0, got {lambda}"
            )));
        }
        if !a.is_finite() || a <= 0.0 || a >= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "splitting parameter a must lie strictly inside (0,1), got {a}"
            )));
        }
        Ok(Self { alpha, lambda, a })
    }
}

/// Which squared form-factor density a [`RadialProfile`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ProfileKind {
    /// `|G(k)|²` — vector-potential profile.
    GSquared,
    /// `|H(k)|²` — magnetic-field profile.
    HSquared,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProfile {
    pub kind: ProfileKind,
    pub lambda: f64,
}

impl RadialProfile {
    pub fn new(kind: ProfileKind, lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "cutoff lambda must be finite and > 0, got {lambda}"
            )));
        }
        Ok(Self { kind, lambda })
    }
}

/// Polarization-summed density at radial momentum `k ≥ 0`.
///
/// `GSquared` has a removable `1/k`; the value at `k = 0` is reported as 0
/// and is never consulted by any integral here — the `k²` measure cancels it.
pub fn profile_value(p: RadialProfile, k: f64) -> Result<f64> {
    if !k.is_finite() || k < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "momentum k must be finite and >= 0, got {k}"
        )));
    }
    if k > p.lambda {
        return Ok(0.0);
    }
    Ok(match p.kind {
        ProfileKind::GSquared => {
            if k == 0.0 {
                0.0
            } else {
                1.0 / (2.0 * PI * PI * k)
            }
        }
        ProfileKind::HSquared => k / (2.0 * PI * PI),
    })
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "cutoff lambda must be finite and > 0, got {lambda}"
        )));
    }
    Ok(())
}

/// Vacuum expectation `⟨0|E(p²+H_f)⁻¹E*|0⟩` in closed form:
/// `π⁻¹[Λ² − 2(Λ − ln(1+Λ))]`.
pub fn e_field_integral(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok((lambda * lambda - 2.0 * (lambda - (1.0 + lambda).ln())) / PI)
}

/// Quadrature oracle for [`e_field_integral`]: `(2/π)∫₀^Λ k²/(k+1) dk`,
/// the radial reduction of `∫|H(k)|²/(k²+k) d³k`.
pub fn e_field_integral_quadrature(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let q = integrate_default(|k| k * k / (k + 1.0), Interval::new(0.0, lambda)?)?;
    Ok(2.0 / PI * q.value)
}

/// The commutator `[D, D*] = DD* − D*D`, a pure number: `Λ²/π`.
pub fn dd_commutator(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(lambda * lambda / PI)
}

/// Quadrature oracle for [`dd_commutator`]: `∫|G(k)|² d³k` reduced to
/// `(2/π)∫₀^Λ k dk`.
pub fn dd_commutator_quadrature(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let q = integrate_default(|k| k, Interval::new(0.0, lambda)?)?;
    Ok(2.0 / PI * q.value)
}

/// Totally antisymmetric symbol ε_{abc} on 0-based indices.
fn epsilon(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The mixed `G·H` integral that couples the one- and two-photon parts of the
/// trial energy:
///
/// ```text
/// ∫ χ(k) [δ_il − k_i k_l/|k|²] ε_{jln} k_n / (k³ + k²) d³k  =  0,
/// ```
///
/// exactly: `ε` contracted against the symmetric `k_l k_n` vanishes pointwise
/// and the remaining `ε_{jin}k_n` term is odd under `k → −k`. Evaluated here
/// as (radial factor) × (angular quadrature over the sphere) so the
/// cancellation is demonstrated numerically rather than assumed; `i, j` are
/// 1-based axis indices.
pub fn gh_cross_integral(lambda: f64, i: usize, j: usize) -> Result<f64> {
    check_lambda(lambda)?;
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "axis indices must lie in 1..=3, got i = {i}, j = {j}"
        )));
    }
    let (i, j) = (i - 1, j - 1);

    // d³k = k² dk dΩ against k_n/(k³+k²) leaves the radial weight k³/(k³+k²).
    let radial = integrate_default(|k| k / (k + 1.0), Interval::new(0.0, lambda)?)?.value;

    let angular = numerics::composite_qk15(
        &|theta: f64| {
            let inner = numerics::composite_qk15(
                &|phi: f64| {
                    let khat = [
                        theta.sin() * phi.cos(),
                        theta.sin() * phi.sin(),
                        theta.cos(),
                    ];
                    let mut s = 0.0;
                    for l in 0..3 {
                        for n in 0..3 {
                            let proj = if i == l { 1.0 } else { 0.0 } - khat[i] * khat[l];
                            s += proj * epsilon(j, l, n) * khat[n];
                        }
                    }
                    s
                },
                0.0,
                2.0 * PI,
                8,
            );
            theta.sin() * inner
        },
        0.0,
        PI,
        8,
    );

    Ok(radial * angular)
}

/// Which one-photon operator inequality a ratio is checked against.
///
/// `DStarD`/`EStarE` verify `D*D ≤ (2Λ/π) H_f` and `E*E ≤ (2Λ³/3π) H_f`; the
/// `Norm` variants run the same check for the operators built from `|G|`,
/// `|H|` in place of `G`, `H`. On scalar one-photon amplitudes the two
/// coincide, and the Cauchy–Schwarz extremal attains the bound with the `Λ`
/// factors present — so the `Norm` kinds are held to the same constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum InequalityKind {
    DStarD,
    EStarE,
    NormD,
    NormE,
}

impl InequalityKind {
    pub const ALL: [InequalityKind; 4] = [
        InequalityKind::DStarD,
        InequalityKind::EStarE,
        InequalityKind::NormD,
        InequalityKind::NormE,
    ];

    fn profile_kind(self) -> ProfileKind {
        match self {
            InequalityKind::DStarD | InequalityKind::NormD => ProfileKind::GSquared,
            InequalityKind::EStarE | InequalityKind::NormE => ProfileKind::HSquared,
        }
    }
}

/// Sharp constant of the inequality: `2Λ/π` for the D kinds, `2Λ³/(3π)` for
/// the E kinds; equals `∫ |X(k)|²/k d³k` for the matching density.
pub fn inequality_bound(kind: InequalityKind, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(match kind.profile_kind() {
        ProfileKind::GSquared => 2.0 * lambda / PI,
        ProfileKind::HSquared => 2.0 * lambda.powi(3) / (3.0 * PI),
    })
}

/// Rayleigh quotient `⟨ψ|X*X|ψ⟩ / ⟨ψ|H_f|ψ⟩` for a scalar one-photon radial
/// amplitude `ψ`, where `⟨ψ|X*X|ψ⟩ = [4π ∫₀^Λ x(k) ψ(k) k² dk]²` with `x` the
/// matching form-factor density and `⟨ψ|H_f|ψ⟩ = 4π ∫₀^Λ k ψ(k)² k² dk`.
///
/// Cauchy–Schwarz against the weight `k` bounds this by
/// [`inequality_bound`]; equality holds for `ψ(k) = x(k)/k`
/// (see [`extremal_amplitude`]).
pub fn operator_inequality_ratio<F: Fn(f64) -> f64>(
    kind: InequalityKind,
    psi: F,
    lambda: f64,
) -> Result<f64> {
    check_lambda(lambda)?;
    let profile = RadialProfile::new(kind.profile_kind(), lambda)?;
    let range = Interval::new(0.0, lambda)?;

    let coupling = integrate_default(
        |k| {
            let x = profile_value(profile, k).unwrap_or(0.0).sqrt();
            x * psi(k) * k * k
        },
        range,
    )?;
    let field_energy = integrate_default(|k| k.powi(3) * psi(k) * psi(k), range)?;

    let hf = 4.0 * PI * field_energy.value;
    if hf <= 0.0 {
        return Err(Error::ZeroEnergyState);
    }
    let numerator = 4.0 * PI * coupling.value;
    Ok(numerator * numerator / hf)
}

/// The Cauchy–Schwarz equality case `ψ(k) = √(|X|²(k))/k` for the given kind.
pub fn extremal_amplitude(kind: InequalityKind, lambda: f64) -> Result<impl Fn(f64) -> f64> {
    let profile = RadialProfile::new(kind.profile_kind(), lambda)?;
    Ok(move |k: f64| {
        if k <= 0.0 {
            0.0
        } else {
            profile_value(profile, k).unwrap_or(0.0).sqrt() / k
        }
    })
}
