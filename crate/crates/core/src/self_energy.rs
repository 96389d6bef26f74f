//! Self-energy of the free dressed electron: leading order, variational
//! upper bound, error envelope, and a secular sharpening of the one-photon
//! trial state.
//!
//! The leading order
//!
//! ```text
//! Σ_lead = 2(α/π)(Λ − ln(1+Λ))
//! ```
//!
//! arises as a cancellation: the vacuum fluctuation of the vector potential
//! contributes `α[D,D*] = αΛ²/π`, and the magnetic-field coupling removes
//! `α·⟨0|E(p²+H_f)⁻¹E*|0⟩` of it. The variational one-photon trial state
//! shows the true self-energy exceeds leading order by at most
//! `(2/π²)α²Λ²ln(1+Λ)`, and the concrete `α²` envelope of the lower-bound
//! analysis brackets it from below. [`sigma_secular`] replaces the fixed
//! trial amplitude by the exact ground state of the vacuum ⊕ one-photon
//! restriction at zero electron momentum, which lands between leading order
//! and the upper bound with an `O(α²)` gap.

use std::cell::RefCell;
use std::f64::consts::PI;

use crate::field_kernels::{e_field_integral, FieldParams};
use crate::numerics::{find_root, integrate_default, Interval};
use crate::{Error, Result};

/// Default root tolerance for the secular equation: the eigenvalue shift is
/// resolved to near machine precision so that `O(α²)` differences at
/// `α = 1e−4` are still meaningful.
pub const DEFAULT_SECULAR_TOL: f64 = 1e-15;

/// Self-energy quantities at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SelfEnergyReport {
    /// Leading order `2(α/π)(Λ − ln(1+Λ))`.
    pub leading: f64,
    /// Variational upper bound `leading + (2/π²)α²Λ²ln(1+Λ)`.
    pub variational_upper: f64,
    /// Concrete `α²` error envelope of the lower-bound analysis.
    pub err_envelope: f64,
    /// Restricted-sector eigenvalue (vacuum ⊕ one photon).
    pub secular_value: f64,
    /// A-priori bound on the trial state's kinetic energy `‖pΨ‖²`.
    pub kinetic_apriori: f64,
    /// A-priori bound on the trial state's field energy `(Ψ, H_f Ψ)`.
    pub field_apriori: f64,
}

/// Leading-order self-energy `2(α/π)(Λ − ln(1+Λ))`.
pub fn sigma_leading(params: &FieldParams) -> f64 {
    2.0 * params.alpha / PI * (params.lambda - (1.0 + params.lambda).ln())
}

/// Variational upper bound: leading order plus `(2/π²)α²Λ²ln(1+Λ)`.
pub fn sigma_upper_bound(params: &FieldParams) -> f64 {
    let l = params.lambda;
    sigma_leading(params) + 2.0 / (PI * PI) * params.alpha.powi(2) * l * l * (1.0 + l).ln()
}

/// Lowest eigenvalue of the vacuum ⊕ one-photon restriction at zero electron
/// momentum, as `απ⁻¹Λ² + λ*` where `λ* ≤ 0` solves the rank-one secular
/// equation
///
/// ```text
/// λ = −α ∫ |H(k)|² / (k² + k − λ) d³k = −α (2/π) ∫₀^Λ k³/(k² + k − λ) dk.
/// ```
///
/// The coupling density is `|H|²` (the one-photon state is created by the
/// magnetic-field part) and the dispersion `k² + k` is photon energy plus
/// electron recoil. The mixed `G·H` cross term that would couple in `D*D`
/// vanishes exactly ([`crate::field_kernels::gh_cross_integral`]), which is
/// what makes the two-block restriction close on itself.
///
/// `tol` is the root tolerance on `λ*`; the bracket `[−α·I_E·(1+margin), 0]`
/// is guaranteed because `g(λ) = (2/π)∫ k³/(k²+k−λ) dk` decreases as `λ`
/// moves down, so `|λ*| = α·g(λ*) < α·g(0) = α·I_E`.
pub fn sigma_secular(params: &FieldParams, tol: f64) -> Result<f64> {
    let (alpha, lambda) = (params.alpha, params.lambda);
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let range = Interval::new(0.0, lambda)?;
    let quad_failure: RefCell<Option<Error>> = RefCell::new(None);
    let residual = |lam: f64| -> f64 {
        let q = integrate_default(|k| k.powi(3) / (k * k + k - lam), range);
        match q {
            Ok(q) => lam + alpha * 2.0 / PI * q.value,
            Err(e) => {
                *quad_failure.borrow_mut() = Some(e);
                f64::NAN
            }
        }
    };

    let margin = 0.5;
    let bracket = Interval::new(-alpha * e_field_integral(lambda)? * (1.0 + margin), 0.0)?;
    let root = find_root(residual, bracket, tol);
    if let Some(e) = quad_failure.into_inner() {
        return Err(e);
    }
    Ok(alpha * lambda * lambda / PI + root?)
}

/// Concrete error envelope `α²[56Λ²(1+Λ²)/(3π²(1−a)) + 14Λ²/π²]` bounding
/// `|Σ − Σ_lead|` for admissible couplings.
pub fn err_envelope(params: &FieldParams) -> f64 {
    let (alpha, l, a) = (params.alpha, params.lambda, params.a);
    alpha
        * alpha
        * (56.0 * l * l * (1.0 + l * l) / (3.0 * PI * PI * (1.0 - a)) + 14.0 * l * l / (PI * PI))
}

/// The admissibility threshold on the coupling: `aπ/(4Λ)`.
pub fn coupling_bound(params: &FieldParams) -> f64 {
    params.a * PI / (4.0 * params.lambda)
}

/// A-priori bounds on the minimizer's field and kinetic energies.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AprioriBounds {
    /// `(Ψ, H_f Ψ) ≤ 2(α/π)Λ`.
    pub field: f64,
    /// `‖pΨ‖² ≤ 2αΛ(1+Λ²)/(π(1−a))`.
    pub kinetic: f64,
}

/// Field and kinetic a-priori bounds, valid only for admissible couplings
/// `α ≤ aπ/(4Λ)`.
pub fn apriori_bounds(params: &FieldParams) -> Result<AprioriBounds> {
    let bound = coupling_bound(params);
    if params.alpha > bound {
        return Err(Error::CouplingTooLarge {
            alpha: params.alpha,
            bound,
        });
    }
    let (alpha, l, a) = (params.alpha, params.lambda, params.a);
    Ok(AprioriBounds {
        field: 2.0 * alpha / PI * l,
        kinetic: 2.0 * alpha * l * (1.0 + l * l) / (PI * (1.0 - a)),
    })
}

/// Assemble the full report. Fails if the coupling violates admissibility
/// (the a-priori bounds would be meaningless) or the secular solve fails.
pub fn report(params: &FieldParams, secular_tol: f64) -> Result<SelfEnergyReport> {
    let apriori = apriori_bounds(params)?;
    Ok(SelfEnergyReport {
        leading: sigma_leading(params),
        variational_upper: sigma_upper_bound(params),
        err_envelope: err_envelope(params),
        secular_value: sigma_secular(params, secular_tol)?,
        kinetic_apriori: apriori.kinetic,
        field_apriori: apriori.field,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_kernels::{dd_commutator_quadrature, e_field_integral_quadrature};

    fn params(alpha: f64, lambda: f64, a: f64) -> FieldParams {
        FieldParams::new(alpha, lambda, a).unwrap()
    }

    /// Frozen from the antiderivative: 2(α/π)(Λ − ln(1+Λ)).
    const LEADING_PHYSICAL_QUARTER: f64 = 1.247_981_478_025_504_7e-4; // α=1/137, Λ=1/4
    const LEADING_CENTI_UNIT: f64 = 1.953_485_720_622_781_6e-3; // α=0.01, Λ=1
    const UPPER_CENTI_UNIT: f64 = 1.967_531_819_177_318_1e-3;
    /// Secular value at α=0.01, Λ=1, frozen from an independent
    /// high-precision solve of the fixed-point equation.
    const SECULAR_CENTI_UNIT: f64 = 1.954_992_273_433_596_4e-3;
    const ERR_EXAMPLE: f64 = 3.398_481_368_003_413e-5; // α=0.01, Λ=1/4, a=1/2
    const KINETIC_EXAMPLE: f64 = 2.468_644_190_293_997e-3; // α=1/137, Λ=1/4, a=1/2

    #[test]
    fn leading_matches_frozen_values() {
        assert!(
            (sigma_leading(&params(1.0 / 137.0, 0.25, 0.5)) - LEADING_PHYSICAL_QUARTER).abs()
                < 1e-17
        );
        assert!((sigma_leading(&params(0.01, 1.0, 0.5)) - LEADING_CENTI_UNIT).abs() < 1e-16);
        assert_eq!(sigma_leading(&params(0.0, 3.0, 0.5)), 0.0);
    }

    #[test]
    fn leading_agrees_with_the_commutator_route() {
        for (alpha, lambda) in [(1.0 / 137.0, 0.25), (0.01, 1.0), (0.2, 4.0)] {
            let direct = sigma_leading(&params(alpha, lambda, 0.5));
            let via_quadrature = alpha
                * (dd_commutator_quadrature(lambda).unwrap()
                    - e_field_integral_quadrature(lambda).unwrap());
            assert!(
                (direct - via_quadrature).abs() <= 1e-12 * direct.abs().max(1e-300),
                "({alpha}, {lambda}): {direct} vs {via_quadrature}"
            );
        }
    }

    #[test]
    fn upper_bound_matches_frozen_value_and_trivial_limits() {
        assert!((sigma_upper_bound(&params(0.01, 1.0, 0.5)) - UPPER_CENTI_UNIT).abs() < 1e-16);
        assert_eq!(sigma_upper_bound(&params(0.0, 1.0, 0.5)), 0.0);
        assert!(sigma_upper_bound(&params(0.01, 1e-9, 0.5)) < 1e-10);
    }

    #[test]
    fn secular_value_matches_frozen_solve() {
        let s = sigma_secular(&params(0.01, 1.0, 0.5), DEFAULT_SECULAR_TOL).unwrap();
        assert!((s - SECULAR_CENTI_UNIT).abs() < 1e-12, "got {s}");
    }

    #[test]
    fn secular_is_zero_at_zero_coupling() {
        assert_eq!(
            sigma_secular(&params(0.0, 1.0, 0.5), DEFAULT_SECULAR_TOL).unwrap(),
            0.0
        );
    }

    #[test]
    fn secular_slope_at_weak_coupling_is_the_leading_constant() {
        // value/α → Λ²/π − I_E(Λ) as α → 0⁺, which equals Σ_lead/α.
        let alpha = 1e-6;
        let p = params(alpha, 1.0, 0.5);
        let slope = sigma_secular(&p, DEFAULT_SECULAR_TOL).unwrap() / alpha;
        let expected = 1.0 / PI - e_field_integral(1.0).unwrap();
        assert!((slope - expected).abs() < 1e-6, "{slope} vs {expected}");
        assert!((expected - sigma_leading(&p) / alpha).abs() < 1e-15);
    }

    #[test]
    fn secular_sits_between_leading_and_upper() {
        for alpha in [1e-4, 1e-3, 1e-2, 0.05] {
            for lambda in [0.25, 1.0, 4.0] {
                let p = params(alpha, lambda, 0.5);
                let s = sigma_secular(&p, DEFAULT_SECULAR_TOL).unwrap();
                let lead = sigma_leading(&p);
                let upper = sigma_upper_bound(&p);
                assert!(s >= lead - 1e-15, "({alpha}, {lambda}): {s} < {lead}");
                assert!(s <= upper + 1e-12, "({alpha}, {lambda}): {s} > {upper}");
            }
        }
    }

    #[test]
    fn secular_gap_shrinks_quadratically() {
        // Two-point log-log slope across a decade of α.
        let p1 = params(1e-3, 1.0, 0.5);
        let p2 = params(1e-2, 1.0, 0.5);
        let d1 = sigma_secular(&p1, DEFAULT_SECULAR_TOL).unwrap() - sigma_leading(&p1);
        let d2 = sigma_secular(&p2, DEFAULT_SECULAR_TOL).unwrap() - sigma_leading(&p2);
        let slope = (d2 / d1).ln() / 10f64.ln();
        assert!((slope - 2.0).abs() < 0.1, "slope = {slope}");
    }

    #[test]
    fn envelope_matches_frozen_value_and_vanishes_without_coupling() {
        assert!((err_envelope(&params(0.01, 0.25, 0.5)) - ERR_EXAMPLE).abs() < 1e-14);
        assert_eq!(err_envelope(&params(0.0, 0.25, 0.5)), 0.0);
        assert!(err_envelope(&params(0.01, 1e-9, 0.5)) < 1e-20);
    }

    #[test]
    fn apriori_bounds_match_frozen_values() {
        let b = apriori_bounds(&params(1.0 / 137.0, 0.25, 0.5)).unwrap();
        assert!((b.kinetic - KINETIC_EXAMPLE).abs() < 1e-11);
        assert!((b.field - 2.0 * (1.0 / 137.0) / PI * 0.25).abs() < 1e-18);
        let zero = apriori_bounds(&params(0.0, 0.25, 0.5)).unwrap();
        assert_eq!((zero.field, zero.kinetic), (0.0, 0.0));
    }

    #[test]
    fn inadmissible_coupling_is_rejected_with_the_bound() {
        let err = apriori_bounds(&params(1.0, 0.25, 0.1)).unwrap_err();
        match err {
            Error::CouplingTooLarge { alpha, bound } => {
                assert_eq!(alpha, 1.0);
                assert!((bound - 0.1 * PI).abs() < 1e-15);
            }
            other => panic!("expected CouplingTooLarge, got {other:?}"),
        }
        assert!(report(&params(1.0, 0.25, 0.1), DEFAULT_SECULAR_TOL).is_err());
    }

    #[test]
    fn report_satisfies_its_invariants() {
        for alpha in [1e-3, 1e-2, 0.05] {
            for lambda in [0.25, 1.0] {
                let p = params(alpha, lambda, 0.5);
                let r = report(&p, DEFAULT_SECULAR_TOL).unwrap();
                assert!(r.leading >= 0.0);
                assert!(r.err_envelope >= 0.0);
                assert!(r.secular_value <= r.variational_upper + 1e-12);
                assert!((r.secular_value - r.leading).abs() <= r.err_envelope);
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn leading_is_strictly_increasing_in_alpha_and_lambda(
                alpha in 1e-6f64..0.5,
                lambda in 0.05f64..8.0,
                d_alpha in 1e-6f64..0.5,
                d_lambda in 0.05f64..4.0,
            ) {
                let base = sigma_leading(&params(alpha, lambda, 0.5));
                let more_alpha = sigma_leading(&params(alpha + d_alpha, lambda, 0.5));
                let more_lambda = sigma_leading(&params(alpha, lambda + d_lambda, 0.5));
                prop_assert!(more_alpha > base);
                prop_assert!(more_lambda > base);
            }

            #[test]
            fn ordering_and_envelope_hold_for_admissible_couplings(
                frac in 0.05f64..0.99,
                lambda in 0.1f64..4.0,
                a in 0.1f64..0.9,
            ) {
                // Sample α strictly inside the admissible region a·π/(4Λ).
                let alpha = frac * a * std::f64::consts::PI / (4.0 * lambda);
                let p = params(alpha, lambda, a);
                let s = sigma_secular(&p, DEFAULT_SECULAR_TOL).unwrap();
                prop_assert!(s >= 0.0);
                prop_assert!(s <= sigma_upper_bound(&p) + 1e-12);
                prop_assert!((s - sigma_leading(&p)).abs() <= err_envelope(&p));
            }
        }
    }
}
