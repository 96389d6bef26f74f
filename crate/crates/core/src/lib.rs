//! Ground-state energetics of one non-relativistic electron coupled to a
//! quantized photon field, in units ħ = c = 1, m = 1/2.
//!
//! The library computes, for a coupling `α` and a sharp ultraviolet cutoff `Λ`
//! on the photon momentum:
//!
//! * the leading-order self-energy `2(α/π)(Λ − ln(1+Λ))`, a variational upper
//!   bound on it, and the concrete `α²` error envelope that controls how far
//!   the true self-energy can drift from leading order ([`self_energy`]);
//! * the photon form-factor integrals behind those numbers, each paired with
//!   an independent quadrature oracle ([`field_kernels`]);
//! * the hydrogenic dipole spectrum and the radiative correction to the
//!   binding energy of a Coulomb ground state ([`hydrogen_dipole`]);
//! * the coupling threshold `α_max(Λ, Z, a)` below which the radiative
//!   correction provably beats the self-energy error, and the smallest
//!   nuclear charge where that happens at the physical coupling
//!   ([`threshold`]).
//!
//! Every closed form is cross-checked against adaptive Gauss–Kronrod
//! quadrature and bracketed root finding from [`numerics`]; [`checks`] bundles
//! those comparisons into a reusable verification suite.

pub mod checks;
pub mod field_kernels;
pub mod hydrogen_dipole;
pub mod numerics;
pub mod output;
pub mod self_energy;
pub mod sweep;
pub mod threshold;

pub use field_kernels::{FieldParams, InequalityKind, ProfileKind, RadialProfile};
pub use hydrogen_dipole::{DipoleSpectrum, HydrogenModel, RadiativeMode};
pub use numerics::{Interval, QuadResult};
pub use self_energy::SelfEnergyReport;
pub use threshold::{Branch, ThresholdReport};

/// Physical fine-structure constant used as the default for `β` (and for the
/// coupling `α` wherever a physical value is wanted).
pub const FINE_STRUCTURE: f64 = 1.0 / 137.0;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The admissibility condition `α ≤ aπ/(4Λ)` on the coupling fails.
    #[error("coupling alpha = {alpha} exceeds the admissible bound a*pi/(4*lambda) = {bound}")]
    CouplingTooLarge { alpha: f64, bound: f64 },
    #[error(
        "quadrature did not converge within {subdivisions} subdivisions \
         (best estimate {value:e} with error estimate {abs_error_estimate:e})"
    )]
    QuadratureStalled {
        value: f64,
        abs_error_estimate: f64,
        subdivisions: usize,
    },
    #[error("integrand returned NaN at abscissa {abscissa}")]
    NanIntegrand { abscissa: f64 },
    #[error("root not bracketed on [{lo}, {hi}]: g(lo) = {g_lo:e}, g(hi) = {g_hi:e}")]
    NotBracketed {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
    },
    #[error("one-photon amplitude carries zero field energy; inequality ratio undefined")]
    ZeroEnergyState,
    #[error("no integer charge Z in 1..=137 satisfies alpha <= coefficient*(beta*Z)^2")]
    ChargeOutOfRange,
}

pub type Result<T> = std::result::Result<T, Error>;
