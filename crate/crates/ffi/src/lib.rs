//! C ABI for the electron–photon energetics library.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`PfStatus`]; results are written
//!   through `out` pointers only on `PF_STATUS_OK`.
//! * `PfFieldParams` and `PfHydrogenModel` are opaque handles created by
//!   `pf_*_new` and released by `pf_*_free`. Handles are immutable, so one
//!   handle may be shared across threads.
//! * On failure, a human-readable message is stored per thread and can be
//!   read with [`pf_last_error_message`]; the pointer stays valid until the
//!   same thread calls another `pf_` function.
//!
//! The matching header lives at `include/pauli_fierz.h`; a test regenerates
//! it with cbindgen and fails if the two drift apart.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use pauli_fierz::field_kernels::{dd_commutator, e_field_integral, gh_cross_integral, FieldParams};
use pauli_fierz::hydrogen_dipole::{
    binding_gain_upper, dipole_coefficient, excitation_integral, radiative_correction,
    sum_rule_partial, HydrogenModel, RadiativeMode,
};
use pauli_fierz::self_energy;
use pauli_fierz::threshold;
use pauli_fierz::Error;

/// Status codes returned by every fallible `pf_` function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    /// A parameter failed validation (range, finiteness, ordering).
    InvalidArgument = 1,
    /// The coupling violates the admissibility bound `a*pi/(4*lambda)`.
    CouplingTooLarge = 2,
    /// Adaptive quadrature exhausted its subdivision budget.
    NoConvergence = 3,
    /// The integrand produced NaN.
    NanIntegrand = 4,
    /// A root finder was called without a sign change on its bracket.
    NotBracketed = 5,
    /// A one-photon amplitude carries no field energy.
    ZeroEnergyState = 6,
    /// No integer charge in 1..=137 satisfies the threshold inequality.
    ChargeOutOfRange = 7,
    /// A required pointer argument was null.
    NullPointer = 8,
}

/// Which side of the threshold `min{...}` produced `alpha_max`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfBranch {
    ErrorVsCorrection = 0,
    AprioriConstraint = 1,
}

/// Self-energy quantities at one parameter point (all energies in units
/// hbar = c = 1, m = 1/2).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfSelfEnergyReport {
    pub leading: f64,
    pub variational_upper: f64,
    pub err_envelope: f64,
    pub secular_value: f64,
    pub kinetic_apriori: f64,
    pub field_apriori: f64,
}

/// Threshold summary: the largest admissible coupling with guaranteed
/// enhancement, and its charge-independent first-branch coefficient.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfThresholdReport {
    pub alpha_max: f64,
    pub coefficient: f64,
    pub a_used: f64,
    pub branch: PfBranch,
}

/// Opaque handle: coupling constant, ultraviolet cutoff, splitting parameter.
pub struct PfFieldParams {
    inner: FieldParams,
}

/// Opaque handle: nuclear charge and fine-structure constant.
pub struct PfHydrogenModel {
    inner: HydrogenModel,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn fail(status: PfStatus, message: String) -> PfStatus {
    let message = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
    status
}

fn fail_null(which: &str) -> PfStatus {
    fail(
        PfStatus::NullPointer,
        format!("required pointer argument `{which}` was null"),
    )
}

fn from_error(e: Error) -> PfStatus {
    let status = match &e {
        Error::InvalidArgument(_) => PfStatus::InvalidArgument,
        Error::CouplingTooLarge { .. } => PfStatus::CouplingTooLarge,
        Error::QuadratureStalled { .. } => PfStatus::NoConvergence,
        Error::NanIntegrand { .. } => PfStatus::NanIntegrand,
        Error::NotBracketed { .. } => PfStatus::NotBracketed,
        Error::ZeroEnergyState => PfStatus::ZeroEnergyState,
        Error::ChargeOutOfRange => PfStatus::ChargeOutOfRange,
    };
    fail(status, e.to_string())
}

/// Write a computed value through an out pointer, translating errors.
unsafe fn deliver<T>(result: Result<T, Error>, out: *mut T) -> PfStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match result {
        Ok(value) => {
            unsafe { out.write(value) };
            PfStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Message describing the most recent failure on this thread, or null if the
/// most recent `pf_` call on this thread succeeded. The pointer is
/// invalidated by the next `pf_` call on the same thread.
#[no_mangle]
pub extern "C" fn pf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// The default fine-structure constant 1/137.
#[no_mangle]
pub extern "C" fn pf_fine_structure() -> f64 {
    pauli_fierz::FINE_STRUCTURE
}

/// Validate and allocate a field-parameter handle.
///
/// # Safety
/// `out` must be a valid pointer. The handle must be released with
/// [`pf_field_params_free`].
#[no_mangle]
pub unsafe extern "C" fn pf_field_params_new(
    alpha: f64,
    lambda: f64,
    a: f64,
    out: *mut *mut PfFieldParams,
) -> PfStatus {
    clear_error();
    if out.is_null() {
        return fail_null("out");
    }
    match FieldParams::new(alpha, lambda, a) {
        Ok(inner) => {
            unsafe { out.write(Box::into_raw(Box::new(PfFieldParams { inner }))) };
            PfStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Release a handle created by [`pf_field_params_new`]. Null is a no-op.
///
/// # Safety
/// `params` must be a pointer returned by [`pf_field_params_new`] that has
/// not already been freed.
#[no_mangle]
pub unsafe extern "C" fn pf_field_params_free(params: *mut PfFieldParams) {
    if !params.is_null() {
        drop(unsafe { Box::from_raw(params) });
    }
}

/// Validate and allocate a hydrogen-model handle.
///
/// # Safety
/// `out` must be a valid pointer. The handle must be released with
/// [`pf_hydrogen_model_free`].
#[no_mangle]
pub unsafe extern "C" fn pf_hydrogen_model_new(
    z: u32,
    beta: f64,
    out: *mut *mut PfHydrogenModel,
) -> PfStatus {
    clear_error();
    if out.is_null() {
        return fail_null("out");
    }
    match HydrogenModel::with_beta(z, beta) {
        Ok(inner) => {
            unsafe { out.write(Box::into_raw(Box::new(PfHydrogenModel { inner }))) };
            PfStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Release a handle created by [`pf_hydrogen_model_new`]. Null is a no-op.
///
/// # Safety
/// `model` must be a pointer returned by [`pf_hydrogen_model_new`] that has
/// not already been freed.
#[no_mangle]
pub unsafe extern "C" fn pf_hydrogen_model_free(model: *mut PfHydrogenModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

unsafe fn params_ref<'a>(p: *const PfFieldParams) -> Result<&'a FieldParams, PfStatus> {
    if p.is_null() {
        Err(fail_null("params"))
    } else {
        Ok(unsafe { &(*p).inner })
    }
}

unsafe fn model_ref<'a>(m: *const PfHydrogenModel) -> Result<&'a HydrogenModel, PfStatus> {
    if m.is_null() {
        Err(fail_null("model"))
    } else {
        Ok(unsafe { &(*m).inner })
    }
}

/// Leading-order self-energy `2(alpha/pi)(Lambda - ln(1+Lambda))`.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_sigma_leading(params: *const PfFieldParams, out: *mut f64) -> PfStatus {
    clear_error();
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(Ok(self_energy::sigma_leading(p)), out) }
}

/// Variational upper bound on the self-energy.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_sigma_upper_bound(
    params: *const PfFieldParams,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(Ok(self_energy::sigma_upper_bound(p)), out) }
}

/// Restricted-sector (vacuum + one photon) self-energy eigenvalue.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_sigma_secular(
    params: *const PfFieldParams,
    tol: f64,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(self_energy::sigma_secular(p, tol), out) }
}

/// The `alpha^2` error envelope on the self-energy expansion.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_err_envelope(params: *const PfFieldParams, out: *mut f64) -> PfStatus {
    clear_error();
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(Ok(self_energy::err_envelope(p)), out) }
}

/// Full self-energy report; uses the library's default secular tolerance if
/// `secular_tol <= 0`.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_self_energy_report(
    params: *const PfFieldParams,
    secular_tol: f64,
    out: *mut PfSelfEnergyReport,
) -> PfStatus {
    clear_error();
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    let tol = if secular_tol > 0.0 {
        secular_tol
    } else {
        self_energy::DEFAULT_SECULAR_TOL
    };
    let report = self_energy::report(p, tol).map(|r| PfSelfEnergyReport {
        leading: r.leading,
        variational_upper: r.variational_upper,
        err_envelope: r.err_envelope,
        secular_value: r.secular_value,
        kinetic_apriori: r.kinetic_apriori,
        field_apriori: r.field_apriori,
    });
    unsafe { deliver(report, out) }
}

/// Closed form of the electric-field second-order integral.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_e_field_integral(lambda: f64, out: *mut f64) -> PfStatus {
    clear_error();
    unsafe { deliver(e_field_integral(lambda), out) }
}

/// Closed form of the `[D, D*]` commutator trace.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_dd_commutator(lambda: f64, out: *mut f64) -> PfStatus {
    clear_error();
    unsafe { deliver(dd_commutator(lambda), out) }
}

/// Mixed form-factor overlap for component pair `(i, j)`, `i, j` in 1..=3;
/// vanishes by transversality.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_gh_cross_integral(
    lambda: f64,
    i: u32,
    j: u32,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    unsafe { deliver(gh_cross_integral(lambda, i as usize, j as usize), out) }
}

/// Hydrogenic level energy `e0/n^2`.
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_level_energy(
    model: *const PfHydrogenModel,
    n: u32,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    unsafe { deliver(m.level_energy(n), out) }
}

/// Dipole overlap between the ground state and the `(n, l=1)` level.
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_dipole_coefficient(
    model: *const PfHydrogenModel,
    n: u32,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    unsafe { deliver(dipole_coefficient(m, n), out) }
}

/// Partial dipole sum `sum |c_n|^2` for `n = 2..=n_max`.
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_sum_rule_partial(
    model: *const PfHydrogenModel,
    n_max: u32,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    unsafe { deliver(sum_rule_partial(m, n_max).map(|s| s.partial_sum), out) }
}

/// Photon-momentum integral of one dipole channel with excitation `gap`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_excitation_integral(lambda: f64, gap: f64, out: *mut f64) -> PfStatus {
    clear_error();
    unsafe { deliver(excitation_integral(lambda, gap), out) }
}

/// Radiative correction with the dipole sum frozen at 2/15 and gaps dropped.
///
/// # Safety
/// `model` and `params` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_radiative_correction_approx(
    model: *const PfHydrogenModel,
    params: *const PfFieldParams,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(radiative_correction(m, p, RadiativeMode::Approx), out) }
}

/// Radiative correction from the explicit bound-state spectral sum.
///
/// # Safety
/// `model` and `params` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_radiative_correction_spectral(
    model: *const PfHydrogenModel,
    params: *const PfFieldParams,
    n_max: u32,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe {
        deliver(
            radiative_correction(m, p, RadiativeMode::Spectral { n_max }),
            out,
        )
    }
}

/// Upper bound on the binding-energy gain.
///
/// # Safety
/// `model` and `params` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_binding_gain_upper(
    model: *const PfHydrogenModel,
    params: *const PfFieldParams,
    out: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    unsafe { deliver(Ok(binding_gain_upper(m, p)), out) }
}

/// Threshold coupling `alpha_max` and its active branch at `(lambda, a)`.
///
/// # Safety
/// `model` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_threshold_report(
    model: *const PfHydrogenModel,
    lambda: f64,
    a: f64,
    out: *mut PfThresholdReport,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    let report = threshold::alpha_max(m, lambda, a).map(|r| PfThresholdReport {
        alpha_max: r.alpha_max,
        coefficient: r.coefficient,
        a_used: r.a_used,
        branch: match r.branch {
            threshold::Branch::ErrorVsCorrection => PfBranch::ErrorVsCorrection,
            threshold::Branch::AprioriConstraint => PfBranch::AprioriConstraint,
        },
    });
    unsafe { deliver(report, out) }
}

/// Smallest integer charge in 1..=137 with `alpha <= coefficient*(beta*Z)^2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_z_min(
    beta: f64,
    alpha: f64,
    lambda: f64,
    coefficient: f64,
    out: *mut u32,
) -> PfStatus {
    clear_error();
    unsafe { deliver(threshold::z_min(beta, alpha, lambda, coefficient), out) }
}

/// Enhancement certificate: `enhanced` is nonzero iff the radiative
/// correction strictly dominates the error envelope; `margin` receives the
/// difference.
///
/// # Safety
/// `model` and `params` must be live handles; `enhanced` and `margin` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_enhancement_certificate(
    model: *const PfHydrogenModel,
    params: *const PfFieldParams,
    enhanced: *mut i32,
    margin: *mut f64,
) -> PfStatus {
    clear_error();
    let m = match unsafe { model_ref(model) } {
        Ok(m) => m,
        Err(s) => return s,
    };
    let p = match unsafe { params_ref(params) } {
        Ok(p) => p,
        Err(s) => return s,
    };
    if enhanced.is_null() {
        return fail_null("enhanced");
    }
    if margin.is_null() {
        return fail_null("margin");
    }
    match threshold::enhancement_certificate(m, p) {
        Ok((ok, value)) => {
            unsafe {
                enhanced.write(i32::from(ok));
                margin.write(value);
            }
            PfStatus::Ok
        }
        Err(e) => from_error(e),
    }
}
