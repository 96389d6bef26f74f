//! A short tour of the library surface: self-energy numbers at a physical
//! coupling, the hydrogenic radiative correction, and the threshold report.
//!
//! Run with `cargo run -p pauli-fierz --example tour`.

use pauli_fierz::hydrogen_dipole::{radiative_correction, RadiativeMode};
use pauli_fierz::self_energy::{self, DEFAULT_SECULAR_TOL};
use pauli_fierz::threshold::{alpha_max, enhancement_certificate};
use pauli_fierz::{FieldParams, HydrogenModel, FINE_STRUCTURE};

fn main() -> pauli_fierz::Result<()> {
    // Self-energy of a free electron at coupling 0.01, cutoff 1.
    let params = FieldParams::new(0.01, 1.0, 0.5)?;
    let report = self_energy::report(&params, DEFAULT_SECULAR_TOL)?;
    println!("sigma_leading     = {:.9e}", report.leading);
    println!("sigma_upper_bound = {:.9e}", report.variational_upper);
    println!("sigma_secular     = {:.9e}", report.secular_value);
    println!("err_envelope      = {:.9e}", report.err_envelope);

    // Radiative correction for a hydrogen-like atom with Z = 13 at the
    // physical coupling alpha = beta = 1/137 and cutoff 1/4.
    let model = HydrogenModel::new(13)?;
    let physical = FieldParams::new(FINE_STRUCTURE, 0.25, 0.642)?;
    let rc = radiative_correction(&model, &physical, RadiativeMode::Approx)?;
    println!("radiative_approx  = {:.9e}", rc);

    // Largest coupling with guaranteed enhancement at (lambda, a), and
    // whether the physical coupling clears it.
    let threshold = alpha_max(&model, 0.25, 0.642)?;
    let (enhanced, margin) = enhancement_certificate(&model, &physical)?;
    println!("alpha_max         = {:.9e}", threshold.alpha_max);
    println!("enhanced          = {enhanced} (margin {margin:.9e})");
    Ok(())
}
