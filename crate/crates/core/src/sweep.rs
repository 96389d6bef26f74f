//! Parameter sweeps: vary one knob over an ordered grid while holding the
//! rest fixed, and tabulate the headline quantities for each point.

use crate::field_kernels::FieldParams;
use crate::hydrogen_dipole::{radiative_correction, HydrogenModel, RadiativeMode};
use crate::self_energy::{
    err_envelope, sigma_leading, sigma_secular, sigma_upper_bound, DEFAULT_SECULAR_TOL,
};
use crate::threshold::{alpha_max, enhancement_certificate};
use crate::{Error, Result};

/// Which parameter the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    Alpha,
    Lambda,
    Z,
    A,
}

impl SweepVariable {
    pub fn name(&self) -> &'static str {
        match self {
            SweepVariable::Alpha => "alpha",
            SweepVariable::Lambda => "lambda",
            SweepVariable::Z => "Z",
            SweepVariable::A => "a",
        }
    }
}

/// A validated sweep: the varied knob, its strictly increasing grid, and the
/// fixed field/atom configuration the grid is applied to.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    variable: SweepVariable,
    values: Vec<f64>,
    base_params: FieldParams,
    base_model: HydrogenModel,
}

impl SweepSpec {
    pub fn new(
        variable: SweepVariable,
        values: Vec<f64>,
        base_params: FieldParams,
        base_model: HydrogenModel,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "sweep needs at least one grid value".into(),
            ));
        }
        for pair in values.windows(2) {
            if pair[0].is_nan() || pair[1].is_nan() || pair[1] <= pair[0] {
                return Err(Error::InvalidArgument(format!(
                    "sweep values must be strictly increasing, got {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        if variable == SweepVariable::Z {
            for &v in &values {
                if !v.is_finite() || v < 1.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
                    return Err(Error::InvalidArgument(format!(
                        "Z sweep values must be positive integers, got {v}"
                    )));
                }
            }
        }
        Ok(Self {
            variable,
            values,
            base_params,
            base_model,
        })
    }

    pub fn variable(&self) -> SweepVariable {
        self.variable
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The `(params, model)` configuration at one grid value.
    fn resolve(&self, value: f64) -> Result<(FieldParams, HydrogenModel)> {
        let p = &self.base_params;
        let m = &self.base_model;
        Ok(match self.variable {
            SweepVariable::Alpha => (FieldParams::new(value, p.lambda, p.a)?, *m),
            SweepVariable::Lambda => (FieldParams::new(p.alpha, value, p.a)?, *m),
            SweepVariable::A => (FieldParams::new(p.alpha, p.lambda, value)?, *m),
            SweepVariable::Z => (*p, HydrogenModel::with_beta(value as u32, m.beta)?),
        })
    }
}

/// One sweep point: the resolved configuration and its headline numbers.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub alpha: f64,
    pub lambda: f64,
    pub a: f64,
    pub z: u32,
    pub sigma_leading: f64,
    pub sigma_upper_bound: f64,
    pub err_envelope: f64,
    pub sigma_secular: f64,
    pub radiative_approx: f64,
    pub alpha_max: f64,
    pub coefficient: f64,
    pub margin: f64,
}

/// Evaluate the sweep, one row per grid value, in input order.
pub fn run(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.values
        .iter()
        .map(|&value| {
            let (params, model) = spec.resolve(value)?;
            let threshold = alpha_max(&model, params.lambda, params.a)?;
            let (_, margin) = enhancement_certificate(&model, &params)?;
            Ok(SweepRow {
                value,
                alpha: params.alpha,
                lambda: params.lambda,
                a: params.a,
                z: model.z,
                sigma_leading: sigma_leading(&params),
                sigma_upper_bound: sigma_upper_bound(&params),
                err_envelope: err_envelope(&params),
                sigma_secular: sigma_secular(&params, DEFAULT_SECULAR_TOL)?,
                radiative_approx: radiative_correction(&model, &params, RadiativeMode::Approx)?,
                alpha_max: threshold.alpha_max,
                coefficient: threshold.coefficient,
                margin,
            })
        })
        .collect()
}
