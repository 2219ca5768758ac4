//! Golden-rule relaxation of point-dipole qubits.
//!
//! `1/T₁ = (m²/ħ²) χ_ii(ω_Z) coth(ħω_Z / 2k_BT)` with `m` the electric dipole
//! (charge qubit, electric noise) or magnetic moment (spin qubit, magnetic
//! noise).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::{BOHR_MAGNETON, BOHR_RADIUS, BOLTZMANN, ELEMENTARY_CHARGE, HBAR};
use crate::error::{require_positive, Error, Result};
use crate::materials::Material;
use crate::quadrature::QuadratureConfig;
use crate::spectral::{spectral_density, FieldKind, ModelSelector, SpectralDensityTensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QubitKind {
    /// Electric dipole coupled to electric noise; moment in C·m.
    Charge,
    /// Magnetic dipole coupled to magnetic noise; moment in J/T.
    Spin,
}

impl QubitKind {
    pub fn field(self) -> FieldKind {
        match self {
            QubitKind::Charge => FieldKind::Electric,
            QubitKind::Spin => FieldKind::Magnetic,
        }
    }

    /// `|e| a_B` for charge qubits, `μ_B` for spins.
    pub fn default_moment(self) -> f64 {
        match self {
            QubitKind::Charge => ELEMENTARY_CHARGE * BOHR_RADIUS,
            QubitKind::Spin => BOHR_MAGNETON,
        }
    }

    pub fn moment_units(self) -> &'static str {
        match self {
            QubitKind::Charge => "C m",
            QubitKind::Spin => "J/T",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            QubitKind::Charge => "charge",
            QubitKind::Spin => "spin",
        }
    }
}

impl fmt::Display for QubitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QubitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "charge" => Ok(QubitKind::Charge),
            "spin" => Ok(QubitKind::Spin),
            other => Err(Error::Validation(format!(
                "unknown qubit `{other}` (expected charge or spin)"
            ))),
        }
    }
}

/// Dipole orientation; `y` is equivalent to `x` above a half-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    X,
    Y,
    Z,
}

impl Orientation {
    pub fn component(self, chi: &SpectralDensityTensor) -> (f64, f64) {
        match self {
            Orientation::X | Orientation::Y => (chi.chi_xx, chi.error_xx),
            Orientation::Z => (chi.chi_zz, chi.error_zz),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::X => "x",
            Orientation::Y => "y",
            Orientation::Z => "z",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Orientation::X),
            "y" => Ok(Orientation::Y),
            "z" => Ok(Orientation::Z),
            other => Err(Error::Validation(format!(
                "unknown orientation `{other}` (expected x, y or z)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitSpec {
    pub kind: QubitKind,
    pub moment: f64,
    pub orientation: Orientation,
    /// Level splitting ω_Z, rad/s.
    pub splitting: f64,
}

impl QubitSpec {
    pub fn new(kind: QubitKind, moment: f64, orientation: Orientation, splitting: f64) -> Result<Self> {
        let spec = QubitSpec {
            kind,
            moment,
            orientation,
            splitting,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Qubit with the kind's reference moment.
    pub fn reference(kind: QubitKind, orientation: Orientation, splitting: f64) -> Result<Self> {
        Self::new(kind, kind.default_moment(), orientation, splitting)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("moment", self.moment)?;
        require_positive("level splitting", self.splitting)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelaxationResult {
    /// 1/s
    pub rate: f64,
    /// s
    pub t1: f64,
    /// Spectral-density component driving the transition.
    pub chi: f64,
    pub chi_error: f64,
    pub chi_units: String,
    pub thermal_factor: f64,
    pub model: ModelSelector,
}

/// `coth(ħω / 2k_BT)`, exactly 1 at `T = 0`.
pub fn thermal_factor(omega: f64, temperature: f64) -> Result<f64> {
    require_positive("omega", omega)?;
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return Err(Error::Domain(format!(
            "temperature must be finite and non-negative, got {temperature}"
        )));
    }
    if temperature == 0.0 {
        return Ok(1.0);
    }
    let x = HBAR * omega / (2.0 * BOLTZMANN * temperature);
    // tanh is accurate for small x and saturates cleanly for large x
    Ok(1.0 / x.tanh())
}

/// Rate and T1 from an already evaluated spectral density.
pub fn relaxation_from_tensor(
    qubit: &QubitSpec,
    chi: &SpectralDensityTensor,
    temperature: f64,
) -> Result<RelaxationResult> {
    qubit.validate()?;
    if chi.field != qubit.kind.field() {
        return Err(Error::Validation(format!(
            "{} qubit needs {:?} noise, got {:?}",
            qubit.kind,
            qubit.kind.field(),
            chi.field
        )));
    }
    let coth = thermal_factor(qubit.splitting, temperature)?;
    let (value, error) = qubit.orientation.component(chi);
    let rate = qubit.moment * qubit.moment / (HBAR * HBAR) * value * coth;
    Ok(RelaxationResult {
        rate,
        t1: 1.0 / rate,
        chi: value,
        chi_error: error,
        chi_units: chi.units().to_string(),
        thermal_factor: coth,
        model: chi.model,
    })
}

/// Evaluate the noise at `ω_Z` and height `z` and convert it to a relaxation time.
pub fn t1(
    material: &Material,
    qubit: &QubitSpec,
    z: f64,
    temperature: f64,
    model: ModelSelector,
    cfg: &QuadratureConfig,
) -> Result<RelaxationResult> {
    qubit.validate()?;
    thermal_factor(qubit.splitting, temperature)?;
    let chi = spectral_density(material, qubit.kind.field(), z, qubit.splitting, model, cfg)?;
    relaxation_from_tensor(qubit, &chi, temperature)
}
