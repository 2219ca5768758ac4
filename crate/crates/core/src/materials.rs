//! Metal parameter sets and their dielectric response.
//!
//! The local response is the Drude permittivity. The nonlocal response is the
//! semiclassical Lindhard form with a number-conserving relaxation-time
//! correction, split into longitudinal and transverse parts. Its `k → 0`
//! limit is the Drude form, so "local" and "nonlocal" curves share one set of
//! inputs.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{ELECTRON_MASS, EV, HBAR, SPEED_OF_LIGHT};
use crate::error::{require_positive, Error, Result};

/// Relative permittivity of a medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComplexPermittivity(pub Complex64);

impl ComplexPermittivity {
    pub const VACUUM: ComplexPermittivity = ComplexPermittivity(Complex64::new(1.0, 0.0));

    pub fn new(re: f64, im: f64) -> Self {
        Self(Complex64::new(re, im))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }
}

impl From<Complex64> for ComplexPermittivity {
    fn from(value: Complex64) -> Self {
        Self(value)
    }
}

impl fmt::Display for ComplexPermittivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}i", self.0.re, self.0.im)
    }
}

/// A metal described by its plasma frequency, collision rate and Fermi energy.
///
/// The Fermi velocity, wavevector and wavelength are derived once at
/// construction from the free-electron relations.
#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    name: String,
    plasma_frequency: f64,
    collision_rate: f64,
    fermi_energy: f64,
    fermi_velocity: f64,
    fermi_wavevector: f64,
    fermi_wavelength: f64,
}

/// On-disk preset layout (flat key = value, TOML-compatible).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialFile {
    pub name: String,
    pub omega_p_rad_s: f64,
    pub nu_rad_s: f64,
    pub fermi_energy_ev: f64,
}

impl Material {
    /// `fermi_energy` is in joules; use [`Material::from_ev`] for eV input.
    pub fn new(name: impl Into<String>, plasma_frequency: f64, collision_rate: f64, fermi_energy: f64) -> Result<Self> {
        require_positive("plasma frequency", plasma_frequency)?;
        require_positive("collision rate", collision_rate)?;
        require_positive("Fermi energy", fermi_energy)?;
        let fermi_velocity = (2.0 * fermi_energy / ELECTRON_MASS).sqrt();
        let fermi_wavevector = ELECTRON_MASS * fermi_velocity / HBAR;
        let fermi_wavelength = 2.0 * std::f64::consts::PI / fermi_wavevector;
        Ok(Self {
            name: name.into(),
            plasma_frequency,
            collision_rate,
            fermi_energy,
            fermi_velocity,
            fermi_wavevector,
            fermi_wavelength,
        })
    }

    pub fn from_ev(
        name: impl Into<String>,
        plasma_frequency: f64,
        collision_rate: f64,
        fermi_energy_ev: f64,
    ) -> Result<Self> {
        Self::new(name, plasma_frequency, collision_rate, fermi_energy_ev * EV)
    }

    /// Copper with a GHz-range operating point in mind:
    /// E_F = 7 eV, ν = 6π×10¹² s⁻¹, ω_p = 1.6×10¹⁶ s⁻¹.
    pub fn copper() -> Self {
        Self::from_ev("copper", 1.6e16, 6.0 * std::f64::consts::PI * 1e12, 7.0).expect("copper preset is valid")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "copper" | "cu" => Some(Self::copper()),
            _ => None,
        }
    }

    pub fn from_preset_str(text: &str) -> Result<Self> {
        let file: MaterialFile =
            toml::from_str(text).map_err(|e| Error::Validation(format!("material preset: {e}")))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &MaterialFile) -> Result<Self> {
        Self::from_ev(
            file.name.clone(),
            file.omega_p_rad_s,
            file.nu_rad_s,
            file.fermi_energy_ev,
        )
        .map_err(|e| Error::Validation(format!("material preset: {e}")))
    }

    /// Resolve a built-in preset name, falling back to reading a preset file.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if let Some(m) = Self::preset(name_or_path) {
            return Ok(m);
        }
        let path = Path::new(name_or_path);
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Validation(format!(
                "unknown material preset or unreadable file `{name_or_path}`: {e}"
            ))
        })?;
        Self::from_preset_str(&text)
    }

    pub fn to_file(&self) -> MaterialFile {
        MaterialFile {
            name: self.name.clone(),
            omega_p_rad_s: self.plasma_frequency,
            nu_rad_s: self.collision_rate,
            fermi_energy_ev: self.fermi_energy / EV,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    /// ω_p in rad/s.
    pub fn plasma_frequency(&self) -> f64 {
        self.plasma_frequency
    }
    /// ν in rad/s.
    pub fn collision_rate(&self) -> f64 {
        self.collision_rate
    }
    /// E_F in joules.
    pub fn fermi_energy(&self) -> f64 {
        self.fermi_energy
    }
    pub fn fermi_velocity(&self) -> f64 {
        self.fermi_velocity
    }
    pub fn fermi_wavevector(&self) -> f64 {
        self.fermi_wavevector
    }
    pub fn fermi_wavelength(&self) -> f64 {
        self.fermi_wavelength
    }
    /// Mean free path v_F / ν.
    pub fn mean_free_path(&self) -> f64 {
        self.fermi_velocity / self.collision_rate
    }
}

/// Local (Drude) permittivity `1 − ω_p² / (ω(ω + iν))`.
pub fn drude_epsilon(material: &Material, omega: f64) -> Result<ComplexPermittivity> {
    require_positive("omega", omega)?;
    let wp2 = material.plasma_frequency * material.plasma_frequency;
    let denom = Complex64::new(omega, 0.0) * Complex64::new(omega, material.collision_rate);
    Ok(ComplexPermittivity(Complex64::new(1.0, 0.0) - wp2 / denom))
}

// Beyond this modulus the closed forms lose ~|x|² digits to cancellation, so
// the atanh series is used instead.
const SERIES_THRESHOLD: f64 = 4.0;

fn check_off_cut(x: Complex64) -> Result<()> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::Domain(format!("Lindhard argument not finite: {x}")));
    }
    if x.im == 0.0 && x.re.abs() <= 1.0 {
        return Err(Error::Domain(format!(
            "Lindhard argument {x} lies on the branch cut [-1, 1]"
        )));
    }
    Ok(())
}

/// `ln(x + 1) − ln(x − 1)` with principal logarithms.
#[inline]
fn log_ratio(x: Complex64) -> Complex64 {
    (x + 1.0).ln() - (x - 1.0).ln()
}

/// Sum `Σ_{n≥n0} coeff(n) yⁿ` until the terms stop contributing.
fn power_series(y: Complex64, n0: u32, coeff: impl Fn(u32) -> f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = y.powu(n0);
    for n in n0..200 {
        let term = power * coeff(n);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
        power *= y;
    }
    sum
}

/// Longitudinal Lindhard function `f_l(x) = 1 − (x/2) ln((x+1)/(x−1))`.
pub fn lindhard_f_l(x: Complex64) -> Result<Complex64> {
    check_off_cut(x)?;
    if x.norm() > SERIES_THRESHOLD {
        // f_l = −Σ_{n≥1} x^{−2n} / (2n+1)
        let y = (x * x).inv();
        Ok(-power_series(y, 1, |n| 1.0 / f64::from(2 * n + 1)))
    } else {
        Ok(1.0 - 0.5 * x * log_ratio(x))
    }
}

/// Transverse Lindhard function `f_t(x) = (3/2)x² − (3/4)x(x²−1) ln((x+1)/(x−1))`.
pub fn lindhard_f_t(x: Complex64) -> Result<Complex64> {
    check_off_cut(x)?;
    if x.norm() > SERIES_THRESHOLD {
        // f_t = 3 Σ_{m≥0} x^{−2m} / ((2m+1)(2m+3))
        let y = (x * x).inv();
        Ok(3.0 * power_series(y, 0, |m| 1.0 / (f64::from(2 * m + 1) * f64::from(2 * m + 3))))
    } else {
        let x2 = x * x;
        Ok(1.5 * x2 - 0.75 * x * (x2 - 1.0) * log_ratio(x))
    }
}

fn lindhard_argument(material: &Material, k: f64, omega: f64) -> Complex64 {
    Complex64::new(omega, material.collision_rate) / (k * material.fermi_velocity)
}

/// Longitudinal permittivity ε_l(k, ω).
pub fn epsilon_l(material: &Material, k: f64, omega: f64) -> Result<ComplexPermittivity> {
    require_positive("k", k)?;
    require_positive("omega", omega)?;
    let x = lindhard_argument(material, k, omega);
    let f = lindhard_f_l(x)?;
    let kv = k * material.fermi_velocity;
    let screening = 3.0 * material.plasma_frequency * material.plasma_frequency / (kv * kv);
    let w = Complex64::new(omega, material.collision_rate);
    let relax = w * f / (omega + Complex64::new(0.0, material.collision_rate) * f);
    Ok(ComplexPermittivity(1.0 + screening * relax))
}

/// Transverse permittivity ε_t(k, ω).
pub fn epsilon_t(material: &Material, k: f64, omega: f64) -> Result<ComplexPermittivity> {
    require_positive("k", k)?;
    require_positive("omega", omega)?;
    let x = lindhard_argument(material, k, omega);
    let f = lindhard_f_t(x)?;
    let wp2 = material.plasma_frequency * material.plasma_frequency;
    let denom = Complex64::new(omega, 0.0) * Complex64::new(omega, material.collision_rate);
    Ok(ComplexPermittivity(1.0 - wp2 / denom * f))
}

/// Skin depth `c / (ω Im √ε_Drude)`; `+∞` for a transparent medium.
pub fn skin_depth(material: &Material, omega: f64) -> Result<f64> {
    let eps = drude_epsilon(material, omega)?.value();
    let im = eps.sqrt().im;
    if im <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(SPEED_OF_LIGHT / (omega * im))
}

/// Dielectric response of the half-space, as seen by the reflection and
/// field-fluctuation kernels.
///
/// [`Material`] implements the Drude/Lindhard model; [`UniformPermittivity`]
/// is a wavevector-independent stand-in used to check the nonlocal machinery
/// against the local closed forms.
pub trait DielectricResponse: Sync {
    fn local(&self, omega: f64) -> Result<ComplexPermittivity>;
    fn longitudinal(&self, k: f64, omega: f64) -> Result<ComplexPermittivity>;
    fn transverse(&self, k: f64, omega: f64) -> Result<ComplexPermittivity>;
}

impl DielectricResponse for Material {
    fn local(&self, omega: f64) -> Result<ComplexPermittivity> {
        drude_epsilon(self, omega)
    }
    fn longitudinal(&self, k: f64, omega: f64) -> Result<ComplexPermittivity> {
        epsilon_l(self, k, omega)
    }
    fn transverse(&self, k: f64, omega: f64) -> Result<ComplexPermittivity> {
        epsilon_t(self, k, omega)
    }
}

/// Same permittivity at every wavevector and frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformPermittivity(pub ComplexPermittivity);

impl DielectricResponse for UniformPermittivity {
    fn local(&self, _omega: f64) -> Result<ComplexPermittivity> {
        Ok(self.0)
    }
    fn longitudinal(&self, _k: f64, _omega: f64) -> Result<ComplexPermittivity> {
        Ok(self.0)
    }
    fn transverse(&self, _k: f64, _omega: f64) -> Result<ComplexPermittivity> {
        Ok(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const OMEGA: f64 = 6.0 * PI * 1e8;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn copper_derived_quantities() {
        let cu = Material::copper();
        let lf = cu.fermi_wavelength();
        assert!(lf > 0.4e-9 && lf < 0.5e-9, "λ_F = {lf}");
        let vf = (2.0 * cu.fermi_energy() / ELECTRON_MASS).sqrt();
        assert_eq!(cu.fermi_velocity(), vf);
        assert_relative_eq!(cu.fermi_wavevector() * HBAR, ELECTRON_MASS * vf, max_relative = 1e-15);
        assert_relative_eq!(lf * cu.fermi_wavevector(), 2.0 * PI, max_relative = 1e-15);
    }

    #[test]
    fn rejects_non_positive_parameters() {
        assert!(Material::from_ev("x", 0.0, 1.0, 1.0).is_err());
        assert!(Material::from_ev("x", 1.0, -1.0, 1.0).is_err());
        assert!(Material::from_ev("x", 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn drude_copper_value() {
        // Hand evaluation: 1 − ω_p²(ω − iν)/(ω(ω² + ν²)).
        let cu = Material::copper();
        let (wp, nu) = (1.6e16_f64, 6.0 * PI * 1e12);
        let d = OMEGA * (OMEGA * OMEGA + nu * nu);
        let expected = c(1.0 - wp * wp * OMEGA / d, wp * wp * nu / d);
        let eps = drude_epsilon(&cu, OMEGA).unwrap().value();
        assert_relative_eq!(eps.re, expected.re, max_relative = 1e-12);
        assert_relative_eq!(eps.im, expected.im, max_relative = 1e-12);
        assert_relative_eq!(eps.re, -7.2e5, max_relative = 0.01);
        assert_relative_eq!(eps.im, 7.2e9, max_relative = 0.01);
    }

    #[test]
    fn drude_vacuum_limit_is_exact() {
        // ω_p² underflows to zero, leaving exactly 1.
        let m = Material::from_ev("thin", 1e-200, 1e13, 7.0).unwrap();
        assert_eq!(drude_epsilon(&m, OMEGA).unwrap().value(), c(1.0, 0.0));
    }

    #[test]
    fn drude_strong_damping_series() {
        let (wp, nu, w) = (1.6e16_f64, 1e18_f64, 1e9_f64);
        let m = Material::from_ev("damped", wp, nu, 7.0).unwrap();
        // ω_p² ν / (ω(ω²+ν²)) = (ω_p²/(ων)) Σ (−ω²/ν²)ⁿ, four terms.
        let r = (w / nu).powi(2);
        let series = wp * wp / (w * nu) * (1.0 - r + r * r - r * r * r);
        let im = drude_epsilon(&m, w).unwrap().value().im;
        assert_relative_eq!(im, series, max_relative = 1e-12);
    }

    #[test]
    fn drude_rejects_non_positive_frequency() {
        let cu = Material::copper();
        assert!(matches!(drude_epsilon(&cu, 0.0), Err(Error::Domain(_))));
        assert!(drude_epsilon(&cu, -1.0).is_err());
    }

    #[test]
    fn f_l_at_two() {
        let v = lindhard_f_l(c(2.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 1.0 - 3f64.ln(), max_relative = 1e-14);
        assert!(v.im.abs() < 1e-15);
        assert_relative_eq!(v.re, -0.0986, epsilon = 1e-4);
    }

    #[test]
    fn f_t_at_two() {
        let v = lindhard_f_t(c(2.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 6.0 - 4.5 * 3f64.ln(), max_relative = 1e-13);
        assert_relative_eq!(v.re, 1.0562, epsilon = 1e-4);
    }

    // Laurent oracle from ln((x+1)/(x−1)) = 2/x + 2/(3x³) + 2/(5x⁵) + ...
    fn f_l_laurent(x: Complex64) -> Complex64 {
        let x2 = x * x;
        -1.0 / (3.0 * x2) - 1.0 / (5.0 * x2 * x2)
    }

    #[test]
    fn f_l_large_argument() {
        for x in [
            c(1e3, 0.0),
            c(0.0, 1e3),
            c(600.0, 800.0),
            c(-1e3 / 2f64.sqrt(), 1e3 / 2f64.sqrt()),
        ] {
            let v = lindhard_f_l(x).unwrap();
            let o = f_l_laurent(x);
            assert!((v - o).norm() / o.norm() < 1e-8, "x = {x}: {v} vs {o}");
        }
        let x = c(1e6, 1e6);
        let v = lindhard_f_l(x).unwrap();
        let o = -1.0 / (3.0 * x * x);
        assert!((v - o).norm() / o.norm() < 1e-6);
    }

    #[test]
    fn f_t_large_argument() {
        for x in [c(1e4, 0.0), c(0.0, 1e4), c(6e3, 8e3)] {
            let v = lindhard_f_t(x).unwrap();
            assert!((v - 1.0).norm() < 1e-6);
        }
        let v = lindhard_f_t(c(0.0, 1e6)).unwrap();
        assert!((v - 1.0).norm() < 1e-10);
        // second term of the series: 1 + 1/(5x²)
        let x = c(30.0, 40.0);
        let v = lindhard_f_t(x).unwrap();
        let o = 1.0 + 1.0 / (5.0 * x * x) + 3.0 / (35.0 * x * x * x * x);
        assert!((v - o).norm() < 1e-10);
    }

    #[test]
    fn series_and_closed_form_agree_at_threshold() {
        for angle in [0.1, 0.5, 1.0, 1.5, 2.5, 3.0] {
            let x = Complex64::from_polar(SERIES_THRESHOLD * 1.0001, angle);
            let lo = Complex64::from_polar(SERIES_THRESHOLD * 0.9999, angle);
            let (a, b) = (lindhard_f_l(x).unwrap(), lindhard_f_l(lo).unwrap());
            assert!((a - b).norm() / a.norm() < 1e-3);
            let closed = 1.0 - 0.5 * x * log_ratio(x);
            assert!((a - closed).norm() / a.norm() < 1e-12);
            let x2 = x * x;
            let closed_t = 1.5 * x2 - 0.75 * x * (x2 - 1.0) * log_ratio(x);
            let t = lindhard_f_t(x).unwrap();
            assert!((t - closed_t).norm() / t.norm() < 1e-12);
        }
    }

    #[test]
    fn f_on_branch_cut_is_rejected() {
        for re in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert!(lindhard_f_l(c(re, 0.0)).is_err());
            assert!(lindhard_f_t(c(re, 0.0)).is_err());
        }
        assert!(lindhard_f_l(c(0.3, 1e-12)).is_ok());
    }

    #[test]
    fn epsilon_vacuum_limit_is_exact() {
        let m = Material::from_ev("thin", 1e-200, 1e13, 7.0).unwrap();
        let k = m.fermi_wavevector();
        assert_eq!(epsilon_l(&m, k, OMEGA).unwrap().value(), c(1.0, 0.0));
        assert_eq!(epsilon_t(&m, k, OMEGA).unwrap().value(), c(1.0, 0.0));
    }

    #[test]
    fn epsilon_transverse_collapses_to_drude() {
        let cu = Material::copper();
        let d = drude_epsilon(&cu, OMEGA).unwrap().value();
        let t = epsilon_t(&cu, 1e-6 * cu.fermi_wavevector(), OMEGA).unwrap().value();
        assert!((t - d).norm() / d.norm() < 1e-6);
    }

    #[test]
    fn epsilon_longitudinal_small_k_carries_diffusive_correction() {
        // At finite k the longitudinal response differs from Drude by the
        // leading terms (3/5 + iν/(3ω)) / x² of the large-x expansion. This is
        // the number-conserving (diffusion) correction and it is large for
        // ν ≫ ω.
        let cu = Material::copper();
        let k = 1e-6 * cu.fermi_wavevector();
        let d = drude_epsilon(&cu, OMEGA).unwrap().value();
        let l = epsilon_l(&cu, k, OMEGA).unwrap().value();
        let x = lindhard_argument(&cu, k, OMEGA);
        let nu = cu.collision_rate();
        let predicted =
            ((d - 1.0) * (0.6 / (x * x) - Complex64::new(0.0, nu / (3.0 * OMEGA)) / (x * x))).norm() / d.norm();
        let observed = (l - d).norm() / d.norm();
        assert_relative_eq!(observed, predicted, max_relative = 0.01);
        // The correction vanishes at high frequency.
        let w = 1e15;
        let d = drude_epsilon(&cu, w).unwrap().value();
        let l = epsilon_l(&cu, k, w).unwrap().value();
        assert!((l - d).norm() / d.norm() < 1e-6);
    }

    #[test]
    fn epsilon_golden_values_at_fermi_wavevector() {
        // Frozen from a standalone 50-digit evaluation (mpmath, principal
        // logs) made before the library existed.
        let cu = Material::copper();
        let k = cu.fermi_wavevector();
        let l = epsilon_l(&cu, k, OMEGA).unwrap().value();
        assert_relative_eq!(l.re, 2.697605145112396, max_relative = 1e-10);
        assert_relative_eq!(l.im, 2.3651297391376017e-7, max_relative = 1e-7);
        let t = epsilon_t(&cu, k, OMEGA).unwrap().value();
        assert_relative_eq!(t.re, -0.6952433059241469, max_relative = 1e-7);
        assert_relative_eq!(t.im, 15027880.481054967, max_relative = 1e-10);
    }

    #[test]
    fn epsilon_rejects_bad_inputs() {
        let cu = Material::copper();
        assert!(epsilon_l(&cu, 0.0, OMEGA).is_err());
        assert!(epsilon_t(&cu, 1.0, 0.0).is_err());
    }

    #[test]
    fn skin_depth_copper() {
        let cu = Material::copper();
        let delta = skin_depth(&cu, OMEGA).unwrap();
        assert!((delta / 3e-6 - 1.0).abs() < 0.15, "δ = {delta}");
        // good-conductor estimate c√2 / (ω √(ω_p²/(ων)))
        let wp = cu.plasma_frequency();
        let approx = SPEED_OF_LIGHT * 2f64.sqrt() / (OMEGA * (wp * wp / (OMEGA * cu.collision_rate())).sqrt());
        assert_relative_eq!(delta, approx, max_relative = 1e-3);
    }

    #[test]
    fn skin_depth_collisionless_limit() {
        let (wp, w) = (1.6e16, 1e15);
        let m = Material::from_ev("clean", wp, 1e3, 7.0).unwrap();
        let delta = skin_depth(&m, w).unwrap();
        assert_relative_eq!(delta, SPEED_OF_LIGHT / (wp * wp - w * w).sqrt(), max_relative = 1e-9);
    }

    #[test]
    fn skin_depth_transparent() {
        let m = Material::from_ev("thin", 1e-200, 1e13, 7.0).unwrap();
        assert_eq!(skin_depth(&m, OMEGA).unwrap(), f64::INFINITY);
        assert!(skin_depth(&m, 0.0).is_err());
    }

    #[test]
    fn preset_file_round_trip() {
        let text =
            "name = \"cu-file\"\nomega_p_rad_s = 1.6e16\nnu_rad_s = 1.884955592153876e13\nfermi_energy_ev = 7.0\n";
        let m = Material::from_preset_str(text).unwrap();
        assert_eq!(m.name(), "cu-file");
        assert_relative_eq!(
            m.fermi_wavelength(),
            Material::copper().fermi_wavelength(),
            max_relative = 1e-14
        );
        let back = toml::to_string(&m.to_file()).unwrap();
        let again = Material::from_preset_str(&back).unwrap();
        assert_relative_eq!(again.fermi_energy(), m.fermi_energy(), max_relative = 1e-15);
    }

    #[test]
    fn preset_file_errors() {
        assert!(matches!(
            Material::from_preset_str("name = \"x\"\nomega_p_rad_s = 1.0\n"),
            Err(Error::Validation(_))
        ));
        assert!(Material::from_preset_str(
            "name = \"x\"\nomega_p_rad_s = -1.0\nnu_rad_s = 1.0\nfermi_energy_ev = 1.0\n"
        )
        .is_err());
        assert!(Material::from_preset_str(
            "name = \"x\"\nomega_p_rad_s = 1.0\nnu_rad_s = 1.0\nfermi_energy_ev = 1.0\ncolour = 3\n"
        )
        .is_err());
        assert!(Material::load("no-such-material-or-file").is_err());
    }
}
