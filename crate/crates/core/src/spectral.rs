//! Electric and magnetic field spectral densities at height `z` above the
//! half-space.
//!
//! All tensors are diagonal in the surface frame with `χ_yy = χ_xx`. The
//! convention is one-sided in ω > 0, exactly as consumed by the golden-rule
//! rates in [`crate::relaxation`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{EPSILON_0, HBAR, SPEED_OF_LIGHT};
use crate::error::{require_positive, Error, Result};
use crate::fresnel::{local_reflection_unchecked, nonlocal_rp_quasistatic, nonlocal_rs_quasistatic};
use crate::materials::{skin_depth, DielectricResponse, Material};
use crate::quadrature::{try_integrate_finite, try_integrate_semi_infinite, Integral, QuadratureConfig, Tail};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Electric,
    Magnetic,
}

impl FieldKind {
    /// Units of the spectral density.
    pub fn units(self) -> &'static str {
        match self {
            FieldKind::Electric => "V^2 m^-2 s",
            FieldKind::Magnetic => "T^2 s",
        }
    }
}

/// Which physical approximation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelSelector {
    LocalQuasistatic,
    NonlocalQuasistatic,
    LocalRetarded,
    Auto,
}

impl ModelSelector {
    pub const CONCRETE: [ModelSelector; 3] = [
        ModelSelector::LocalQuasistatic,
        ModelSelector::NonlocalQuasistatic,
        ModelSelector::LocalRetarded,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModelSelector::LocalQuasistatic => "local-quasistatic",
            ModelSelector::NonlocalQuasistatic => "nonlocal-quasistatic",
            ModelSelector::LocalRetarded => "local-retarded",
            ModelSelector::Auto => "auto",
        }
    }

    pub fn is_quasistatic(self) -> bool {
        matches!(
            self,
            ModelSelector::LocalQuasistatic | ModelSelector::NonlocalQuasistatic
        )
    }
}

impl fmt::Display for ModelSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local-quasistatic" => Ok(ModelSelector::LocalQuasistatic),
            "nonlocal-quasistatic" => Ok(ModelSelector::NonlocalQuasistatic),
            "local-retarded" => Ok(ModelSelector::LocalRetarded),
            "auto" => Ok(ModelSelector::Auto),
            other => Err(Error::Validation(format!(
                "unknown model `{other}` (expected local-quasistatic, nonlocal-quasistatic, local-retarded or auto)"
            ))),
        }
    }
}

/// Signed split of the magnetic `χ_xx` into its `r_s` and `r_p` parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MagneticDecomposition {
    pub chi_xx_rs: f64,
    pub chi_xx_rp: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralDensityTensor {
    pub field: FieldKind,
    pub chi_xx: f64,
    pub chi_zz: f64,
    /// Height above the surface, m.
    pub z: f64,
    /// Angular frequency, rad/s.
    pub omega: f64,
    /// Model actually evaluated (never `Auto`).
    pub model: ModelSelector,
    pub error_xx: f64,
    pub error_zz: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<MagneticDecomposition>,
}

impl SpectralDensityTensor {
    pub fn units(&self) -> &'static str {
        self.field.units()
    }

    /// Error estimate of the larger of the two components.
    pub fn error_estimate(&self) -> f64 {
        self.error_xx.max(self.error_zz)
    }
}

fn check_point(z: f64, omega: f64) -> Result<()> {
    require_positive("z", z)?;
    require_positive("omega", omega)
}

/// Direct numerical evaluation of the retarded local spectral densities.
///
/// The transverse-wavevector integral is split at `p = ω/c`. The propagating
/// part uses `p = (ω/c) sin θ` and the evanescent part `u = √(p² − ω²/c²)`;
/// both substitutions cancel the `1/q` endpoint singularity.
fn local_retarded<R>(
    response: &R,
    z: f64,
    omega: f64,
    field: FieldKind,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    check_point(z, omega)?;
    let eps = response.local(omega)?.value();
    let k0 = omega / SPEED_OF_LIGHT;
    let k02 = k0 * k0;
    // Coefficient pair entering (xx, zz): electric uses (r_s, r_p), magnetic the swap.
    let pick = |p: f64| {
        let r = local_reflection_unchecked(p, k0, eps, omega);
        match field {
            FieldKind::Electric => (r.r_s, r.r_p),
            FieldKind::Magnetic => (r.r_p, r.r_s),
        }
    };

    // xx integrand in the real slot and zz in the imaginary slot, so that one
    // set of reflection coefficients serves both with separate tolerances.
    let propagating = try_integrate_finite(
        |theta| {
            let (sin, cos) = theta.sin_cos();
            let p = k0 * sin;
            let q = k0 * cos;
            let (a, b) = pick(p);
            let phase = Complex64::new(0.0, 2.0 * q * z).exp();
            let xx = (k0 * sin) * (k02 * a - q * q * b) * phase;
            let zz = (k0 * sin) * (p * p) * b * phase;
            Ok(Complex64::new(xx.re, zz.re))
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        cfg,
    )?;
    let evanescent = try_integrate_semi_infinite(
        |u| {
            let p = (u * u + k02).sqrt();
            let (a, b) = pick(p);
            let decay = (-2.0 * u * z).exp();
            // Re(−i X) = Im X
            let xx = (k02 * a + u * u * b).im * decay;
            let zz = (p * p) * b.im * decay;
            Ok(Complex64::new(xx, zz))
        },
        0.0,
        1.0 / (2.0 * z),
        Tail::Exponential,
        cfg,
    )?;

    let light = match field {
        FieldKind::Electric => 1.0,
        FieldKind::Magnetic => 1.0 / (SPEED_OF_LIGHT * SPEED_OF_LIGHT),
    };
    let pref_xx = HBAR / (2.0 * EPSILON_0) * light;
    let pref_zz = HBAR / EPSILON_0 * light;
    Ok(SpectralDensityTensor {
        field,
        chi_xx: pref_xx * (propagating.value.re + evanescent.value.re),
        chi_zz: pref_zz * (propagating.value.im + evanescent.value.im),
        z,
        omega,
        model: ModelSelector::LocalRetarded,
        error_xx: pref_xx * (propagating.error_re + evanescent.error_re),
        error_zz: pref_zz * (propagating.error_im + evanescent.error_im),
        decomposition: None,
    })
}

pub fn chi_e_local_retarded<R>(
    response: &R,
    z: f64,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    local_retarded(response, z, omega, FieldKind::Electric, cfg)
}

pub fn chi_b_local_retarded<R>(
    response: &R,
    z: f64,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    local_retarded(response, z, omega, FieldKind::Magnetic, cfg)
}

/// Closed-form quasistatic electric densities:
/// `χ_xx = ħ/(8ε₀z³) Im[(ε−1)/(ε+1)]`, `χ_zz = 2χ_xx`.
pub fn chi_e_quasistatic_local<R>(response: &R, z: f64, omega: f64) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    check_point(z, omega)?;
    let eps = response.local(omega)?.value();
    // Im[(ε−1)/(ε+1)] = 2 Im ε / |ε+1|²
    let loss = 2.0 * eps.im / (eps + 1.0).norm_sqr();
    let chi_xx = HBAR / (8.0 * EPSILON_0 * z * z * z) * loss;
    Ok(SpectralDensityTensor {
        field: FieldKind::Electric,
        chi_xx,
        chi_zz: 2.0 * chi_xx,
        z,
        omega,
        model: ModelSelector::LocalQuasistatic,
        error_xx: 0.0,
        error_zz: 0.0,
        decomposition: None,
    })
}

/// Closed-form quasistatic magnetic densities:
/// `χ_zz = ħω²/(8ε₀c⁴z) Im(ε−1)`, `χ_xx = χ_zz/2`.
pub fn chi_b_quasistatic_local<R>(response: &R, z: f64, omega: f64) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    check_point(z, omega)?;
    let eps = response.local(omega)?.value();
    let c2 = SPEED_OF_LIGHT * SPEED_OF_LIGHT;
    let chi_zz = HBAR * omega * omega / (8.0 * EPSILON_0 * c2 * c2 * z) * eps.im;
    Ok(SpectralDensityTensor {
        field: FieldKind::Magnetic,
        chi_xx: 0.5 * chi_zz,
        chi_zz,
        z,
        omega,
        model: ModelSelector::LocalQuasistatic,
        error_xx: 0.0,
        error_zz: 0.0,
        // the closed form keeps only the r_s channel
        decomposition: Some(MagneticDecomposition {
            chi_xx_rs: 0.5 * chi_zz,
            chi_xx_rp: 0.0,
        }),
    })
}

/// Quasistatic electric densities with the nonlocal `r_p`:
/// `χ_zz = (ħ/ε₀)∫₀^∞ p² e^{−2pz} Im r_p(p) dp`, `χ_xx = χ_zz/2`.
pub fn chi_e_quasistatic_nonlocal<R>(
    response: &R,
    z: f64,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    check_point(z, omega)?;
    let inner = cfg.nested();
    let integral = try_integrate_semi_infinite(
        |p| {
            if p == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let rp = nonlocal_rp_quasistatic(response, p, omega, &inner)?;
            Ok(Complex64::new(p * p * (-2.0 * p * z).exp() * rp.im, 0.0))
        },
        0.0,
        1.0 / (2.0 * z),
        Tail::Exponential,
        cfg,
    )?;
    let pref = HBAR / EPSILON_0;
    let chi_zz = pref * integral.value.re;
    let err = pref * integral.error_re;
    Ok(SpectralDensityTensor {
        field: FieldKind::Electric,
        chi_xx: 0.5 * chi_zz,
        chi_zz,
        z,
        omega,
        model: ModelSelector::NonlocalQuasistatic,
        error_xx: 0.5 * err,
        error_zz: err,
        decomposition: None,
    })
}

/// Quasistatic magnetic densities with the nonlocal coefficients:
/// `χ_zz = (ħ/(ε₀c²))∫ p² e^{−2pz} Im r_s dp`,
/// `χ_xx = (ħ/(2ε₀c²))∫ e^{−2pz} Im[(ω²/c²) r_p + p² r_s] dp`.
///
/// The `r_s` and `r_p` parts of `χ_xx` are reported separately.
pub fn chi_b_quasistatic_nonlocal<R>(
    response: &R,
    z: f64,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor>
where
    R: DielectricResponse + ?Sized,
{
    check_point(z, omega)?;
    let inner = cfg.nested();
    // real slot: p² Im r_s, imaginary slot: Im r_p, both with e^{−2pz}
    let integral: Integral = try_integrate_semi_infinite(
        |p| {
            if p == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let decay = (-2.0 * p * z).exp();
            let rs = nonlocal_rs_quasistatic(response, p, omega, &inner)?;
            let rp = nonlocal_rp_quasistatic(response, p, omega, &inner)?;
            Ok(Complex64::new(p * p * rs.im * decay, rp.im * decay))
        },
        0.0,
        1.0 / (2.0 * z),
        Tail::Exponential,
        cfg,
    )?;
    let c2 = SPEED_OF_LIGHT * SPEED_OF_LIGHT;
    let k02 = omega * omega / c2;
    let pref_zz = HBAR / (EPSILON_0 * c2);
    let pref_xx = 0.5 * pref_zz;
    let chi_zz = pref_zz * integral.value.re;
    let rs_part = pref_xx * integral.value.re;
    let rp_part = pref_xx * k02 * integral.value.im;
    Ok(SpectralDensityTensor {
        field: FieldKind::Magnetic,
        chi_xx: rs_part + rp_part,
        chi_zz,
        z,
        omega,
        model: ModelSelector::NonlocalQuasistatic,
        error_xx: pref_xx * (integral.error_re + k02 * integral.error_im),
        error_zz: pref_zz * integral.error_re,
        decomposition: Some(MagneticDecomposition {
            chi_xx_rs: rs_part,
            chi_xx_rp: rp_part,
        }),
    })
}

/// Outcome of the distance-regime table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub model: ModelSelector,
    /// `30 λ_F ≤ z < δ/10`, where the nonlocal electric noise exceeds the local one.
    pub enhancement: bool,
}

/// Pick the model for a distance: nonlocal quasistatic below `30 λ_F` and up
/// to a tenth of the skin depth, local retarded beyond.
pub fn regime_select(material: &Material, z: f64, omega: f64) -> Result<Regime> {
    check_point(z, omega)?;
    let nonlocal_edge = 30.0 * material.fermi_wavelength();
    let quasistatic_edge = skin_depth(material, omega)? / 10.0;
    let regime = if z < nonlocal_edge {
        Regime {
            model: ModelSelector::NonlocalQuasistatic,
            enhancement: false,
        }
    } else if z < quasistatic_edge {
        Regime {
            model: ModelSelector::NonlocalQuasistatic,
            enhancement: true,
        }
    } else {
        Regime {
            model: ModelSelector::LocalRetarded,
            enhancement: false,
        }
    };
    Ok(regime)
}

/// Evaluate one field kind under one model; `Auto` is resolved first.
pub fn spectral_density(
    material: &Material,
    field: FieldKind,
    z: f64,
    omega: f64,
    model: ModelSelector,
    cfg: &QuadratureConfig,
) -> Result<SpectralDensityTensor> {
    let model = match model {
        ModelSelector::Auto => regime_select(material, z, omega)?.model,
        m => m,
    };
    match (field, model) {
        (FieldKind::Electric, ModelSelector::LocalQuasistatic) => chi_e_quasistatic_local(material, z, omega),
        (FieldKind::Magnetic, ModelSelector::LocalQuasistatic) => chi_b_quasistatic_local(material, z, omega),
        (FieldKind::Electric, ModelSelector::NonlocalQuasistatic) => {
            chi_e_quasistatic_nonlocal(material, z, omega, cfg)
        }
        (FieldKind::Magnetic, ModelSelector::NonlocalQuasistatic) => {
            chi_b_quasistatic_nonlocal(material, z, omega, cfg)
        }
        (FieldKind::Electric, ModelSelector::LocalRetarded) => chi_e_local_retarded(material, z, omega, cfg),
        (FieldKind::Magnetic, ModelSelector::LocalRetarded) => chi_b_local_retarded(material, z, omega, cfg),
        (_, ModelSelector::Auto) => unreachable!("auto resolved above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::{drude_epsilon, UniformPermittivity};
    use std::f64::consts::PI;

    const OMEGA: f64 = 6.0 * PI * 1e8;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn cu() -> Material {
        Material::copper()
    }

    fn vacuum_like() -> Material {
        Material::from_ev("thin", 1e-200, 1e13, 7.0).unwrap()
    }

    #[test]
    fn model_names_round_trip() {
        for m in [ModelSelector::Auto].into_iter().chain(ModelSelector::CONCRETE) {
            assert_eq!(m.as_str().parse::<ModelSelector>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{m}\""));
        }
        assert!("quasi".parse::<ModelSelector>().is_err());
    }

    #[test]
    fn electric_local_quasistatic_copper_value() {
        let m = cu();
        let z = 10.0 * m.fermi_wavelength();
        let t = chi_e_quasistatic_local(&m, z, OMEGA).unwrap();
        let eps = drude_epsilon(&m, OMEGA).unwrap().value();
        let loss = ((eps - 1.0) / (eps + 1.0)).im;
        assert!((loss / 2.78e-10 - 1.0).abs() < 0.01);
        assert!((t.chi_xx / 4.3e-9 - 1.0).abs() < 0.05, "{}", t.chi_xx);
        assert_eq!(t.chi_zz, 2.0 * t.chi_xx);
        assert!((t.chi_xx - HBAR / (8.0 * EPSILON_0 * z.powi(3)) * loss).abs() < 1e-6 * t.chi_xx);
    }

    #[test]
    fn electric_local_quasistatic_lossless_is_silent() {
        let lossless = UniformPermittivity(crate::ComplexPermittivity::new(-50.0, 0.0));
        let t = chi_e_quasistatic_local(&lossless, 1e-9, OMEGA).unwrap();
        assert_eq!(t.chi_xx, 0.0);
    }

    #[test]
    fn cube_and_inverse_laws() {
        let m = cu();
        let z = 5e-9;
        let e1 = chi_e_quasistatic_local(&m, z, OMEGA).unwrap().chi_xx;
        let e2 = chi_e_quasistatic_local(&m, 2.0 * z, OMEGA).unwrap().chi_xx;
        assert!((e2 / e1 - 0.125).abs() < 1e-15);
        let b1 = chi_b_quasistatic_local(&m, z, OMEGA).unwrap().chi_zz;
        let b2 = chi_b_quasistatic_local(&m, 2.0 * z, OMEGA).unwrap().chi_zz;
        assert!((b2 / b1 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn magnetic_local_quasistatic_copper_value() {
        let m = cu();
        let t = chi_b_quasistatic_local(&m, 10.0 * m.fermi_wavelength(), OMEGA).unwrap();
        assert!((t.chi_zz / 1.0e-21 - 1.0).abs() < 0.05, "{}", t.chi_zz);
        assert_eq!(t.chi_xx, 0.5 * t.chi_zz);
        // ν ≫ ω: Im ε ∝ 1/ω so χ_zz ∝ ω
        let t2 = chi_b_quasistatic_local(&m, 10.0 * m.fermi_wavelength(), 2.0 * OMEGA).unwrap();
        assert!((t2.chi_zz / t.chi_zz - 2.0).abs() < 1e-6);
    }

    #[test]
    fn retarded_vacuum_is_silent() {
        let m = vacuum_like();
        let e = chi_e_local_retarded(&m, 1e-7, OMEGA, &cfg()).unwrap();
        let b = chi_b_local_retarded(&m, 1e-7, OMEGA, &cfg()).unwrap();
        for v in [e.chi_xx, e.chi_zz, b.chi_xx, b.chi_zz] {
            assert!(v.abs() <= cfg().abs_tol, "{v}");
        }
    }

    #[test]
    fn retarded_electric_matches_quasistatic_deep_inside() {
        let m = cu();
        let z = 10.0 * m.fermi_wavelength();
        let r = chi_e_local_retarded(&m, z, OMEGA, &cfg()).unwrap();
        assert!((r.chi_zz / r.chi_xx - 2.0).abs() < 0.01);
        let q = chi_e_quasistatic_local(&m, z, OMEGA).unwrap();
        assert!((r.chi_xx / q.chi_xx - 1.0).abs() < 1e-4);
    }

    #[test]
    fn retarded_magnetic_decomposition_deep_inside() {
        // With the local coefficients the r_p term of the magnetic χ_xx is
        // (ħk₀²/(4ε₀c²z)) Im r_p⁰, so χ_xx − that term = χ_zz/2 in the
        // quasistatic limit.
        let m = cu();
        let z = 10.0 * m.fermi_wavelength();
        let r = chi_b_local_retarded(&m, z, OMEGA, &cfg()).unwrap();
        let eps = drude_epsilon(&m, OMEGA).unwrap().value();
        let k0 = OMEGA / SPEED_OF_LIGHT;
        let rp_term = HBAR * k0 * k0 / (4.0 * EPSILON_0 * SPEED_OF_LIGHT.powi(2) * z) * ((eps - 1.0) / (eps + 1.0)).im;
        let lhs = r.chi_xx - rp_term;
        assert!((lhs / (0.5 * r.chi_zz) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn uniform_response_reproduces_local_closed_forms() {
        let m = cu();
        let eps = drude_epsilon(&m, OMEGA).unwrap();
        let stub = UniformPermittivity(eps);
        let z = 10.0 * m.fermi_wavelength();
        let tol = 10.0 * cfg().rel_tol;
        let e = chi_e_quasistatic_nonlocal(&stub, z, OMEGA, &cfg()).unwrap();
        let el = chi_e_quasistatic_local(&stub, z, OMEGA).unwrap();
        assert!(
            (e.chi_zz / el.chi_zz - 1.0).abs() < tol,
            "{} vs {}",
            e.chi_zz,
            el.chi_zz
        );
        assert!((e.chi_xx / el.chi_xx - 1.0).abs() < tol);
        let b = chi_b_quasistatic_nonlocal(&stub, z, OMEGA, &cfg()).unwrap();
        let bl = chi_b_quasistatic_local(&stub, z, OMEGA).unwrap();
        assert!((b.chi_zz / bl.chi_zz - 1.0).abs() < tol);
        assert!((b.chi_xx / bl.chi_xx - 1.0).abs() < tol);
    }

    #[test]
    fn nonlocal_vacuum_is_silent() {
        let m = vacuum_like();
        let b = chi_b_quasistatic_nonlocal(&m, 1e-8, OMEGA, &cfg()).unwrap();
        assert!(b.chi_xx.abs() <= cfg().abs_tol && b.chi_zz.abs() <= cfg().abs_tol);
        let e = chi_e_quasistatic_nonlocal(&m, 1e-8, OMEGA, &cfg()).unwrap();
        assert!(e.chi_zz.abs() <= cfg().abs_tol);
    }

    #[test]
    fn nonlocal_electric_keeps_anisotropy() {
        let m = cu();
        let e = chi_e_quasistatic_nonlocal(&m, 3.0 * m.fermi_wavelength(), OMEGA, &cfg()).unwrap();
        assert_eq!(e.chi_zz, 2.0 * e.chi_xx);
        assert!(e.chi_xx > 0.0);
        assert!(e.error_zz < 1e-6 * e.chi_zz);
    }

    #[test]
    fn regime_table() {
        let m = cu();
        let lf = m.fermi_wavelength();
        let r = regime_select(&m, lf, OMEGA).unwrap();
        assert_eq!(
            r,
            Regime {
                model: ModelSelector::NonlocalQuasistatic,
                enhancement: false
            }
        );
        let r = regime_select(&m, 100.0 * lf, OMEGA).unwrap();
        assert_eq!(
            r,
            Regime {
                model: ModelSelector::NonlocalQuasistatic,
                enhancement: true
            }
        );
        let r = regime_select(&m, 1e-6, OMEGA).unwrap();
        assert_eq!(r.model, ModelSelector::LocalRetarded);
        assert!(regime_select(&m, 0.0, OMEGA).is_err());
    }

    #[test]
    fn dispatcher_resolves_auto() {
        let m = cu();
        let t = spectral_density(&m, FieldKind::Electric, 1e-6, OMEGA, ModelSelector::Auto, &cfg()).unwrap();
        assert_eq!(t.model, ModelSelector::LocalRetarded);
        assert!(spectral_density(
            &m,
            FieldKind::Magnetic,
            -1.0,
            OMEGA,
            ModelSelector::LocalQuasistatic,
            &cfg()
        )
        .is_err());
    }
}
