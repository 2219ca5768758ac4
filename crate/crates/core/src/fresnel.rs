//! Reflection coefficients of the vacuum–metal interface.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{require_positive, Error, Result};
use crate::materials::{ComplexPermittivity, DielectricResponse};
use crate::quadrature::{try_integrate_semi_infinite, Integral, QuadratureConfig, Tail};

/// s- and p-polarised reflection amplitudes at one transverse wavevector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReflectionPair {
    pub r_s: Complex64,
    pub r_p: Complex64,
    /// Transverse wavevector, 1/m.
    pub p: f64,
    /// Angular frequency, rad/s.
    pub omega: f64,
}

fn require_non_negative(name: &str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name} must be non-negative and finite, got {value}"
        )))
    }
}

/// Normal wavevector in vacuum: real for `p ≤ ω/c`, positive imaginary beyond.
pub fn vacuum_normal_wavevector(p: f64, omega: f64) -> Result<Complex64> {
    require_non_negative("p", p)?;
    require_positive("omega", omega)?;
    Ok(normal_wavevector(p, omega / SPEED_OF_LIGHT))
}

#[inline]
fn normal_wavevector(p: f64, k0: f64) -> Complex64 {
    let d = (k0 - p) * (k0 + p);
    if d >= 0.0 {
        Complex64::new(d.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-d).sqrt())
    }
}

/// Normal wavevector in the metal, on the branch that decays into it.
/// `q1_sq` is the vacuum `k₀² − p²`.
#[inline]
fn metal_normal_wavevector(q1_sq: f64, k0: f64, eps: Complex64) -> Complex64 {
    let q = ((eps - 1.0) * (k0 * k0) + q1_sq).sqrt();
    if q.im < 0.0 {
        -q
    } else {
        q
    }
}

/// Local Fresnel coefficients for a half-space of permittivity `eps`.
///
/// Evaluated in the rearranged forms
/// `r_s = (1−ε)k₀² / (q₁+q_m)²` and
/// `r_p = (ε−1)(εq₁² − p²) / (εq₁+q_m)²`,
/// which are algebraically identical to the textbook ratios but do not lose
/// digits to cancellation when `p ≫ ω/c`.
pub fn local_reflection(p: f64, omega: f64, eps: ComplexPermittivity) -> Result<ReflectionPair> {
    require_non_negative("p", p)?;
    require_positive("omega", omega)?;
    Ok(local_reflection_unchecked(
        p,
        omega / SPEED_OF_LIGHT,
        eps.value(),
        omega,
    ))
}

#[inline]
pub(crate) fn local_reflection_unchecked(p: f64, k0: f64, eps: Complex64, omega: f64) -> ReflectionPair {
    let q1_sq = (k0 - p) * (k0 + p);
    let q1 = normal_wavevector(p, k0);
    let qm = metal_normal_wavevector(q1_sq, k0, eps);
    let s_den = q1 + qm;
    let p_den = eps * q1 + qm;
    let r_s = (1.0 - eps) * (k0 * k0) / (s_den * s_den);
    let r_p = (eps - 1.0) * (eps * q1_sq - p * p) / (p_den * p_den);
    ReflectionPair { r_s, r_p, p, omega }
}

/// Quasistatic p-polarised reflection with a wavevector-dependent
/// longitudinal response (specular surface):
/// `r_p = (1 − I)/(1 + I)`, `I = (2p/π)∫₀^∞ dκ / (k² ε_l(k, ω))`, `k² = p² + κ²`.
pub fn nonlocal_rp_quasistatic<R>(response: &R, p: f64, omega: f64, cfg: &QuadratureConfig) -> Result<Complex64>
where
    R: DielectricResponse + ?Sized,
{
    nonlocal_rp_integral(response, p, omega, cfg).map(|(r, _)| r)
}

/// As [`nonlocal_rp_quasistatic`], also returning the κ-integral
/// `A = 1 − I` with its error estimate.
pub fn nonlocal_rp_integral<R>(
    response: &R,
    p: f64,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, Integral)>
where
    R: DielectricResponse + ?Sized,
{
    require_positive("p", p)?;
    require_positive("omega", omega)?;
    // (2p/π)∫dκ/k² = 1, so 1 − I = (2p/π)∫dκ (1 − 1/ε_l)/k².
    let integral = try_integrate_semi_infinite(
        |kappa| {
            let k2 = p * p + kappa * kappa;
            let eps = response.longitudinal(k2.sqrt(), omega)?.value();
            Ok((1.0 - eps.inv()) / k2)
        },
        0.0,
        p,
        Tail::PowerLaw,
        cfg,
    )?
    .scaled(2.0 * p / PI);
    let one_minus_i = integral.value;
    Ok((one_minus_i / (2.0 - one_minus_i), integral))
}

/// Quasistatic s-polarised reflection to leading order in ω/c:
/// `r_s = (ω²/(4p²c²)) ((4p³/π)∫₀^∞ dκ ε_t(k, ω)/k⁴ − 1)`.
pub fn nonlocal_rs_quasistatic<R>(response: &R, p: f64, omega: f64, cfg: &QuadratureConfig) -> Result<Complex64>
where
    R: DielectricResponse + ?Sized,
{
    rs_quasistatic_with_light_speed(response, p, omega, SPEED_OF_LIGHT, cfg)
}

pub(crate) fn rs_quasistatic_with_light_speed<R>(
    response: &R,
    p: f64,
    omega: f64,
    light_speed: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64>
where
    R: DielectricResponse + ?Sized,
{
    require_positive("p", p)?;
    require_positive("omega", omega)?;
    // (4p³/π)∫dκ/k⁴ = 1, so the bracket is (4p³/π)∫dκ (ε_t − 1)/k⁴.
    let bracket = try_integrate_semi_infinite(
        |kappa| {
            let k2 = p * p + kappa * kappa;
            let eps = response.transverse(k2.sqrt(), omega)?.value();
            Ok((eps - 1.0) / (k2 * k2))
        },
        0.0,
        p,
        Tail::PowerLaw,
        cfg,
    )?
    .value
        * (4.0 * p * p * p / PI);
    let k0 = omega / light_speed;
    Ok(bracket * (k0 * k0 / (4.0 * p * p)))
}
