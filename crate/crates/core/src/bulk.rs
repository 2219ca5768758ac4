//! Photon Green's function inside a uniform nonlocal metal.
//!
//! `D_ij(k, ω) = 4πħ/(ω²ε_t/c² − k²) (δ_ij − c²k_ik_j/(ω²ε_l) + k_ik_j(ε_t−ε_l)/(k²ε_l))`
//!
//! At coincident points the angular average `⟨k_ik_j⟩ = δ_ij k²/3` leaves a
//! single radial integral. Its imaginary part is negative for a passive
//! medium; values here are reported as the positive spectral weight `−Im D`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{EPSILON_0, HBAR, SPEED_OF_LIGHT};
use crate::error::{require_positive, Error, Result};
use crate::materials::{epsilon_l, epsilon_t, Material};
use crate::parallel::Execution;
use crate::quadrature::{try_integrate_finite, Integral, QuadratureConfig};
use crate::spectral::chi_e_quasistatic_nonlocal;

/// Radial cutoffs in units of `k_F`, tried in order.
pub const CUTOFF_LADDER: [f64; 4] = [3.0, 10.0, 30.0, 100.0];
/// Relative change between successive cutoffs accepted as converged.
pub const LADDER_TOLERANCE: f64 = 0.01;
/// Lower end of the radial integral in units of `k_F`; the integrand vanishes as `k⁴`.
pub const K_FLOOR: f64 = 1e-9;
/// Height of the surface comparison in units of `λ_F`.
pub const SURFACE_HEIGHT: f64 = 1e-3;

pub type Tensor3 = [[Complex64; 3]; 3];

/// The k-space tensor for wavevector `k` (m⁻¹), in J·s·m³.
pub fn bulk_green_k(material: &Material, k: [f64; 3], omega: f64) -> Result<Tensor3> {
    require_positive("omega", omega)?;
    let k2: f64 = k.iter().map(|c| c * c).sum();
    let kk = k2.sqrt();
    require_positive("|k|", kk)?;
    let el = epsilon_l(material, kk, omega)?.value();
    let et = epsilon_t(material, kk, omega)?.value();
    let q2 = omega * omega / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    let pre = 4.0 * PI * HBAR / (q2 * et - k2);
    let kk_coef = -1.0 / (q2 * el) + (et - el) / (k2 * el);
    let mut d = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in d.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            *cell = pre * (delta + k[i] * k[j] * kk_coef);
        }
    }
    Ok(d)
}

/// Angle-averaged printed tensor element, evaluated as written.
fn averaged_direct(el: Complex64, et: Complex64, k2: f64, q2: f64) -> Complex64 {
    4.0 * PI * HBAR / (q2 * et - k2) * (1.0 - k2 / (3.0 * q2 * el) + (et - el) / (3.0 * el))
}

/// Same average split into two transverse and one longitudinal channel.
fn averaged_split(el: Complex64, et: Complex64, k2: f64, q2: f64) -> Complex64 {
    4.0 * PI * HBAR / 3.0 * (2.0 / (q2 * et - k2) + 1.0 / (q2 * el))
}

/// `(1/2π²) k² (−Im D)` for the angle-averaged diagonal element, J·s.
pub fn radial_integrand(material: &Material, k: f64, omega: f64) -> Result<f64> {
    Ok(radial_pair(material, k, omega)?.im)
}

// Real slot: direct form, imaginary slot: channel split.
fn radial_pair(material: &Material, k: f64, omega: f64) -> Result<Complex64> {
    let el = epsilon_l(material, k, omega)?.value();
    let et = epsilon_t(material, k, omega)?.value();
    let k2 = k * k;
    let q2 = omega * omega / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    let w = k2 / (2.0 * PI * PI);
    Ok(Complex64::new(
        -w * averaged_direct(el, et, k2, q2).im,
        -w * averaged_split(el, et, k2, q2).im,
    ))
}

/// Outcome of the cutoff ladder.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BulkGreenResult {
    /// `−Im D_xx`, J·s/m.
    pub im_d_xx: f64,
    /// `−Im D_zz`, J·s/m.
    pub im_d_zz: f64,
    pub omega: f64,
    /// Cutoff of the reported value, m⁻¹.
    pub k_max_used: f64,
    /// `(k_max, −Im D_xx)` for every cutoff evaluated.
    pub convergence_series: Vec<(f64, f64)>,
    pub converged: bool,
    pub error_estimate: f64,
}

/// Magnetic counterpart of [`BulkGreenResult`]; values in T²·s.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BulkMagneticResult {
    pub chi_b: f64,
    pub omega: f64,
    pub k_max_used: f64,
    pub convergence_series: Vec<(f64, f64)>,
    pub converged: bool,
}

struct Ladder {
    cutoffs: Vec<f64>,
    totals: Vec<Integral>,
}

impl Ladder {
    /// Integrate `f(k)` in `ln k` over consecutive ladder segments and form
    /// the running totals. Segments are independent and may run concurrently.
    fn run<F>(material: &Material, f: F, cfg: &QuadratureConfig, exec: &Execution) -> Result<Self>
    where
        F: Fn(f64) -> Result<Complex64> + Sync + Send,
    {
        cfg.validate()?;
        let kf = material.fermi_wavevector();
        let mut edges = vec![K_FLOOR * kf];
        edges.extend(CUTOFF_LADDER.iter().map(|m| m * kf));
        let segments: Vec<(f64, f64)> = edges.windows(2).map(|w| (w[0].ln(), w[1].ln())).collect();
        let pieces = exec.map(&segments, |&(a, b)| {
            try_integrate_finite(
                |s| {
                    let k = s.exp();
                    Ok(f(k)? * k)
                },
                a,
                b,
                cfg,
            )
        });
        let mut totals = Vec::with_capacity(pieces.len());
        let mut acc = Integral::ZERO;
        for piece in pieces {
            acc.accumulate(&piece?);
            totals.push(acc);
        }
        Ok(Ladder {
            cutoffs: edges[1..].to_vec(),
            totals,
        })
    }

    /// Index of the first cutoff agreeing with its predecessor, judged on the real slot.
    fn settled(&self) -> Option<usize> {
        (1..self.totals.len()).find(|&i| {
            let prev = self.totals[i - 1].value.re;
            let cur = self.totals[i].value.re;
            (cur - prev).abs() <= LADDER_TOLERANCE * cur.abs() || cur == prev
        })
    }

    fn series(&self, upto: usize, scale: f64) -> Vec<(f64, f64)> {
        self.cutoffs[..=upto]
            .iter()
            .zip(&self.totals)
            .map(|(&k, t)| (k, scale * t.value.re))
            .collect()
    }
}

/// Run the full cutoff ladder without judging convergence.
pub fn bulk_im_d_ladder(
    material: &Material,
    omega: f64,
    cfg: &QuadratureConfig,
    exec: &Execution,
) -> Result<BulkGreenResult> {
    require_positive("omega", omega)?;
    let ladder = Ladder::run(material, |k| radial_pair(material, k, omega), cfg, exec)?;
    let settled = ladder.settled();
    let used = settled.unwrap_or(ladder.totals.len() - 1);
    let total = ladder.totals[used];
    Ok(BulkGreenResult {
        im_d_xx: total.value.re,
        im_d_zz: total.value.im,
        omega,
        k_max_used: ladder.cutoffs[used],
        convergence_series: ladder.series(used, 1.0),
        converged: settled.is_some(),
        error_estimate: total.error_re.max(total.error_im),
    })
}

/// Coincident-point `−Im D_xx` and `−Im D_zz`; fails unless the cutoff ladder settles.
pub fn bulk_im_d_coincident(material: &Material, omega: f64, cfg: &QuadratureConfig) -> Result<BulkGreenResult> {
    bulk_im_d_coincident_with(material, omega, cfg, &Execution::default())
}

pub fn bulk_im_d_coincident_with(
    material: &Material,
    omega: f64,
    cfg: &QuadratureConfig,
    exec: &Execution,
) -> Result<BulkGreenResult> {
    let result = bulk_im_d_ladder(material, omega, cfg, exec)?;
    if result.converged {
        Ok(result)
    } else {
        Err(Error::LadderNotConverged {
            series: result.convergence_series,
        })
    }
}

/// Bulk electric spectral density `(ω²/ε₀c²)(−Im D)`, V²·m⁻²·s.
pub fn bulk_chi_e(result: &BulkGreenResult) -> f64 {
    result.omega * result.omega / (EPSILON_0 * SPEED_OF_LIGHT * SPEED_OF_LIGHT) * result.im_d_xx
}

/// Bulk magnetic spectral density at coincident points.
///
/// Only the transverse channel survives the curl; its angular average
/// contributes `2k²/3` per component.
pub fn bulk_chi_b_ladder(
    material: &Material,
    omega: f64,
    cfg: &QuadratureConfig,
    exec: &Execution,
) -> Result<BulkMagneticResult> {
    require_positive("omega", omega)?;
    let q2 = omega * omega / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    let ladder = Ladder::run(
        material,
        |k| {
            let et = epsilon_t(material, k, omega)?.value();
            let k2 = k * k;
            let dt = 4.0 * PI * HBAR / (q2 * et - k2);
            Ok(Complex64::new(-k2 / (2.0 * PI * PI) * (2.0 * k2 / 3.0) * dt.im, 0.0))
        },
        cfg,
        exec,
    )?;
    let scale = 1.0 / (EPSILON_0 * SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    let settled = ladder.settled();
    let used = settled.unwrap_or(ladder.totals.len() - 1);
    Ok(BulkMagneticResult {
        chi_b: scale * ladder.totals[used].value.re,
        omega,
        k_max_used: ladder.cutoffs[used],
        convergence_series: ladder.series(used, scale),
        converged: settled.is_some(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceGreen {
    pub im_d_xx: f64,
    pub im_d_zz: f64,
    /// Height of the evaluation, m.
    pub z: f64,
}

/// `Im D` just outside the surface, from the nonlocal quasistatic electric
/// densities at `z = 10⁻³ λ_F`.
pub fn surface_limit_im_d(material: &Material, omega: f64, cfg: &QuadratureConfig) -> Result<SurfaceGreen> {
    surface_im_d_at(material, SURFACE_HEIGHT * material.fermi_wavelength(), omega, cfg)
}

pub fn surface_im_d_at(material: &Material, z: f64, omega: f64, cfg: &QuadratureConfig) -> Result<SurfaceGreen> {
    let chi = chi_e_quasistatic_nonlocal(material, z, omega, cfg)?;
    let to_d = EPSILON_0 * SPEED_OF_LIGHT * SPEED_OF_LIGHT / (omega * omega);
    Ok(SurfaceGreen {
        im_d_xx: to_d * chi.chi_xx,
        im_d_zz: to_d * chi.chi_zz,
        z,
    })
}
