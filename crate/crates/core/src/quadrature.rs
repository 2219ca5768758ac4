//! One-dimensional adaptive quadrature for complex-valued integrands.
//!
//! Globally adaptive bisection driven by the 21-point Gauss–Kronrod pair
//! (QUADPACK `qk21` nodes and error rescaling). Real and imaginary parts carry
//! separate error estimates and tolerances: the physics integrands here have
//! imaginary parts many orders of magnitude below their real parts, and it is
//! the imaginary part that becomes a noise spectral density.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and limits shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    /// Absolute floor, in integrand units.
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Relative size of the discarded exponential tail.
    pub tail_cut: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 1e-30,
            max_subdivisions: 2000,
            tail_cut: 1e-12,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Validation(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Validation(format!("abs_tol must be >= 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Validation("max_subdivisions must be >= 1".into()));
        }
        if !(self.tail_cut > 0.0 && self.tail_cut < 1.0) {
            return Err(Error::Validation(format!(
                "tail_cut must lie in (0, 1), got {}",
                self.tail_cut
            )));
        }
        Ok(())
    }

    /// Budget for an integral nested inside one evaluated with `self`.
    pub fn nested(&self) -> Self {
        Self {
            rel_tol: self.rel_tol / 10.0,
            ..*self
        }
    }
}

/// Value of an integral together with per-component error bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integral {
    pub value: Complex64,
    pub error_re: f64,
    pub error_im: f64,
    pub evaluations: usize,
}

impl Integral {
    pub const ZERO: Integral = Integral {
        value: Complex64::new(0.0, 0.0),
        error_re: 0.0,
        error_im: 0.0,
        evaluations: 0,
    };

    pub fn error(&self) -> f64 {
        self.error_re.hypot(self.error_im)
    }

    pub(crate) fn accumulate(&mut self, other: &Integral) {
        self.value += other.value;
        self.error_re += other.error_re;
        self.error_im += other.error_im;
        self.evaluations += other.evaluations;
    }

    /// Multiply value and error bounds by a real constant.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            error_re: self.error_re * factor.abs(),
            error_im: self.error_im * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_614_875,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Weights of the embedded 10-point Gauss rule, at XGK[1], XGK[3], ..., XGK[9].
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const ROUNDOFF: f64 = 50.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    err: [f64; 2],
    l1: [f64; 2],
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / ROUNDOFF {
        scaled = scaled.max(ROUNDOFF * res_abs);
    }
    scaled
}

fn parts(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn gauss_kronrod<F>(f: &F, a: f64, b: f64) -> Result<Segment>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let f = |x: f64| -> Result<Complex64> {
        let v = f(x)?;
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::Domain(format!("integrand is not finite at {x:e}")))
        }
    };
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut values = [[Complex64::new(0.0, 0.0); 2]; 10];
    let fc = f(center)?;
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_sum = [fc.re.abs() * WGK[10], fc.im.abs() * WGK[10]];
    for (j, pair) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        *pair = [f1, f2];
        kronrod += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
        abs_sum[0] += WGK[j] * (f1.re.abs() + f2.re.abs());
        abs_sum[1] += WGK[j] * (f1.im.abs() + f2.im.abs());
    }
    let mean = kronrod * 0.5;
    let mut asc = [WGK[10] * (fc.re - mean.re).abs(), WGK[10] * (fc.im - mean.im).abs()];
    for (j, [f1, f2]) in values.iter().enumerate() {
        asc[0] += WGK[j] * ((f1.re - mean.re).abs() + (f2.re - mean.re).abs());
        asc[1] += WGK[j] * ((f1.im - mean.im).abs() + (f2.im - mean.im).abs());
    }
    let w = half.abs();
    let diff = parts((kronrod - gauss) * half);
    let mut err = [0.0; 2];
    let mut l1 = [0.0; 2];
    for c in 0..2 {
        l1[c] = abs_sum[c] * w;
        err[c] = rescale_error(diff[c], l1[c], asc[c] * w);
    }
    Ok(Segment {
        a,
        b,
        value: kronrod * half,
        err,
        l1,
    })
}

const EVALS_PER_RULE: usize = 21;

/// Adaptive integration of a fallible integrand over `[a, b]`.
pub fn try_integrate_finite<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "integration interval [{a}, {b}] is empty or not finite"
        )));
    }
    let mut segments = vec![gauss_kronrod(&f, a, b)?];
    let mut evaluations = EVALS_PER_RULE;
    let mut bisections = 0usize;

    loop {
        let mut total = Complex64::new(0.0, 0.0);
        let mut err = [0.0; 2];
        let mut l1 = [0.0; 2];
        for s in &segments {
            total += s.value;
            for c in 0..2 {
                err[c] += s.err[c];
                l1[c] += s.l1[c];
            }
        }
        let totals = parts(total);
        let mut tol = [0.0; 2];
        for c in 0..2 {
            tol[c] = cfg.abs_tol.max(cfg.rel_tol * totals[c].abs()).max(ROUNDOFF * l1[c]);
        }
        if err[0] <= tol[0] && err[1] <= tol[1] {
            return Ok(Integral {
                value: total,
                error_re: err[0],
                error_im: err[1],
                evaluations,
            });
        }

        // Bisect the segment that contributes most to the worst excess.
        let mut worst: Option<(usize, f64)> = None;
        for (i, s) in segments.iter().enumerate() {
            let mid = 0.5 * (s.a + s.b);
            if mid <= s.a || mid >= s.b || (s.b - s.a) <= 4.0 * f64::EPSILON * mid.abs() {
                continue;
            }
            let score = (0..2)
                .map(|c| s.err[c] / tol[c].max(f64::MIN_POSITIVE))
                .fold(0.0, f64::max);
            if worst.is_none_or(|(_, best)| score > best) {
                worst = Some((i, score));
            }
        }
        let Some((index, _)) = worst else {
            return Err(Error::NoConvergence {
                estimate: total,
                error: err[0].hypot(err[1]),
                subdivisions: bisections,
            });
        };
        if bisections >= cfg.max_subdivisions {
            return Err(Error::NoConvergence {
                estimate: total,
                error: err[0].hypot(err[1]),
                subdivisions: bisections,
            });
        }
        let s = segments.swap_remove(index);
        let mid = 0.5 * (s.a + s.b);
        segments.push(gauss_kronrod(&f, s.a, mid)?);
        segments.push(gauss_kronrod(&f, mid, s.b)?);
        evaluations += 2 * EVALS_PER_RULE;
        bisections += 1;
    }
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn integrate_finite<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Complex64,
{
    try_integrate_finite(|x| Ok(f(x)), a, b, cfg)
}

/// Integrate over `[a, b]` with `x = a + t²`, which removes an inverse
/// square-root singularity at `a`.
pub fn integrate_sqrt_endpoint<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Complex64,
{
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) {
        return Err(Error::Domain(format!("integration interval [{a}, {b}] is empty")));
    }
    integrate_finite(|t| 2.0 * t * f(a + t * t), 0.0, (b - a).sqrt(), cfg)
}

/// How a semi-infinite integrand falls off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tail {
    /// Dominated by `exp(−t / decay_scale)`: integrate panel by panel until
    /// the remaining tail is negligible.
    Exponential,
    /// Dominated by an inverse power ≥ 2: map `t = a + s·u/(1−u)` onto `[0, 1)`.
    PowerLaw,
}

// Width of one exponential panel, in decay scales.
const PANEL_SCALES: f64 = 8.0;
const MAX_PANELS: usize = 512;

/// Integrate a fallible integrand over `[a, ∞)`.
pub fn try_integrate_semi_infinite<F>(
    f: F,
    a: f64,
    decay_scale: f64,
    tail: Tail,
    cfg: &QuadratureConfig,
) -> Result<Integral>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(decay_scale > 0.0 && decay_scale.is_finite()) || !a.is_finite() {
        return Err(Error::Domain(format!(
            "semi-infinite integral needs finite start and positive decay scale, got a = {a}, scale = {decay_scale}"
        )));
    }
    match tail {
        Tail::PowerLaw => try_integrate_finite(
            |u| {
                let one_minus = 1.0 - u;
                let t = a + decay_scale * u / one_minus;
                Ok(f(t)? * (decay_scale / (one_minus * one_minus)))
            },
            0.0,
            1.0,
            cfg,
        ),
        Tail::Exponential => {
            let width = PANEL_SCALES * decay_scale;
            let mut acc = Integral::ZERO;
            for panel in 0..MAX_PANELS {
                let lo = a + panel as f64 * width;
                let hi = lo + width;
                let piece = try_integrate_finite(&f, lo, hi, cfg)?;
                acc.accumulate(&piece);
                let edge = f(hi)?;
                acc.evaluations += 1;
                let bound = [edge.re.abs() * decay_scale, edge.im.abs() * decay_scale];
                let totals = parts(acc.value);
                let settled = (0..2).all(|c| bound[c] <= cfg.tail_cut * totals[c].abs() || bound[c] <= cfg.abs_tol);
                if settled {
                    acc.error_re += bound[0];
                    acc.error_im += bound[1];
                    return Ok(acc);
                }
            }
            let edge = f(a + MAX_PANELS as f64 * width)?;
            Err(Error::TailBound {
                estimate: acc.value,
                tail: edge.norm() * decay_scale,
                panels: MAX_PANELS,
            })
        }
    }
}

/// Integrate `f` over `[a, ∞)`.
pub fn integrate_semi_infinite_decaying<F>(
    f: F,
    a: f64,
    decay_scale: f64,
    tail: Tail,
    cfg: &QuadratureConfig,
) -> Result<Integral>
where
    F: Fn(f64) -> Complex64,
{
    try_integrate_semi_infinite(|t| Ok(f(t)), a, decay_scale, tail, cfg)
}
