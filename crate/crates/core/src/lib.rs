//! Evanescent-wave Johnson noise above a metallic half-space.
//!
//! Electric and magnetic field spectral densities at height `z` above a metal,
//! in local and nonlocal (Lindhard) descriptions and in quasistatic or
//! retarded form, and the relaxation times they induce in charge and spin
//! qubits.

pub mod bulk;
pub mod constants;
pub mod error;
pub mod figures;
pub mod fresnel;
pub mod materials;
pub mod parallel;
pub mod quadrature;
pub mod relaxation;
pub mod spectral;
pub mod sweep;

pub use error::{Error, Result};
pub use materials::{ComplexPermittivity, DielectricResponse, Material, UniformPermittivity};
pub use quadrature::{Integral, QuadratureConfig, Tail};

/// Operating frequency of the reference device, 6π×10⁸ rad/s.
pub const DEFAULT_OMEGA: f64 = 6.0 * std::f64::consts::PI * 1e8;
