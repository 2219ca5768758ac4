//! Physical constants (CODATA 2018, SI).

pub const HBAR: f64 = 1.054_571_817e-34;
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
pub const BOHR_MAGNETON: f64 = 9.274_010_078_3e-24;

/// Joules per electronvolt.
pub const EV: f64 = ELEMENTARY_CHARGE;
