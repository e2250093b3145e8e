//! Physical constants and unit conversions.
//!
//! Lengths are carried in nm and energies in eV throughout the crate; these
//! helpers are the only place other units appear.

use serde::{Deserialize, Serialize};

/// Reduced Planck constant in eV·s.
pub const HBAR_EV_S: f64 = 6.582119569e-16;

/// Elementary charge in C (J per eV).
pub const JOULE_PER_EV: f64 = 1.602176634e-19;

/// Electron rest mass in kg.
pub const ELECTRON_MASS_KG: f64 = 9.1093837015e-31;

pub const NM2_PER_UM2: f64 = 1e6;
pub const NM2_PER_MM2: f64 = 1e12;
pub const NM2_PER_CM2: f64 = 1e14;

pub const SECONDS_PER_HOUR: f64 = 3600.0;

pub fn mev_to_ev(mev: f64) -> f64 {
    mev * 1e-3
}

pub fn ev_to_mev(ev: f64) -> f64 {
    ev * 1e3
}

pub fn ev_to_uev(ev: f64) -> f64 {
    ev * 1e6
}

/// Rounds to `digits` significant digits. Zero and non-finite values pass through.
pub fn round_sig(value: f64, digits: u32) -> f64 {
    if value == 0.0 || !value.is_finite() {
        return value;
    }
    let magnitude = value.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits as i32 - 1 - magnitude);
    (value * scale).round() / scale
}

/// An exact area in nm².
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Area(u64);

impl Area {
    pub const fn from_nm2(nm2: u64) -> Self {
        Area(nm2)
    }

    pub const fn nm2(self) -> u64 {
        self.0
    }

    pub fn um2(self) -> f64 {
        self.0 as f64 / NM2_PER_UM2
    }

    pub fn mm2(self) -> f64 {
        self.0 as f64 / NM2_PER_MM2
    }

    pub fn cm2(self) -> f64 {
        self.0 as f64 / NM2_PER_CM2
    }
}
