//! Operation-time limits for the exchange-only hybrid qubit.
//!
//! A gate can be no faster than both the adiabaticity limit `4ħ/ΔE_ST` and
//! the π/8 rotation time set by the maximum exchange `J = t²/ΔE_ST`; it can be
//! no slower than `η·T₂*`. Energies are in eV and times in seconds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::technology::TechNode;
use crate::units::{round_sig, HBAR_EV_S};

/// π/8 rotation time in units of ħ/J.
pub const PI8_GATE_FACTOR: f64 = 3.598;

/// Adiabatic operation needs `T_op > 4ħ/ΔE_ST`.
pub const ADIABATIC_FACTOR: f64 = 4.0;

/// Smallest gate pitch considered manufacturable.
pub const MANUFACTURABILITY_LIMIT_NM: u32 = 3;

/// Relative slack when comparing the two bounds, so that a window whose ends
/// coincide up to rounding counts as (marginally) feasible.
pub const FEASIBILITY_RTOL: f64 = 1e-9;

/// Default decay length of the tunnel coupling with gate pitch.
pub const DEFAULT_LAMBDA_NM: f64 = 10.0;

/// Calibration anchor for the default tunnel model: 100 ps π/8 gates at a
/// 40 nm gate pitch with ΔE_ST = 0.6 meV.
pub const CALIBRATION_PITCH_NM: f64 = 40.0;
pub const CALIBRATION_SPLITTING_EV: f64 = 0.6e-3;
pub const CALIBRATION_GATE_TIME_S: f64 = 100e-12;

fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Maximum effective exchange `t²/ΔE_ST`.
pub fn j_max(t: f64, delta_e_st: f64) -> Result<f64> {
    require_positive("t", t)?;
    require_positive("delta_e_st", delta_e_st)?;
    Ok(t * t / delta_e_st)
}

/// π/8 rotation time for exchange `j`.
pub fn t_pi8(j: f64) -> Result<f64> {
    require_positive("j", j)?;
    Ok(PI8_GATE_FACTOR * HBAR_EV_S / j)
}

pub fn adiabatic_min_time(delta_e_st: f64) -> Result<f64> {
    require_positive("delta_e_st", delta_e_st)?;
    Ok(ADIABATIC_FACTOR * HBAR_EV_S / delta_e_st)
}

pub fn coherence_max_time(eta: f64, t2_star: f64) -> Result<f64> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::OutOfRange {
            name: "eta",
            value: eta,
            range: "(0, 1)",
        });
    }
    require_positive("t2_star", t2_star)?;
    Ok(eta * t2_star)
}

/// Exponential tunnel coupling `t0·exp(−Δ_G/λ)`.
pub fn tunnel_coupling(node: &TechNode, t0: f64, lambda_nm: f64) -> Result<f64> {
    exponential_coupling(f64::from(node.delta_g), t0, lambda_nm)
}

fn exponential_coupling(pitch_nm: f64, t0: f64, lambda_nm: f64) -> Result<f64> {
    require_positive("t0", t0)?;
    require_positive("lambda", lambda_nm)?;
    Ok(t0 * (-pitch_nm / lambda_nm).exp())
}

/// Where the tunnel coupling for a node comes from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TunnelModel {
    Exponential { t0: f64, lambda_nm: f64 },
    /// Same coupling at every node.
    Fixed { t: f64 },
}

impl TunnelModel {
    /// Exponential model whose prefactor puts the π/8 gate at exactly the
    /// calibration time for the calibration pitch and splitting.
    pub fn calibrated(lambda_nm: f64) -> Self {
        let t_anchor =
            (PI8_GATE_FACTOR * HBAR_EV_S * CALIBRATION_SPLITTING_EV / CALIBRATION_GATE_TIME_S).sqrt();
        TunnelModel::Exponential {
            t0: t_anchor * (CALIBRATION_PITCH_NM / lambda_nm).exp(),
            lambda_nm,
        }
    }

    pub fn coupling_at(&self, pitch_nm: f64) -> Result<f64> {
        match *self {
            TunnelModel::Exponential { t0, lambda_nm } => exponential_coupling(pitch_nm, t0, lambda_nm),
            TunnelModel::Fixed { t } => require_positive("t", t),
        }
    }

    pub fn coupling(&self, node: &TechNode) -> Result<f64> {
        self.coupling_at(f64::from(node.delta_g))
    }
}

impl Default for TunnelModel {
    fn default() -> Self {
        TunnelModel::calibrated(DEFAULT_LAMBDA_NM)
    }
}

/// Model coupling capped at `ΔE_ST/2`, the largest value compatible with
/// adiabatic operation.
pub fn effective_coupling(model: &TunnelModel, pitch_nm: f64, delta_e_st: f64) -> Result<(f64, bool)> {
    require_positive("delta_e_st", delta_e_st)?;
    let raw = model.coupling_at(pitch_nm)?;
    let cap = delta_e_st / 2.0;
    Ok(if raw > cap { (cap, true) } else { (raw, false) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitPhysicsParams {
    /// Singlet-triplet splitting, eV.
    pub delta_e_st: f64,
    /// Dephasing time, s.
    pub t2_star: f64,
    /// Tolerated error per gate.
    pub eta: f64,
}

impl Default for QubitPhysicsParams {
    fn default() -> Self {
        QubitPhysicsParams {
            delta_e_st: 0.6e-3,
            t2_star: 1e-6,
            eta: 1e-3,
        }
    }
}

impl QubitPhysicsParams {
    pub fn validate(&self) -> Result<()> {
        require_positive("delta_e_st", self.delta_e_st)?;
        coherence_max_time(self.eta, self.t2_star)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBound {
    Adiabatic,
    NodeGateTime,
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBound::Adiabatic => "adiabatic",
            LowerBound::NodeGateTime => "node_gate_time",
        })
    }
}

/// Feasible operation-time interval for one node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintWindow {
    pub node: TechNode,
    pub t_min: f64,
    pub t_max: f64,
    pub feasible: bool,
    pub binding_constraint_low: LowerBound,
    pub adiabatic_bound: f64,
    pub gate_time: f64,
    /// Tunnel coupling actually used, eV.
    pub coupling: f64,
    pub coupling_clamped: bool,
    pub j_max: f64,
}

impl ConstraintWindow {
    /// Operating frequency band `[1/t_max, 1/t_min]` in Hz, rounded to three
    /// significant digits; `None` when the window is empty.
    pub fn frequency_band(&self) -> Option<(f64, f64)> {
        self.feasible
            .then(|| (round_sig(1.0 / self.t_max, 3), round_sig(1.0 / self.t_min, 3)))
    }
}

pub fn feasibility_window(
    node: &TechNode,
    params: &QubitPhysicsParams,
    model: &TunnelModel,
) -> Result<ConstraintWindow> {
    if node.delta_g < MANUFACTURABILITY_LIMIT_NM {
        return Err(Error::BelowManufacturability {
            delta_g: node.delta_g,
        });
    }
    params.validate()?;
    let (coupling, clamped) =
        effective_coupling(model, f64::from(node.delta_g), params.delta_e_st)?;
    let j = j_max(coupling, params.delta_e_st)?;
    let gate_time = t_pi8(j)?;
    let adiabatic_bound = adiabatic_min_time(params.delta_e_st)?;
    let (t_min, binding) = if adiabatic_bound > gate_time {
        (adiabatic_bound, LowerBound::Adiabatic)
    } else {
        (gate_time, LowerBound::NodeGateTime)
    };
    let t_max = coherence_max_time(params.eta, params.t2_star)?;
    Ok(ConstraintWindow {
        node: node.clone(),
        t_min,
        t_max,
        feasible: t_min <= t_max * (1.0 + FEASIBILITY_RTOL),
        binding_constraint_low: binding,
        adiabatic_bound,
        gate_time,
        coupling,
        coupling_clamped: clamped,
        j_max: j,
    })
}
