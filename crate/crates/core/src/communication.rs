//! Transfer-time estimates for moving quantum information across the chip.
//!
//! Two mechanisms are modelled: a chain of nearest-neighbour SWAP gates, one
//! hop per gate pitch, and shuttling an electron in a moving confining
//! potential, bounded by `m·v² ≪ Δ_C`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::technology::TechNode;
use crate::timing::{effective_coupling, j_max, TunnelModel};
use crate::units::{ELECTRON_MASS_KG, JOULE_PER_EV};

/// Gate pitch at which the reference SWAP time was established.
pub const REFERENCE_PITCH_NM: u32 = 40;
/// SWAP chain over 1 μm at the reference pitch.
pub const REFERENCE_CHAIN_TIME_S: f64 = 71.2e-9;
pub const REFERENCE_CHAIN_LENGTH_NM: f64 = 1000.0;

/// Transverse effective mass of a conduction electron in Si, in units of mₑ.
pub const SI_TRANSVERSE_MASS_RATIO: f64 = 0.19;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CommParams {
    /// Effective electron mass, kg.
    pub m_eff: f64,
    /// Confinement energy scale, eV.
    pub delta_c: f64,
    /// Fraction of the `m·v² = Δ_C` speed actually used.
    pub safety: f64,
    /// One SWAP hop at the reference pitch, s.
    pub tau_ref: f64,
    /// Singlet-triplet splitting used to evaluate the exchange scaling, eV.
    pub delta_e_st: f64,
}

impl Default for CommParams {
    fn default() -> Self {
        CommParams {
            m_eff: SI_TRANSVERSE_MASS_RATIO * ELECTRON_MASS_KG,
            delta_c: 0.3e-3,
            safety: 0.1,
            tau_ref: REFERENCE_CHAIN_TIME_S
                / (REFERENCE_CHAIN_LENGTH_NM / f64::from(REFERENCE_PITCH_NM)),
            delta_e_st: 0.6e-3,
        }
    }
}

impl CommParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("m_eff", self.m_eff),
            ("delta_c", self.delta_c),
            ("tau_ref", self.tau_ref),
            ("delta_e_st", self.delta_e_st),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::NonPositive { name, value: v });
            }
        }
        if !(self.safety > 0.0 && self.safety <= 1.0) {
            return Err(Error::OutOfRange {
                name: "safety",
                value: self.safety,
                range: "(0, 1]",
            });
        }
        Ok(())
    }
}

fn check_distance(distance: f64) -> Result<()> {
    if distance >= 0.0 && distance.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "distance",
            value: distance,
            range: "[0, inf)",
        })
    }
}

/// SWAP hops needed to cover `distance_nm` at the node's gate pitch.
pub fn swap_hops(distance_nm: f64, node: &TechNode) -> Result<u64> {
    check_distance(distance_nm)?;
    Ok((distance_nm / f64::from(node.delta_g)).ceil() as u64)
}

/// Duration of one SWAP at the node's pitch.
///
/// SWAP speed follows the maximum exchange, so the reference time is scaled
/// by `J_max(ref) / J_max(node)`.
pub fn swap_hop_time(node: &TechNode, params: &CommParams, model: &TunnelModel) -> Result<f64> {
    params.validate()?;
    let exchange = |pitch: f64| -> Result<f64> {
        let (t, _) = effective_coupling(model, pitch, params.delta_e_st)?;
        j_max(t, params.delta_e_st)
    };
    let j_ref = exchange(f64::from(REFERENCE_PITCH_NM))?;
    let j_node = exchange(f64::from(node.delta_g))?;
    Ok(params.tau_ref * (j_ref / j_node))
}

pub fn swap_chain_time(
    distance_nm: f64,
    node: &TechNode,
    params: &CommParams,
    model: &TunnelModel,
) -> Result<f64> {
    let hops = swap_hops(distance_nm, node)?;
    Ok(hops as f64 * swap_hop_time(node, params, model)?)
}

/// Upper speed for adiabatic shuttling, m/s.
pub fn shuttle_speed_bound(params: &CommParams) -> Result<f64> {
    params.validate()?;
    Ok(params.safety * (params.delta_c * JOULE_PER_EV / params.m_eff).sqrt())
}

/// Time to shuttle over `distance_m` metres.
pub fn shuttle_time(distance_m: f64, params: &CommParams) -> Result<f64> {
    check_distance(distance_m)?;
    Ok(distance_m / shuttle_speed_bound(params)?)
}
