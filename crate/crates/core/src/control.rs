//! Cryogenic control-electronics budgets: converter figures of merit and
//! how many qubit channels a stage's cooling power can carry.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Walden FOM of state-of-the-art room-temperature ADCs, J per step.
pub const STATE_OF_ART_WALDEN_J: f64 = 5e-15;
/// Schreier FOM of state-of-the-art room-temperature ADCs, dB.
pub const STATE_OF_ART_SCHREIER_DB: f64 = 175.0;
/// Walden FOM typical of existing cryogenic ADCs, J per step.
pub const CRYOGENIC_WALDEN_J: f64 = 1e-12;

/// Per-channel power target, W.
pub const TARGET_CHANNEL_POWER_W: f64 = 1e-3;
/// Cooling power available at 4 K, W.
pub const COOLING_POWER_4K_W: f64 = 1.0;

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdcSpec {
    /// Power draw, W.
    pub power: f64,
    /// Samples per second.
    pub sample_rate: f64,
    /// Effective number of bits.
    pub bits: f64,
}

impl AdcSpec {
    pub fn new(power: f64, sample_rate: f64, bits: f64) -> Result<Self> {
        let spec = AdcSpec {
            power,
            sample_rate,
            bits,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        positive("power", self.power)?;
        positive("sample_rate", self.sample_rate)?;
        if !(self.bits >= 1.0 && self.bits.is_finite()) {
            return Err(Error::OutOfRange {
                name: "bits",
                value: self.bits,
                range: "[1, inf)",
            });
        }
        Ok(())
    }

    /// Energy per conversion `P/f_s`, J.
    pub fn energy_per_conversion(&self) -> f64 {
        self.power / self.sample_rate
    }
}

/// Walden figure of merit `P/(f_s·2^N)`, J per conversion step.
pub fn fom_walden(spec: &AdcSpec) -> Result<f64> {
    spec.validate()?;
    Ok(spec.power / (spec.sample_rate * spec.bits.exp2()))
}

/// Schreier figure of merit `10·log10(2^N·f_s/(2P))`, dB.
pub fn fom_schreier(spec: &AdcSpec) -> Result<f64> {
    spec.validate()?;
    Ok(10.0 * (spec.bits.exp2() * spec.sample_rate / (2.0 * spec.power)).log10())
}

/// Power of a DAC converting at `sample_rate` with `energy_per_conversion` J each.
pub fn dac_power(sample_rate: f64, energy_per_conversion: f64) -> Result<f64> {
    for (name, v) in [
        ("sample_rate", sample_rate),
        ("energy_per_conversion", energy_per_conversion),
    ] {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::NonPositive { name, value: v });
        }
    }
    Ok(sample_rate * energy_per_conversion)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerBudget {
    /// Cooling power at the stage temperature, W.
    pub cooling_power: f64,
    pub per_channel_power: f64,
    /// Qubits served per channel by combined time/frequency/space multiplexing.
    pub mux_factor: u32,
}

impl PowerBudget {
    pub fn validate(&self) -> Result<()> {
        positive("cooling_power", self.cooling_power)?;
        positive("per_channel_power", self.per_channel_power)?;
        if self.mux_factor == 0 {
            return Err(Error::OutOfRange {
                name: "mux_factor",
                value: 0.0,
                range: "[1, inf)",
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelBudget {
    pub max_channels: u64,
    pub max_qubits: u64,
}

pub fn channel_budget(budget: &PowerBudget) -> Result<ChannelBudget> {
    budget.validate()?;
    let ratio = budget.cooling_power / budget.per_channel_power;
    // Absorb representation error in decimal inputs such as 1 W / 1 mW.
    let max_channels = (ratio * (1.0 + 4.0 * f64::EPSILON)).floor() as u64;
    Ok(ChannelBudget {
        max_channels,
        max_qubits: max_channels.saturating_mul(u64::from(budget.mux_factor)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn walden_examples() {
        let spec = AdcSpec::new(0.2, 2e8, 10.0).unwrap();
        let fom = fom_walden(&spec).unwrap();
        assert!(rel(fom, 0.9765625e-12) < 1e-12);
        // Inverting 5 fJ/step at 200 MSa/s, 10 b
        let p = STATE_OF_ART_WALDEN_J * 2e8 * 1024.0;
        assert!(rel(p, 1.024e-3) < 1e-12);
        let doubled = AdcSpec::new(0.4, 2e8, 10.0).unwrap();
        assert!(rel(fom_walden(&doubled).unwrap(), 2.0 * fom) < 1e-15);
        assert!(rel(CRYOGENIC_WALDEN_J / STATE_OF_ART_WALDEN_J, 200.0) < 1e-12);
    }

    #[test]
    fn schreier_examples() {
        let spec = AdcSpec::new(3.24e-7, 2e8, 10.0).unwrap();
        assert!((fom_schreier(&spec).unwrap() - 175.0).abs() < 0.01);
        let half = AdcSpec::new(3.24e-7 / 2.0, 2e8, 10.0).unwrap();
        let gain = fom_schreier(&half).unwrap() - fom_schreier(&spec).unwrap();
        assert!((gain - 10.0 * 2f64.log10()).abs() < 1e-9);
    }

    #[test]
    fn invalid_adc() {
        assert!(AdcSpec::new(0.0, 1e8, 8.0).is_err());
        assert!(AdcSpec::new(1.0, -1e8, 8.0).is_err());
        assert!(AdcSpec::new(1.0, 1e8, 0.5).is_err());
    }

    #[test]
    fn dac_examples() {
        assert!(rel(dac_power(1e9, 30e-12).unwrap(), 30e-3) < 1e-12);
        assert_eq!(dac_power(0.0, 30e-12).unwrap(), 0.0);
        assert!(rel(dac_power(2e8, 30e-12).unwrap(), 6e-3) < 1e-12);
        assert!(dac_power(-1.0, 1e-12).is_err());
    }

    #[test]
    fn channel_examples() {
        let b = PowerBudget {
            cooling_power: COOLING_POWER_4K_W,
            per_channel_power: TARGET_CHANNEL_POWER_W,
            mux_factor: 1,
        };
        assert_eq!(
            channel_budget(&b).unwrap(),
            ChannelBudget { max_channels: 1000, max_qubits: 1000 }
        );
        let b10 = PowerBudget { mux_factor: 10, ..b };
        assert_eq!(channel_budget(&b10).unwrap().max_qubits, 10_000);
        let one = PowerBudget { per_channel_power: 1.0, ..b };
        assert_eq!(channel_budget(&one).unwrap().max_channels, 1);
        let partial = PowerBudget { cooling_power: 2.5e-3, ..b };
        assert_eq!(channel_budget(&partial).unwrap().max_channels, 2);
        assert!(channel_budget(&PowerBudget { mux_factor: 0, ..b }).is_err());
        assert!(channel_budget(&PowerBudget { cooling_power: 0.0, ..b }).is_err());
    }

    proptest! {
        #[test]
        fn schreier_tracks_walden(p in 1e-9f64..10.0, fs in 1e3f64..1e11, n in 1.0f64..20.0) {
            let a = AdcSpec::new(p, fs, n).unwrap();
            let b = AdcSpec::new(p / 2.0, fs, n).unwrap();
            prop_assert!(rel(fom_walden(&b).unwrap(), fom_walden(&a).unwrap() / 2.0) < 1e-12);
            let gain = fom_schreier(&b).unwrap() - fom_schreier(&a).unwrap();
            prop_assert!((gain - 3.0103).abs() < 1e-4);
        }

        #[test]
        fn channel_budget_monotone(c1 in 1e-3f64..10.0, c2 in 1e-3f64..10.0, m1 in 1u32..100, m2 in 1u32..100) {
            prop_assume!(c1 <= c2 && m1 <= m2);
            let lo = channel_budget(&PowerBudget { cooling_power: c1, per_channel_power: 1e-3, mux_factor: m1 }).unwrap();
            let hi = channel_budget(&PowerBudget { cooling_power: c2, per_channel_power: 1e-3, mux_factor: m2 }).unwrap();
            prop_assert!(lo.max_qubits <= hi.max_qubits);
        }
    }
}
