//! Surface-code resources for running Shor's factoring algorithm.
//!
//! Code distance and physical-qubit counts are tabulated per problem size
//! (bundled CSV, header `n_bits,data_qubits,distance,n_physical`); there is
//! no model for sizes outside the table. Chip area follows from the
//! per-qubit footprint and runtime from `K·n³` surface-code cycles.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::codes::{physical_qubit_area, AreaConvention};
use crate::error::{Error, Result};
use crate::technology::TechNode;
use crate::units::{NM2_PER_MM2, SECONDS_PER_HOUR};

const SHOR_CSV: &str = include_str!("../data/shor.csv");

/// Surface-code cycles per cubed bit count.
pub const CYCLES_PER_N3: f64 = 60.0;

/// Default surface-code cycle, dominated by readout.
pub const DEFAULT_CYCLE_TIME_S: f64 = 200e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShorRow {
    pub n_bits: u32,
    pub data_qubits: u32,
    pub distance: u32,
    pub n_physical: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShorEstimate {
    pub row: ShorRow,
    pub node: TechNode,
    /// Chip area, mm².
    pub area: f64,
    /// Runtime, hours.
    pub runtime: f64,
    /// Surface-code cycle time, s.
    pub t_cycle: f64,
}

fn parse_dataset(csv_text: &str) -> Result<Vec<ShorRow>> {
    let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
    rdr.deserialize().map(|r| r.map_err(Error::from)).collect()
}

/// The tabulated factoring resources, ordered by problem size.
pub fn shor_dataset() -> &'static [ShorRow] {
    static ROWS: OnceLock<Vec<ShorRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_dataset(SHOR_CSV).expect("bundled factoring dataset is valid"))
}

pub fn shor_row(n_bits: u32) -> Option<ShorRow> {
    shor_dataset().iter().find(|r| r.n_bits == n_bits).copied()
}

/// Chip area in mm² for `n_physical` qubits.
pub fn shor_area(n_physical: u64, node: &TechNode, convention: AreaConvention) -> Result<f64> {
    if n_physical == 0 {
        return Err(Error::NonPositive {
            name: "n_physical",
            value: 0.0,
        });
    }
    let per_qubit = physical_qubit_area(node, convention).nm2();
    Ok(n_physical as f64 * per_qubit as f64 / NM2_PER_MM2)
}

/// Runtime in hours for an `n_bits` factoring problem.
pub fn shor_runtime(n_bits: u32, t_cycle: f64) -> Result<f64> {
    if n_bits < 2 {
        return Err(Error::OutOfRange {
            name: "n_bits",
            value: f64::from(n_bits),
            range: "[2, inf)",
        });
    }
    if !(t_cycle > 0.0 && t_cycle.is_finite()) {
        return Err(Error::NonPositive {
            name: "t_cycle",
            value: t_cycle,
        });
    }
    let n = f64::from(n_bits);
    Ok(CYCLES_PER_N3 * n * n * n * t_cycle / SECONDS_PER_HOUR)
}

/// Caller-provided resources for a size missing from the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplicitResources {
    pub distance: u32,
    pub n_physical: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShorOptions {
    pub t_cycle: f64,
    pub convention: AreaConvention,
    pub explicit: Option<ExplicitResources>,
}

impl Default for ShorOptions {
    fn default() -> Self {
        ShorOptions {
            t_cycle: DEFAULT_CYCLE_TIME_S,
            convention: AreaConvention::QuarterBlock,
            explicit: None,
        }
    }
}

pub fn shor_estimate(n_bits: u32, node: &TechNode, options: &ShorOptions) -> Result<ShorEstimate> {
    let row = match options.explicit {
        Some(ExplicitResources {
            distance,
            n_physical,
        }) => {
            if distance < 3 {
                return Err(Error::DistanceTooSmall(distance));
            }
            ShorRow {
                n_bits,
                data_qubits: n_bits.saturating_mul(2),
                distance,
                n_physical,
            }
        }
        None => shor_row(n_bits).ok_or(Error::NoPhysicalQubitModel(n_bits))?,
    };
    Ok(ShorEstimate {
        area: shor_area(row.n_physical, node, options.convention)?,
        runtime: shor_runtime(n_bits, options.t_cycle)?,
        t_cycle: options.t_cycle,
        node: node.clone(),
        row,
    })
}
