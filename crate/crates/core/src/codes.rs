//! Footprint and density models for Steane, concatenated and surface codes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::layout_report;
use crate::technology::TechNode;
use crate::units::{Area, NM2_PER_CM2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Steane,
    Concatenated,
    Surface,
}

impl CodeKind {
    /// Error threshold per gate assumed for each family.
    pub fn default_threshold(self) -> f64 {
        match self {
            CodeKind::Steane => 1e-4,
            CodeKind::Concatenated => 1e-3,
            CodeKind::Surface => 1e-2,
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Steane => "steane",
            CodeKind::Concatenated => "concatenated",
            CodeKind::Surface => "surface",
        })
    }
}

/// How much silicon one physical qubit of a surface-code lattice occupies.
///
/// The hybrid-qubit block is `8Δ_G` on a side and hosts four qubits when
/// tiled, so the default charges a quarter of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaConvention {
    #[default]
    QuarterBlock,
    FullBlock,
}

impl FromStr for AreaConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "quarter" | "quarter_block" => Ok(AreaConvention::QuarterBlock),
            "full" | "full_block" => Ok(AreaConvention::FullBlock),
            other => Err(format!("unknown area convention `{other}`")),
        }
    }
}

impl fmt::Display for AreaConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AreaConvention::QuarterBlock => "quarter_block",
            AreaConvention::FullBlock => "full_block",
        })
    }
}

/// Physical qubits per surface-code logical qubit, per unit d².
pub const SURFACE_QUBITS_PER_D2: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub kind: CodeKind,
    /// Code distance; only meaningful for the surface code.
    pub distance: Option<u32>,
    pub error_threshold: f64,
    pub convention: AreaConvention,
}

impl CodeSpec {
    pub fn steane() -> Self {
        Self::with_kind(CodeKind::Steane)
    }

    pub fn concatenated() -> Self {
        Self::with_kind(CodeKind::Concatenated)
    }

    pub fn surface(distance: u32, convention: AreaConvention) -> Result<Self> {
        check_distance(distance)?;
        Ok(CodeSpec {
            distance: Some(distance),
            convention,
            ..Self::with_kind(CodeKind::Surface)
        })
    }

    fn with_kind(kind: CodeKind) -> Self {
        CodeSpec {
            kind,
            distance: None,
            error_threshold: kind.default_threshold(),
            convention: AreaConvention::default(),
        }
    }

    pub fn with_threshold(mut self, eta: f64) -> Result<Self> {
        check_threshold(eta)?;
        self.error_threshold = eta;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        check_threshold(self.error_threshold)?;
        if self.kind == CodeKind::Surface {
            check_distance(self.distance.unwrap_or(0))?;
        }
        Ok(())
    }
}

fn check_threshold(eta: f64) -> Result<()> {
    if eta > 0.0 && eta < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "error_threshold",
            value: eta,
            range: "(0, 1)",
        })
    }
}

// Even distances are allowed; the factoring table uses d = 26, 28, ...
fn check_distance(d: u32) -> Result<()> {
    if d >= 3 {
        Ok(())
    } else {
        Err(Error::DistanceTooSmall(d))
    }
}

/// Area charged to one physical qubit.
pub fn physical_qubit_area(node: &TechNode, convention: AreaConvention) -> Area {
    let side = 8 * u64::from(node.delta_g);
    let block = side * side;
    Area::from_nm2(match convention {
        AreaConvention::QuarterBlock => block / 4,
        AreaConvention::FullBlock => block,
    })
}

/// Surface-code logical-qubit footprint, `8d²` physical qubits.
pub fn surface_logical_footprint(
    distance: u32,
    node: &TechNode,
    convention: AreaConvention,
) -> Result<Area> {
    check_distance(distance)?;
    let d = u64::from(distance);
    Ok(Area::from_nm2(
        SURFACE_QUBITS_PER_D2 * d * d * physical_qubit_area(node, convention).nm2(),
    ))
}

/// Logical qubits per cm².
///
/// The Steane figure comes from the qubyte (eight qubits with their
/// interconnect); the other two are reciprocals of a single logical qubit's
/// footprint.
pub fn density(code: &CodeSpec, node: &TechNode) -> Result<f64> {
    code.validate()?;
    match code.kind {
        CodeKind::Steane => Ok(layout_report(node)?.delta_qi()),
        CodeKind::Concatenated => Ok(NM2_PER_CM2 / layout_report(node)?.concatenated_area_nm2()),
        CodeKind::Surface => {
            let d = code.distance.unwrap_or(0);
            let area = surface_logical_footprint(d, node, code.convention)?;
            Ok(NM2_PER_CM2 / area.nm2() as f64)
        }
    }
}

/// Logical error rate after one level of encoding: `p²/p_th`.
pub fn encoded_error_rate(p: f64, p_th: f64) -> Result<f64> {
    if !(p_th > 0.0 && p_th < 1.0) {
        return Err(Error::OutOfRange {
            name: "p_th",
            value: p_th,
            range: "(0, 1)",
        });
    }
    if p.is_nan() || p <= 0.0 {
        return Err(Error::NonPositive { name: "p", value: p });
    }
    if p >= p_th {
        return Err(Error::AboveThreshold { p, p_th });
    }
    Ok(p * p / p_th)
}
