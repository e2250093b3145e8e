//! Closed-form geometry of the Steane-code building blocks.
//!
//! The data module D, communication chain C and T-junction T are sized from
//! the node's critical pitches. A logical qubit is 20 T-junction heights wide,
//! and a qubyte (8 logical qubits plus interconnect) sets the quantum
//! information density. All geometry is exact integer nm arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::technology::TechNode;
use crate::units::{Area, NM2_PER_CM2};

/// Unused fraction of the logical-qubit mask (reference value, not derived).
pub const UNUSED_FRACTION_QUBIT: f64 = 0.23;
/// Unused fraction of the qubyte mask (reference value, not derived).
pub const UNUSED_FRACTION_QUBYTE: f64 = 0.43;

/// Logical qubits per qubyte.
pub const QUBITS_PER_QUBYTE: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extent {
    pub x: i64,
    pub y: i64,
}

impl Extent {
    fn checked_area(self, x_name: &'static str, y_name: &'static str) -> Result<Area> {
        positive(x_name, self.x)?;
        positive(y_name, self.y)?;
        Ok(Area::from_nm2((self.x * self.y) as u64))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDims {
    pub d: Extent,
    pub c: Extent,
    pub t: Extent,
}

fn positive(dimension: &'static str, value: i64) -> Result<i64> {
    if value > 0 {
        Ok(value)
    } else {
        Err(Error::DegenerateGeometry { dimension, value })
    }
}

struct Pitches {
    g: i64,
    ic: i64,
    w: i64,
    bu: i64,
    hdd: i64,
}

impl From<&TechNode> for Pitches {
    fn from(n: &TechNode) -> Self {
        Pitches {
            g: n.delta_g.into(),
            ic: n.delta_ic.into(),
            w: n.w_si.into(),
            bu: n.l_bu.into(),
            hdd: n.l_hdd.into(),
        }
    }
}

pub fn module_dims(node: &TechNode) -> ModuleDims {
    let p = Pitches::from(node);
    ModuleDims {
        d: Extent {
            x: (6 * p.ic).max(4 * p.g + p.hdd + p.bu + p.ic),
            y: 8 * p.ic,
        },
        c: Extent {
            x: 4 * p.g,
            y: 8 * p.ic + p.w,
        },
        t: Extent {
            x: 20 * p.ic + p.bu + p.w,
            y: 14 * p.g,
        },
    }
}

fn qubit_extent(node: &TechNode, m: &ModuleDims) -> Extent {
    Extent {
        x: 20 * m.t.y,
        y: 2 * m.t.x - i64::from(node.w_si),
    }
}

/// Logical-qubit extent; fails if either side is not positive.
pub fn qubit_dims(node: &TechNode) -> Result<Extent> {
    let e = qubit_extent(node, &module_dims(node));
    positive("x_qb", e.x)?;
    positive("y_qb", e.y)?;
    Ok(e)
}

fn qubyte_extent(node: &TechNode, m: &ModuleDims) -> Extent {
    let w = i64::from(node.w_si);
    // Table bracket: floor(q + 1) of the positive quotient q.
    let bracket = |num: i64, den: i64| num / den + 1;
    Extent {
        x: m.c.x * bracket(m.t.x, m.c.x) + 40 * m.t.y + w,
        y: 7 * m.c.x * bracket(m.t.x.max(m.d.x), m.c.x) + 2 * m.t.x + 7 * m.t.y,
    }
}

pub fn qubyte_dims(node: &TechNode) -> Result<Extent> {
    let e = qubyte_extent(node, &module_dims(node));
    positive("x_QB", e.x)?;
    positive("y_QB", e.y)?;
    Ok(e)
}

/// Every Steane-layout dimension and area for one node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutReport {
    pub node: TechNode,
    pub modules: ModuleDims,
    pub qubit: Extent,
    pub qubyte: Extent,
    pub a_d: Area,
    pub a_qb: Area,
    pub a_qubyte: Area,
}

impl LayoutReport {
    /// Logical qubits per cm², eight per qubyte.
    pub fn delta_qi(&self) -> f64 {
        QUBITS_PER_QUBYTE as f64 * NM2_PER_CM2 / self.a_qubyte.nm2() as f64
    }

    /// Same density in millions of logical qubits per cm².
    pub fn delta_qi_mega(&self) -> f64 {
        self.delta_qi() / 1e6
    }

    /// Concatenated-code logical-qubit area, A_qb²/A_D, in nm².
    pub fn concatenated_area_nm2(&self) -> f64 {
        let qb = self.a_qb.nm2() as f64;
        qb * qb / self.a_d.nm2() as f64
    }

    /// Named dimensions in table order.
    pub fn dimensions(&self) -> [(&'static str, i64); 10] {
        let m = &self.modules;
        [
            ("x_D", m.d.x),
            ("y_D", m.d.y),
            ("x_C", m.c.x),
            ("y_C", m.c.y),
            ("x_T", m.t.x),
            ("y_T", m.t.y),
            ("x_qb", self.qubit.x),
            ("y_qb", self.qubit.y),
            ("x_QB", self.qubyte.x),
            ("y_QB", self.qubyte.y),
        ]
    }
}

pub fn layout_report(node: &TechNode) -> Result<LayoutReport> {
    node.validate()?;
    let modules = module_dims(node);
    for (name, v) in [
        ("x_D", modules.d.x),
        ("y_D", modules.d.y),
        ("x_C", modules.c.x),
        ("y_C", modules.c.y),
        ("x_T", modules.t.x),
        ("y_T", modules.t.y),
    ] {
        positive(name, v)?;
    }
    let qubit = qubit_extent(node, &modules);
    let qubyte = qubyte_extent(node, &modules);
    Ok(LayoutReport {
        node: node.clone(),
        a_d: modules.d.checked_area("x_D", "y_D")?,
        a_qb: qubit.checked_area("x_qb", "y_qb")?,
        a_qubyte: qubyte.checked_area("x_QB", "y_QB")?,
        modules,
        qubit,
        qubyte,
    })
}

/// Concatenated (two-level Steane) logical-qubit area in μm².
pub fn concatenated_area(node: &TechNode) -> Result<f64> {
    Ok(layout_report(node)?.concatenated_area_nm2() / crate::units::NM2_PER_UM2)
}
