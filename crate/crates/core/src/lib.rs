//! Resource estimation for CMOS silicon quantum-computer architectures.
//!
//! Given a technology node and qubit physics parameters this crate computes
//! Steane-code layout geometry and quantum information density, QEC code
//! footprints, feasible gate-time windows, communication times, factoring
//! resources and cryogenic control-electronics budgets.

pub mod codes;
pub mod communication;
pub mod control;
pub mod error;
pub mod layout;
pub mod shor;
pub mod technology;
pub mod timing;
pub mod units;

pub use codes::{AreaConvention, CodeKind, CodeSpec};
pub use communication::CommParams;
pub use control::{AdcSpec, ChannelBudget, PowerBudget};
pub use error::{Error, Result};
pub use layout::{Extent, LayoutReport, ModuleDims};
pub use shor::{ShorEstimate, ShorOptions, ShorRow};
pub use technology::{builtin_node, builtin_nodes, LoadedNode, NodeWarning, TechNode};
pub use timing::{ConstraintWindow, LowerBound, QubitPhysicsParams, TunnelModel};
pub use units::Area;
