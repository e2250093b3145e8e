//! Shared workloads for the criterion benchmarks.

use qden_core::TechNode;

/// Built-in nodes plus `extra` uniformly scaled copies of each.
pub fn node_workload(extra: u32) -> Vec<TechNode> {
    let base = qden_core::builtin_nodes();
    let mut out = base.clone();
    for k in 2..2 + extra {
        out.extend(base.iter().map(|n| n.scaled(k)));
    }
    out
}
