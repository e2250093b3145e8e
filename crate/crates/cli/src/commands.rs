use std::fs::File;
use std::path::{Path, PathBuf};

use qden_core::codes::{self, surface_logical_footprint};
use qden_core::communication::{self, CommParams};
use qden_core::control::{self, AdcSpec, PowerBudget};
use qden_core::layout::{self, LayoutReport};
use qden_core::shor::{self, ExplicitResources, ShorOptions};
use qden_core::technology::{self, TechNode};
use qden_core::timing::{self, QubitPhysicsParams, TunnelModel, DEFAULT_LAMBDA_NM};
use qden_core::units::{ev_to_uev, mev_to_ev, ELECTRON_MASS_KG};
use qden_core::{AreaConvention, CodeKind, CodeSpec};
use thiserror::Error;

use crate::args::{
    AdcArgs, BudgetArgs, Cli, CodeArg, CommCommand, Command, ControlCommand, DacArgs, DensityArgs,
    LayoutArgs, NodesCommand, ShorArgs, ShuttleArgs, SwapArgs, TunnelArgs, WindowArgs,
};
use crate::report::{Orientation, ReportEnvelope, Results};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] qden_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read custom node file {}: {source}", path.display())]
    CustomFile {
        path: PathBuf,
        source: qden_core::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad input, 1 for faults on our side.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Built-in nodes plus any loaded from a custom file.
#[derive(Debug, Clone)]
pub struct NodeSet {
    pub nodes: Vec<TechNode>,
    pub warnings: Vec<String>,
}

impl NodeSet {
    pub fn load(custom: Option<&Path>) -> Result<Self> {
        let Some(path) = custom else {
            return Ok(NodeSet {
                nodes: technology::builtin_nodes(),
                warnings: Vec::new(),
            });
        };
        let wrap = |source: qden_core::Error| CliError::CustomFile {
            path: path.to_path_buf(),
            source,
        };
        let file = File::open(path).map_err(|e| wrap(e.into()))?;
        let loaded = technology::read_nodes_csv(file).map_err(wrap)?;
        let warnings = loaded
            .iter()
            .flat_map(|l| l.warnings.iter().map(ToString::to_string))
            .collect();
        let extra: Vec<TechNode> = loaded.into_iter().map(|l| l.node).collect();
        Ok(NodeSet {
            nodes: technology::merge_nodes(&extra)?,
            warnings,
        })
    }

    pub fn get(&self, name: &str) -> Result<&TechNode> {
        self.nodes
            .iter()
            .find(|n| n.name == name)
            .ok_or_else(|| qden_core::Error::UnknownNode(name.to_string()).into())
    }

    /// One node by name, or every node for `all`.
    pub fn select(&self, name: &str) -> Result<Vec<TechNode>> {
        if name == "all" {
            Ok(self.nodes.clone())
        } else {
            Ok(vec![self.get(name)?.clone()])
        }
    }

    fn names(nodes: &[TechNode]) -> Vec<String> {
        nodes.iter().map(|n| n.name.clone()).collect()
    }
}

pub fn run(cli: &Cli) -> Result<ReportEnvelope> {
    let nodes = NodeSet::load(cli.custom.as_deref())?;
    let mut env = match &cli.command {
        Command::Nodes(NodesCommand::List) => cmd_nodes(&nodes),
        Command::Layout(a) => cmd_layout(&nodes, a),
        Command::Density(a) => cmd_density(&nodes, a),
        Command::Window(a) => cmd_window(&nodes, a),
        Command::Shor(a) => cmd_shor(&nodes, a),
        Command::Comm(CommCommand::Swap(a)) => cmd_swap(&nodes, a),
        Command::Comm(CommCommand::Shuttle(a)) => cmd_shuttle(a),
        Command::Control(ControlCommand::Budget(a)) => cmd_budget(a),
        Command::Control(ControlCommand::Adc(a)) => cmd_adc(a),
        Command::Control(ControlCommand::Dac(a)) => cmd_dac(a),
    }?;
    if let Some(path) = &cli.custom {
        env.input("custom", path.display().to_string());
    }
    env.warnings.extend(nodes.warnings);
    Ok(env)
}

pub fn cmd_nodes(nodes: &NodeSet) -> Result<ReportEnvelope> {
    let list = &nodes.nodes;
    let mut r = Results::new(Orientation::BySeries, "name", NodeSet::names(list));
    r.push("delta_g", "nm", list.iter().map(|n| n.delta_g));
    r.push("delta_ic", "nm", list.iter().map(|n| n.delta_ic));
    r.push("w_si", "nm", list.iter().map(|n| n.w_si));
    r.push("l_bu", "nm", list.iter().map(|n| n.l_bu));
    r.push("l_hdd", "nm", list.iter().map(|n| n.l_hdd));
    Ok(ReportEnvelope::new("nodes list", r))
}

pub fn cmd_layout(nodes: &NodeSet, args: &LayoutArgs) -> Result<ReportEnvelope> {
    let selected = nodes.select(&args.node)?;
    let reports = selected
        .iter()
        .map(layout::layout_report)
        .collect::<qden_core::Result<Vec<LayoutReport>>>()?;
    let mut r = Results::new(Orientation::ByQuantity, "node", NodeSet::names(&selected));
    for (i, (name, _)) in reports[0].dimensions().iter().enumerate() {
        r.push(name, "nm", reports.iter().map(|rep| rep.dimensions()[i].1));
    }
    r.push("A_D", "um2", reports.iter().map(|rep| rep.a_d.um2()));
    r.push("A_qb", "um2", reports.iter().map(|rep| rep.a_qb.um2()));
    r.push("A_QB", "um2", reports.iter().map(|rep| rep.a_qubyte.um2()));
    r.push("delta_qi", "Mqb/cm2", reports.iter().map(|rep| rep.delta_qi_mega()));
    let mut env = ReportEnvelope::new("layout", r);
    env.input("node", &args.node);
    Ok(env)
}

fn code_spec(args: &DensityArgs) -> Result<CodeSpec> {
    let convention = AreaConvention::from(args.convention);
    match (args.code, args.d) {
        (CodeArg::Steane, None) => Ok(CodeSpec::steane()),
        (CodeArg::Concat, None) => Ok(CodeSpec::concatenated()),
        (CodeArg::Surface, Some(d)) => Ok(CodeSpec::surface(d, convention)?),
        (CodeArg::Surface, None) => Err(CliError::Usage("--code surface requires --d".into())),
        (_, Some(_)) => Err(CliError::Usage("--d applies only to --code surface".into())),
    }
}

/// Area of one logical qubit as used by the density figure, μm².
fn logical_area_um2(code: &CodeSpec, node: &TechNode) -> qden_core::Result<f64> {
    match code.kind {
        CodeKind::Steane => {
            let rep = layout::layout_report(node)?;
            Ok(rep.a_qubyte.um2() / layout::QUBITS_PER_QUBYTE as f64)
        }
        CodeKind::Concatenated => layout::concatenated_area(node),
        CodeKind::Surface => Ok(surface_logical_footprint(
            code.distance.unwrap_or(0),
            node,
            code.convention,
        )?
        .um2()),
    }
}

pub fn cmd_density(nodes: &NodeSet, args: &DensityArgs) -> Result<ReportEnvelope> {
    let spec = code_spec(args)?;
    let (selected, orientation) = if args.sweep {
        (nodes.nodes.clone(), Orientation::BySeries)
    } else {
        let name = args.node.as_deref().unwrap_or_default();
        (vec![nodes.get(name)?.clone()], Orientation::ByQuantity)
    };
    let mut density = Vec::new();
    let mut area = Vec::new();
    for n in &selected {
        density.push(codes::density(&spec, n)?);
        area.push(logical_area_um2(&spec, n)?);
    }
    let mut r = Results::new(orientation, "node", NodeSet::names(&selected));
    r.push("delta_g", "nm", selected.iter().map(|n| n.delta_g));
    r.push("density", "Mqb/cm2", density.iter().map(|d| d / 1e6));
    r.push("logical_qubits_per_cm2", "1/cm2", density.iter().copied());
    r.push("logical_area", "um2", area);
    let mut env = ReportEnvelope::new("density", r);
    env.input("code", spec.kind.to_string())
        .input("convention", spec.convention.to_string())
        .input("error_threshold", spec.error_threshold);
    if let Some(d) = spec.distance {
        env.input("d", d);
    }
    match (&args.node, args.sweep) {
        (_, true) => env.input("sweep", true),
        (Some(n), false) => env.input("node", n),
        (None, false) => &mut env,
    };
    Ok(env)
}

fn tunnel_model(args: &TunnelArgs) -> TunnelModel {
    match (args.t0, args.lambda) {
        (Some(t0), lambda) => TunnelModel::Exponential {
            t0: mev_to_ev(t0),
            lambda_nm: lambda.unwrap_or(DEFAULT_LAMBDA_NM),
        },
        (None, Some(lambda)) => TunnelModel::calibrated(lambda),
        (None, None) => TunnelModel::default(),
    }
}

fn echo_model(env: &mut ReportEnvelope, model: &TunnelModel) {
    match *model {
        TunnelModel::Exponential { t0, lambda_nm } => {
            env.input("t0_mev", t0 * 1e3).input("lambda_nm", lambda_nm);
        }
        TunnelModel::Fixed { t } => {
            env.input("t_mev", t * 1e3);
        }
    }
}

pub fn cmd_window(nodes: &NodeSet, args: &WindowArgs) -> Result<ReportEnvelope> {
    let params = QubitPhysicsParams {
        delta_e_st: mev_to_ev(args.dest),
        t2_star: args.t2,
        eta: args.eta,
    };
    let model = tunnel_model(&args.tunnel);
    let (selected, orientation) = if args.sweep {
        (nodes.nodes.clone(), Orientation::BySeries)
    } else {
        let name = args.node.as_deref().unwrap_or_default();
        (vec![nodes.get(name)?.clone()], Orientation::ByQuantity)
    };
    let windows = selected
        .iter()
        .map(|n| timing::feasibility_window(n, &params, &model))
        .collect::<qden_core::Result<Vec<_>>>()?;
    let bands: Vec<_> = windows.iter().map(|w| w.frequency_band()).collect();
    let mut r = Results::new(orientation, "node", NodeSet::names(&selected));
    r.push("delta_g", "nm", selected.iter().map(|n| n.delta_g));
    r.push("t_min", "s", windows.iter().map(|w| w.t_min));
    r.push("t_max", "s", windows.iter().map(|w| w.t_max));
    r.push("feasible", "", windows.iter().map(|w| w.feasible));
    r.push(
        "binding_constraint_low",
        "",
        windows.iter().map(|w| w.binding_constraint_low.to_string()),
    );
    r.push("adiabatic_bound", "s", windows.iter().map(|w| w.adiabatic_bound));
    r.push("gate_time", "s", windows.iter().map(|w| w.gate_time));
    r.push("coupling", "ueV", windows.iter().map(|w| ev_to_uev(w.coupling)));
    r.push("coupling_clamped", "", windows.iter().map(|w| w.coupling_clamped));
    r.push("j_max", "ueV", windows.iter().map(|w| ev_to_uev(w.j_max)));
    r.push("f_low", "GHz", bands.iter().map(|b| b.map(|(lo, _)| lo / 1e9)));
    r.push("f_high", "GHz", bands.iter().map(|b| b.map(|(_, hi)| hi / 1e9)));
    let mut env = ReportEnvelope::new("window", r);
    env.input("dest_mev", args.dest)
        .input("eta", args.eta)
        .input("t2_s", args.t2);
    echo_model(&mut env, &model);
    match (&args.node, args.sweep) {
        (_, true) => env.input("sweep", true),
        (Some(n), false) => env.input("node", n),
        (None, false) => &mut env,
    };
    for w in windows.iter().filter(|w| !w.feasible) {
        env.warnings.push(format!(
            "{}: no feasible operation time (t_min {:e} s > t_max {:e} s)",
            w.node, w.t_min, w.t_max
        ));
    }
    Ok(env)
}

const SHOR_DEFAULT_NODES: [&str; 3] = ["14nm", "10nm", "7nm"];

pub fn cmd_shor(nodes: &NodeSet, args: &ShorArgs) -> Result<ReportEnvelope> {
    let selected: Vec<TechNode> = if args.node.is_empty() {
        SHOR_DEFAULT_NODES
            .iter()
            .map(|n| nodes.get(n).cloned())
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::new();
        for name in &args.node {
            out.extend(nodes.select(name)?);
        }
        out
    };
    let explicit = match (args.d, args.nphys) {
        (Some(distance), Some(n_physical)) => Some(ExplicitResources {
            distance,
            n_physical,
        }),
        _ => None,
    };
    let options = ShorOptions {
        t_cycle: args.tcycle,
        convention: args.convention.into(),
        explicit,
    };
    let sizes: Vec<u32> = match args.bits {
        Some(b) => vec![b],
        None => shor::shor_dataset().iter().map(|r| r.n_bits).collect(),
    };
    // estimates[size][node]
    let mut estimates = Vec::new();
    for &bits in &sizes {
        let row = selected
            .iter()
            .map(|n| shor::shor_estimate(bits, n, &options))
            .collect::<qden_core::Result<Vec<_>>>()?;
        estimates.push(row);
    }
    let mut r = Results::new(
        Orientation::BySeries,
        "n_bits",
        sizes.iter().map(ToString::to_string).collect(),
    );
    r.push("data_qubits", "1", estimates.iter().map(|e| e[0].row.data_qubits));
    r.push("distance", "1", estimates.iter().map(|e| e[0].row.distance));
    r.push("n_physical", "1", estimates.iter().map(|e| e[0].row.n_physical));
    for (i, node) in selected.iter().enumerate() {
        r.push(&format!("area_{}", node.name), "mm2", estimates.iter().map(|e| e[i].area));
    }
    r.push("runtime", "h", estimates.iter().map(|e| e[0].runtime));
    let mut env = ReportEnvelope::new("shor", r);
    env.input("nodes", NodeSet::names(&selected).join(","))
        .input("t_cycle_s", args.tcycle)
        .input("convention", options.convention.to_string());
    if let Some(b) = args.bits {
        env.input("bits", b);
    }
    if let Some(e) = explicit {
        env.input("d", e.distance).input("nphys", e.n_physical);
    }
    Ok(env)
}

pub fn cmd_swap(nodes: &NodeSet, args: &SwapArgs) -> Result<ReportEnvelope> {
    let node = nodes.get(&args.node)?;
    let params = CommParams {
        delta_e_st: mev_to_ev(args.dest),
        ..CommParams::default()
    };
    let model = tunnel_model(&args.tunnel);
    let hops = communication::swap_hops(args.distance, node)?;
    let hop_time = communication::swap_hop_time(node, &params, &model)?;
    let total = communication::swap_chain_time(args.distance, node, &params, &model)?;
    let mut r = Results::new(Orientation::ByQuantity, "node", vec![node.name.clone()]);
    r.push("hops", "1", [hops]);
    r.push("hop_time", "s", [hop_time]);
    r.push("time", "s", [total]);
    let mut env = ReportEnvelope::new("comm swap", r);
    env.input("distance_nm", args.distance)
        .input("node", &node.name)
        .input("dest_mev", args.dest)
        .input("tau_ref_s", params.tau_ref);
    echo_model(&mut env, &model);
    Ok(env)
}

pub fn cmd_shuttle(args: &ShuttleArgs) -> Result<ReportEnvelope> {
    let params = CommParams {
        delta_c: mev_to_ev(args.deltac),
        safety: args.safety,
        m_eff: args.meff * ELECTRON_MASS_KG,
        ..CommParams::default()
    };
    let speed = communication::shuttle_speed_bound(&params)?;
    let time = communication::shuttle_time(args.distance, &params)?;
    let mut r = Results::new(Orientation::ByQuantity, "case", vec!["shuttle".into()]);
    r.push("speed_bound", "m/s", [speed]);
    r.push("time", "s", [time]);
    let mut env = ReportEnvelope::new("comm shuttle", r);
    env.input("distance_m", args.distance)
        .input("deltac_mev", args.deltac)
        .input("safety", args.safety)
        .input("meff_me", args.meff);
    Ok(env)
}

pub fn cmd_budget(args: &BudgetArgs) -> Result<ReportEnvelope> {
    let budget = PowerBudget {
        cooling_power: args.cooling,
        per_channel_power: args.per_channel,
        mux_factor: args.mux,
    };
    let out = control::channel_budget(&budget)?;
    let mut r = Results::new(Orientation::ByQuantity, "case", vec!["budget".into()]);
    r.push("max_channels", "1", [out.max_channels]);
    r.push("max_qubits", "1", [out.max_qubits]);
    let mut env = ReportEnvelope::new("control budget", r);
    env.input("cooling_w", args.cooling)
        .input("per_channel_w", args.per_channel)
        .input("mux", args.mux);
    Ok(env)
}

pub fn cmd_adc(args: &AdcArgs) -> Result<ReportEnvelope> {
    let spec = AdcSpec::new(args.power, args.rate, args.bits)?;
    let mut r = Results::new(Orientation::ByQuantity, "case", vec!["adc".into()]);
    r.push("energy_per_conversion", "J", [spec.energy_per_conversion()]);
    r.push("fom_walden", "J/step", [control::fom_walden(&spec)?]);
    r.push("fom_schreier", "dB", [control::fom_schreier(&spec)?]);
    let mut env = ReportEnvelope::new("control adc", r);
    env.input("power_w", args.power)
        .input("rate_sps", args.rate)
        .input("bits", args.bits);
    Ok(env)
}

pub fn cmd_dac(args: &DacArgs) -> Result<ReportEnvelope> {
    let power = control::dac_power(args.rate, args.energy)?;
    let mut r = Results::new(Orientation::ByQuantity, "case", vec!["dac".into()]);
    r.push("power", "W", [power]);
    let mut env = ReportEnvelope::new("control dac", r);
    env.input("rate_sps", args.rate).input("energy_j", args.energy);
    Ok(env)
}
