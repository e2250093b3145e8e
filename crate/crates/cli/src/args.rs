use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Format;

/// Resource estimator for CMOS silicon spin-qubit architectures.
#[derive(Debug, Parser)]
#[command(name = "qden", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "table", value_parser = parse_format)]
    pub format: Format,

    /// CSV file of extra technology nodes merged with the built-in set.
    #[arg(long, global = true, env = "QDEN_NODES")]
    pub custom: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Technology-node parameter sets.
    #[command(subcommand)]
    Nodes(NodesCommand),
    /// Steane-code layout dimensions, areas and density.
    Layout(LayoutArgs),
    /// Logical-qubit density for a QEC code.
    Density(DensityArgs),
    /// Feasible operation-time window.
    Window(WindowArgs),
    /// Shor factoring resources.
    Shor(ShorArgs),
    /// Communication timing.
    #[command(subcommand)]
    Comm(CommCommand),
    /// Control-electronics budgets.
    #[command(subcommand)]
    Control(ControlCommand),
}

#[derive(Debug, Subcommand)]
pub enum NodesCommand {
    /// List built-in (and custom) nodes.
    List,
}

#[derive(Debug, Args)]
pub struct LayoutArgs {
    /// Node name, or `all`.
    #[arg(long)]
    pub node: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeArg {
    Steane,
    Concat,
    Surface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Quarter,
    Full,
}

impl From<ConventionArg> for qden_core::AreaConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Quarter => qden_core::AreaConvention::QuarterBlock,
            ConventionArg::Full => qden_core::AreaConvention::FullBlock,
        }
    }
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long, value_enum)]
    pub code: CodeArg,
    /// Surface-code distance.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, value_enum, default_value = "quarter")]
    pub convention: ConventionArg,
    #[arg(long, required_unless_present = "sweep")]
    pub node: Option<String>,
    /// Evaluate every known node (one CSV row per node).
    #[arg(long)]
    pub sweep: bool,
}

#[derive(Debug, Args)]
pub struct TunnelArgs {
    /// Tunnel-coupling prefactor t0, meV (default: calibrated to 100 ps at 40 nm).
    #[arg(long)]
    pub t0: Option<f64>,
    /// Tunnel-coupling decay length, nm.
    #[arg(long)]
    pub lambda: Option<f64>,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[arg(long, required_unless_present = "sweep")]
    pub node: Option<String>,
    /// Singlet-triplet splitting, meV.
    #[arg(long, default_value_t = 0.6)]
    pub dest: f64,
    /// Error threshold per gate.
    #[arg(long, default_value_t = 1e-3)]
    pub eta: f64,
    /// Dephasing time T2*, s.
    #[arg(long, default_value_t = 1e-6)]
    pub t2: f64,
    #[command(flatten)]
    pub tunnel: TunnelArgs,
    /// Evaluate every known node (one CSV row per node).
    #[arg(long)]
    pub sweep: bool,
}

#[derive(Debug, Args)]
pub struct ShorArgs {
    /// Problem size in bits (default: every tabulated size).
    #[arg(long)]
    pub bits: Option<u32>,
    /// Node name; repeatable (default: 14nm, 10nm, 7nm).
    #[arg(long)]
    pub node: Vec<String>,
    /// Code distance for an untabulated size.
    #[arg(long, requires = "nphys", requires = "bits")]
    pub d: Option<u32>,
    /// Physical qubit count for an untabulated size.
    #[arg(long, requires = "d")]
    pub nphys: Option<u64>,
    /// Surface-code cycle time, s.
    #[arg(long, default_value_t = 200e-9)]
    pub tcycle: f64,
    #[arg(long, value_enum, default_value = "quarter")]
    pub convention: ConventionArg,
}

#[derive(Debug, Subcommand)]
pub enum CommCommand {
    /// SWAP-chain transfer time.
    Swap(SwapArgs),
    /// Spin-shuttle speed bound and transfer time.
    Shuttle(ShuttleArgs),
}

#[derive(Debug, Args)]
pub struct SwapArgs {
    /// Distance, nm.
    #[arg(long)]
    pub distance: f64,
    #[arg(long)]
    pub node: String,
    /// Singlet-triplet splitting, meV.
    #[arg(long, default_value_t = 0.6)]
    pub dest: f64,
    #[command(flatten)]
    pub tunnel: TunnelArgs,
}

#[derive(Debug, Args)]
pub struct ShuttleArgs {
    /// Distance, m.
    #[arg(long)]
    pub distance: f64,
    /// Confinement energy, meV.
    #[arg(long, default_value_t = 0.3)]
    pub deltac: f64,
    /// Fraction of the limiting speed used.
    #[arg(long, default_value_t = 0.1)]
    pub safety: f64,
    /// Effective mass in electron masses.
    #[arg(long, default_value_t = qden_core::communication::SI_TRANSVERSE_MASS_RATIO)]
    pub meff: f64,
}

#[derive(Debug, Subcommand)]
pub enum ControlCommand {
    /// Qubit channels supported by a cooling budget.
    Budget(BudgetArgs),
    /// ADC figures of merit.
    Adc(AdcArgs),
    /// DAC power from conversion energy.
    Dac(DacArgs),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Cooling power, W.
    #[arg(long)]
    pub cooling: f64,
    /// Power per channel, W.
    #[arg(long)]
    pub per_channel: f64,
    /// Qubits per channel.
    #[arg(long, default_value_t = 1)]
    pub mux: u32,
}

#[derive(Debug, Args)]
pub struct AdcArgs {
    /// Power, W.
    #[arg(long)]
    pub power: f64,
    /// Sample rate, Sa/s.
    #[arg(long)]
    pub rate: f64,
    /// Effective number of bits.
    #[arg(long)]
    pub bits: f64,
}

#[derive(Debug, Args)]
pub struct DacArgs {
    /// Sample rate, Sa/s.
    #[arg(long)]
    pub rate: f64,
    /// Energy per conversion, J.
    #[arg(long)]
    pub energy: f64,
}
