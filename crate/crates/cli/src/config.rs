use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "dt4", version, about = "Vertex formalism for DT invariants of toric CY 4-folds")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    /// Read the whole run from a JSON config instead of a subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub task: Option<Task>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Worker threads (defaults to all cores).
    #[arg(long, env = "DT4_PARALLEL", global = true)]
    pub parallel: Option<usize>,

    /// Add wall time to the report; reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A full run as read from `--config`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: Option<Format>,
    #[serde(default)]
    pub parallel: Option<usize>,
    #[serde(default)]
    pub timing: bool,
    pub task: Task,
}

impl RunConfig {
    pub fn from_cli(common: Common, task: Task) -> Self {
        RunConfig { output: common.output, format: common.format, parallel: common.parallel, timing: common.timing, task }
    }
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    /// List or count partitions.
    Enumerate(EnumerateArgs),
    /// Run a verification sweep.
    #[command(subcommand)]
    Verify(Verify),
    /// One localized DT invariant.
    Dt(DtArgs),
    /// DT invariants for a range of Euler characteristics.
    DtSeries(DtSeriesArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    Solid,
    Plane,
    Curve,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub kind: PartitionKind,
    /// Number of boxes (solid and plane).
    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
    /// JSON file with the four leg plane partitions (curve).
    #[arg(long)]
    #[serde(default)]
    pub legs: Option<PathBuf>,
    /// Maximal number of boxes outside the legs (curve).
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub kmax: usize,
    #[arg(long)]
    #[serde(default)]
    pub count_only: bool,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Verify {
    /// Axis independence of signed point vertex classes.
    VertexSigns(VertexSignsArgs),
    /// Axis independence of signed edge classes.
    EdgeSigns(EdgeSignsArgs),
    /// Axis independence of signed curve vertex classes at two cut-offs.
    CurveSigns(CurveSignsArgs),
    /// Euler characteristic from partition data against box counting.
    Chi(ChiArgs),
    /// Global sign on the zero section of KP3.
    SignPatching(SignPatchingArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassMode {
    #[default]
    Cohomological,
    KTheoretic,
}

fn default_4() -> usize {
    4
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSignsArgs {
    #[arg(long, default_value_t = 4)]
    #[serde(default = "default_4")]
    pub max_size: usize,
    #[arg(long, value_enum, default_value_t = ClassMode::Cohomological)]
    #[serde(default)]
    pub mode: ClassMode,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSignsArgs {
    #[arg(long, default_value_t = 4)]
    #[serde(default = "default_4")]
    pub max_size: usize,
    /// JSON list of normal degree triples; defaults to the built-in test set.
    #[arg(long)]
    #[serde(default)]
    pub m_set: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSignsArgs {
    /// Bound on the total number of leg boxes.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "default_3")]
    pub legs_budget: usize,
    /// Bound on the number of boxes outside the legs.
    #[arg(long, default_value_t = 2)]
    #[serde(default = "default_2")]
    pub extra_budget: usize,
}

fn default_3() -> usize {
    3
}

fn default_2() -> usize {
    2
}

fn default_1() -> usize {
    1
}

fn default_samples() -> usize {
    100
}

fn default_seed() -> u64 {
    6
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChiArgs {
    #[arg(long, default_value_t = 2)]
    #[serde(default = "default_2")]
    pub max_degree: usize,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "default_3_i64")]
    pub max_n: i64,
    #[arg(long)]
    #[serde(default)]
    pub m_set: Option<PathBuf>,
    /// Additionally sampled single-chart curve partitions.
    #[arg(long, default_value_t = 100)]
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[arg(long, default_value_t = 6)]
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_3_i64() -> i64 {
    3
}

fn default_2_i64() -> i64 {
    2
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignPatchingArgs {
    #[arg(long, default_value_t = 2)]
    #[serde(default = "default_2_i64")]
    pub max_n: i64,
    /// Bound on the total degree over all edges.
    #[arg(long, default_value_t = 1)]
    #[serde(default = "default_1")]
    pub max_degree: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InsertionName {
    #[default]
    Unit,
    MassTautological,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeName {
    #[default]
    Cohomological,
    KTheoretic,
    Elliptic,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InsertionArgs {
    #[arg(long, value_enum, default_value_t = InsertionName::Unit)]
    #[serde(default, rename = "kind")]
    pub insertion: InsertionName,
    /// Weight `t^μ` of the mass-tautological insertion as five exponents
    /// `a1,a2,a3,a4,mass`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0,0,0,1")]
    #[serde(default = "default_mu")]
    pub mu: Vec<i32>,
    #[arg(long, value_enum, default_value_t = ModeName::Cohomological)]
    #[serde(default)]
    pub mode: ModeName,
    /// Truncation order in `p` for elliptic classes.
    #[arg(long, default_value_t = 2)]
    #[serde(default = "default_2")]
    pub order: usize,
}

fn default_mu() -> Vec<i32> {
    vec![0, 0, 0, 0, 1]
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryArgs {
    /// `C4`, `KP3`, `LocalCurve:m2,m3,m4`, or a geometry JSON file.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(rename = "name")]
    pub geometry: String,
    /// Edge degrees, one per edge.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub degrees: Vec<usize>,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DtArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[command(flatten)]
    pub insertion: InsertionArgs,
    /// Square-root axis per chart (default 4 everywhere).
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub vertex_axes: Vec<usize>,
    /// Square-root axis per edge in `2..=4` (default 4 everywhere).
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub edge_axes: Vec<usize>,
    /// Include every fixed point with its sign and class.
    #[arg(long)]
    #[serde(default)]
    pub log: bool,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DtSeriesArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[arg(long)]
    pub n_max: i64,
    #[command(flatten)]
    pub insertion: InsertionArgs,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn config_rejects_unknown_fields() {
        let ok = r#"{"task":{"verify":{"vertex-signs":{"max_size":2}}}}"#;
        assert!(serde_json::from_str::<RunConfig>(ok).is_ok());
        let bad = r#"{"task":{"verify":{"vertex-signs":{"max_size":2,"typo":1}}}}"#;
        assert!(serde_json::from_str::<RunConfig>(bad).is_err());
        let bad = r#"{"threads":2,"task":{"verify":{"vertex-signs":{}}}}"#;
        assert!(serde_json::from_str::<RunConfig>(bad).is_err());
        let neg = r#"{"task":{"verify":{"vertex-signs":{"max_size":-1}}}}"#;
        assert!(serde_json::from_str::<RunConfig>(neg).is_err());
    }
}
