use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Transition rates of uniformly accelerated atoms near mirrors.
///
/// Every numeric flag is in natural units (ħ = c = k_B = 1) except under
/// `estimate`, which takes SI values. `--config FILE` reads `key = value`
/// lines that stand for `--key value` flags; flags given on the command
/// line take precedence.
#[derive(Debug, Parser)]
#[command(name = "fdu", version)]
pub struct Cli {
    /// key = value file mirroring the flags of the chosen command.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one rate and print its breakdown.
    #[command(args_override_self = true)]
    Rate(RateArgs),
    /// Upward over downward rate.
    #[command(args_override_self = true)]
    Ratio(ScenarioArgs),
    /// Sweep one parameter and write the rates as CSV.
    #[command(args_override_self = true)]
    Sweep(SweepArgs),
    /// Write the dataset behind a figure as CSV.
    #[command(args_override_self = true)]
    Figure(FigureArgs),
    /// Rubidium-scale estimate in a 100 nm cavity (SI inputs).
    #[command(args_override_self = true)]
    Estimate(EstimateArgs),
    /// Compare closed forms against numerical quadrature.
    #[command(args_override_self = true)]
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    Single,
    Pair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Frame {
    Inertial,
    Coaccelerated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryKind {
    Free,
    Boundary,
    Cavity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dir {
    Up,
    Down,
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    #[arg(long, value_enum, default_value = "single")]
    pub system: System,
    #[arg(long, value_enum, default_value = "inertial")]
    pub frame: Frame,
    #[arg(long, value_enum, default_value = "free")]
    pub geometry: GeometryKind,
    /// Transition energy.
    #[arg(long)]
    pub omega0: f64,
    /// Proper acceleration.
    #[arg(long)]
    pub alpha: f64,
    /// Bath temperature seen in the coaccelerated frame.
    #[arg(long = "T", value_name = "T")]
    pub temperature: Option<f64>,
    /// Mirror separation (cavity only).
    #[arg(long = "L", value_name = "L")]
    pub length: Option<f64>,
    /// Distance of the (first) atom from the lower mirror.
    #[arg(long)]
    pub z0: Option<f64>,
    /// Interatomic distance (pair only).
    #[arg(long)]
    pub d: Option<f64>,
    /// Entanglement angle of the pair state, in radians.
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    /// Relative truncation tolerance of the image sums.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Absolute truncation tolerance of the image sums.
    #[arg(long)]
    pub abs_tol: Option<f64>,
    /// Term budget per image sum.
    #[arg(long)]
    pub max_terms: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    #[arg(long, value_enum, default_value = "up")]
    pub dir: Dir,
    /// Print a JSON object instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    #[arg(long, value_enum, default_value = "up")]
    pub dir: Dir,
    /// Swept parameter: omega0, lambda, alpha, T, L, z0, d or theta.
    #[arg(long)]
    pub param: String,
    #[arg(long)]
    pub from: f64,
    #[arg(long)]
    pub to: f64,
    #[arg(long, default_value_t = fdu_sweep::POINTS)]
    pub points: usize,
    /// Logarithmic spacing.
    #[arg(long)]
    pub log: bool,
    /// CSV output path.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Figure identifier, e.g. fig6_theta_up, or `all`.
    #[arg(long)]
    pub id: String,
    /// Output file (single figure) or directory (`all`); defaults to
    /// {figure_id}.csv in the current directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Single,
    Pair,
}

#[derive(Debug, Clone, Args)]
pub struct EstimateArgs {
    #[arg(long, value_enum, default_value = "single")]
    pub variant: Variant,
    /// Mirror separation in metres.
    #[arg(long)]
    pub length_m: Option<f64>,
    /// Atom to mirror distance in metres.
    #[arg(long)]
    pub z0_m: Option<f64>,
    /// Interatomic distance in metres (pair).
    #[arg(long)]
    pub d_m: Option<f64>,
    /// Proper acceleration in m/s^2.
    #[arg(long)]
    pub accel: Option<f64>,
    /// Transition energy in eV.
    #[arg(long)]
    pub gap_ev: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Entanglement angle in radians (pair).
    #[arg(long)]
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// Configuration grid; only `default` is defined.
    #[arg(long, default_value = "default")]
    pub grid: String,
}

/// Splices the contents of a `--config` file into `argv`, right after the
/// subcommand so that explicit flags override it.
pub fn expand_config(argv: Vec<String>) -> Result<Vec<String>, String> {
    let mut rest = Vec::with_capacity(argv.len());
    let mut path = None;
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(it.next().ok_or("--config requires a file path")?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let mut extra = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config {path} line {}: expected key = value", no + 1))?;
        let (k, v) = (k.trim().trim_start_matches("--"), v.trim());
        match v {
            "true" => extra.push(format!("--{k}")),
            "false" => {}
            _ => {
                extra.push(format!("--{k}"));
                extra.push(v.to_string());
            }
        }
    }
    // rest[0] is the program name; the subcommand is the first bare word.
    let at = rest.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 2).unwrap_or(rest.len());
    rest.splice(at..at, extra);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_goes_after_subcommand() {
        let dir = std::env::temp_dir().join(format!("fdu-config-{}", std::process::id()));
        std::fs::write(&dir, "# comment\nalpha = 4\njson = true\nlog = false\n").unwrap();
        let argv: Vec<String> =
            ["fdu", "rate", "--config", dir.to_str().unwrap(), "--omega0", "1"].map(String::from).to_vec();
        let got = expand_config(argv).unwrap();
        std::fs::remove_file(&dir).ok();
        assert_eq!(got, ["fdu", "rate", "--alpha", "4", "--json", "--omega0", "1"]);
    }

    #[test]
    fn command_line_overrides_config() {
        let cli = Cli::try_parse_from(["fdu", "ratio", "--alpha", "4", "--omega0", "1", "--alpha", "8"]).unwrap();
        match cli.command {
            Command::Ratio(s) => assert_eq!(s.alpha, 8.0),
            c => panic!("{c:?}"),
        }
    }
}
