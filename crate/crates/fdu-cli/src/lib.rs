//! Argument handling and dispatch for the `fdu` binary. All numbers come
//! from the library crates; this layer only parses, validates and prints.

mod args;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Map, Value};

use fdu_math::{Error, SeriesControl};
use fdu_oracle::{default_grid, validate_grid, QuadratureControl};
use fdu_rates::{
    rate_ratio, Acceleration, AtomSpec, Direction, Energy, FrameSpec, Geometry, Length, PairConfig, RateBreakdown,
    Scenario,
};
use fdu_sweep::{figure_dataset, linear_grid, log_grid, run_sweep, write_csv, FigureId, Param, SweepSpec, SweepTable};
use fdu_units::{estimate_rate, Rb87Variant};

pub use args::{expand_config, Cli, Command};
use args::{Dir, EstimateArgs, FigureArgs, Frame, GeometryKind, RateArgs, ScenarioArgs, SweepArgs, System, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;

/// A failure together with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn computation(message: impl Into<String>) -> Self {
        Failure { code: EXIT_COMPUTATION, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => Failure::usage(m),
            e => Failure::computation(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `argv` (program name first), runs the command and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
pub fn run(argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = match expand_config(argv) {
        Ok(a) => a,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Rate(a) => rate(&a, out),
        Command::Ratio(a) => ratio(&a, out),
        Command::Sweep(a) => sweep(&a, out),
        Command::Figure(a) => figure(&a, out),
        Command::Estimate(a) => estimate(&a, out),
        Command::Validate(a) => validate(&a.grid, out),
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::computation(format!("write failed: {e}"))
}

/// Caps the global rayon pool at FDU_THREADS, if set.
fn configure_threads() -> Outcome {
    let Ok(v) = std::env::var("FDU_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("FDU_THREADS must be a positive integer (got '{v}')")))?;
    // A pool built earlier in the same process keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn series_control(a: &ScenarioArgs) -> std::result::Result<SeriesControl, Failure> {
    let d = SeriesControl::default();
    let ctl = SeriesControl {
        rel_tol: a.series.rel_tol.unwrap_or(d.rel_tol),
        abs_tol: a.series.abs_tol.unwrap_or(d.abs_tol),
        max_terms: a.series.max_terms.unwrap_or(d.max_terms),
    };
    ctl.validate()?;
    Ok(ctl)
}

fn direction(d: Dir) -> Direction {
    match d {
        Dir::Up => Direction::Upward,
        Dir::Down => Direction::Downward,
    }
}

fn forbid(flag: &str, v: Option<f64>, why: &str) -> Outcome {
    match v {
        Some(_) => Err(Failure::usage(format!("--{flag} is not used {why}"))),
        None => Ok(()),
    }
}

fn need(flag: &str, v: Option<f64>, why: &str) -> std::result::Result<f64, Failure> {
    v.ok_or_else(|| Failure::usage(format!("--{flag} is required {why}")))
}

/// Builds and validates the scenario described by the flags.
fn scenario(a: &ScenarioArgs, dir: Dir) -> std::result::Result<Scenario, Failure> {
    let alpha = Acceleration(a.alpha);
    let frame = match a.frame {
        Frame::Inertial => {
            forbid("T", a.temperature, "with --frame inertial")?;
            FrameSpec::Inertial { alpha }
        }
        Frame::Coaccelerated => FrameSpec::Coaccelerated {
            alpha,
            temperature: Energy(need("T", a.temperature, "with --frame coaccelerated")?),
        },
    };
    let geometry = match a.geometry {
        GeometryKind::Free => {
            forbid("L", a.length, "with --geometry free")?;
            forbid("z0", a.z0, "with --geometry free")?;
            Geometry::FreeSpace
        }
        GeometryKind::Boundary => {
            forbid("L", a.length, "with --geometry boundary")?;
            Geometry::SingleBoundary { z0: Length(need("z0", a.z0, "with --geometry boundary")?) }
        }
        GeometryKind::Cavity => Geometry::Cavity {
            length: Length(need("L", a.length, "with --geometry cavity")?),
            z0: Length(need("z0", a.z0, "with --geometry cavity")?),
        },
    };
    let pair = match a.system {
        System::Single => {
            forbid("d", a.d, "with --system single")?;
            forbid("theta", a.theta, "with --system single")?;
            None
        }
        System::Pair => Some(PairConfig {
            theta: need("theta", a.theta, "with --system pair")?,
            d: Length(need("d", a.d, "with --system pair")?),
        }),
    };
    let s = Scenario { atom: AtomSpec::new(a.omega0, a.lambda), geometry, frame, pair, direction: direction(dir) };
    s.validate()?;
    Ok(s)
}

fn labels(s: &Scenario) -> [&'static str; 4] {
    let system = if s.pair.is_some() { "pair" } else { "single" };
    let geometry = match s.geometry {
        Geometry::FreeSpace => "free",
        Geometry::SingleBoundary { .. } => "boundary",
        Geometry::Cavity { .. } => "cavity",
    };
    let frame = match s.frame {
        FrameSpec::Inertial { .. } => "inertial",
        FrameSpec::Coaccelerated { .. } => "coaccelerated",
    };
    let dir = match s.direction {
        Direction::Upward => "up",
        Direction::Downward => "down",
    };
    [system, geometry, frame, dir]
}

/// The `--json` document: always the same six top-level keys, and inside
/// `inputs` every parameter name, null when it does not apply.
pub fn rate_json(s: &Scenario, b: &RateBreakdown) -> Value {
    let [system, geometry, frame, dir] = labels(s);
    let mut inputs = Map::new();
    inputs.insert("system".into(), json!(system));
    inputs.insert("geometry".into(), json!(geometry));
    inputs.insert("frame".into(), json!(frame));
    inputs.insert("direction".into(), json!(dir));
    for p in Param::ALL {
        inputs.insert(p.name().into(), json!(p.get(s)));
    }
    json!({
        "inputs": inputs,
        "geometric_factor": b.geometric_factor,
        "occupation_factor": b.occupation_factor,
        "rate": b.rate,
        "rate_per_unit": b.rate_per_unit(&s.atom),
        "truncation_error": b.truncation_error,
    })
}

fn rate(a: &RateArgs, out: &mut dyn Write) -> Outcome {
    let s = scenario(&a.scenario, a.dir)?;
    let b = s.evaluate(&series_control(&a.scenario)?)?;
    if a.json {
        writeln!(out, "{}", rate_json(&s, &b)).map_err(io)?;
        return Ok(());
    }
    let [system, geometry, frame, dir] = labels(&s);
    let mut text = format!("{system} atom, {geometry}, {frame} frame, {dir}\n");
    for (k, v) in [
        ("geometric_factor", b.geometric_factor),
        ("occupation_factor", b.occupation_factor),
        ("rate", b.rate),
        ("rate_per_unit", b.rate_per_unit(&s.atom)),
        ("truncation_error", b.truncation_error),
    ] {
        text += &format!("{k:<18} = {v:e}\n");
    }
    out.write_all(text.as_bytes()).map_err(io)
}

fn ratio(a: &ScenarioArgs, out: &mut dyn Write) -> Outcome {
    let s = scenario(a, Dir::Up)?;
    let r = rate_ratio(&s.atom, &s.geometry, &s.frame, s.pair.as_ref(), &series_control(a)?)?;
    writeln!(out, "ratio = {r:e}").map_err(io)
}

fn write_table(table: &SweepTable, path: &Path) -> Outcome {
    let f = File::create(path).map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(f);
    write_csv(table, &mut w).map_err(io)?;
    w.flush().map_err(io)
}

/// Rows that failed are kept in the CSV; they still make the run fail.
fn failed_rows(table: &SweepTable, path: &Path, out: &mut dyn Write) -> Outcome {
    let bad = table.rows.iter().filter(|r| r.result.is_err()).count();
    writeln!(out, "wrote {} rows to {}", table.rows.len(), path.display()).map_err(io)?;
    if bad > 0 {
        return Err(Failure::computation(format!("{bad} of {} rows failed; see the error column", table.rows.len())));
    }
    Ok(())
}

fn sweep(a: &SweepArgs, out: &mut dyn Write) -> Outcome {
    configure_threads()?;
    let param: Param = a.param.parse()?;
    let template = scenario(&a.scenario, a.dir)?;
    let grid = if a.log { log_grid(a.from, a.to, a.points)? } else { linear_grid(a.from, a.to, a.points)? };
    let table = run_sweep(&SweepSpec::single(template, param, grid), &series_control(&a.scenario)?)?;
    write_table(&table, &a.out)?;
    failed_rows(&table, &a.out, out)
}

fn figure(a: &FigureArgs, out: &mut dyn Write) -> Outcome {
    configure_threads()?;
    if a.id == "all" {
        let dir = a.out.clone().unwrap_or_else(|| PathBuf::from("."));
        std::fs::create_dir_all(&dir).map_err(|e| Failure::usage(format!("cannot create {}: {e}", dir.display())))?;
        for id in FigureId::ALL {
            let path = dir.join(format!("{id}.csv"));
            let table = figure_dataset(id)?;
            write_table(&table, &path)?;
            writeln!(out, "wrote {} rows to {}", table.rows.len(), path.display()).map_err(io)?;
        }
        return Ok(());
    }
    let id: FigureId = a.id.parse()?;
    let path = a.out.clone().unwrap_or_else(|| PathBuf::from(format!("{id}.csv")));
    let table = figure_dataset(id)?;
    write_table(&table, &path)?;
    writeln!(out, "wrote {} rows to {}", table.rows.len(), path.display()).map_err(io)
}

fn estimate(a: &EstimateArgs, out: &mut dyn Write) -> Outcome {
    let variant = match a.variant {
        Variant::Single => Rb87Variant::Single,
        Variant::Pair => Rb87Variant::Pair,
    };
    let mut si = variant.scenario();
    si.cavity_length = a.length_m.unwrap_or(si.cavity_length);
    si.atom_boundary_distance = a.z0_m.unwrap_or(si.atom_boundary_distance);
    si.acceleration = a.accel.unwrap_or(si.acceleration);
    si.gap = a.gap_ev.unwrap_or(si.gap);
    si.lambda = a.lambda.unwrap_or(si.lambda);
    if a.d_m.is_some() {
        si.interatomic_distance = a.d_m;
    }
    if a.theta.is_some() {
        si.theta = a.theta;
    }
    si.validate()?;
    let report = estimate_rate(variant, &si)?;
    writeln!(out, "{report}").map_err(io)
}

fn validate(grid: &str, out: &mut dyn Write) -> Outcome {
    if grid != "default" {
        return Err(Failure::usage(format!("--grid must be 'default' (got '{grid}')")));
    }
    configure_threads()?;
    let rows = validate_grid(&default_grid(), &QuadratureControl::default())?;
    let mut text = format!(
        "{:<28} {:>24} {:>24} {:>10} {:>10}  result\n",
        "config", "closed_form", "oracle", "est_err", "rel_dev"
    );
    for r in &rows {
        text += &format!(
            "{:<28} {:>24.16e} {:>24.16e} {:>10.2e} {:>10.2e}  {}\n",
            r.label,
            r.closed_form,
            r.oracle,
            r.error_estimate,
            r.rel_dev,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    let max = rows.iter().map(|r| r.rel_dev).fold(0.0, f64::max);
    text += &format!("max relative deviation = {max:e}\n");
    out.write_all(text.as_bytes()).map_err(io)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        return Err(Failure::computation(format!("{failed} of {} grid configurations disagree", rows.len())));
    }
    Ok(())
}
