//! Parameter sweeps over the rate formulas and the datasets behind each
//! figure, written as CSV that is byte-identical across runs and thread
//! counts.

mod csv;
mod figures;
mod grid;
mod param;

pub use csv::{write_csv, CSV_HEADER};
pub use figures::{figure_dataset, figure_spec, FigureId, POINTS};
pub use grid::{linear_grid, log_grid, validate_grid};
pub use param::Param;

use fdu_math::{Error, Result, SeriesControl};
use fdu_rates::{RateBreakdown, Scenario};
use rayon::prelude::*;

/// One curve of a sweep: a full scenario whose swept parameter is replaced
/// by each grid value.
#[derive(Debug, Clone, PartialEq)]
pub struct Overlay {
    pub label: String,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub parameter: Param,
    pub grid: Vec<f64>,
    pub overlays: Vec<Overlay>,
}

impl SweepSpec {
    /// A sweep with a single curve.
    pub fn single(template: Scenario, parameter: Param, grid: Vec<f64>) -> Self {
        SweepSpec { parameter, grid, overlays: vec![Overlay { label: "rate".into(), scenario: template }] }
    }

    pub fn validate(&self) -> Result<()> {
        validate_grid(&self.grid)?;
        if self.overlays.is_empty() {
            return Err(Error::invalid("sweep needs at least one overlay"));
        }
        for o in &self.overlays {
            if !self.parameter.is_input_of(&o.scenario) {
                return Err(Error::invalid(format!(
                    "parameter {} is not an input of overlay '{}'",
                    self.parameter, o.label
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub overlay: String,
    /// Value of the swept parameter.
    pub value: f64,
    pub scenario: Scenario,
    /// The breakdown, or the reason this point could not be evaluated.
    pub result: std::result::Result<RateBreakdown, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub parameter: Param,
    /// Grid-major, overlay-minor.
    pub rows: Vec<SweepRow>,
}

/// Evaluates every (grid point, overlay) pair. Points that violate a
/// scenario constraint or fail to converge are kept as rows carrying the
/// error message. Fails only if no point at all could be evaluated.
pub fn run_sweep(spec: &SweepSpec, ctl: &SeriesControl) -> Result<SweepTable> {
    spec.validate()?;
    ctl.validate()?;
    let jobs: Vec<(f64, &Overlay)> =
        spec.grid.iter().flat_map(|&x| spec.overlays.iter().map(move |o| (x, o))).collect();
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|&(x, o)| {
            let scenario = spec.parameter.apply(&o.scenario, x);
            let result = scenario.evaluate(ctl).map_err(|e| e.to_string());
            SweepRow { overlay: o.label.clone(), value: x, scenario, result }
        })
        .collect();
    if rows.iter().all(|r| r.result.is_err()) {
        let first = rows.first().and_then(|r| r.result.as_ref().err()).cloned().unwrap_or_default();
        return Err(Error::invalid(format!("no grid point could be evaluated (first error: {first})")));
    }
    Ok(SweepTable { parameter: spec.parameter, rows })
}
