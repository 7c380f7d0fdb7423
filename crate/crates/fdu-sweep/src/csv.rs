use std::io::{self, Write};

use fdu_rates::{Direction, FrameSpec, Geometry, Scenario};

use crate::{Param, SweepTable};

pub const CSV_HEADER: &str = "overlay,parameter,value,system,geometry,frame,direction,omega0,lambda,alpha,T,L,z0,d,theta,\
geometric_factor,occupation_factor,rate,rate_per_unit,truncation_error,error";

/// 17 significant digits: enough to round-trip any f64.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// Commas and line breaks would break the unquoted format.
fn clean(s: &str) -> String {
    s.replace([',', '\n', '\r'], ";")
}

fn describe(s: &Scenario) -> [&'static str; 4] {
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

/// Writes the table with a header row, comma separators and LF endings.
/// Rows that failed carry empty numeric outputs and the message in `error`.
pub fn write_csv<W: Write>(table: &SweepTable, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in &table.rows {
        let s = &r.scenario;
        let [system, geometry, frame, dir] = describe(s);
        let inputs: Vec<String> = Param::ALL.iter().map(|p| opt(p.get(s))).collect();
        let outputs = match &r.result {
            Ok(b) => [
                num(b.geometric_factor),
                num(b.occupation_factor),
                num(b.rate),
                num(b.rate_per_unit(&s.atom)),
                num(b.truncation_error),
                String::new(),
            ],
            Err(e) => [String::new(), String::new(), String::new(), String::new(), String::new(), clean(e)],
        };
        writeln!(
            out,
            "{},{},{},{system},{geometry},{frame},{dir},{},{}",
            clean(&r.overlay),
            table.parameter,
            num(r.value),
            inputs.join(","),
            outputs.join(",")
        )?;
    }
    Ok(())
}
