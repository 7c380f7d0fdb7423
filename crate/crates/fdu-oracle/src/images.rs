//! Image charges for the Dirichlet mirrors, grouped by |n| so that each
//! group is a second difference of the kernel and groups decay like n⁻⁴.

use fdu_rates::{Geometry, PairConfig};

/// Correlator weights: cos²θ on atom A at z₀, sin²θ on atom B at z₀ + d,
/// sin2θ/2 on each cross term.
#[derive(Clone, Copy)]
pub(crate) struct Weights {
    aa: f64,
    bb: f64,
    ab: f64,
    d: f64,
}

impl Weights {
    pub fn new(pair: Option<&PairConfig>) -> Self {
        match pair {
            None => Weights { aa: 1.0, bb: 0.0, ab: 0.0, d: 0.0 },
            Some(p) => {
                let (s, c) = p.theta.sin_cos();
                Weights { aa: c * c, bb: s * s, ab: 0.5 * (2.0 * p.theta).sin(), d: p.d.0 }
            }
        }
    }
}

/// True if only group 0 exists.
pub(crate) fn is_finite(geom: &Geometry) -> bool {
    !matches!(geom, Geometry::Cavity { .. })
}

/// (distance, weight) pairs of the images with |n| = m, equal distances
/// merged and zero weights dropped.
pub(crate) fn group(geom: &Geometry, w: Weights, m: u32) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut push = |dist: f64, weight: f64| {
        if weight != 0.0 {
            out.push((dist.abs(), weight));
        }
    };
    let d = w.d;
    let direct = |push: &mut dyn FnMut(f64, f64), shift: f64| {
        push(shift, w.aa + w.bb);
        push(d + shift, w.ab);
        push(d - shift, w.ab);
    };
    match *geom {
        Geometry::FreeSpace => {
            if m == 0 {
                direct(&mut push, 0.0);
            }
        }
        Geometry::SingleBoundary { z0 } => {
            if m == 0 {
                let z = z0.0;
                direct(&mut push, 0.0);
                push(2.0 * z, -w.aa);
                push(2.0 * (z + d), -w.bb);
                push(2.0 * z + d, -2.0 * w.ab);
            }
        }
        Geometry::Cavity { length, z0 } => {
            let (l, z) = (length.0, z0.0);
            let shifts: Vec<f64> = if m == 0 { vec![0.0] } else { vec![f64::from(m) * l, -f64::from(m) * l] };
            for s in shifts {
                direct(&mut push, s);
                push(2.0 * z - s, -w.aa);
                push(2.0 * (z + d) - s, -w.bb);
                push(2.0 * z + d - s, -2.0 * w.ab);
            }
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(out.len());
    for (dist, weight) in out {
        match merged.last_mut() {
            Some(last) if last.0 == dist => last.1 += weight,
            _ => merged.push((dist, weight)),
        }
    }
    merged.retain(|&(_, w)| w != 0.0);
    merged
}
