//! Globally adaptive 21-point Gauss–Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Relative size of the rounding floor, as a multiple of ∫|f| over a panel.
/// QUADPACK uses 50ε; the integrands here are evaluated to a few ulps, and
/// the larger floor would make 1/ε cancellation near poles unresolvable.
const ROUNDING: f64 = 8.0 * f64::EPSILON;

/// One GK21 panel: (integral, error estimate, rounding floor).
fn gk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let hl = 0.5 * (b - a);
    let fc = f(c);
    let mut resk = WGK[10] * fc;
    let mut resg = 0.0;
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = hl * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let reskh = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }
    let result = resk * hl;
    resabs *= hl.abs();
    resasc *= hl.abs();
    let mut err = ((resk - resg) * hl).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let floor = ROUNDING * resabs;
    (result, err.max(floor), floor)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    floor: f64,
}

impl Panel {
    fn new(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Self {
        let (value, error, floor) = gk21(f, a, b);
        Panel { a, b, value, error, floor }
    }

    /// Error that bisection can still remove.
    fn reducible(&self) -> f64 {
        self.error - self.floor
    }
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.reducible() == o.reducible()
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.reducible().total_cmp(&o.reducible())
    }
}

/// Integrates `f` over [points[0], points[last]], starting from the panels
/// delimited by `points` (which must be sorted) and bisecting the panel with
/// the largest reducible error (error above the rounding floor) until the
/// summed reducible error is below max(epsabs, epsrel·|I|). The returned
/// error includes the floor.
///
/// Returns `Err` with the best estimate when `max_intervals` is reached.
pub fn integrate(
    f: &dyn Fn(f64) -> f64,
    points: &[f64],
    epsabs: f64,
    epsrel: f64,
    max_intervals: usize,
) -> Result<Quadrature, Quadrature> {
    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        if w[1] > w[0] {
            heap.push(Panel::new(f, w[0], w[1]));
        }
    }
    let totals = |heap: &BinaryHeap<Panel>| {
        let mut v = 0.0;
        let mut e = 0.0;
        let mut r = 0.0;
        for p in heap.iter() {
            v += p.value;
            e += p.error;
            r += p.reducible();
        }
        (v, e, r)
    };
    let (mut value, _, mut reducible) = totals(&heap);
    let mut since_resum = 0;
    loop {
        if reducible <= epsabs.max(epsrel * value.abs()) {
            break;
        }
        if heap.len() >= max_intervals {
            let (value, error, _) = totals(&heap);
            return Err(Quadrature { value, error, intervals: heap.len() });
        }
        let Some(worst) = heap.pop() else { break };
        if worst.reducible() <= 0.0 {
            heap.push(worst);
            break;
        }
        let m = 0.5 * (worst.a + worst.b);
        if !(m > worst.a && m < worst.b) {
            // Panel cannot be split further in floating point.
            reducible -= worst.reducible();
            heap.push(Panel { floor: worst.error, ..worst });
            continue;
        }
        let left = Panel::new(f, worst.a, m);
        let right = Panel::new(f, m, worst.b);
        value += left.value + right.value - worst.value;
        reducible += left.reducible() + right.reducible() - worst.reducible();
        heap.push(left);
        heap.push(right);
        since_resum += 1;
        if since_resum == 64 {
            (value, _, reducible) = totals(&heap);
            since_resum = 0;
        }
    }
    let (value, error, _) = totals(&heap);
    Ok(Quadrature { value, error, intervals: heap.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let q = integrate(&|x| x.powi(7) - 3.0 * x * x, &[0.0, 2.0], 1e-14, 0.0, 10).unwrap();
        assert!((q.value - (32.0 - 8.0)).abs() < 1e-13);
        assert_eq!(q.intervals, 1);
    }

    #[test]
    fn lorentzian_peak() {
        let e = 1e-4;
        let f = |x: f64| e / (x * x + e * e);
        let q = integrate(&f, &[-1.0, 0.0, 1.0], 1e-12, 1e-12, 2000).unwrap();
        let exact = 2.0 * (1.0 / e).atan();
        assert!((q.value - exact).abs() < 1e-10, "{} vs {exact}", q.value);
        assert!(q.error < 1e-9);
    }

    #[test]
    fn reports_exhaustion() {
        let f = |x: f64| (1.0 / x).sin();
        assert!(integrate(&f, &[1e-8, 1.0], 1e-15, 0.0, 5).is_err());
    }
}
