/// CODATA 2018 values; all four are exact in the revised SI.
///
/// | constant | value (6 s.f.)       |
/// |----------|----------------------|
/// | ħ        | 1.05457e−34 J·s      |
/// | c        | 2.99792e8 m/s        |
/// | k_B      | 1.38065e−23 J/K      |
/// | eV       | 1.60218e−19 J        |
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
    pub ev: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar: 1.054_571_817e-34,
        c: 299_792_458.0,
        k_b: 1.380_649e-23,
        ev: 1.602_176_634e-19,
    };

    /// ħ in eV·s (≈ 6.58212e−16).
    pub fn hbar_ev_s(&self) -> f64 {
        self.hbar / self.ev
    }

    /// ħc in eV·m (≈ 1.97327e−7).
    pub fn hbar_c_ev_m(&self) -> f64 {
        self.hbar * self.c / self.ev
    }

    /// k_B in eV/K.
    pub fn k_b_ev_per_k(&self) -> f64 {
        self.k_b / self.ev
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}
