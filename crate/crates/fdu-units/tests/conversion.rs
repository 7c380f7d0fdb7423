use std::f64::consts::PI;

use fdu_units::*;
use proptest::prelude::*;

const K: PhysicalConstants = PhysicalConstants::CODATA_2018;

fn rb_single() -> SIScenario {
    Rb87Variant::Single.scenario()
}

#[test]
fn derived_constants() {
    assert!((K.hbar_c_ev_m() - 1.973_27e-7).abs() < 1e-12);
    assert!((K.hbar_ev_s() - 6.582_12e-16).abs() < 1e-21);
    assert!((1.0 / K.hbar_ev_s() - 1.519e15).abs() < 1e12);
}

#[test]
fn cavity_length_in_gap_units() {
    let n = to_natural(&rb_single(), &K).unwrap();
    let wl = n.omega0_l().unwrap();
    assert!((wl - 0.1267).abs() < 1e-4, "{wl}");
}

#[test]
fn acceleration_in_gap_units() {
    let n = to_natural(&rb_single(), &K).unwrap();
    let r = n.alpha_over_omega0();
    assert!((r - 8.78e-7).abs() < 0.01e-7, "{r}");
}

#[test]
fn rejects_bad_scenarios() {
    let bad = SIScenario { cavity_length: -1.0, ..rb_single() };
    assert!(to_natural(&bad, &K).is_err());
    let bad = SIScenario { atom_boundary_distance: 200e-9, ..rb_single() };
    assert!(to_natural(&bad, &K).is_err());
    let bad = SIScenario { theta: Some(1.0), ..rb_single() };
    assert!(to_natural(&bad, &K).is_err());
    let bad = SIScenario { acceleration: 1e-320, ..rb_single() };
    assert!(to_natural(&bad, &K).is_err());
}

#[test]
fn quoted_per_second_values_follow_from_hbar() {
    for v in [Rb87Variant::Single, Rb87Variant::Pair] {
        let (ev, per_s) = v.quoted();
        let conv = ev_to_per_second(ev, &K);
        // The published s⁻¹ values are rounded from the eV ones.
        assert!((conv - per_s).abs() / per_s < 5e-3, "{conv} vs {per_s}");
    }
}

proptest! {
    #[test]
    fn round_trip_is_identity(
        l in 1e-8f64..1e-4,
        frac in 0.01f64..0.9,
        a in 1e10f64..1e22,
        gap in 0.01f64..5.0,
        pair in any::<bool>(),
        dfrac in 0.01f64..0.09,
        theta in 0.0f64..PI,
    ) {
        let s = SIScenario {
            cavity_length: l,
            atom_boundary_distance: frac * l,
            interatomic_distance: pair.then_some(dfrac * l),
            acceleration: a,
            gap,
            lambda: 0.1,
            theta: pair.then_some(theta),
        };
        let back = from_natural(&to_natural(&s, &K).unwrap(), &K).unwrap();
        let rel = |x: f64, y: f64| (x - y).abs() / y.abs();
        prop_assert!(rel(back.cavity_length, s.cavity_length) < 1e-12);
        prop_assert!(rel(back.atom_boundary_distance, s.atom_boundary_distance) < 1e-12);
        prop_assert!(rel(back.acceleration, s.acceleration) < 1e-12);
        prop_assert_eq!(back.gap, s.gap);
        prop_assert_eq!(back.theta, s.theta);
        if let (Some(x), Some(y)) = (back.interatomic_distance, s.interatomic_distance) {
            prop_assert!(rel(x, y) < 1e-12);
        }
    }
}
