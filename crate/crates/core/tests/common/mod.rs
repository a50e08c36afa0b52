//! Synthetic surfaces shared by the integration tests.

#![allow(dead_code)]

use cheeger_core::formulas::length_upper_bound;
use cheeger_core::{surface_area, Geodesic, Splitting, SurfaceDescription};
use proptest::prelude::*;
use proptest::sample::subsequence;

pub fn geo(id: &str, length: f64) -> Geodesic {
    Geodesic {
        id: id.into(),
        length,
    }
}

pub fn sp(curves: &[&str], chi_a: i64, chi_b: i64, clearance: f64) -> Splitting {
    Splitting {
        curves: curves.iter().map(|c| c.to_string()).collect(),
        chi_a,
        chi_b,
        clearance,
    }
}

/// Genus 2 cut by one separating curve of length 1.
pub fn genus_two_single_curve() -> SurfaceDescription {
    SurfaceDescription::new(2, 0, vec![geo("g1", 1.0)], vec![sp(&["g1"], -1, -1, 2.0)]).unwrap()
}

pub fn thrice_punctured_sphere() -> SurfaceDescription {
    SurfaceDescription::new(0, 3, vec![], vec![]).unwrap()
}

/// Genus 3 with a short separating curve that prunes the long ones, a
/// pair whose A side is the larger one, and a curve discarded by clearance.
pub fn genus_three_mixed() -> SurfaceDescription {
    SurfaceDescription::new(
        3,
        0,
        vec![
            geo("s1", 1.0),
            geo("s2", 2.5),
            geo("n1", 0.6),
            geo("n2", 0.7),
            geo("n3", 3.0),
        ],
        vec![
            sp(&["s2"], -2, -2, 1.0),
            sp(&["n1", "n2"], -3, -1, 0.8),
            sp(&["s1"], -1, -3, 1.5),
            sp(&["n3"], -1, -3, 0.1),
        ],
    )
    .unwrap()
}

/// Once-holed torus with three cusps: two separating candidates below the
/// horocusp ratio.
pub fn cusped_torus() -> SurfaceDescription {
    SurfaceDescription::new(
        1,
        3,
        vec![geo("c1", 2.0), geo("c2", 5.0)],
        vec![sp(&["c1"], -1, -2, 1.0), sp(&["c2"], -1, -2, 2.0)],
    )
    .unwrap()
}

/// A long curve whose family minimum is capped at equal areas.
pub fn equal_area_kink() -> SurfaceDescription {
    SurfaceDescription::new(
        3,
        0,
        vec![geo("long", 15.0)],
        vec![sp(&["long"], -1, -3, 10.0)],
    )
    .unwrap()
}

/// The short curve's critical offset lies past half its clearance.
pub fn clearance_discard() -> SurfaceDescription {
    SurfaceDescription::new(
        3,
        0,
        vec![geo("short", 1.0), geo("mid", 3.0)],
        vec![sp(&["short"], -1, -3, 0.2), sp(&["mid"], -2, -2, 1.0)],
    )
    .unwrap()
}

/// Five-punctured sphere with two curves of equal length: a tie.
pub fn tied_sphere() -> SurfaceDescription {
    SurfaceDescription::new(
        0,
        5,
        vec![geo("a", 0.5), geo("b", 0.5), geo("c", 4.0)],
        vec![
            sp(&["a"], -1, -2, 1.0),
            sp(&["b"], -2, -1, 1.0),
            sp(&["c"], -1, -2, 1.0),
        ],
    )
    .unwrap()
}

pub fn fixtures() -> Vec<(&'static str, SurfaceDescription)> {
    vec![
        ("genus_two_single_curve", genus_two_single_curve()),
        ("thrice_punctured_sphere", thrice_punctured_sphere()),
        ("genus_three_mixed", genus_three_mixed()),
        ("cusped_torus", cusped_torus()),
        ("equal_area_kink", equal_area_kink()),
        ("clearance_discard", clearance_discard()),
        ("tied_sphere", tied_sphere()),
    ]
}

/// Valid surface descriptions with χ ≤ -2 and up to six splittings over
/// random subsets of up to six geodesics.
pub fn arb_surface() -> impl Strategy<Value = SurfaceDescription> {
    (0u32..4, 0u32..4)
        .prop_filter("needs chi <= -2", |(g, n)| 2 * g + n >= 4)
        .prop_flat_map(|(genus, cusps)| {
            let chi = 2 - 2 * i64::from(genus) - i64::from(cusps);
            (
                Just((genus, cusps)),
                prop::collection::vec(0.05f64..20.0, 1..7),
            )
                .prop_flat_map(move |(gc, lengths)| {
                    let k = lengths.len();
                    let splitting = (
                        subsequence((0..k).collect::<Vec<_>>(), 1..=k.min(3)),
                        (chi + 1)..=-1,
                        0.05f64..5.0,
                    );
                    (
                        Just(gc),
                        Just(lengths),
                        prop::collection::vec(splitting, 0..7),
                    )
                })
                .prop_map(move |((genus, cusps), lengths, splits)| {
                    let geodesics = lengths
                        .iter()
                        .enumerate()
                        .map(|(i, &l)| geo(&format!("g{i}"), l))
                        .collect();
                    let splittings = splits
                        .into_iter()
                        .map(|(idx, chi_a, clearance)| Splitting {
                            curves: idx.iter().map(|i| format!("g{i}")).collect(),
                            chi_a,
                            chi_b: chi - chi_a,
                            clearance,
                        })
                        .collect();
                    SurfaceDescription::new(genus, cusps, geodesics, splittings).unwrap()
                })
        })
}

/// Whether a Cheeger constant `h` is compatible with the length bound: on a
/// real surface some Cheeger region has boundary at most `length_upper_bound`,
/// so h·Area/2 cannot exceed it. Random descriptions can violate this (for
/// example a single splitting longer than the bound) and describe no surface.
pub fn realizable(s: &SurfaceDescription, h: f64) -> bool {
    h * surface_area(s).half() <= length_upper_bound(s) * (1.0 + 1e-12)
}
