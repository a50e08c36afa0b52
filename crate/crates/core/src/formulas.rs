//! Closed-form isoperimetric ratios for the region types that can realize
//! the Cheeger constant of a hyperbolic surface (curvature -1): metric
//! disks, collars around a geodesic and their complements, equidistant
//! regions bounded by curves parallel to a separating multicurve, and
//! horocusp neighborhoods.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{surface_area, SurfaceDescription};

/// Boundary length and area of a region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionStats {
    pub boundary_length: f64,
    pub area: f64,
}

impl RegionStats {
    pub fn new(boundary_length: f64, area: f64) -> Result<Self> {
        if !(area > 0.0) || !(boundary_length >= 0.0) {
            return Err(Error::domain(
                "RegionStats::new",
                format!("need area > 0 and length >= 0, got ({boundary_length}, {area})"),
            ));
        }
        Ok(RegionStats {
            boundary_length,
            area,
        })
    }

    /// Isoperimetric ratio ℓ(∂A) / Area(A).
    pub fn ratio(&self) -> f64 {
        self.boundary_length / self.area
    }
}

/// The curve at normal distance `s` from a closed geodesic of length `l0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NeighborCurveData {
    pub l0: f64,
    pub s: f64,
    /// Length of the equidistant curve.
    pub length: f64,
    /// Area swept between the geodesic and the curve.
    pub area: f64,
    /// Geodesic curvature of the curve.
    pub kappa: f64,
}

fn check_positive(op: &'static str, name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("{name} must be positive and finite, got {x}"),
        ))
    }
}

fn check_negative_chi(op: &'static str, chi: i64) -> Result<()> {
    if chi < 0 {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("Euler characteristic must be negative, got {chi}"),
        ))
    }
}

/// Ratio of the metric disk of radius `r`: sinh r / (cosh r - 1).
///
/// Strictly decreasing, tends to 1 as r grows.
pub fn disk_ratio(r: f64) -> Result<f64> {
    check_positive("disk_ratio", "radius", r)?;
    // (e^r - e^-r)/(e^r + e^-r - 2) = coth(r/2); the half-angle form avoids
    // cancellation for small r.
    Ok(1.0 / (r / 2.0).tanh())
}

/// The metric disk of the given area.
pub fn disk_stats_for_area(area: f64) -> Result<RegionStats> {
    check_positive("disk_stats_for_area", "area", area)?;
    // cosh r = 1 + A/2π, so 2π sinh r = sqrt(A² + 4πA).
    let boundary_length = (area * (area + 4.0 * PI)).sqrt();
    RegionStats::new(boundary_length, area)
}

/// Radius of the metric disk of the given area.
pub fn disk_radius_for_area(area: f64) -> Result<f64> {
    check_positive("disk_radius_for_area", "area", area)?;
    Ok((1.0 + area / (2.0 * PI)).acosh())
}

/// Isoperimetric constant of a horocusp neighborhood.
pub fn horocusp_ratio() -> f64 {
    1.0
}

pub fn neighbor_curve(l0: f64, s: f64) -> Result<NeighborCurveData> {
    check_positive("neighbor_curve", "L0", l0)?;
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "neighbor_curve",
            format!("offset must be >= 0, got {s}"),
        ));
    }
    Ok(NeighborCurveData {
        l0,
        s,
        length: l0 * s.cosh(),
        area: l0 * s.sinh(),
        kappa: s.tanh(),
    })
}

/// Collar of total area `area` around a geodesic of length `l0`:
/// sqrt(1 + (2 L0 / A)²).
pub fn annulus_ratio(l0: f64, area: f64) -> Result<f64> {
    check_positive("annulus_ratio", "L0", l0)?;
    check_positive("annulus_ratio", "area", area)?;
    Ok((2.0 * l0 / area).hypot(1.0))
}

/// Half-width of the collar of total area `area` around a geodesic of
/// length `l0`.
pub fn annulus_half_width(l0: f64, area: f64) -> Result<f64> {
    check_positive("annulus_half_width", "L0", l0)?;
    check_positive("annulus_half_width", "area", area)?;
    Ok((area / (2.0 * l0)).asinh())
}

/// Complement of a collar in a surface of area `total_area`, where `area` is
/// the area of the complement: sqrt((Total/A - 1)² + (2 L0 / A)²).
///
/// The collar has area Total - A and boundary length sqrt(4L0² + (Total - A)²),
/// so at A = Total/2 this equals [`annulus_ratio`].
pub fn annulus_complement_ratio(l0: f64, area: f64, total_area: f64) -> Result<f64> {
    check_positive("annulus_complement_ratio", "L0", l0)?;
    check_positive("annulus_complement_ratio", "area", area)?;
    if !(area < total_area) {
        return Err(Error::domain(
            "annulus_complement_ratio",
            format!("complement area {area} must be below the total area {total_area}"),
        ));
    }
    Ok((total_area / area - 1.0).hypot(2.0 * l0 / area))
}

/// Area of the region A_s obtained by pushing the boundary of a side with
/// Euler characteristic `chi` (and geodesic boundary of length `l`) a
/// distance `s` outward.
pub fn equidistant_area(l: f64, chi: i64, s: f64) -> f64 {
    -2.0 * PI * chi as f64 + l * s.sinh()
}

/// h*(A_s) = ℓ cosh s / (-2πχ(A) + ℓ sinh s).
pub fn equidistant_ratio_a(boundary_length: f64, chi_a: i64, s: f64) -> Result<f64> {
    check_positive("equidistant_ratio_A", "boundary length", boundary_length)?;
    check_negative_chi("equidistant_ratio_A", chi_a)?;
    if !(s >= 0.0) {
        return Err(Error::domain(
            "equidistant_ratio_A",
            format!("offset must be >= 0, got {s}"),
        ));
    }
    Ok(boundary_length * s.cosh() / equidistant_area(boundary_length, chi_a, s))
}

/// h*(B_s) = ℓ cosh s / (-2πχ(B) - ℓ sinh s), for the side that shrinks.
pub fn equidistant_ratio_b(boundary_length: f64, chi_b: i64, s: f64) -> Result<f64> {
    check_positive("equidistant_ratio_B", "boundary length", boundary_length)?;
    check_negative_chi("equidistant_ratio_B", chi_b)?;
    if !(s >= 0.0) {
        return Err(Error::domain(
            "equidistant_ratio_B",
            format!("offset must be >= 0, got {s}"),
        ));
    }
    let area = -2.0 * PI * chi_b as f64 - boundary_length * s.sinh();
    if !(area > 0.0) {
        return Err(Error::domain(
            "equidistant_ratio_B",
            format!("B_s has nonpositive area {area} at s = {s}"),
        ));
    }
    Ok(boundary_length * s.cosh() / area)
}

/// The offset s* where h*(A_s) has its only critical point:
/// sinh s* = ℓ / (-2πχ(A)).
pub fn critical_offset(boundary_length: f64, chi_a: i64) -> Result<f64> {
    check_positive("critical_offset", "boundary length", boundary_length)?;
    check_negative_chi("critical_offset", chi_a)?;
    Ok((boundary_length / (-2.0 * PI * chi_a as f64)).asinh())
}

/// Minimum of h*(A_s) over s ≥ 0, reached at [`critical_offset`]:
/// ℓ / sqrt(ℓ² + 4π²χ²).
pub fn equidistant_family_minimum(boundary_length: f64, chi_a: i64) -> Result<f64> {
    check_positive(
        "equidistant_family_minimum",
        "boundary length",
        boundary_length,
    )?;
    check_negative_chi("equidistant_family_minimum", chi_a)?;
    Ok(boundary_length / boundary_length.hypot(2.0 * PI * chi_a as f64))
}

/// Upper bound on ℓ(∂A) for a Cheeger minimizer A.
///
/// Compact surfaces: sqrt(Area²/4 + 2π Area). With cusps the horocusp ratio
/// caps h at 1, giving Area/2.
pub fn length_upper_bound(s: &SurfaceDescription) -> f64 {
    let area = surface_area(s).value();
    if s.is_compact() {
        (area * area / 4.0 + 2.0 * PI * area).sqrt()
    } else {
        area / 2.0
    }
}

/// Stats of the disjoint union of two regions.
pub fn union_ratio(r1: RegionStats, r2: RegionStats) -> RegionStats {
    RegionStats {
        boundary_length: r1.boundary_length + r2.boundary_length,
        area: r1.area + r2.area,
    }
}

/// Cheeger constant of a flat torus or Klein bottle built from an a×b
/// rectangle, a ≤ b.
pub fn flat_torus_cheeger(a: f64, b: f64) -> Result<f64> {
    check_positive("flat_torus_cheeger", "a", a)?;
    check_positive("flat_torus_cheeger", "b", b)?;
    if a > b {
        return Err(Error::domain(
            "flat_torus_cheeger",
            format!("side lengths must satisfy a <= b, got a = {a}, b = {b}"),
        ));
    }
    Ok(4.0 / b)
}

/// Genus bound 27C³ + 1 for surfaces with Cheeger constant controlled by C.
pub fn genus_bound(c: f64) -> Result<f64> {
    if !(c >= 0.0) || !c.is_finite() {
        return Err(Error::domain(
            "genus_bound",
            format!("C must be >= 0, got {c}"),
        ));
    }
    Ok(27.0 * c.powi(3) + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn disk_ratio_examples() {
        assert!(close(disk_ratio(3f64.ln()).unwrap(), 2.0, 1e-12));
        let far = disk_ratio(20.0).unwrap();
        assert!(far > 1.0 && far < 1.0 + 1e-8);
        // (e - 1/e) / (e + 1/e - 2) evaluated directly
        let e = std::f64::consts::E;
        let direct = (e - 1.0 / e) / (e + 1.0 / e - 2.0);
        assert!(close(disk_ratio(1.0).unwrap(), direct, 1e-12));
        assert!(close(direct, 2.163953, 1e-6));
        assert!(disk_ratio(0.0).is_err());
        assert!(disk_ratio(-1.0).is_err());
    }

    #[test]
    fn disk_stats_examples() {
        let st = disk_stats_for_area(2.0 * PI).unwrap();
        assert!(close(st.boundary_length, 2.0 * PI * 3f64.sqrt(), 1e-12));
        assert!(close(st.ratio(), 3f64.sqrt(), 1e-12));

        let a = 1e-6;
        let st = disk_stats_for_area(a).unwrap();
        let want = a * a + 4.0 * PI * a;
        assert!(((st.boundary_length.powi(2) - want) / want).abs() < 1e-12);

        let st = disk_stats_for_area(4.0 * PI).unwrap();
        assert!(close(st.ratio(), 2f64.sqrt(), 1e-12));
        let r = disk_radius_for_area(4.0 * PI).unwrap();
        assert!(close(r.cosh(), 3.0, 1e-12));
        assert!(close(disk_ratio(r).unwrap(), st.ratio(), 1e-12));

        assert!(disk_stats_for_area(0.0).is_err());
    }

    #[test]
    fn horocusp_is_below_disks_and_collars() {
        assert_eq!(horocusp_ratio(), 1.0);
        assert!(horocusp_ratio() < disk_ratio(5.0).unwrap());
        assert!(horocusp_ratio() < annulus_ratio(1.0, 100.0).unwrap());
    }

    #[test]
    fn neighbor_curve_examples() {
        let c = neighbor_curve(1.0, 0.0).unwrap();
        assert_eq!((c.length, c.area, c.kappa), (1.0, 0.0, 0.0));
        let c = neighbor_curve(1.0, 1.0).unwrap();
        assert!(close(c.length, 1.543081, 1e-6));
        assert!(close(c.area, 1.175201, 1e-6));
        assert!(close(c.kappa, 0.761594, 1e-6));
        assert!(neighbor_curve(0.0, 1.0).is_err());
        assert!(neighbor_curve(1.0, -0.1).is_err());
    }

    #[test]
    fn annulus_examples() {
        assert!(close(
            annulus_ratio(1.0, 2.0 * PI).unwrap(),
            (1.0 + 1.0 / (PI * PI)).sqrt(),
            1e-12
        ));
        assert!(close(annulus_ratio(1.0, 2.0 * PI).unwrap(), 1.049439, 1e-6));
        let r = annulus_ratio(1.0, 1e6).unwrap();
        assert!(r > 1.0 && r < 1.0 + 1e-11);
        assert!(close(annulus_ratio(2.0, 4.0).unwrap(), 2f64.sqrt(), 1e-12));
        assert!(annulus_ratio(0.0, 1.0).is_err());
        assert!(annulus_ratio(1.0, -1.0).is_err());
    }

    #[test]
    fn annulus_complement_examples() {
        let total = 4.0 * PI;
        assert!(close(
            annulus_complement_ratio(1.0, 2.0 * PI, total).unwrap(),
            annulus_ratio(1.0, 2.0 * PI).unwrap(),
            1e-12
        ));
        // independent route: collar of area 3π around L0 = 1 via neighbor_curve
        let half_width = (3.0 * PI / 2.0).asinh();
        let collar = neighbor_curve(1.0, half_width).unwrap();
        let v = annulus_complement_ratio(1.0, PI, total).unwrap();
        assert!(close(v, 2.0 * collar.length / PI, 1e-12));
        assert!(close(v, (9.0 + (2.0 / PI).powi(2)).sqrt(), 1e-12));
        assert!(annulus_complement_ratio(1.0, 2.0 * PI, total).unwrap() < v);
        assert!(annulus_complement_ratio(1.0, total, total).is_err());
    }

    #[test]
    fn equidistant_a_examples() {
        assert!(close(
            equidistant_ratio_a(1.0, -1, 0.0).unwrap(),
            1.0 / (2.0 * PI),
            1e-15
        ));
        let s = (1.0 / (2.0 * PI)).asinh();
        let v = equidistant_ratio_a(1.0, -1, s).unwrap();
        assert!(close(
            v,
            (1.0 / (2.0 * PI)) / (1.0 + 1.0 / (4.0 * PI * PI)).sqrt(),
            1e-15
        ));
        assert!(close(v, 0.157177, 1e-6));
        assert!(close(
            v,
            equidistant_family_minimum(1.0, -1).unwrap(),
            1e-15
        ));
        let tiny = equidistant_ratio_a(1e-9, -1, 0.0).unwrap();
        assert!(close(tiny, 1e-9 / (2.0 * PI), 1e-22));
        assert!(equidistant_ratio_a(1.0, 0, 0.0).is_err());
    }

    #[test]
    fn equidistant_b_examples() {
        assert!(close(
            equidistant_ratio_b(1.0, -1, 0.0).unwrap(),
            1.0 / (2.0 * PI),
            1e-15
        ));
        let v = equidistant_ratio_b(1.0, -1, 1.0).unwrap();
        assert!(close(v, 1f64.cosh() / (2.0 * PI - 1f64.sinh()), 1e-15));
        assert!(close(v, 0.302091, 1e-6));
        assert!(equidistant_ratio_b(1.0, -1, (2.0 * PI).asinh()).is_err());
    }

    #[test]
    fn critical_offset_examples() {
        assert!(close(
            critical_offset(2.0 * PI, -1).unwrap(),
            1f64.asinh(),
            1e-15
        ));
        assert!(close(
            critical_offset(2.0 * PI, -1).unwrap(),
            0.881374,
            1e-6
        ));
        assert!(critical_offset(1e-12, -1).unwrap() < 1e-12);
        assert!(critical_offset(1.0, 1).is_err());

        // brute-force grid argmin
        let (mut best_s, mut best) = (0.0, f64::INFINITY);
        for k in 0..=2000 {
            let s = k as f64 * 1e-3;
            let v = 1.0 * s.cosh() / (2.0 * PI + s.sinh());
            if v < best {
                best = v;
                best_s = s;
            }
        }
        assert!((best_s - critical_offset(1.0, -1).unwrap()).abs() <= 1e-3);
    }

    #[test]
    fn length_bound_examples() {
        let mk = |g, n| SurfaceDescription::new(g, n, vec![], vec![]).unwrap();
        assert!(close(
            length_upper_bound(&mk(2, 0)),
            2.0 * PI * 3f64.sqrt(),
            1e-12
        ));
        assert!(close(length_upper_bound(&mk(2, 0)), 10.882796, 1e-6));
        assert!(close(length_upper_bound(&mk(0, 3)), PI, 1e-12));
        assert!(close(length_upper_bound(&mk(1, 1)), PI, 1e-12));
    }

    #[test]
    fn union_examples() {
        let st = |l, a| RegionStats::new(l, a).unwrap();
        assert_eq!(union_ratio(st(1.0, 1.0), st(1.0, 1.0)).ratio(), 1.0);
        assert_eq!(union_ratio(st(1.0, 2.0), st(3.0, 2.0)).ratio(), 1.0);
        assert!(close(
            union_ratio(st(0.0, 5.0), st(2.0, 5.0)).ratio(),
            0.2,
            1e-15
        ));
        assert!(RegionStats::new(1.0, 0.0).is_err());
    }

    #[test]
    fn torus_and_genus_examples() {
        assert_eq!(flat_torus_cheeger(1.0, 1.0).unwrap(), 4.0);
        assert_eq!(flat_torus_cheeger(1.0, 2.0).unwrap(), 2.0);
        assert!(flat_torus_cheeger(2.0, 1.0).is_err());
        assert_eq!(genus_bound(1.0).unwrap(), 28.0);
        assert_eq!(genus_bound(0.0).unwrap(), 1.0);
        assert_eq!(genus_bound(2.0).unwrap(), 217.0);
        assert!(genus_bound(-1.0).is_err());
    }

    proptest! {
        #[test]
        fn neighbor_curve_pythagoras(l0 in 1e-3f64..50.0, s in 0.0f64..8.0) {
            let c = neighbor_curve(l0, s).unwrap();
            let lhs = c.length * c.length - c.area * c.area;
            prop_assert!((lhs - l0 * l0).abs() <= 1e-12 * c.length * c.length);
        }

        #[test]
        fn disk_ratio_decreasing(r in 1e-3f64..30.0, dr in 1e-3f64..5.0) {
            let a = disk_ratio(r).unwrap();
            let b = disk_ratio(r + dr).unwrap();
            prop_assert!(b <= a);
            prop_assert!(b > 1.0 || (r + dr) > 18.0);
        }

        #[test]
        fn ratio_b_increasing(l in 0.01f64..10.0, chi in -5i64..=-1, s in 0.0f64..3.0, ds in 1e-4f64..0.5) {
            if let (Ok(a), Ok(b)) = (equidistant_ratio_b(l, chi, s), equidistant_ratio_b(l, chi, s + ds)) {
                prop_assert!(b > a);
            }
        }

        #[test]
        fn collar_matches_two_sided_family(l0 in 0.01f64..20.0, area in 0.01f64..100.0) {
            let s = annulus_half_width(l0, area).unwrap();
            let family = 2.0 * l0 * s.cosh() / (2.0 * l0 * s.sinh());
            prop_assert!((annulus_ratio(l0, area).unwrap() - family).abs() <= 1e-10 * family);
        }

        #[test]
        fn union_never_below_min(l1 in 0.0f64..10.0, a1 in 0.01f64..10.0, l2 in 0.0f64..10.0, a2 in 0.01f64..10.0) {
            let r1 = RegionStats::new(l1, a1).unwrap();
            let r2 = RegionStats::new(l2, a2).unwrap();
            let u = union_ratio(r1, r2).ratio();
            let lo = r1.ratio().min(r2.ratio());
            prop_assert!(u >= lo * (1.0 - 1e-12));
            if (r1.ratio() - r2.ratio()).abs() > 1e-9 * lo.max(1e-300) {
                prop_assert!(u > lo);
            }
        }

        #[test]
        fn horocusp_strictly_below(r in 1e-3f64..40.0, l0 in 1e-3f64..50.0, area in 1e-3f64..1e6) {
            prop_assert!(horocusp_ratio() < disk_ratio(r).unwrap() || r > 35.0);
            prop_assert!(horocusp_ratio() < annulus_ratio(l0, area).unwrap() || 2.0 * l0 / area < 1e-7);
        }
    }
}
