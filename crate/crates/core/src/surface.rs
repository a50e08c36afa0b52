//! Surface descriptions: genus, cusps, the short simple closed geodesics and
//! the separating collections of them, read from and written to JSON.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple closed geodesic and its hyperbolic length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    pub id: String,
    pub length: f64,
}

/// A collection of geodesics cutting the surface into sides A and B.
///
/// `clearance` is the least normal distance at which the equidistant
/// curves stop being embedded copies of the splitting curves. Equidistant
/// offsets move from side A into side B.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Splitting {
    pub curves: Vec<String>,
    #[serde(rename = "chi_A")]
    pub chi_a: i64,
    #[serde(rename = "chi_B")]
    pub chi_b: i64,
    pub clearance: f64,
}

impl Splitting {
    /// Curve ids in sorted order.
    pub fn curve_set(&self) -> BTreeSet<&str> {
        self.curves.iter().map(String::as_str).collect()
    }
}

/// Total area of a finite-area hyperbolic surface.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct SurfaceArea(pub f64);

impl SurfaceArea {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn half(self) -> f64 {
        self.0 / 2.0
    }
}

/// A validated surface description.
///
/// Construct through [`SurfaceDescription::new`] or [`parse_surface`]; both
/// check every invariant, so downstream code may assume them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDescription {
    pub genus: u32,
    pub cusps: u32,
    #[serde(default)]
    pub geodesics: Vec<Geodesic>,
    #[serde(default)]
    pub splittings: Vec<Splitting>,
    /// Whether a metric disk of half the surface area embeds. The solver
    /// cannot decide this from lengths alone.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub disk_embeddable: bool,
}

impl SurfaceDescription {
    pub fn new(
        genus: u32,
        cusps: u32,
        geodesics: Vec<Geodesic>,
        splittings: Vec<Splitting>,
    ) -> Result<Self> {
        let s = SurfaceDescription {
            genus,
            cusps,
            geodesics,
            splittings,
            disk_embeddable: false,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn with_disk_embeddable(mut self, flag: bool) -> Self {
        self.disk_embeddable = flag;
        self
    }

    /// 2 - 2g - n.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.cusps)
    }

    pub fn is_compact(&self) -> bool {
        self.cusps == 0
    }

    pub fn geodesic(&self, id: &str) -> Option<&Geodesic> {
        self.geodesics.iter().find(|g| g.id == id)
    }

    /// Sum of the lengths of the splitting's curves, taken in id order so
    /// the result does not depend on how the input lists them.
    pub fn splitting_length(&self, sp: &Splitting) -> Result<f64> {
        sp.curve_set()
            .into_iter()
            .map(|id| {
                self.geodesic(id).map(|g| g.length).ok_or_else(|| {
                    Error::validation("known_curves", format!("unknown geodesic id {id:?}"))
                })
            })
            .sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.euler_characteristic() >= 0 {
            return Err(Error::validation(
                "hyperbolicity",
                format!(
                    "2g - 2 + n must be positive (genus {}, cusps {})",
                    self.genus, self.cusps
                ),
            ));
        }

        let mut ids = HashMap::new();
        for (i, g) in self.geodesics.iter().enumerate() {
            if !(g.length > 0.0 && g.length.is_finite()) {
                return Err(Error::validation(
                    "positive_length",
                    format!("geodesic {:?} has length {}", g.id, g.length),
                ));
            }
            if let Some(j) = ids.insert(g.id.as_str(), i) {
                return Err(Error::validation(
                    "unique_ids",
                    format!("geodesic id {:?} appears at positions {j} and {i}", g.id),
                ));
            }
        }

        let chi = self.euler_characteristic();
        for (i, sp) in self.splittings.iter().enumerate() {
            if sp.curves.is_empty() {
                return Err(Error::validation(
                    "nonempty_splitting",
                    format!("splitting {i} has no curves"),
                ));
            }
            if sp.curve_set().len() != sp.curves.len() {
                return Err(Error::validation(
                    "distinct_curves",
                    format!("splitting {i} repeats a curve"),
                ));
            }
            if let Some(id) = sp.curves.iter().find(|id| !ids.contains_key(id.as_str())) {
                return Err(Error::validation(
                    "known_curves",
                    format!("splitting {i} names unknown geodesic {id:?}"),
                ));
            }
            if sp.chi_a + sp.chi_b != chi {
                return Err(Error::validation(
                    "euler_additivity",
                    format!(
                        "splitting {i}: chi_A + chi_B = {} but the surface has chi = {chi}",
                        sp.chi_a + sp.chi_b
                    ),
                ));
            }
            if sp.chi_a >= 0 || sp.chi_b >= 0 {
                return Err(Error::validation(
                    "hyperbolic_sides",
                    format!(
                        "splitting {i}: both sides need negative Euler characteristic (got {}, {})",
                        sp.chi_a, sp.chi_b
                    ),
                ));
            }
            if !(sp.clearance > 0.0) {
                return Err(Error::validation(
                    "positive_clearance",
                    format!("splitting {i} has clearance {}", sp.clearance),
                ));
            }
        }
        Ok(())
    }

    /// Serializes to the JSON file format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("surface descriptions always serialize")
    }
}

/// Parses and validates a JSON surface description.
pub fn parse_surface(document: &str) -> Result<SurfaceDescription> {
    let s: SurfaceDescription = serde_json::from_str(document).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    s.validate()?;
    Ok(s)
}

/// Gauss-Bonnet: Area(S) = 2π(2g - 2 + n).
pub fn surface_area(s: &SurfaceDescription) -> SurfaceArea {
    SurfaceArea(-2.0 * PI * s.euler_characteristic() as f64)
}

/// Splittings whose total curve length is at most `budget`, ordered by
/// ascending length and then by sorted curve-id set.
pub fn admissible_collections(s: &SurfaceDescription, budget: f64) -> Vec<(Splitting, f64)> {
    let mut out: Vec<(Splitting, f64)> = s
        .splittings
        .iter()
        .filter_map(|sp| {
            let len = s.splitting_length(sp).ok()?;
            (len <= budget).then(|| (sp.clone(), len))
        })
        .collect();
    out.sort_by(|(a, la), (b, lb)| {
        la.partial_cmp(lb)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.curve_set().cmp(&b.curve_set()))
    });
    out
}
