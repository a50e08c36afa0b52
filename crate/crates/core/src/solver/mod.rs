//! Cheeger constant of a finite-area hyperbolic surface.
//!
//! Every Cheeger minimizer is bounded by curves equidistant from a
//! separating collection of simple closed geodesics, or is a horocusp
//! neighborhood, a half-area collar, or a half-area disk. [`solve`] walks the
//! separating collections in order of total length, minimizes the
//! isoperimetric ratio over each one-parameter equidistant family in closed
//! form, and tightens the length budget after every improvement
//! (branch and bound). [`brute_force`] evaluates every family on a grid
//! without pruning and serves as an oracle.

mod brute;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{
    annulus_half_width, annulus_ratio, critical_offset, disk_radius_for_area, disk_stats_for_area,
    equidistant_ratio_a, horocusp_ratio, length_upper_bound,
};
use crate::surface::{admissible_collections, surface_area, Splitting, SurfaceDescription};
use crate::tolerance::Tolerance;

pub use brute::{brute_force, brute_force_with};

/// Relative tolerance under which two candidate ratios count as tied.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Tolerance for area comparisons (the equal-area shortcut).
    pub tolerance: Tolerance,
    /// Tolerance for declaring two ratios equal.
    pub tie_tolerance: Tolerance,
    /// Skip collections longer than the live budget.
    pub prune: bool,
    /// Compare against half-area collars and disks at the end.
    pub post_check: bool,
    /// Keep every per-splitting evaluation in the result.
    pub record_evaluations: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tolerance: Tolerance::default(),
            tie_tolerance: Tolerance::new(DEFAULT_TIE_TOL),
            prune: true,
            post_check: true,
            record_evaluations: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EvaluationReason {
    /// Both sides already have half the area; s = 0.
    EqualAreaShortcut,
    /// Minimum at the critical offset.
    InteriorMinimum,
    /// Minimum where the growing side reaches half the area.
    AreaCapped,
    /// The minimizing offset is past half the clearance.
    ClearanceDiscarded,
}

/// Result of minimizing the equidistant family of one splitting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateEvaluation {
    pub curves: Vec<String>,
    pub length: f64,
    pub s_opt: Option<f64>,
    pub ratio: Option<f64>,
    pub reason: EvaluationReason,
    /// The family was pushed from side B into side A because A started
    /// larger.
    pub swapped: bool,
}

impl CandidateEvaluation {
    pub fn is_discarded(&self) -> bool {
        self.reason == EvaluationReason::ClearanceDiscarded
    }
}

/// A minimizing region, named by its boundary curves and offset.
///
/// Equidistant regions carry their splitting curves and the offset into the
/// larger side. Half-area collars carry their core geodesic and half-width;
/// a half-area disk has no curves and carries its radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Minimizer {
    pub curves: Vec<String>,
    pub s: f64,
    #[serde(skip)]
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheegerResult {
    #[serde(rename = "H")]
    pub h: f64,
    pub minimizers: Vec<Minimizer>,
    pub horocusp_minimizer: bool,
    pub budget_final: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<Vec<CandidateEvaluation>>,
}

impl CheegerResult {
    /// Sorted curve sets of the minimizers.
    pub fn minimizer_sets(&self) -> Vec<Vec<String>> {
        let mut sets: Vec<Vec<String>> = self.minimizers.iter().map(|m| m.curves.clone()).collect();
        sets.sort();
        sets
    }
}

/// Starting (H, U): with cusps, the horocusp ratio 1 and Area/2; otherwise
/// +∞ and the compact length bound.
pub fn initialize(s: &SurfaceDescription) -> (f64, f64) {
    let h0 = if s.is_compact() {
        f64::INFINITY
    } else {
        horocusp_ratio()
    };
    (h0, length_upper_bound(s))
}

fn sorted_curves(sp: &Splitting) -> Vec<String> {
    let mut curves = sp.curves.clone();
    curves.sort();
    curves
}

/// Minimizes h*(A_s) over the equidistant family of one splitting, subject
/// to Area(A_s) ≤ Area(S)/2 and 2s < clearance.
pub fn evaluate_splitting(
    sp: &Splitting,
    boundary_length: f64,
    total_area: f64,
    tol: Tolerance,
) -> Result<CandidateEvaluation> {
    if !(boundary_length > 0.0) {
        return Err(Error::validation(
            "positive_length",
            format!(
                "splitting {:?} has total length {boundary_length}",
                sp.curves
            ),
        ));
    }
    let area_a0 = -2.0 * PI * sp.chi_a as f64;
    let area_b0 = -2.0 * PI * sp.chi_b as f64;
    if !(area_a0 > 0.0 && area_b0 > 0.0) {
        return Err(Error::validation(
            "hyperbolic_sides",
            format!("splitting {:?} has a side of nonpositive area", sp.curves),
        ));
    }
    let half = total_area / 2.0;
    let curves = sorted_curves(sp);

    if tol.eq(area_a0, half) {
        return Ok(CandidateEvaluation {
            curves,
            length: boundary_length,
            s_opt: Some(0.0),
            ratio: Some(boundary_length / half),
            reason: EvaluationReason::EqualAreaShortcut,
            swapped: false,
        });
    }

    // Grow the smaller side.
    let (chi, area0, swapped) = if area_a0 < half {
        (sp.chi_a, area_a0, false)
    } else {
        (sp.chi_b, area_b0, true)
    };

    let s_crit = critical_offset(boundary_length, chi)?;
    let s_eq = ((half - area0) / boundary_length).max(0.0).asinh();
    let (s_opt, reason) = if s_crit < s_eq {
        (s_crit, EvaluationReason::InteriorMinimum)
    } else {
        (s_eq, EvaluationReason::AreaCapped)
    };

    if s_opt >= sp.clearance / 2.0 {
        return Ok(CandidateEvaluation {
            curves,
            length: boundary_length,
            s_opt: None,
            ratio: None,
            reason: EvaluationReason::ClearanceDiscarded,
            swapped,
        });
    }

    let ratio = equidistant_ratio_a(boundary_length, chi, s_opt)?;
    Ok(CandidateEvaluation {
        curves,
        length: boundary_length,
        s_opt: Some(s_opt),
        ratio: Some(ratio),
        reason,
        swapped,
    })
}

/// Running best ratio and its minimizers.
#[derive(Debug)]
pub(crate) struct Incumbent {
    pub h: f64,
    pub minimizers: Vec<Minimizer>,
    tie: Tolerance,
}

impl Incumbent {
    pub fn new(h: f64, tie: Tolerance) -> Self {
        Incumbent {
            h,
            minimizers: Vec::new(),
            tie,
        }
    }

    /// Returns true when `m` strictly improves the incumbent.
    pub fn offer(&mut self, m: Minimizer) -> bool {
        if self.tie.lt(m.ratio, self.h) {
            self.h = m.ratio;
            self.minimizers = vec![m];
            true
        } else {
            if self.tie.eq(m.ratio, self.h) {
                self.minimizers.push(m);
            }
            false
        }
    }

    /// Only strict improvements are accepted.
    pub fn offer_strict(&mut self, m: Minimizer) {
        if self.tie.lt(m.ratio, self.h) {
            self.h = m.ratio;
            self.minimizers = vec![m];
        }
    }

    pub fn finish(mut self) -> (f64, Vec<Minimizer>) {
        if let Some(best) = self.minimizers.iter().map(|m| m.ratio).reduce(f64::min) {
            self.h = self.h.min(best);
        }
        let (h, tie) = (self.h, self.tie);
        self.minimizers.retain(|m| tie.eq(m.ratio, h));
        self.minimizers
            .sort_by(|a, b| a.curves.cmp(&b.curves).then(a.s.total_cmp(&b.s)));
        (self.h, self.minimizers)
    }
}

/// Half-area collars around every geodesic, and the half-area disk when the
/// description says one embeds.
pub(crate) fn post_check_candidates(s: &SurfaceDescription) -> Result<Vec<Minimizer>> {
    let half = surface_area(s).half();
    let mut out = Vec::with_capacity(s.geodesics.len() + 1);
    for g in &s.geodesics {
        out.push(Minimizer {
            curves: vec![g.id.clone()],
            s: annulus_half_width(g.length, half)?,
            ratio: annulus_ratio(g.length, half)?,
        });
    }
    let disk = disk_stats_for_area(half)?;
    if s.disk_embeddable {
        out.push(Minimizer {
            curves: Vec::new(),
            s: disk_radius_for_area(half)?,
            ratio: disk.ratio(),
        });
    }
    Ok(out)
}

pub(crate) fn assemble(
    s: &SurfaceDescription,
    incumbent: Incumbent,
    budget_final: f64,
    evaluations: Option<Vec<CandidateEvaluation>>,
    tie: Tolerance,
) -> Result<CheegerResult> {
    let (h, minimizers) = incumbent.finish();
    if !h.is_finite() {
        return Err(Error::NoCandidate(format!(
            "compact surface (genus {}) with {} splittings yielded no admissible region",
            s.genus,
            s.splittings.len()
        )));
    }
    Ok(CheegerResult {
        h,
        minimizers,
        horocusp_minimizer: !s.is_compact() && tie.eq(h, horocusp_ratio()),
        budget_final,
        evaluations,
    })
}

pub fn solve(s: &SurfaceDescription) -> Result<CheegerResult> {
    solve_with(s, &SolveOptions::default())
}

pub fn solve_with(s: &SurfaceDescription, opts: &SolveOptions) -> Result<CheegerResult> {
    s.validate()?;
    let total_area = surface_area(s).value();
    let (h0, u0) = initialize(s);
    let mut incumbent = Incumbent::new(h0, opts.tie_tolerance);
    let mut budget = u0;
    let mut evaluations = opts.record_evaluations.then(Vec::new);

    let candidates = if opts.prune {
        admissible_collections(s, u0 * (1.0 + opts.tie_tolerance.rel))
    } else {
        admissible_collections(s, f64::INFINITY)
    };
    for (sp, length) in candidates {
        // Ascending order: once one collection exceeds the budget, all do.
        if opts.prune && length > budget * (1.0 + opts.tie_tolerance.rel) {
            break;
        }
        let eval = evaluate_splitting(&sp, length, total_area, opts.tolerance)?;
        if let (Some(ratio), Some(s_opt)) = (eval.ratio, eval.s_opt) {
            let improved = incumbent.offer(Minimizer {
                curves: eval.curves.clone(),
                s: s_opt,
                ratio,
            });
            if improved {
                budget = budget.min(incumbent.h * total_area / 2.0);
            }
        }
        if let Some(list) = evaluations.as_mut() {
            list.push(eval);
        }
    }

    if opts.post_check {
        for m in post_check_candidates(s)? {
            incumbent.offer_strict(m);
        }
    }
    assemble(s, incumbent, budget, evaluations, opts.tie_tolerance)
}
