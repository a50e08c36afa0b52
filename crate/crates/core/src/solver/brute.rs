//! Grid-search oracle for [`super::solve`].
//!
//! Each splitting's family is sampled on a signed offset grid: positive s
//! pushes the curves into B, negative s into A. At every offset the Cheeger
//! candidate is whichever side is smaller, so the sampled ratio is
//! ℓ cosh s / min(Area(A_s), Area(B_s)). The best grid cell is refined by
//! golden-section search. No closed-form critical point is used and no
//! collection is pruned.

use std::f64::consts::PI;

use super::{assemble, post_check_candidates, Incumbent, Minimizer, SolveOptions};
use crate::error::{Error, Result};
use crate::surface::{surface_area, SurfaceDescription};
use crate::CheegerResult;

/// Brute-force Cheeger constant with default options.
pub fn brute_force(s: &SurfaceDescription, s_steps: usize) -> Result<CheegerResult> {
    brute_force_with(s, s_steps, &SolveOptions::default())
}

pub fn brute_force_with(
    s: &SurfaceDescription,
    s_steps: usize,
    opts: &SolveOptions,
) -> Result<CheegerResult> {
    if s_steps < 100 {
        return Err(Error::domain(
            "brute_force",
            format!("need at least 100 grid steps, got {s_steps}"),
        ));
    }
    s.validate()?;
    let total = surface_area(s).value();
    let h0 = if s.is_compact() { f64::INFINITY } else { 1.0 };
    let mut incumbent = Incumbent::new(h0, opts.tie_tolerance);

    for sp in &s.splittings {
        let length = s.splitting_length(sp)?;
        let area_a0 = -2.0 * PI * sp.chi_a as f64;
        if let Some((ratio, offset)) = grid_minimum(length, area_a0, total, sp.clearance, s_steps) {
            let mut curves = sp.curves.clone();
            curves.sort();
            incumbent.offer(Minimizer {
                curves,
                s: offset.abs(),
                ratio,
            });
        }
    }

    if opts.post_check {
        for m in post_check_candidates(s)? {
            incumbent.offer_strict(m);
        }
    }
    let budget = if incumbent.h.is_finite() {
        incumbent.h * total / 2.0
    } else {
        f64::INFINITY
    };
    let budget = budget.min(crate::formulas::length_upper_bound(s));
    assemble(s, incumbent, budget, None, opts.tie_tolerance)
}

/// Smallest sampled ratio and its offset, or `None` when the infimum sits at
/// the clearance limit (the family keeps improving until it stops being
/// embedded).
fn grid_minimum(
    length: f64,
    area_a0: f64,
    total: f64,
    clearance: f64,
    s_steps: usize,
) -> Option<(f64, f64)> {
    let limit = clearance / 2.0;
    let step = clearance / s_steps as f64;
    let ratio = |s: f64| {
        let area_a = area_a0 + length * s.sinh();
        let smaller = area_a.min(total - area_a);
        if smaller > 0.0 {
            length * s.cosh() / smaller
        } else {
            f64::INFINITY
        }
    };

    // Grid points k·step with |k·step| < limit.
    let k_max = ((limit / step).ceil() as i64 - 1).max(0);
    let (mut best_k, mut best) = (0_i64, f64::INFINITY);
    for k in -k_max..=k_max {
        let v = ratio(k as f64 * step);
        if v < best {
            best = v;
            best_k = k;
        }
    }
    if !best.is_finite() {
        return None;
    }

    let lo = if best_k == -k_max {
        -limit
    } else {
        (best_k - 1) as f64 * step
    };
    let hi = if best_k == k_max {
        limit
    } else {
        (best_k + 1) as f64 * step
    };
    let (s_min, v_min) = golden_section(ratio, lo, hi);
    if limit - s_min.abs() <= 1e-7 * limit.max(1.0) {
        return None;
    }
    Some((
        v_min.min(best),
        if v_min <= best {
            s_min
        } else {
            best_k as f64 * step
        },
    ))
}

fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x);
    [(c, fc), (d, fd), (x, fx)]
        .into_iter()
        .min_by(|p, q| p.1.total_cmp(&q.1))
        .expect("three points")
}
