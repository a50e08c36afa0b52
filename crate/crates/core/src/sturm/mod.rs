//! The model eigenvalue problem ω(h) that bounds λ₁ of a hyperbolic surface
//! from above in terms of its Cheeger constant h.
//!
//! ω(h) is the Sturm-Liouville problem
//!
//! ```text
//!     -(J u')' / J = λ u  on (0, T),   u(0) = 0,   u'(T) = 0,
//!     J(τ) = cosh τ + h sinh τ,        ∫₀ᵀ J = 1/h.
//! ```
//!
//! The first eigenvalue is found by shooting: integrate backward from `T`
//! with `u(T) = 1`, `u'(T) = 0` and root-find on `u(0)` as a function of λ.
//! [`fd_oracle`] provides an independent finite-difference check.

mod fd;
pub mod ode;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{brent, brent_with_values};

pub use fd::fd_oracle;
use ode::{integrate, OdeOptions};

/// Kim-Sarnak lower bound on λ₁ of the congruence surfaces.
pub const KIM_SARNAK_LAMBDA: f64 = 975.0 / 4096.0;
/// The eigenvalue Selberg's conjecture asks for.
pub const SELBERG_LAMBDA: f64 = 0.25;
/// Brooks-Zuk upper bound on h(S_k) for large k.
pub const BROOKS_ZUK_CEILING: f64 = 0.4402;

/// J(τ) = cosh τ + h sinh τ.
pub fn weight_j(h: f64, tau: f64) -> f64 {
    tau.cosh() + h * tau.sinh()
}

/// J'(τ) = sinh τ + h cosh τ.
pub fn weight_j_prime(h: f64, tau: f64) -> f64 {
    tau.sinh() + h * tau.cosh()
}

/// ∫₀ᵀ J = sinh T + h (cosh T - 1).
pub fn weight_integral(h: f64, t: f64) -> f64 {
    let half = (t / 2.0).sinh();
    t.sinh() + 2.0 * h * half * half
}

fn check_h(op: &'static str, h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("h must be positive and finite, got {h}"),
        ))
    }
}

/// ω(h) with its right endpoint resolved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlProblem {
    pub h: f64,
    #[serde(rename = "T")]
    pub t: f64,
}

impl SlProblem {
    pub fn weight(&self, tau: f64) -> f64 {
        weight_j(self.h, tau)
    }

    /// `∫₀ᵀ J - 1/h`.
    pub fn residual(&self) -> f64 {
        weight_integral(self.h, self.t) - 1.0 / self.h
    }
}

/// Solves ∫₀ᵀ J = 1/h for T.
pub fn endpoint_t(h: f64) -> Result<SlProblem> {
    check_h("endpoint_T", h)?;
    let target = 1.0 / h;
    let f = |t: f64| Ok(weight_integral(h, t) - target);
    // The integral exceeds sinh T, so T = asinh(1/h) is an upper bracket.
    let mut hi = target.asinh().max(f64::MIN_POSITIVE);
    while f(hi)? < 0.0 {
        hi *= 2.0;
    }
    let t = brent(f, 0.0, hi, 0.0, 200)?;
    Ok(SlProblem { h, t })
}

/// Outcome of one backward shot at a trial eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenQuery {
    pub lambda: f64,
    /// u(0) for the solution with u(T) = 1, u'(T) = 0.
    pub shoot_value: f64,
    /// Sign changes of u on (0, T).
    pub n_sign_changes: usize,
}

/// Integrates u'' + (J'/J) u' + λ u = 0 from T down to 0.
///
/// The state is (u, J u'), which turns the equation into
/// u' = p / J, p' = -λ J u.
pub fn shoot(p: &SlProblem, lambda: f64) -> Result<EigenQuery> {
    shoot_with(p, lambda, &OdeOptions::default())
}

pub fn shoot_with(p: &SlProblem, lambda: f64, opts: &OdeOptions) -> Result<EigenQuery> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::domain(
            "shoot",
            format!("lambda must be >= 0, got {lambda}"),
        ));
    }
    let h = p.h;
    let traj = integrate(
        |tau, y: &[f64; 2]| {
            let j = weight_j(h, tau);
            [y[1] / j, -lambda * j * y[0]]
        },
        p.t,
        0.0,
        [1.0, 0.0],
        opts,
    )?;

    let u: Vec<f64> = traj.y.iter().map(|y| y[0]).collect();
    let shoot_value = *u.last().expect("non-empty trajectory");
    let scale = u.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    // A zero sitting at the Dirichlet end is not an interior sign change.
    let interior = if shoot_value.abs() <= 1e-9 * scale {
        &u[..u.len() - 1]
    } else {
        &u[..]
    };
    let mut n_sign_changes = 0;
    let mut prev = 0.0_f64;
    for &v in interior {
        if v != 0.0 {
            if prev != 0.0 && v.signum() != prev.signum() {
                n_sign_changes += 1;
            }
            prev = v;
        }
    }
    Ok(EigenQuery {
        lambda,
        shoot_value,
        n_sign_changes,
    })
}

/// Search settings for [`lambda1_with`].
#[derive(Debug, Clone, Copy)]
pub struct Lambda1Options {
    /// Give up if no sign change is found below this λ.
    pub lambda_max: f64,
    /// Width of the final λ bracket.
    pub lambda_tol: f64,
    pub ode: OdeOptions,
}

impl Default for Lambda1Options {
    fn default() -> Self {
        Lambda1Options {
            lambda_max: 1e4,
            lambda_tol: 1e-11,
            ode: OdeOptions::default(),
        }
    }
}

/// First eigenvalue λ₁(ω(h)).
pub fn lambda1(h: f64) -> Result<f64> {
    lambda1_with(h, &Lambda1Options::default())
}

pub fn lambda1_with(h: f64, opts: &Lambda1Options) -> Result<f64> {
    check_h("lambda1", h)?;
    let problem = endpoint_t(h)?;
    let at = |lambda: f64| shoot_with(&problem, lambda, &opts.ode);
    // Past λ₁ once u(0) has crossed zero or a node has moved inside.
    let past = |q: &EigenQuery| q.shoot_value <= 0.0 || q.n_sign_changes >= 1;

    let step = 0.05_f64.max(h * h / 8.0);
    let mut lo = at(0.0)?;
    let mut hi;
    loop {
        let next = lo.lambda + step;
        if next > opts.lambda_max {
            return Err(Error::Search(format!(
                "no eigenvalue below lambda_max = {} for h = {h}",
                opts.lambda_max
            )));
        }
        hi = at(next)?;
        if past(&hi) {
            break;
        }
        lo = hi;
    }

    // Narrow until exactly one eigenvalue lies in (lo, hi].
    let mut guard = 0;
    while !(hi.shoot_value <= 0.0 && hi.n_sign_changes <= 1) {
        let mid = at(0.5 * (lo.lambda + hi.lambda))?;
        if past(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        guard += 1;
        if guard > 200 {
            return Err(Error::Search(format!(
                "could not isolate the first eigenvalue for h = {h}"
            )));
        }
    }
    if hi.shoot_value == 0.0 {
        return Ok(hi.lambda);
    }

    brent_with_values(
        |lambda| at(lambda).map(|q| q.shoot_value),
        (lo.lambda, lo.shoot_value),
        (hi.lambda, hi.shoot_value),
        opts.lambda_tol,
        200,
    )
}

/// Finds h with λ₁(ω(h)) = `lambda_target`, assuming λ₁ increases with h.
pub fn invert_lambda1(lambda_target: f64) -> Result<f64> {
    invert_lambda1_with(lambda_target, &Lambda1Options::default())
}

pub const INVERT_H_MIN: f64 = 1e-4;
pub const INVERT_H_MAX: f64 = 10.0;

pub fn invert_lambda1_with(lambda_target: f64, opts: &Lambda1Options) -> Result<f64> {
    if !(lambda_target > 0.0) || !lambda_target.is_finite() {
        return Err(Error::domain(
            "invert_lambda1",
            format!("target must be positive, got {lambda_target}"),
        ));
    }
    let f = |h: f64| lambda1_with(h, opts).map(|l| l - lambda_target);

    let (mut lo, mut hi) = (0.1_f64, 1.0_f64);
    let mut f_lo = f(lo)?;
    while f_lo > 0.0 {
        if lo <= INVERT_H_MIN {
            return Err(Error::Search(format!(
                "target {lambda_target} lies below lambda1(h) for every h >= {INVERT_H_MIN}"
            )));
        }
        hi = lo;
        lo = (lo / 4.0).max(INVERT_H_MIN);
        f_lo = f(lo)?;
    }
    let mut f_hi = f(hi)?;
    while f_hi < 0.0 {
        if hi >= INVERT_H_MAX {
            return Err(Error::Search(format!(
                "target {lambda_target} lies above lambda1(h) for every h <= {INVERT_H_MAX}"
            )));
        }
        lo = hi;
        f_lo = f_hi;
        hi = (hi * 2.0).min(INVERT_H_MAX);
        f_hi = match f(hi) {
            Ok(v) => v,
            Err(e) if e.is_computational() => {
                return Err(Error::Search(format!(
                    "target {lambda_target} out of reach: {e}"
                )))
            }
            Err(e) => return Err(e),
        };
    }

    let h = brent_with_values(f, (lo, f_lo), (hi, f_hi), 1e-13, 200)?;
    let residual = f(h)?;
    if residual.abs() > 1e-8 {
        return Err(Error::Search(format!(
            "inversion residual {residual:e} at h = {h} exceeds 1e-8"
        )));
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanPoint {
    pub h: f64,
    pub lambda1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub points: Vec<ScanPoint>,
    pub strictly_increasing: bool,
}

impl ScanResult {
    /// CSV with header `h,lambda1`, values to `digits` significant digits.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("h,lambda1\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{}\n",
                crate::fmt::sig(p.h, digits),
                crate::fmt::sig(p.lambda1, digits)
            ));
        }
        out
    }
}

/// λ₁ on a uniform grid of `steps` points over `[h_min, h_max]`.
pub fn monotonicity_scan(h_min: f64, h_max: f64, steps: usize) -> Result<ScanResult> {
    if !(h_min > 0.0 && h_min < h_max && h_max.is_finite()) || steps < 2 {
        return Err(Error::domain(
            "monotonicity_scan",
            format!("need 0 < h_min < h_max and steps >= 2, got ({h_min}, {h_max}, {steps})"),
        ));
    }
    let dh = (h_max - h_min) / (steps - 1) as f64;
    let points = (0..steps)
        .into_par_iter()
        .map(|i| {
            let h = if i + 1 == steps {
                h_max
            } else {
                h_min + i as f64 * dh
            };
            lambda1(h).map(|lambda1| ScanPoint { h, lambda1 })
        })
        .collect::<Result<Vec<_>>>()?;
    let strictly_increasing = points.windows(2).all(|w| w[1].lambda1 > w[0].lambda1);
    Ok(ScanResult {
        points,
        strictly_increasing,
    })
}

/// Eigenvalue bounds implied by a Cheeger constant h on a hyperbolic surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralBounds {
    pub h: f64,
    /// Cheeger: λ₁ ≥ h²/4.
    pub lambda_lower_cheeger: f64,
    /// Buser with n = 2, δ = 1: λ₁ ≤ 2h + 10h².
    pub lambda_upper_buser: f64,
    /// λ₁ ≤ λ₁(ω(h)).
    pub lambda_upper_agol: f64,
}

pub fn cheeger_lower(h: f64) -> f64 {
    h * h / 4.0
}

pub fn buser_upper(h: f64) -> f64 {
    2.0 * h + 10.0 * h * h
}

pub fn classical_bounds(h: f64) -> Result<SpectralBounds> {
    check_h("classical_bounds", h)?;
    Ok(SpectralBounds {
        h,
        lambda_lower_cheeger: cheeger_lower(h),
        lambda_upper_buser: buser_upper(h),
        lambda_upper_agol: lambda1(h)?,
    })
}

/// Inverts Buser's bound: the positive root of 10h² + 2h - λ = 0.
///
/// At λ = 1/4 this gives ≈ 0.087083. Some published accounts quote 0.0707
/// for the same inversion; that figure does not follow from 2h + 10h².
pub fn buser_h_lower(lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::domain(
            "buser_h_lower",
            format!("lambda must be >= 0, got {lambda}"),
        ));
    }
    // (-1 + sqrt(1 + 10λ)) / 10, rationalized to avoid cancellation.
    Ok(lambda / (1.0 + (1.0 + 10.0 * lambda).sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelbergLowerBounds {
    pub kim_sarnak: f64,
    pub selberg: f64,
}

/// Cheeger lower bounds for the congruence surfaces against the Brooks-Zuk
/// ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelbergReport {
    pub lower_bounds: SelbergLowerBounds,
    pub ceiling: f64,
    pub verdict: Verdict,
}

pub fn selberg_test() -> Result<SelbergReport> {
    selberg_test_with(KIM_SARNAK_LAMBDA, SELBERG_LAMBDA, BROOKS_ZUK_CEILING)
}

pub fn selberg_test_with(
    kim_sarnak_lambda: f64,
    selberg_lambda: f64,
    ceiling: f64,
) -> Result<SelbergReport> {
    let (kim_sarnak, selberg) = rayon::join(
        || invert_lambda1(kim_sarnak_lambda),
        || invert_lambda1(selberg_lambda),
    );
    let lower_bounds = SelbergLowerBounds {
        kim_sarnak: kim_sarnak?,
        selberg: selberg?,
    };
    let verdict = if lower_bounds.kim_sarnak < ceiling && lower_bounds.selberg < ceiling {
        Verdict::Consistent
    } else {
        Verdict::Inconsistent
    };
    Ok(SelbergReport {
        lower_bounds,
        ceiling,
        verdict,
    })
}
