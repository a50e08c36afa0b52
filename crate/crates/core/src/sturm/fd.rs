//! Finite-difference eigenvalue oracle for ω(h).
//!
//! Vertex-centred second-order scheme on a uniform grid: stiffness from the
//! flux J u' at cell midpoints, lumped mass J(τᵢ) Δτ (halved at the Neumann
//! end). The generalized problem K u = λ M u is symmetrized as
//! M^{-1/2} K M^{-1/2} and its lowest eigenvalue found by Sturm-sequence
//! bisection.

use super::{endpoint_t, weight_j};
use crate::error::{Error, Result};

/// Lowest eigenvalue of the discretized ω(h) on `n_points` unknowns.
pub fn fd_oracle(h: f64, n_points: usize) -> Result<f64> {
    if n_points < 100 {
        return Err(Error::domain(
            "fd_oracle",
            format!("need at least 100 grid points, got {n_points}"),
        ));
    }
    let problem = endpoint_t(h)?;
    let n = n_points;
    let dx = problem.t / n as f64;

    // Unknowns u_1..u_n at τ_i = i Δτ; u_0 = 0.
    let flux: Vec<f64> = (0..n)
        .map(|i| weight_j(h, (i as f64 + 0.5) * dx) / dx)
        .collect();
    let mass: Vec<f64> = (1..=n)
        .map(|i| {
            let m = weight_j(h, i as f64 * dx) * dx;
            if i == n {
                m / 2.0
            } else {
                m
            }
        })
        .collect();

    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n - 1];
    for k in 0..n {
        let stiff = flux[k] + if k + 1 < n { flux[k + 1] } else { 0.0 };
        diag[k] = stiff / mass[k];
        if k + 1 < n {
            off[k] = -flux[k + 1] / (mass[k] * mass[k + 1]).sqrt();
        }
    }
    Ok(lowest_eigenvalue(&diag, &off))
}

/// Number of eigenvalues of the symmetric tridiagonal matrix below `x`.
fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0_f64;
    for k in 0..diag.len() {
        let coupling = if k == 0 {
            0.0
        } else {
            off[k - 1] * off[k - 1] / q
        };
        q = diag[k] - x - coupling;
        if q == 0.0 {
            q = -f64::EPSILON * (diag[k].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn lowest_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    // Gershgorin interval.
    let n = diag.len();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in 0..n {
        let r =
            if k > 0 { off[k - 1].abs() } else { 0.0 } + if k + 1 < n { off[k].abs() } else { 0.0 };
        lo = lo.min(diag[k] - r);
        hi = hi.max(diag[k] + r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(diag, off, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_known_spectrum() {
        // 1D Dirichlet Laplacian: eigenvalues 2 - 2 cos(kπ/(n+1)).
        let n = 50;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let want = 2.0 - 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((lowest_eigenvalue(&diag, &off) - want).abs() < 1e-13);
        assert_eq!(count_below(&diag, &off, 4.0), n);
        assert_eq!(count_below(&diag, &off, 0.0), 0);
    }

    #[test]
    fn rejects_coarse_grid() {
        assert!(fd_oracle(1.0, 99).is_err());
    }

    #[test]
    fn second_order_convergence() {
        let a = fd_oracle(1.0, 400).unwrap();
        let b = fd_oracle(1.0, 800).unwrap();
        let c = fd_oracle(1.0, 1600).unwrap();
        let ratio = (a - b) / (b - c);
        assert!((ratio - 4.0).abs() < 0.5, "{ratio}");
    }
}
