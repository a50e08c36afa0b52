//! Cheeger constants of geometrically finite, finite-area hyperbolic
//! surfaces, and the Sturm-Liouville spectral bounds they imply.
//!
//! - [`surface`]: surface descriptions and their JSON format.
//! - [`formulas`]: isoperimetric ratios of disks, collars, equidistant
//!   regions and horocusp neighborhoods.
//! - [`solver`]: branch-and-bound computation of the Cheeger constant, with
//!   a grid-search oracle.
//! - [`sturm`]: the eigenvalue problem ω(h), its inversion, and the classical
//!   Cheeger and Buser bounds.

// Checks like `!(x > 0.0)` are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fmt;
pub mod formulas;
pub mod roots;
pub mod solver;
pub mod sturm;
pub mod surface;
pub mod tolerance;

pub use error::{Error, Result};
pub use formulas::{NeighborCurveData, RegionStats};
pub use solver::{
    brute_force, evaluate_splitting, initialize, solve, solve_with, CandidateEvaluation,
    CheegerResult, EvaluationReason, Minimizer, SolveOptions,
};
pub use sturm::{
    classical_bounds, endpoint_t, fd_oracle, invert_lambda1, lambda1, monotonicity_scan,
    selberg_test, shoot, EigenQuery, ScanResult, SelbergReport, SlProblem, SpectralBounds, Verdict,
};
pub use surface::{
    admissible_collections, parse_surface, surface_area, Geodesic, Splitting, SurfaceArea,
    SurfaceDescription,
};
pub use tolerance::Tolerance;
