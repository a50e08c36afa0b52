//! Relative tolerances for ordering floating-point ratios.

use std::env;

/// Default relative tolerance for comparing lengths, areas and ratios.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Environment variable overriding [`DEFAULT_REL_TOL`].
pub const TOL_ENV_VAR: &str = "CHEEGER_TOL";

/// A relative tolerance. Two values closer than `rel * max(|a|, |b|)` are
/// treated as equal, and orderings are only trusted beyond that gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub const fn new(rel: f64) -> Self {
        Tolerance { rel }
    }

    /// Reads `CHEEGER_TOL`, falling back to the default when unset.
    /// Returns `None` if the variable is set but is not a positive number.
    pub fn from_env() -> Option<Self> {
        match env::var(TOL_ENV_VAR) {
            Err(_) => Some(Self::default()),
            Ok(raw) => match raw.trim().parse::<f64>() {
                Ok(v) if v > 0.0 && v.is_finite() => Some(Tolerance::new(v)),
                _ => None,
            },
        }
    }

    fn gap(&self, a: f64, b: f64) -> f64 {
        self.rel * a.abs().max(b.abs())
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        if a == b {
            return true;
        }
        (a - b).abs() <= self.gap(a, b)
    }

    /// `a < b` by more than the tolerance.
    pub fn lt(&self, a: f64, b: f64) -> bool {
        if b == f64::INFINITY {
            return a.is_finite();
        }
        b - a > self.gap(a, b)
    }

    /// `a > b` by more than the tolerance.
    pub fn gt(&self, a: f64, b: f64) -> bool {
        self.lt(b, a)
    }
}
