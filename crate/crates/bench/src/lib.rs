//! Benchmark fixtures.

use cheeger_core::{Geodesic, Splitting, SurfaceDescription};

/// A genus-`g` surface with `g - 1` separating curves, each cutting off a
/// genus-`k` piece, plus nonseparating decoys that only feed the post-check.
pub fn chain_surface(genus: u32) -> SurfaceDescription {
    let chi = 2 - 2 * i64::from(genus);
    let mut geodesics = Vec::new();
    let mut splittings = Vec::new();
    for k in 1..genus {
        let id = format!("sep{k}");
        geodesics.push(Geodesic {
            id: id.clone(),
            length: 0.5 + 0.37 * f64::from(k),
        });
        let chi_a = 1 - 2 * i64::from(k);
        splittings.push(Splitting {
            curves: vec![id],
            chi_a,
            chi_b: chi - chi_a,
            clearance: 1.5,
        });
    }
    for k in 0..genus {
        geodesics.push(Geodesic {
            id: format!("ns{k}"),
            length: 0.8 + 0.1 * f64::from(k),
        });
    }
    SurfaceDescription::new(genus, 0, geodesics, splittings).expect("valid fixture")
}
