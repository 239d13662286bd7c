//! Benchmark fixtures shared by the criterion targets.

use projgeom_core::module::enumerate_types;
use projgeom_core::ModuleType;

/// Geometries small enough to rebuild inside a benchmark loop.
pub const GEOMETRIES: [(u64, usize, usize); 3] = [(2, 2, 1), (3, 2, 1), (2, 3, 1)];

/// Every module type with h <= 4, k <= 3.
pub fn all_types() -> Vec<ModuleType> {
    (2..=4usize)
        .flat_map(|h| (1..h.min(4)).flat_map(move |k| enumerate_types(h, k).expect("h > k")))
        .collect()
}
