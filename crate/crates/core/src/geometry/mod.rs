//! The projective geometry: subspaces of `F_q^(h+k)`, their stratification
//! relative to a fixed `k`-dimensional subspace `y`, and the refined cover
//! relation.

mod index;
mod subspace;

pub use index::{
    check_capacity, check_hk, classify_ij, cover_classify, poset_size, Cover, GeometryIndex, GeometrySummary,
    StratumSummary, DEFAULT_CAPACITY,
};
pub use subspace::{check_field, enumerate_subspaces, Subspace, ENUMERATION_LIMIT};
