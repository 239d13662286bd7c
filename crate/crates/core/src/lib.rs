//! Exact computations on the projective geometry of subspaces of `F_q^(h+k)`
//! stratified by a fixed `k`-dimensional subspace: the generators of its
//! incidence algebra, the derived operators `A` and `A*`, abstract
//! irreducible modules, and verification of the identities among them.

pub mod error;
pub mod geometry;
pub mod module;
pub mod operators;
pub mod scalar;
pub mod sparse;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{GeometryIndex, Subspace};
pub use module::{AbstractModule, ConversionCase, ModuleType, Nmde};
pub use operators::OperatorSet;
pub use scalar::{Field, QuadRing, QuadScalar, RatFunc, RingMode, ScalarRing, SymbolicRing};
pub use sparse::SparseOperator;
pub use spectral::MultiplicityMap;
pub use verify::{VerificationReport, Witness};
