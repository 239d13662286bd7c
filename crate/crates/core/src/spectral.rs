//! Multiplicities of the irreducible types in the standard module, read off
//! the joint eigenspaces of the central elements.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::GeometryIndex;
use crate::module::{enumerate_types, ModuleType};
use crate::operators::OperatorSet;
use crate::scalar::{QuadRing, ScalarRing};
use crate::sparse::rank;
use crate::verify::{RelationResult, ReportContext, VerificationReport, Witness};

/// Multiplicity of every valid type, including those that do not occur.
pub type MultiplicityMap = BTreeMap<ModuleType, usize>;

/// Fail if two types share the scalars by which `Ω0, Ω1, Ω2` act.
pub fn check_scalar_injectivity<R: ScalarRing>(types: &[ModuleType], ring: &R) -> Result<()> {
    let triples: Vec<_> = types.iter().map(|t| t.omega_scalars(ring)).collect();
    for (a, ta) in triples.iter().enumerate() {
        for (b, tb) in triples.iter().enumerate().skip(a + 1) {
            if ta == tb {
                return Err(Error::ScalarCollision(types[a].to_string(), types[b].to_string()));
            }
        }
    }
    Ok(())
}

/// For each type, the dimension of the joint kernel of `Ω_t - λ_t I`
/// (`t = 0, 1, 2`) on the weight space `E*_{α, ρ+β}V`.
///
/// Types whose lowest weight is `(α, ρ+β)` are the only ones contributing to
/// that weight space with distinct central characters, so the kernel
/// dimension is the multiplicity.
pub fn compute_multiplicities(g: &GeometryIndex, ops: &OperatorSet<QuadRing>) -> Result<MultiplicityMap> {
    let types = enumerate_types(g.h(), g.k())?;
    let ring = &ops.ring;
    check_scalar_injectivity(&types, ring)?;
    let centrals = [&ops.centrals.omega0, &ops.centrals.omega1, &ops.centrals.omega2];
    let zero = ring.zero();

    let mults: Vec<usize> = types
        .par_iter()
        .map(|t| {
            let (i, j) = t.corner();
            let members = g.stratum(i, j);
            if members.is_empty() {
                return 0;
            }
            let lambdas = t.omega_scalars(ring);
            let mut stacked = Vec::with_capacity(3 * members.len());
            for (omega, lambda) in centrals.iter().zip(&lambdas) {
                let mut block = omega.dense_block(members, members, &zero);
                for (d, row) in block.iter_mut().enumerate() {
                    row[d] = row[d].clone() - lambda;
                }
                stacked.extend(block);
            }
            members.len() - rank(stacked)
        })
        .collect();
    Ok(types.into_iter().zip(mults).collect())
}

/// `Σ mult(t) · dim(t)`.
pub fn total_dimension(m: &MultiplicityMap) -> usize {
    m.iter().map(|(t, &mult)| mult * t.dim()).sum()
}

/// Check `|P_{i,j}| = Σ mult(t)` over types supported at `(i, j)`, for every
/// weight, and `Σ mult(t) · dim(t) = |P|`.
pub fn bookkeeping_check(g: &GeometryIndex, m: &MultiplicityMap) -> VerificationReport {
    let mut report = VerificationReport::new(ReportContext {
        q: g.q().to_string(),
        h: g.h(),
        k: g.k(),
        mode: "geometry".into(),
        y: Some(g.y().to_string()),
        module_type: None,
    });
    for i in 0..=g.k() {
        for j in 0..=g.h() {
            let observed = g.stratum(i, j).len();
            let predicted: usize = m
                .iter()
                .filter(|(t, _)| t.contains(i as i64, j as i64))
                .map(|(_, &mult)| mult)
                .sum();
            let witness = (observed != predicted).then(|| Witness {
                row: i,
                col: j,
                residual: format!("{observed} - {predicted}"),
            });
            report
                .relations
                .push(RelationResult::new(format!("bookkeeping.stratum({i},{j})"), witness));
        }
    }
    let (total, size) = (total_dimension(m), g.len());
    let witness = (total != size).then(|| Witness {
        row: 0,
        col: 0,
        residual: format!("{total} - {size}"),
    });
    report.relations.push(RelationResult::new("bookkeeping.total", witness));
    report
}
