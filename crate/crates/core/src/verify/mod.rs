//! Exact verification of operator identities.
//!
//! Every relation has a stable id and an explicit evaluator that computes a
//! residual; a relation passes when the residual vanishes. Failures carry the
//! first offending entry in row-major order.

mod registry;
mod relations;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use registry::{RelationSpec, Scope, Suite, REGISTRY};
pub use relations::{askey1_residual, k1l1_residual};

use crate::error::{Error, Result};
use crate::geometry::{GeometryIndex, Subspace};
use crate::module::ModuleType;
use crate::operators::{build_combinatorial, CombinatorialOperators, OperatorSet};
use crate::scalar::{QuadRing, ScalarRing};
use crate::spectral::{compute_multiplicities, MultiplicityMap};

/// First offending entry of a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub residual: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl RelationResult {
    pub fn new(id: impl Into<String>, witness: Option<Witness>) -> Self {
        RelationResult {
            id: id.into(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportContext {
    pub q: String,
    pub h: usize,
    pub k: usize,
    /// `geometry` or `module`.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub module_type: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub context: ReportContext,
    pub relations: Vec<RelationResult>,
    /// Wall-clock milliseconds per relation; not part of the deterministic content.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl VerificationReport {
    pub fn new(context: ReportContext) -> Self {
        VerificationReport {
            context,
            relations: Vec::new(),
            timings: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(RelationResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationResult> {
        self.relations.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, id: &str) -> Option<&RelationResult> {
        self.relations.iter().find(|r| r.id == id)
    }

    /// Append another report's relations and timings.
    pub fn extend(&mut self, other: VerificationReport) {
        self.relations.extend(other.relations);
        if let Some(t) = other.timings {
            self.timings.get_or_insert_with(BTreeMap::new).extend(t);
        }
    }
}

/// What a suite runs against: an operator set, and for the standard module
/// also the geometry and the combinatorially defined matrices.
pub struct Subject<'a, R: ScalarRing> {
    pub ops: &'a OperatorSet<R>,
    pub geometry: Option<(&'a GeometryIndex, &'a CombinatorialOperators<R::Elem>)>,
    pub module_type: Option<ModuleType>,
}

impl<'a, R: ScalarRing> Subject<'a, R> {
    pub fn module(ops: &'a OperatorSet<R>, ty: ModuleType) -> Self {
        Subject {
            ops,
            geometry: None,
            module_type: Some(ty),
        }
    }

    pub fn geometry(ops: &'a OperatorSet<R>, g: &'a GeometryIndex, comb: &'a CombinatorialOperators<R::Elem>) -> Self {
        Subject {
            ops,
            geometry: Some((g, comb)),
            module_type: None,
        }
    }

    /// Only the operator set; geometry-scoped relations are skipped.
    pub fn bare(ops: &'a OperatorSet<R>) -> Self {
        Subject {
            ops,
            geometry: None,
            module_type: None,
        }
    }

    pub fn context(&self) -> ReportContext {
        ReportContext {
            q: self.ops.ring.mode().to_string(),
            h: self.ops.h,
            k: self.ops.k,
            mode: if self.geometry.is_some() { "geometry" } else { "module" }.to_string(),
            y: self.geometry.map(|(g, _)| g.y().to_string()),
            module_type: self.module_type.map(|t| t.to_string()),
        }
    }

    fn applies(&self, spec: &RelationSpec) -> bool {
        spec.scope == Scope::Any || self.geometry.is_some()
    }
}

/// Resolve a filter of suite names, relation ids, or `all` into registry entries.
///
/// Order follows the registry regardless of the filter's order.
pub fn select(filter: &[String]) -> Result<Vec<&'static RelationSpec>> {
    if filter.is_empty() {
        return Ok(REGISTRY.iter().collect());
    }
    let mut keep = vec![false; REGISTRY.len()];
    for token in filter {
        let token = token.trim();
        let mut matched = false;
        for (slot, spec) in keep.iter_mut().zip(REGISTRY) {
            if token == "all" || spec.id == token || spec.suite.name() == token {
                *slot = true;
                matched = true;
            }
        }
        if !matched {
            return Err(Error::InvalidParameters(format!("unknown suite or relation '{token}'")));
        }
    }
    Ok(REGISTRY.iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect())
}

/// Evaluate the given relations in parallel; results keep the input order.
pub fn run_relations<R: ScalarRing>(subject: &Subject<'_, R>, specs: &[&RelationSpec]) -> VerificationReport {
    let applicable: Vec<&RelationSpec> = specs.iter().copied().filter(|s| subject.applies(s)).collect();
    let results: Vec<(RelationResult, f64)> = applicable
        .par_iter()
        .map(|spec| {
            let start = Instant::now();
            let witness = relations::evaluate(spec.id, subject);
            (
                RelationResult::new(spec.id, witness),
                start.elapsed().as_secs_f64() * 1e3,
            )
        })
        .collect();
    let mut report = VerificationReport::new(subject.context());
    let mut timings = BTreeMap::new();
    for (result, ms) in results {
        timings.insert(result.id.clone(), ms);
        report.relations.push(result);
    }
    report.timings = Some(timings);
    report
}

fn run_suite<R: ScalarRing>(subject: &Subject<'_, R>, suite: Suite) -> VerificationReport {
    let specs: Vec<&RelationSpec> = REGISTRY.iter().filter(|s| s.suite == suite).collect();
    run_relations(subject, &specs)
}

/// The seventeen defining relations among `K1^{±1}, K2^{±1}, L1, L2, R1, R2`.
pub fn verify_generator_relations<R: ScalarRing>(subject: &Subject<'_, R>) -> VerificationReport {
    run_suite(subject, Suite::Generators)
}

/// Expressions for `F^0, F^+, F^-, F, R, L, A`, the back-substitutions, and
/// (on the geometry) agreement with the combinatorial definitions.
pub fn verify_f_relations<R: ScalarRing>(subject: &Subject<'_, R>) -> VerificationReport {
    run_suite(subject, Suite::F)
}

/// Centrality of `Ω0, Ω1, Ω2` and the reconstructions of `F^0, F^+, F^-`.
pub fn verify_center<R: ScalarRing>(subject: &Subject<'_, R>) -> VerificationReport {
    run_suite(subject, Suite::Center)
}

/// The two cubic relations in `A, A*` and the commutation of their coefficients.
pub fn verify_main_theorem<R: ScalarRing>(subject: &Subject<'_, R>) -> VerificationReport {
    run_suite(subject, Suite::Main)
}

/// Weight-space bookkeeping: projections and where each operator sends `E*_{i,j}V`.
pub fn verify_structure<R: ScalarRing>(subject: &Subject<'_, R>) -> VerificationReport {
    run_suite(subject, Suite::Structure)
}

/// Cover degrees of every element and the sizes of the levels.
pub fn verify_counts(g: &GeometryIndex) -> VerificationReport {
    let ring = QuadRing::new(g.q()).expect("geometry q is supported");
    let ops = OperatorSet::for_geometry(g, ring).expect("ring matches geometry");
    let comb = build_combinatorial(g, &ring).expect("geometry elements are consistent");
    run_suite(&Subject::geometry(&ops, g, &comb), Suite::Counts)
}

/// Every applicable relation selected by `filter` (empty means all).
pub fn verify_all<R: ScalarRing>(subject: &Subject<'_, R>, filter: &[String]) -> Result<VerificationReport> {
    Ok(run_relations(subject, &select(filter)?))
}

/// Build everything for the standard module of `(q, h, k)` with reference
/// subspace `y` and run the selected relations.
pub fn verify_geometry(g: &GeometryIndex, filter: &[String]) -> Result<VerificationReport> {
    let ring = QuadRing::new(g.q())?;
    let ops = OperatorSet::for_geometry(g, ring)?;
    let comb = build_combinatorial(g, &ring)?;
    verify_all(&Subject::geometry(&ops, g, &comb), filter)
}

/// Run the full suite and the decomposition for each reference subspace and
/// compare: one entry per `y` for the suite, one for agreement of the
/// multiplicity maps.
pub fn verify_y_invariance(q: u64, h: usize, k: usize, y_list: &[Subspace]) -> Result<VerificationReport> {
    if y_list.is_empty() {
        return Err(Error::InvalidParameters("no reference subspaces given".into()));
    }
    let mut report = VerificationReport::new(ReportContext {
        q: q.to_string(),
        h,
        k,
        mode: "geometry".into(),
        y: Some(y_list.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")),
        module_type: None,
    });
    let mut maps: Vec<MultiplicityMap> = Vec::new();
    for (t, y) in y_list.iter().enumerate() {
        let g = GeometryIndex::build(q, h, k, Some(y.clone()))?;
        let suite = verify_geometry(&g, &[])?;
        let witness = suite.failures().next().map(|f| Witness {
            row: t,
            col: 0,
            residual: format!("{} fails", f.id),
        });
        report
            .relations
            .push(RelationResult::new(format!("y-invariance.suite[{y}]"), witness));
        let ring = QuadRing::new(q)?;
        let ops = OperatorSet::for_geometry(&g, ring)?;
        maps.push(compute_multiplicities(&g, &ops)?);
    }
    let differing = maps.iter().position(|m| m != &maps[0]);
    let witness = differing.map(|t| Witness {
        row: t,
        col: 0,
        residual: format!("multiplicities differ from those for y = {}", y_list[0]),
    });
    report
        .relations
        .push(RelationResult::new("y-invariance.multiplicities", witness));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{enumerate_types, AbstractModule};
    use crate::scalar::SymbolicRing;
    use std::collections::HashSet;

    #[test]
    fn registry_ids_unique() {
        let mut seen = HashSet::new();
        for spec in REGISTRY {
            assert!(seen.insert(spec.id), "duplicate id {}", spec.id);
            assert!(spec.id.starts_with(spec.suite.name()), "{}", spec.id);
        }
        assert_eq!(REGISTRY.iter().filter(|s| s.suite == Suite::Generators).count(), 17);
    }

    #[test]
    fn every_relation_evaluates_on_geometry() {
        let g = GeometryIndex::build(2, 2, 1, None).unwrap();
        let report = verify_geometry(&g, &[]).unwrap();
        assert_eq!(report.relations.len(), REGISTRY.len());
        for r in &report.relations {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn module_scope_skips_geometry_relations() {
        let ty = enumerate_types(3, 2).unwrap()[1];
        let m = AbstractModule::build(ty, SymbolicRing);
        let report = verify_all(&Subject::module(&m.ops, ty), &[]).unwrap();
        let expected = REGISTRY.iter().filter(|s| s.scope == Scope::Any).count();
        assert_eq!(report.relations.len(), expected);
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.context.mode, "module");
    }

    #[test]
    fn filter_selection() {
        assert_eq!(select(&["all".into()]).unwrap().len(), REGISTRY.len());
        let main = select(&["main".into()]).unwrap();
        assert!(main.iter().all(|s| s.suite == Suite::Main));
        let one = select(&["main.askey1".into(), "generators.k1l1".into()]).unwrap();
        assert_eq!(
            one.iter().map(|s| s.id).collect::<Vec<_>>(),
            vec!["generators.k1l1", "main.askey1"]
        );
        assert!(select(&["nope".into()]).is_err());
    }

    #[test]
    fn perturbed_k1l1_fails() {
        let g = GeometryIndex::build(2, 2, 1, None).unwrap();
        let ring = QuadRing::new(2).unwrap();
        let ops = OperatorSet::for_geometry(&g, ring).unwrap();
        assert!(k1l1_residual(&ops, &ring.q()).is_zero());
        let bad = k1l1_residual(&ops, &(ring.q() + ring.one()));
        assert!(bad.first_nonzero().is_some());
    }

    #[test]
    fn counts_example() {
        let g = GeometryIndex::build(2, 3, 2, None).unwrap();
        let report = verify_counts(&g);
        assert!(report.all_passed());
        assert_eq!(report.relations.len(), 5);
    }

    #[test]
    fn second_f_form_sign() {
        // The companion of the first F form has a minus sign in front of the
        // diagonal correction; with a plus sign the identity fails.
        let g = GeometryIndex::build(2, 2, 1, None).unwrap();
        let ring = QuadRing::new(2).unwrap();
        let ops = OperatorSet::for_geometry(&g, ring).unwrap();
        let gens = &ops.gens;
        let c = ring.inv_q_minus_one();
        let base = &(&gens.r1 * &gens.l1) + &(&gens.r2 * &gens.l2);
        let correction = crate::sparse::SparseOperator::combination(
            ops.dim(),
            &[
                (c.clone() * ring.half_power(3), &(&gens.k1_inv * &gens.k2)),
                (-c, &gens.identity),
            ],
        );
        assert_eq!(ops.fm.f, &base - &correction);
        assert_ne!(ops.fm.f, &base + &correction);
    }
}
