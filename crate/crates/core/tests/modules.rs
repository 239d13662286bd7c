use projgeom_core::module::{bc_coefficients, eigen_tables, enumerate_types, type_to_nmde, ConversionCase, Nmde};
use projgeom_core::scalar::rational;
use projgeom_core::spectral::compute_multiplicities;
use projgeom_core::verify::{verify_all, verify_geometry, Subject, REGISTRY};
use projgeom_core::{AbstractModule, GeometryIndex, ModuleType, OperatorSet, QuadRing, ScalarRing, SymbolicRing};

fn shapes() -> impl Iterator<Item = (usize, usize)> {
    (2..=4).flat_map(|h| (1..h.min(4)).map(move |k| (h, k)))
}

#[test]
fn every_module_satisfies_the_suite_for_each_prime() {
    for q in [2, 3, 5, 7] {
        let ring = QuadRing::new(q).unwrap();
        for (h, k) in shapes() {
            for ty in enumerate_types(h, k).unwrap() {
                let m = AbstractModule::build(ty, ring);
                let report = verify_all(&Subject::module(&m.ops, ty), &[]).unwrap();
                let failed: Vec<_> = report.failures().map(|f| &f.id).collect();
                assert!(failed.is_empty(), "q={q} {ty} at ({h},{k}): {failed:?}");
                for row in eigen_tables(&m) {
                    for e in &row.entries {
                        assert!(e.agrees(), "q={q} {ty} w({},{}) {}", row.i, row.j, e.name);
                    }
                }
            }
        }
    }
}

#[test]
fn symbolic_module_evaluates_to_numeric_module() {
    let ty = ModuleType::new(0, 1, 0, 4, 2).unwrap();
    let sym = AbstractModule::build(ty, SymbolicRing);
    for q in [2, 3, 5, 7] {
        let ring = QuadRing::new(q).unwrap();
        let num = AbstractModule::build(ty, ring);
        for name in ["A", "A*", "G", "P", "Omega"] {
            let (s, n) = (sym.ops.named(name).unwrap(), num.ops.named(name).unwrap());
            for (r, c, v) in s.entries() {
                assert_eq!(
                    &v.evaluate(&ring).unwrap(),
                    n.get(r, c).unwrap(),
                    "{name} q={q} ({r},{c})"
                );
            }
            assert_eq!(s.nnz(), n.nnz(), "{name} q={q}");
        }
    }
}

#[test]
fn geometry_and_module_verdicts_agree() {
    let g = GeometryIndex::build(2, 3, 1, None).unwrap();
    let geom = verify_geometry(&g, &[]).unwrap();
    let ring = QuadRing::new(2).unwrap();
    for ty in enumerate_types(3, 1).unwrap() {
        let m = AbstractModule::build(ty, ring);
        let module = verify_all(&Subject::module(&m.ops, ty), &[]).unwrap();
        for r in &module.relations {
            let other = geom
                .get(&r.id)
                .expect("every module relation also runs on the geometry");
            assert_eq!(r.passed(), other.passed(), "{}", r.id);
        }
    }
    assert_eq!(geom.relations.len(), REGISTRY.len());
}

#[test]
fn dimensions_of_small_types() {
    let t = |a, b, r, h, k| ModuleType::new(a, b, r, h, k).unwrap();
    assert_eq!(t(0, 0, 0, 2, 1).dim(), 6);
    assert_eq!(t(0, 1, 0, 2, 1).dim(), 2);
    assert_eq!(t(0, 0, 1, 2, 1).dim(), 2);
    assert_eq!(t(0, 0, 0, 3, 2).dim(), 12);
    assert_eq!(t(0, 0, 0, 2, 1).support().first(), Some(&(0, 0)));
    assert!(ModuleType::new(1, 0, 0, 2, 1).is_err());
    assert!(ModuleType::new(0, 0, 0, 2, 2).is_err());
    assert!(ModuleType::new(0, 0, -1, 3, 1).is_err());
}

#[test]
fn type_counts() {
    // (α, β, ρ) with 2α ≤ k - ρ and 2β ≤ h - ρ, counted by hand.
    assert_eq!(enumerate_types(2, 1).unwrap().len(), 3);
    assert_eq!(enumerate_types(3, 1).unwrap().len(), 4);
    assert_eq!(enumerate_types(3, 2).unwrap().len(), 7);
}

#[test]
fn trivial_module_scalars() {
    // On the trivial type the centrals act by q^{-ρ}, q[k-ρ-α]+[α], q[h-ρ-β]+[β].
    let ring = QuadRing::new(3).unwrap();
    let ty = ModuleType::new(0, 0, 0, 3, 2).unwrap();
    let [o0, o1, o2] = ty.omega_scalars(&ring);
    assert_eq!(o0, ring.one());
    assert_eq!(o1, ring.rational(rational(12)));
    assert_eq!(o2, ring.rational(rational(39)));
}

#[test]
fn c_and_b_vanish_off_support() {
    let ring = QuadRing::new(2).unwrap();
    let ty = ModuleType::new(0, 0, 1, 3, 2).unwrap();
    let (c, b) = bc_coefficients(&ty, 0, 0, &ring);
    assert_eq!(c, ring.zero());
    assert_eq!(b, ring.zero());
}

#[test]
fn parameters_of_a_case_two_type() {
    let ty = ModuleType::new(0, 1, 0, 3, 2).unwrap();
    let (n, case) = type_to_nmde(&ty).unwrap();
    assert_eq!(case, ConversionCase::C2);
    assert_eq!(
        n,
        Nmde {
            nu: 1,
            mu: 1,
            d: 1,
            e: -1
        }
    );
    let ty = ModuleType::new(0, 1, 0, 2, 1).unwrap();
    assert_eq!(type_to_nmde(&ty).unwrap().1, ConversionCase::C2);
}

#[test]
fn decomposition_of_q3() {
    let g = GeometryIndex::build(3, 2, 1, None).unwrap();
    let ops = OperatorSet::for_geometry(&g, QuadRing::new(3).unwrap()).unwrap();
    let m = compute_multiplicities(&g, &ops).unwrap();
    let total: usize = m.iter().map(|(t, &n)| n * t.dim()).sum();
    assert_eq!(total, g.len());
    assert_eq!(g.len(), 28);
}
