use proptest::prelude::*;

use projgeom_core::geometry::GeometryIndex;
use projgeom_core::module::{enumerate_types, AbstractModule};
use projgeom_core::scalar::{gaussian_binomial, rational, LaurentPoly, Rational};
use projgeom_core::{Field, QuadRing, QuadScalar, RatFunc, ScalarRing, SparseOperator, Subspace, SymbolicRing};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rational(n) / rational(d))
}

fn ring() -> impl Strategy<Value = QuadRing> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|q| QuadRing::new(q).unwrap())
}

fn quad_in(r: QuadRing) -> impl Strategy<Value = QuadScalar> {
    (small_rational(), small_rational()).prop_map(move |(a, b)| r.scalar(a, b))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, small_rational()), 0..4).prop_map(LaurentPoly::from_terms)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn quad_triple() -> impl Strategy<Value = (QuadScalar, QuadScalar, QuadScalar)> {
    ring().prop_flat_map(|r| (quad_in(r), quad_in(r), quad_in(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quad_field_axioms((x, y, z) in quad_triple()) {
        prop_assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
        prop_assert_eq!((x.clone() + &y) + &z, x.clone() + &(y.clone() + &z));
        prop_assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + &(x.clone() * &z));
        prop_assert_eq!(x.clone() * &y, y.clone() * &x);
        if !x.is_zero() {
            let one = x.clone() * &x.inv().unwrap();
            prop_assert_eq!(one, QuadRing::new(x.q() as u64).unwrap().one());
        }
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
        prop_assert_eq!((x.clone() + &y) + &z, x.clone() + &(y.clone() + &z));
        prop_assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + &(x.clone() * &z));
        prop_assert_eq!(x.clone() - &x, RatFunc::zero());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * &x.inv().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn ratfunc_denominator_canonical(x in ratfunc()) {
        let den = x.denom();
        prop_assert_eq!(den.min_exp(), Some(0));
        prop_assert_eq!(den.leading_coeff(), Some(&rational(1)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(r in ring(), x in ratfunc(), y in ratfunc()) {
        let (ex, ey) = (x.evaluate(&r), y.evaluate(&r));
        prop_assume!(ex.is_ok() && ey.is_ok());
        let (ex, ey) = (ex.unwrap(), ey.unwrap());
        prop_assert_eq!((x.clone() * &y).evaluate(&r).unwrap(), ex.clone() * &ey);
        prop_assert_eq!((x.clone() + &y).evaluate(&r).unwrap(), ex.clone() + &ey);
        prop_assert_eq!((x.clone() - &y).evaluate(&r).unwrap(), ex - &ey);
    }

    #[test]
    fn ring_constants_agree_under_evaluation(r in ring(), e in -12i64..=12) {
        let s = SymbolicRing;
        prop_assert_eq!(s.half_power(e).evaluate(&r).unwrap(), r.half_power(e));
        prop_assert_eq!(s.bracket(e).evaluate(&r).unwrap(), r.bracket(e));
        prop_assert_eq!(s.inv_q_minus_one().evaluate(&r).unwrap(), r.inv_q_minus_one());
    }

    #[test]
    fn bracket_recurrence(r in ring(), m in 0i64..=15) {
        prop_assert_eq!(r.bracket(m + 1), r.q() * &r.bracket(m) + &r.one());
        let s = SymbolicRing;
        prop_assert_eq!(s.bracket(m + 1), s.q() * &s.bracket(m) + &s.one());
    }

    #[test]
    fn bracket_negative_index(r in ring(), m in 1i64..=10) {
        prop_assert_eq!(r.bracket(-m), -(r.power(-m) * &r.bracket(m)));
    }

    #[test]
    fn gaussian_binomial_symmetric(n in 0i64..=8, k in 0i64..=8, q in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assume!(k <= n);
        prop_assert_eq!(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
    }
}

fn subspace(q: u64, n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(0..q as u8, n), 0..=n)
        .prop_map(move |vs| Subspace::span(q, n, &vs).unwrap())
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=5)
        .prop_flat_map(|(q, n)| (subspace(q, n), subspace(q, n), subspace(q, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dimension_law((u, v, _) in subspace_pair()) {
        let sum = u.span_sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
        prop_assert_eq!(u.meet_dim(&v).unwrap(), meet.dim());
    }

    #[test]
    fn modular_law((a, b, c) in subspace_pair()) {
        // Force a ⊆ c.
        let c = c.span_sum(&a).unwrap();
        let left = a.span_sum(&b.intersect(&c).unwrap()).unwrap();
        let right = a.span_sum(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonical_form_ignores_generators((u, v, _) in subspace_pair()) {
        // The same space reached two ways has one representation.
        let uv = u.span_sum(&v).unwrap();
        let vu = v.span_sum(&u).unwrap();
        prop_assert_eq!(&uv, &vu);
        let again = Subspace::span(uv.field_order() as u64, uv.ambient(), uv.basis()).unwrap();
        prop_assert_eq!(uv, again);
    }
}

fn sparse(r: QuadRing, n: usize) -> impl Strategy<Value = SparseOperator<QuadScalar>> {
    prop::collection::vec((0..n, 0..n, quad_in(r)), 0..2 * n).prop_map(move |es| SparseOperator::from_entries(n, es))
}

fn sparse_triple() -> impl Strategy<Value = [SparseOperator<QuadScalar>; 3]> {
    (ring(), 1usize..=6).prop_flat_map(|(r, n)| [sparse(r, n), sparse(r, n), sparse(r, n)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sparse_algebra([a, b, c] in sparse_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        prop_assert!((&a - &a).is_zero());
        for (_, _, v) in (&a * &b).entries() {
            prop_assert!(!v.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn geometry_counts(q in prop::sample::select(vec![2u64, 3]), h in 2usize..=3, k in 1usize..=2) {
        prop_assume!(h > k);
        let g = GeometryIndex::build(q, h, k, None).unwrap();
        let mut sizes = vec![0usize; h + k + 1];
        for &(i, j) in g.weights() {
            sizes[i + j] += 1;
        }
        for (l, size) in sizes.iter().enumerate() {
            prop_assert_eq!(gaussian_binomial((h + k) as i64, l as i64, q).to_string(), size.to_string());
        }
        let covered: usize = g.strata().values().map(Vec::len).sum();
        prop_assert_eq!(covered, g.len());
    }

    #[test]
    fn module_dimension_and_weights(h in 2usize..=4, k in 1usize..=3, pick in any::<prop::sample::Index>()) {
        prop_assume!(h > k);
        let types = enumerate_types(h, k).unwrap();
        let ty = *pick.get(&types);
        let m = AbstractModule::build(ty, QuadRing::new(2).unwrap());
        let width = (ty.k - ty.rho - 2 * ty.alpha + 1) * (ty.h - ty.rho - 2 * ty.beta + 1);
        prop_assert_eq!(m.dim() as i64, width);
        prop_assert_eq!(m.basis.len(), m.basis.iter().collect::<std::collections::BTreeSet<_>>().len());
        prop_assert!(m.ops.a_star.is_diagonal());
    }
}
