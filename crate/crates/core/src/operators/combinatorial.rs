use crate::error::Result;
use crate::geometry::{cover_classify, Cover, GeometryIndex};
use crate::scalar::ScalarRing;
use crate::sparse::SparseOperator;

/// The 0/1 matrices defined directly from the incidence structure, without
/// reference to the generators.
#[derive(Clone, Debug)]
pub struct CombinatorialOperators<S> {
    pub f0: SparseOperator<S>,
    pub f_plus: SparseOperator<S>,
    pub f_minus: SparseOperator<S>,
    pub f: SparseOperator<S>,
    pub r: SparseOperator<S>,
    pub l: SparseOperator<S>,
    pub a: SparseOperator<S>,
}

/// Build the combinatorial matrices from literal subspace arithmetic.
///
/// Every nonzero entry of these matrices sits at a pair `u != v` of equal
/// dimension whose intersection is covered by both, so candidates are drawn
/// from pairs sharing a lower cover; each candidate is then judged by
/// computing `u ∩ v` and `u + v` and classifying the covers with respect to
/// `y` from scratch.
pub fn build_combinatorial<R: ScalarRing>(g: &GeometryIndex, ring: &R) -> Result<CombinatorialOperators<R::Elem>> {
    let n = g.len();
    let y = g.y();
    let mut f0 = Vec::new();
    let mut f_plus = Vec::new();
    let mut f_minus = Vec::new();
    let mut f = Vec::new();
    let mut r = Vec::new();
    let mut l = Vec::new();
    let mut a = Vec::new();

    for u in 0..n {
        let mut candidates: Vec<usize> = g
            .slash_covers_of(u)
            .iter()
            .chain(g.backslash_covers_of(u))
            .flat_map(|&w| g.covered_by(w))
            .filter(|&v| v != u)
            .collect();
        candidates.sort_unstable();
        candidates.dedup();

        let su = g.element(u);
        for v in candidates {
            let sv = g.element(v);
            let meet = su.intersect(sv)?;
            let join = su.span_sum(sv)?;
            let u_over = cover_classify(&meet, su, y)?;
            let v_over = cover_classify(&meet, sv, y)?;
            let join_u = cover_classify(su, &join, y)?;
            let join_v = cover_classify(sv, &join, y)?;
            if u_over == Cover::None || v_over == Cover::None {
                continue;
            }
            a.push((u, v));
            if g.weight(u).0 == g.weight(v).0 {
                f.push((u, v));
            }
            if join_u == Cover::Slash
                && join_v == Cover::Slash
                && u_over == Cover::Backslash
                && v_over == Cover::Backslash
            {
                f0.push((u, v));
            }
            if join_u == Cover::Backslash && join_v == Cover::Backslash {
                f_plus.push((u, v));
            }
            if u_over == Cover::Slash && v_over == Cover::Slash {
                f_minus.push((u, v));
            }
            if u_over == Cover::Backslash && v_over == Cover::Slash {
                r.push((u, v));
            }
            if u_over == Cover::Slash && v_over == Cover::Backslash {
                l.push((u, v));
            }
        }
    }

    let build = |pairs: Vec<(usize, usize)>| {
        SparseOperator::from_entries(n, pairs.into_iter().map(|(u, v)| (u, v, ring.one())))
    };
    Ok(CombinatorialOperators {
        f0: build(f0),
        f_plus: build(f_plus),
        f_minus: build(f_minus),
        f: build(f),
        r: build(r),
        l: build(l),
        a: build(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadRing;

    #[test]
    fn symmetric_and_partitioned() {
        let g = GeometryIndex::build(2, 2, 1, None).unwrap();
        let ring = QuadRing::new(2).unwrap();
        let c = build_combinatorial(&g, &ring).unwrap();
        assert_eq!(c.a, c.a.transpose());
        assert_eq!(c.f, c.f.transpose());
        assert_eq!(c.r, c.l.transpose());
        assert_eq!(c.a, &(&c.r + &c.l) + &c.f);
        assert_eq!(c.f, &(&c.f0 + &c.f_plus) + &c.f_minus);
        assert!(!c.f0.is_zero() && !c.f_plus.is_zero());
        // With k = 1 nothing has two distinct slash covers.
        assert!(c.f_minus.is_zero());
    }
}
