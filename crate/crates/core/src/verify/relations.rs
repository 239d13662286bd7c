use num_bigint::BigInt;

use super::{Subject, Witness};
use crate::geometry::GeometryIndex;
use crate::operators::OperatorSet;
use crate::scalar::{gaussian_binomial, Field, ScalarRing};
use crate::sparse::SparseOperator;

type Op<R> = SparseOperator<<R as ScalarRing>::Elem>;

struct Ctx<'a, R: ScalarRing> {
    ring: &'a R,
    h: i64,
    k: i64,
    n: usize,
}

impl<'a, R: ScalarRing> Ctx<'a, R> {
    fn new(ops: &'a OperatorSet<R>) -> Self {
        Ctx {
            ring: &ops.ring,
            h: ops.h as i64,
            k: ops.k as i64,
            n: ops.dim(),
        }
    }

    fn hp(&self, e: i64) -> R::Elem {
        self.ring.half_power(e)
    }

    fn q(&self) -> R::Elem {
        self.ring.q()
    }

    fn one(&self) -> R::Elem {
        self.ring.one()
    }

    fn c(&self) -> R::Elem {
        self.ring.inv_q_minus_one()
    }

    fn qp1(&self) -> R::Elem {
        self.q() + self.one()
    }

    fn prod(&self, factors: &[&Op<R>]) -> Op<R> {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, f| &acc * *f)
    }

    fn lin(&self, terms: &[(R::Elem, &Op<R>)]) -> Op<R> {
        SparseOperator::combination(self.n, terms)
    }
}

fn witness<S: Field>(residual: &SparseOperator<S>) -> Option<Witness> {
    residual.first_nonzero().map(|(row, col, x)| Witness {
        row,
        col,
        residual: x.to_string(),
    })
}

fn diff<S: Field>(lhs: &SparseOperator<S>, rhs: &SparseOperator<S>) -> Option<Witness> {
    witness(&(lhs - rhs))
}

fn commutes<S: Field>(x: &SparseOperator<S>, y: &SparseOperator<S>) -> Option<Witness> {
    witness(&x.commutator(y))
}

/// First entry of `op` at a position not allowed by the weight shifts.
fn support<S: Field>(op: &SparseOperator<S>, weights: &[(usize, usize)], shifts: &[(i64, i64)]) -> Option<Witness> {
    op.first_outside(|row, col| {
        let (ir, jr) = weights[row];
        let (ic, jc) = weights[col];
        shifts
            .iter()
            .any(|&(di, dj)| ir as i64 == ic as i64 + di && jr as i64 == jc as i64 + dj)
    })
    .map(|(row, col, x)| Witness {
        row,
        col,
        residual: x.to_string(),
    })
}

/// Residual of `K1 L1 - coeff * L1 K1`; zero exactly when `coeff = q`.
pub fn k1l1_residual<R: ScalarRing>(ops: &OperatorSet<R>, coeff: &R::Elem) -> SparseOperator<R::Elem> {
    let g = &ops.gens;
    let lhs = &g.k1 * &g.l1;
    let rhs = (&g.l1 * &g.k1).scale(coeff);
    &lhs - &rhs
}

/// Residual of the first cubic relation with `q + q^{-1}` replaced by `coeff`
/// and `A` replaced by `a`.
pub fn askey1_residual<R: ScalarRing>(
    ops: &OperatorSet<R>,
    a: &SparseOperator<R::Elem>,
    coeff: &R::Elem,
) -> SparseOperator<R::Elem> {
    let s = &ops.a_star;
    let n = ops.dim();
    let one = ops.ring.one();
    let aa = a * a;
    let a_s = a * s;
    let s_a = s * a;
    let lhs = SparseOperator::combination(
        n,
        &[
            (one.clone(), &(&aa * s)),
            (-coeff.clone(), &(&a_s * a)),
            (one.clone(), &(s * &aa)),
            (-one.clone(), &(&ops.aw.y * &(&a_s + &s_a))),
            (-one.clone(), &(&ops.aw.p * s)),
        ],
    );
    let rhs = &(&ops.aw.omega * a) + &ops.aw.g;
    &lhs - &rhs
}

fn askey2_residual<R: ScalarRing>(ops: &OperatorSet<R>) -> SparseOperator<R::Elem> {
    let (a, s) = (&ops.a, &ops.a_star);
    let n = ops.dim();
    let one = ops.ring.one();
    let coeff = ops.ring.q() + ops.ring.power(-1);
    let ss = s * s;
    let lhs = SparseOperator::combination(
        n,
        &[
            (one.clone(), &(&ss * a)),
            (-coeff, &(&(s * a) * s)),
            (one.clone(), &(a * &ss)),
        ],
    );
    let rhs = &(&(&ops.aw.y * &ss) + &(&ops.aw.omega * s)) + &ops.aw.g_star;
    &lhs - &rhs
}

/// Compare a per-element count against its closed form.
fn count_check<F, G>(g: &GeometryIndex, observed: F, expected: G) -> Option<Witness>
where
    F: Fn(usize) -> usize,
    G: Fn(usize, usize) -> BigInt,
{
    (0..g.len()).find_map(|u| {
        let (i, j) = g.weight(u);
        let (got, want) = (BigInt::from(observed(u)), expected(i, j));
        (got != want).then(|| Witness {
            row: u,
            col: u,
            residual: format!("{got} - {want}"),
        })
    })
}

fn q_bracket(m: i64, q: u64) -> BigInt {
    if m <= 0 {
        BigInt::from(0)
    } else {
        crate::scalar::bracket_int(m as u32, q)
    }
}

fn counts(id: &str, g: &GeometryIndex) -> Option<Witness> {
    let q = g.q();
    let (h, k) = (g.h() as i64, g.k() as i64);
    let qp = |e: i64| BigInt::from(q).pow(e as u32);
    match id {
        "counts.slash_covers" => count_check(
            g,
            |u| g.slash_covers_of(u).len(),
            |i, j| qp(j as i64) * q_bracket(i as i64, q),
        ),
        "counts.backslash_covers" => count_check(g, |u| g.backslash_covers_of(u).len(), |_, j| q_bracket(j as i64, q)),
        "counts.slash_covered_by" => count_check(g, |u| g.slash_covered_by(u).len(), |i, _| q_bracket(k - i as i64, q)),
        "counts.backslash_covered_by" => count_check(
            g,
            |u| g.backslash_covered_by(u).len(),
            |i, j| qp(k - i as i64) * q_bracket(h - j as i64, q),
        ),
        "counts.level_sizes" => (0..=(h + k) as usize).find_map(|l| {
            let got = BigInt::from(g.level(l).count());
            let want = gaussian_binomial(h + k, l as i64, q);
            (got != want).then(|| Witness {
                row: l,
                col: l,
                residual: format!("{got} - {want}"),
            })
        }),
        _ => unreachable!("unknown counting relation {id}"),
    }
}

/// Evaluate one registered relation. Geometry-scoped ids are only called
/// when the subject carries a geometry.
pub(super) fn evaluate<R: ScalarRing>(id: &str, subject: &Subject<'_, R>) -> Option<Witness> {
    let ops = subject.ops;
    let x = Ctx::new(ops);
    let g = &ops.gens;
    let (h, k) = (x.h, x.k);
    let c = x.c();
    let one = x.one();
    let id_op = &g.identity;
    let w = &ops.weights;

    if id.starts_with("counts.") {
        let (geo, _) = subject.geometry.expect("counting relations need the geometry");
        return counts(id, geo);
    }

    match id {
        "generators.k1l1" => diff(&x.prod(&[&g.k1, &g.l1]), &x.prod(&[&g.l1, &g.k1]).scale(&x.q())),
        "generators.k1l2" => diff(&x.prod(&[&g.k1, &g.l2]), &x.prod(&[&g.l2, &g.k1])),
        "generators.k1r1" => diff(&x.prod(&[&g.k1, &g.r1]).scale(&x.q()), &x.prod(&[&g.r1, &g.k1])),
        "generators.k1r2" => diff(&x.prod(&[&g.k1, &g.r2]), &x.prod(&[&g.r2, &g.k1])),
        "generators.k2l1" => diff(&x.prod(&[&g.k2, &g.l1]), &x.prod(&[&g.l1, &g.k2])),
        "generators.k2l2" => diff(&x.prod(&[&g.k2, &g.l2]).scale(&x.q()), &x.prod(&[&g.l2, &g.k2])),
        "generators.k2r1" => diff(&x.prod(&[&g.k2, &g.r1]), &x.prod(&[&g.r1, &g.k2])),
        "generators.k2r2" => diff(&x.prod(&[&g.k2, &g.r2]), &x.prod(&[&g.r2, &g.k2]).scale(&x.q())),
        "generators.l1r2" => diff(&x.prod(&[&g.l1, &g.r2]), &x.prod(&[&g.r2, &g.l1])),
        "generators.l2r1" => diff(&x.prod(&[&g.l2, &g.r1]), &x.prod(&[&g.r1, &g.l2])),
        "generators.l1l2" => diff(&x.prod(&[&g.l1, &g.l2]).scale(&x.q()), &x.prod(&[&g.l2, &g.l1])),
        "generators.r1r2" => diff(&x.prod(&[&g.r1, &g.r2]), &x.prod(&[&g.r2, &g.r1]).scale(&x.q())),
        "generators.cubic_r1" => {
            let lhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.r1, &g.r1, &g.l1])),
                (-x.qp1(), &x.prod(&[&g.r1, &g.l1, &g.r1])),
                (x.q(), &x.prod(&[&g.l1, &g.r1, &g.r1])),
            ]);
            let rhs = x.prod(&[&g.k1_inv, &g.k2, &g.r1]).scale(&-(x.hp(h + k - 2) * x.qp1()));
            diff(&lhs, &rhs)
        }
        "generators.cubic_r2" => {
            let lhs = x.lin(&[
                (x.q(), &x.prod(&[&g.r2, &g.r2, &g.l2])),
                (-x.qp1(), &x.prod(&[&g.r2, &g.l2, &g.r2])),
                (one.clone(), &x.prod(&[&g.l2, &g.r2, &g.r2])),
            ]);
            let rhs = x.prod(&[&g.k1, &g.k2_inv, &g.r2]).scale(&-(x.hp(h + k) * x.qp1()));
            diff(&lhs, &rhs)
        }
        "generators.cubic_l1" => {
            let lhs = x.lin(&[
                (x.q(), &x.prod(&[&g.l1, &g.l1, &g.r1])),
                (-x.qp1(), &x.prod(&[&g.l1, &g.r1, &g.l1])),
                (one.clone(), &x.prod(&[&g.r1, &g.l1, &g.l1])),
            ]);
            let rhs = x.prod(&[&g.k1_inv, &g.k2, &g.l1]).scale(&-(x.hp(h + k) * x.qp1()));
            diff(&lhs, &rhs)
        }
        "generators.cubic_l2" => {
            let lhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.l2, &g.l2, &g.r2])),
                (-x.qp1(), &x.prod(&[&g.l2, &g.r2, &g.l2])),
                (x.q(), &x.prod(&[&g.r2, &g.l2, &g.l2])),
            ]);
            let rhs = x.prod(&[&g.k1, &g.k2_inv, &g.l2]).scale(&-(x.hp(h + k - 2) * x.qp1()));
            diff(&lhs, &rhs)
        }
        "generators.mixed" => {
            let lhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.l1, &g.r1])),
                (-one.clone(), &x.prod(&[&g.r1, &g.l1])),
                (one.clone(), &x.prod(&[&g.l2, &g.r2])),
                (-one.clone(), &x.prod(&[&g.r2, &g.l2])),
            ]);
            let coeff = x.hp(h + k) * &c;
            let rhs = x.lin(&[
                (coeff.clone(), &x.prod(&[&g.k1, &g.k2_inv])),
                (-coeff, &x.prod(&[&g.k1_inv, &g.k2])),
            ]);
            diff(&lhs, &rhs)
        }

        "f.f0_combinatorial" => diff(&comb(subject).f0, &ops.fm.f0),
        "f.fplus_combinatorial" => diff(&comb(subject).f_plus, &ops.fm.f_plus),
        "f.fminus_combinatorial" => diff(&comb(subject).f_minus, &ops.fm.f_minus),
        "f.f_combinatorial" => diff(&comb(subject).f, &ops.fm.f),
        "f.r_combinatorial" => diff(&comb(subject).r, &ops.r),
        "f.l_combinatorial" => diff(&comb(subject).l, &ops.l),
        "f.a_combinatorial" => diff(&comb(subject).a, &ops.a),
        "f.r_transpose" => diff(&ops.r, &ops.l.transpose()),
        "f.f0_second_form" => {
            let rhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.r2, &g.l2])),
                (-one.clone(), &x.prod(&[&g.l2, &g.r2])),
                (c.clone() * x.hp(h + k), &x.prod(&[&g.k1, &g.k2_inv])),
                (-(c.clone() * x.hp(k)), &g.k1),
                (-(c.clone() * x.hp(h)), &g.k2),
                (c.clone(), id_op),
            ]);
            diff(&ops.fm.f0, &rhs)
        }
        "f.back_l1r1" => {
            let rhs = x.lin(&[
                (one.clone(), &ops.fm.f0),
                (one.clone(), &ops.fm.f_minus),
                (c.clone() * x.hp(k), &g.k1),
                (-c.clone(), id_op),
            ]);
            diff(&x.prod(&[&g.l1, &g.r1]), &rhs)
        }
        "f.back_r1l1" => {
            let pre = x.hp(h) * &c;
            let rhs = x.lin(&[
                (one.clone(), &ops.fm.f_minus),
                (pre.clone() * x.hp(k), &x.prod(&[&g.k1_inv, &g.k2])),
                (-pre, &g.k2),
            ]);
            diff(&x.prod(&[&g.r1, &g.l1]), &rhs)
        }
        "f.back_l2r2" => {
            let pre = x.hp(k) * &c;
            let rhs = x.lin(&[
                (one.clone(), &ops.fm.f_plus),
                (pre.clone() * x.hp(h), &x.prod(&[&g.k1, &g.k2_inv])),
                (-pre, &g.k1),
            ]);
            diff(&x.prod(&[&g.l2, &g.r2]), &rhs)
        }
        "f.back_r2l2" => {
            let rhs = x.lin(&[
                (one.clone(), &ops.fm.f0),
                (one.clone(), &ops.fm.f_plus),
                (c.clone() * x.hp(h), &g.k2),
                (-c.clone(), id_op),
            ]);
            diff(&x.prod(&[&g.r2, &g.l2]), &rhs)
        }
        "f.f_first_form" => {
            let rhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.l1, &g.r1])),
                (one.clone(), &x.prod(&[&g.l2, &g.r2])),
                (-(c.clone() * x.hp(h + k)), &x.prod(&[&g.k1, &g.k2_inv])),
                (c.clone(), id_op),
            ]);
            diff(&ops.fm.f, &rhs)
        }
        "f.f_second_form" => {
            let rhs = x.lin(&[
                (one.clone(), &x.prod(&[&g.r1, &g.l1])),
                (one.clone(), &x.prod(&[&g.r2, &g.l2])),
                (-(c.clone() * x.hp(h + k)), &x.prod(&[&g.k1_inv, &g.k2])),
                (c.clone(), id_op),
            ]);
            diff(&ops.fm.f, &rhs)
        }
        "f.commute_f0_fplus" => commutes(&ops.fm.f0, &ops.fm.f_plus),
        "f.commute_f0_fminus" => commutes(&ops.fm.f0, &ops.fm.f_minus),
        "f.commute_fplus_fminus" => commutes(&ops.fm.f_plus, &ops.fm.f_minus),
        "f.r_second_form" => diff(&ops.r, &x.prod(&[&g.r2, &g.l1])),
        "f.l_second_form" => diff(&ops.l, &x.prod(&[&g.r1, &g.l2])),
        "f.a_first_form" => {
            let l_sum = &g.l1 + &g.l2;
            let r_sum = &g.r1 + &g.r2;
            let rhs = x.lin(&[
                (one.clone(), &(&l_sum * &r_sum)),
                (-(c.clone() * x.hp(h + k)), &x.prod(&[&g.k1, &g.k2_inv])),
                (c.clone(), id_op),
            ]);
            diff(&ops.a, &rhs)
        }
        "f.a_second_form" => {
            let l_sum = &g.l1 + &g.l2;
            let r_sum = &g.r1 + &g.r2;
            let rhs = x.lin(&[
                (one.clone(), &(&r_sum * &l_sum)),
                (-(c.clone() * x.hp(h + k)), &x.prod(&[&g.k1_inv, &g.k2])),
                (c.clone(), id_op),
            ]);
            diff(&ops.a, &rhs)
        }

        id if id.starts_with("center.omega") && !id.ends_with("weight_preserving") => {
            let rest = &id["center.omega".len()..];
            let (t, gen) = rest.split_once('_').expect("id has the form center.omegaT_X");
            let omega = match t {
                "0" => &ops.centrals.omega0,
                "1" => &ops.centrals.omega1,
                "2" => &ops.centrals.omega2,
                _ => unreachable!("unknown central element in {id}"),
            };
            let other = match gen {
                "l1" => &g.l1,
                "l2" => &g.l2,
                "r1" => &g.r1,
                "r2" => &g.r2,
                "k1" => &g.k1,
                "k2" => &g.k2,
                _ => unreachable!("unknown generator in {id}"),
            };
            commutes(omega, other)
        }
        "center.f0_from_omega" => {
            let rhs = x.lin(&[
                (c.clone() * x.hp(h + k), &x.prod(&[&ops.centrals.omega0, &g.k1, &g.k2])),
                (-(c.clone() * x.hp(k)), &g.k1),
                (-(c.clone() * x.hp(h)), &g.k2),
                (c.clone(), id_op),
            ]);
            diff(&ops.fm.f0, &rhs)
        }
        "center.fplus_from_omega" => {
            let inner = x.lin(&[
                (c.clone() * x.hp(k), &ops.centrals.omega2),
                (
                    -(c.clone() * &c * x.hp(h + k + 2)),
                    &x.prod(&[&ops.centrals.omega0, &g.k2]),
                ),
                (-(c.clone() * &c * x.hp(h + k + 2)), &g.k2_inv),
                (c.clone() * &c * x.ring.int(2) * x.hp(k + 2), id_op),
            ]);
            diff(&ops.fm.f_plus, &(&inner * &g.k1))
        }
        "center.fminus_from_omega" => {
            let inner = x.lin(&[
                (c.clone() * x.hp(h), &ops.centrals.omega1),
                (
                    -(c.clone() * &c * x.hp(h + k + 2)),
                    &x.prod(&[&ops.centrals.omega0, &g.k1]),
                ),
                (-(c.clone() * &c * x.hp(h + k + 2)), &g.k1_inv),
                (c.clone() * &c * x.ring.int(2) * x.hp(h + 2), id_op),
            ]);
            diff(&ops.fm.f_minus, &(&inner * &g.k2))
        }
        "center.omega0_weight_preserving" => support(&ops.centrals.omega0, w, &[(0, 0)]),
        "center.omega1_weight_preserving" => support(&ops.centrals.omega1, w, &[(0, 0)]),
        "center.omega2_weight_preserving" => support(&ops.centrals.omega2, w, &[(0, 0)]),

        "main.askey1" => witness(&askey1_residual(ops, &ops.a, &(x.q() + x.ring.power(-1)))),
        "main.askey2" => witness(&askey2_residual(ops)),
        "main.y_commutes_a" => commutes(&ops.aw.y, &ops.a),
        "main.y_commutes_astar" => commutes(&ops.aw.y, &ops.a_star),
        "main.p_commutes_a" => commutes(&ops.aw.p, &ops.a),
        "main.p_commutes_astar" => commutes(&ops.aw.p, &ops.a_star),
        "main.omega_commutes_a" => commutes(&ops.aw.omega, &ops.a),
        "main.omega_commutes_astar" => commutes(&ops.aw.omega, &ops.a_star),
        "main.g_commutes_a" => commutes(&ops.aw.g, &ops.a),
        "main.g_commutes_astar" => commutes(&ops.aw.g, &ops.a_star),
        "main.gstar_commutes_a" => commutes(&ops.aw.g_star, &ops.a),
        "main.gstar_commutes_astar" => commutes(&ops.aw.g_star, &ops.a_star),

        "structure.estar_orthogonal" => {
            let levels = &g.e_star_levels;
            levels.iter().enumerate().find_map(|(l, el)| {
                levels.iter().enumerate().find_map(|(m, em)| {
                    let expected = if l == m { el.clone() } else { SparseOperator::zero(x.n) };
                    diff(&(el * em), &expected)
                })
            })
        }
        "structure.estar_sum" => {
            let sum = g
                .e_star_levels
                .iter()
                .fold(SparseOperator::zero(x.n), |acc, e| &acc + e);
            diff(&sum, id_op)
        }
        "structure.estar_levels" => g.e_star_levels.iter().enumerate().find_map(|(l, el)| {
            let sum = g
                .e_star
                .iter()
                .filter(|((i, j), _)| i + j == l)
                .fold(SparseOperator::zero(x.n), |acc, (_, e)| &acc + e);
            diff(el, &sum)
        }),
        "structure.astar_diagonal" => {
            let expected = SparseOperator::diagonal(w.iter().map(|&(i, _)| x.ring.power(i as i64)).collect());
            diff(&ops.a_star, &expected)
        }
        "structure.support_l1" => support(&g.l1, w, &[(-1, 0)]),
        "structure.support_l2" => support(&g.l2, w, &[(0, -1)]),
        "structure.support_r1" => support(&g.r1, w, &[(1, 0)]),
        "structure.support_r2" => support(&g.r2, w, &[(0, 1)]),
        "structure.support_r" => support(&ops.r, w, &[(-1, 1)]),
        "structure.support_l" => support(&ops.l, w, &[(1, -1)]),
        "structure.support_f0" => support(&ops.fm.f0, w, &[(0, 0)]),
        "structure.support_fplus" => support(&ops.fm.f_plus, w, &[(0, 0)]),
        "structure.support_fminus" => support(&ops.fm.f_minus, w, &[(0, 0)]),
        "structure.support_f" => support(&ops.fm.f, w, &[(0, 0)]),
        "structure.support_a" => support(&ops.a, w, &[(1, -1), (0, 0), (-1, 1)]),

        _ => unreachable!("relation {id} has no evaluator"),
    }
}

fn comb<'a, R: ScalarRing>(subject: &Subject<'a, R>) -> &'a crate::operators::CombinatorialOperators<R::Elem> {
    subject.geometry.expect("combinatorial relations need the geometry").1
}
