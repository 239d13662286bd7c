use serde::Serialize;

use super::{AbstractModule, ModuleType};
use crate::scalar::ScalarRing;
use crate::sparse::SparseOperator;

/// One eigenvalue: the closed form, and the value read off the matrix
/// (`None` when the weight space is not invariant).
#[derive(Clone, Debug, Serialize)]
pub struct EigenEntry<S> {
    pub name: &'static str,
    pub formula: S,
    pub matrix: Option<S>,
}

impl<S: PartialEq> EigenEntry<S> {
    pub fn agrees(&self) -> bool {
        self.matrix.as_ref() == Some(&self.formula)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenRow<S> {
    pub i: usize,
    pub j: usize,
    pub entries: Vec<EigenEntry<S>>,
}

/// `(c_{i,j}, b_{i,j})`, where `R w_{i+1,j-1} = c_{i,j} w_{i,j}` and
/// `L w_{i-1,j+1} = b_{i,j} w_{i,j}`; both zero off the support.
pub fn bc_coefficients<R: ScalarRing>(ty: &ModuleType, i: i64, j: i64, ring: &R) -> (R::Elem, R::Elem) {
    if !ty.contains(i, j) {
        return (ring.zero(), ring.zero());
    }
    let (a, b, r, h, k) = (ty.alpha, ty.beta, ty.rho, ty.h, ty.k);
    let c = ring.power(r + a + b) * ring.bracket(j - r - b) * ring.bracket(k - r - a - i);
    let bb = ring.power(k - r - i + j + 1) * ring.bracket(i - a) * ring.bracket(h - b - j);
    (c, bb)
}

/// The scalar by which `op` acts on basis vector `p`, if `w_p` is an eigenvector.
fn eigenvalue<R: ScalarRing>(op: &SparseOperator<R::Elem>, p: usize, ring: &R) -> Option<R::Elem> {
    let stray = (0..op.dim()).any(|row| row != p && op.get(row, p).is_some());
    (!stray).then(|| op.get(p, p).cloned().unwrap_or_else(|| ring.zero()))
}

/// Closed-form eigenvalues on every weight space, each paired with the value
/// read off the module's matrices.
pub fn eigen_tables<R: ScalarRing>(m: &AbstractModule<R>) -> Vec<EigenRow<R::Elem>> {
    let ops = &m.ops;
    let ring = &ops.ring;
    let ty = &m.ty;
    let (a, b, r, h, k) = (ty.alpha, ty.beta, ty.rho, ty.h, ty.k);
    let q = || ring.q();
    let br = |x: i64| ring.bracket(x);
    let pw = |x: i64| ring.power(x);
    let c = ring.inv_q_minus_one();
    let [o0, o1, o2] = ty.omega_scalars(ring);
    let g = &ops.gens;

    let l1r1 = &g.l1 * &g.r1;
    let r1l1 = &g.r1 * &g.l1;
    let l2r2 = &g.l2 * &g.r2;
    let r2l2 = &g.r2 * &g.l2;

    m.basis
        .iter()
        .enumerate()
        .map(|(p, &(iu, ju))| {
            let (i, j) = (iu as i64, ju as i64);
            let l = i + j;
            let a0 = pw(k - i) * br(j - r) - br(j);
            let ap = pw(k - i) * (pw(b + 1) * br(j - r - b) * br(h - b - j) - br(b));
            let am = pw(j) * (pw(a + 1) * br(i - a) * br(k - r - a - i) - br(a));
            let y = pw(h + k - l) + pw(l) - ring.one() + pw(-1);
            let qp1 = q() + ring.one();
            let p_val = q() * &c * &c * (y.clone() * &y - pw(h + k - 2) * &qp1 * &qp1);
            let omega = -(pw(h + k - r - b) + pw(k + b - 1) + pw(k + l - r - a) + pw(l + a - 1));
            let g_val = c.clone()
                * ((pw(k - r - a + 1) + pw(a)) * (pw(l - 1) * br(h + k - l) - pw(l) * br(l))
                    - (pw(h - r - b + 1) + pw(b)) * (pw(k) * br(h + k - l) - pw(k - 1) * br(l)));
            let g_star = pw(k + l - r - 1) * &qp1;
            let (c_ij, b_ij) = bc_coefficients(ty, i, j, ring);

            let entry = |name, formula, op: &SparseOperator<R::Elem>| EigenEntry {
                name,
                formula,
                matrix: eigenvalue(op, p, ring),
            };
            let off_diagonal = |name, formula, op: &SparseOperator<R::Elem>, src: Option<usize>| EigenEntry {
                name,
                formula,
                matrix: Some(src.and_then(|s| op.get(p, s).cloned()).unwrap_or_else(|| ring.zero())),
            };
            let entries = vec![
                entry("L1R1", pw(a + j) * br(i - a + 1) * br(k - r - a - i), &l1r1),
                entry("R1L1", pw(a + j) * br(i - a) * br(k - r - a - i + 1), &r1l1),
                entry("L2R2", pw(k + b - i) * br(j - r - b + 1) * br(h - b - j), &l2r2),
                entry("R2L2", pw(k + b - i) * br(j - r - b) * br(h - b - j + 1), &r2l2),
                entry("a0", a0.clone(), &ops.fm.f0),
                entry("a+", ap.clone(), &ops.fm.f_plus),
                entry("a-", am.clone(), &ops.fm.f_minus),
                EigenEntry {
                    name: "a",
                    formula: a0 + &ap + &am,
                    matrix: Some(ops.a.get(p, p).cloned().unwrap_or_else(|| ring.zero())),
                },
                off_diagonal("c", c_ij, &ops.r, m.index_of(iu + 1, ju.wrapping_sub(1))),
                off_diagonal(
                    "b",
                    b_ij,
                    &ops.l,
                    iu.checked_sub(1).and_then(|i1| m.index_of(i1, ju + 1)),
                ),
                entry("K1", ring.half_power(k - 2 * i), &g.k1),
                entry("K2", ring.half_power(2 * j - h), &g.k2),
                entry("A*", pw(i), &ops.a_star),
                entry("Omega0", o0.clone(), &ops.centrals.omega0),
                entry("Omega1", o1.clone(), &ops.centrals.omega1),
                entry("Omega2", o2.clone(), &ops.centrals.omega2),
                entry("Y", y, &ops.aw.y),
                entry("P", p_val, &ops.aw.p),
                entry("Omega", omega, &ops.aw.omega),
                entry("G", g_val, &ops.aw.g),
                entry("G*", g_star, &ops.aw.g_star),
            ];
            EigenRow { i: iu, j: ju, entries }
        })
        .collect()
}
