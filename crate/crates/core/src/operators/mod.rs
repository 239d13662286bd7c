//! The operator algebra: generators `K1^{±1}, K2^{±1}, L1, L2, R1, R2`, the
//! weight projections `E*`, and everything derived from them algebraically
//! (`F^0, F^+, F^-, F, R, L, A, A*`, the central elements `Ω0, Ω1, Ω2`, and
//! the coefficients `Y, P, Ω, G, G*` of the Askey-Wilson type relations).
//!
//! The algebraic constructions only need the generators and the `(i, j)`
//! weight of every basis vector, so they serve both the standard module on
//! the projective geometry and the abstract irreducible modules.

mod combinatorial;

use std::collections::BTreeMap;

pub use combinatorial::{build_combinatorial, CombinatorialOperators};

use crate::error::{Error, Result};
use crate::geometry::GeometryIndex;
use crate::scalar::{RingMode, ScalarRing};
use crate::sparse::SparseOperator;

/// Weight projections and the generators of the algebra.
#[derive(Clone, Debug)]
pub struct Generators<S> {
    pub identity: SparseOperator<S>,
    /// `E*_l` for `0 <= l <= h + k`.
    pub e_star_levels: Vec<SparseOperator<S>>,
    /// `E*_{i,j}` for `0 <= i <= k`, `0 <= j <= h` (zero when the stratum is empty).
    pub e_star: BTreeMap<(usize, usize), SparseOperator<S>>,
    pub k1: SparseOperator<S>,
    pub k1_inv: SparseOperator<S>,
    pub k2: SparseOperator<S>,
    pub k2_inv: SparseOperator<S>,
    pub l1: SparseOperator<S>,
    pub l2: SparseOperator<S>,
    pub r1: SparseOperator<S>,
    pub r2: SparseOperator<S>,
}

#[derive(Clone, Debug)]
pub struct FMatrices<S> {
    pub f0: SparseOperator<S>,
    pub f_plus: SparseOperator<S>,
    pub f_minus: SparseOperator<S>,
    pub f: SparseOperator<S>,
}

#[derive(Clone, Debug)]
pub struct Centrals<S> {
    pub omega0: SparseOperator<S>,
    pub omega1: SparseOperator<S>,
    pub omega2: SparseOperator<S>,
}

/// Coefficients of the two cubic relations in `A` and `A*`.
#[derive(Clone, Debug)]
pub struct AwCoefficients<S> {
    pub y: SparseOperator<S>,
    pub p: SparseOperator<S>,
    pub omega: SparseOperator<S>,
    pub g: SparseOperator<S>,
    pub g_star: SparseOperator<S>,
}

/// Every named operator over one module, in one coefficient ring.
#[derive(Clone, Debug)]
pub struct OperatorSet<R: ScalarRing> {
    pub ring: R,
    pub h: usize,
    pub k: usize,
    /// `(i, j)` weight of each basis vector.
    pub weights: Vec<(usize, usize)>,
    pub gens: Generators<R::Elem>,
    pub fm: FMatrices<R::Elem>,
    pub r: SparseOperator<R::Elem>,
    pub l: SparseOperator<R::Elem>,
    pub a: SparseOperator<R::Elem>,
    pub a_star: SparseOperator<R::Elem>,
    pub centrals: Centrals<R::Elem>,
    pub aw: AwCoefficients<R::Elem>,
}

pub(crate) fn diag_by_weight<R, F>(ring: &R, weights: &[(usize, usize)], f: F) -> SparseOperator<R::Elem>
where
    R: ScalarRing,
    F: Fn(i64, i64) -> R::Elem,
{
    let _ = ring;
    SparseOperator::diagonal(weights.iter().map(|&(i, j)| f(i as i64, j as i64)).collect())
}

/// Identity, level projections, weight projections and `[K1, K1^-1, K2, K2^-1]`.
type WeightOperators<S> = (
    SparseOperator<S>,
    Vec<SparseOperator<S>>,
    BTreeMap<(usize, usize), SparseOperator<S>>,
    [SparseOperator<S>; 4],
);

/// Identity, `E*` projections and `K1^{±1}, K2^{±1}` from the weights alone.
fn weight_operators<R: ScalarRing>(
    ring: &R,
    h: usize,
    k: usize,
    weights: &[(usize, usize)],
) -> WeightOperators<R::Elem> {
    let (h_, k_) = (h as i64, k as i64);
    let indicator = |pred: &dyn Fn(usize, usize) -> bool| {
        SparseOperator::diagonal(
            weights
                .iter()
                .map(|&(i, j)| if pred(i, j) { ring.one() } else { ring.zero() })
                .collect(),
        )
    };
    let identity = SparseOperator::identity(weights.len(), ring.one());
    let levels = (0..=h + k).map(|l| indicator(&|i, j| i + j == l)).collect();
    let mut e_star = BTreeMap::new();
    for i in 0..=k {
        for j in 0..=h {
            e_star.insert((i, j), indicator(&|a, b| (a, b) == (i, j)));
        }
    }
    let k1 = diag_by_weight(ring, weights, |i, _| ring.half_power(k_ - 2 * i));
    let k1_inv = diag_by_weight(ring, weights, |i, _| ring.half_power(2 * i - k_));
    let k2 = diag_by_weight(ring, weights, |_, j| ring.half_power(2 * j - h_));
    let k2_inv = diag_by_weight(ring, weights, |_, j| ring.half_power(h_ - 2 * j));
    (identity, levels, e_star, [k1, k1_inv, k2, k2_inv])
}

impl<S: crate::scalar::Field> Generators<S> {
    pub fn dim(&self) -> usize {
        self.identity.dim()
    }
}

/// Assemble generators from weights and the matrices `[L1, L2, R1, R2]`.
pub fn generators_from_parts<R: ScalarRing>(
    ring: &R,
    h: usize,
    k: usize,
    weights: &[(usize, usize)],
    [l1, l2, r1, r2]: [SparseOperator<R::Elem>; 4],
) -> Generators<R::Elem> {
    let (identity, e_star_levels, e_star, [k1, k1_inv, k2, k2_inv]) = weight_operators(ring, h, k, weights);
    Generators {
        identity,
        e_star_levels,
        e_star,
        k1,
        k1_inv,
        k2,
        k2_inv,
        l1,
        l2,
        r1,
        r2,
    }
}

/// `(K1)_{uu} = q^{k/2-i}`, `(K2)_{uu} = q^{j-h/2}`, `(L1)_{uv} = 1` iff `v`
/// slash-covers `u`, `(L2)_{uv} = 1` iff `v` backslash-covers `u`,
/// `R1 = L1^t`, `R2 = L2^t`.
pub fn build_generators<R: ScalarRing>(g: &GeometryIndex, ring: &R) -> Result<Generators<R::Elem>> {
    if let RingMode::Numeric(q) = ring.mode() {
        if u64::from(q) != g.q() {
            return Err(Error::RingMismatch {
                left: q,
                right: g.q() as u32,
            });
        }
    }
    let n = g.len();
    let lowering = |lists: Vec<&[usize]>| {
        SparseOperator::from_entries(
            n,
            lists
                .into_iter()
                .enumerate()
                .flat_map(|(v, us)| us.iter().map(move |&u| (u, v, ring.one()))),
        )
    };
    let l1 = lowering((0..n).map(|v| g.slash_covers_of(v)).collect());
    let l2 = lowering((0..n).map(|v| g.backslash_covers_of(v)).collect());
    let r1 = l1.transpose();
    let r2 = l2.transpose();
    Ok(generators_from_parts(ring, g.h(), g.k(), g.weights(), [l1, l2, r1, r2]))
}

/// Shorthand used by the closed-form constructions below.
pub(crate) struct Coeffs<'a, R: ScalarRing> {
    pub ring: &'a R,
    pub h: i64,
    pub k: i64,
}

impl<R: ScalarRing> Coeffs<'_, R> {
    /// `q^{e/2}`.
    pub fn hp(&self, e: i64) -> R::Elem {
        self.ring.half_power(e)
    }

    pub fn q(&self) -> R::Elem {
        self.ring.q()
    }

    /// `(q - 1)^{-1}`.
    pub fn c(&self) -> R::Elem {
        self.ring.inv_q_minus_one()
    }

    pub fn q_minus_one(&self) -> R::Elem {
        self.q() - self.ring.one()
    }

    pub fn q_plus_one(&self) -> R::Elem {
        self.q() + self.ring.one()
    }
}

/// `F^0, F^+, F^-` from their expressions in the generators; `F` is their sum.
pub fn build_f_algebraic<R: ScalarRing>(
    ring: &R,
    h: usize,
    k: usize,
    gens: &Generators<R::Elem>,
) -> FMatrices<R::Elem> {
    let x = Coeffs {
        ring,
        h: h as i64,
        k: k as i64,
    };
    let n = gens.dim();
    let g = gens;
    let l1r1 = &g.l1 * &g.r1;
    let r1l1 = &g.r1 * &g.l1;
    let l2r2 = &g.l2 * &g.r2;
    let c = x.c();

    // F0 = L1R1 - R1L1 + (q-1)^{-1}(q^{(h+k)/2} K1^{-1}K2 - q^{k/2} K1 - q^{h/2} K2 + I)
    let k1inv_k2 = &g.k1_inv * &g.k2;
    let f0 = SparseOperator::combination(
        n,
        &[
            (ring.one(), &l1r1),
            (-ring.one(), &r1l1),
            (c.clone() * x.hp(x.h + x.k), &k1inv_k2),
            (-(c.clone() * x.hp(x.k)), &g.k1),
            (-(c.clone() * x.hp(x.h)), &g.k2),
            (c.clone(), &g.identity),
        ],
    );

    // F+ = L2R2 - q^{k/2}(q-1)^{-1} K1 (q^{h/2} K2^{-1} - I)
    let k1_k2inv = &g.k1 * &g.k2_inv;
    let f_plus = SparseOperator::combination(
        n,
        &[
            (ring.one(), &l2r2),
            (-(x.hp(x.k) * &c * x.hp(x.h)), &k1_k2inv),
            (x.hp(x.k) * &c, &g.k1),
        ],
    );

    // F- = R1L1 - q^{h/2}(q-1)^{-1} (q^{k/2} K1^{-1} - I) K2
    let f_minus = SparseOperator::combination(
        n,
        &[
            (ring.one(), &r1l1),
            (-(x.hp(x.h) * &c * x.hp(x.k)), &k1inv_k2),
            (x.hp(x.h) * &c, &g.k2),
        ],
    );

    let f = &(&f0 + &f_plus) + &f_minus;
    FMatrices { f0, f_plus, f_minus, f }
}

/// `R = L1 R2`, `L = L2 R1`, `A = R + L + F`, `A* = q^{k/2} K1^{-1}`.
#[allow(clippy::type_complexity)]
pub fn build_rl_a_astar<R: ScalarRing>(
    ring: &R,
    k: usize,
    gens: &Generators<R::Elem>,
    fm: &FMatrices<R::Elem>,
) -> (
    SparseOperator<R::Elem>,
    SparseOperator<R::Elem>,
    SparseOperator<R::Elem>,
    SparseOperator<R::Elem>,
) {
    let r = &gens.l1 * &gens.r2;
    let l = &gens.l2 * &gens.r1;
    let a = &(&r + &l) + &fm.f;
    let a_star = gens.k1_inv.scale(&ring.half_power(k as i64));
    (r, l, a, a_star)
}

/// The central elements `Ω0, Ω1, Ω2`.
pub fn build_centrals<R: ScalarRing>(
    ring: &R,
    h: usize,
    k: usize,
    gens: &Generators<R::Elem>,
    fm: &FMatrices<R::Elem>,
) -> Centrals<R::Elem> {
    let x = Coeffs {
        ring,
        h: h as i64,
        k: k as i64,
    };
    let (h, k) = (x.h, x.k);
    let n = gens.dim();
    let g = gens;
    let c = x.c();
    let one = ring.one();

    let k1inv_k2inv = &g.k1_inv * &g.k2_inv;
    let f0_k1inv_k2inv = &fm.f0 * &k1inv_k2inv;
    // Ω0 = q^{-(h+k)/2}((q-1) F0 K1^{-1}K2^{-1} + q^{h/2} K1^{-1} + q^{k/2} K2^{-1} - K1^{-1}K2^{-1})
    let pre = x.hp(-(h + k));
    let omega0 = SparseOperator::combination(
        n,
        &[
            (pre.clone() * x.q_minus_one(), &f0_k1inv_k2inv),
            (pre.clone() * x.hp(h), &g.k1_inv),
            (pre.clone() * x.hp(k), &g.k2_inv),
            (-pre, &k1inv_k2inv),
        ],
    );

    // Ω1 = q^{-h/2}(q F0 K2^{-1} + (q-1) F- K2^{-1}
    //        + (q^{k/2+1} K1K2^{-1} + q^{(h+k)/2+1} K1^{-1} - q K2^{-1})/(q-1)) - q/(q-1) I
    let f0_k2inv = &fm.f0 * &g.k2_inv;
    let fm_k2inv = &fm.f_minus * &g.k2_inv;
    let k1_k2inv = &g.k1 * &g.k2_inv;
    let pre = x.hp(-h);
    let omega1 = SparseOperator::combination(
        n,
        &[
            (pre.clone() * x.q(), &f0_k2inv),
            (pre.clone() * x.q_minus_one(), &fm_k2inv),
            (pre.clone() * &c * x.hp(k + 2), &k1_k2inv),
            (pre.clone() * &c * x.hp(h + k + 2), &g.k1_inv),
            (-(pre * &c * x.q()), &g.k2_inv),
            (-(x.q() * &c), &g.identity),
        ],
    );

    // Ω2 = q^{-k/2}(q F0 K1^{-1} + (q-1) F+ K1^{-1}
    //        + (q^{h/2+1} K1^{-1}K2 + q^{(h+k)/2+1} K2^{-1} - q K1^{-1})/(q-1)) - q/(q-1) I
    let f0_k1inv = &fm.f0 * &g.k1_inv;
    let fp_k1inv = &fm.f_plus * &g.k1_inv;
    let k1inv_k2 = &g.k1_inv * &g.k2;
    let pre = x.hp(-k);
    let omega2 = SparseOperator::combination(
        n,
        &[
            (pre.clone() * x.q(), &f0_k1inv),
            (pre.clone() * x.q_minus_one(), &fp_k1inv),
            (pre.clone() * &c * x.hp(h + 2), &k1inv_k2),
            (pre.clone() * &c * x.hp(h + k + 2), &g.k2_inv),
            (-(pre * &c * x.q()), &g.k1_inv),
            (-(x.q() * &c * &one), &g.identity),
        ],
    );

    Centrals { omega0, omega1, omega2 }
}

/// `Y, P, Ω, G, G*`.
pub fn build_aw_coefficients<R: ScalarRing>(
    ring: &R,
    h: usize,
    k: usize,
    gens: &Generators<R::Elem>,
    centrals: &Centrals<R::Elem>,
) -> AwCoefficients<R::Elem> {
    let x = Coeffs {
        ring,
        h: h as i64,
        k: k as i64,
    };
    let (h, k) = (x.h, x.k);
    let n = gens.dim();
    let g = gens;
    let c = x.c();
    let id = &g.identity;
    let (qm1, qp1) = (x.q_minus_one(), x.q_plus_one());

    let k1_k2inv = &g.k1 * &g.k2_inv;
    let k1inv_k2 = &g.k1_inv * &g.k2;
    let half_hk = x.hp(h + k);

    // Y = q^{(h+k)/2}(K1K2^{-1} + K1^{-1}K2) - q^{-1}(q-1) I
    let y = SparseOperator::combination(
        n,
        &[
            (half_hk.clone(), &k1_k2inv),
            (half_hk.clone(), &k1inv_k2),
            (-(ring.power(-1) * &qm1), id),
        ],
    );

    // P = q(q-1)^{-2}(Y^2 - q^{h+k-2}(q+1)^2 I)
    let y2 = &y * &y;
    let pc = x.q() * &c * &c;
    let p = SparseOperator::combination(
        n,
        &[(pc.clone(), &y2), (-(pc * ring.power(h + k - 2) * &qp1 * &qp1), id)],
    );

    // Ω = -q^{(h+k)/2-1} K1^{-1}K2 ((q-1)Ω1 + (q+1)I) - q^{k-1}((q-1)Ω2 + (q+1)I)
    let o1 = SparseOperator::combination(n, &[(qm1.clone(), &centrals.omega1), (qp1.clone(), id)]);
    let o2 = SparseOperator::combination(n, &[(qm1.clone(), &centrals.omega2), (qp1.clone(), id)]);
    let k1inv_k2_o1 = &k1inv_k2 * &o1;
    let omega = SparseOperator::combination(n, &[(-x.hp(h + k - 2), &k1inv_k2_o1), (-ring.power(k - 1), &o2)]);

    // G = -(q-1)^{-1}( q^{(h+k)/2-1}(q K1^{-1}K2 Y - q^{(h+k)/2}(q+1) I) Ω1
    //                 + q^{k-1}(q Y - q^{(h+k)/2}(q+1) K1^{-1}K2) Ω2 )
    //     - (q+1)(q-1)^{-2}( (q^{(h+k)/2} K1^{-1}K2 + q^k I) Y
    //                 - q^{(h+k)/2-1}(q+1)(q^k K1^{-1}K2 + q^{(h+k)/2} I) )
    let k1inv_k2_y = &k1inv_k2 * &y;
    let t1 = SparseOperator::combination(n, &[(x.q(), &k1inv_k2_y), (-(half_hk.clone() * &qp1), id)]);
    let t2 = SparseOperator::combination(n, &[(x.q(), &y), (-(half_hk.clone() * &qp1), &k1inv_k2)]);
    let t1_o1 = &t1 * &centrals.omega1;
    let t2_o2 = &t2 * &centrals.omega2;
    let t3 = SparseOperator::combination(
        n,
        &[
            (half_hk.clone(), &k1inv_k2_y),
            (ring.power(k), &y),
            (-(x.hp(h + k - 2) * &qp1 * ring.power(k)), &k1inv_k2),
            (-(x.hp(h + k - 2) * &qp1 * &half_hk), id),
        ],
    );
    let g_op = SparseOperator::combination(
        n,
        &[
            (-(c.clone() * x.hp(h + k - 2)), &t1_o1),
            (-(c.clone() * ring.power(k - 1)), &t2_o2),
            (-(qp1.clone() * &c * &c), &t3),
        ],
    );

    // G* = q^{(h+3k)/2-1}(q+1) Ω0 K1^{-1}K2
    let o0_k1inv_k2 = &centrals.omega0 * &k1inv_k2;
    let g_star = o0_k1inv_k2.scale(&(x.hp(h + 3 * k - 2) * &qp1));

    AwCoefficients {
        y,
        p,
        omega,
        g: g_op,
        g_star,
    }
}

impl<R: ScalarRing> OperatorSet<R> {
    /// Derive every operator from the generators.
    pub fn from_generators(
        ring: R,
        h: usize,
        k: usize,
        weights: Vec<(usize, usize)>,
        gens: Generators<R::Elem>,
    ) -> Self {
        let fm = build_f_algebraic(&ring, h, k, &gens);
        let (r, l, a, a_star) = build_rl_a_astar(&ring, k, &gens, &fm);
        let centrals = build_centrals(&ring, h, k, &gens, &fm);
        let aw = build_aw_coefficients(&ring, h, k, &gens, &centrals);
        OperatorSet {
            ring,
            h,
            k,
            weights,
            gens,
            fm,
            r,
            l,
            a,
            a_star,
            centrals,
            aw,
        }
    }

    /// The full operator set on the standard module of a geometry.
    pub fn for_geometry(g: &GeometryIndex, ring: R) -> Result<Self> {
        let gens = build_generators(g, &ring)?;
        Ok(Self::from_generators(ring, g.h(), g.k(), g.weights().to_vec(), gens))
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Look up an operator by its conventional name (`K1`, `K1inv`, `L1`,
    /// `F0`, `F+`, `A*`, `Omega0`, `Y`, `G*`, ...).
    pub fn named(&self, name: &str) -> Option<&SparseOperator<R::Elem>> {
        let g = &self.gens;
        Some(match name {
            "I" => &g.identity,
            "K1" => &g.k1,
            "K1inv" => &g.k1_inv,
            "K2" => &g.k2,
            "K2inv" => &g.k2_inv,
            "L1" => &g.l1,
            "L2" => &g.l2,
            "R1" => &g.r1,
            "R2" => &g.r2,
            "F0" => &self.fm.f0,
            "F+" => &self.fm.f_plus,
            "F-" => &self.fm.f_minus,
            "F" => &self.fm.f,
            "R" => &self.r,
            "L" => &self.l,
            "A" => &self.a,
            "A*" => &self.a_star,
            "Omega0" => &self.centrals.omega0,
            "Omega1" => &self.centrals.omega1,
            "Omega2" => &self.centrals.omega2,
            "Y" => &self.aw.y,
            "P" => &self.aw.p,
            "Omega" => &self.aw.omega,
            "G" => &self.aw.g,
            "G*" => &self.aw.g_star,
            _ => return None,
        })
    }
}

/// Names accepted by [`OperatorSet::named`].
pub const OPERATOR_NAMES: [&str; 25] = [
    "I", "K1", "K1inv", "K2", "K2inv", "L1", "L2", "R1", "R2", "F0", "F+", "F-", "F", "R", "L", "A", "A*", "Omega0",
    "Omega1", "Omega2", "Y", "P", "Omega", "G", "G*",
];
