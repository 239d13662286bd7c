//! Irreducible modules described by a type `(α, β, ρ)`: the standard basis
//! `w_{i,j}`, the closed-form generator actions, and tables derived from them.

mod nmde;
mod tables;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

pub use nmde::{conversion_case, nmde_to_type, type_to_nmde, ConversionCase, Nmde};
pub use tables::{bc_coefficients, eigen_tables, EigenEntry, EigenRow};

use crate::error::{Error, Result};
use crate::geometry::check_hk;
use crate::operators::{generators_from_parts, OperatorSet};
use crate::scalar::ScalarRing;
use crate::sparse::SparseOperator;

/// A module type `(α, β, ρ)` for given `(h, k)`.
///
/// Ordered by `(ρ, α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleType {
    pub alpha: i64,
    pub beta: i64,
    pub rho: i64,
    pub h: i64,
    pub k: i64,
}

impl ModuleType {
    pub fn new(alpha: i64, beta: i64, rho: i64, h: i64, k: i64) -> Result<Self> {
        if h < 0 || k < 0 {
            return Err(Error::InvalidParameters(format!("h={h}, k={k}")));
        }
        check_hk(h as usize, k as usize)?;
        let t = ModuleType { alpha, beta, rho, h, k };
        let valid = rho >= 0 && alpha >= 0 && 2 * alpha <= k - rho && beta >= 0 && 2 * beta <= h - rho;
        if !valid {
            return Err(Error::InvalidType { alpha, beta, rho, h, k });
        }
        Ok(t)
    }

    pub fn i_range(&self) -> std::ops::RangeInclusive<i64> {
        self.alpha..=self.k - self.rho - self.alpha
    }

    pub fn j_range(&self) -> std::ops::RangeInclusive<i64> {
        self.rho + self.beta..=self.h - self.beta
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        self.i_range().contains(&i) && self.j_range().contains(&j)
    }

    /// The weights `(i, j)` of the standard basis, in lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.i_range()
            .flat_map(|i| self.j_range().map(move |j| (i as usize, j as usize)))
            .collect()
    }

    pub fn dim(&self) -> usize {
        ((self.k - self.rho - 2 * self.alpha + 1) * (self.h - self.rho - 2 * self.beta + 1)) as usize
    }

    /// The weight `(α, ρ + β)` with smallest `i` and smallest `j`.
    pub fn corner(&self) -> (usize, usize) {
        (self.alpha as usize, (self.rho + self.beta) as usize)
    }

    /// Scalars by which `Ω0, Ω1, Ω2` act.
    pub fn omega_scalars<R: ScalarRing>(&self, ring: &R) -> [R::Elem; 3] {
        let (a, b, r, h, k) = (self.alpha, self.beta, self.rho, self.h, self.k);
        [
            ring.power(-r),
            ring.q() * ring.bracket(k - r - a) + ring.bracket(a),
            ring.q() * ring.bracket(h - r - b) + ring.bracket(b),
        ]
    }
}

impl Ord for ModuleType {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.h, self.k, self.rho, self.alpha, self.beta).cmp(&(other.h, other.k, other.rho, other.alpha, other.beta))
    }
}

impl PartialOrd for ModuleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.rho)
    }
}

/// All valid types for `(h, k)`, ordered by `(ρ, α, β)`.
pub fn enumerate_types(h: usize, k: usize) -> Result<Vec<ModuleType>> {
    check_hk(h, k)?;
    let (h, k) = (h as i64, k as i64);
    let mut out = Vec::new();
    for rho in 0..=k {
        for alpha in 0..=(k - rho) / 2 {
            for beta in 0..=(h - rho) / 2 {
                out.push(ModuleType { alpha, beta, rho, h, k });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A module of given type with every operator realized on its standard basis.
#[derive(Clone, Debug)]
pub struct AbstractModule<R: ScalarRing> {
    pub ty: ModuleType,
    pub basis: Vec<(usize, usize)>,
    pub ops: OperatorSet<R>,
}

impl<R: ScalarRing> AbstractModule<R> {
    pub fn build(ty: ModuleType, ring: R) -> Self {
        let basis = ty.support();
        let n = basis.len();
        let index = |i: i64, j: i64| -> Option<usize> {
            ty.contains(i, j)
                .then(|| basis.binary_search(&(i as usize, j as usize)).ok())
                .flatten()
        };
        let (a, b, r, h, k) = (ty.alpha, ty.beta, ty.rho, ty.h, ty.k);
        // Each action sends w_{i,j} to coeff * w_{i+di, j+dj}; targets outside
        // the support are zero.
        let action = |di: i64, dj: i64, coeff: &dyn Fn(i64, i64) -> R::Elem| {
            let entries = basis.iter().enumerate().filter_map(|(src, &(i, j))| {
                let (i, j) = (i as i64, j as i64);
                index(i + di, j + dj).map(|dst| (dst, src, coeff(i, j)))
            });
            SparseOperator::from_entries(n, entries.collect::<Vec<_>>())
        };
        let l1 = action(-1, 0, &|i, j| {
            ring.half_power(r + a + b + i + j - 1) * ring.bracket(k - r - a - i + 1)
        });
        let l2 = action(0, -1, &|i, j| {
            ring.half_power(2 * k - (r + a - b + i - j + 1)) * ring.bracket(h - b - j + 1)
        });
        let r1 = action(1, 0, &|i, j| {
            ring.half_power(-(r - a + b + i - j)) * ring.bracket(i - a + 1)
        });
        let r2 = action(0, 1, &|i, j| {
            ring.half_power(r + a + b - i - j) * ring.bracket(j - r - b + 1)
        });
        let gens = generators_from_parts(&ring, h as usize, k as usize, &basis, [l1, l2, r1, r2]);
        let ops = OperatorSet::from_generators(ring, h as usize, k as usize, basis.clone(), gens);
        AbstractModule { ty, basis, ops }
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.basis.binary_search(&(i, j)).ok()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}
