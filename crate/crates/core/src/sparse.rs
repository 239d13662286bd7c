//! Square sparse matrices over an exact field.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use crate::scalar::Field;

/// Square matrix stored row-wise; each row is sorted by column and holds no
/// explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator<S> {
    dim: usize,
    rows: Vec<Vec<(usize, S)>>,
}

/// Rows above this count are multiplied in parallel.
const PAR_ROWS: usize = 64;

impl<S: Field> SparseOperator<S> {
    pub fn zero(dim: usize) -> Self {
        SparseOperator {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize, one: S) -> Self {
        Self::diagonal((0..dim).map(|_| one.clone()).collect())
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let dim = entries.len();
        let rows = entries
            .into_iter()
            .enumerate()
            .map(|(i, s)| if s.is_zero() { vec![] } else { vec![(i, s)] })
            .collect();
        SparseOperator { dim, rows }
    }

    /// Build from `(row, col, value)` triplets; repeats are summed and zeros
    /// dropped.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, S)>>(dim: usize, entries: I) -> Self {
        let mut acc: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); dim];
        for (r, c, s) in entries {
            assert!(r < dim && c < dim, "entry ({r},{c}) outside {dim}x{dim}");
            accumulate(&mut acc[r], c, s);
        }
        SparseOperator {
            dim,
            rows: acc.into_iter().map(finish_row).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, S)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&S> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |(col, _)| *col).ok().map(|i| &row[i].1)
    }

    /// Overwrite one entry (removing it if `value` is zero).
    pub fn set(&mut self, r: usize, c: usize, value: S) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) if value.is_zero() => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = value,
            Err(_) if value.is_zero() => {}
            Err(i) => row.insert(i, (c, value)),
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, s)| (r, *c, s)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &S)> {
        self.entries().next()
    }

    /// First entry (row-major) whose position fails `allowed`.
    pub fn first_outside<F: Fn(usize, usize) -> bool>(&self, allowed: F) -> Option<(usize, usize, &S)> {
        self.entries().find(|(r, c, _)| !allowed(*r, *c))
    }

    pub fn is_diagonal(&self) -> bool {
        self.first_outside(|r, c| r == c).is_none()
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, S)>> = vec![Vec::new(); self.dim];
        for (r, c, s) in self.entries() {
            rows[c].push((r, s.clone()));
        }
        SparseOperator { dim: self.dim, rows }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(c, x)| (*c, x.clone() * s))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        SparseOperator { dim: self.dim, rows }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_b = |x: &S| if negate_other { -x.clone() } else { x.clone() };
                    match (a.get(i), b.get(j)) {
                        (Some((ca, xa)), Some((cb, xb))) if ca == cb => {
                            let v = xa.clone() + &take_b(xb);
                            if !v.is_zero() {
                                out.push((*ca, v));
                            }
                            i += 1;
                            j += 1;
                        }
                        (Some((ca, xa)), Some((cb, _))) if ca < cb => {
                            out.push((*ca, xa.clone()));
                            i += 1;
                        }
                        (Some(_), Some((cb, xb))) => {
                            out.push((*cb, take_b(xb)));
                            j += 1;
                        }
                        (Some((ca, xa)), None) => {
                            out.push((*ca, xa.clone()));
                            i += 1;
                        }
                        (None, Some((cb, xb))) => {
                            out.push((*cb, take_b(xb)));
                            j += 1;
                        }
                        (None, None) => unreachable!(),
                    }
                }
                out
            })
            .collect();
        SparseOperator { dim: self.dim, rows }
    }

    fn product_row(&self, other: &Self, r: usize) -> Vec<(usize, S)> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (k, a) in &self.rows[r] {
            for (c, b) in &other.rows[*k] {
                accumulate(&mut acc, *c, a.clone() * b);
            }
        }
        finish_row(acc)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = if self.dim >= PAR_ROWS {
            (0..self.dim)
                .into_par_iter()
                .map(|r| self.product_row(other, r))
                .collect()
        } else {
            (0..self.dim).map(|r| self.product_row(other, r)).collect()
        };
        SparseOperator { dim: self.dim, rows }
    }

    /// `sum_t coeff_t * op_t`. All operators must share `dim`.
    pub fn combination(dim: usize, terms: &[(S, &SparseOperator<S>)]) -> Self {
        terms.iter().fold(Self::zero(dim), |acc, (c, op)| &acc + &op.scale(c))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Dense copy of the block with the given row and column index sets.
    pub fn dense_block(&self, rows: &[usize], cols: &[usize], zero: &S) -> Vec<Vec<S>> {
        rows.iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| self.get(r, c).cloned().unwrap_or_else(|| zero.clone()))
                    .collect()
            })
            .collect()
    }

    /// Coordinate-list text: one `row col value` line per stored entry.
    pub fn to_coo_string(&self) -> String {
        let mut out = String::new();
        for (r, c, s) in self.entries() {
            let _ = writeln!(out, "{r} {c} {s}");
        }
        out
    }
}

fn accumulate<S: Field>(acc: &mut BTreeMap<usize, S>, c: usize, s: S) {
    if s.is_zero() {
        return;
    }
    match acc.get_mut(&c) {
        Some(slot) => *slot = slot.clone() + &s,
        None => {
            acc.insert(c, s);
        }
    }
}

fn finish_row<S: Field>(acc: BTreeMap<usize, S>) -> Vec<(usize, S)> {
    acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

impl<'a, S: Field> Add<&'a SparseOperator<S>> for &'a SparseOperator<S> {
    type Output = SparseOperator<S>;
    fn add(self, rhs: &'a SparseOperator<S>) -> SparseOperator<S> {
        self.merge(rhs, false)
    }
}

impl<'a, S: Field> Sub<&'a SparseOperator<S>> for &'a SparseOperator<S> {
    type Output = SparseOperator<S>;
    fn sub(self, rhs: &'a SparseOperator<S>) -> SparseOperator<S> {
        self.merge(rhs, true)
    }
}

impl<'a, S: Field> Mul<&'a SparseOperator<S>> for &'a SparseOperator<S> {
    type Output = SparseOperator<S>;
    fn mul(self, rhs: &'a SparseOperator<S>) -> SparseOperator<S> {
        self.matmul(rhs)
    }
}

impl<S: Field> Neg for &SparseOperator<S> {
    type Output = SparseOperator<S>;
    fn neg(self) -> SparseOperator<S> {
        SparseOperator {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(c, s)| (*c, -s.clone())).collect())
                .collect(),
        }
    }
}

/// Rank of a dense matrix by exact Gaussian elimination. Pivots are the
/// first nonzero entry in column order.
pub fn rank<S: Field>(mut rows: Vec<Vec<S>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        let pivot: Vec<S> = rows[rank].iter().map(|x| x.clone() * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                *x = x.clone() - &(f.clone() * p);
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QuadRing, QuadScalar, ScalarRing};

    fn ring() -> QuadRing {
        QuadRing::new(2).unwrap()
    }

    fn m(dim: usize, entries: &[(usize, usize, i64)]) -> SparseOperator<QuadScalar> {
        let r = ring();
        SparseOperator::from_entries(dim, entries.iter().map(|&(a, b, v)| (a, b, r.int(v))))
    }

    #[test]
    fn no_stored_zeros() {
        let a = m(3, &[(0, 1, 2), (0, 1, -2), (2, 2, 0)]);
        assert!(a.is_zero());
        assert_eq!(a.nnz(), 0);
        let b = m(3, &[(0, 1, 2)]);
        assert!((&b - &b).is_zero());
    }

    #[test]
    fn product_and_transpose() {
        let a = m(2, &[(0, 1, 1)]);
        let b = a.transpose();
        assert_eq!(&a * &b, m(2, &[(0, 0, 1)]));
        assert_eq!(&b * &a, m(2, &[(1, 1, 1)]));
        assert_eq!(a.commutator(&b), m(2, &[(0, 0, 1), (1, 1, -1)]));
    }

    #[test]
    fn set_and_get() {
        let mut a = m(3, &[(1, 1, 4)]);
        a.set(1, 2, ring().int(5));
        a.set(1, 1, ring().zero());
        assert_eq!(a.get(1, 2), Some(&ring().int(5)));
        assert_eq!(a.get(1, 1), None);
        assert_eq!(a.first_nonzero().map(|(r, c, _)| (r, c)), Some((1, 2)));
    }

    #[test]
    fn parallel_product_matches_serial() {
        let n = 100;
        let entries: Vec<_> = (0..n)
            .flat_map(|i| [(i, (i * 7) % n, 1), (i, (i + 1) % n, 2)])
            .collect();
        let a = m(n, &entries);
        let b = a.transpose();
        let par = &a * &b;
        let serial = SparseOperator {
            dim: n,
            rows: (0..n).map(|r| a.product_row(&b, r)).collect(),
        };
        assert_eq!(par, serial);
    }

    #[test]
    fn rank_examples() {
        let r = ring();
        let rows = vec![
            vec![r.int(1), r.int(2), r.int(3)],
            vec![r.int(2), r.int(4), r.int(6)],
            vec![r.zero(), r.sqrt_q(), r.int(1)],
        ];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank::<QuadScalar>(vec![]), 0);
    }

    #[test]
    fn coo_export() {
        let a = m(2, &[(1, 0, 3)]);
        assert_eq!(a.to_coo_string(), "1 0 3\n");
    }
}
