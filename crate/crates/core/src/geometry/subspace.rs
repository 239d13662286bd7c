use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::SUPPORTED_Q;

/// Checks that `q` is one of the supported prime field orders.
pub fn check_field(q: u64) -> Result<u8> {
    match u32::try_from(q) {
        Ok(q32) if SUPPORTED_Q.contains(&q32) => Ok(q32 as u8),
        _ => Err(Error::UnsupportedQ(q)),
    }
}

fn inv_mod(x: u8, q: u8) -> u8 {
    (1..q)
        .find(|y| (u16::from(x) * u16::from(*y)) % u16::from(q) == 1)
        .expect("nonzero element of a prime field")
}

/// In-place reduced row echelon form over `F_q`; zero rows are dropped.
fn rref(mut rows: Vec<Vec<u8>>, q: u8) -> Vec<Vec<u8>> {
    let n = rows.first().map_or(0, Vec::len);
    let qq = u16::from(q);
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = u16::from(inv_mod(rows[rank][col], q));
        for x in rows[rank].iter_mut() {
            *x = (u16::from(*x) * inv % qq) as u8;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let f = u16::from(row[col]);
            if r == rank || f == 0 {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = ((u16::from(*x) + qq * qq - f * u16::from(*p)) % qq) as u8;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// A subspace of `F_q^n`, stored as its reduced row echelon basis.
///
/// The RREF basis is canonical, so equality is equality of representations.
/// The derived ordering sorts by dimension, then lexicographically by basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Vec<u8>>,
    ambient: usize,
    q: u8,
}

impl Subspace {
    /// The span of the given vectors in `F_q^n`. Entries are reduced mod `q`.
    pub fn span(q: u64, n: usize, vectors: &[Vec<u8>]) -> Result<Self> {
        let q = check_field(q)?;
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::AmbientMismatch(format!(
                "vector of length {} in F_q^{n}",
                v.len()
            )));
        }
        let rows = vectors.iter().map(|v| v.iter().map(|x| x % q).collect()).collect();
        Ok(Self::from_rref(rref(rows, q), n, q))
    }

    fn from_rref(rows: Vec<Vec<u8>>, ambient: usize, q: u8) -> Self {
        Subspace {
            dim: rows.len(),
            rows,
            ambient,
            q,
        }
    }

    pub fn zero(q: u64, n: usize) -> Result<Self> {
        Self::span(q, n, &[])
    }

    pub fn full(q: u64, n: usize) -> Result<Self> {
        Self::coordinate(q, n, &(0..n).collect::<Vec<_>>())
    }

    /// Span of standard basis vectors `e_c` for the given 0-based coordinates.
    pub fn coordinate(q: u64, n: usize, coords: &[usize]) -> Result<Self> {
        let vectors: Vec<Vec<u8>> = coords
            .iter()
            .map(|&c| {
                if c >= n {
                    return Err(Error::InvalidSubspace(format!("coordinate {c} >= {n}")));
                }
                let mut v = vec![0; n];
                v[c] = 1;
                Ok(v)
            })
            .collect::<Result<_>>()?;
        Self::span(q, n, &vectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field_order(&self) -> u8 {
        self.q
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.q != other.q {
            return Err(Error::AmbientMismatch(format!(
                "F_{}^{} vs F_{}^{}",
                self.q, self.ambient, other.q, other.ambient
            )));
        }
        Ok(())
    }

    /// Reduce `v` against this basis; `v` lies in the subspace iff the result is zero.
    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let qq = u16::from(self.q);
        let mut v = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).expect("RREF rows are nonzero");
            let f = u16::from(v[pivot]);
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = ((u16::from(*x) + qq * qq - f * u16::from(*r)) % qq) as u8;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.q == other.q
            && self.dim <= other.dim
            && self.rows.iter().all(|r| other.contains_vector(r))
    }

    pub fn span_sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_rref(rref(rows, self.q), self.ambient, self.q))
    }

    /// The annihilator under the standard dot product. It has dimension
    /// `n - dim` and `perp(perp(u)) = u`.
    pub fn perp(&self) -> Self {
        let n = self.ambient;
        let qq = u16::from(self.q);
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero"))
            .collect();
        let vectors: Vec<Vec<u8>> = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u8; n];
                v[free] = 1;
                for (row, &p) in self.rows.iter().zip(&pivots) {
                    v[p] = ((qq - u16::from(row[free])) % qq) as u8;
                }
                v
            })
            .collect();
        Self::from_rref(rref(vectors, self.q), n, self.q)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.perp().span_sum(&other.perp())?.perp())
    }

    /// `dim(self ∩ other)` via the modular law, without building the intersection.
    pub fn meet_dim(&self, other: &Self) -> Result<usize> {
        Ok(self.dim + other.dim - self.span_sum(other)?.dim)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(F_{}^{}; {})", self.q, self.ambient, self)
    }
}

/// Basis rows as digit strings separated by `;`, e.g. `100;011`.
/// The zero subspace renders as `0`.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| char::from(b'0' + x)).collect())
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl Subspace {
    /// Parse the `Display` form (`"100;011"`, or `"0"` for the zero subspace
    /// when `n` is not 1).
    pub fn parse(q: u64, n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || (text == "0" && n != 1) {
            return Self::zero(q, n);
        }
        let vectors = text
            .split([';', ','])
            .map(|row| {
                row.trim()
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as u8)
                            .ok_or_else(|| Error::InvalidSubspace(format!("bad digit {c:?}")))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::span(q, n, &vectors)
    }
}

/// Cap on the number of subspaces `enumerate_subspaces` will produce.
pub const ENUMERATION_LIMIT: u64 = 2_000_000;

/// Every subspace of `F_q^n`, ordered by dimension then lexicographic RREF.
pub fn enumerate_subspaces(q: u64, n: usize) -> Result<Vec<Subspace>> {
    let qb = check_field(q)?;
    if n == 0 {
        return Err(Error::InvalidParameters("ambient dimension must be >= 1".into()));
    }
    let total: num_bigint::BigInt = (0..=n as i64)
        .map(|l| crate::scalar::gaussian_binomial(n as i64, l, q))
        .sum();
    if total > num_bigint::BigInt::from(ENUMERATION_LIMIT) {
        return Err(Error::Capacity {
            size: total.to_string(),
            cap: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for d in 0..=n {
        for pivots in combinations(n, d) {
            // Free entries: row r, column c > pivot_r, c not a pivot column.
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut digits = vec![0u8; free.len()];
            loop {
                let mut rows = vec![vec![0u8; n]; d];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                for (&(r, c), &x) in free.iter().zip(&digits) {
                    rows[r][c] = x;
                }
                out.push(Subspace::from_rref(rows, n, qb));
                // Odometer increment.
                let mut pos = 0;
                while pos < digits.len() {
                    digits[pos] += 1;
                    if digits[pos] < qb {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Brute force: the set of distinct spans of all subsets of vectors of
    /// size at most n, deduplicated by their full point sets.
    fn brute_force_count(q: u64, n: usize) -> usize {
        let total = (q as usize).pow(n as u32);
        let vec_of = |mut x: usize| {
            let mut v = vec![0u8; n];
            for c in v.iter_mut() {
                *c = (x % q as usize) as u8;
                x /= q as usize;
            }
            v
        };
        let points = |s: &[Vec<u8>]| -> Vec<Vec<u8>> {
            // All linear combinations, sorted.
            let mut pts: HashSet<Vec<u8>> = HashSet::new();
            pts.insert(vec![0u8; n]);
            for v in s {
                let cur: Vec<Vec<u8>> = pts.iter().cloned().collect();
                for p in cur {
                    for c in 1..q as u8 {
                        let w: Vec<u8> = p
                            .iter()
                            .zip(v)
                            .map(|(a, b)| ((u16::from(*a) + u16::from(c) * u16::from(*b)) % q as u16) as u8)
                            .collect();
                        pts.insert(w);
                    }
                }
            }
            let mut pts: Vec<_> = pts.into_iter().collect();
            pts.sort();
            pts
        };
        let mut seen: HashSet<Vec<Vec<u8>>> = HashSet::new();
        let mut frontier: Vec<Vec<Vec<u8>>> = vec![vec![]];
        seen.insert(points(&[]));
        while let Some(gens) = frontier.pop() {
            for x in 0..total {
                let mut g = gens.clone();
                g.push(vec_of(x));
                let pts = points(&g);
                if seen.insert(pts) {
                    frontier.push(g);
                }
            }
        }
        seen.len()
    }

    fn e(q: u64, n: usize, coords: &[usize]) -> Subspace {
        Subspace::coordinate(q, n, coords).unwrap()
    }

    #[test]
    fn enumeration_counts_match_brute_force() {
        assert_eq!(brute_force_count(2, 2), 5);
        assert_eq!(brute_force_count(2, 3), 16);
        assert_eq!(brute_force_count(3, 2), 6);
        assert_eq!(enumerate_subspaces(2, 2).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(2, 3).unwrap().len(), 16);
        assert_eq!(enumerate_subspaces(3, 2).unwrap().len(), 6);
        assert_eq!(enumerate_subspaces(2, 4).unwrap().len(), brute_force_count(2, 4));
    }

    #[test]
    fn enumeration_is_sorted_unique_and_complete() {
        let all = enumerate_subspaces(3, 3).unwrap();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.first().unwrap().dim(), 0);
        assert_eq!(all.last().unwrap(), &Subspace::full(3, 3).unwrap());
        // Each enumerated basis is already canonical.
        for u in &all {
            assert_eq!(&Subspace::span(3, 3, u.basis()).unwrap(), u);
        }
    }

    #[test]
    fn enumeration_rejects_bad_input() {
        assert_eq!(enumerate_subspaces(4, 2), Err(Error::UnsupportedQ(4)));
        assert!(enumerate_subspaces(2, 0).is_err());
    }

    #[test]
    fn intersection_and_sum_examples() {
        let u = e(2, 3, &[0, 2]);
        let z = Subspace::zero(2, 3).unwrap();
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.intersect(&z).unwrap(), z);
        assert_eq!(u.intersect(&e(2, 3, &[2])).unwrap(), e(2, 3, &[2]));
        assert_eq!(u.span_sum(&u).unwrap(), u);
        assert_eq!(u.span_sum(&z).unwrap(), u);
        assert_eq!(e(2, 3, &[0]).span_sum(&e(2, 3, &[2])).unwrap(), u);
    }

    #[test]
    fn intersection_of_skew_planes() {
        // span{e1,e2} ∩ span{e1+e3, e2+e3} over F_2 is span{e1+e2}.
        let a = e(2, 3, &[0, 1]);
        let b = Subspace::span(2, 3, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let m = a.intersect(&b).unwrap();
        assert_eq!(m, Subspace::span(2, 3, &[vec![1, 1, 0]]).unwrap());
    }

    #[test]
    fn mismatched_ambient() {
        let a = e(2, 3, &[0]);
        let b = e(2, 4, &[0]);
        assert!(a.intersect(&b).is_err());
        assert!(a.span_sum(&e(3, 3, &[0])).is_err());
    }

    #[test]
    fn modular_law_exhaustive_small() {
        let all = enumerate_subspaces(2, 4).unwrap();
        for u in all.iter().step_by(3) {
            for v in all.iter().step_by(2) {
                let s = u.span_sum(v).unwrap();
                let m = u.intersect(v).unwrap();
                assert_eq!(s.dim() + m.dim(), u.dim() + v.dim());
                assert!(m.is_subspace_of(u) && m.is_subspace_of(v));
                assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
                assert_eq!(m.dim(), u.meet_dim(v).unwrap());
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let u = Subspace::span(3, 4, &[vec![1, 2, 0, 1], vec![0, 0, 1, 2]]).unwrap();
        assert_eq!(Subspace::parse(3, 4, &u.to_string()).unwrap(), u);
        assert_eq!(Subspace::parse(2, 3, "0").unwrap().dim(), 0);
        assert!(Subspace::parse(2, 3, "1x0").is_err());
    }
}
