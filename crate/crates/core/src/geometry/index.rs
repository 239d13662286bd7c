use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use super::subspace::{check_field, enumerate_subspaces, Subspace};
use crate::error::{Error, Result};
use crate::scalar::gaussian_binomial;

/// How `v` sits above `u` in the cover relation, relative to `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cover {
    /// `v` covers `u` and `dim(v ∩ y) = dim(u ∩ y) + 1`.
    Slash,
    /// `v` covers `u` and `dim(v ∩ y) = dim(u ∩ y)`.
    Backslash,
    None,
}

/// `(i, j)` with `i = dim(u ∩ y)` and `j = dim u - i`.
pub fn classify_ij(u: &Subspace, y: &Subspace) -> Result<(usize, usize)> {
    let i = u.meet_dim(y)?;
    Ok((i, u.dim() - i))
}

/// Classify the pair `(u, v)`: does `v` slash-cover, backslash-cover, or not
/// cover `u`?
pub fn cover_classify(u: &Subspace, v: &Subspace, y: &Subspace) -> Result<Cover> {
    if v.dim() != u.dim() + 1 || !u.is_subspace_of(v) {
        return Ok(Cover::None);
    }
    let (iu, _) = classify_ij(u, y)?;
    let (iv, _) = classify_ij(v, y)?;
    Ok(if iv == iu + 1 { Cover::Slash } else { Cover::Backslash })
}

/// The poset of all subspaces of `F_q^(h+k)` with its stratification
/// `P_{i,j}` relative to a fixed `k`-dimensional `y`, and cover adjacency.
#[derive(Clone, Debug)]
pub struct GeometryIndex {
    q: u64,
    h: usize,
    k: usize,
    y: Subspace,
    elements: Vec<Subspace>,
    lookup: HashMap<Subspace, usize>,
    weights: Vec<(usize, usize)>,
    strata: BTreeMap<(usize, usize), Vec<usize>>,
    /// `slash_covers_of[v]`: the `u` that `v` slash-covers.
    slash_covers_of: Vec<Vec<usize>>,
    backslash_covers_of: Vec<Vec<usize>>,
    /// `slash_covered_by[u]`: the `v` that slash-cover `u`.
    slash_covered_by: Vec<Vec<usize>>,
    backslash_covered_by: Vec<Vec<usize>>,
}

/// Default cap on `|P|` used by front ends.
pub const DEFAULT_CAPACITY: u64 = 10_000;

/// `|P| = sum_l [h+k choose l]_q`.
pub fn poset_size(q: u64, h: usize, k: usize) -> BigInt {
    let n = (h + k) as i64;
    (0..=n).map(|l| gaussian_binomial(n, l, q)).sum()
}

pub fn check_capacity(q: u64, h: usize, k: usize, cap: u64) -> Result<()> {
    let size = poset_size(q, h, k);
    if size > BigInt::from(cap) {
        return Err(Error::Capacity {
            size: size.to_string(),
            cap,
        });
    }
    Ok(())
}

pub fn check_hk(h: usize, k: usize) -> Result<()> {
    if k < 1 || h <= k {
        return Err(Error::InvalidParameters(format!("need h > k >= 1, got h={h}, k={k}")));
    }
    Ok(())
}

impl GeometryIndex {
    /// Build the index. `y` defaults to the span of the last `k` standard
    /// basis vectors.
    pub fn build(q: u64, h: usize, k: usize, y: Option<Subspace>) -> Result<Self> {
        check_field(q)?;
        check_hk(h, k)?;
        let n = h + k;
        let y = match y {
            Some(y) => {
                if y.ambient() != n || u64::from(y.field_order()) != q {
                    return Err(Error::AmbientMismatch(format!("y must live in F_{q}^{n}")));
                }
                if y.dim() != k {
                    return Err(Error::InvalidSubspace(format!("dim y = {} but k = {k}", y.dim())));
                }
                y
            }
            None => Subspace::coordinate(q, n, &(h..n).collect::<Vec<_>>())?,
        };
        let elements = enumerate_subspaces(q, n)?;
        let lookup: HashMap<Subspace, usize> = elements.iter().cloned().enumerate().map(|(p, u)| (u, p)).collect();
        let weights: Vec<(usize, usize)> = elements.iter().map(|u| classify_ij(u, &y)).collect::<Result<_>>()?;
        let mut strata: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (p, w) in weights.iter().enumerate() {
            strata.entry(*w).or_default().push(p);
        }

        let len = elements.len();
        let mut slash_covers_of = vec![Vec::new(); len];
        let mut backslash_covers_of = vec![Vec::new(); len];
        let mut slash_covered_by = vec![Vec::new(); len];
        let mut backslash_covered_by = vec![Vec::new(); len];
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (p, u) in elements.iter().enumerate() {
            levels[u.dim()].push(p);
        }
        for d in 0..n {
            for &lo in &levels[d] {
                for &hi in &levels[d + 1] {
                    if !elements[lo].is_subspace_of(&elements[hi]) {
                        continue;
                    }
                    if weights[hi].0 == weights[lo].0 + 1 {
                        slash_covers_of[hi].push(lo);
                        slash_covered_by[lo].push(hi);
                    } else {
                        backslash_covers_of[hi].push(lo);
                        backslash_covered_by[lo].push(hi);
                    }
                }
            }
        }

        Ok(GeometryIndex {
            q,
            h,
            k,
            y,
            elements,
            lookup,
            weights,
            strata,
            slash_covers_of,
            backslash_covers_of,
            slash_covered_by,
            backslash_covered_by,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn y(&self) -> &Subspace {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, pos: usize) -> &Subspace {
        &self.elements[pos]
    }

    pub fn position(&self, u: &Subspace) -> Option<usize> {
        self.lookup.get(u).copied()
    }

    /// `(i, j)` of every element, indexed by position.
    pub fn weights(&self) -> &[(usize, usize)] {
        &self.weights
    }

    pub fn weight(&self, pos: usize) -> (usize, usize) {
        self.weights[pos]
    }

    /// Nonempty strata `P_{i,j}`, keyed by `(i, j)`.
    pub fn strata(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.strata
    }

    pub fn stratum(&self, i: usize, j: usize) -> &[usize] {
        self.strata.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn level(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&p| self.elements[p].dim() == l)
    }

    pub fn slash_covers_of(&self, pos: usize) -> &[usize] {
        &self.slash_covers_of[pos]
    }

    pub fn backslash_covers_of(&self, pos: usize) -> &[usize] {
        &self.backslash_covers_of[pos]
    }

    pub fn slash_covered_by(&self, pos: usize) -> &[usize] {
        &self.slash_covered_by[pos]
    }

    pub fn backslash_covered_by(&self, pos: usize) -> &[usize] {
        &self.backslash_covered_by[pos]
    }

    /// All elements covering `pos`, either kind.
    pub fn covered_by(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        self.slash_covered_by[pos]
            .iter()
            .chain(&self.backslash_covered_by[pos])
            .copied()
    }

    /// Cover relation between two positions, read off the adjacency lists.
    pub fn cover_between(&self, lower: usize, upper: usize) -> Cover {
        if self.slash_covered_by[lower].contains(&upper) {
            Cover::Slash
        } else if self.backslash_covered_by[lower].contains(&upper) {
            Cover::Backslash
        } else {
            Cover::None
        }
    }

    /// Summary used for reports: strata sizes and the observed cover degrees.
    pub fn summary(&self) -> GeometrySummary {
        let degrees = |lists: &Vec<Vec<usize>>, members: &[usize]| {
            let mut d: Vec<usize> = members.iter().map(|&p| lists[p].len()).collect();
            d.sort_unstable();
            d.dedup();
            d
        };
        let strata = self
            .strata
            .iter()
            .map(|(&(i, j), members)| StratumSummary {
                i,
                j,
                size: members.len(),
                slash_covers: degrees(&self.slash_covers_of, members),
                backslash_covers: degrees(&self.backslash_covers_of, members),
                slash_covered_by: degrees(&self.slash_covered_by, members),
                backslash_covered_by: degrees(&self.backslash_covered_by, members),
            })
            .collect();
        let n = self.h + self.k;
        GeometrySummary {
            q: self.q,
            h: self.h,
            k: self.k,
            y: self.y.to_string(),
            size: self.len(),
            levels: (0..=n).map(|l| self.level(l).count()).collect(),
            strata,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumSummary {
    pub i: usize,
    pub j: usize,
    pub size: usize,
    pub slash_covers: Vec<usize>,
    pub backslash_covers: Vec<usize>,
    pub slash_covered_by: Vec<usize>,
    pub backslash_covered_by: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometrySummary {
    pub q: u64,
    pub h: usize,
    pub k: usize,
    pub y: String,
    pub size: usize,
    pub levels: Vec<usize>,
    pub strata: Vec<StratumSummary>,
}
