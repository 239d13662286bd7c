use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `[m] = 1 + q + ... + q^(m-1)` as an integer, for `m >= 0`.
pub fn bracket_int(m: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut p = BigInt::one();
    for _ in 0..m {
        acc += &p;
        p *= &q;
    }
    acc
}

/// Gaussian binomial coefficient: the number of `k`-dimensional subspaces of
/// `F_q^n`. Zero when `k < 0` or `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 1..=k {
        num *= bracket_int((n - t + 1) as u32, q);
        den *= bracket_int(t as u32, q);
    }
    num / den
}
