//! Exact coefficient rings.
//!
//! Two concrete rings are provided. [`QuadRing`] is the field `Q(sqrt q)` for a
//! fixed prime `q`, which holds every half-integer power of `q` exactly.
//! [`SymbolicRing`] is the field of rational functions `Q(s)` with `q = s^2`,
//! used to check identities generically in `q`.
//!
//! All code above this layer is written against [`ScalarRing`] and [`Field`].

mod laurent;
mod qint;
mod quad;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;

pub use laurent::LaurentPoly;
pub use qint::{bracket_int, gaussian_binomial};
pub use quad::{QuadRing, QuadScalar, SUPPORTED_Q};
pub use ratfunc::{RatFunc, SymbolicRing};

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Element of an exact field.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn is_zero(&self) -> bool;

    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }
}

/// Which coefficient ring a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingMode {
    Numeric(u32),
    Symbolic,
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Numeric(q) => write!(f, "{q}"),
            RingMode::Symbolic => f.write_str("symbolic"),
        }
    }
}

/// A coefficient ring together with its distinguished element `q`.
///
/// `half_power(e)` is `q^(e/2)`; every other constant is derived from it.
pub trait ScalarRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Field;

    fn mode(&self) -> RingMode;

    fn rational(&self, r: Rational) -> Self::Elem;

    fn half_power(&self, e: i64) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        self.rational(rational(0))
    }

    fn one(&self) -> Self::Elem {
        self.rational(rational(1))
    }

    fn int(&self, n: i64) -> Self::Elem {
        self.rational(rational(n))
    }

    fn power(&self, m: i64) -> Self::Elem {
        self.half_power(2 * m)
    }

    fn q(&self) -> Self::Elem {
        self.power(1)
    }

    /// The q-integer `[m] = (q^m - 1)/(q - 1)`, for any integer `m`.
    fn bracket(&self, m: i64) -> Self::Elem {
        if m >= 0 {
            (0..m).fold(self.zero(), |acc, t| acc + self.power(t))
        } else {
            // q^m - 1 = -q^m (q^{-m} - 1)
            -(self.power(m) * self.bracket(-m))
        }
    }

    /// `(q - 1)^{-1}`.
    fn inv_q_minus_one(&self) -> Self::Elem {
        (self.q() - self.one())
            .inv()
            .expect("q - 1 is nonzero in every supported ring")
    }
}
