use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational, Field, Rational, RingMode, ScalarRing};
use crate::error::{Error, Result};

/// Field orders supported in numeric mode. Each is a non-square prime, so
/// `sqrt q` is irrational and `a + b sqrt q` has a unique representation.
pub const SUPPORTED_Q: [u32; 4] = [2, 3, 5, 7];

/// `a + b sqrt(q)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    q: u32,
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational, q: u32) -> Self {
        QuadScalar { a, b, q }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.q,
                right: other.q,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadScalar::new(&self.a + &other.a, &self.b + &other.b, self.q))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadScalar::new(&self.a - &other.a, &self.b - &other.b, self.q))
    }

    /// `(a + b r)(c + d r) = (ac + bdq) + (ad + bc) r`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let q = rational(i64::from(self.q));
        let a = &self.a * &other.a + &self.b * &other.b * q;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(QuadScalar::new(a, b, self.q))
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar::new(self.a.clone(), -self.b.clone(), self.q)
    }

    /// `a^2 - q b^2`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * rational(i64::from(self.q))
    }
}

impl Field for QuadScalar {
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(QuadScalar::new(c.a / &n, c.b / n, self.q))
    }
}

macro_rules! quad_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                self.$checked(rhs)
                    .expect("quadratic scalars from different rings")
            }
        }
        impl<'a> $tr<&'a QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::new(-self.a, -self.b, self.q)
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |f: &mut fmt::Formatter<'_>, b: &Rational| {
            if b.is_one() {
                write!(f, "sqrt({})", self.q)
            } else {
                write!(f, "{}*sqrt({})", b, self.q)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_negative() {
                    f.write_str("-")?;
                }
                surd(f, &self.b.abs())
            }
            (false, false) => {
                write!(f, "{}", self.a)?;
                f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
                surd(f, &self.b.abs())
            }
        }
    }
}

/// The field `Q(sqrt q)` for a supported prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadRing {
    q: u32,
}

impl QuadRing {
    pub fn new(q: u64) -> Result<Self> {
        match u32::try_from(q) {
            Ok(q32) if SUPPORTED_Q.contains(&q32) => Ok(QuadRing { q: q32 }),
            _ => Err(Error::UnsupportedQ(q)),
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn scalar(&self, a: Rational, b: Rational) -> QuadScalar {
        QuadScalar::new(a, b, self.q)
    }

    /// `sqrt q`.
    pub fn sqrt_q(&self) -> QuadScalar {
        self.scalar(rational(0), rational(1))
    }
}

impl ScalarRing for QuadRing {
    type Elem = QuadScalar;

    fn mode(&self) -> RingMode {
        RingMode::Numeric(self.q)
    }

    fn rational(&self, r: Rational) -> QuadScalar {
        self.scalar(r, rational(0))
    }

    fn half_power(&self, e: i64) -> QuadScalar {
        let q = rational(i64::from(self.q));
        let whole = e.div_euclid(2);
        let p = if whole >= 0 {
            num_traits::pow(q, whole as usize)
        } else {
            num_traits::pow(q, (-whole) as usize).recip()
        };
        if e.rem_euclid(2) == 0 {
            self.scalar(p, rational(0))
        } else {
            self.scalar(rational(0), p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> QuadRing {
        QuadRing::new(2).unwrap()
    }

    fn qs(a: i64, b: i64) -> QuadScalar {
        ring().scalar(rational(a), rational(b))
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(qs(1, 1) * qs(1, -1), qs(-1, 0));
        assert_eq!(qs(0, 1) * qs(0, 1), qs(2, 0));
        assert_eq!(qs(2, 3) * qs(1, 1), qs(8, 5));
    }

    #[test]
    fn inverse_examples() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(qs(0, 1).inv().unwrap(), ring().scalar(rational(0), half));
        assert_eq!(qs(1, 1).inv().unwrap(), qs(-1, 1));
        assert_eq!(qs(0, 0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let x = QuadRing::new(3).unwrap().one();
        assert_eq!(qs(1, 0).checked_mul(&x), Err(Error::RingMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn unsupported_orders() {
        for q in [0, 1, 4, 6, 8, 9, 11] {
            assert!(QuadRing::new(q).is_err(), "q = {q}");
        }
    }

    #[test]
    fn half_powers() {
        let r = ring();
        assert_eq!(r.half_power(0), qs(1, 0));
        assert_eq!(r.half_power(1), qs(0, 1));
        assert_eq!(r.half_power(3), qs(0, 2));
        assert_eq!(
            r.half_power(-2),
            ring().scalar(Rational::new(1.into(), 2.into()), rational(0))
        );
        assert_eq!(r.half_power(-1) * r.half_power(1), r.one());
    }

    #[test]
    fn display() {
        assert_eq!(qs(8, 5).to_string(), "8+5*sqrt(2)");
        assert_eq!(qs(0, -1).to_string(), "-sqrt(2)");
        assert_eq!(qs(-3, 0).to_string(), "-3");
    }
}
