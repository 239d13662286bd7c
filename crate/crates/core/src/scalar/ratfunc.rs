use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, LaurentPoly, QuadRing, QuadScalar, Rational, RingMode, ScalarRing};
use crate::error::{Error, Result};

/// Reduced fraction of Laurent polynomials in `s`.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient 1, and it shares no factor with the
/// numerator. Two equal functions therefore have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let den_lo = den.min_exp().expect("nonzero denominator");
        let num_lo = num.min_exp().expect("nonzero numerator") - den_lo;
        // Both parts now become polynomials with nonzero constant terms; the
        // s-power content lives entirely in the numerator offset.
        let mut n = num.to_dense();
        let mut d = den.to_dense();
        if d.len() > 1 && n.len() > 1 {
            let g = poly_gcd(&n, &d);
            if g.len() > 1 {
                n = poly_div_exact(&n, &g);
                d = poly_div_exact(&d, &g);
            }
        }
        let lc = d.last().expect("nonzero").clone();
        if !lc.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c = &*c / &lc;
            }
        }
        RatFunc {
            num: LaurentPoly::from_dense(&n, num_lo),
            den: LaurentPoly::from_dense(&d, 0),
        }
    }

    /// Substitute `s -> sqrt q`.
    pub fn evaluate(&self, ring: &QuadRing) -> Result<QuadScalar> {
        let n = self.num.evaluate(ring);
        let d = self.den.evaluate(ring);
        n.div(&d)
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of dense polynomials (ascending coefficients).
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let top = r.len() - 1;
        let f = &r[top] / lb;
        let shift = top - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut quo = vec![Rational::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let f = &r[top] / lb;
        let shift = top - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        quo[shift] = f;
        r.pop();
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut quo);
    quo
}

/// Monic gcd over `Q[s]`.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    let lc = x.last().expect("gcd of nonzero polynomials").clone();
    x.iter().map(|c| c / &lc).collect()
}

impl Field for RatFunc {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(n, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The field `Q(s)` with `q = s^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicRing;

impl ScalarRing for SymbolicRing {
    type Elem = RatFunc;

    fn mode(&self) -> RingMode {
        RingMode::Symbolic
    }

    fn rational(&self, r: Rational) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::constant(r))
    }

    fn half_power(&self, e: i64) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::monomial(Rational::one(), e))
    }
}
