use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat_to_string, BigRat};

/// Element `re + im·√m·i` of the field Q(√m·i).
///
/// Both operands of a binary operation must share the same `m`; mixing
/// fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub re: BigRat,
    pub im: BigRat,
    pub m: u64,
}

impl QuadElem {
    pub fn new(re: BigRat, im: BigRat, m: u64) -> Self {
        QuadElem { re, im, m }
    }

    pub fn zero(m: u64) -> Self {
        QuadElem::new(BigRat::zero(), BigRat::zero(), m)
    }

    pub fn one(m: u64) -> Self {
        QuadElem::new(BigRat::one(), BigRat::zero(), m)
    }

    pub fn from_ints(re: i64, im: i64, m: u64) -> Self {
        QuadElem::new(BigRat::from_integer(re.into()), BigRat::from_integer(im.into()), m)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem::new(self.re.clone(), -&self.im, self.m)
    }

    fn m_rat(&self) -> BigRat {
        BigRat::from_integer(self.m.into())
    }

    pub fn norm(&self) -> BigRat {
        quad_norm(self)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadElem::new(&self.re / &n, -&self.im / &n, self.m))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn is_integral(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.m, other.m, "operands live in different quadratic fields");
    }
}

/// Norm form `re² + m·im²`.
pub fn quad_norm(z: &QuadElem) -> BigRat {
    &z.re * &z.re + z.m_rat() * &z.im * &z.im
}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        self.check_field(rhs);
        QuadElem::new(&self.re + &rhs.re, &self.im + &rhs.im, self.m)
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self.check_field(rhs);
        QuadElem::new(&self.re - &rhs.re, &self.im - &rhs.im, self.m)
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        self.check_field(rhs);
        // (√m·i)² = −m
        let re = &self.re * &rhs.re - self.m_rat() * &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        QuadElem::new(re, im, self.m)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.re, -&self.im, self.m)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*i{}", rat_to_string(&self.re), rat_to_string(&self.im), self.m)
    }
}
