use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{text, RingDescriptor, RingElement};
use crate::arith::{poly_divmod, BigRat, Poly, QuadElem};
use crate::error::{Error, Result};

/// An element of the fraction field `F`, kept in a canonical form so
/// that equality is structural.
///
/// * Quadratic: a field element `re + im·√m·i`; equivalently the reduced
///   fraction `(α₁ + α₂·√m·i)/β` with `β > 0` and `gcd(α₁, α₂, β) = 1`.
/// * Delay: `num/den` coprime over `Q[x]`, with the lowest nonzero
///   coefficient of `den` equal to 1 (its constant term when `den(0) ≠ 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TransferFunction {
    Quadratic(QuadElem),
    Delay { num: Poly, den: Poly },
}

impl TransferFunction {
    pub fn from_quad(q: QuadElem) -> Self {
        TransferFunction::Quadratic(q)
    }

    pub fn from_poly(p: Poly) -> Self {
        TransferFunction::Delay { num: p, den: Poly::one() }
    }

    pub fn delay(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(TransferFunction::from_poly(Poly::zero()));
        }
        let g = num.gcd(&den);
        let num = poly_divmod(&num, &g)?.0;
        let den = poly_divmod(&den, &g)?.0;
        let lowest = den.coeffs().iter().find(|c| !c.is_zero()).expect("nonzero").recip();
        Ok(TransferFunction::Delay { num: num.scale(&lowest), den: den.scale(&lowest) })
    }

    /// `n/d` for ring elements.
    pub fn ratio(n: &RingElement, d: &RingElement) -> Result<Self> {
        n.to_field().checked_div(&d.to_field()).ok_or(Error::DivisionByZero)
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        RingElement::zero(ring).to_field()
    }

    pub fn one(ring: RingDescriptor) -> Self {
        RingElement::one(ring).to_field()
    }

    pub fn ring(&self) -> RingDescriptor {
        match self {
            TransferFunction::Quadratic(q) => RingDescriptor::Quadratic { m: q.m },
            TransferFunction::Delay { .. } => RingDescriptor::Delay,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TransferFunction::Quadratic(q) => q.is_zero(),
            TransferFunction::Delay { num, .. } => num.is_zero(),
        }
    }

    /// `(α₁, α₂, β)` with `self = (α₁ + α₂·√m·i)/β`, `β > 0`, and
    /// `gcd(α₁, α₂, β) = 1`.
    pub fn quad_parts(&self) -> Option<(BigInt, BigInt, BigInt)> {
        let TransferFunction::Quadratic(q) = self else { return None };
        let beta = q.re.denom().lcm(q.im.denom());
        let a1 = (&q.re * BigRat::from_integer(beta.clone())).to_integer();
        let a2 = (&q.im * BigRat::from_integer(beta.clone())).to_integer();
        Some((a1, a2, beta))
    }

    /// Reduced numerator and denominator polynomials.
    pub fn delay_parts(&self) -> Option<(&Poly, &Poly)> {
        match self {
            TransferFunction::Delay { num, den } => Some((num, den)),
            TransferFunction::Quadratic(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            TransferFunction::Quadratic(q) => q.inv().map(TransferFunction::Quadratic),
            TransferFunction::Delay { num, den } => TransferFunction::delay(den.clone(), num.clone()).ok(),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TransferFunction::one(self.ring());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_latex(&self) -> String {
        text::transfer_latex(self)
    }
}

impl Add for &TransferFunction {
    type Output = TransferFunction;
    fn add(self, rhs: &TransferFunction) -> TransferFunction {
        match (self, rhs) {
            (TransferFunction::Quadratic(a), TransferFunction::Quadratic(b)) => TransferFunction::Quadratic(a + b),
            (TransferFunction::Delay { num: a, den: b }, TransferFunction::Delay { num: c, den: d }) => {
                TransferFunction::delay(&(a * d) + &(c * b), b * d).expect("nonzero denominator")
            }
            _ => panic!("operands belong to different rings"),
        }
    }
}

impl Neg for &TransferFunction {
    type Output = TransferFunction;
    fn neg(self) -> TransferFunction {
        match self {
            TransferFunction::Quadratic(a) => TransferFunction::Quadratic(-a),
            TransferFunction::Delay { num, den } => TransferFunction::Delay { num: -num, den: den.clone() },
        }
    }
}

impl Sub for &TransferFunction {
    type Output = TransferFunction;
    fn sub(self, rhs: &TransferFunction) -> TransferFunction {
        self + &(-rhs)
    }
}

impl Mul for &TransferFunction {
    type Output = TransferFunction;
    fn mul(self, rhs: &TransferFunction) -> TransferFunction {
        match (self, rhs) {
            (TransferFunction::Quadratic(a), TransferFunction::Quadratic(b)) => TransferFunction::Quadratic(a * b),
            (TransferFunction::Delay { num: a, den: b }, TransferFunction::Delay { num: c, den: d }) => {
                TransferFunction::delay(a * c, b * d).expect("nonzero denominator")
            }
            _ => panic!("operands belong to different rings"),
        }
    }
}

impl fmt::Display for TransferFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::transfer_string(self))
    }
}

impl From<&RingElement> for TransferFunction {
    fn from(e: &RingElement) -> Self {
        e.to_field()
    }
}
