//! The stable ring `A`, its fraction field `F`, and the causality set `Z`.
//!
//! Two rings are supported:
//!
//! * `Z[√m·i]` for a positive integer `m`. Here `Z = {0}`, so every
//!   element of `F = Q(√m·i)` is causal.
//! * The delay ring `Q[x², x³]`, polynomials whose `x¹` coefficient is
//!   zero. Every monomial `x^k` with `k = 0` or `k ≥ 2` is a product of
//!   `x²` and `x³`, so this set is exactly the ring generated by them.
//!   Its causality set `Z = {αx² + βx³ | α, β ∈ A}` is the set of members
//!   with zero constant term: splitting the monomials of such an element
//!   by degree parity gives `α` (the even part over `x²`) and `β` (the odd
//!   part over `x³`), both of which again have a zero `x¹` coefficient.

mod field;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{is_squarefree, BigRat, Poly, QuadElem};
use crate::error::{Error, Result};

pub use field::TransferFunction;
pub use text::{parse_element, parse_transfer_function};

/// Selects the stable ring `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// `Z[√m·i]`
    Quadratic { m: u64 },
    /// `Q[x², x³]`
    Delay,
}

impl RingDescriptor {
    pub fn quadratic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidRing("m must be a positive integer".into()));
        }
        Ok(RingDescriptor::Quadratic { m })
    }

    /// `Z[√m·i]` is the full ring of integers of `Q(√−m)` exactly when `m`
    /// is square-free and `m ≡ 1, 2 (mod 4)`.
    pub fn is_maximal_order(&self) -> bool {
        match *self {
            RingDescriptor::Quadratic { m } => is_squarefree(m) && matches!(m % 4, 1 | 2),
            RingDescriptor::Delay => false,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Quadratic { m } => write!(f, "Z[√{m}·i]"),
            RingDescriptor::Delay => f.write_str("Q[x^2, x^3]"),
        }
    }
}

/// `re + im·√m·i` with integer components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub m: u64,
    pub re: BigInt,
    pub im: BigInt,
}

impl QuadInt {
    pub fn to_quad(&self) -> QuadElem {
        QuadElem::new(BigRat::from_integer(self.re.clone()), BigRat::from_integer(self.im.clone()), self.m)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + BigInt::from(self.m) * &self.im * &self.im
    }

    pub fn conj(&self) -> QuadInt {
        QuadInt { m: self.m, re: self.re.clone(), im: -&self.im }
    }
}

/// An element of the stable ring `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Quadratic(QuadInt),
    /// Invariant: the `x¹` coefficient is zero.
    Delay(Poly),
}

impl RingElement {
    pub fn quad(m: u64, re: i64, im: i64) -> Self {
        RingElement::Quadratic(QuadInt { m, re: re.into(), im: im.into() })
    }

    pub fn quad_big(m: u64, re: BigInt, im: BigInt) -> Self {
        RingElement::Quadratic(QuadInt { m, re, im })
    }

    pub fn delay(p: Poly) -> Result<Self> {
        if !p.coeff(1).is_zero() {
            return Err(Error::NotInRing(p.to_string()));
        }
        Ok(RingElement::Delay(p))
    }

    pub fn delay_ints(coeffs: &[i64]) -> Result<Self> {
        RingElement::delay(Poly::from_ints(coeffs))
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        match ring {
            RingDescriptor::Quadratic { m } => RingElement::quad(m, 0, 0),
            RingDescriptor::Delay => RingElement::Delay(Poly::zero()),
        }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        RingElement::from_int(ring, 1)
    }

    pub fn from_int(ring: RingDescriptor, c: i64) -> Self {
        match ring {
            RingDescriptor::Quadratic { m } => RingElement::quad(m, c, 0),
            RingDescriptor::Delay => RingElement::Delay(Poly::from_ints(&[c])),
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        match self {
            RingElement::Quadratic(q) => RingDescriptor::Quadratic { m: q.m },
            RingElement::Delay(_) => RingDescriptor::Delay,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Quadratic(q) => q.re.is_zero() && q.im.is_zero(),
            RingElement::Delay(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == RingElement::one(self.ring())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RingElement::one(self.ring());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The same element viewed in the fraction field `F`.
    pub fn to_field(&self) -> TransferFunction {
        match self {
            RingElement::Quadratic(q) => TransferFunction::from_quad(q.to_quad()),
            RingElement::Delay(p) => TransferFunction::from_poly(p.clone()),
        }
    }

    pub fn as_quad(&self) -> Option<&QuadInt> {
        match self {
            RingElement::Quadratic(q) => Some(q),
            RingElement::Delay(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            RingElement::Delay(p) => Some(p),
            RingElement::Quadratic(_) => None,
        }
    }

    pub fn to_latex(&self) -> String {
        text::element_latex(self)
    }
}

macro_rules! ring_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                match (self, rhs) {
                    (RingElement::Quadratic(a), RingElement::Quadratic(b)) => {
                        let prod = &a.to_quad() $op &b.to_quad();
                        RingElement::Quadratic(QuadInt {
                            m: a.m,
                            re: prod.re.to_integer(),
                            im: prod.im.to_integer(),
                        })
                    }
                    (RingElement::Delay(a), RingElement::Delay(b)) => RingElement::Delay(a $op b),
                    _ => panic!("operands belong to different rings"),
                }
            }
        }
    };
}

ring_binop!(Add, add, +);
ring_binop!(Sub, sub, -);
ring_binop!(Mul, mul, *);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            RingElement::Quadratic(q) => RingElement::Quadratic(QuadInt { m: q.m, re: -&q.re, im: -&q.im }),
            RingElement::Delay(p) => RingElement::Delay(-p),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::element_string(self))
    }
}

/// A representation `p = num/den` with `num, den ∈ A` and `den ∉ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CausalRepresentation {
    pub num: RingElement,
    pub den: RingElement,
}

/// Returns the element of `A` equal to `f`, if there is one.
pub fn contains(f: &TransferFunction) -> Option<RingElement> {
    match f {
        TransferFunction::Quadratic(q) => {
            q.is_integral().then(|| RingElement::quad_big(q.m, q.re.to_integer(), q.im.to_integer()))
        }
        TransferFunction::Delay { num, den } => {
            // canonical form is reduced, so f is a polynomial iff den = 1
            if !den.is_constant() {
                return None;
            }
            let p = num.scale(&den.coeff(0).recip());
            RingElement::delay(p).ok()
        }
    }
}

/// Membership in the causality set `Z`.
pub fn in_causality_set(e: &RingElement) -> bool {
    match e {
        RingElement::Quadratic(_) => e.is_zero(),
        RingElement::Delay(p) => p.coeff(0).is_zero(),
    }
}

/// Splits `e ∈ Z` of the delay ring as `α·x² + β·x³` with `α, β ∈ A`.
pub fn causality_split(e: &RingElement) -> Option<(RingElement, RingElement)> {
    let p = e.as_poly()?;
    if !in_causality_set(e) {
        return None;
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if k % 2 == 0 {
            even.push(Poly::monomial(k - 2, c.clone()));
        } else if k >= 3 {
            odd.push(Poly::monomial(k - 3, c.clone()));
        }
    }
    let sum = |ps: Vec<Poly>| ps.iter().fold(Poly::zero(), |acc, p| &acc + p);
    Some((RingElement::Delay(sum(even)), RingElement::Delay(sum(odd))))
}

/// Constructs an `A`-representation `n/d` of `p` with `d ∉ Z`, if `p` is
/// causal.
///
/// In the delay ring, with `p = N/D` reduced over `Q[x]` and `D(0) = 1`,
/// any representation is `(hN)/(hD)` with `h(0) ≠ 0`; the `x¹`
/// coefficients vanish iff `h₁/h₀ = −D₁ = −N₁/N₀`, so `p` is causal iff
/// `N₁ = D₁·N₀` and then `h = 1 − D₁x` works.
pub fn causal_representation(p: &TransferFunction) -> Option<CausalRepresentation> {
    match p {
        TransferFunction::Quadratic(q) => {
            let (a1, a2, b) = p.quad_parts().expect("quadratic");
            Some(CausalRepresentation {
                num: RingElement::quad_big(q.m, a1, a2),
                den: RingElement::quad_big(q.m, b, BigInt::zero()),
            })
        }
        TransferFunction::Delay { num, den } => {
            if !den.coeff(0).is_one() {
                return None;
            }
            let h1 = -den.coeff(1);
            if num.coeff(1) + &h1 * num.coeff(0) != BigRat::zero() {
                return None;
            }
            let h = Poly::new(vec![BigRat::one(), h1]);
            Some(CausalRepresentation {
                num: RingElement::delay(num * &h).ok()?,
                den: RingElement::delay(den * &h).ok()?,
            })
        }
    }
}

pub fn is_causal(p: &TransferFunction) -> bool {
    causal_representation(p).is_some()
}

/// `a | b` in `A`.
pub fn divides(a: &RingElement, b: &RingElement) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let q = b.to_field().checked_div(&a.to_field()).ok_or(Error::DivisionByZero)?;
    Ok(contains(&q).is_some())
}

pub fn is_unit(e: &RingElement) -> bool {
    match e {
        RingElement::Quadratic(q) => q.norm().is_one(),
        RingElement::Delay(p) => p.degree() == Some(0),
    }
}
