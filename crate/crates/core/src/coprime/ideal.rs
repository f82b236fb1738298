use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::isqrt;
use crate::arith::lattice::{coordinates, hermite, Hermite};
use crate::error::{Error, Result};
use crate::rings::{QuadInt, RingDescriptor};

/// Nonzero ideal of `Z[√m·i]` as a rank-2 lattice over the basis
/// `{1, w}`, `w = √m·i`, stored in Hermite form: rows `(a, b)` and
/// `(0, c)` with `a, c > 0` and `0 ≤ b < c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadIdeal {
    m: u64,
    basis: [[BigInt; 2]; 2],
}

fn row(z: &QuadInt) -> Vec<BigInt> {
    vec![z.re.clone(), z.im.clone()]
}

fn times_w(z: &QuadInt) -> QuadInt {
    QuadInt { m: z.m, re: -BigInt::from(z.m) * &z.im, im: z.re.clone() }
}

impl QuadIdeal {
    /// Hermite form of the ideal generated by `gens`, together with the
    /// Z-combinations of `[g₀, g₀w, g₁, g₁w, …]` that produce each row.
    pub fn hermite_of(gens: &[QuadInt]) -> Hermite {
        let rows: Vec<Vec<BigInt>> = gens.iter().flat_map(|g| [row(g), row(&times_w(g))]).collect();
        hermite(&rows)
    }

    pub fn from_generators(m: u64, gens: &[QuadInt]) -> Result<Self> {
        let h = Self::hermite_of(gens);
        if h.basis.len() < 2 {
            return Err(Error::Precondition("the zero ideal has no lattice basis".into()));
        }
        let ideal = QuadIdeal {
            m,
            basis: [[h.basis[0][0].clone(), h.basis[0][1].clone()], [h.basis[1][0].clone(), h.basis[1][1].clone()]],
        };
        debug_assert!(ideal.basis_elements().iter().all(|b| ideal.contains(&times_w(b))));
        Ok(ideal)
    }

    pub fn principal(z: &QuadInt) -> Result<Self> {
        Self::from_generators(z.m, std::slice::from_ref(z))
    }

    pub fn unit(m: u64) -> Self {
        QuadIdeal { m, basis: [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]] }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::Quadratic { m: self.m }
    }

    pub fn basis(&self) -> &[[BigInt; 2]; 2] {
        &self.basis
    }

    pub fn basis_elements(&self) -> [QuadInt; 2] {
        self.basis.clone().map(|[re, im]| QuadInt { m: self.m, re, im })
    }

    /// Index of the ideal in the ring.
    pub fn norm(&self) -> BigInt {
        &self.basis[0][0] * &self.basis[1][1]
    }

    pub fn is_whole_ring(&self) -> bool {
        self.norm().is_one()
    }

    pub fn contains(&self, z: &QuadInt) -> bool {
        let rows: Vec<Vec<BigInt>> = self.basis.iter().map(|r| r.to_vec()).collect();
        coordinates(&rows, &row(z)).is_some()
    }

    pub fn mul(&self, other: &QuadIdeal) -> QuadIdeal {
        let gens: Vec<QuadInt> =
            self.basis_elements().iter().flat_map(|a| other.basis_elements().map(|b| mul(a, &b))).collect();
        QuadIdeal::from_generators(self.m, &gens).expect("product of nonzero ideals")
    }

    pub fn conj(&self) -> QuadIdeal {
        let gens = self.basis_elements().map(|b| b.conj());
        QuadIdeal::from_generators(self.m, &gens).expect("nonzero")
    }

    /// `self · g⁻¹` for `g ⊇ self` in a maximal order, computed as
    /// `self · ḡ / N(g)`.
    pub fn divide_by(&self, g: &QuadIdeal) -> Result<QuadIdeal> {
        if !self.ring().is_maximal_order() {
            return Err(Error::NotMaximalOrder(self.m));
        }
        let prod = self.mul(&g.conj());
        let n = g.norm();
        let mut basis = prod.basis.clone();
        for r in basis.iter_mut() {
            for x in r.iter_mut() {
                let (q, rem) = x.div_rem(&n);
                if !rem.is_zero() {
                    return Err(Error::Precondition("ideal is not divisible by the given ideal".into()));
                }
                *x = q;
            }
        }
        let gens = basis.map(|[re, im]| QuadInt { m: self.m, re, im });
        QuadIdeal::from_generators(self.m, &gens)
    }

    /// Smallest positive rational integer in the ideal.
    pub fn min_integer(&self) -> BigInt {
        let [[a, b], [_, c]] = &self.basis;
        a * c / b.gcd(c)
    }

    /// `(ℓ, z)` with `ℓ` the smallest positive integer in the ideal and
    /// `z` the first Hermite row, when they generate the ideal.
    pub fn two_generators(&self) -> Option<(BigInt, QuadInt)> {
        let l = self.min_integer();
        let z = self.basis_elements()[0].clone();
        let lq = QuadInt { m: self.m, re: l.clone(), im: BigInt::zero() };
        (QuadIdeal::from_generators(self.m, &[lq, z.clone()]).ok()? == *self).then_some((l, z))
    }
}

pub(crate) fn mul(a: &QuadInt, b: &QuadInt) -> QuadInt {
    QuadInt { m: a.m, re: &a.re * &b.re - BigInt::from(a.m) * &a.im * &b.im, im: &a.re * &b.im + &a.im * &b.re }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |z: &QuadInt| crate::rings::RingElement::Quadratic(z.clone()).to_string();
        match self.two_generators() {
            Some((l, z)) if z.im.is_zero() => write!(f, "({l})"),
            Some((l, z)) => write!(f, "({l}, {})", show(&z)),
            None => {
                let [b0, b1] = self.basis_elements();
                write!(f, "Z<{}, {}>", show(&b0), show(&b1))
            }
        }
    }
}

/// Returns a generator of `ideal` if it is principal.
///
/// Every generator has norm `N(I)`, so it suffices to enumerate the
/// finitely many solutions of `re² + m·im² = N(I)`.
pub fn ideal_is_principal(ideal: &QuadIdeal) -> Result<Option<QuadInt>> {
    if !ideal.ring().is_maximal_order() {
        return Err(Error::NotMaximalOrder(ideal.m));
    }
    let n = ideal.norm();
    let m = BigInt::from(ideal.m);
    let mut im = BigInt::zero();
    while &m * &im * &im <= n {
        let rest = &n - &m * &im * &im;
        let re = isqrt(&rest);
        if &re * &re == rest {
            let mut cands = vec![(re.clone(), im.clone()), (-&re, im.clone()), (re.clone(), -&im), (-&re, -&im)];
            cands.dedup();
            for (a, b) in cands {
                let z = QuadInt { m: ideal.m, re: a, im: b };
                if ideal.contains(&z) && QuadIdeal::principal(&z)? == *ideal {
                    return Ok(Some(z));
                }
            }
        }
        im += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn q(m: u64, re: i64, im: i64) -> QuadInt {
        QuadInt { m, re: re.into(), im: im.into() }
    }

    #[test]
    fn ideal_above_two_is_not_principal() {
        let i = QuadIdeal::from_generators(5, &[q(5, 2, 0), q(5, 1, 1)]).unwrap();
        assert_eq!(i.norm(), BigInt::from(2));
        assert_eq!(i.to_string(), "(2, 1+i5)");
        assert_eq!(ideal_is_principal(&i).unwrap(), None);
    }

    #[test]
    fn ideal_above_three_is_not_principal() {
        let i = QuadIdeal::from_generators(5, &[q(5, 3, 0), q(5, 1, 1)]).unwrap();
        assert_eq!(i.norm(), BigInt::from(3));
        assert_eq!(ideal_is_principal(&i).unwrap(), None);
    }

    #[test]
    fn principal_ideal_recovers_its_generator() {
        let i = QuadIdeal::principal(&q(5, 1, 1)).unwrap();
        let g = ideal_is_principal(&i).unwrap().unwrap();
        assert!(g == q(5, 1, 1) || g == q(5, -1, -1));
    }

    #[test]
    fn non_maximal_order_refused() {
        let i = QuadIdeal::principal(&q(11, 2, 0)).unwrap();
        assert_eq!(ideal_is_principal(&i), Err(Error::NotMaximalOrder(11)));
    }

    #[test]
    fn two_times_ideal_above_two_squared() {
        let p2 = QuadIdeal::from_generators(5, &[q(5, 2, 0), q(5, 1, 1)]).unwrap();
        assert_eq!(p2.mul(&p2), QuadIdeal::principal(&q(5, 2, 0)).unwrap());
        assert_eq!(p2.conj(), p2);
    }

    #[test]
    fn quotient_by_gcd_ideal() {
        // (1+w) = P2·P3 so (1+w)·P2⁻¹ = P3 = (3, 1+w)
        let p2 = QuadIdeal::from_generators(5, &[q(5, 2, 0), q(5, 1, 1)]).unwrap();
        let n = QuadIdeal::principal(&q(5, 1, 1)).unwrap();
        let p3 = QuadIdeal::from_generators(5, &[q(5, 3, 0), q(5, 1, 1)]).unwrap();
        assert_eq!(n.divide_by(&p2).unwrap(), p3);
    }

    fn elem(m: u64) -> impl Strategy<Value = QuadInt> {
        (-25i64..25, -25i64..25).prop_map(move |(a, b)| q(m, a, b))
    }

    fn ideal(m: u64) -> impl Strategy<Value = QuadIdeal> {
        (elem(m), elem(m)).prop_filter_map("nonzero", move |(a, b)| QuadIdeal::from_generators(m, &[a, b]).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn norm_is_multiplicative_in_maximal_orders(i in ideal(5), j in ideal(5)) {
            prop_assert_eq!(i.mul(&j).norm(), i.norm() * j.norm());
        }
    }

    proptest! {
        #[test]
        fn ideal_times_conjugate_is_norm(i in ideal(13)) {
            let n = QuadInt { m: 13, re: i.norm(), im: BigInt::zero() };
            prop_assert_eq!(i.mul(&i.conj()), QuadIdeal::principal(&n).unwrap());
            prop_assert!(i.divide_by(&i).unwrap().is_whole_ring());
        }

        #[test]
        fn closed_under_w(i in ideal(11)) {
            for b in i.basis_elements() {
                prop_assert!(i.contains(&times_w(&b)));
            }
        }

        #[test]
        fn principal_norm_matches_element_norm(z in elem(7)) {
            prop_assume!(!(z.re.is_zero() && z.im.is_zero()));
            prop_assert_eq!(QuadIdeal::principal(&z).unwrap().norm(), z.norm().abs());
        }
    }
}
