//! Generalized elementary factors of a SISO plant `p = n/d`:
//! `Λ₁ = {λ ∈ A : λ·d/n ∈ A}` and `Λ₂ = {λ ∈ A : λ·n/d ∈ A}`.
//! The plant is stabilizable iff `Λ₁ + Λ₂ = A`; a [`WitnessPair`]
//! certifies this with `u·λ₁ + v·λ₂ = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::lattice::{hermite, kernel_mod};
use crate::arith::{ext_gcd_int, ext_gcd_poly, solve_linear, BigRat, Poly, RatMatrix};
use crate::coprime::lift_delay_bezout;
use crate::error::{Error, Result};
use crate::rings::{causal_representation, contains, RingDescriptor, RingElement, TransferFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Index {
    I1,
    I2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSet {
    pub plant: TransferFunction,
    pub which: Index,
}

impl LambdaSet {
    pub fn new(plant: TransferFunction, which: Index) -> Self {
        LambdaSet { plant, which }
    }

    /// The factor `f` with `Λ = {λ : λ·f ∈ A}`.
    fn factor(&self) -> Result<TransferFunction> {
        match self.which {
            Index::I1 => self.plant.inv().ok_or(Error::ZeroPlant),
            Index::I2 => Ok(self.plant.clone()),
        }
    }
}

pub fn lambda_member(lambda: &RingElement, set: &LambdaSet) -> Result<bool> {
    if lambda.ring() != set.plant.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(contains(&(&lambda.to_field() * &set.factor()?)).is_some())
}

/// Data of the quadratic construction `λ₁ = α′ = N/g`, `λ₂ = β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTrace {
    pub alpha1: BigInt,
    pub alpha2: BigInt,
    pub beta: BigInt,
    /// `α₁² + m·α₂²`
    pub norm: BigInt,
    /// `gcd(norm, β)`
    pub g: BigInt,
    pub alpha_prime: BigInt,
}

/// Data of the delay construction with `λ₁ = n`, `λ₂ = d″ = d′·q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelayTrace {
    /// `gcd(n, d)` normalized to constant term 1, `g = 1 + g₁x`.
    pub g: Poly,
    pub g1: BigRat,
    /// constant in `q = 1 + g₁x + c·g₁²x²`
    pub c: BigRat,
    pub q: Poly,
    pub n_prime: Poly,
    pub d_prime: Poly,
    pub n_second: Poly,
    pub d_second: Poly,
    /// minimal Bezout pair `α·n + β·d″ = 1` over `Q[x]`
    pub alpha: Poly,
    pub beta: Poly,
    pub r: Poly,
    pub alpha0: BigRat,
    pub alpha1: BigRat,
    pub beta0: BigRat,
    pub beta1: BigRat,
}

/// Why the direct construction did not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FallbackReason {
    /// `gcd(α′, β) ≠ 1` in the quadratic construction.
    QuadraticGcd { alpha_prime: BigInt, beta: BigInt, gcd: BigInt },
    /// `deg gcd(n, d) ≥ 2`, beyond the delay construction.
    GcdDegree(usize),
    /// `g` and `d′` share a factor, so no multiplier makes `n, d″` coprime.
    SharedFactor,
    /// no multiplier constant in the tried sequence worked
    MultiplierExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMethod {
    /// first hit in the box spiral, at this max-norm radius
    BoxSpiral { radius: u64 },
    /// Hermite form of the union of the two lattices
    Lattice,
    /// exact linear system with `deg λ₁ ≤ deg_bound`
    LinearSystem { deg_bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTrace {
    pub method: SearchMethod,
    pub reason: Option<FallbackReason>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessTrace {
    Quadratic(QuadraticTrace),
    Delay(Box<DelayTrace>),
    Search(SearchTrace),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub lambda1: RingElement,
    pub lambda2: RingElement,
    pub u: RingElement,
    pub v: RingElement,
    pub trace: WitnessTrace,
}

impl WitnessPair {
    /// Re-checks both memberships and the Bezout identity.
    pub fn verify(&self, plant: &TransferFunction) -> Result<bool> {
        Ok(lambda_member(&self.lambda1, &LambdaSet::new(plant.clone(), Index::I1))?
            && lambda_member(&self.lambda2, &LambdaSet::new(plant.clone(), Index::I2))?
            && (&(&self.u * &self.lambda1) + &(&self.v * &self.lambda2)).is_one())
    }

    /// True when the pair came from a fallback rather than the direct
    /// construction.
    pub fn is_fallback(&self) -> bool {
        matches!(self.trace, WitnessTrace::Search(_))
    }
}

fn require_outside_ring(p: &TransferFunction) -> Result<()> {
    if contains(p).is_some() {
        return Err(Error::PlantInRing);
    }
    Ok(())
}

fn require_quadratic(p: &TransferFunction) -> Result<u64> {
    match p.ring() {
        RingDescriptor::Quadratic { m } => Ok(m),
        RingDescriptor::Delay => Err(Error::RingMismatch),
    }
}

/// `N = α₁² + m·α₂²`, `g = gcd(N, β)` and `α′ = N/g` for
/// `p = (α₁ + α₂√m·i)/β`.
pub fn quadratic_gcd_data(p: &TransferFunction) -> Result<QuadraticTrace> {
    let m = require_quadratic(p)?;
    let (alpha1, alpha2, beta) = p.quad_parts().expect("quadratic");
    let norm = &alpha1 * &alpha1 + BigInt::from(m) * &alpha2 * &alpha2;
    let g = norm.gcd(&beta);
    let alpha_prime = &norm / &g;
    Ok(QuadraticTrace { alpha1, alpha2, beta, norm, g, alpha_prime })
}

/// `gcd(n, d)` of the causal representation, with constant term 1.
pub fn delay_gcd(p: &TransferFunction) -> Result<Poly> {
    if p.ring() != RingDescriptor::Delay {
        return Err(Error::RingMismatch);
    }
    let rep = causal_representation(p).ok_or(Error::NotCausal)?;
    let (n, d) = (rep.num.as_poly().expect("delay"), rep.den.as_poly().expect("delay"));
    Ok(n.gcd(d).lowest_normalized())
}

fn try_construct_quadratic(p: &TransferFunction) -> Result<std::result::Result<WitnessPair, FallbackReason>> {
    let m = require_quadratic(p)?;
    require_outside_ring(p)?;
    let QuadraticTrace { alpha1, alpha2, beta, norm, g, alpha_prime } = quadratic_gcd_data(p)?;
    let (h, u, v) = ext_gcd_int(&alpha_prime, &beta);
    if !h.is_one() {
        return Ok(Err(FallbackReason::QuadraticGcd { alpha_prime, beta, gcd: h }));
    }
    let int = |z: &BigInt| RingElement::quad_big(m, z.clone(), BigInt::zero());
    Ok(Ok(WitnessPair {
        lambda1: int(&alpha_prime),
        lambda2: int(&beta),
        u: int(&u),
        v: int(&v),
        trace: WitnessTrace::Quadratic(QuadraticTrace { alpha1, alpha2, beta, norm, g, alpha_prime }),
    }))
}

/// Direct construction over `Z[√m·i]` from `p = (α₁ + α₂√m·i)/β`.
/// Returns `None` when `gcd(α′, β) ≠ 1`.
pub fn construct_witnesses_quadratic(p: &TransferFunction) -> Result<Option<WitnessPair>> {
    Ok(try_construct_quadratic(p)?.ok())
}

/// Points of the square of max-norm `radius`, by L1 norm, then `u`, then `v`.
fn ring_of_radius(radius: i64) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = (-radius..=radius)
        .flat_map(|u| (-radius..=radius).map(move |v| (u, v)))
        .filter(|(u, v)| u.abs().max(v.abs()) == radius)
        .collect();
    pts.sort_by_key(|&(u, v)| (u.abs() + v.abs(), u, v));
    pts
}

fn box_search(p: &TransferFunction, bound: u64, reason: Option<FallbackReason>) -> Result<Option<WitnessPair>> {
    let m = require_quadratic(p)?;
    require_outside_ring(p)?;
    let l1 = LambdaSet::new(p.clone(), Index::I1);
    let l2 = LambdaSet::new(p.clone(), Index::I2);
    let one = RingElement::one(p.ring());
    for radius in 0..=bound as i64 {
        for (s, t) in ring_of_radius(radius) {
            let lambda = RingElement::quad(m, s, t);
            if !lambda_member(&lambda, &l1)? {
                continue;
            }
            let rest = &one - &lambda;
            if lambda_member(&rest, &l2)? {
                return Ok(Some(WitnessPair {
                    lambda1: lambda,
                    lambda2: rest,
                    u: one.clone(),
                    v: one.clone(),
                    trace: WitnessTrace::Search(SearchTrace {
                        method: SearchMethod::BoxSpiral { radius: radius as u64 },
                        reason,
                    }),
                }));
            }
        }
    }
    Ok(None)
}

/// Enumerates `λ = s + t·√m·i` with `|s|, |t| ≤ bound` by increasing
/// max-norm and returns the first with `λ ∈ Λ₁` and `1 − λ ∈ Λ₂`.
pub fn search_witnesses_quadratic(p: &TransferFunction, bound: u64) -> Result<Option<WitnessPair>> {
    box_search(p, bound, None)
}

/// `{λ : λ·f ∈ A}` as a lattice in the basis `{1, w}`.
fn lambda_lattice(m: u64, f: &TransferFunction) -> Vec<Vec<BigInt>> {
    let (z0, z1, k) = f.quad_parts().expect("quadratic");
    let mm = BigInt::from(m);
    // (s + t·w)(z0 + z1·w) = (s·z0 − m·t·z1) + (s·z1 + t·z0)·w
    let mat = vec![vec![z0.clone(), z1.clone()], vec![-&mm * &z1, z0]];
    kernel_mod(&mat, &k)
}

/// Exact decision of `Λ₁ + Λ₂ = A` over `Z[√m·i]`: the Hermite form of
/// the union of both lattice bases, with `1` split along the transform.
pub fn lattice_witnesses_quadratic(p: &TransferFunction) -> Result<Option<WitnessPair>> {
    lattice_search(p, None)
}

fn lattice_search(p: &TransferFunction, reason: Option<FallbackReason>) -> Result<Option<WitnessPair>> {
    let m = require_quadratic(p)?;
    require_outside_ring(p)?;
    let b1 = lambda_lattice(m, &p.inv().ok_or(Error::ZeroPlant)?);
    let b2 = lambda_lattice(m, p);
    let gens: Vec<Vec<BigInt>> = b1.iter().chain(&b2).cloned().collect();
    let h = hermite(&gens);
    if h.basis.len() < 2 || !h.basis[0][0].is_one() || !h.basis[0][1].is_zero() {
        return Ok(None);
    }
    let combine = |rows: &[Vec<BigInt>], coeffs: &[BigInt]| {
        let (mut s, mut t) = (BigInt::zero(), BigInt::zero());
        for (row, c) in rows.iter().zip(coeffs) {
            s += c * &row[0];
            t += c * &row[1];
        }
        RingElement::quad_big(m, s, t)
    };
    let t = &h.transform[0];
    let one = RingElement::one(p.ring());
    Ok(Some(WitnessPair {
        lambda1: combine(&b1, &t[..b1.len()]),
        lambda2: combine(&b2, &t[b1.len()..]),
        u: one.clone(),
        v: one,
        trace: WitnessTrace::Search(SearchTrace { method: SearchMethod::Lattice, reason }),
    }))
}

fn delay_rep(p: &TransferFunction) -> Result<(Poly, Poly)> {
    if p.ring() != RingDescriptor::Delay {
        return Err(Error::RingMismatch);
    }
    require_outside_ring(p)?;
    let rep = causal_representation(p).ok_or(Error::NotCausal)?;
    Ok((rep.num.as_poly().expect("delay").clone(), rep.den.as_poly().expect("delay").clone()))
}

/// Multiplier constants tried in `q = 1 + g₁x + c·g₁²x²`: `2/k²` for
/// `k = 3, 4, …`.
pub fn multiplier_constants() -> impl Iterator<Item = BigRat> {
    (3..64i64).map(|k| BigRat::new(2.into(), (k * k).into()))
}

fn try_construct_delay(p: &TransferFunction) -> Result<std::result::Result<WitnessPair, FallbackReason>> {
    let (n, d) = delay_rep(p)?;
    let g = delay_gcd(p)?;
    let deg = g.degree().unwrap_or(0);
    if deg >= 2 {
        return Ok(Err(FallbackReason::GcdDegree(deg)));
    }
    let g1 = g.coeff(1);
    let n_prime = n.exact_div(&g).expect("g divides n");
    let d_prime = d.exact_div(&g).expect("g divides d");
    let candidates: Vec<BigRat> = if g1.is_zero() {
        vec![BigRat::zero()]
    } else {
        if g.gcd(&d_prime).degree() != Some(0) {
            return Ok(Err(FallbackReason::SharedFactor));
        }
        multiplier_constants().collect()
    };
    for c in candidates {
        let q = Poly::new(vec![BigRat::one(), g1.clone(), &c * &g1 * &g1]);
        let d_second = &d_prime * &q;
        let (h, alpha, beta) = ext_gcd_poly(&n, &d_second)?;
        if h.degree() != Some(0) {
            continue;
        }
        let n_second = &n_prime * &q;
        let (r, u, v) = lift_delay_bezout(&n, &d_second, &alpha, &beta);
        let trace = DelayTrace {
            g: g.clone(),
            g1: g1.clone(),
            c,
            q,
            n_prime: n_prime.clone(),
            d_prime: d_prime.clone(),
            n_second,
            d_second: d_second.clone(),
            alpha0: alpha.coeff(0),
            alpha1: alpha.coeff(1),
            beta0: beta.coeff(0),
            beta1: beta.coeff(1),
            alpha,
            beta,
            r,
        };
        return Ok(Ok(WitnessPair {
            lambda1: RingElement::delay(n)?,
            lambda2: RingElement::delay(d_second)?,
            u: RingElement::delay(u)?,
            v: RingElement::delay(v)?,
            trace: WitnessTrace::Delay(Box::new(trace)),
        }));
    }
    Ok(Err(FallbackReason::MultiplierExhausted))
}

/// Direct construction over the delay ring with `λ₁ = n` and
/// `λ₂ = d″ = (d/g)·q`. Returns `None` when `deg gcd(n, d) ≥ 2`.
pub fn construct_witnesses_delay(p: &TransferFunction) -> Result<Option<WitnessPair>> {
    Ok(try_construct_delay(p)?.ok())
}

/// Columns for an unknown in `A` of degree ≤ `bound`, multiplied by `f`.
fn push_unknown(cols: &mut Vec<Vec<(usize, BigRat)>>, f: &Poly, bound: usize, sign: i64) -> Vec<usize> {
    let mut degs = Vec::new();
    for k in (0..=bound).filter(|&k| k != 1) {
        let col = f.coeffs().iter().enumerate().map(|(i, c)| (i + k, c * BigRat::from_integer(sign.into()))).collect();
        cols.push(col);
        degs.push(k);
    }
    degs
}

fn linear_search(n: &Poly, d: &Poly, bound: usize) -> Result<Option<Poly>> {
    // λ·d = n·s and λ·n + d·t = n with λ, s, t ∈ A
    let dn = n.degree().unwrap_or(0);
    let dd = d.degree().unwrap_or(0);
    let aux = bound + dn.max(dd);
    let mut first: Vec<Vec<(usize, BigRat)>> = Vec::new();
    let mut second: Vec<Vec<(usize, BigRat)>> = Vec::new();
    let lam = push_unknown(&mut first, d, bound, 1);
    push_unknown(&mut second, n, bound, 1);
    let nl = lam.len();
    let mut s_cols = Vec::new();
    push_unknown(&mut s_cols, n, aux, -1);
    let mut t_cols = Vec::new();
    push_unknown(&mut t_cols, d, aux, 1);
    let top = aux + dn.max(dd) + 1;
    let ncols = nl + s_cols.len() + t_cols.len();
    let mut mat = RatMatrix::zeros(2 * top, ncols);
    for j in 0..nl {
        for (i, c) in &first[j] {
            mat.set(*i, j, c.clone());
        }
        for (i, c) in &second[j] {
            mat.set(top + i, j, c.clone());
        }
    }
    for (j, col) in s_cols.iter().enumerate() {
        for (i, c) in col {
            mat.set(*i, nl + j, c.clone());
        }
    }
    for (j, col) in t_cols.iter().enumerate() {
        for (i, c) in col {
            mat.set(top + i, nl + s_cols.len() + j, c.clone());
        }
    }
    let mut rhs = vec![BigRat::zero(); 2 * top];
    for (i, c) in n.coeffs().iter().enumerate() {
        rhs[top + i] = c.clone();
    }
    let Some(sol) = solve_linear(&mat, &rhs)? else { return Ok(None) };
    Ok(Some(lam.iter().zip(&sol).fold(Poly::zero(), |acc, (&k, c)| &acc + &Poly::monomial(k, c.clone()))))
}

fn delay_search(p: &TransferFunction, deg_bound: usize, reason: Option<FallbackReason>) -> Result<Option<WitnessPair>> {
    let (n, d) = delay_rep(p)?;
    for bound in 0..=deg_bound {
        let Some(lam) = linear_search(&n, &d, bound)? else { continue };
        let lambda1 = RingElement::delay(lam)?;
        let one = RingElement::one(RingDescriptor::Delay);
        let pair = WitnessPair {
            lambda2: &one - &lambda1,
            lambda1,
            u: one.clone(),
            v: one,
            trace: WitnessTrace::Search(SearchTrace {
                method: SearchMethod::LinearSystem { deg_bound: bound },
                reason,
            }),
        };
        debug_assert!(pair.verify(p)?);
        return Ok(Some(pair));
    }
    Ok(None)
}

/// Solves for `λ₁ ∈ Λ₁` with `1 − λ₁ ∈ Λ₂` and `deg λ₁ ≤ deg_bound` as
/// an exact linear system, trying the smallest degree first.
pub fn search_witnesses_delay(p: &TransferFunction, deg_bound: usize) -> Result<Option<WitnessPair>> {
    delay_search(p, deg_bound, None)
}

/// Bounds for [`find_witnesses`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// coefficient box for the quadratic spiral
    pub quad_box: u64,
    /// degree bound for the delay linear system
    pub delay_degree: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            quad_box: crate::coprime::DEFAULT_QUAD_BOX as u64,
            delay_degree: crate::coprime::DEFAULT_DELAY_BOUND,
        }
    }
}

/// Direct construction first, then the fallbacks. Over `Z[√m·i]` the
/// final lattice step is exact, so `None` there means `Λ₁ + Λ₂ ≠ A`.
pub fn find_witnesses(p: &TransferFunction, bounds: SearchBounds) -> Result<Option<WitnessPair>> {
    let pair = match p.ring() {
        RingDescriptor::Quadratic { .. } => match try_construct_quadratic(p)? {
            Ok(pair) => Some(pair),
            Err(reason) => match box_search(p, bounds.quad_box, Some(reason.clone()))? {
                Some(pair) => Some(pair),
                None => lattice_search(p, Some(reason))?,
            },
        },
        RingDescriptor::Delay => match try_construct_delay(p)? {
            Ok(pair) => Some(pair),
            Err(reason) => delay_search(p, bounds.delay_degree, Some(reason))?,
        },
    };
    if let Some(pair) = &pair {
        if !pair.verify(p)? {
            return Err(Error::VerificationFailed);
        }
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_transfer_function;
    use proptest::prelude::*;

    const M5: RingDescriptor = RingDescriptor::Quadratic { m: 5 };

    fn tf(ring: RingDescriptor, s: &str) -> TransferFunction {
        parse_transfer_function(ring, s).unwrap()
    }

    fn q(m: u64, re: i64, im: i64) -> RingElement {
        RingElement::quad(m, re, im)
    }

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::from_ratios(cs)
    }

    #[test]
    fn membership_examples() {
        let p = tf(M5, "(1+i5)/2");
        let l1 = LambdaSet::new(p.clone(), Index::I1);
        let l2 = LambdaSet::new(p.clone(), Index::I2);
        assert!(lambda_member(&q(5, 3, 0), &l1).unwrap());
        assert!(lambda_member(&q(5, 2, 0), &l2).unwrap());
        assert!(!lambda_member(&q(5, 1, 0), &l1).unwrap());
        let zero = LambdaSet::new(TransferFunction::zero(M5), Index::I1);
        assert_eq!(lambda_member(&q(5, 1, 0), &zero), Err(Error::ZeroPlant));
    }

    #[test]
    fn quadratic_construction_example() {
        let pair = construct_witnesses_quadratic(&tf(M5, "(1+i5)/2")).unwrap().unwrap();
        assert_eq!((pair.lambda1.clone(), pair.lambda2.clone()), (q(5, 3, 0), q(5, 2, 0)));
        assert_eq!((pair.u.clone(), pair.v.clone()), (q(5, 1, 0), q(5, -1, 0)));
    }

    #[test]
    fn quadratic_construction_m13() {
        let pair =
            construct_witnesses_quadratic(&tf(RingDescriptor::Quadratic { m: 13 }, "(1+i13)/2")).unwrap().unwrap();
        let WitnessTrace::Quadratic(t) = &pair.trace else { panic!() };
        assert_eq!((t.norm.clone(), t.g.clone(), t.alpha_prime.clone()), (14.into(), 2.into(), 7.into()));
        assert_eq!((pair.lambda1, pair.lambda2), (q(13, 7, 0), q(13, 2, 0)));
        assert_eq!((pair.u, pair.v), (q(13, 1, 0), q(13, -3, 0)));
    }

    #[test]
    fn quadratic_recipe_gap_and_fallbacks() {
        let p = tf(M5, "(7+i5)/6");
        let Err(FallbackReason::QuadraticGcd { alpha_prime, beta, gcd }) = try_construct_quadratic(&p).unwrap() else {
            panic!()
        };
        assert_eq!((alpha_prime, beta, gcd), (9.into(), 6.into(), 3.into()));
        assert_eq!(construct_witnesses_quadratic(&p).unwrap(), None);
        let pair = search_witnesses_quadratic(&p, 50).unwrap().unwrap();
        assert_eq!(pair.lambda1, q(5, 2, -1));
        assert!(pair.verify(&p).unwrap());
        // another valid witness for the same plant
        let other = WitnessPair {
            lambda1: q(5, 5, 2),
            lambda2: q(5, -4, -2),
            u: q(5, 1, 0),
            v: q(5, 1, 0),
            trace: pair.trace.clone(),
        };
        assert!(other.verify(&p).unwrap());
        let pair = lattice_witnesses_quadratic(&p).unwrap().unwrap();
        assert!(pair.verify(&p).unwrap());
        assert_eq!(search_witnesses_quadratic(&p, 0).unwrap(), None);
    }

    #[test]
    fn box_order_is_by_radius_then_l1() {
        assert_eq!(ring_of_radius(0), vec![(0, 0)]);
        let r1 = ring_of_radius(1);
        assert_eq!(r1[..4], [(-1, 0), (0, -1), (0, 1), (1, 0)]);
        assert_eq!(r1.len(), 8);
    }

    #[test]
    fn plants_in_ring_are_rejected() {
        assert_eq!(construct_witnesses_quadratic(&tf(M5, "2")), Err(Error::PlantInRing));
        assert_eq!(construct_witnesses_delay(&tf(RingDescriptor::Delay, "1+x^2")), Err(Error::PlantInRing));
        assert_eq!(construct_witnesses_delay(&tf(RingDescriptor::Delay, "1/(1+x)")), Err(Error::NotCausal));
    }

    #[test]
    fn delay_construction_example() {
        let p = tf(RingDescriptor::Delay, "(1-x^3)/(1-x^2)");
        let pair = construct_witnesses_delay(&p).unwrap().unwrap();
        let WitnessTrace::Delay(t) = &pair.trace else { panic!() };
        assert_eq!(t.g, Poly::from_ints(&[1, -1]));
        assert_eq!(t.c, BigRat::new(2.into(), 9.into()));
        assert_eq!(t.d_second, poly(&[(1, 1), (0, 1), (-7, 9), (2, 9)]));
        assert_eq!(t.n_second, poly(&[(1, 1), (0, 1), (2, 9), (-7, 9), (2, 9)]));
        assert_eq!(t.alpha, poly(&[(-101, 988), (-441, 988), (77, 494)]));
        assert_eq!(t.beta, poly(&[(1089, 988), (441, 988), (693, 988)]));
        assert_eq!(t.r, poly(&[(0, 1), (441, 988)]));
        assert_eq!(
            pair.u,
            RingElement::delay(poly(&[(-101, 988), (0, 1), (77, 494), (-343, 988), (49, 494)])).unwrap()
        );
        assert_eq!(pair.v, RingElement::delay(poly(&[(1089, 988), (0, 1), (693, 988), (0, 1), (441, 988)])).unwrap());
        assert_eq!(pair.lambda1, RingElement::delay_ints(&[1, 0, 0, -1]).unwrap());
        assert!(pair.verify(&p).unwrap());
    }

    #[test]
    fn delay_construction_without_common_factor() {
        let p = tf(RingDescriptor::Delay, "(1+x^3)/(1+x^2)");
        let pair = construct_witnesses_delay(&p).unwrap().unwrap();
        let WitnessTrace::Delay(t) = &pair.trace else { panic!() };
        assert_eq!(t.q, Poly::one());
        assert_eq!(t.d_second, Poly::from_ints(&[1, 0, 1]));
        assert_eq!(t.n_second, Poly::from_ints(&[1, 0, 0, 1]));
    }

    #[test]
    fn delay_gcd_never_exceeds_degree_one() {
        // n = hN, d = hD with N/D reduced, so gcd(n, d) = h has degree ≤ 1
        let p = tf(RingDescriptor::Delay, "(1-x^4)/(1-x^6)");
        let pair = construct_witnesses_delay(&p).unwrap().unwrap();
        let WitnessTrace::Delay(t) = &pair.trace else { panic!() };
        assert_eq!(t.g, Poly::one());
        assert!(pair.verify(&p).unwrap());
    }

    #[test]
    fn delay_shared_factor_falls_back() {
        // d = (1 − x)(1 + 2x)(1 − x) is divisible by g twice
        let p = tf(RingDescriptor::Delay, "(1+x+x^3)/(1+x-2*x^2)");
        assert_eq!(try_construct_delay(&p).unwrap(), Err(FallbackReason::SharedFactor));
        let pair = find_witnesses(&p, SearchBounds::default()).unwrap().unwrap();
        assert!(pair.is_fallback());
        assert!(pair.verify(&p).unwrap());
    }

    #[test]
    fn delay_linear_search() {
        let p = tf(RingDescriptor::Delay, "(1-x^3)/(1-x^2)");
        let pair = search_witnesses_delay(&p, 8).unwrap().unwrap();
        assert!(pair.verify(&p).unwrap());
        assert_eq!(search_witnesses_delay(&p, 0).unwrap(), None);
    }

    #[test]
    fn second_index_holds_the_cofactor() {
        // with ab = a′b′ and p = a/a′: a ∈ Λ₁ and b ∈ Λ₂, but b ∉ Λ₁ here
        let p = tf(M5, "(1+i5)/2");
        assert!(lambda_member(&q(5, 1, 1), &LambdaSet::new(p.clone(), Index::I1)).unwrap());
        assert!(lambda_member(&q(5, 1, -1), &LambdaSet::new(p.clone(), Index::I2)).unwrap());
        assert!(!lambda_member(&q(5, 1, -1), &LambdaSet::new(p, Index::I1)).unwrap());
    }

    fn quad_plant() -> impl Strategy<Value = TransferFunction> {
        (-20i64..=20, -20i64..=20, 1i64..=20).prop_filter_map("in ring", |(a, b, c)| {
            let p = TransferFunction::ratio(&q(5, a, b), &q(5, c, 0)).ok()?;
            contains(&p).is_none().then_some(p)
        })
    }

    proptest! {
        #[test]
        fn lambda_sets_are_ideals(p in quad_plant(), a in (-5i64..=5, -5i64..=5), s in 0u64..4) {
            let pair = find_witnesses(&p, SearchBounds::default()).unwrap().unwrap();
            let ring_elt = q(5, a.0, a.1);
            for (lam, which) in [(&pair.lambda1, Index::I1), (&pair.lambda2, Index::I2)] {
                let set = LambdaSet::new(p.clone(), which);
                prop_assert!(lambda_member(&(&ring_elt * lam), &set).unwrap());
                prop_assert!(lambda_member(&(lam + &lam.pow(s as u32 + 1)), &set).unwrap());
            }
        }

        #[test]
        fn quadratic_witnesses_always_verify(p in quad_plant()) {
            let pair = find_witnesses(&p, SearchBounds { quad_box: 3, delay_degree: 8 }).unwrap().unwrap();
            prop_assert!(pair.verify(&p).unwrap());
        }

        #[test]
        fn delay_cofactors_have_no_linear_term(
            n in proptest::collection::vec(-4i64..=4, 1..4),
            d in proptest::collection::vec(-4i64..=4, 1..4),
        ) {
            let mut nc = vec![1, 0];
            nc.extend(&n);
            let mut dc = vec![1, 0];
            dc.extend(&d);
            let p = TransferFunction::delay(Poly::from_ints(&nc), Poly::from_ints(&dc)).unwrap();
            prop_assume!(contains(&p).is_none());
            if let Some(pair) = construct_witnesses_delay(&p).unwrap() {
                prop_assert!(pair.u.as_poly().unwrap().coeff(1).is_zero());
                prop_assert!(pair.v.as_poly().unwrap().coeff(1).is_zero());
                prop_assert!(pair.verify(&p).unwrap());
            }
        }
    }
}
