//! Coprimeness over `A`, existence of coprime factorizations, and the
//! nonexistence criterion built from `a, b, a′, b′ ∈ A` with `ab = a′b′`.
//!
//! In `Z[√m·i]` coprimeness is decided exactly from the Hermite form of
//! the ideal `(a, b)`. In the delay ring, `a, b ∈ A` are coprime over `A`
//! iff they are coprime over `Q[x]`: a Bezout pair `αa + βb = 1` over
//! `Q[x]` is moved into `A` by adding `r·(b, −a)` with
//! `r = (α₀β₁ − α₁β₀)x`, which cancels both `x¹` coefficients.

mod ideal;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{ext_gcd_int, ext_gcd_poly, is_perfect_square, solve_linear, BigRat, Poly, RatMatrix};
use crate::error::{Error, Result};
use crate::rings::{causal_representation, contains, is_unit, QuadInt, RingDescriptor, RingElement, TransferFunction};

pub use ideal::{ideal_is_principal, QuadIdeal};

/// Default degree bound for delay-ring linear searches.
pub const DEFAULT_DELAY_BOUND: usize = 8;
/// Default coefficient box for quadratic brute-force searches.
pub const DEFAULT_QUAD_BOX: i64 = 50;

/// Why two elements are not coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommonObstruction {
    /// The ideal `(a, b)` is proper.
    Ideal(QuadIdeal),
    /// A nonconstant common factor over `Q[x]` (monic).
    CommonFactor(Poly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoprimeCertificate {
    /// `x·a + y·b = 1`, checked when built.
    Witness {
        x: RingElement,
        y: RingElement,
    },
    NotCoprime(CommonObstruction),
    Unknown {
        bound: usize,
    },
}

impl CoprimeCertificate {
    pub fn witness(a: &RingElement, b: &RingElement, x: RingElement, y: RingElement) -> Result<Self> {
        if !(&(&x * a) + &(&y * b)).is_one() {
            return Err(Error::Precondition("Bezout witness does not satisfy x·a + y·b = 1".into()));
        }
        Ok(CoprimeCertificate::Witness { x, y })
    }

    pub fn is_coprime(&self) -> bool {
        matches!(self, CoprimeCertificate::Witness { .. })
    }
}

/// Moves a `Q[x]` Bezout pair `α·a + β·b = 1` of two delay-ring elements
/// into the ring. Returns `(r, α + r·b, β − r·a)`.
pub fn lift_delay_bezout(a: &Poly, b: &Poly, alpha: &Poly, beta: &Poly) -> (Poly, Poly, Poly) {
    let r0 = alpha.coeff(0) * beta.coeff(1) - alpha.coeff(1) * beta.coeff(0);
    let r = Poly::monomial(1, r0);
    let x = alpha + &(&r * b);
    let y = beta - &(&r * a);
    (r, x, y)
}

/// Decides whether `(a, b)` is coprime over `A` and, if so, returns a
/// Bezout witness. `bound` caps the degree of the delay-ring linear
/// search; beyond it the witness is built by [`lift_delay_bezout`].
pub fn are_coprime(a: &RingElement, b: &RingElement, bound: usize) -> Result<CoprimeCertificate> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let ring = a.ring();
    if is_unit(a) {
        let inv = crate::rings::contains(&a.to_field().inv().expect("unit")).expect("unit inverse");
        return CoprimeCertificate::witness(a, b, inv, RingElement::zero(ring));
    }
    if is_unit(b) {
        let inv = crate::rings::contains(&b.to_field().inv().expect("unit")).expect("unit inverse");
        return CoprimeCertificate::witness(a, b, RingElement::zero(ring), inv);
    }
    match (a, b) {
        (RingElement::Quadratic(qa), RingElement::Quadratic(qb)) => quad_coprime(qa, qb),
        (RingElement::Delay(pa), RingElement::Delay(pb)) => delay_coprime(pa, pb, bound),
        _ => unreachable!("ring checked above"),
    }
}

fn quad_coprime(a: &QuadInt, b: &QuadInt) -> Result<CoprimeCertificate> {
    let m = a.m;
    let ea = RingElement::Quadratic(a.clone());
    let eb = RingElement::Quadratic(b.clone());
    if a.im.is_zero() && b.im.is_zero() {
        let (g, u, v) = ext_gcd_int(&a.re, &b.re);
        if g.is_one() {
            return CoprimeCertificate::witness(
                &ea,
                &eb,
                RingElement::quad_big(m, u, BigInt::zero()),
                RingElement::quad_big(m, v, BigInt::zero()),
            );
        }
    }
    let h = QuadIdeal::hermite_of(&[a.clone(), b.clone()]);
    let ideal = QuadIdeal::from_generators(m, &[a.clone(), b.clone()])?;
    if !ideal.is_whole_ring() {
        return Ok(CoprimeCertificate::NotCoprime(CommonObstruction::Ideal(ideal)));
    }
    // first Hermite row is (1, 0); its combination of [a, aw, b, bw]
    let t = &h.transform[0];
    let x = RingElement::quad_big(m, t[0].clone(), t[1].clone());
    let y = RingElement::quad_big(m, t[2].clone(), t[3].clone());
    CoprimeCertificate::witness(&ea, &eb, x, y)
}

/// Degrees a delay-ring unknown of degree ≤ `bound` may occupy.
pub(crate) fn ring_degrees(bound: usize) -> Vec<usize> {
    (0..=bound).filter(|&k| k != 1).collect()
}

fn delay_coprime(a: &Poly, b: &Poly, bound: usize) -> Result<CoprimeCertificate> {
    let (g, alpha, beta) = ext_gcd_poly(a, b)?;
    if g.degree() != Some(0) {
        return Ok(CoprimeCertificate::NotCoprime(CommonObstruction::CommonFactor(g)));
    }
    let ea = RingElement::Delay(a.clone());
    let eb = RingElement::Delay(b.clone());
    if let Some((x, y)) = delay_bezout_search(a, b, bound)? {
        return CoprimeCertificate::witness(&ea, &eb, RingElement::Delay(x), RingElement::Delay(y));
    }
    let (_, x, y) = lift_delay_bezout(a, b, &alpha, &beta);
    CoprimeCertificate::witness(&ea, &eb, RingElement::delay(x)?, RingElement::delay(y)?)
}

/// Solves `x·a + y·b = 1` with `x, y ∈ A` of degree ≤ `bound` as an exact
/// linear system over the coefficients.
pub fn delay_bezout_search(a: &Poly, b: &Poly, bound: usize) -> Result<Option<(Poly, Poly)>> {
    let degs = ring_degrees(bound);
    let top = bound + a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let cols = 2 * degs.len();
    let mut m = RatMatrix::zeros(top + 1, cols);
    for (j, &k) in degs.iter().enumerate() {
        for (i, c) in a.coeffs().iter().enumerate() {
            m.set(i + k, j, c.clone());
        }
        for (i, c) in b.coeffs().iter().enumerate() {
            m.set(i + k, degs.len() + j, c.clone());
        }
    }
    let mut rhs = vec![BigRat::zero(); top + 1];
    rhs[0] = BigRat::one();
    let Some(sol) = solve_linear(&m, &rhs)? else { return Ok(None) };
    let unpack = |off: usize| {
        degs.iter().enumerate().fold(Poly::zero(), |acc, (j, &k)| &acc + &Poly::monomial(k, sol[off + j].clone()))
    };
    Ok(Some((unpack(0), unpack(degs.len()))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum NonexistenceCertificate {
    /// Maximal quadratic order: with `G = (n, d)`, the ideals `(n)G⁻¹` and
    /// `(d)G⁻¹` lie in the class of `G⁻¹` and are not principal.
    NonPrincipal { gcd_ideal: QuadIdeal, numerator_ideal: QuadIdeal, denominator_ideal: QuadIdeal },
    /// Delay ring: every factorization `n′/d′` with `xn′ + yd′ = 1` is a
    /// constant multiple of the reduced form `N/D`, and `N` or `D` has a
    /// nonzero `x¹` coefficient.
    ReducedFormOutsideRing { num: Poly, den: Poly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CFVerdict {
    Exists { num: RingElement, den: RingElement, x: RingElement, y: RingElement },
    NotExists(NonexistenceCertificate),
    Unknown { bound: usize },
}

impl CFVerdict {
    fn exists(p: &TransferFunction, num: RingElement, den: RingElement, bound: usize) -> Result<Option<Self>> {
        if TransferFunction::ratio(&num, &den)? != *p {
            return Err(Error::Precondition("factorization does not reproduce the plant".into()));
        }
        Ok(match are_coprime(&num, &den, bound)? {
            CoprimeCertificate::Witness { x, y } => Some(CFVerdict::Exists { num, den, x, y }),
            _ => None,
        })
    }
}

/// Decides whether `p` has a coprime factorization over `A`.
///
/// `bound` is the degree bound for delay-ring searches and the
/// coefficient box for non-maximal quadratic orders, where only
/// existence can be certified.
pub fn cf_exists(p: &TransferFunction, bound: usize) -> Result<CFVerdict> {
    if p.is_zero() {
        return Err(Error::ZeroPlant);
    }
    match p {
        TransferFunction::Quadratic(q) => {
            let rep = causal_representation(p).expect("every quadratic fraction is causal");
            let (RingElement::Quadratic(n), RingElement::Quadratic(d)) = (&rep.num, &rep.den) else { unreachable!() };
            if p.ring().is_maximal_order() {
                let g = QuadIdeal::from_generators(q.m, &[n.clone(), d.clone()])?;
                let i = QuadIdeal::principal(n)?.divide_by(&g)?;
                let j = QuadIdeal::principal(d)?.divide_by(&g)?;
                if let Some(dg) = ideal_is_principal(&j)? {
                    let den = RingElement::Quadratic(dg);
                    let num = contains(&(p * &den.to_field())).expect("p·d′ generates (n)G⁻¹");
                    if let Some(v) = CFVerdict::exists(p, num, den, bound)? {
                        return Ok(v);
                    }
                }
                return Ok(CFVerdict::NotExists(NonexistenceCertificate::NonPrincipal {
                    gcd_ideal: g,
                    numerator_ideal: i,
                    denominator_ideal: j,
                }));
            }
            let side = bound as i64;
            for t in -side..=side {
                for s in -side..=side {
                    let den = RingElement::quad(q.m, s, t);
                    if den.is_zero() {
                        continue;
                    }
                    let Some(num) = contains(&(p * &den.to_field())) else { continue };
                    if let Some(v) = CFVerdict::exists(p, num, den, DEFAULT_DELAY_BOUND)? {
                        return Ok(v);
                    }
                }
            }
            Ok(CFVerdict::Unknown { bound })
        }
        TransferFunction::Delay { num, den } => {
            match (RingElement::delay(num.clone()), RingElement::delay(den.clone())) {
                (Ok(n), Ok(d)) => Ok(CFVerdict::exists(p, n, d, bound)?.expect("reduced form is coprime over Q[x]")),
                _ => Ok(CFVerdict::NotExists(NonexistenceCertificate::ReducedFormOutsideRing {
                    num: num.clone(),
                    den: den.clone(),
                })),
            }
        }
    }
}

/// Candidate data `a, b, a′, b′ ∈ A` for the nonexistence criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyInstance {
    pub a: RingElement,
    pub b: RingElement,
    pub a_prime: RingElement,
    pub b_prime: RingElement,
}

/// Three-valued condition outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyReport {
    pub plant: TransferFunction,
    /// `ab = a′b′`
    pub cond_i: bool,
    pub causal: bool,
    pub cf: CFVerdict,
    /// coprimeness of `(a, b)`
    pub cond_iii: CoprimeCertificate,
}

impl SufficiencyReport {
    pub fn cond_ii(&self) -> Verdict {
        match (&self.cf, self.causal) {
            (_, false) | (CFVerdict::Exists { .. }, _) => Verdict::Fails,
            (CFVerdict::NotExists(_), true) => Verdict::Holds,
            (CFVerdict::Unknown { .. }, true) => Verdict::Unknown,
        }
    }

    pub fn cond_iii_holds(&self) -> bool {
        self.cond_iii.is_coprime()
    }

    /// All three conditions verified: a causal stabilizable plant without
    /// coprime factorization is exhibited.
    pub fn all_hold(&self) -> bool {
        self.cond_i && self.cond_ii() == Verdict::Holds && self.cond_iii_holds()
    }
}

pub fn verify_sufficiency(inst: &SufficiencyInstance, bound: usize) -> Result<SufficiencyReport> {
    let ring = inst.a.ring();
    if [&inst.b, &inst.a_prime, &inst.b_prime].iter().any(|e| e.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    if inst.a_prime.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let plant = TransferFunction::ratio(&inst.a, &inst.a_prime)?;
    let cond_i = &inst.a * &inst.b == &inst.a_prime * &inst.b_prime;
    let causal = causal_representation(&plant).is_some();
    let cf = if plant.is_zero() {
        // 0 = 0/1 is trivially coprime
        CFVerdict::Exists {
            num: RingElement::zero(ring),
            den: RingElement::one(ring),
            x: RingElement::zero(ring),
            y: RingElement::one(ring),
        }
    } else {
        cf_exists(&plant, bound)?
    };
    let cond_iii = if inst.a.is_zero() && inst.b.is_zero() {
        CoprimeCertificate::NotCoprime(CommonObstruction::CommonFactor(Poly::zero()))
    } else {
        are_coprime(&inst.a, &inst.b, bound)?
    };
    Ok(SufficiencyReport { plant, cond_i, causal, cf, cond_iii })
}

/// Parameters of the family `A = Z[√(xy−1)·i]`, `p = (1 + √(xy−1)·i)/x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub x: i64,
    pub y: i64,
}

impl FamilyParams {
    pub fn validate(&self) -> Result<()> {
        let (x, y) = (self.x, self.y);
        if x < 2 || y <= x {
            return Err(Error::InvalidFamily(format!("y > x ≥ 2 violated by x={x}, y={y}")));
        }
        if x.gcd(&y) != 1 {
            return Err(Error::InvalidFamily(format!("gcd(x, y) = 1 violated: gcd({x}, {y}) = {}", x.gcd(&y))));
        }
        let m = x
            .checked_mul(y)
            .and_then(|v| v.checked_sub(1))
            .ok_or_else(|| Error::InvalidFamily("xy − 1 overflows".into()))?;
        if is_perfect_square(&BigInt::from(m)) {
            return Err(Error::InvalidFamily(format!("xy − 1 is not square violated: {m} is a square")));
        }
        Ok(())
    }

    pub fn m(&self) -> u64 {
        (self.x * self.y - 1) as u64
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::Quadratic { m: self.m() }
    }

    /// `(1 + √m·i)/x`
    pub fn plant(&self) -> TransferFunction {
        let m = self.m();
        TransferFunction::ratio(&RingElement::quad(m, 1, 1), &RingElement::quad(m, self.x, 0)).expect("x ≥ 2")
    }
}

/// `(a, b, a′, b′) = (1 + √m·i, 1 − √m·i, x, y)` with `m = xy − 1`, so
/// that `ab = 1 + m = xy = a′b′`.
pub fn generate_family_instance(fp: FamilyParams) -> Result<SufficiencyInstance> {
    fp.validate()?;
    let m = fp.m();
    Ok(SufficiencyInstance {
        a: RingElement::quad(m, 1, 1),
        b: RingElement::quad(m, 1, -1),
        a_prime: RingElement::quad(m, fp.x, 0),
        b_prime: RingElement::quad(m, fp.y, 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_transfer_function;

    const M5: RingDescriptor = RingDescriptor::Quadratic { m: 5 };

    fn q5(re: i64, im: i64) -> RingElement {
        RingElement::quad(5, re, im)
    }

    fn d(cs: &[i64]) -> RingElement {
        RingElement::delay_ints(cs).unwrap()
    }

    #[test]
    fn conjugate_pair_over_z_sqrt5_is_not_coprime() {
        // 1+w and 1−w both lie in the prime (2, 1+w) above 2
        let cert = are_coprime(&q5(1, 1), &q5(1, -1), 8).unwrap();
        let CoprimeCertificate::NotCoprime(CommonObstruction::Ideal(i)) = cert else { panic!("{cert:?}") };
        assert_eq!(
            i,
            QuadIdeal::from_generators(
                5,
                &[QuadInt { m: 5, re: 2.into(), im: 0.into() }, QuadInt { m: 5, re: 1.into(), im: 1.into() }]
            )
            .unwrap()
        );
    }

    #[test]
    fn two_and_one_plus_w_not_coprime() {
        let cert = are_coprime(&q5(2, 0), &q5(1, 1), 8).unwrap();
        let CoprimeCertificate::NotCoprime(CommonObstruction::Ideal(i)) = cert else { panic!() };
        assert_eq!(i.norm(), BigInt::from(2));
    }

    #[test]
    fn unit_first_argument() {
        let cert = are_coprime(&q5(1, 0), &q5(7, 3), 8).unwrap();
        assert_eq!(cert, CoprimeCertificate::Witness { x: q5(1, 0), y: q5(0, 0) });
        assert_eq!(are_coprime(&q5(0, 0), &q5(0, 0), 8), Err(Error::BothZero));
    }

    #[test]
    fn coprime_quadratic_pair_gets_witness() {
        // (3, 1+w): norm-3 prime, but (1+2w, 2) is coprime
        let cert = are_coprime(&q5(1, 2), &q5(2, 0), 8).unwrap();
        assert!(cert.is_coprime());
    }

    #[test]
    fn delay_coprime_pairs() {
        let cert = are_coprime(&d(&[1, 0, 0, -1]), &d(&[1, 0, 0, 1]), 8).unwrap();
        assert!(cert.is_coprime());
        let cert = are_coprime(&d(&[1, 0, 0, -1]), &d(&[1, 0, -1]), 8).unwrap();
        assert_eq!(cert, CoprimeCertificate::NotCoprime(CommonObstruction::CommonFactor(Poly::from_ints(&[-1, 1]))));
        // both in Z share the factor x²
        let cert = are_coprime(&d(&[0, 0, 1]), &d(&[0, 0, 0, 1]), 8).unwrap();
        assert!(!cert.is_coprime());
    }

    #[test]
    fn delay_lift_beyond_search_bound() {
        let a = d(&[1, 0, 0, -1]);
        let b = d(&[1, 0, -7, 2]);
        let cert = are_coprime(&a, &b, 0).unwrap();
        assert!(cert.is_coprime());
    }

    #[test]
    fn non_principal_gcd_has_no_coprime_factorization() {
        let p = parse_transfer_function(M5, "(1+i5)/2").unwrap();
        let CFVerdict::NotExists(NonexistenceCertificate::NonPrincipal { gcd_ideal, denominator_ideal, .. }) =
            cf_exists(&p, 8).unwrap()
        else {
            panic!()
        };
        assert_eq!(denominator_ideal.to_string(), "(2, 1+i5)");
        assert_eq!(gcd_ideal.to_string(), "(2, 1+i5)");
    }

    #[test]
    fn three_halves_factors_coprimely() {
        let p = parse_transfer_function(M5, "3/2").unwrap();
        let CFVerdict::Exists { num, den, x, y } = cf_exists(&p, 8).unwrap() else { panic!() };
        assert_eq!((num.clone(), den.clone()), (q5(3, 0), q5(2, 0)));
        assert!((&(&x * &num) + &(&y * &den)).is_one());
        assert_eq!(cf_exists(&TransferFunction::zero(M5), 8), Err(Error::ZeroPlant));
    }

    #[test]
    fn delay_example_reduced_form_leaves_the_ring() {
        let p = parse_transfer_function(RingDescriptor::Delay, "(1 - x^3)/(1 - x^2)").unwrap();
        let v = cf_exists(&p, 8).unwrap();
        assert_eq!(
            v,
            CFVerdict::NotExists(NonexistenceCertificate::ReducedFormOutsideRing {
                num: Poly::from_ints(&[1, 1, 1]),
                den: Poly::from_ints(&[1, 1]),
            })
        );
        let p = parse_transfer_function(RingDescriptor::Delay, "(1 + x^2)/(1 + x^3)").unwrap();
        assert!(matches!(cf_exists(&p, 8).unwrap(), CFVerdict::Exists { .. }));
    }

    #[test]
    fn non_maximal_order_searches_for_existence() {
        let m11 = RingDescriptor::Quadratic { m: 11 };
        let p = parse_transfer_function(m11, "3/2").unwrap();
        assert!(matches!(cf_exists(&p, 3).unwrap(), CFVerdict::Exists { .. }));
        // (1+w)/3 over Z[√11 i]: no factorization with small denominators
        let p = parse_transfer_function(m11, "(1+i11)/3").unwrap();
        assert_eq!(cf_exists(&p, 3).unwrap(), CFVerdict::Unknown { bound: 3 });
    }

    #[test]
    fn family_instance_fails_only_coprimeness() {
        let inst = SufficiencyInstance { a: q5(1, 1), b: q5(1, -1), a_prime: q5(2, 0), b_prime: q5(3, 0) };
        let rep = verify_sufficiency(&inst, 8).unwrap();
        assert_eq!(rep.plant.to_string(), "(1+i5)/2");
        assert!(rep.cond_i);
        assert_eq!(rep.cond_ii(), Verdict::Holds);
        assert!(!rep.cond_iii_holds());
    }

    #[test]
    fn delay_instance_verifies() {
        let inst = SufficiencyInstance {
            a: d(&[1, 0, 0, -1]),
            b: d(&[1, 0, 0, 1]),
            a_prime: d(&[1, 0, -1]),
            b_prime: d(&[1, 0, 1, 0, 1]),
        };
        let rep = verify_sufficiency(&inst, 8).unwrap();
        assert!(rep.cond_i && rep.causal && rep.cond_iii_holds());
        assert_eq!(rep.cond_ii(), Verdict::Holds);
        assert!(rep.all_hold());
    }

    #[test]
    fn trivial_instance_fails_first_condition() {
        let inst = SufficiencyInstance { a: q5(1, 0), b: q5(1, 0), a_prime: q5(1, 0), b_prime: q5(2, 0) };
        assert!(!verify_sufficiency(&inst, 8).unwrap().cond_i);
        let bad = SufficiencyInstance { a_prime: q5(0, 0), ..inst };
        assert_eq!(verify_sufficiency(&bad, 8), Err(Error::DivisionByZero));
    }

    #[test]
    fn family_generation_and_validation() {
        let inst = generate_family_instance(FamilyParams { x: 2, y: 3 }).unwrap();
        assert_eq!(inst, SufficiencyInstance { a: q5(1, 1), b: q5(1, -1), a_prime: q5(2, 0), b_prime: q5(3, 0) });
        let inst = generate_family_instance(FamilyParams { x: 2, y: 7 }).unwrap();
        assert_eq!(inst.a.ring(), RingDescriptor::Quadratic { m: 13 });
        let e = generate_family_instance(FamilyParams { x: 2, y: 5 }).unwrap_err();
        assert!(e.to_string().contains("not square"));
        assert!(generate_family_instance(FamilyParams { x: 2, y: 4 }).is_err());
        assert!(generate_family_instance(FamilyParams { x: 1, y: 4 }).is_err());
        assert!(generate_family_instance(FamilyParams { x: 3, y: 3 }).is_err());
    }

    #[test]
    fn family_coprimeness_tracks_parity_of_xy() {
        // (1+w, 1−w) ∋ 2 and 1+w; the ideal is whole iff 1 + m = xy is odd
        for x in 2..=12i64 {
            for y in x + 1..=12 {
                let fp = FamilyParams { x, y };
                let Ok(inst) = generate_family_instance(fp) else { continue };
                let rep = verify_sufficiency(&inst, 2).unwrap();
                assert!(rep.cond_i);
                assert_eq!(rep.cond_iii_holds(), (x * y) % 2 == 1, "x={x} y={y}");
            }
        }
    }
}
