//! Controller synthesis from a witness pair `u·λ₁ + v·λ₂ = 1`.
//!
//! With the local factorizations `p = n₁/d₁ = n₂/d₂` where
//! `(n₁, d₁, y₁, x₁) = (1, 1/p, 1, 0)` and `(n₂, d₂, y₂, x₂) = (p, 1, 0, 1)`,
//! and `aₖ` chosen so that `a₁λ₁^ω + a₂λ₂^ω = 1`, the controller is
//!
//! ```text
//! c = Σ aₖλₖ^ω dₖ (yₖ + rₖdₖ) / Σ aₖλₖ^ω dₖ (xₖ − rₖnₖ)
//! ```
//!
//! provided the eight products `aₖλₖ^ω·{nₖ, dₖ}·{xₖ − rₖnₖ, yₖ + rₖdₖ}`
//! lie in `A` and the denominator is nonzero.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::arith::ext_gcd_int;
use crate::closedloop::{feedback_matrix, FeedbackMatrix};
use crate::elemfactor::{find_witnesses, SearchBounds, WitnessPair};
use crate::error::{Error, Result};
use crate::rings::{contains, is_causal, RingDescriptor, RingElement, TransferFunction};

/// The two local factorizations of `p` and the parameters `r₁, r₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimePairLocal {
    pub n1: TransferFunction,
    pub d1: TransferFunction,
    pub y1: TransferFunction,
    pub x1: TransferFunction,
    pub n2: TransferFunction,
    pub d2: TransferFunction,
    pub y2: TransferFunction,
    pub x2: TransferFunction,
    pub r1: TransferFunction,
    pub r2: TransferFunction,
}

impl CoprimePairLocal {
    pub fn new(p: &TransferFunction, r1: &RingElement, r2: &RingElement) -> Result<Self> {
        let ring = p.ring();
        if r1.ring() != ring || r2.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let one = TransferFunction::one(ring);
        let zero = TransferFunction::zero(ring);
        let local = CoprimePairLocal {
            n1: one.clone(),
            d1: p.inv().ok_or(Error::ZeroPlant)?,
            y1: one.clone(),
            x1: zero.clone(),
            n2: p.clone(),
            d2: one.clone(),
            y2: zero,
            x2: one,
            r1: r1.to_field(),
            r2: r2.to_field(),
        };
        debug_assert!(local.identities_hold());
        Ok(local)
    }

    /// `yₖnₖ + xₖdₖ = 1` for both `k`.
    pub fn identities_hold(&self) -> bool {
        let one = TransferFunction::one(self.n1.ring());
        &(&self.y1 * &self.n1) + &(&self.x1 * &self.d1) == one && &(&self.y2 * &self.n2) + &(&self.x2 * &self.d2) == one
    }

    fn parts(&self, k: usize) -> [&TransferFunction; 5] {
        match k {
            1 => [&self.n1, &self.d1, &self.y1, &self.x1, &self.r1],
            _ => [&self.n2, &self.d2, &self.y2, &self.x2, &self.r2],
        }
    }

    /// `(xₖ − rₖnₖ, yₖ + rₖdₖ)`
    fn shifted(&self, k: usize) -> (TransferFunction, TransferFunction) {
        let [n, d, y, x, r] = self.parts(k);
        (x - &(r * n), y + &(r * d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisConfig {
    pub omega_max: u32,
    pub r1: Option<RingElement>,
    pub r2: Option<RingElement>,
    pub bounds: SearchBounds,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        SynthesisConfig { omega_max: 32, r1: None, r2: None, bounds: SearchBounds::default() }
    }
}

fn as_integer(e: &RingElement) -> Option<BigInt> {
    let q = e.as_quad()?;
    q.im.is_zero().then(|| q.re.clone())
}

/// Finds `a₁, a₂` with `a₁λ₁^ω + a₂λ₂^ω = 1` from `u·λ₁ + v·λ₂ = 1`.
///
/// Expands `(uλ₁ + vλ₂)^(2ω−1)`: every term has `λ₁`-exponent `≥ ω` or
/// `λ₂`-exponent `≥ ω`. Rational integers use an extended gcd instead,
/// unless it returns a zero cofactor.
pub fn solve_condition_i(
    l1: &RingElement,
    l2: &RingElement,
    u: &RingElement,
    v: &RingElement,
    omega: u32,
) -> Result<(RingElement, RingElement)> {
    if omega == 0 {
        return Err(Error::Precondition("ω must be positive".into()));
    }
    if !(&(u * l1) + &(v * l2)).is_one() {
        return Err(Error::Precondition("u·λ₁ + v·λ₂ ≠ 1".into()));
    }
    let ring = l1.ring();
    let (p1, p2) = (l1.pow(omega), l2.pow(omega));
    if let (Some(i1), Some(i2)) = (as_integer(&p1), as_integer(&p2)) {
        let (g, a, b) = ext_gcd_int(&i1, &i2);
        if g.is_one() && !a.is_zero() && !b.is_zero() {
            let RingDescriptor::Quadratic { m } = ring else { unreachable!() };
            let a1 = RingElement::quad_big(m, a, BigInt::zero());
            let a2 = RingElement::quad_big(m, b, BigInt::zero());
            debug_assert!((&(&a1 * &p1) + &(&a2 * &p2)).is_one());
            return Ok((a1, a2));
        }
    }
    Ok(binomial_split(l1, l2, u, v, omega))
}

/// The binomial form of [`solve_condition_i`], without the integer shortcut.
pub fn binomial_split(
    l1: &RingElement,
    l2: &RingElement,
    u: &RingElement,
    v: &RingElement,
    omega: u32,
) -> (RingElement, RingElement) {
    let ring = l1.ring();
    let e = 2 * omega - 1;
    let (ul, vl) = (u * l1, v * l2);
    let mut a1 = RingElement::zero(ring);
    let mut a2 = RingElement::zero(ring);
    for k in 0..=e {
        let c = RingElement::from_int(ring, binomial(e as i64, k as i64));
        let term = if k >= omega {
            &(&(&c * &u.pow(k)) * &l1.pow(k - omega)) * &vl.pow(e - k)
        } else {
            &(&(&c * &ul.pow(k)) * &v.pow(e - k)) * &l2.pow(omega - 1 - k)
        };
        if k >= omega {
            a1 = &a1 + &term;
        } else {
            a2 = &a2 + &term;
        }
    }
    debug_assert!((&(&a1 * &l1.pow(omega)) + &(&a2 * &l2.pow(omega))).is_one());
    (a1, a2)
}

/// The eight products of the second condition, in the order
/// `n(x − rn), n(y + rd), d(x − rn), d(y + rd)` for `k = 1, 2`, each
/// times `aₖλₖ^ω`. `None` if any lies outside `A`.
pub fn check_condition_ii(
    local: &CoprimePairLocal,
    a: [&RingElement; 2],
    lambda: [&RingElement; 2],
    omega: u32,
) -> Option<[RingElement; 8]> {
    let mut out = Vec::with_capacity(8);
    for k in 1..=2 {
        let t = (a[k - 1] * &lambda[k - 1].pow(omega)).to_field();
        let [n, d, ..] = local.parts(k);
        let (xs, ys) = local.shifted(k);
        for f in [&(n * &xs), &(n * &ys), &(d * &xs), &(d * &ys)] {
            out.push(contains(&(&t * f))?);
        }
    }
    out.try_into().ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaData {
    pub omega: u32,
    pub a1: RingElement,
    pub a2: RingElement,
    pub lambda1: RingElement,
    pub lambda2: RingElement,
    pub r1: RingElement,
    pub r2: RingElement,
    pub condition_ii_products: [RingElement; 8],
    pub witness: WitnessPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisPath {
    /// `p ∈ A`, stabilized by `c = 0`
    PlantInRing,
    Formula(Box<FormulaData>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisResult {
    pub controller: TransferFunction,
    /// reported, not required
    pub controller_causal: bool,
    pub closed_loop: FeedbackMatrix,
    pub path: SynthesisPath,
}

impl SynthesisResult {
    pub fn formula(&self) -> Option<&FormulaData> {
        match &self.path {
            SynthesisPath::Formula(f) => Some(f),
            SynthesisPath::PlantInRing => None,
        }
    }
}

fn verified(p: &TransferFunction, controller: TransferFunction, path: SynthesisPath) -> Result<SynthesisResult> {
    let closed_loop = feedback_matrix(p, &controller)?;
    if !closed_loop.stable {
        return Err(Error::VerificationFailed);
    }
    Ok(SynthesisResult { controller_causal: is_causal(&controller), controller, closed_loop, path })
}

/// Synthesizes a stabilizing controller for a causal plant and checks
/// the closed loop before returning it.
pub fn synthesize(p: &TransferFunction, cfg: &SynthesisConfig) -> Result<SynthesisResult> {
    if cfg.omega_max == 0 {
        return Err(Error::Precondition("omega_max must be at least 1".into()));
    }
    if !is_causal(p) {
        return Err(Error::NotCausal);
    }
    let ring = p.ring();
    if contains(p).is_some() {
        return verified(p, TransferFunction::zero(ring), SynthesisPath::PlantInRing);
    }
    let zero = RingElement::zero(ring);
    let r1 = cfg.r1.as_ref().unwrap_or(&zero);
    let r2 = cfg.r2.as_ref().unwrap_or(&zero);
    let local = CoprimePairLocal::new(p, r1, r2)?;
    let found = find_witnesses(p, cfg.bounds)?
        .ok_or_else(|| Error::WitnessSearchExhausted(format!("no witness pair for {p}")))?;
    // a zero denominator (e.g. v = 0 when λ₁ is a unit) is retried with
    // the Bezout pair (u + kλ₂, v − kλ₁)
    let mut vanished = false;
    for k in [0, 1, -1] {
        let witness = shifted_witness(&found, k);
        match formula(p, &local, &witness, cfg.omega_max)? {
            Some(Some(data)) => {
                let controller = data.1;
                return verified(p, controller, SynthesisPath::Formula(Box::new(data.0)));
            }
            Some(None) => vanished = true,
            None => {}
        }
    }
    Err(if vanished { Error::ConditionIiiViolated } else { Error::OmegaMaxExceeded(cfg.omega_max) })
}

fn shifted_witness(w: &WitnessPair, k: i64) -> WitnessPair {
    if k == 0 {
        return w.clone();
    }
    let k = RingElement::from_int(w.lambda1.ring(), k);
    WitnessPair { u: &w.u + &(&k * &w.lambda2), v: &w.v - &(&k * &w.lambda1), ..w.clone() }
}

/// Smallest `ω` passing the second condition, then the controller.
/// `None` if no `ω ≤ omega_max` works, `Some(None)` if the denominator
/// vanishes.
fn formula(
    p: &TransferFunction,
    local: &CoprimePairLocal,
    witness: &WitnessPair,
    omega_max: u32,
) -> Result<Option<Option<(FormulaData, TransferFunction)>>> {
    let (l1, l2) = (&witness.lambda1, &witness.lambda2);
    for omega in 1..=omega_max {
        let (a1, a2) = solve_condition_i(l1, l2, &witness.u, &witness.v, omega)?;
        let Some(products) = check_condition_ii(local, [&a1, &a2], [l1, l2], omega) else { continue };
        let t1 = (&a1 * &l1.pow(omega)).to_field();
        let t2 = (&a2 * &l2.pow(omega)).to_field();
        let (xs1, ys1) = local.shifted(1);
        let (xs2, ys2) = local.shifted(2);
        let num = &(&(&t1 * &local.d1) * &ys1) + &(&(&t2 * &local.d2) * &ys2);
        let den = &(&(&t1 * &local.d1) * &xs1) + &(&(&t2 * &local.d2) * &xs2);
        let Some(controller) = num.checked_div(&den) else { return Ok(Some(None)) };
        debug_assert_eq!(p.ring(), controller.ring());
        let data = FormulaData {
            omega,
            a1,
            a2,
            lambda1: l1.clone(),
            lambda2: l2.clone(),
            r1: contains(&local.r1).expect("r₁ ∈ A"),
            r2: contains(&local.r2).expect("r₂ ∈ A"),
            condition_ii_products: products,
            witness: witness.clone(),
        };
        return Ok(Some(Some((data, controller))));
    }
    Ok(None)
}
