//! The closed loop of a plant `p` and a controller `c`:
//!
//! ```text
//! H(p, c) = [ 1/(1+pc)   −p/(1+pc) ]
//!           [ c/(1+pc)    1/(1+pc) ]
//! ```
//!
//! The loop is stable when all four entries lie in `A`.

use crate::error::{Error, Result};
use crate::rings::{contains, RingDescriptor, RingElement, TransferFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeedbackMatrix {
    pub h11: TransferFunction,
    pub h12: TransferFunction,
    pub h21: TransferFunction,
    pub h22: TransferFunction,
    pub stable: bool,
    pub well_posed: bool,
}

impl FeedbackMatrix {
    fn new(entries: [TransferFunction; 4], well_posed: bool) -> Self {
        let stable = entries.iter().all(|e| contains(e).is_some());
        let [h11, h12, h21, h22] = entries;
        FeedbackMatrix { h11, h12, h21, h22, stable, well_posed }
    }

    pub fn entries(&self) -> [[&TransferFunction; 2]; 2] {
        [[&self.h11, &self.h12], [&self.h21, &self.h22]]
    }

    /// Per-entry membership in `A`.
    pub fn membership(&self) -> [[bool; 2]; 2] {
        self.entries().map(|row| row.map(|e| contains(e).is_some()))
    }

    pub fn same_entries(&self, other: &FeedbackMatrix) -> bool {
        self.entries() == other.entries()
    }
}

pub fn feedback_matrix(p: &TransferFunction, c: &TransferFunction) -> Result<FeedbackMatrix> {
    if p.ring() != c.ring() {
        return Err(Error::RingMismatch);
    }
    let ret = &TransferFunction::one(p.ring()) + &(p * c);
    let s = ret.inv().ok_or(Error::IllPosed)?;
    Ok(FeedbackMatrix::new([s.clone(), -&(p * &s), c * &s, s], true))
}

pub fn is_stable(p: &TransferFunction, c: &TransferFunction) -> bool {
    feedback_matrix(p, c).is_ok_and(|h| h.stable)
}

/// Free parameter of the stabilizing family of `(1+√5·i)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrixQ {
    pub q11: RingElement,
    pub q12: RingElement,
    pub q21: RingElement,
    pub q22: RingElement,
}

const Z5: RingDescriptor = RingDescriptor::Quadratic { m: 5 };

impl ParamMatrixQ {
    pub fn zero() -> Self {
        let z = RingElement::zero(Z5);
        ParamMatrixQ { q11: z.clone(), q12: z.clone(), q21: z.clone(), q22: z }
    }

    pub fn identity() -> Self {
        let (z, o) = (RingElement::zero(Z5), RingElement::one(Z5));
        ParamMatrixQ { q11: o.clone(), q12: z.clone(), q21: z, q22: o }
    }
}

/// Closed-loop matrices of all stabilizing controllers of
/// `(1+√5·i)/2`, as affine functions of `Q`. `Q = 0` gives the loop of
/// `c = (−1+√5·i)/2`.
pub fn stabilizing_family_m5(q: &ParamMatrixQ) -> Result<FeedbackMatrix> {
    let entries = [&q.q11, &q.q12, &q.q21, &q.q22];
    if entries.iter().any(|e| e.ring() != Z5) {
        return Err(Error::RingMismatch);
    }
    let k = |re: i64, im: i64| RingElement::quad(5, re, im);
    let lin = |c: [RingElement; 5]| {
        let [c11, c12, c21, c22, c0] = c;
        &(&(&(&c11 * &q.q11) + &(&c12 * &q.q12)) + &(&(&c21 * &q.q21) + &(&c22 * &q.q22))) + &c0
    };
    let h11 = lin([k(6, 0), k(-3, 3), k(-2, -2), k(6, 0), k(-2, 0)]);
    let h12 = lin([k(-3, -3), k(9, 0), k(-4, 2), k(-3, -3), k(1, 1)]);
    let h21 = lin([k(-2, 2), k(-4, -2), k(4, 0), k(-2, 2), k(1, -1)]);
    let well_posed = !h11.is_zero();
    Ok(FeedbackMatrix::new([h11.to_field(), h12.to_field(), h21.to_field(), h11.to_field()], well_posed))
}

/// `c = h₂₁/h₁₁`, checked against `h₂₁/h₂₂`.
pub fn extract_controller(h: &FeedbackMatrix) -> Result<TransferFunction> {
    let c = h.h21.checked_div(&h.h11).ok_or(Error::DivisionByZero)?;
    let c2 = h.h21.checked_div(&h.h22).ok_or(Error::DivisionByZero)?;
    if c != c2 {
        return Err(Error::Precondition("h21/h11 and h21/h22 disagree".into()));
    }
    Ok(c)
}
