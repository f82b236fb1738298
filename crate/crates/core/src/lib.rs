//! Exact computer algebra for feedback stabilization of SISO plants over
//! stable rings that lack coprime factorizations: the quadratic orders
//! Z[√m·i] and the delay ring Q[x², x³].

pub mod arith;
pub mod error;

pub use error::{Error, Result};
pub mod closedloop;
pub mod coprime;
pub mod elemfactor;
pub mod rings;
pub mod synthesis;
