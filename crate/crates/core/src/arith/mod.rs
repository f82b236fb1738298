//! Exact arithmetic substrate: big integers and rationals, one quadratic
//! extension, univariate polynomials over the rationals, exact linear
//! solving and integer lattices.

mod int;
pub mod lattice;
mod matrix;
mod poly;
mod quad;

pub use int::{ext_gcd_int, is_perfect_square, is_squarefree, isqrt};
pub use matrix::{solve_linear, RatMatrix};
pub use poly::{ext_gcd_poly, poly_divmod, Poly};
pub use quad::{quad_norm, QuadElem};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` into a rational.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) {
        return None;
    }
    Some(BigRat::new(n, d))
}

/// Exact string form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat() -> impl Strategy<Value = BigRat> {
        (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| BigRat::new(n.into(), d.into()))
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rat(" -6/4 "), Some(BigRat::new((-3).into(), 2.into())));
        assert_eq!(parse_rat("7"), Some(BigRat::from_integer(7.into())));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(rat_to_string(&BigRat::new(4.into(), (-6).into())), "-2/3");
    }

    proptest! {
        #[test]
        fn field_laws(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn normalized_and_round_trips(a in rat()) {
            prop_assert!(a.denom() > &BigInt::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(a.numer(), a.denom()), BigInt::from(1));
            prop_assert_eq!(parse_rat(&rat_to_string(&a)), Some(a));
        }
    }
}
