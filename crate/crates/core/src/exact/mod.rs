//! Exact rational scalars, vectors and matrices.
//!
//! Rationals are [`num::BigRational`]: always stored canonically reduced with
//! a positive denominator, so equality is structural. In JSON payloads a
//! rational is the string `"p/q"`, or `"p"` when the denominator is 1.

mod linalg;
mod vector;

pub use linalg::{
    determinant, diophantine_solve, integer_kernel_basis, invert, rank, rational_kernel,
    saturate_lattice, solve_linear, LinearSolution,
};
pub use vector::{RatMatrix, RatVector};

use num::{BigInt, BigRational, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar, canonically reduced.
pub type Rational = BigRational;
/// Arbitrary-precision integer.
pub type Integer = BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector has no primitive ray representative")]
    ZeroVector,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// Shorthand constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p/q"` or `"p"`; rejects zero denominators and garbage.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ExactError::ParseRational(s.to_string()));
    }
    t.parse::<Rational>()
        .map_err(|_| ExactError::ParseRational(s.to_string()))
}

/// The unique integer vector with coprime entries on the open ray `R>0 * v`.
pub fn primitive_integer_ray(v: &RatVector) -> Result<RatVector, ExactError> {
    if v.is_zero() {
        return Err(ExactError::ZeroVector);
    }
    let mut scale = BigInt::from(1);
    for e in v.iter() {
        scale = num::Integer::lcm(&scale, e.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|e| (e * Rational::from(scale.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = num::Integer::gcd(&g, n);
    }
    debug_assert!(g.is_positive());
    Ok(RatVector::new(
        ints.into_iter().map(|n| Rational::from(n / &g)).collect(),
    ))
}

/// True when every entry is an integer.
pub fn is_integer_vector(v: &RatVector) -> bool {
    v.iter().all(|e| e.is_integer())
}

/// Exact test for a perfect square; returns the nonnegative square root.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn primitive_ray_clears_denominators() {
        let v = RatVector::new(vec![rat(2, 3), rat(4, 3)]);
        assert_eq!(primitive_integer_ray(&v).unwrap(), RatVector::from_ints(&[1, 2]));
    }

    #[test]
    fn primitive_ray_keeps_direction() {
        let v = RatVector::from_ints(&[-5, 0]);
        assert_eq!(primitive_integer_ray(&v).unwrap(), RatVector::from_ints(&[-1, 0]));
    }

    #[test]
    fn primitive_ray_divides_gcd() {
        let v = RatVector::from_ints(&[6, 9, 15]);
        assert_eq!(primitive_integer_ray(&v).unwrap(), RatVector::from_ints(&[2, 3, 5]));
    }

    #[test]
    fn primitive_ray_rejects_zero() {
        assert!(matches!(
            primitive_integer_ray(&RatVector::zero(3)),
            Err(ExactError::ZeroVector)
        ));
    }

    #[test]
    fn exact_square_detection() {
        assert_eq!(rational_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt_exact(&rat(5, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt_exact(&Rational::zero()), Some(Rational::zero()));
    }
}
