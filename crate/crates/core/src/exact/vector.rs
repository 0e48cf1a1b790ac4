//! Dense rational vectors and matrices.

use super::{format_rational, parse_rational, ExactError, Rational};
use num::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// A vector over the rationals. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        RatVector::new(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut e = vec![Rational::zero(); dim];
        e[i] = Rational::one();
        RatVector::new(e)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector::new(entries.iter().map(|&n| super::int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector::new(self.entries.iter().map(|e| e * c).collect())
    }

    /// Entrywise `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector::new(
            self.entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(format_rational).collect()
    }

    pub fn parse_all(strings: &[String]) -> Result<Self, ExactError> {
        let entries = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatVector::new(entries))
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl Add<&RatVector> for &RatVector {
    type Output = RatVector;
    fn add(self, other: &RatVector) -> RatVector {
        self.add_scaled(&Rational::one(), other)
    }
}

impl Sub<&RatVector> for &RatVector {
    type Output = RatVector;
    fn sub(self, other: &RatVector) -> RatVector {
        self.add_scaled(&-Rational::one(), other)
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector::new(self.entries.iter().map(|e| -e).collect())
    }
}

impl Serialize for RatVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        RatVector::parse_all(&strings).map_err(D::Error::custom)
    }
}

/// A dense rational matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    ncols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<RatVector>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.dim());
        assert!(rows.iter().all(|r| r.dim() == ncols), "ragged matrix");
        RatMatrix { rows, ncols }
    }

    /// An `nrows x ncols` matrix with no rows still remembers its width.
    pub fn with_shape(rows: Vec<RatVector>, ncols: usize) -> Self {
        assert!(rows.iter().all(|r| r.dim() == ncols), "ragged matrix");
        RatMatrix { rows, ncols }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(rows.iter().map(|r| RatVector::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::with_shape((0..n).map(|i| RatVector::unit(n, i)).collect(), n)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &RatVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.nrows() {
            for j in (i + 1)..self.ncols {
                if self.entry(i, j) != self.entry(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols).all(|j| {
                    if i == j {
                        self.entry(i, j).is_one()
                    } else {
                        self.entry(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_integer(&self) -> bool {
        self.rows.iter().all(super::is_integer_vector)
    }

    /// Matrix-vector product `A * x` (column-vector convention).
    pub fn mul_vec(&self, x: &RatVector) -> RatVector {
        assert_eq!(self.ncols, x.dim(), "mul_vec dimension mismatch");
        RatVector::new(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    pub fn mul_mat(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols, other.nrows(), "mul_mat dimension mismatch");
        let cols = other.transpose();
        RatMatrix::with_shape(
            self.rows
                .iter()
                .map(|r| RatVector::new(cols.rows.iter().map(|c| r.dot(c)).collect()))
                .collect(),
            other.ncols(),
        )
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut cols = vec![Vec::with_capacity(self.nrows()); self.ncols];
        for row in &self.rows {
            for (j, e) in row.iter().enumerate() {
                cols[j].push(e.clone());
            }
        }
        RatMatrix::with_shape(cols.into_iter().map(RatVector::new).collect(), self.nrows())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.to_strings()).collect()
    }

    pub fn parse_all(rows: &[Vec<String>]) -> Result<Self, ExactError> {
        let parsed = rows
            .iter()
            .map(|r| RatVector::parse_all(r))
            .collect::<Result<Vec<_>, _>>()?;
        let ncols = parsed.first().map_or(0, |r| r.dim());
        if let Some(bad) = parsed.iter().find(|r| r.dim() != ncols) {
            return Err(ExactError::DimensionMismatch {
                expected: ncols,
                got: bad.dim(),
            });
        }
        Ok(RatMatrix::with_shape(parsed, ncols))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", r)?;
        }
        write!(f, "]")
    }
}

impl Mul<&RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, other: &RatMatrix) -> RatMatrix {
        self.mul_mat(other)
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        RatMatrix::parse_all(&rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn matvec_and_transpose() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.mul_vec(&RatVector::from_ints(&[1, 0])), RatVector::from_ints(&[2, 1]));
        assert_eq!(m.transpose(), m); // symmetric
        let t = RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(t.transpose(), RatMatrix::from_int_rows(&[&[1, 0], &[1, 1]]));
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let v = RatVector::new(vec![rat(1, 2), int(-3)]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1/2","-3"]"#);
        let back: RatVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<RatVector>(r#"["1/0"]"#).is_err());
    }
}
