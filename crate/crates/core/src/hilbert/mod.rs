//! Exact linear algebra over the Gaussian rationals.
//!
//! Vectors, inner products, closed subspaces in canonical reduced-basis
//! form, orthogonal projection, orthocomplements, and semilinear maps.
//! In finite dimension over the Gaussian rationals every subspace is
//! closed, and the standard inner product is positive definite because
//! squares of rationals are nonnegative, so the whole lattice-theoretic
//! apparatus works exactly.
//!
//! Convention fixed once for the whole crate: the inner product is
//! conjugate-linear in the FIRST argument,
//! `⟨φ|ψ⟩ = Σ conj(φ_i)·ψ_i`.

mod matrix;
mod semilinear;
mod subspace;

pub use matrix::Matrix;
pub use semilinear::{Automorphism, SemilinearMap, SemiunitaryClass};
pub use subspace::Subspace;

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::scalar::GaussianRational;
use crate::{Error, Result};

/// A finite-dimensional vector with Gaussian-rational entries.
///
/// Vectors may be zero (projections produce zero vectors); only their use
/// as quantum *states* requires them to be nonzero, and that is enforced
/// at the point of use.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector {
    entries: Vec<GaussianRational>,
}

impl Vector {
    /// Builds a vector from its entries. Errors on an empty entry list:
    /// dimensions here are positive.
    pub fn new(entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { entries })
    }

    /// Integer-entry convenience constructor.
    pub fn from_ints(entries: &[i64]) -> Self {
        Self {
            entries: entries.iter().map(|&n| GaussianRational::from_int(n)).collect(),
        }
    }

    /// `(a+bi, c+di, ...)` from integer pairs.
    pub fn from_parts(entries: &[(i64, i64)]) -> Self {
        Self {
            entries: entries
                .iter()
                .map(|&(a, b)| GaussianRational::from_parts(a, b))
                .collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            entries: vec![GaussianRational::zero(); dim],
        }
    }

    /// Standard basis vector `e_index` in the given dimension.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[index] = GaussianRational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &GaussianRational {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        Self {
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            entries: self.entries.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `⟨self|self⟩` as a rational; nonnegative, zero iff the vector is zero.
    pub fn norm_sqr(&self) -> BigRational {
        self.entries.iter().map(GaussianRational::norm_sqr).sum()
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `⟨φ|ψ⟩ = Σ conj(φ_i)·ψ_i`, conjugate-linear in the first argument.
pub fn inner_product(phi: &Vector, psi: &Vector) -> Result<GaussianRational> {
    phi.check_dim(psi)?;
    let mut acc = GaussianRational::zero();
    for (a, b) in phi.entries.iter().zip(&psi.entries) {
        acc = &acc + &(a.conj() * b);
    }
    Ok(acc)
}

/// `⟨φ|ψ⟩ = 0` exactly.
pub fn orthogonal(phi: &Vector, psi: &Vector) -> Result<bool> {
    Ok(inner_product(phi, psi)?.is_zero())
}

/// If `φ = λ·ψ` for a nonzero scalar `λ`, returns `λ`.
///
/// Both vectors must be nonzero for a factor to exist.
pub fn proportional(phi: &Vector, psi: &Vector) -> Option<GaussianRational> {
    if phi.dim() != psi.dim() || phi.is_zero() || psi.is_zero() {
        return None;
    }
    let k = psi.entries.iter().position(|e| !e.is_zero())?;
    if phi.entries[k].is_zero() {
        return None;
    }
    let lambda = phi.entries[k].checked_div(&psi.entries[k]).ok()?;
    if *phi == psi.scale(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_examples() {
        // orthogonal basis vectors
        let e0 = Vector::from_ints(&[1, 0]);
        let e1 = Vector::from_ints(&[0, 1]);
        assert!(inner_product(&e0, &e1).unwrap().is_zero());

        // ⟨(1+i,0),(1+i,0)⟩ = (1-i)(1+i) = 2
        let v = Vector::from_parts(&[(1, 1), (0, 0)]);
        assert_eq!(
            inner_product(&v, &v).unwrap(),
            GaussianRational::from_int(2)
        );

        // basis projection
        let w = Vector::from_ints(&[1, 1]);
        assert_eq!(
            inner_product(&e0, &w).unwrap(),
            GaussianRational::from_int(1)
        );
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_first_argument() {
        let phi = Vector::from_parts(&[(1, 2), (0, 1)]);
        let psi = Vector::from_parts(&[(3, 0), (1, -1)]);
        let lambda = GaussianRational::from_parts(0, 1);
        let lhs = inner_product(&phi.scale(&lambda), &psi).unwrap();
        let rhs = &lambda.conj() * &inner_product(&phi, &psi).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn self_inner_product_is_real_nonnegative() {
        let v = Vector::from_parts(&[(1, 2), (-3, 1), (0, 0)]);
        let n = inner_product(&v, &v).unwrap();
        assert!(n.is_real());
        assert_eq!(*n.re(), v.norm_sqr());
        assert!(inner_product(&Vector::zero(3), &Vector::zero(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Vector::from_ints(&[1]);
        let b = Vector::from_ints(&[1, 0]);
        assert!(matches!(
            inner_product(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn proportionality() {
        let v = Vector::from_parts(&[(1, 1), (2, 2)]);
        let w = Vector::from_parts(&[(1, 0), (2, 0)]);
        // v = (1+i)·w
        assert_eq!(
            proportional(&v, &w),
            Some(GaussianRational::from_parts(1, 1))
        );
        assert!(proportional(&w, &Vector::from_ints(&[1, 3])).is_none());
        assert!(proportional(&w, &Vector::zero(2)).is_none());
    }
}
