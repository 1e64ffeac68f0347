//! Invertible semilinear maps: a matrix paired with a field automorphism.
//!
//! Only the identity and complex conjugation are representable over the
//! Gaussian rationals, and they are also the only automorphisms that
//! matter for the symmetry classification, so the automorphism is a
//! two-valued tag. A map acts as `v ↦ M·σ(v)` with `σ` applied entrywise.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::GaussianRational;
use crate::{Error, Result};

use super::{Matrix, Subspace, Vector};

/// Field automorphism tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Automorphism {
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "conj")]
    Conjugation,
}

impl Automorphism {
    pub fn apply(&self, z: &GaussianRational) -> GaussianRational {
        match self {
            Automorphism::Identity => z.clone(),
            Automorphism::Conjugation => z.conj(),
        }
    }

    pub fn apply_vector(&self, v: &Vector) -> Vector {
        match self {
            Automorphism::Identity => v.clone(),
            Automorphism::Conjugation => v.conj(),
        }
    }

    fn apply_matrix(&self, m: &Matrix) -> Matrix {
        match self {
            Automorphism::Identity => m.clone(),
            Automorphism::Conjugation => m.conj(),
        }
    }

    /// Conjugation composes with itself to the identity: the rule of signs.
    pub fn compose(self, inner: Automorphism) -> Automorphism {
        if self == inner {
            Automorphism::Identity
        } else {
            Automorphism::Conjugation
        }
    }
}

/// Symmetry classification of a semilinear map.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemiunitaryClass {
    Unitary,
    Antiunitary,
    Neither,
}

impl SemiunitaryClass {
    pub fn is_semiunitary(&self) -> bool {
        !matches!(self, SemiunitaryClass::Neither)
    }
}

/// An invertible semilinear map `v ↦ matrix · σ(v)`.
///
/// Invertibility is checked at construction; the inverse matrix is cached
/// because subspace preimages use it constantly.
#[derive(Clone, PartialEq, Eq)]
pub struct SemilinearMap {
    matrix: Matrix,
    inverse: Matrix,
    sigma: Automorphism,
}

impl SemilinearMap {
    pub fn new(matrix: Matrix, sigma: Automorphism) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                left: matrix.rows(),
                right: matrix.cols(),
            });
        }
        let inverse = matrix.inverse().ok_or(Error::SingularMatrix)?;
        Ok(Self {
            matrix,
            inverse,
            sigma,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(dim),
            inverse: Matrix::identity(dim),
            sigma: Automorphism::Identity,
        }
    }

    /// Entrywise complex conjugation as an antilinear map.
    pub fn conjugation(dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(dim),
            inverse: Matrix::identity(dim),
            sigma: Automorphism::Conjugation,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn sigma(&self) -> Automorphism {
        self.sigma
    }

    /// `matrix · σ(v)`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.matrix.mul_vector(&self.sigma.apply_vector(v))
    }

    /// The inverse map `w ↦ σ(M⁻¹·w) = σ(M⁻¹)·σ(w)`.
    pub fn inverse_map(&self) -> SemilinearMap {
        SemilinearMap {
            matrix: self.sigma.apply_matrix(&self.inverse),
            inverse: self.sigma.apply_matrix(&self.matrix),
            sigma: self.sigma,
        }
    }

    /// `self ∘ inner`, with σ-tags composing by the rule of signs:
    /// `(M₂,σ₂)∘(M₁,σ₁) = (M₂·σ₂(M₁), σ₂σ₁)`.
    pub fn compose(&self, inner: &SemilinearMap) -> Result<SemilinearMap> {
        if self.dim() != inner.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: inner.dim(),
            });
        }
        SemilinearMap::new(
            self.matrix.mul(&self.sigma.apply_matrix(&inner.matrix))?,
            self.sigma.compose(inner.sigma),
        )
    }

    /// Scales the map by a nonzero scalar.
    pub fn scale(&self, factor: &GaussianRational) -> Result<SemilinearMap> {
        if factor.is_zero() {
            return Err(Error::ZeroScalar);
        }
        SemilinearMap::new(self.matrix.scale(factor), self.sigma)
    }

    /// Span of the images of a subspace's basis.
    pub fn image_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: s.ambient_dim(),
            });
        }
        let images: Vec<Vector> = s
            .basis()
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<_>>()?;
        Subspace::span(self.dim(), &images)
    }

    /// `g⁻¹(S)`, computed as the image under the inverse map.
    pub fn preimage_subspace(&self, s: &Subspace) -> Result<Subspace> {
        self.inverse_map().image_subspace(s)
    }

    /// Unitary iff `σ = id` and `M†M = I`; antiunitary iff `σ = conj` and
    /// `M†M = I`; otherwise neither.
    pub fn classify(&self) -> SemiunitaryClass {
        let gram = self
            .matrix
            .dagger()
            .mul(&self.matrix)
            .expect("square matrices compose");
        if !gram.is_identity() {
            return SemiunitaryClass::Neither;
        }
        match self.sigma {
            Automorphism::Identity => SemiunitaryClass::Unitary,
            Automorphism::Conjugation => SemiunitaryClass::Antiunitary,
        }
    }
}

impl fmt::Debug for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemilinearMap({:?}, {:?})", self.sigma, self.matrix)
    }
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    matrix: Vec<Vec<GaussianRational>>,
    sigma: Automorphism,
}

impl Serialize for SemilinearMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let matrix = (0..self.matrix.rows())
            .map(|r| self.matrix.row(r).to_vec())
            .collect();
        RawMap {
            matrix,
            sigma: self.sigma,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SemilinearMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMap::deserialize(deserializer)?;
        let matrix = Matrix::from_rows(raw.matrix).map_err(D::Error::custom)?;
        SemilinearMap::new(matrix, raw.sigma).map_err(D::Error::custom)
    }
}
