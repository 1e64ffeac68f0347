//! Subspaces in canonical reduced-basis form.
//!
//! Every subspace is stored as the reduced row echelon form of any
//! spanning set: pivots are 1, pivot columns are otherwise zero, and rows
//! are ordered by pivot column. The reduced form of a row space is unique,
//! so structural equality of bases is equality of subspaces — the property
//! the Chu layer relies on for attribute identity.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::GaussianRational;
use crate::{Error, Result};

use super::{inner_product, Vector};

/// A subspace of `ℚ(i)^n`, closed by construction, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

/// Reduced row echelon form; returns the nonzero rows.
fn rref(mut rows: Vec<Vec<GaussianRational>>, cols: usize) -> Vec<Vec<GaussianRational>> {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        for cell in rows[rank].iter_mut().skip(col) {
            *cell = &*cell * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

impl Subspace {
    /// The span of the given vectors, canonicalized.
    ///
    /// An empty list gives the zero subspace. All vectors must have the
    /// ambient dimension.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Empty);
        }
        for v in vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    left: ambient_dim,
                    right: v.dim(),
                });
            }
        }
        let rows = rref(
            vectors.iter().map(|v| v.entries().to_vec()).collect(),
            ambient_dim,
        );
        let basis = rows
            .into_iter()
            .map(|r| Vector::new(r).expect("ambient_dim > 0"))
            .collect();
        Ok(Self { ambient_dim, basis })
    }

    /// The ray spanned by a nonzero vector.
    pub fn ray(v: &Vector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroState);
        }
        Self::span(v.dim(), std::slice::from_ref(v))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| Vector::basis(ambient_dim, i))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Decides `v ∈ self` by eliminating pivot coordinates.
    pub fn member(&self, v: &Vector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim(),
            });
        }
        let mut residual = v.entries().to_vec();
        for row in &self.basis {
            let pivot = row
                .entries()
                .iter()
                .position(|e| !e.is_zero())
                .expect("basis rows are nonzero");
            let coeff = residual[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (res, base) in residual.iter_mut().zip(row.entries()) {
                let delta = base * &coeff;
                *res = &*res - &delta;
            }
        }
        Ok(residual.iter().all(GaussianRational::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        for v in &other.basis {
            if !self.member(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Least upper bound in the subspace lattice: the span of the union.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vectors)
    }

    /// `{v | ∀s ∈ self. ⟨s|v⟩ = 0}` in canonical form.
    ///
    /// The constraint rows are the conjugated basis rows, so the null space
    /// of that matrix is exactly the orthocomplement under the
    /// first-argument-conjugate inner product.
    pub fn orthocomplement(&self) -> Subspace {
        let n = self.ambient_dim;
        if self.basis.is_empty() {
            return Subspace::full(n);
        }
        let constraint: Vec<Vec<GaussianRational>> = self
            .basis
            .iter()
            .map(|row| row.entries().iter().map(GaussianRational::conj).collect())
            .collect();
        let reduced = rref(constraint, n);
        let pivots: Vec<usize> = reduced
            .iter()
            .map(|r| r.iter().position(|e| !e.is_zero()).expect("nonzero row"))
            .collect();
        let mut kernel = Vec::new();
        for free in 0..n {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![GaussianRational::zero(); n];
            v[free] = GaussianRational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            kernel.push(Vector::new(v).expect("n > 0"));
        }
        Subspace::span(n, &kernel).expect("kernel vectors have ambient dimension")
    }

    /// `self ∩ other`, computed through complements.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self
            .orthocomplement()
            .join(&other.orthocomplement())?
            .orthocomplement())
    }

    /// Orthogonal projection of `v` onto the subspace: the unique `θ ∈ self`
    /// with `v − θ ⊥ self`.
    ///
    /// Solves the Gram system `G·c = b` with `G_ij = ⟨v_i|v_j⟩`,
    /// `b_i = ⟨v_i|v⟩` over the stored basis, then returns `Σ c_i·v_i`.
    /// No orthonormalization is involved, so the result stays inside ℚ(i).
    pub fn project(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.dim(),
            });
        }
        let k = self.basis.len();
        if k == 0 {
            return Ok(Vector::zero(self.ambient_dim));
        }
        // Augmented Gram matrix [G | b]
        let mut aug: Vec<Vec<GaussianRational>> = (0..k)
            .map(|i| {
                let mut row: Vec<GaussianRational> = (0..k)
                    .map(|j| inner_product(&self.basis[i], &self.basis[j]).expect("equal dims"))
                    .collect();
                row.push(inner_product(&self.basis[i], v).expect("equal dims"));
                row
            })
            .collect();
        // Gaussian elimination; G is positive definite, hence invertible.
        for col in 0..k {
            let pivot = (col..k)
                .find(|&r| !aug[r][col].is_zero())
                .expect("Gram matrix of independent vectors is invertible");
            aug.swap(col, pivot);
            let inv = aug[col][col].inverse().expect("pivot is nonzero");
            for cell in aug[col].iter_mut().skip(col) {
                *cell = &*cell * &inv;
            }
            for r in 0..k {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for c in col..=k {
                        let delta = &aug[col][c] * &factor;
                        aug[r][c] = &aug[r][c] - &delta;
                    }
                }
            }
        }
        let mut theta = Vector::zero(self.ambient_dim);
        for (i, row) in aug.iter().enumerate() {
            theta = theta.add(&self.basis[i].scale(&row[k]))?;
        }
        Ok(theta)
    }

    /// Orthogonality of a vector to the whole subspace.
    pub fn orthogonal_to(&self, v: &Vector) -> Result<bool> {
        for row in &self.basis {
            if !inner_product(row, v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}} in dim {}", self.ambient_dim)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct RawSubspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawSubspace {
            ambient_dim: self.ambient_dim,
            basis: self.basis.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        // The basis need not be canonical on input; span() canonicalizes.
        let raw = RawSubspace::deserialize(deserializer)?;
        Subspace::span(raw.ambient_dim, &raw.basis).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> Vector {
        Vector::from_ints(entries)
    }

    #[test]
    fn canonical_form_is_representation_independent() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 2])]).unwrap();
        let b = Subspace::span(3, &[v(&[2, 2, 2]), v(&[3, 3, 0]), v(&[1, 1, 4])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn member_examples() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert!(s.member(&v(&[2, 0])).unwrap());
        assert!(!s.member(&v(&[1, 1])).unwrap());

        // (1+i)·(1,2) = (1+i, 2+2i)
        let t = Subspace::span(2, &[v(&[1, 2])]).unwrap();
        assert!(t
            .member(&Vector::from_parts(&[(1, 1), (2, 2)]))
            .unwrap());
    }

    #[test]
    fn orthocomplement_examples() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(s.orthocomplement(), Subspace::span(2, &[v(&[0, 1])]).unwrap());

        assert!(Subspace::full(3).orthocomplement().is_zero());

        let t = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        assert_eq!(
            t.orthocomplement(),
            Subspace::span(3, &[v(&[1, -1, 0]), v(&[0, 0, 1])]).unwrap()
        );
    }

    #[test]
    fn orthocomplement_is_an_involution() {
        let s = Subspace::span(
            4,
            &[
                Vector::from_parts(&[(1, 1), (0, 0), (2, 0), (0, -1)]),
                Vector::from_parts(&[(0, 0), (1, 0), (0, 3), (1, 0)]),
            ],
        )
        .unwrap();
        assert_eq!(s.orthocomplement().orthocomplement(), s);
        assert_eq!(s.rank() + s.orthocomplement().rank(), 4);
        assert!(s.intersect(&s.orthocomplement()).unwrap().is_zero());
        assert!(s.join(&s.orthocomplement()).unwrap().is_full());
    }

    #[test]
    fn join_examples() {
        let a = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let b = Subspace::span(2, &[v(&[0, 1])]).unwrap();
        assert!(a.join(&b).unwrap().is_full());
        assert_eq!(a.join(&a).unwrap(), a);

        let c = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let d = Subspace::span(3, &[v(&[1, -1, 0])]).unwrap();
        assert_eq!(
            c.join(&d).unwrap(),
            Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap()
        );
        assert!(c.join(&d).unwrap().contains(&c).unwrap());
    }

    #[test]
    fn projection_examples() {
        let s = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(s.project(&v(&[1, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(s.project(&v(&[0, 1])).unwrap(), Vector::zero(2));

        // projection fixes members, and is idempotent
        let t = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let member = v(&[2, 2, 5]);
        assert_eq!(t.project(&member).unwrap(), member);
        let p = t.project(&v(&[1, 2, 3])).unwrap();
        assert_eq!(t.project(&p).unwrap(), p);
        assert!(t.member(&p).unwrap());
    }

    #[test]
    fn projection_residual_is_orthogonal() {
        let s = Subspace::span(
            3,
            &[
                Vector::from_parts(&[(1, 1), (2, 0), (0, 0)]),
                Vector::from_parts(&[(0, 0), (0, 1), (1, 0)]),
            ],
        )
        .unwrap();
        let psi = Vector::from_parts(&[(3, -1), (0, 2), (1, 1)]);
        let theta = s.project(&psi).unwrap();
        let residual = psi.sub(&theta).unwrap();
        assert!(s.orthogonal_to(&residual).unwrap());
        // Pythagorean decomposition is exact
        let comp = s.orthocomplement().project(&psi).unwrap();
        assert_eq!(theta.add(&comp).unwrap(), psi);
    }

    #[test]
    fn projection_agrees_with_orthonormal_expansion() {
        // span{(3/5, 4/5, 0), (0, 0, 1)} has an orthonormal rational basis,
        // so P(ψ) = Σ ⟨e_i|ψ⟩ e_i must agree with the Gram route.
        let e1 = Vector::new(vec![
            GaussianRational::from_ratio(3, 5),
            GaussianRational::from_ratio(4, 5),
            GaussianRational::zero(),
        ])
        .unwrap();
        let e2 = Vector::from_ints(&[0, 0, 1]);
        let s = Subspace::span(3, &[e1.clone(), e2.clone()]).unwrap();
        let psi = Vector::from_parts(&[(1, 2), (-1, 0), (4, 1)]);
        let expansion = e1
            .scale(&inner_product(&e1, &psi).unwrap())
            .add(&e2.scale(&inner_product(&e2, &psi).unwrap()))
            .unwrap();
        assert_eq!(s.project(&psi).unwrap(), expansion);
    }

    #[test]
    fn zero_subspace_behaviour() {
        let z = Subspace::zero(3);
        assert_eq!(z.project(&v(&[1, 2, 3])).unwrap(), Vector::zero(3));
        assert!(z.orthogonal_to(&v(&[1, 2, 3])).unwrap());
        assert!(z.orthocomplement().is_full());
        assert!(!z.member(&v(&[1, 0, 0])).unwrap());
        assert!(z.member(&Vector::zero(3)).unwrap());
    }

    #[test]
    fn serde_canonicalizes_on_load() {
        let json = r#"{"ambient_dim":3,"basis":[
            [{"re":"2","im":"0"},{"re":"2","im":"0"},{"re":"0","im":"0"}],
            [{"re":"1","im":"0"},{"re":"1","im":"0"},{"re":"1","im":"0"}]
        ]}"#;
        let s: Subspace = serde_json::from_str(json).unwrap();
        assert_eq!(
            s,
            Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap()
        );
        let round: Subspace = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(round, s);
    }
}
