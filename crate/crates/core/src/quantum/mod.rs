//! The quantum representation: sampled Chu spaces over the unit interval.
//!
//! A [`SampledQuantumChu`] is a finite window onto the Chu space whose
//! points are the nonzero vectors of a Hilbert space, whose attributes are
//! its closed subspaces, and whose evaluation is the statistical
//! algorithm `e(ψ, S) = ⟨P_Sψ|P_Sψ⟩ / ⟨ψ|ψ⟩`. Over the Gaussian rationals
//! every such evaluation is an exact rational in `[0, 1]`, so the Chu
//! morphism condition on these spaces is decided by exact equality.

mod induced;
mod lemmas;

pub use induced::{
    direct_image_join, induced_morphism, perturb_pointwise, phase_equivalent, InducedMorphism,
    Phase, ScalarMultiple,
};
pub use lemmas::{lemma_suite, LemmaReport, LemmaResult, LemmaStatus};

use num_rational::BigRational;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chu::{ChuMorphism, ChuSpace, Value, ValueSet};
use crate::hilbert::{SemilinearMap, Subspace, Vector};
use crate::{Error, Result};

/// The statistical algorithm: `⟨P_Sψ|P_Sψ⟩ / ⟨ψ|ψ⟩`, an exact rational in
/// `[0, 1]`. The zero vector is rejected: it is not a state.
pub fn evaluate(psi: &Vector, s: &Subspace) -> Result<BigRational> {
    if psi.is_zero() {
        return Err(Error::ZeroState);
    }
    let projected = s.project(psi)?;
    Ok(projected.norm_sqr() / psi.norm_sqr())
}

/// A finite sample of states and question subspaces from one Hilbert space.
///
/// `ray_closed` asserts that the ray of every sampled state is among the
/// sampled attributes; the constructor verifies the claim. Ray closure is
/// what makes the collapse of the sampled space identify exactly the
/// proportional states, so [`collapse_to_rays`](Self::collapse_to_rays)
/// demands it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SampledQuantumChu {
    dim: usize,
    states: Vec<Vector>,
    attrs: Vec<Subspace>,
    ray_closed: bool,
}

impl SampledQuantumChu {
    pub fn new(
        dim: usize,
        states: Vec<Vector>,
        attrs: Vec<Subspace>,
        ray_closed: bool,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        for psi in &states {
            if psi.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: psi.dim(),
                });
            }
            if psi.is_zero() {
                return Err(Error::ZeroState);
            }
        }
        for (i, s) in attrs.iter().enumerate() {
            if s.ambient_dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: s.ambient_dim(),
                });
            }
            if attrs[..i].contains(s) {
                return Err(Error::DuplicateId(format!(
                    "S{i} duplicates an earlier attribute"
                )));
            }
        }
        let sample = Self {
            dim,
            states,
            attrs,
            ray_closed,
        };
        if ray_closed {
            sample.check_ray_closure()?;
        }
        Ok(sample)
    }

    fn check_ray_closure(&self) -> Result<()> {
        for psi in &self.states {
            let ray = Subspace::ray(psi)?;
            if !self.attrs.contains(&ray) {
                return Err(Error::NotRayClosed(psi.to_string()));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn states(&self) -> &[Vector] {
        &self.states
    }

    pub fn attrs(&self) -> &[Subspace] {
        &self.attrs
    }

    pub fn is_ray_closed(&self) -> bool {
        self.ray_closed
    }

    /// Adds any missing state rays to the attributes and sets the flag.
    pub fn ray_close(&self) -> Result<Self> {
        let mut attrs = self.attrs.clone();
        for psi in &self.states {
            let ray = Subspace::ray(psi)?;
            if !attrs.contains(&ray) {
                attrs.push(ray);
            }
        }
        Self::new(self.dim, self.states.clone(), attrs, true)
    }

    /// Extends the state list with the phase multiples `-ψ, iψ, -iψ` of
    /// every state. Rays are unchanged, so ray closure survives.
    pub fn close_under_phases(&self) -> Result<Self> {
        let mut states = self.states.clone();
        for phase in [
            crate::scalar::GaussianRational::from_int(-1),
            crate::scalar::GaussianRational::from_parts(0, 1),
            crate::scalar::GaussianRational::from_parts(0, -1),
        ] {
            for psi in &self.states {
                let scaled = psi.scale(&phase);
                if !states.contains(&scaled) {
                    states.push(scaled);
                }
            }
        }
        Self::new(self.dim, states, self.attrs.clone(), self.ray_closed)
    }

    /// The exact image window under an invertible semilinear map: states
    /// are mapped pointwise and attributes are mapped by direct image, so
    /// the result is the sample "as seen through" the map. Ray closure is
    /// preserved because the image of a ray is the ray of the image.
    pub fn push_forward(&self, map: &SemilinearMap) -> Result<Self> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: map.dim(),
            });
        }
        let states = self
            .states
            .iter()
            .map(|psi| map.apply(psi))
            .collect::<Result<Vec<_>>>()?;
        let attrs = self
            .attrs
            .iter()
            .map(|s| map.image_subspace(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, states, attrs, self.ray_closed)
    }

    /// Repeatedly adds images of states and preimages of attributes under
    /// the given maps, up to `rounds` times. Returns the grown sample and
    /// whether it is actually closed (orbits of infinite order never
    /// close; the bound keeps saturation total).
    pub fn saturate(&self, maps: &[SemilinearMap], rounds: usize) -> Result<(Self, bool)> {
        let mut states = self.states.clone();
        let mut attrs = self.attrs.clone();
        let mut closed = false;
        for _ in 0..rounds {
            let mut grew = false;
            for map in maps {
                for psi in states.clone() {
                    let image = map.apply(&psi)?;
                    if !states.contains(&image) {
                        states.push(image);
                        grew = true;
                    }
                }
                for s in attrs.clone() {
                    let pre = map.preimage_subspace(&s)?;
                    if !attrs.contains(&pre) {
                        attrs.push(pre);
                        grew = true;
                    }
                }
            }
            if !grew {
                closed = true;
                break;
            }
        }
        let mut sample = Self::new(self.dim, states, attrs, false)?;
        if self.ray_closed {
            sample = sample.ray_close()?;
        }
        Ok((sample, closed))
    }

    /// Index of an exact state vector.
    pub fn state_index(&self, psi: &Vector) -> Option<usize> {
        self.states.iter().position(|s| s == psi)
    }

    /// Index of a state proportional to the given vector.
    pub fn state_index_proportional(&self, psi: &Vector) -> Option<usize> {
        self.states
            .iter()
            .position(|s| crate::hilbert::proportional(s, psi).is_some())
    }

    pub fn attr_index(&self, s: &Subspace) -> Option<usize> {
        self.attrs.iter().position(|a| a == s)
    }

    /// The induced finite Chu space over the exact unit interval, with
    /// points `psi0, psi1, …` and attributes `S0, S1, …` in sample order.
    pub fn build_space(&self) -> ChuSpace {
        let points = (0..self.states.len()).map(|i| format!("psi{i}")).collect();
        let attributes = (0..self.attrs.len()).map(|j| format!("S{j}")).collect();
        let matrix = self
            .states
            .iter()
            .map(|psi| {
                self.attrs
                    .iter()
                    .map(|s| {
                        Value::Rational(
                            evaluate(psi, s).expect("sample states are nonzero and dims agree"),
                        )
                    })
                    .collect()
            })
            .collect();
        ChuSpace::new(ValueSet::UnitInterval, points, attributes, matrix)
            .expect("sampled evaluations lie in [0, 1]")
    }

    /// Biextensional collapse of the sampled space. Requires ray closure:
    /// without the rays of the sampled states among the attributes, the
    /// row-equality classes could be coarser than proportionality.
    pub fn collapse_to_rays(&self) -> Result<(ChuSpace, ChuMorphism)> {
        if !self.ray_closed {
            return Err(Error::NotRayClosed(
                "sample does not declare ray closure".into(),
            ));
        }
        Ok(self.build_space().biextensional_collapse())
    }

    /// The partition of state indices into exact proportionality classes,
    /// ordered by least member.
    pub fn proportionality_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, psi) in self.states.iter().enumerate() {
            match classes
                .iter_mut()
                .find(|c| crate::hilbert::proportional(&self.states[c[0]], psi).is_some())
            {
                Some(class) => class.push(i),
                None => classes.push(vec![i]),
            }
        }
        classes
    }
}

#[derive(Serialize, Deserialize)]
struct RawSample {
    dim: usize,
    states: Vec<Vector>,
    attrs: Vec<Subspace>,
    ray_closed: bool,
}

impl Serialize for SampledQuantumChu {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawSample {
            dim: self.dim,
            states: self.states.clone(),
            attrs: self.attrs.clone(),
            ray_closed: self.ray_closed,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SampledQuantumChu {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSample::deserialize(deserializer)?;
        SampledQuantumChu::new(raw.dim, raw.states, raw.attrs, raw.ray_closed)
            .map_err(D::Error::custom)
    }
}
