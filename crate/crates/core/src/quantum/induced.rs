//! Chu morphisms induced by semiunitaries: `U ↦ (ψ ↦ Uψ, S ↦ U⁻¹S)`.
//!
//! On the full spaces this is the representation functor; on finite
//! samples it exists whenever the sample windows are aligned, i.e. the
//! image of every source state is a target state and the preimage of
//! every target attribute is a source attribute. Closure is checked, never
//! silently extended; [`SampledQuantumChu::push_forward`] builds an
//! aligned target window for any map.

use serde::{Deserialize, Serialize};

use crate::chu::{ChuMorphism, collapse_morphism};
use crate::hilbert::{SemilinearMap, Subspace};
use crate::scalar::GaussianRational;
use crate::{Error, Result};

use super::SampledQuantumChu;

/// A Chu morphism together with the semilinear map that induced it and the
/// sample windows it runs between. Only values of this type support the
/// operations that need the inducing map (direct images, perturbations).
#[derive(Clone, Debug)]
pub struct InducedMorphism {
    map: SemilinearMap,
    morphism: ChuMorphism,
    source: SampledQuantumChu,
    target: SampledQuantumChu,
}

/// Builds the induced morphism `(ψ ↦ Uψ, S ↦ U⁻¹S)` between two sample
/// windows.
///
/// Errors if `u` is not semiunitary, if some `Uψ` is missing from the
/// target states (exact vector identity), or if some attribute preimage
/// `U⁻¹S` is missing from the source attributes.
pub fn induced_morphism(
    u: &SemilinearMap,
    source: &SampledQuantumChu,
    target: &SampledQuantumChu,
) -> Result<InducedMorphism> {
    if !u.classify().is_semiunitary() {
        return Err(Error::NotSemiunitary);
    }
    let fwd = source
        .states()
        .iter()
        .map(|psi| {
            let image = u.apply(psi)?;
            target
                .state_index(&image)
                .ok_or_else(|| Error::MissingState(image.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bwd = target
        .attrs()
        .iter()
        .map(|s| {
            let pre = u.preimage_subspace(s)?;
            source
                .attr_index(&pre)
                .ok_or_else(|| Error::MissingAttribute(pre.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    // The Chu condition e(ψ, U⁻¹S) = e(Uψ, S) holds for any semiunitary,
    // so construction cannot fail past this point.
    let morphism = ChuMorphism::new(source.build_space(), target.build_space(), fwd, bwd)?;
    Ok(InducedMorphism {
        map: u.clone(),
        morphism,
        source: source.clone(),
        target: target.clone(),
    })
}

impl InducedMorphism {
    pub fn map(&self) -> &SemilinearMap {
        &self.map
    }

    pub fn morphism(&self) -> &ChuMorphism {
        &self.morphism
    }

    pub fn source_sample(&self) -> &SampledQuantumChu {
        &self.source
    }

    pub fn target_sample(&self) -> &SampledQuantumChu {
        &self.target
    }

    /// The image of this morphism under the biextensional collapse: the
    /// morphism between the ray-collapsed spaces. Both samples must be
    /// ray-closed.
    pub fn collapsed(&self) -> Result<ChuMorphism> {
        if !self.source.is_ray_closed() {
            return Err(Error::NotRayClosed("source sample".into()));
        }
        if !self.target.is_ray_closed() {
            return Err(Error::NotRayClosed("target sample".into()));
        }
        Ok(collapse_morphism(&self.morphism))
    }
}

/// The direct image `f→(S)`: the join of the images of all rays inside
/// `S`. For an induced morphism that join over infinitely many rays is
/// just the image subspace of the inducing map, which is how it is
/// computed here. Left adjoint to the attribute map: `f→(S) ⊆ T ⟺ S ⊆ U⁻¹T`.
pub fn direct_image_join(f: &InducedMorphism, s: &Subspace) -> Result<Subspace> {
    f.map.image_subspace(s)
}

/// Scales the forward images pointwise: `ψ ↦ scale(ψ)·Uψ` with the
/// attribute map unchanged. `scales` is aligned with the source states.
///
/// The scaled images must already be target states (extend the sample
/// otherwise). The result is a valid morphism equivalent to the original
/// one; it is generally no longer of induced form.
pub fn perturb_pointwise(f: &InducedMorphism, scales: &[GaussianRational]) -> Result<ChuMorphism> {
    if scales.len() != f.source.states().len() {
        return Err(Error::DimensionMismatch {
            left: f.source.states().len(),
            right: scales.len(),
        });
    }
    if scales.iter().any(GaussianRational::is_zero) {
        return Err(Error::ZeroScalar);
    }
    let fwd = f
        .source
        .states()
        .iter()
        .zip(scales)
        .map(|(psi, lambda)| {
            let image = f.map.apply(psi)?.scale(lambda);
            f.target
                .state_index(&image)
                .ok_or_else(|| Error::MissingState(image.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    ChuMorphism::new(
        f.morphism.source().clone(),
        f.morphism.target().clone(),
        fwd,
        f.morphism.bwd().to_vec(),
    )
}

/// A scalar of modulus exactly 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "GaussianRational", into = "GaussianRational")]
pub struct Phase(GaussianRational);

impl Phase {
    pub fn new(scalar: GaussianRational) -> Result<Self> {
        if !scalar.is_unit_modulus() {
            return Err(Error::Parse(format!("{scalar} does not have modulus 1")));
        }
        Ok(Self(scalar))
    }

    pub fn scalar(&self) -> &GaussianRational {
        &self.0
    }

    /// The fourth roots of unity: the phases every sample can represent.
    pub fn fourth_roots() -> [Phase; 4] {
        [
            Phase(GaussianRational::from_int(1)),
            Phase(GaussianRational::from_int(-1)),
            Phase(GaussianRational::from_parts(0, 1)),
            Phase(GaussianRational::from_parts(0, -1)),
        ]
    }
}

impl TryFrom<GaussianRational> for Phase {
    type Error = Error;
    fn try_from(value: GaussianRational) -> Result<Self> {
        Phase::new(value)
    }
}

impl From<Phase> for GaussianRational {
    fn from(value: Phase) -> Self {
        value.0
    }
}

/// A verified constant ratio between two semilinear maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMultiple {
    /// `U = factor · V`, entrywise on the matrices.
    pub factor: GaussianRational,
    /// Whether `|factor| = 1` holds exactly; true means the maps are
    /// phase-equivalent.
    pub unit_modulus: bool,
}

impl ScalarMultiple {
    pub fn phase(&self) -> Option<Phase> {
        self.unit_modulus.then(|| Phase(self.factor.clone()))
    }
}

/// If `U = λ·V` for a constant scalar `λ ≠ 0`, returns the ratio and
/// whether it is a phase. Maps of different dimension or different
/// automorphism tag are never scalar multiples.
///
/// `λ` is read off the first entry where `V` is nonzero, then verified on
/// every entry.
pub fn phase_equivalent(u: &SemilinearMap, v: &SemilinearMap) -> Option<ScalarMultiple> {
    if u.dim() != v.dim() || u.sigma() != v.sigma() {
        return None;
    }
    let n = u.dim();
    let mut factor: Option<GaussianRational> = None;
    for r in 0..n {
        for c in 0..n {
            let uv = u.matrix().at(r, c);
            let vv = v.matrix().at(r, c);
            if vv.is_zero() {
                if !uv.is_zero() {
                    return None;
                }
                continue;
            }
            let ratio = uv.checked_div(vv).expect("vv is nonzero");
            match &factor {
                Some(known) if *known != ratio => return None,
                Some(_) => {}
                None => factor = Some(ratio),
            }
        }
    }
    let factor = factor?;
    if factor.is_zero() {
        return None;
    }
    let unit_modulus = factor.is_unit_modulus();
    Some(ScalarMultiple {
        factor,
        unit_modulus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chu::check_morphism;
    use crate::hilbert::{inner_product, Automorphism, Matrix, Vector};
    use crate::quantum::evaluate;

    fn vec_i(entries: &[i64]) -> Vector {
        Vector::from_ints(entries)
    }

    fn ray(entries: &[i64]) -> Subspace {
        Subspace::ray(&vec_i(entries)).unwrap()
    }

    fn basis_sample(dim: usize) -> SampledQuantumChu {
        let states: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
        let attrs = states
            .iter()
            .map(|v| Subspace::ray(v).unwrap())
            .collect();
        SampledQuantumChu::new(dim, states, attrs, true).unwrap()
    }

    fn swap_map() -> SemilinearMap {
        SemilinearMap::new(
            Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
            Automorphism::Identity,
        )
        .unwrap()
    }

    #[test]
    fn identity_induces_identity() {
        let q = basis_sample(2);
        let id = SemilinearMap::identity(2);
        let f = induced_morphism(&id, &q, &q).unwrap();
        assert_eq!(f.morphism().fwd(), &[0, 1]);
        assert_eq!(f.morphism().bwd(), &[0, 1]);
    }

    #[test]
    fn swap_morphism_swaps_rows_and_columns() {
        let q = basis_sample(2);
        let f = induced_morphism(&swap_map(), &q, &q).unwrap();
        assert_eq!(f.morphism().fwd(), &[1, 0]);
        assert_eq!(f.morphism().bwd(), &[1, 0]);
        assert!(check_morphism(
            f.morphism().source(),
            f.morphism().target(),
            f.morphism().fwd(),
            f.morphism().bwd()
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn antiunitary_conjugation_example() {
        // states {(1,i)}, attrs {ray(1,i), ray(1,-i)}; conjugation maps
        // (1,i) to (1,-i), so the target window must contain it
        let source = SampledQuantumChu::new(
            2,
            vec![Vector::from_parts(&[(1, 0), (0, 1)])],
            vec![
                Subspace::ray(&Vector::from_parts(&[(1, 0), (0, 1)])).unwrap(),
                Subspace::ray(&Vector::from_parts(&[(1, 0), (0, -1)])).unwrap(),
            ],
            true,
        )
        .unwrap();
        let conj = SemilinearMap::conjugation(2);
        let target = source.push_forward(&conj).unwrap();
        let f = induced_morphism(&conj, &source, &target).unwrap();
        assert_eq!(
            target.states()[f.morphism().fwd()[0]],
            Vector::from_parts(&[(1, 0), (0, -1)])
        );
    }

    #[test]
    fn closure_violations_are_reported() {
        let q = basis_sample(2);
        // target lacking the swapped states
        let half = SampledQuantumChu::new(2, vec![vec_i(&[1, 0])], vec![ray(&[1, 0])], true).unwrap();
        assert!(matches!(
            induced_morphism(&swap_map(), &q, &half),
            Err(Error::MissingState(_)) | Err(Error::MissingAttribute(_))
        ));
        // non-semiunitary input
        let g = SemilinearMap::new(
            Matrix::from_int_rows(&[&[1, 0], &[0, 2]]),
            Automorphism::Identity,
        )
        .unwrap();
        assert!(matches!(
            induced_morphism(&g, &q, &q),
            Err(Error::NotSemiunitary)
        ));
    }

    #[test]
    fn direct_image_extends_the_point_map() {
        let q = basis_sample(2);
        let f = induced_morphism(&swap_map(), &q, &q).unwrap();
        // a single sampled ray maps to the ray of its image
        assert_eq!(
            direct_image_join(&f, &ray(&[1, 0])).unwrap(),
            ray(&[0, 1])
        );
        // the full space maps onto the full space
        assert_eq!(
            direct_image_join(&f, &Subspace::full(2)).unwrap(),
            Subspace::full(2)
        );
    }

    #[test]
    fn rotation_direct_image_example() {
        let r = GaussianRational::from_ratio(3, 5);
        let s = GaussianRational::from_ratio(4, 5);
        let rot = SemilinearMap::new(
            Matrix::from_rows(vec![vec![r.clone(), s.clone()], vec![-&s, r]]).unwrap(),
            Automorphism::Identity,
        )
        .unwrap();
        let q = basis_sample(2);
        let target = q.push_forward(&rot).unwrap();
        let f = induced_morphism(&rot, &q, &target).unwrap();
        assert_eq!(
            direct_image_join(&f, &ray(&[1, 0])).unwrap(),
            Subspace::ray(&vec_i(&[3, -4])).unwrap()
        );
    }

    #[test]
    fn adjunction_on_sampled_subspaces() {
        let q = basis_sample(3);
        let f = induced_morphism(&SemilinearMap::identity(3), &q, &q).unwrap();
        for s in q.attrs() {
            for t in q.attrs() {
                let left = t.contains(&direct_image_join(&f, s).unwrap()).unwrap();
                let right = f.map().preimage_subspace(t).unwrap().contains(s).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn perturbation_stays_valid_and_equivalent() {
        let q = basis_sample(2).close_under_phases().unwrap();
        let u = swap_map();
        let target = q.push_forward(&u).unwrap();
        let f = induced_morphism(&u, &q, &target).unwrap();

        // identity scaling changes nothing
        let ones = vec![GaussianRational::one(); q.states().len()];
        assert_eq!(&perturb_pointwise(&f, &ones).unwrap(), f.morphism());

        // scaling one state by i gives a different, still valid, equivalent morphism
        let mut scales = ones.clone();
        scales[0] = GaussianRational::from_parts(0, 1);
        let g = perturb_pointwise(&f, &scales).unwrap();
        assert_ne!(&g, f.morphism());
        assert!(crate::chu::morphism_equiv(&g, f.morphism()).unwrap());

        // zero scale is rejected
        scales[0] = GaussianRational::zero();
        assert!(matches!(
            perturb_pointwise(&f, &scales),
            Err(Error::ZeroScalar)
        ));
    }

    #[test]
    fn phase_equivalence_examples() {
        let u = swap_map();
        let same = phase_equivalent(&u, &u).unwrap();
        assert!(same.unit_modulus);
        assert!(same.factor.is_one());

        let iu = u.scale(&GaussianRational::from_parts(0, 1)).unwrap();
        let ratio = phase_equivalent(&iu, &u).unwrap();
        assert_eq!(ratio.factor, GaussianRational::from_parts(0, 1));
        assert!(ratio.unit_modulus);
        assert!(ratio.phase().is_some());

        // non-constant ratio
        let d = SemilinearMap::new(
            Matrix::from_int_rows(&[&[1, 0], &[0, 2]]),
            Automorphism::Identity,
        )
        .unwrap();
        let du = d.compose(&u).unwrap();
        assert!(phase_equivalent(&du, &u).is_none());

        // constant non-phase ratio is reported with the flag down
        let two_u = u.scale(&GaussianRational::from_int(2)).unwrap();
        let ratio = phase_equivalent(&two_u, &u).unwrap();
        assert!(!ratio.unit_modulus);
        assert!(ratio.phase().is_none());

        // different sigma tags are never phase-equivalent
        assert!(phase_equivalent(&SemilinearMap::conjugation(2), &SemilinearMap::identity(2)).is_none());
    }

    #[test]
    fn phase_equivalent_maps_collapse_to_the_same_morphism() {
        let q = basis_sample(3).close_under_phases().unwrap();
        let u = SemilinearMap::new(
            Matrix::from_int_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
            Automorphism::Identity,
        )
        .unwrap();
        for phase in Phase::fourth_roots() {
            let v = u.scale(phase.scalar()).unwrap();
            let fu = induced_morphism(&u, &q, &q.push_forward(&u).unwrap()).unwrap();
            let fv = induced_morphism(&v, &q, &q.push_forward(&v).unwrap()).unwrap();
            assert_eq!(fu.collapsed().unwrap(), fv.collapsed().unwrap());
        }
    }

    #[test]
    fn induced_morphism_realizes_projection_transport() {
        // e(ψ, U⁻¹S) = e(Uψ, S) spot-checked on a non-axis sample
        let u = swap_map();
        let psi = Vector::from_parts(&[(2, 1), (0, -1)]);
        let s = Subspace::ray(&Vector::from_parts(&[(1, 1), (3, 0)])).unwrap();
        let lhs = evaluate(&psi, &u.preimage_subspace(&s).unwrap()).unwrap();
        let rhs = evaluate(&u.apply(&psi).unwrap(), &s).unwrap();
        assert_eq!(lhs, rhs);
        // and the underlying inner products transport too
        let phi = Vector::from_parts(&[(0, 3), (5, 0)]);
        assert_eq!(
            inner_product(&u.apply(&phi).unwrap(), &u.apply(&psi).unwrap()).unwrap(),
            inner_product(&phi, &psi).unwrap()
        );
    }
}
