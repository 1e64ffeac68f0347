//! Value-set reduction functors.
//!
//! A function `v` between value sets induces a functor that recodes a
//! space's evaluation matrix and leaves morphism data untouched. Three
//! built-ins matter for quantum spaces:
//!
//! * `v0`: `0 ↦ 0`, everything else `↦ 1` — keeps "definitely not" sharp;
//! * `v1`: `1 ↦ 1`, everything else `↦ 0` — keeps "definitely yes" sharp;
//! * `v3`: `0 ↦ 0`, `1 ↦ 1`, the open interval `↦ 2` ("maybe").
//!
//! Both two-valued reductions admit morphisms on quantum samples whose
//! forward map no semiunitary can induce ([`two_valued_counterexample`]),
//! while the three-valued reduction preserves every case discrimination
//! the representation needs ([`three_valued_check`]).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chu::{check_morphism, ChuMorphism, ChuSpace, Value, ValueSet, Violation};
use crate::hilbert::{
    inner_product, orthogonal, SemilinearMap, SemiunitaryClass, Subspace, Vector,
};
use crate::quantum::{induced_morphism, SampledQuantumChu};
use crate::scalar::GaussianRational;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
enum MapKind {
    /// `v0`: fixes 0, sends `(0, 1]` to 1.
    V0,
    /// `v1`: fixes 1, sends `[0, 1)` to 0.
    V1,
    /// `v3`: fixes 0 and 1, sends `(0, 1)` to 2.
    V3,
    /// Explicit table over a finite source.
    Table(BTreeMap<Value, Value>),
}

/// A total function between value sets, inducing a reduction functor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValueMap {
    name: String,
    source: ValueSet,
    target: ValueSet,
    kind: MapKind,
}

impl ValueMap {
    /// `0 ↦ 0, (0,1] ↦ 1`: the possibilistic map that keeps "definitely
    /// not" sharp.
    pub fn v0() -> Self {
        Self {
            name: "v0".into(),
            source: ValueSet::UnitInterval,
            target: ValueSet::Finite(2),
            kind: MapKind::V0,
        }
    }

    /// `[0,1) ↦ 0, 1 ↦ 1`: the possibilistic map that keeps "definitely
    /// yes" sharp.
    pub fn v1() -> Self {
        Self {
            name: "v1".into(),
            source: ValueSet::UnitInterval,
            target: ValueSet::Finite(2),
            kind: MapKind::V1,
        }
    }

    /// `0 ↦ 0, (0,1) ↦ 2, 1 ↦ 1`: keeps both sharp values and lumps the
    /// open interval into "maybe" (encoded as 2 by convention).
    pub fn v3() -> Self {
        Self {
            name: "v3".into(),
            source: ValueSet::UnitInterval,
            target: ValueSet::Finite(3),
            kind: MapKind::V3,
        }
    }

    /// The three built-in maps.
    pub fn builtin_maps() -> [ValueMap; 3] {
        [Self::v0(), Self::v1(), Self::v3()]
    }

    /// Looks a built-in up by name.
    pub fn builtin(name: &str) -> Option<ValueMap> {
        match name {
            "v0" => Some(Self::v0()),
            "v1" => Some(Self::v1()),
            "v3" => Some(Self::v3()),
            _ => None,
        }
    }

    /// A custom map over a finite source, given as explicit pairs. The
    /// table must be total on the source and land in the target.
    pub fn custom(
        name: impl Into<String>,
        source: ValueSet,
        target: ValueSet,
        pairs: Vec<(Value, Value)>,
    ) -> Result<Self> {
        let ValueSet::Finite(n) = source else {
            return Err(Error::InvalidSpace(
                "custom value maps require a finite source".into(),
            ));
        };
        let mut table = BTreeMap::new();
        for (from, to) in pairs {
            if !source.contains(&from) {
                return Err(Error::ValueOutOfRange {
                    value: from.to_string(),
                    value_set: source.to_string(),
                });
            }
            if !target.contains(&to) {
                return Err(Error::ValueOutOfRange {
                    value: to.to_string(),
                    value_set: target.to_string(),
                });
            }
            table.insert(from, to);
        }
        for k in 0..n {
            if !table.contains_key(&Value::Finite(k)) {
                return Err(Error::MissingMapEntry(k.to_string()));
            }
        }
        Ok(Self {
            name: name.into(),
            source,
            target,
            kind: MapKind::Table(table),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &ValueSet {
        &self.source
    }

    pub fn target(&self) -> &ValueSet {
        &self.target
    }

    /// Applies the map to one value.
    pub fn apply(&self, v: &Value) -> Result<Value> {
        if !self.source.contains(v) {
            return Err(Error::ValueOutOfRange {
                value: v.to_string(),
                value_set: self.source.to_string(),
            });
        }
        Ok(match (&self.kind, v) {
            (MapKind::V0, Value::Rational(r)) => Value::Finite(u32::from(!r.is_zero())),
            (MapKind::V1, Value::Rational(r)) => Value::Finite(u32::from(r.is_one())),
            (MapKind::V3, Value::Rational(r)) => {
                if r.is_zero() {
                    Value::Finite(0)
                } else if r.is_one() {
                    Value::Finite(1)
                } else {
                    Value::Finite(2)
                }
            }
            (MapKind::Table(table), v) => table.get(v).expect("table is total").clone(),
            _ => unreachable!("source membership was checked"),
        })
    }
}

/// `F_v`: same points and attributes, evaluation composed with `v`.
pub fn apply_functor(v: &ValueMap, space: &ChuSpace) -> Result<ChuSpace> {
    if space.value_set() != v.source() {
        return Err(Error::ValueSetMismatch);
    }
    let matrix = (0..space.point_count())
        .map(|i| space.row(i).iter().map(|val| v.apply(val)).collect())
        .collect::<Result<_>>()?;
    ChuSpace::new(
        v.target().clone(),
        space.points().to_vec(),
        space.attributes().to_vec(),
        matrix,
    )
}

/// The action of `F_v` on morphisms: identical map data between the
/// reduced spaces. Composing the evaluation with any function preserves
/// the morphism condition, so this always succeeds on valid input.
pub fn apply_functor_morphism(v: &ValueMap, f: &ChuMorphism) -> Result<ChuMorphism> {
    ChuMorphism::new(
        apply_functor(v, f.source())?,
        apply_functor(v, f.target())?,
        f.fwd().to_vec(),
        f.bwd().to_vec(),
    )
}

/// Which two-valued reduction a counterexample is built against.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoValuedCase {
    V0,
    V1,
}

impl TwoValuedCase {
    pub fn value_map(&self) -> ValueMap {
        match self {
            TwoValuedCase::V0 => ValueMap::v0(),
            TwoValuedCase::V1 => ValueMap::v1(),
        }
    }

    /// The backward attribute map of the constructed morphism:
    /// `S ↦ g⁻¹S` for the `v1` case, `S ↦ g⁻¹(S^⊥)^⊥` for the `v0` case.
    pub fn backward(&self, g: &SemilinearMap, s: &Subspace) -> Result<Subspace> {
        match self {
            TwoValuedCase::V1 => g.preimage_subspace(s),
            TwoValuedCase::V0 => Ok(g
                .preimage_subspace(&s.orthocomplement())?
                .orthocomplement()),
        }
    }

    /// The inverse of [`backward`](Self::backward), used to build the
    /// target attribute window: `a ↦ g(a)` for `v1`, `a ↦ g(a^⊥)^⊥` for `v0`.
    fn backward_inverse(&self, g: &SemilinearMap, a: &Subspace) -> Result<Subspace> {
        match self {
            TwoValuedCase::V1 => g.image_subspace(a),
            TwoValuedCase::V0 => Ok(g.image_subspace(&a.orthocomplement())?.orthocomplement()),
        }
    }
}

/// A sampled orthogonal pair whose images under the map are not
/// orthogonal — the certificate that the forward map cannot come from a
/// semiunitary.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrthogonalityWitness {
    pub first: Vector,
    pub second: Vector,
    /// `⟨g(first)|g(second)⟩`, nonzero.
    pub image_inner_product: GaussianRational,
}

/// The full result of the two-valued fullness failure construction.
#[derive(Clone, Debug)]
pub struct TwoValuedCounterexample {
    pub case: TwoValuedCase,
    /// A valid morphism between the reduced ray-collapsed sample windows
    /// whose forward map is the projective action of `g`.
    pub morphism: ChuMorphism,
    pub witness: OrthogonalityWitness,
    pub source_sample: SampledQuantumChu,
    pub target_sample: SampledQuantumChu,
    /// Forward/backward index maps between the collapsed spaces, reused to
    /// retest the same pair under other value maps.
    pub fwd: Vec<usize>,
    pub bwd: Vec<usize>,
}

/// Constructs a two-valued morphism from a non-semiunitary `g`, plus the
/// orthogonality witness showing its forward map is not induced by any
/// semiunitary.
///
/// The morphism runs from the `v`-reduced ray collapse of `sample` to the
/// `v`-reduced ray collapse of the image window `g·sample` (states mapped
/// pointwise, attributes mapped so that their backward images are exactly
/// the original attributes). For the `v0` case the image window is only
/// ray-closed when the sample's attributes contain `g⁻¹(⟨gψ⟩^⊥)^⊥` for
/// every state `ψ`; that closure is checked and reported, never silently
/// repaired.
pub fn two_valued_counterexample(
    case: TwoValuedCase,
    g: &SemilinearMap,
    sample: &SampledQuantumChu,
) -> Result<TwoValuedCounterexample> {
    if g.classify() != SemiunitaryClass::Neither {
        return Err(Error::NotNeither);
    }
    if !sample.is_ray_closed() {
        return Err(Error::NotRayClosed("counterexample input".into()));
    }

    // Target window: states are exact g-images; attributes are the
    // backward-inverse images, so bwd is the identity on indices.
    let target_states = sample
        .states()
        .iter()
        .map(|psi| g.apply(psi))
        .collect::<Result<Vec<_>>>()?;
    let target_attrs = sample
        .attrs()
        .iter()
        .map(|a| case.backward_inverse(g, a))
        .collect::<Result<Vec<_>>>()?;
    // Ray closure of the target window: for the v1 case it is inherited
    // (g maps rays to rays); for v0 it is the documented precondition on
    // the sample's attributes.
    for g_psi in &target_states {
        let image_ray = Subspace::ray(g_psi)?;
        if !target_attrs.contains(&image_ray) {
            let needed = case.backward(g, &image_ray)?;
            return Err(Error::MissingAttribute(needed.to_string()));
        }
    }
    let target_sample = SampledQuantumChu::new(sample.dim(), target_states, target_attrs, true)?;

    let (source_space, _) = sample.collapse_to_rays()?;
    let (target_space, _) = target_sample.collapse_to_rays()?;

    // Forward map on proportionality classes: [ψ] ↦ [gψ]. Source and
    // target states correspond index by index, so transport the classes.
    let source_classes = sample.build_space().state_classes();
    let target_class_of: Vec<usize> = {
        let classes = target_sample.build_space().state_classes();
        let mut of = vec![0; target_sample.states().len()];
        for (ci, class) in classes.iter().enumerate() {
            for &s in class {
                of[s] = ci;
            }
        }
        of
    };
    let fwd: Vec<usize> = source_classes
        .iter()
        .map(|class| target_class_of[class[0]])
        .collect();
    let bwd: Vec<usize> = (0..sample.attrs().len()).collect();

    let v = case.value_map();
    let morphism = ChuMorphism::new(
        apply_functor(&v, &source_space)?,
        apply_functor(&v, &target_space)?,
        fwd.clone(),
        bwd.clone(),
    )?;

    // Witness: first sampled orthogonal pair with non-orthogonal images.
    let witness = find_orthogonality_witness(sample, g)?;

    Ok(TwoValuedCounterexample {
        case,
        morphism,
        witness,
        source_sample: sample.clone(),
        target_sample,
        fwd,
        bwd,
    })
}

fn find_orthogonality_witness(
    sample: &SampledQuantumChu,
    g: &SemilinearMap,
) -> Result<OrthogonalityWitness> {
    let states = sample.states();
    for i in 0..states.len() {
        let gi = g.apply(&states[i])?;
        for j in (i + 1)..states.len() {
            if !orthogonal(&states[i], &states[j])? {
                continue;
            }
            let gj = g.apply(&states[j])?;
            let ip = inner_product(&gi, &gj)?;
            if !ip.is_zero() {
                return Ok(OrthogonalityWitness {
                    first: states[i].clone(),
                    second: states[j].clone(),
                    image_inner_product: ip,
                });
            }
        }
    }
    Err(Error::NoOrthogonalityWitness)
}

/// Result of re-running a two-valued counterexample in the three-valued
/// setting: the same map data must now violate the morphism condition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CounterexampleInThree {
    pub case: TwoValuedCase,
    pub fails_in_three: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_cell: Option<Violation>,
}

/// One induced morphism re-verified after the three-valued reduction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InducedInThree {
    pub witness_index: usize,
    pub classification: SemiunitaryClass,
    pub valid: bool,
}

/// Full report of the three-valued fidelity check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThreeValuedReport {
    /// (a) the supplied candidate passes the condition in the three-valued
    /// setting.
    pub candidate_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate_violation: Option<Violation>,
    /// (b) induced morphisms always remain valid after reduction.
    pub induced: Vec<InducedInThree>,
    /// (c) every two-valued counterexample fails after the three-valued
    /// reduction, each with its violating cell.
    pub counterexamples: Vec<CounterexampleInThree>,
}

impl ThreeValuedReport {
    /// The check succeeds when the candidate and all induced morphisms
    /// pass, and every counterexample fails with a concrete cell.
    pub fn all_pass(&self) -> bool {
        self.candidate_valid
            && self.induced.iter().all(|r| r.valid)
            && self
                .counterexamples
                .iter()
                .all(|c| c.fails_in_three && c.violating_cell.is_some())
    }
}

/// Extra inputs for [`three_valued_check`]: semiunitaries whose induced
/// morphisms are re-verified after reduction, and non-semiunitary maps to
/// re-run as two-valued counterexamples.
#[derive(Clone, Debug, Default)]
pub struct ThreeValuedOptions {
    pub semiunitaries: Vec<SemilinearMap>,
    pub counterexamples: Vec<(TwoValuedCase, SemilinearMap)>,
}

/// Verifies the three-valued trichotomy at the morphism level.
///
/// * (a) `candidate` must be a morphism between the `v3`-reduced ray
///   collapses of `source` and `target`; its validity is re-checked.
/// * (b) for each semiunitary, the induced morphism from `source` to its
///   image window is reduced with `v3` and re-verified (it must pass:
///   reduction preserves cell-wise equality).
/// * (c) each `(case, g)` pair is run through
///   [`two_valued_counterexample`] on `source`, then the same map data is
///   checked between the `v3`-reduced spaces, where it must fail.
pub fn three_valued_check(
    source: &SampledQuantumChu,
    target: &SampledQuantumChu,
    candidate: &ChuMorphism,
    opts: &ThreeValuedOptions,
) -> Result<ThreeValuedReport> {
    let v3 = ValueMap::v3();

    let (source_space, _) = source.collapse_to_rays()?;
    let (target_space, _) = target.collapse_to_rays()?;
    let reduced_source = apply_functor(&v3, &source_space)?;
    let reduced_target = apply_functor(&v3, &target_space)?;
    if candidate.source() != &reduced_source || candidate.target() != &reduced_target {
        return Err(Error::InvalidSpace(
            "candidate does not run between the v3-reduced ray collapses of the samples".into(),
        ));
    }
    let candidate_violation = check_morphism(
        &reduced_source,
        &reduced_target,
        candidate.fwd(),
        candidate.bwd(),
    )?;

    let mut induced = Vec::new();
    for (k, u) in opts.semiunitaries.iter().enumerate() {
        let window = source.push_forward(u)?;
        let f = induced_morphism(u, source, &window)?;
        let reduced = apply_functor_morphism(&v3, f.morphism());
        induced.push(InducedInThree {
            witness_index: k,
            classification: u.classify(),
            valid: reduced.is_ok(),
        });
    }

    let mut counterexamples = Vec::new();
    for (case, g) in &opts.counterexamples {
        let ce = two_valued_counterexample(*case, g, source)?;
        let (src, _) = ce.source_sample.collapse_to_rays()?;
        let (tgt, _) = ce.target_sample.collapse_to_rays()?;
        let violating_cell = check_morphism(
            &apply_functor(&v3, &src)?,
            &apply_functor(&v3, &tgt)?,
            &ce.fwd,
            &ce.bwd,
        )?;
        counterexamples.push(CounterexampleInThree {
            case: *case,
            fails_in_three: violating_cell.is_some(),
            violating_cell,
        });
    }

    Ok(ThreeValuedReport {
        candidate_valid: candidate_violation.is_none(),
        candidate_violation,
        induced,
        counterexamples,
    })
}

/// The three-valued reading of one quantum evaluation.
pub fn trichotomy(psi: &Vector, s: &Subspace) -> Result<Value> {
    ValueMap::v3().apply(&Value::Rational(crate::quantum::evaluate(psi, s)?))
}

/// JSON form of a custom value map over a finite source.
#[derive(Serialize, Deserialize)]
struct RawValueMap {
    name: String,
    source: ValueSet,
    target: ValueSet,
    pairs: Vec<(Value, Value)>,
}

impl Serialize for ValueMap {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match &self.kind {
            MapKind::Table(table) => RawValueMap {
                name: self.name.clone(),
                source: self.source.clone(),
                target: self.target.clone(),
                pairs: table.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            }
            .serialize(serializer),
            // built-ins serialize as their names
            _ => serializer.serialize_str(&self.name),
        }
    }
}

impl<'de> Deserialize<'de> for ValueMap {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = serde_json::Value::deserialize(deserializer)?;
        match raw {
            serde_json::Value::String(name) => ValueMap::builtin(&name)
                .ok_or_else(|| D::Error::custom(format!("unknown built-in value map {name:?}"))),
            other => {
                let raw: RawValueMap = serde_json::from_value(other).map_err(D::Error::custom)?;
                ValueMap::custom(raw.name, raw.source, raw.target, raw.pairs)
                    .map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{Automorphism, Matrix};
    use num_rational::BigRational;

    fn rational(p: i64, q: i64) -> Value {
        Value::Rational(BigRational::new(p.into(), q.into()))
    }

    #[test]
    fn builtin_values() {
        assert_eq!(ValueMap::v0().apply(&rational(1, 2)).unwrap(), Value::Finite(1));
        assert_eq!(ValueMap::v1().apply(&rational(1, 2)).unwrap(), Value::Finite(0));
        assert_eq!(ValueMap::v3().apply(&rational(1, 2)).unwrap(), Value::Finite(2));
        for v in ValueMap::builtin_maps() {
            // all three fix 0 and 1
            assert_eq!(v.apply(&rational(0, 1)).unwrap(), Value::Finite(0));
            assert_eq!(v.apply(&rational(1, 1)).unwrap(), Value::Finite(1));
        }
        // out-of-domain value
        assert!(ValueMap::v0().apply(&Value::Finite(0)).is_err());
    }

    #[test]
    fn functor_recodes_matrices() {
        let space = ChuSpace::new(
            ValueSet::UnitInterval,
            vec!["p0".into(), "p1".into()],
            vec!["a0".into(), "a1".into()],
            vec![
                vec![rational(1, 1), rational(1, 2)],
                vec![rational(1, 2), rational(1, 1)],
            ],
        )
        .unwrap();
        let three = apply_functor(&ValueMap::v3(), &space).unwrap();
        assert_eq!(three.row(0), &[Value::Finite(1), Value::Finite(2)]);
        assert_eq!(three.row(1), &[Value::Finite(2), Value::Finite(1)]);
        let zero_sharp = apply_functor(&ValueMap::v0(), &space).unwrap();
        assert_eq!(zero_sharp.row(0), &[Value::Finite(1), Value::Finite(1)]);
        assert_eq!(zero_sharp.row(1), &[Value::Finite(1), Value::Finite(1)]);
        // mismatched source
        let finite = ChuSpace::finite(2, vec![vec![0]]).unwrap();
        assert!(matches!(
            apply_functor(&ValueMap::v0(), &finite),
            Err(Error::ValueSetMismatch)
        ));
    }

    #[test]
    fn custom_table_maps() {
        let id2 = ValueMap::custom(
            "id2",
            ValueSet::Finite(2),
            ValueSet::Finite(2),
            vec![
                (Value::Finite(0), Value::Finite(0)),
                (Value::Finite(1), Value::Finite(1)),
            ],
        )
        .unwrap();
        let space = ChuSpace::finite(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(apply_functor(&id2, &space).unwrap(), space);
        // partial tables are rejected
        assert!(ValueMap::custom(
            "partial",
            ValueSet::Finite(2),
            ValueSet::Finite(2),
            vec![(Value::Finite(0), Value::Finite(0))],
        )
        .is_err());
    }

    #[test]
    fn functor_preserves_morphisms() {
        let space = ChuSpace::new(
            ValueSet::UnitInterval,
            vec!["p0".into(), "p1".into()],
            vec!["a0".into(), "a1".into()],
            vec![
                vec![rational(1, 1), rational(0, 1)],
                vec![rational(0, 1), rational(1, 1)],
            ],
        )
        .unwrap();
        let swap = ChuMorphism::new(space.clone(), space.clone(), vec![1, 0], vec![1, 0]).unwrap();
        for v in ValueMap::builtin_maps() {
            let reduced = apply_functor_morphism(&v, &swap).unwrap();
            assert_eq!(reduced.fwd(), swap.fwd());
            assert_eq!(reduced.bwd(), swap.bwd());
        }
    }

    #[test]
    fn value_map_serde() {
        let v = ValueMap::v3();
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"v3\"");
        let back: ValueMap = serde_json::from_str("\"v3\"").unwrap();
        assert_eq!(back, v);
        let custom = ValueMap::custom(
            "flip",
            ValueSet::Finite(2),
            ValueSet::Finite(2),
            vec![
                (Value::Finite(0), Value::Finite(1)),
                (Value::Finite(1), Value::Finite(0)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&custom).unwrap();
        let back: ValueMap = serde_json::from_str(&json).unwrap();
        assert_eq!(back, custom);
    }

    #[test]
    fn two_valued_requires_a_neither_map() {
        let q = crate::demo::reduction_sample().unwrap();
        let unitary = SemilinearMap::new(
            Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            Automorphism::Identity,
        )
        .unwrap();
        assert!(matches!(
            two_valued_counterexample(TwoValuedCase::V1, &unitary, &q),
            Err(Error::NotNeither)
        ));
    }

    #[test]
    fn two_valued_maps_lose_one_sharp_discrimination_each() {
        // ψ = (1,1) against S = span{(1,0)} evaluates to 1/2: neither a
        // member nor orthogonal. v0 codes it like a member (membership
        // detection lost), v1 codes it like an orthogonal pair
        // (orthogonality detection lost); v3 keeps it distinct from both.
        let psi = Vector::from_ints(&[1, 1]);
        let s = Subspace::ray(&Vector::from_ints(&[1, 0])).unwrap();
        let e = Value::Rational(crate::quantum::evaluate(&psi, &s).unwrap());
        let member_value = Value::Rational(num_rational::BigRational::from_integer(1.into()));
        let orthogonal_value = Value::Rational(num_rational::BigRational::from_integer(0.into()));

        let v0 = ValueMap::v0();
        assert_eq!(v0.apply(&e).unwrap(), v0.apply(&member_value).unwrap());
        let v1 = ValueMap::v1();
        assert_eq!(v1.apply(&e).unwrap(), v1.apply(&orthogonal_value).unwrap());
        let v3 = ValueMap::v3();
        assert_ne!(v3.apply(&e).unwrap(), v3.apply(&member_value).unwrap());
        assert_ne!(v3.apply(&e).unwrap(), v3.apply(&orthogonal_value).unwrap());
    }

    #[test]
    fn functor_preserves_all_enumerated_morphisms() {
        use crate::solver::{enumerate_morphisms, SearchConstraints};
        // a small quantum-valued pair of spaces with several morphisms
        let q = SampledQuantumChu::new(
            2,
            vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])],
            vec![
                Subspace::ray(&Vector::from_ints(&[1, 0])).unwrap(),
                Subspace::ray(&Vector::from_ints(&[0, 1])).unwrap(),
            ],
            true,
        )
        .unwrap();
        let space = q.build_space();
        let found = enumerate_morphisms(&space, &space, &SearchConstraints::default()).unwrap();
        assert!(!found.is_empty());
        for f in &found {
            for v in ValueMap::builtin_maps() {
                apply_functor_morphism(&v, f).unwrap();
            }
        }
    }

    #[test]
    fn identity_candidate_passes_three_valued_check() {
        let q = crate::demo::reduction_sample().unwrap();
        let (collapsed, _) = q.collapse_to_rays().unwrap();
        let reduced = apply_functor(&ValueMap::v3(), &collapsed).unwrap();
        let candidate = ChuMorphism::identity(reduced);
        let report = three_valued_check(&q, &q, &candidate, &ThreeValuedOptions::default()).unwrap();
        assert!(report.candidate_valid);
        assert!(report.all_pass()); // no induced maps, no counterexamples requested
    }
}
