//! Chu morphisms: adjoint pairs of maps between Chu spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::{ChuSpace, Value};

/// The first cell at which a candidate pair fails the morphism condition,
/// in lexicographic (point, attribute) order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    /// Source point id `x`.
    pub point: String,
    /// Target attribute id `a'`.
    pub attribute: String,
    /// `e(x, bwd(a'))` in the source.
    pub source_value: Value,
    /// `e'(fwd(x), a')` in the target.
    pub target_value: Value,
}

fn check_map(map: &[usize], domain: usize, codomain: usize, what: &'static str) -> Result<()> {
    if map.len() != domain {
        return Err(Error::InvalidSpace(format!(
            "{what} map covers {} of {} elements",
            map.len(),
            domain
        )));
    }
    for &image in map {
        if image >= codomain {
            return Err(Error::IndexOutOfRange {
                what,
                index: image,
                len: codomain,
            });
        }
    }
    Ok(())
}

/// Checks the adjointness condition `e(x, bwd(a')) = e'(fwd(x), a')` for
/// every pair. Returns the first violating pair, or `None` when the pair
/// of maps is a Chu morphism.
///
/// `fwd` maps source point indices to target point indices; `bwd` maps
/// target attribute indices to source attribute indices.
pub fn check_morphism(
    source: &ChuSpace,
    target: &ChuSpace,
    fwd: &[usize],
    bwd: &[usize],
) -> Result<Option<Violation>> {
    if source.value_set() != target.value_set() {
        return Err(Error::ValueSetMismatch);
    }
    check_map(fwd, source.point_count(), target.point_count(), "fwd")?;
    check_map(bwd, target.attribute_count(), source.attribute_count(), "bwd")?;
    for (x, &fx) in fwd.iter().enumerate() {
        for (a, &ba) in bwd.iter().enumerate() {
            let lhs = source.eval(x, ba);
            let rhs = target.eval(fx, a);
            if lhs != rhs {
                return Ok(Some(Violation {
                    point: source.points()[x].clone(),
                    attribute: target.attributes()[a].clone(),
                    source_value: lhs.clone(),
                    target_value: rhs.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// A validated Chu morphism: the adjointness condition holds by
/// construction, so a value of this type is always a real morphism.
#[derive(Clone, PartialEq, Eq)]
pub struct ChuMorphism {
    source: Arc<ChuSpace>,
    target: Arc<ChuSpace>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
}

impl ChuMorphism {
    pub fn new(
        source: ChuSpace,
        target: ChuSpace,
        fwd: Vec<usize>,
        bwd: Vec<usize>,
    ) -> Result<Self> {
        Self::with_arcs(Arc::new(source), Arc::new(target), fwd, bwd)
    }

    pub(crate) fn with_arcs(
        source: Arc<ChuSpace>,
        target: Arc<ChuSpace>,
        fwd: Vec<usize>,
        bwd: Vec<usize>,
    ) -> Result<Self> {
        if let Some(violation) = check_morphism(&source, &target, &fwd, &bwd)? {
            return Err(Error::MorphismCondition(Box::new(violation)));
        }
        Ok(Self {
            source,
            target,
            fwd,
            bwd,
        })
    }

    pub fn identity(space: ChuSpace) -> Self {
        let fwd = (0..space.point_count()).collect();
        let bwd = (0..space.attribute_count()).collect();
        let arc = Arc::new(space);
        Self {
            source: arc.clone(),
            target: arc,
            fwd,
            bwd,
        }
    }

    pub fn source(&self) -> &ChuSpace {
        &self.source
    }

    pub fn target(&self) -> &ChuSpace {
        &self.target
    }

    /// Forward point map by indices: `fwd[x]` is the target point index.
    pub fn fwd(&self) -> &[usize] {
        &self.fwd
    }

    /// Backward attribute map by indices: `bwd[a']` is the source
    /// attribute index.
    pub fn bwd(&self) -> &[usize] {
        &self.bwd
    }

    pub fn is_fwd_injective(&self) -> bool {
        let mut seen = vec![false; self.target.point_count()];
        self.fwd.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Id-keyed map data, the serialization form.
    pub fn to_data(&self) -> MorphismData {
        MorphismData {
            fwd: self
                .fwd
                .iter()
                .enumerate()
                .map(|(x, &y)| {
                    (
                        self.source.points()[x].clone(),
                        self.target.points()[y].clone(),
                    )
                })
                .collect(),
            bwd: self
                .bwd
                .iter()
                .enumerate()
                .map(|(a, &b)| {
                    (
                        self.target.attributes()[a].clone(),
                        self.source.attributes()[b].clone(),
                    )
                })
                .collect(),
        }
    }

    /// Rebuilds a morphism from id-keyed data against explicit spaces.
    pub fn from_data(source: ChuSpace, target: ChuSpace, data: &MorphismData) -> Result<Self> {
        let fwd = source
            .points()
            .iter()
            .map(|p| {
                let image = data
                    .fwd
                    .get(p)
                    .ok_or_else(|| Error::MissingMapEntry(p.clone()))?;
                target.point_index(image)
            })
            .collect::<Result<_>>()?;
        let bwd = target
            .attributes()
            .iter()
            .map(|a| {
                let image = data
                    .bwd
                    .get(a)
                    .ok_or_else(|| Error::MissingMapEntry(a.clone()))?;
                source.attribute_index(image)
            })
            .collect::<Result<_>>()?;
        Self::new(source, target, fwd, bwd)
    }
}

impl fmt::Debug for ChuMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChuMorphism {{ fwd: {:?}, bwd: {:?} }}", self.fwd, self.bwd)
    }
}

/// Serialization form of a morphism: id-keyed forward and backward maps.
/// `BTreeMap` keeps key order canonical.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MorphismData {
    pub fwd: BTreeMap<String, String>,
    pub bwd: BTreeMap<String, String>,
}

/// Componentwise composition `g ∘ f`: forward maps compose covariantly,
/// backward maps contravariantly.
pub fn compose(g: &ChuMorphism, f: &ChuMorphism) -> Result<ChuMorphism> {
    if f.target() != g.source() {
        return Err(Error::NotComposable);
    }
    let fwd = f.fwd.iter().map(|&x| g.fwd[x]).collect();
    let bwd = g.bwd.iter().map(|&a| f.bwd[a]).collect();
    ChuMorphism::with_arcs(f.source.clone(), g.target.clone(), fwd, bwd)
}

/// `f ∼ g`: forward images are pointwise row-equal in the target.
///
/// Both morphisms must share source and target.
pub fn morphism_equiv(f: &ChuMorphism, g: &ChuMorphism) -> Result<bool> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::MismatchedEndpoints);
    }
    let classes = f.target().class_of_points();
    Ok(f.fwd
        .iter()
        .zip(&g.fwd)
        .all(|(&a, &b)| classes[a] == classes[b]))
}

/// The action of the biextensional collapse on morphisms:
/// `[x] ↦ [fwd(x)]` between the collapsed spaces, with the attribute map
/// unchanged. Well-defined because a morphism's forward map preserves row
/// equality.
pub fn collapse_morphism(f: &ChuMorphism) -> ChuMorphism {
    let (src, _) = f.source().biextensional_collapse();
    let (tgt, _) = f.target().biextensional_collapse();
    let src_classes = f.source().state_classes();
    let tgt_class_of = f.target().class_of_points();
    let fwd = src_classes
        .iter()
        .map(|class| tgt_class_of[f.fwd[class[0]]])
        .collect();
    ChuMorphism::new(src, tgt, fwd, f.bwd.clone())
        .expect("collapse of a morphism is a morphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: u32, matrix: Vec<Vec<u32>>) -> ChuSpace {
        ChuSpace::finite(n, matrix).unwrap()
    }

    #[test]
    fn identity_is_a_morphism() {
        let c = space(2, vec![vec![0, 1], vec![1, 1]]);
        let id = ChuMorphism::identity(c.clone());
        assert!(check_morphism(&c, &c, id.fwd(), id.bwd()).unwrap().is_none());
    }

    #[test]
    fn quotient_morphism_is_valid() {
        let c = space(2, vec![vec![0, 1], vec![0, 1], vec![1, 0]]);
        let (_, unit) = c.biextensional_collapse();
        assert!(check_morphism(unit.source(), unit.target(), unit.fwd(), unit.bwd())
            .unwrap()
            .is_none());
    }

    #[test]
    fn first_violation_is_reported() {
        let c = space(2, vec![vec![0]]);
        let d = space(2, vec![vec![1]]);
        let violation = check_morphism(&c, &d, &[0], &[0]).unwrap().unwrap();
        assert_eq!(violation.point, "x0");
        assert_eq!(violation.attribute, "a0");
        assert_eq!(violation.source_value, Value::Finite(0));
        assert_eq!(violation.target_value, Value::Finite(1));
        assert!(ChuMorphism::new(c, d, vec![0], vec![0]).is_err());
    }

    #[test]
    fn violations_are_reported_in_lexicographic_order() {
        // fwd = [0, 0] violates already at (x0, a0): e(x0,a0) = 0 vs
        // e'(x0,a0) = 1
        let c = space(2, vec![vec![0, 0], vec![1, 1]]);
        let d = space(2, vec![vec![1, 0], vec![0, 1]]);
        let violation = check_morphism(&c, &d, &[0, 0], &[0, 1]).unwrap().unwrap();
        assert_eq!(
            (violation.point.as_str(), violation.attribute.as_str()),
            ("x0", "a0")
        );
        // fwd = [1, 0] agrees at (x0, a0) and first breaks at (x0, a1)
        let violation = check_morphism(&c, &d, &[1, 0], &[0, 1]).unwrap().unwrap();
        assert_eq!(
            (violation.point.as_str(), violation.attribute.as_str()),
            ("x0", "a1")
        );
    }

    #[test]
    fn value_set_mismatch_is_an_error() {
        let c = space(2, vec![vec![0]]);
        let d = space(3, vec![vec![0]]);
        assert!(matches!(
            check_morphism(&c, &d, &[0], &[0]),
            Err(Error::ValueSetMismatch)
        ));
    }

    #[test]
    fn composition_with_identity() {
        let c = space(2, vec![vec![0, 1], vec![1, 0]]);
        let d = space(2, vec![vec![0, 1], vec![1, 0]]);
        let f = ChuMorphism::new(c.clone(), d.clone(), vec![1, 0], vec![1, 0]).unwrap();
        let idc = ChuMorphism::identity(c.clone());
        let idd = ChuMorphism::identity(d.clone());
        assert_eq!(compose(&f, &idc).unwrap(), f);
        assert_eq!(compose(&idd, &f).unwrap(), f);
        // non-composable pair
        let e = space(2, vec![vec![0]]);
        let g = ChuMorphism::identity(e);
        assert!(matches!(compose(&f, &g), Err(Error::NotComposable)));
    }

    #[test]
    fn composition_is_componentwise() {
        // quotient then embed on a 3-point space equals the direct morphism
        let c = space(2, vec![vec![0, 1], vec![0, 1], vec![1, 0]]);
        let (q, unit) = c.biextensional_collapse();
        let embed = ChuMorphism::new(q.clone(), c.clone(), vec![0, 2], vec![0, 1]).unwrap();
        let composite = compose(&embed, &unit).unwrap();
        let direct = ChuMorphism::new(c.clone(), c, vec![0, 0, 2], vec![0, 1]).unwrap();
        assert_eq!(composite, direct);
    }

    #[test]
    fn equivalence_and_collapse_of_morphisms() {
        // target with two row-equal points
        let d = space(2, vec![vec![0, 1], vec![0, 1]]);
        let c = space(2, vec![vec![0, 1]]);
        let f = ChuMorphism::new(c.clone(), d.clone(), vec![0], vec![0, 1]).unwrap();
        let g = ChuMorphism::new(c.clone(), d.clone(), vec![1], vec![0, 1]).unwrap();
        assert!(morphism_equiv(&f, &g).unwrap());
        assert_eq!(collapse_morphism(&f), collapse_morphism(&g));

        // into a separated target, equivalence is forward-map equality
        let sep = space(2, vec![vec![0, 1], vec![1, 0]]);
        let h1 = ChuMorphism::new(sep.clone(), sep.clone(), vec![0, 1], vec![0, 1]).unwrap();
        let h2 = ChuMorphism::new(sep.clone(), sep.clone(), vec![1, 0], vec![1, 0]).unwrap();
        assert!(!morphism_equiv(&h1, &h2).unwrap());
        assert!(morphism_equiv(&h1, &h1).unwrap());
    }

    #[test]
    fn collapse_is_functorial_on_a_chain() {
        let c = space(2, vec![vec![0, 1], vec![0, 1], vec![1, 0]]);
        let d = space(2, vec![vec![0, 1], vec![1, 0]]);
        let e = space(2, vec![vec![1], vec![0]]);
        let f = ChuMorphism::new(c.clone(), d.clone(), vec![0, 0, 1], vec![0, 1]).unwrap();
        // bwd picks the column of D that matches E's rows along fwd
        let g = ChuMorphism::new(d.clone(), e.clone(), vec![0, 1], vec![1]).unwrap();
        let qgf = collapse_morphism(&compose(&g, &f).unwrap());
        let qg_qf = compose(&collapse_morphism(&g), &collapse_morphism(&f)).unwrap();
        assert_eq!(qgf, qg_qf);

        // Q(identity) = identity
        let idc = ChuMorphism::identity(c.clone());
        let qid = collapse_morphism(&idc);
        let (qc, _) = c.biextensional_collapse();
        assert_eq!(qid, ChuMorphism::identity(qc));
    }

    #[test]
    fn data_roundtrip() {
        let c = space(2, vec![vec![0, 1], vec![1, 0]]);
        let f = ChuMorphism::new(c.clone(), c.clone(), vec![1, 0], vec![1, 0]).unwrap();
        let data = f.to_data();
        let back = ChuMorphism::from_data(c.clone(), c.clone(), &data).unwrap();
        assert_eq!(back, f);
        let json = serde_json::to_string(&data).unwrap();
        assert_eq!(
            json,
            r#"{"fwd":{"x0":"x1","x1":"x0"},"bwd":{"a0":"a1","a1":"a0"}}"#
        );
    }
}
