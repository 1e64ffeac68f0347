//! Finite Chu spaces over an arbitrary value set.
//!
//! A space is a finite set of points, a finite set of attributes, and an
//! evaluation matrix into a value set. Points and attributes are ordered
//! lists with stable string ids; every enumeration or "first violation"
//! below is lexicographic in those orders, so all outputs are
//! deterministic and diffable.

mod embedding;
mod morphism;

pub use embedding::{set_embedding, set_embedding_morphism};
pub use morphism::{
    check_morphism, collapse_morphism, compose, morphism_equiv, ChuMorphism, MorphismData,
    Violation,
};

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{parse_rational, rational_string};
use crate::{Error, Result};

/// The value set an evaluation lands in: either a finite ordinal
/// `{0, …, n−1}` or the exact rational unit interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValueSet {
    Finite(u32),
    UnitInterval,
}

impl ValueSet {
    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (ValueSet::Finite(n), Value::Finite(k)) => k < n,
            (ValueSet::UnitInterval, Value::Rational(r)) => {
                !r.is_negative() && *r <= BigRational::one()
            }
            _ => false,
        }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSet::Finite(n) => write!(f, "finite({n})"),
            ValueSet::UnitInterval => write!(f, "unit_interval"),
        }
    }
}

trait RationalSign {
    fn is_negative(&self) -> bool;
}

impl RationalSign for BigRational {
    fn is_negative(&self) -> bool {
        *self < BigRational::zero()
    }
}

/// A single evaluation value. Equality is exact: integers structurally,
/// rationals in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Value {
    Finite(u32),
    Rational(BigRational),
}

impl Value {
    pub fn rational(r: BigRational) -> Self {
        Value::Rational(r)
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Value::Rational(BigRational::new(p.into(), q.into()))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(k) => write!(f, "{k}"),
            Value::Rational(r) => write!(f, "{}", rational_string(r)),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Finite(k) => serializer.serialize_u32(*k),
            Value::Rational(r) => serializer.serialize_str(&rational_string(r)),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = serde_json::Value::deserialize(deserializer)?;
        match raw {
            serde_json::Value::Number(n) => {
                let k = n
                    .as_u64()
                    .and_then(|k| u32::try_from(k).ok())
                    .ok_or_else(|| D::Error::custom(format!("invalid finite value {n}")))?;
                Ok(Value::Finite(k))
            }
            serde_json::Value::String(s) => {
                Ok(Value::Rational(parse_rational(&s).map_err(D::Error::custom)?))
            }
            other => Err(D::Error::custom(format!(
                "expected integer or \"p/q\" string, got {other}"
            ))),
        }
    }
}

/// A finite Chu space `(X, A, e)` over a value set.
///
/// Extensionality and separation flags are computed once at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChuSpace {
    value_set: ValueSet,
    points: Vec<String>,
    attributes: Vec<String>,
    matrix: Vec<Vec<Value>>,
    extensional: bool,
    separated: bool,
}

impl ChuSpace {
    pub fn new(
        value_set: ValueSet,
        points: Vec<String>,
        attributes: Vec<String>,
        matrix: Vec<Vec<Value>>,
    ) -> Result<Self> {
        check_unique(&points)?;
        check_unique(&attributes)?;
        if matrix.len() != points.len() {
            return Err(Error::InvalidSpace(format!(
                "matrix has {} rows for {} points",
                matrix.len(),
                points.len()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(Error::InvalidSpace(format!(
                    "row {} has {} entries for {} attributes",
                    i,
                    row.len(),
                    attributes.len()
                )));
            }
            for v in row {
                if !value_set.contains(v) {
                    return Err(Error::ValueOutOfRange {
                        value: v.to_string(),
                        value_set: value_set.to_string(),
                    });
                }
            }
        }
        let separated = (0..matrix.len()).all(|i| (0..i).all(|j| matrix[i] != matrix[j]));
        let extensional = (0..attributes.len()).all(|a| {
            (0..a).all(|b| matrix.iter().any(|row| row[a] != row[b]))
        });
        Ok(Self {
            value_set,
            points,
            attributes,
            matrix,
            extensional,
            separated,
        })
    }

    /// Convenience constructor over `finite(n)` with integer entries and
    /// generated ids `x0..`/`a0..`.
    pub fn finite(n: u32, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let points = (0..matrix.len()).map(|i| format!("x{i}")).collect();
        let attrs = matrix.first().map_or(0, Vec::len);
        let attributes = (0..attrs).map(|j| format!("a{j}")).collect();
        ChuSpace::new(
            ValueSet::Finite(n),
            points,
            attributes,
            matrix
                .into_iter()
                .map(|row| row.into_iter().map(Value::Finite).collect())
                .collect(),
        )
    }

    pub fn value_set(&self) -> &ValueSet {
        &self.value_set
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    /// `e(x, a)` by indices.
    pub fn eval(&self, point: usize, attr: usize) -> &Value {
        &self.matrix[point][attr]
    }

    pub fn row(&self, point: usize) -> &[Value] {
        &self.matrix[point]
    }

    pub fn point_index(&self, id: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn attribute_index(&self, id: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Attributes are distinguished by the evaluation.
    pub fn is_extensional(&self) -> bool {
        self.extensional
    }

    /// Points are distinguished by the evaluation.
    pub fn is_separated(&self) -> bool {
        self.separated
    }

    pub fn is_biextensional(&self) -> bool {
        self.extensional && self.separated
    }

    /// The partition of points under exact row equality, classes ordered by
    /// least member, members ascending.
    pub fn state_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.points.len() {
            match classes
                .iter_mut()
                .find(|c| self.matrix[c[0]] == self.matrix[i])
            {
                Some(class) => class.push(i),
                None => classes.push(vec![i]),
            }
        }
        classes
    }

    /// For each point, the index of its row-equality class.
    pub fn class_of_points(&self) -> Vec<usize> {
        let classes = self.state_classes();
        let mut out = vec![0; self.points.len()];
        for (ci, class) in classes.iter().enumerate() {
            for &p in class {
                out[p] = ci;
            }
        }
        out
    }

    /// Quotients points by row equality and returns the collapsed space
    /// together with the unit morphism `(q, id_A)`.
    ///
    /// Defined on every space: on non-extensional input the result is
    /// separated but keeps its duplicate attributes, and the cached flags
    /// report that honestly. Collapsed point ids are the ids of each
    /// class's first member in point order.
    pub fn biextensional_collapse(&self) -> (ChuSpace, ChuMorphism) {
        let classes = self.state_classes();
        let points = classes
            .iter()
            .map(|c| self.points[c[0]].clone())
            .collect();
        let matrix = classes.iter().map(|c| self.matrix[c[0]].clone()).collect();
        let collapsed = ChuSpace::new(
            self.value_set.clone(),
            points,
            self.attributes.clone(),
            matrix,
        )
        .expect("quotient of a valid space is valid");
        let fwd = self.class_of_points();
        let bwd = (0..self.attributes.len()).collect();
        let unit = ChuMorphism::new(self.clone(), collapsed.clone(), fwd, bwd)
            .expect("the quotient map is always a Chu morphism");
        (collapsed, unit)
    }
}

fn check_unique(ids: &[String]) -> Result<()> {
    for (i, id) in ids.iter().enumerate() {
        if ids[..i].contains(id) {
            return Err(Error::DuplicateId(id.clone()));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct RawValueSet {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
}

impl Serialize for ValueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match self {
            ValueSet::Finite(n) => RawValueSet {
                kind: "finite".into(),
                n: Some(*n),
            },
            ValueSet::UnitInterval => RawValueSet {
                kind: "unit_interval".into(),
                n: None,
            },
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ValueSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawValueSet::deserialize(deserializer)?;
        match raw.kind.as_str() {
            "finite" => {
                let n = raw
                    .n
                    .ok_or_else(|| D::Error::custom("finite value set requires field \"n\""))?;
                Ok(ValueSet::Finite(n))
            }
            "unit_interval" => Ok(ValueSet::UnitInterval),
            other => Err(D::Error::custom(format!("unknown value set kind {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawSpace {
    value_set: ValueSet,
    points: Vec<String>,
    attributes: Vec<String>,
    matrix: Vec<Vec<Value>>,
}

impl Serialize for ChuSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawSpace {
            value_set: self.value_set.clone(),
            points: self.points.clone(),
            attributes: self.attributes.clone(),
            matrix: self.matrix.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChuSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSpace::deserialize(deserializer)?;
        ChuSpace::new(raw.value_set, raw.points, raw.attributes, raw.matrix)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_and_classes() {
        // two identical rows: separated fails, one class of size 2
        let c = ChuSpace::finite(2, vec![vec![0, 1], vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!c.is_separated());
        assert!(c.is_extensional());
        assert_eq!(c.state_classes(), vec![vec![0, 1], vec![2]]);

        // duplicate columns: not extensional
        let d = ChuSpace::finite(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!d.is_extensional());
        assert!(d.is_separated());

        // separated space: all classes singletons
        let e = ChuSpace::finite(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(e.is_biextensional());
        assert_eq!(e.state_classes(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            ChuSpace::finite(2, vec![vec![0, 2]]),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            ChuSpace::new(
                ValueSet::Finite(2),
                vec!["x".into(), "x".into()],
                vec!["a".into()],
                vec![vec![Value::Finite(0)], vec![Value::Finite(1)]],
            ),
            Err(Error::DuplicateId(_))
        ));
        assert!(matches!(
            ChuSpace::finite(2, vec![vec![0], vec![0, 1]]),
            Err(Error::InvalidSpace(_))
        ));
        // unit-interval entries must lie in [0, 1]
        assert!(matches!(
            ChuSpace::new(
                ValueSet::UnitInterval,
                vec!["x".into()],
                vec!["a".into()],
                vec![vec![Value::from_ratio(3, 2)]],
            ),
            Err(Error::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn collapse_merges_identical_rows() {
        let c = ChuSpace::finite(2, vec![vec![0, 1], vec![0, 1], vec![1, 1]]).unwrap();
        let (q, unit) = c.biextensional_collapse();
        assert_eq!(q.point_count(), 2);
        assert_eq!(q.points(), &["x0".to_string(), "x2".to_string()]);
        assert!(q.is_separated());
        assert_eq!(unit.fwd(), &[0, 0, 1]);
        // collapse is idempotent on its output
        let (qq, _) = q.biextensional_collapse();
        assert_eq!(qq, q);
    }

    #[test]
    fn collapse_of_biextensional_space_is_identity_like() {
        let c = ChuSpace::finite(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let (q, unit) = c.biextensional_collapse();
        assert_eq!(q, c);
        assert_eq!(unit.fwd(), &[0, 1]);
    }

    #[test]
    fn collapse_keeps_nonextensionality_visible() {
        let c = ChuSpace::finite(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        let (q, _) = c.biextensional_collapse();
        assert!(!q.is_extensional());
        assert!(q.is_separated());
    }

    #[test]
    fn json_schema_roundtrip() {
        let c = ChuSpace::new(
            ValueSet::UnitInterval,
            vec!["p".into(), "q".into()],
            vec!["a".into()],
            vec![
                vec![Value::from_ratio(1, 2)],
                vec![Value::from_ratio(1, 1)],
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains(r#""kind":"unit_interval""#));
        assert!(json.contains(r#""1/2""#));
        let back: ChuSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);

        let f = ChuSpace::finite(3, vec![vec![0, 2], vec![1, 1]]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains(r#""kind":"finite","n":3"#));
        let back: ChuSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
