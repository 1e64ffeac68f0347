//! The power-set embedding of finite sets into Chu spaces over `finite(2)`.

use crate::{Error, Result};

use super::{ChuMorphism, ChuSpace, Value, ValueSet};

const MAX_EMBEDDED_SET: usize = 16;

/// `(X, P X, e_X)` with `e_X(x, S) = 1` iff `x ∈ S`.
///
/// Attributes are all subsets of `X` in binary-counter order (the empty
/// set first), with ids written as set literals over the point ids.
pub fn set_embedding(points: &[&str]) -> Result<ChuSpace> {
    if points.len() > MAX_EMBEDDED_SET {
        return Err(Error::SearchSpaceTooLarge {
            size: 1u128 << points.len(),
        });
    }
    let n = points.len();
    let subsets: Vec<u32> = (0..(1u32 << n)).collect();
    let attributes = subsets
        .iter()
        .map(|&mask| {
            let members: Vec<&str> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| points[i]).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let matrix = (0..n)
        .map(|i| {
            subsets
                .iter()
                .map(|&mask| Value::Finite(u32::from(mask & (1 << i) != 0)))
                .collect()
        })
        .collect();
    ChuSpace::new(
        ValueSet::Finite(2),
        points.iter().map(|p| p.to_string()).collect(),
        attributes,
        matrix,
    )
}

/// The morphism `(h, h⁻¹)` between two set embeddings, where `h` sends the
/// i-th source point to the `h[i]`-th target point. Always satisfies the
/// Chu condition: `x ∈ h⁻¹(T) ⟺ h(x) ∈ T`.
///
/// Both spaces must actually be set embeddings of their point lists.
pub fn set_embedding_morphism(
    source: &ChuSpace,
    target: &ChuSpace,
    h: &[usize],
) -> Result<ChuMorphism> {
    let check = |space: &ChuSpace| -> Result<()> {
        let points: Vec<&str> = space.points().iter().map(String::as_str).collect();
        let fresh = set_embedding(&points)?;
        if fresh != *space {
            return Err(Error::InvalidSpace(
                "space is not the power-set embedding of its points".into(),
            ));
        }
        Ok(())
    };
    check(source)?;
    check(target)?;
    if h.len() != source.point_count() {
        return Err(Error::InvalidSpace(format!(
            "function covers {} of {} points",
            h.len(),
            source.point_count()
        )));
    }
    // Attribute index of a subset IS its bitmask, so the preimage of the
    // target mask t is the source mask with bit i set iff bit h[i] is set.
    let bwd = (0..target.attribute_count())
        .map(|t| {
            let mut mask = 0usize;
            for (i, &hi) in h.iter().enumerate() {
                if t & (1 << hi) != 0 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    ChuMorphism::new(source.clone(), target.clone(), h.to_vec(), bwd)
}
