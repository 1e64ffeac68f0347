//! Executable checks of the evaluation laws on a sampled quantum space.
//!
//! Each check scans every sampled cell (or pair) and reports pass/fail
//! with the first offending cell as a witness. On valid inputs all of
//! them hold exactly; failures are report content, not errors.

use serde::{Deserialize, Serialize};
use serde_json::json;

use num_traits::{One, Zero};

use crate::hilbert::{orthogonal, SemilinearMap, Subspace};
use crate::{Error, Result};

use super::{evaluate, induced_morphism, SampledQuantumChu};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaStatus {
    Pass,
    Fail,
}

/// One line of the report: a named law, its status, and on failure the
/// cell that broke it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LemmaResult {
    pub lemma: String,
    pub status: LemmaStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl LemmaResult {
    fn pass(lemma: &str) -> Self {
        Self {
            lemma: lemma.to_string(),
            status: LemmaStatus::Pass,
            witness: None,
        }
    }

    fn fail(lemma: &str, witness: serde_json::Value) -> Self {
        Self {
            lemma: lemma.to_string(),
            status: LemmaStatus::Fail,
            witness: Some(witness),
        }
    }

    fn of(lemma: &str, witness: Option<serde_json::Value>) -> Self {
        match witness {
            None => Self::pass(lemma),
            Some(w) => Self::fail(lemma, w),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LemmaReport {
    pub results: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == LemmaStatus::Pass)
    }
}

/// Runs every evaluation law on the sample, plus the symmetry laws for
/// each witness map.
///
/// The sample must be ray-closed. Witnesses must be semiunitary; each is
/// checked between the sample and its exact image window, so no closure
/// condition is imposed on the witnesses.
pub fn lemma_suite(
    sample: &SampledQuantumChu,
    witnesses: &[SemilinearMap],
) -> Result<LemmaReport> {
    if !sample.is_ray_closed() {
        return Err(Error::NotRayClosed("lemma suite input".into()));
    }
    for u in witnesses {
        if !u.classify().is_semiunitary() {
            return Err(Error::NotSemiunitary);
        }
    }

    let mut results = Vec::new();
    // informational: the uniqueness-up-to-phase results need dimension
    // above 2; lower-dimensional samples still support every check below
    results.push(LemmaResult {
        lemma: "dimension_note".into(),
        status: LemmaStatus::Pass,
        witness: Some(json!({
            "dim": sample.dim(),
            "above_two": sample.dim() > 2,
        })),
    });
    results.push(LemmaResult::of("membership", membership_witness(sample)?));
    results.push(LemmaResult::of("partition", partition_witness(sample)?));
    results.push(LemmaResult::of(
        "orthogonality_detection",
        orthogonality_detection_witness(sample)?,
    ));
    results.push(LemmaResult::of("ray_inclusion", ray_inclusion_witness(sample)?));
    results.push(LemmaResult::of("ray_classes", ray_classes_witness(sample)));
    results.push(LemmaResult::of(
        "extensionality",
        extensionality_witness(sample),
    ));

    for (k, u) in witnesses.iter().enumerate() {
        let target = sample.push_forward(u)?;
        // constructing the induced morphism re-verifies the Chu condition cell by cell
        let induced = induced_morphism(u, sample, &target);
        results.push(match induced {
            Ok(_) => LemmaResult::pass(&format!("morphism_condition[{k}]")),
            Err(e) => LemmaResult::fail(
                &format!("morphism_condition[{k}]"),
                json!({ "error": e.to_string() }),
            ),
        });
        results.push(LemmaResult::of(
            &format!("ray_adjunction[{k}]"),
            ray_adjunction_witness(sample, &target, u)?,
        ));
        results.push(LemmaResult::of(
            &format!("atom_preimage[{k}]"),
            atom_preimage_witness(sample, u)?,
        ));
        results.push(LemmaResult::of(
            &format!("orthogonality_preservation[{k}]"),
            orthogonality_preservation_witness(sample, u)?,
        ));
        results.push(LemmaResult::of(
            &format!("image_adjunction[{k}]"),
            image_adjunction_witness(sample, &target, u)?,
        ));
    }

    Ok(LemmaReport { results })
}

/// `e(ψ, S) = 1 ⟺ ψ ∈ S` on every sampled cell.
fn membership_witness(sample: &SampledQuantumChu) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        for (j, s) in sample.attrs().iter().enumerate() {
            let value = evaluate(psi, s)?;
            if value.is_one() != s.member(psi)? {
                return Ok(Some(json!({
                    "state": format!("psi{i}"),
                    "attr": format!("S{j}"),
                    "value": crate::scalar::rational_string(&value),
                })));
            }
        }
    }
    Ok(None)
}

/// `e(ψ, S) + e(ψ, S^⊥) = 1` on every sampled cell.
fn partition_witness(sample: &SampledQuantumChu) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        for (j, s) in sample.attrs().iter().enumerate() {
            let total = evaluate(psi, s)? + evaluate(psi, &s.orthocomplement())?;
            if !total.is_one() {
                return Ok(Some(json!({
                    "state": format!("psi{i}"),
                    "attr": format!("S{j}"),
                    "sum": crate::scalar::rational_string(&total),
                })));
            }
        }
    }
    Ok(None)
}

/// `e(ψ, S) = 0 ⟺ ψ ⊥ S` on every sampled cell.
fn orthogonality_detection_witness(
    sample: &SampledQuantumChu,
) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        for (j, s) in sample.attrs().iter().enumerate() {
            let value = evaluate(psi, s)?;
            if value.is_zero() != s.orthogonal_to(psi)? {
                return Ok(Some(json!({
                    "state": format!("psi{i}"),
                    "attr": format!("S{j}"),
                    "value": crate::scalar::rational_string(&value),
                })));
            }
        }
    }
    Ok(None)
}

/// `e(ψ, S) = 1 ⟺ ⟨ψ⟩ ⊆ S` on every sampled cell.
fn ray_inclusion_witness(sample: &SampledQuantumChu) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        let ray = Subspace::ray(psi)?;
        for (j, s) in sample.attrs().iter().enumerate() {
            if evaluate(psi, s)?.is_one() != s.contains(&ray)? {
                return Ok(Some(json!({
                    "state": format!("psi{i}"),
                    "attr": format!("S{j}"),
                })));
            }
        }
    }
    Ok(None)
}

/// The row-equality classes of the sampled space are exactly the
/// proportionality classes of the states.
fn ray_classes_witness(sample: &SampledQuantumChu) -> Option<serde_json::Value> {
    let rows = sample.build_space().state_classes();
    let rays = sample.proportionality_classes();
    (rows != rays).then(|| {
        json!({
            "row_classes": rows,
            "proportionality_classes": rays,
        })
    })
}

/// The sampled space distinguishes its attributes.
fn extensionality_witness(sample: &SampledQuantumChu) -> Option<serde_json::Value> {
    let space = sample.build_space();
    (!space.is_extensional()).then(|| json!({ "extensional": false }))
}

/// `⟨ψ⟩ ⊆ U⁻¹S ⟺ ⟨Uψ⟩ ⊆ S` for sampled states against target attributes.
fn ray_adjunction_witness(
    sample: &SampledQuantumChu,
    target: &SampledQuantumChu,
    u: &SemilinearMap,
) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        let ray = Subspace::ray(psi)?;
        let image_ray = Subspace::ray(&u.apply(psi)?)?;
        for (j, s) in target.attrs().iter().enumerate() {
            let lhs = u.preimage_subspace(s)?.contains(&ray)?;
            let rhs = s.contains(&image_ray)?;
            if lhs != rhs {
                return Ok(Some(json!({
                    "state": format!("psi{i}"),
                    "target_attr": format!("S{j}"),
                })));
            }
        }
    }
    Ok(None)
}

/// `U⁻¹⟨Uψ⟩ = ⟨ψ⟩`: the only atom below the pulled-back image ray is the
/// ray itself.
fn atom_preimage_witness(
    sample: &SampledQuantumChu,
    u: &SemilinearMap,
) -> Result<Option<serde_json::Value>> {
    for (i, psi) in sample.states().iter().enumerate() {
        let ray = Subspace::ray(psi)?;
        let pulled = u.preimage_subspace(&Subspace::ray(&u.apply(psi)?)?)?;
        if pulled != ray {
            return Ok(Some(json!({ "state": format!("psi{i}") })));
        }
    }
    Ok(None)
}

/// `φ ⊥ ψ ⟺ Uφ ⊥ Uψ` on every sampled pair.
fn orthogonality_preservation_witness(
    sample: &SampledQuantumChu,
    u: &SemilinearMap,
) -> Result<Option<serde_json::Value>> {
    let states = sample.states();
    for i in 0..states.len() {
        let ui = u.apply(&states[i])?;
        for j in (i + 1)..states.len() {
            let uj = u.apply(&states[j])?;
            if orthogonal(&states[i], &states[j])? != orthogonal(&ui, &uj)? {
                return Ok(Some(json!({
                    "first": format!("psi{i}"),
                    "second": format!("psi{j}"),
                })));
            }
        }
    }
    Ok(None)
}

/// `U(S) ⊆ T ⟺ S ⊆ U⁻¹T` for sampled source and target attributes.
fn image_adjunction_witness(
    sample: &SampledQuantumChu,
    target: &SampledQuantumChu,
    u: &SemilinearMap,
) -> Result<Option<serde_json::Value>> {
    for (i, s) in sample.attrs().iter().enumerate() {
        let image = u.image_subspace(s)?;
        for (j, t) in target.attrs().iter().enumerate() {
            let lhs = t.contains(&image)?;
            let rhs = u.preimage_subspace(t)?.contains(s)?;
            if lhs != rhs {
                return Ok(Some(json!({
                    "source_attr": format!("S{i}"),
                    "target_attr": format!("S{j}"),
                })));
            }
        }
    }
    Ok(None)
}
