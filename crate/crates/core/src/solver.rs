//! Enumeration of all Chu morphisms between two finite spaces.
//!
//! Two routes with the same output contract: a pruned backtracking search
//! ([`enumerate_morphisms`]) and an exhaustive check of every candidate
//! pair ([`brute_force_morphisms`]), kept as an independent oracle for the
//! search. Both return morphisms in lexicographic order of the
//! `(fwd, bwd)` index tuples, so their outputs are comparable list-for-list.
//!
//! Search strategy: assign forward images point by point in id order; after
//! each assignment, filter every target attribute's candidate list of
//! source attributes against the new row constraint (forward checking).
//! Once all forward images are fixed, the condition factorizes per target
//! attribute, and the backward maps are exactly the cartesian product of
//! the per-attribute candidate lists.

use std::sync::Arc;

use crate::chu::{check_morphism, ChuMorphism, ChuSpace};
use crate::{Error, Result};

/// Search options shared by all three entry points.
#[derive(Clone, Debug, Default)]
pub struct SearchConstraints {
    /// Keep only morphisms whose forward map is injective.
    pub injective_fwd: bool,
    /// Stop after this many results (bounds counting too).
    pub max_results: Option<usize>,
}

impl SearchConstraints {
    pub fn injective() -> Self {
        Self {
            injective_fwd: true,
            max_results: None,
        }
    }
}

const BRUTE_FORCE_GUARD: u128 = 10_000_000;

struct Search<'a> {
    source: &'a ChuSpace,
    target: &'a ChuSpace,
    cons: &'a SearchConstraints,
    /// candidates[a'] = source attributes still consistent with the partial fwd
    candidates: Vec<Vec<usize>>,
    fwd: Vec<usize>,
    used: Vec<bool>,
}

enum Emit<'f> {
    Collect(&'f mut Vec<(Vec<usize>, Vec<usize>)>),
    Count(&'f mut u64),
}

impl Search<'_> {
    fn run(&mut self, emit: &mut Emit) -> Result<()> {
        self.assign(0, emit)
    }

    fn done(&self, emit: &Emit) -> bool {
        let Some(max) = self.cons.max_results else {
            return false;
        };
        let produced = match emit {
            Emit::Collect(out) => out.len() as u64,
            Emit::Count(n) => **n,
        };
        produced >= max as u64
    }

    fn assign(&mut self, point: usize, emit: &mut Emit) -> Result<()> {
        if self.done(emit) {
            return Ok(());
        }
        if point == self.source.point_count() {
            return self.emit_leaf(emit);
        }
        for y in 0..self.target.point_count() {
            if self.cons.injective_fwd && self.used[y] {
                continue;
            }
            // forward checking: shrink every candidate list under e(point, a) = e'(y, a')
            let saved = self.candidates.clone();
            let mut dead = false;
            for (a_t, cands) in self.candidates.iter_mut().enumerate() {
                cands.retain(|&a_s| self.source.eval(point, a_s) == self.target.eval(y, a_t));
                if cands.is_empty() {
                    dead = true;
                    break;
                }
            }
            if !dead {
                self.fwd.push(y);
                self.used[y] = true;
                self.assign(point + 1, emit)?;
                self.used[y] = false;
                self.fwd.pop();
            }
            self.candidates = saved;
            if self.done(emit) {
                return Ok(());
            }
        }
        Ok(())
    }

    fn emit_leaf(&self, emit: &mut Emit) -> Result<()> {
        match emit {
            Emit::Count(n) => {
                let mut product: u64 = 1;
                for cands in &self.candidates {
                    product = product
                        .checked_mul(cands.len() as u64)
                        .ok_or(Error::CountOverflow)?;
                }
                **n = n.checked_add(product).ok_or(Error::CountOverflow)?;
                if let Some(max) = self.cons.max_results {
                    **n = (**n).min(max as u64);
                }
                Ok(())
            }
            Emit::Collect(out) => {
                // odometer over the candidate lists, most significant first
                let attrs = self.candidates.len();
                let mut cursor = vec![0usize; attrs];
                loop {
                    let bwd: Vec<usize> = cursor
                        .iter()
                        .enumerate()
                        .map(|(a, &k)| self.candidates[a][k])
                        .collect();
                    out.push((self.fwd.clone(), bwd));
                    if let Some(max) = self.cons.max_results {
                        if out.len() >= max {
                            return Ok(());
                        }
                    }
                    // advance
                    let mut pos = attrs;
                    loop {
                        if pos == 0 {
                            return Ok(());
                        }
                        pos -= 1;
                        cursor[pos] += 1;
                        if cursor[pos] < self.candidates[pos].len() {
                            break;
                        }
                        cursor[pos] = 0;
                    }
                }
            }
        }
    }
}

fn prepare<'a>(
    source: &'a ChuSpace,
    target: &'a ChuSpace,
    cons: &'a SearchConstraints,
) -> Result<Search<'a>> {
    if source.value_set() != target.value_set() {
        return Err(Error::ValueSetMismatch);
    }
    Ok(Search {
        source,
        target,
        cons,
        candidates: vec![(0..source.attribute_count()).collect(); target.attribute_count()],
        fwd: Vec::with_capacity(source.point_count()),
        used: vec![false; target.point_count()],
    })
}

fn materialize(
    source: &ChuSpace,
    target: &ChuSpace,
    pairs: Vec<(Vec<usize>, Vec<usize>)>,
) -> Vec<ChuMorphism> {
    let src = Arc::new(source.clone());
    let tgt = Arc::new(target.clone());
    pairs
        .into_iter()
        .map(|(fwd, bwd)| {
            ChuMorphism::with_arcs(src.clone(), tgt.clone(), fwd, bwd)
                .expect("search emits only valid morphisms")
        })
        .collect()
}

/// All Chu morphisms from `source` to `target`, in lexicographic
/// `(fwd, bwd)` order.
pub fn enumerate_morphisms(
    source: &ChuSpace,
    target: &ChuSpace,
    cons: &SearchConstraints,
) -> Result<Vec<ChuMorphism>> {
    let mut search = prepare(source, target, cons)?;
    let mut out = Vec::new();
    search.run(&mut Emit::Collect(&mut out))?;
    Ok(materialize(source, target, out))
}

/// Number of morphisms, without materializing them.
pub fn count_morphisms(
    source: &ChuSpace,
    target: &ChuSpace,
    cons: &SearchConstraints,
) -> Result<u64> {
    let mut search = prepare(source, target, cons)?;
    let mut n = 0u64;
    search.run(&mut Emit::Count(&mut n))?;
    Ok(n)
}

/// Tests every `(fwd, bwd)` pair exhaustively. Same output contract as
/// [`enumerate_morphisms`]; kept independent of the search as an oracle.
///
/// Guarded: the product of the two function-space sizes must stay at or
/// below 10^7 candidate pairs.
pub fn brute_force_morphisms(
    source: &ChuSpace,
    target: &ChuSpace,
    cons: &SearchConstraints,
) -> Result<Vec<ChuMorphism>> {
    if source.value_set() != target.value_set() {
        return Err(Error::ValueSetMismatch);
    }
    let fwd_space = pow_u128(target.point_count(), source.point_count());
    let bwd_space = pow_u128(source.attribute_count(), target.attribute_count());
    let size = fwd_space.saturating_mul(bwd_space);
    if size > BRUTE_FORCE_GUARD {
        return Err(Error::SearchSpaceTooLarge { size });
    }
    let mut out = Vec::new();
    let mut fwd = vec![0usize; source.point_count()];
    'fwd: loop {
        let injective_ok = !cons.injective_fwd || {
            let mut seen = vec![false; target.point_count()];
            fwd.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        };
        if injective_ok {
            let mut bwd = vec![0usize; target.attribute_count()];
            'bwd: loop {
                if check_morphism(source, target, &fwd, &bwd)?.is_none() {
                    out.push((fwd.clone(), bwd.clone()));
                    if let Some(max) = cons.max_results {
                        if out.len() >= max {
                            break 'fwd;
                        }
                    }
                }
                if !advance(&mut bwd, source.attribute_count()) {
                    break 'bwd;
                }
            }
        }
        if !advance(&mut fwd, target.point_count()) {
            break;
        }
    }
    Ok(materialize(source, target, out))
}

/// Lexicographic odometer, most significant digit first. Returns false
/// after the last tuple. Zero-length tuples have exactly one value.
fn advance(digits: &mut [usize], base: usize) -> bool {
    let mut pos = digits.len();
    loop {
        if pos == 0 {
            return false;
        }
        pos -= 1;
        digits[pos] += 1;
        if digits[pos] < base {
            return true;
        }
        digits[pos] = 0;
    }
}

fn pow_u128(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
