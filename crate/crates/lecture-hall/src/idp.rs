//! Integer decomposition chains for order polytopes.
//!
//! Write a ⊴ b when a <= b componentwise and additionally a_i != 0 forces
//! b_i = s_i (the entry above a nonzero entry is saturated). Every lattice
//! point x of the k-th dilate of O(P, s) decomposes as a sum of k lattice
//! points of O(P, s) forming a ⊴-chain, and that chain is unique: peel off
//! the top part `x ∧ s` and recurse on `(x - s) ∨ 0`. This module builds the
//! chain constructively and also re-checks existence, uniqueness and the
//! summand sandwich bounds by exhaustive search, so the construction never
//! has to be taken on faith.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polytope;
use crate::poset::LabeledPoset;
use crate::seq::SSequence;

/// A ⊴-increasing list of polytope points summing to a decomposed target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionChain {
    pub parts: Vec<LatticePoint>,
}

impl DecompositionChain {
    pub fn k(&self) -> usize {
        self.parts.len()
    }
}

/// Which chain invariant failed, reported by [`verify_chain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainViolation {
    /// Some part has the wrong dimension or the chain is empty.
    Malformed,
    /// Part at this 1-based position is not a lattice point of O(P, s).
    PartOutside(usize),
    /// The ⊴ relation fails between positions i and i+1 (1-based i).
    OrderViolated(usize),
    /// The parts do not sum to the decomposed point.
    SumMismatch,
}

impl std::fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainViolation::Malformed => write!(f, "chain is empty or has mismatched dimensions"),
            ChainViolation::PartOutside(i) => write!(f, "part {i} lies outside the polytope"),
            ChainViolation::OrderViolated(i) => {
                write!(
                    f,
                    "parts {i} and {} are not related by the chain order",
                    i + 1
                )
            }
            ChainViolation::SumMismatch => write!(f, "parts do not sum to the target point"),
        }
    }
}

/// The saturated order: a <= b componentwise, and a_i != 0 implies b_i = s_i.
pub fn saturated_leq(a: &LatticePoint, b: &LatticePoint, s: &SSequence) -> Result<bool> {
    if a.dim() != b.dim() || a.dim() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            got: if a.dim() != s.n() { a.dim() } else { b.dim() },
        });
    }
    for i in 0..s.n() {
        if a[i] > b[i] {
            return Ok(false);
        }
        if a[i] != 0 && b[i] != s.entries()[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decompose a point of the k-th dilate into its unique ⊴-chain of k parts.
///
/// Errors if the point is not in the dilate.
pub fn decompose(
    poset: &LabeledPoset,
    s: &SSequence,
    point: &LatticePoint,
    k: i64,
) -> Result<DecompositionChain> {
    if !polytope::order_polytope_contains(poset, s, point, k)? {
        return Err(Error::InvalidInput(format!(
            "{point} is not a lattice point of dilate {k} of the order polytope"
        )));
    }
    let s_point = LatticePoint::new(s.entries().to_vec());
    let zero = LatticePoint::zeros(s.n());
    let mut rest = point.clone();
    let mut parts_top_down = Vec::with_capacity(k as usize);
    for _ in 2..=k {
        parts_top_down.push(rest.meet(&s_point)?);
        rest = rest.sub(&s_point)?.join(&zero)?;
    }
    parts_top_down.push(rest);
    parts_top_down.reverse();
    Ok(DecompositionChain {
        parts: parts_top_down,
    })
}

/// Check the three chain invariants against (P, s) and the target point.
pub fn verify_chain(
    chain: &DecompositionChain,
    poset: &LabeledPoset,
    s: &SSequence,
    point: &LatticePoint,
) -> std::result::Result<(), ChainViolation> {
    if chain.parts.is_empty()
        || point.dim() != s.n()
        || chain.parts.iter().any(|p| p.dim() != s.n())
    {
        return Err(ChainViolation::Malformed);
    }
    for (i, part) in chain.parts.iter().enumerate() {
        match polytope::order_polytope_contains(poset, s, part, 1) {
            Ok(true) => {}
            _ => return Err(ChainViolation::PartOutside(i + 1)),
        }
    }
    for i in 0..chain.parts.len() - 1 {
        match saturated_leq(&chain.parts[i], &chain.parts[i + 1], s) {
            Ok(true) => {}
            _ => return Err(ChainViolation::OrderViolated(i + 1)),
        }
    }
    let mut sum = LatticePoint::zeros(s.n());
    for part in &chain.parts {
        sum = match sum.add(part) {
            Ok(v) => v,
            Err(_) => return Err(ChainViolation::SumMismatch),
        };
    }
    if &sum != point {
        return Err(ChainViolation::SumMismatch);
    }
    Ok(())
}

/// Exhaustively enumerate every ⊴-chain of k polytope points summing to the
/// target. Used to certify uniqueness of [`decompose`] without assuming it.
pub fn chain_decompositions(
    poset: &LabeledPoset,
    s: &SSequence,
    point: &LatticePoint,
    k: i64,
    budget: u64,
) -> Result<Vec<Vec<LatticePoint>>> {
    let degree_one = polytope::enumerate_dilate_points(poset, s, 1, budget)?;
    let mut found = Vec::new();
    let mut prefix: Vec<LatticePoint> = Vec::new();

    fn search(
        s: &SSequence,
        degree_one: &[LatticePoint],
        prefix: &mut Vec<LatticePoint>,
        remaining: &LatticePoint,
        slots: i64,
        found: &mut Vec<Vec<LatticePoint>>,
    ) -> Result<()> {
        if slots == 1 {
            let last_ok = degree_one.binary_search(remaining).is_ok();
            let order_ok = match prefix.last() {
                Some(prev) => saturated_leq(prev, remaining, s)?,
                None => true,
            };
            if last_ok && order_ok {
                let mut chain = prefix.clone();
                chain.push(remaining.clone());
                found.push(chain);
            }
            return Ok(());
        }
        for cand in degree_one {
            if let Some(prev) = prefix.last() {
                if !saturated_leq(prev, cand, s)? {
                    continue;
                }
            }
            // Every later part dominates `cand` componentwise, so the
            // remaining sum must be at least slots * cand.
            let feasible = (0..s.n()).all(|i| {
                cand[i]
                    .checked_mul(slots)
                    .is_some_and(|scaled| scaled <= remaining[i])
            });
            if !feasible {
                continue;
            }
            prefix.push(cand.clone());
            let rest = remaining.sub(cand)?;
            search(s, degree_one, prefix, &rest, slots - 1, found)?;
            prefix.pop();
        }
        Ok(())
    }

    search(s, &degree_one, &mut prefix, point, k, &mut found)?;
    Ok(found)
}

/// Decide the integer decomposition property at level k by dynamic
/// programming over iterated Minkowski sums of the degree-1 point set.
pub fn idp_holds_brute(poset: &LabeledPoset, s: &SSequence, k: i64, budget: u64) -> Result<bool> {
    let degree_one = polytope::enumerate_dilate_points(poset, s, 1, budget)?;
    let base: Vec<Vec<i64>> = degree_one.iter().map(|p| p.coords().to_vec()).collect();
    let mut sums: HashSet<Vec<i64>> = base.iter().cloned().collect();
    for _ in 2..=k {
        let mut next = HashSet::with_capacity(sums.len());
        for a in &sums {
            for b in &base {
                let sum: Vec<i64> = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| crate::arith::add(x, y))
                    .collect::<Result<_>>()?;
                next.insert(sum);
            }
        }
        sums = next;
    }
    let target = polytope::enumerate_dilate_points(poset, s, k, budget)?;
    Ok(target.iter().all(|p| sums.contains(p.coords())))
}

/// Check the sandwich bounds: every way of writing the point as a sum of at
/// most k polytope points (found exhaustively) has each summand bounded
/// componentwise between the smallest and largest part of the ⊴-chain.
pub fn sandwich_check(
    poset: &LabeledPoset,
    s: &SSequence,
    point: &LatticePoint,
    k: i64,
    budget: u64,
) -> Result<bool> {
    let chain = decompose(poset, s, point, k)?;
    let lo = chain.parts.first().expect("chain is nonempty").clone();
    let hi = chain.parts.last().expect("chain is nonempty").clone();

    let degree_one = polytope::enumerate_dilate_points(poset, s, 1, budget)?;

    // DFS over multisets of summands, chosen with nondecreasing index so
    // each decomposition is visited once. The last summand is forced to be
    // the remainder, so only slots - 1 levels branch. Bounds are checked
    // whenever a decomposition completes.
    fn search(
        degree_one: &[LatticePoint],
        lo: &LatticePoint,
        hi: &LatticePoint,
        stack: &mut Vec<LatticePoint>,
        min_idx: usize,
        remaining: &LatticePoint,
        slots: i64,
    ) -> Result<bool> {
        if slots == 1 {
            if let Ok(pos) = degree_one.binary_search(remaining) {
                if pos >= min_idx {
                    for part in stack.iter().chain(std::iter::once(remaining)) {
                        if !(lo.leq(part)? && part.leq(hi)?) {
                            return Ok(false);
                        }
                    }
                }
            }
            return Ok(true);
        }
        for (i, cand) in degree_one.iter().enumerate().skip(min_idx) {
            let fits = (0..remaining.dim()).all(|c| cand[c] <= remaining[c]);
            if !fits {
                continue;
            }
            let rest = remaining.sub(cand)?;
            stack.push(cand.clone());
            let ok = search(degree_one, lo, hi, stack, i, &rest, slots - 1)?;
            stack.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let mut stack = Vec::new();
    for m in 1..=k {
        if !search(&degree_one, &lo, &hi, &mut stack, 0, point, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}
