//! Membership predicates and lattice-point enumeration.
//!
//! The cone consists of points with `0 <= x_1/s_1 <= ... <= x_n/s_n`; the
//! simplex truncates it at `x_n <= s_n`. More generally, for a naturally
//! labeled poset P the order polytope O(P, s) collects the maps x with
//! `x_i/s_i <= x_j/s_j` whenever i ⪯ j and `0 <= x_i <= s_i`. All ratio
//! comparisons are done by cross-multiplication; no division or floating
//! point appears anywhere.

use crate::arith;
use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::poset::LabeledPoset;
use crate::seq::SSequence;

fn check_dims(s: &SSequence, point: &LatticePoint) -> Result<()> {
    if point.dim() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            got: point.dim(),
        });
    }
    Ok(())
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidInput(format!(
            "dilate index must be >= 1, got {k}"
        )));
    }
    Ok(())
}

/// Whether `point` lies in the cone `0 <= x_1/s_1 <= ... <= x_n/s_n`,
/// decided exactly via `x_i * s_{i+1} <= x_{i+1} * s_i`.
pub fn cone_contains(s: &SSequence, point: &LatticePoint) -> Result<bool> {
    check_dims(s, point)?;
    if point[0] < 0 {
        return Ok(false);
    }
    for i in 0..s.n() - 1 {
        let lhs = arith::mul(point[i], s.entries()[i + 1])?;
        let rhs = arith::mul(point[i + 1], s.entries()[i])?;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `point` lies in the k-th dilate of the simplex, i.e. in the cone
/// with `x_n <= k * s_n`.
pub fn simplex_contains(s: &SSequence, point: &LatticePoint, k: i64) -> Result<bool> {
    check_k(k)?;
    if !cone_contains(s, point)? {
        return Ok(false);
    }
    let cap = arith::mul(k, s.entries()[s.n() - 1])?;
    Ok(point[s.n() - 1] <= cap)
}

/// Whether `point` satisfies all the (P, s)-partition inequalities
/// `x_i * s_j <= x_j * s_i` for i ⪯ j, with no box constraint.
pub fn is_partition(poset: &LabeledPoset, s: &SSequence, point: &LatticePoint) -> Result<bool> {
    check_dims(s, point)?;
    if poset.n() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            got: poset.n(),
        });
    }
    for (i, j) in poset.strict_relations() {
        let lhs = arith::mul(point[i - 1], s.entries()[j - 1])?;
        let rhs = arith::mul(point[j - 1], s.entries()[i - 1])?;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `point` lies in the k-th dilate of the order polytope O(P, s):
/// the partition inequalities plus `0 <= x_i <= k * s_i`.
pub fn order_polytope_contains(
    poset: &LabeledPoset,
    s: &SSequence,
    point: &LatticePoint,
    k: i64,
) -> Result<bool> {
    check_k(k)?;
    check_dims(s, point)?;
    for i in 0..s.n() {
        let cap = arith::mul(k, s.entries()[i])?;
        if point[i] < 0 || point[i] > cap {
            return Ok(false);
        }
    }
    is_partition(poset, s, point)
}

/// All lattice points of the k-th dilate of O(P, s), lexicographically
/// increasing. Scans the box `prod [0, k*s_i]`; the scan volume is checked
/// against `budget` first.
pub fn enumerate_dilate_points(
    poset: &LabeledPoset,
    s: &SSequence,
    k: i64,
    budget: u64,
) -> Result<Vec<LatticePoint>> {
    check_k(k)?;
    let n = s.n();
    let caps: Vec<i64> = s
        .entries()
        .iter()
        .map(|&si| arith::mul(k, si))
        .collect::<Result<_>>()?;
    arith::check_budget(arith::box_volume(caps.iter().map(|&c| c + 1)), budget)?;

    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    'scan: loop {
        let point = LatticePoint::new(current.clone());
        if order_polytope_contains(poset, s, &point, k)? {
            out.push(point);
        }
        // Odometer with the last coordinate fastest: emits in lex order.
        for i in (0..n).rev() {
            if current[i] < caps[i] {
                current[i] += 1;
                continue 'scan;
            }
            current[i] = 0;
        }
        break;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    fn s123() -> SSequence {
        SSequence::new(vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn cone_examples() {
        assert!(cone_contains(&s123(), &pt(&[1, 2, 3])).unwrap());
        assert!(!cone_contains(&s123(), &pt(&[2, 1, 0])).unwrap());
        assert!(cone_contains(&s123(), &pt(&[0, 1, 2])).unwrap());
        assert!(!cone_contains(&s123(), &pt(&[-1, 0, 0])).unwrap());
        assert!(cone_contains(&s123(), &pt(&[1, 2])).is_err());
    }

    #[test]
    fn simplex_examples() {
        assert!(simplex_contains(&s123(), &pt(&[1, 2, 3]), 1).unwrap());
        assert!(simplex_contains(&s123(), &pt(&[1, 3, 5]), 2).unwrap());
        assert!(!simplex_contains(&s123(), &pt(&[0, 0, 4]), 1).unwrap());
        assert!(simplex_contains(&s123(), &pt(&[0, 0, 4]), 0).is_err());
    }

    #[test]
    fn order_polytope_examples() {
        let square = LabeledPoset::antichain(2);
        let s11 = SSequence::new(vec![1, 1]).unwrap();
        assert!(order_polytope_contains(&square, &s11, &pt(&[1, 1]), 1).unwrap());

        let chain = LabeledPoset::chain(3);
        assert!(order_polytope_contains(&chain, &s123(), &pt(&[0, 1, 2]), 1).unwrap());

        let v = LabeledPoset::from_covers(3, &[(1, 3), (2, 3)]).unwrap();
        let s112 = SSequence::new(vec![1, 1, 2]).unwrap();
        // 1/1 > 1/2 violates the relation 1 ⪯ 3.
        assert!(!order_polytope_contains(&v, &s112, &pt(&[1, 0, 1]), 1).unwrap());
    }

    #[test]
    fn chain_agrees_with_simplex() {
        // For the chain poset and weakly increasing s the two predicates
        // agree on the whole scan box, including points outside. Exhaustive
        // over every weakly increasing s with n <= 3 and entries <= 3.
        for n in 1..=3usize {
            let mut entries = vec![1i64; n];
            'seqs: loop {
                let s = SSequence::new(entries.clone()).unwrap();
                let chain = LabeledPoset::chain(n);
                for k in 1..=3i64 {
                    let caps: Vec<i64> = s.entries().iter().map(|&v| k * v + 1).collect();
                    let mut coords = vec![-1i64; n];
                    'box_scan: loop {
                        let p = LatticePoint::new(coords.clone());
                        assert_eq!(
                            order_polytope_contains(&chain, &s, &p, k).unwrap(),
                            simplex_contains(&s, &p, k).unwrap(),
                            "s={s} k={k} p={p}"
                        );
                        let mut idx = n;
                        loop {
                            if idx == 0 {
                                break 'box_scan;
                            }
                            idx -= 1;
                            coords[idx] += 1;
                            if coords[idx] <= caps[idx] {
                                break;
                            }
                            coords[idx] = -1;
                        }
                    }
                }
                // next weakly increasing sequence
                let mut idx = n;
                loop {
                    if idx == 0 {
                        break 'seqs;
                    }
                    idx -= 1;
                    entries[idx] += 1;
                    if entries[idx] <= 3 {
                        for later in idx + 1..n {
                            entries[later] = entries[idx];
                        }
                        break;
                    }
                    entries[idx] = 1;
                }
            }
        }
    }

    #[test]
    fn enumerate_chain_dilate() {
        let chain = LabeledPoset::chain(3);
        let pts = enumerate_dilate_points(&chain, &s123(), 1, 1 << 20).unwrap();
        let expect: Vec<LatticePoint> = [
            [0, 0, 0],
            [0, 0, 1],
            [0, 0, 2],
            [0, 0, 3],
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
        ]
        .iter()
        .map(|v| pt(v))
        .collect();
        assert_eq!(pts, expect);

        let seg = LabeledPoset::chain(1);
        let s1 = SSequence::new(vec![1]).unwrap();
        let pts = enumerate_dilate_points(&seg, &s1, 2, 1 << 20).unwrap();
        assert_eq!(pts, vec![pt(&[0]), pt(&[1]), pt(&[2])]);

        let sq = LabeledPoset::antichain(2);
        let s11 = SSequence::new(vec![1, 1]).unwrap();
        assert_eq!(
            enumerate_dilate_points(&sq, &s11, 1, 1 << 20)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn enumeration_is_sorted_and_budgeted() {
        let chain = LabeledPoset::chain(2);
        let s = SSequence::new(vec![2, 3]).unwrap();
        let pts = enumerate_dilate_points(&chain, &s, 3, 1 << 20).unwrap();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));

        match enumerate_dilate_points(&chain, &s, 3, 10) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn meet_join_closure_on_enumerated_points() {
        let v = LabeledPoset::from_covers(3, &[(1, 3), (2, 3)]).unwrap();
        let s = SSequence::new(vec![1, 1, 2]).unwrap();
        let pts = enumerate_dilate_points(&v, &s, 2, 1 << 20).unwrap();
        for a in &pts {
            for b in &pts {
                let m = a.meet(b).unwrap();
                let j = a.join(b).unwrap();
                assert!(is_partition(&v, &s, &m).unwrap());
                assert!(is_partition(&v, &s, &j).unwrap());
            }
        }
    }
}
