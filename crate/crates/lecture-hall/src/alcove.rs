//! The alcoved form of the simplex and lecture hall multisets.
//!
//! Every operation here requires the 0,1-difference gate on s (which forces
//! s_1 = 1 and weak monotonicity). Under that assumption the simplex maps to
//! an alcoved polytope in one dimension up: take successive differences
//! `z_i = x_i - x_{i-1}` (with x_0 = 0) and append the homogenizing
//! coordinate `z_{n+1} = k*s_{n+1} - x_n`, where `s_{n+1} = s_n + 1`. The
//! image of the k-th dilate is cut out by
//!
//! ```text
//!   z_1 + ... + z_{n+1} = k * s_{n+1}
//!   0 <= z_1 + ... + z_j <= k * s_j                 for j in [n]
//!   0 <= (s_{j+1} - s_j)(z_1 + ... + z_j) <= s_j * z_{j+1}   for j in [n-1]
//! ```
//!
//! (the two-sided inequalities are homogeneous, so they are the same for
//! every dilate). A degree-1 lattice point z records the multiset on
//! {1, ..., n+1} in which i appears z_i times; these are the lecture hall
//! multisets, and [`is_lecture_hall_multiset`] characterizes them by a
//! combinatorial criterion equivalent to the inequalities.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::point::{lex_compare, LatticePoint};
use crate::polytope;
use crate::seq::SSequence;

/// A lattice point of the k-th dilate of the alcoved polytope: a length
/// n+1 multiplicity vector together with its degree k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlcovePoint {
    z: Vec<i64>,
    degree: i64,
}

impl AlcovePoint {
    /// Validates the degree-k inequalities before accepting the vector.
    pub fn new(s: &SSequence, z: Vec<i64>, degree: i64) -> Result<Self> {
        if !dilate_contains(s, &z, degree)? {
            return Err(Error::InvalidInput(format!(
                "{z:?} is not a lattice point of dilate {degree} of the alcoved polytope"
            )));
        }
        Ok(Self { z, degree })
    }

    pub fn coords(&self) -> &[i64] {
        &self.z
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Render as a multiset, e.g. `(0,2,1,1)` as `{2^2 3 4}`.
    pub fn multiset_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, &m) in self.z.iter().enumerate() {
            match m {
                0 => {}
                1 => parts.push(format!("{}", i + 1)),
                _ => parts.push(format!("{}^{}", i + 1, m)),
            }
        }
        format!("{{{}}}", parts.join(" "))
    }
}

fn check_len(s: &SSequence, z: &[i64]) -> Result<()> {
    if z.len() != s.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: s.n() + 1,
            got: z.len(),
        });
    }
    Ok(())
}

/// Map a lattice point of the k-th dilate of the simplex to alcove
/// coordinates: successive differences plus the homogenizing coordinate.
pub fn to_alcove(s: &SSequence, x: &LatticePoint, k: i64) -> Result<AlcovePoint> {
    s.require_zero_one_diff()?;
    if !polytope::simplex_contains(s, x, k)? {
        return Err(Error::InvalidInput(format!(
            "{x} is not a lattice point of dilate {k} of the simplex"
        )));
    }
    let n = s.n();
    let mut z = Vec::with_capacity(n + 1);
    let mut prev = 0i64;
    for i in 0..n {
        z.push(arith::sub(x[i], prev)?);
        prev = x[i];
    }
    z.push(arith::sub(arith::mul(k, s.ext())?, x[n - 1])?);
    Ok(AlcovePoint { z, degree: k })
}

/// Inverse transform: partial sums, dropping the homogenizing coordinate.
pub fn from_alcove(s: &SSequence, point: &AlcovePoint) -> Result<LatticePoint> {
    if !dilate_contains(s, &point.z, point.degree)? {
        return Err(Error::InvalidInput(format!(
            "{:?} violates the degree-{} invariants",
            point.z, point.degree
        )));
    }
    let mut x = Vec::with_capacity(s.n());
    let mut acc = 0i64;
    for i in 0..s.n() {
        acc = arith::add(acc, point.z[i])?;
        x.push(acc);
    }
    Ok(LatticePoint::new(x))
}

/// Inequality membership in the k-th dilate of the alcoved polytope.
pub fn dilate_contains(s: &SSequence, z: &[i64], k: i64) -> Result<bool> {
    s.require_zero_one_diff()?;
    check_len(s, z)?;
    if k < 1 {
        return Err(Error::InvalidInput(format!(
            "dilate index must be >= 1, got {k}"
        )));
    }
    let n = s.n();
    let mut total = 0i64;
    for (j, &zj) in z.iter().enumerate() {
        total = arith::add(total, zj)?;
        if j < n && (total < 0 || total > arith::mul(k, s.entries()[j])?) {
            return Ok(false);
        }
    }
    if total != arith::mul(k, s.ext())? {
        return Ok(false);
    }
    // 0 <= (s_{j+1} - s_j) * prefix_j <= s_j * z_{j+1} for j in [n-1]
    let mut prefix = 0i64;
    for j in 1..n {
        prefix = arith::add(prefix, z[j - 1])?;
        let step = s.entries()[j] - s.entries()[j - 1];
        let lhs = arith::mul(step, prefix)?;
        let rhs = arith::mul(s.entries()[j - 1], z[j])?;
        if lhs < 0 || lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The combinatorial characterization of degree-1 lattice points
/// (equivalently, of lecture hall multisets). With the extended sequence
/// `0 = s_0, s_1, ..., s_n, s_{n+1} = s_n + 1`, a length n+1 integer vector
/// qualifies iff
///
/// 1. the entries sum to s_{n+1};
/// 2. every prefix sum lies in [0, s_j];
/// 3. z_{j} >= 0 whenever the step s_j - s_{j-1} is zero;
/// 4. z_{j} >= 1 whenever the step is nonzero and some earlier entry is
///    nonzero.
///
/// Condition 4 demands a positive entry, not merely a nonzero one; on
/// nonnegative vectors the two readings agree, and positivity is what makes
/// the equivalence with [`dilate_contains`] at k = 1 hold on arbitrary
/// integer vectors (conditions 2-4 then force z >= 0 componentwise).
pub fn is_lecture_hall_multiset(s: &SSequence, z: &[i64]) -> Result<bool> {
    s.require_zero_one_diff()?;
    check_len(s, z)?;
    let n = s.n();
    let mut total = 0i64;
    for &zj in z {
        total = arith::add(total, zj)?;
    }
    if total != s.ext() {
        return Ok(false);
    }
    let mut prefix = 0i64;
    for (idx, &zj) in z.iter().enumerate() {
        prefix = arith::add(prefix, zj)?;
        if prefix < 0 || prefix > s.extended(idx + 1) {
            return Ok(false);
        }
    }
    let mut seen_nonzero = false;
    for j in 1..=n + 1 {
        let flat = s.extended(j) == s.extended(j - 1);
        let zj = z[j - 1];
        if flat {
            if zj < 0 {
                return Ok(false);
            }
        } else if seen_nonzero && zj < 1 {
            return Ok(false);
        }
        if zj != 0 {
            seen_nonzero = true;
        }
    }
    Ok(true)
}

/// Indices of the extended sequence where s strictly increases:
/// `{ j in [n+1] : s_{j-1} < s_j }` with s_0 = 0 and s_{n+1} = s_n + 1.
pub fn diff_support(s: &SSequence) -> BTreeSet<usize> {
    (1..=s.n() + 1)
        .filter(|&j| s.extended(j - 1) < s.extended(j))
        .collect()
}

/// All degree-1 alcove points, sorted lexicographically decreasing.
pub fn enumerate_multisets(s: &SSequence, budget: u64) -> Result<Vec<AlcovePoint>> {
    s.require_zero_one_diff()?;
    arith::check_budget(
        arith::box_volume(s.entries().iter().map(|&v| v + 1)),
        budget,
    )?;
    let n = s.n();
    let mut out = Vec::new();
    let mut z = Vec::with_capacity(n + 1);

    // Nonnegative entries with prefix sums capped by s_j; the homogenizing
    // entry is forced by the total.
    fn walk(
        s: &SSequence,
        z: &mut Vec<i64>,
        prefix: i64,
        out: &mut Vec<AlcovePoint>,
    ) -> Result<()> {
        let j = z.len();
        if j == s.n() {
            let last = s.ext() - prefix;
            z.push(last);
            if is_lecture_hall_multiset(s, z)? {
                out.push(AlcovePoint {
                    z: z.clone(),
                    degree: 1,
                });
            }
            z.pop();
            return Ok(());
        }
        for v in 0..=(s.entries()[j] - prefix) {
            z.push(v);
            walk(s, z, prefix + v, out)?;
            z.pop();
        }
        Ok(())
    }

    walk(s, &mut z, 0, &mut out)?;
    out.sort_by(|a, b| b.z.cmp(&a.z));
    Ok(out)
}

/// All degree-k alcove points, sorted lexicographically decreasing. The
/// degree-1 case agrees with [`enumerate_multisets`].
pub fn enumerate_dilate(s: &SSequence, k: i64, budget: u64) -> Result<Vec<AlcovePoint>> {
    s.require_zero_one_diff()?;
    if k < 1 {
        return Err(Error::InvalidInput(format!(
            "dilate index must be >= 1, got {k}"
        )));
    }
    arith::check_budget(
        arith::box_volume(s.entries().iter().map(|&v| k * v + 1)),
        budget,
    )?;
    let n = s.n();
    let mut out = Vec::new();
    let mut z = Vec::with_capacity(n + 1);

    fn walk(
        s: &SSequence,
        k: i64,
        z: &mut Vec<i64>,
        prefix: i64,
        out: &mut Vec<AlcovePoint>,
    ) -> Result<()> {
        let j = z.len();
        if j == s.n() {
            let last = arith::mul(k, s.ext())? - prefix;
            z.push(last);
            if dilate_contains(s, z, k)? {
                out.push(AlcovePoint {
                    z: z.clone(),
                    degree: k,
                });
            }
            z.pop();
            return Ok(());
        }
        let cap = arith::mul(k, s.entries()[j])? - prefix;
        for v in 0..=cap {
            z.push(v);
            walk(s, k, z, prefix + v, out)?;
            z.pop();
        }
        Ok(())
    }

    walk(s, k, &mut z, 0, &mut out)?;
    out.sort_by(|a, b| b.z.cmp(&a.z));
    Ok(out)
}

/// A multiset of degree-1 alcove points, kept sorted lexicographically
/// decreasing. Collections with the same multiunion are the fibers on which
/// the basis and triangulation layers act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    elems: Vec<AlcovePoint>,
}

impl Collection {
    /// Elements must all have degree 1 (and belong to one common sequence,
    /// which the caller supplies consistently to later operations).
    pub fn new(mut elems: Vec<AlcovePoint>) -> Result<Self> {
        if let Some(bad) = elems.iter().find(|e| e.degree() != 1) {
            return Err(Error::InvalidInput(format!(
                "collections hold degree-1 points only, found degree {}",
                bad.degree()
            )));
        }
        elems.sort_by(|a, b| b.z.cmp(&a.z));
        Ok(Self { elems })
    }

    pub fn elems(&self) -> &[AlcovePoint] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Coordinate sum of all elements (the multiunion as a vector).
    pub fn multiunion(&self) -> Result<Vec<i64>> {
        let dim = self.elems.first().map_or(0, |e| e.z.len());
        let mut sum = vec![0i64; dim];
        for e in &self.elems {
            if e.z.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: e.z.len(),
                });
            }
            for (acc, &v) in sum.iter_mut().zip(&e.z) {
                *acc = arith::add(*acc, v)?;
            }
        }
        Ok(sum)
    }
}

impl std::fmt::Display for Collection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|e| e.multiset_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Compare same-size collections elementwise at the first differing
/// position (both are sorted decreasing, so this is the lexicographic order
/// on sorted tuples).
pub fn collection_compare(a: &Collection, b: &Collection) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    for (x, y) in a.elems.iter().zip(&b.elems) {
        match lex_compare(&x.z, &y.z)? {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = 100_000_000;

    fn s123() -> SSequence {
        SSequence::new(vec![1, 2, 3]).unwrap()
    }

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    #[test]
    fn to_alcove_examples() {
        let s = s123();
        assert_eq!(
            to_alcove(&s, &pt(&[1, 2, 3]), 1).unwrap().coords(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            to_alcove(&s, &pt(&[0, 0, 0]), 1).unwrap().coords(),
            &[0, 0, 0, 4]
        );
        assert_eq!(
            to_alcove(&s, &pt(&[0, 1, 3]), 1).unwrap().coords(),
            &[0, 1, 2, 1]
        );
        // outside the simplex
        assert!(to_alcove(&s, &pt(&[0, 0, 4]), 1).is_err());
        // gate
        let bad = SSequence::new(vec![1, 3]).unwrap();
        assert!(matches!(
            to_alcove(&bad, &pt(&[0, 0]), 1),
            Err(Error::Gate(_))
        ));
    }

    #[test]
    fn from_alcove_examples() {
        let s = s123();
        let p = AlcovePoint::new(&s, vec![1, 1, 1, 1], 1).unwrap();
        assert_eq!(from_alcove(&s, &p).unwrap(), pt(&[1, 2, 3]));
        let p = AlcovePoint::new(&s, vec![0, 0, 0, 4], 1).unwrap();
        assert_eq!(from_alcove(&s, &p).unwrap(), pt(&[0, 0, 0]));
        let p = AlcovePoint::new(&s, vec![0, 2, 1, 1], 1).unwrap();
        assert_eq!(from_alcove(&s, &p).unwrap(), pt(&[0, 2, 3]));
        assert!(AlcovePoint::new(&s, vec![0, 2, 0, 2], 1).is_err());
    }

    #[test]
    fn multiset_condition_examples() {
        let s = s123();
        assert!(is_lecture_hall_multiset(&s, &[0, 0, 2, 2]).unwrap());
        // z_2 != 0 but z_3 = 0 at a strict step
        assert!(!is_lecture_hall_multiset(&s, &[0, 2, 0, 2]).unwrap());
        assert!(is_lecture_hall_multiset(&s, &[0, 0, 0, 4]).unwrap());
        // negative entry sneaking past the prefix bounds must still fail
        assert!(!is_lecture_hall_multiset(&s, &[0, 2, -1, 3]).unwrap());
        assert!(is_lecture_hall_multiset(&s, &[0, 0, 2]).is_err());
    }

    #[test]
    fn dilate_membership() {
        let s = s123();
        assert!(dilate_contains(&s, &[0, 0, 2, 6], 2).unwrap());
        assert!(dilate_contains(&s, &[1, 1, 1, 1], 1).unwrap());
        assert!(!dilate_contains(&s, &[0, 2, -1, 3], 1).unwrap());
        assert!(dilate_contains(&s, &[1, 1, 1, 1], 0).is_err());
    }

    #[test]
    fn multiset_equals_dilate_one_on_box() {
        // The central equivalence, swept over a box that includes negative
        // entries and wrong sums.
        for entries in [vec![1, 2, 3], vec![1, 1, 2], vec![1, 2, 2]] {
            let s = SSequence::new(entries).unwrap();
            let hi = s.ext() + 1;
            let mut z = vec![-1i64; s.n() + 1];
            'box_scan: loop {
                assert_eq!(
                    is_lecture_hall_multiset(&s, &z).unwrap(),
                    dilate_contains(&s, &z, 1).unwrap(),
                    "s={s} z={z:?}"
                );
                let mut idx = s.n();
                loop {
                    z[idx] += 1;
                    if z[idx] <= hi {
                        break;
                    }
                    z[idx] = -1;
                    if idx == 0 {
                        break 'box_scan;
                    }
                    idx -= 1;
                }
            }
        }
    }

    #[test]
    fn diff_support_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(diff_support(&s123()), set(&[1, 2, 3, 4]));
        let s = SSequence::new(vec![1, 1, 1]).unwrap();
        assert_eq!(diff_support(&s), set(&[1, 4]));
        let s = SSequence::new(vec![1, 1, 2]).unwrap();
        assert_eq!(diff_support(&s), set(&[1, 3, 4]));
    }

    #[test]
    fn enumerate_multisets_examples() {
        let s = s123();
        let pts = enumerate_multisets(&s, B).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1, 1, 1, 1],
            vec![0, 2, 1, 1],
            vec![0, 1, 2, 1],
            vec![0, 1, 1, 2],
            vec![0, 0, 3, 1],
            vec![0, 0, 2, 2],
            vec![0, 0, 1, 3],
            vec![0, 0, 0, 4],
        ];
        let got: Vec<Vec<i64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(got, expect);

        let s1 = SSequence::new(vec![1]).unwrap();
        let got: Vec<Vec<i64>> = enumerate_multisets(&s1, B)
            .unwrap()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 1], vec![0, 2]]);

        let s11 = SSequence::new(vec![1, 1]).unwrap();
        assert_eq!(enumerate_multisets(&s11, B).unwrap().len(), 3);
    }

    #[test]
    fn roundtrip_and_unimodularity_counts() {
        for entries in [vec![1, 2, 3], vec![1, 1, 2], vec![1, 2, 2]] {
            let s = SSequence::new(entries).unwrap();
            let chain = crate::poset::LabeledPoset::chain(s.n());
            for k in 1..=3i64 {
                let simplex_pts = polytope::enumerate_dilate_points(&chain, &s, k, B).unwrap();
                let alcove_pts = enumerate_dilate(&s, k, B).unwrap();
                // the transform is a bijection on lattice points
                assert_eq!(simplex_pts.len(), alcove_pts.len(), "s={s} k={k}");
                for x in &simplex_pts {
                    let z = to_alcove(&s, x, k).unwrap();
                    assert_eq!(&from_alcove(&s, &z).unwrap(), x);
                }
                for z in &alcove_pts {
                    let x = from_alcove(&s, z).unwrap();
                    assert_eq!(&to_alcove(&s, &x, k).unwrap(), z);
                }
            }
        }
    }

    #[test]
    fn collection_basics() {
        let s = s123();
        let a = AlcovePoint::new(&s, vec![0, 0, 3, 1], 1).unwrap();
        let b = AlcovePoint::new(&s, vec![0, 0, 1, 3], 1).unwrap();
        let c = Collection::new(vec![b.clone(), a.clone()]).unwrap();
        // sorted decreasing regardless of input order
        assert_eq!(c.elems()[0], a);
        assert_eq!(c.multiunion().unwrap(), vec![0, 0, 4, 4]);

        let deg2 = AlcovePoint::new(&s, vec![0, 0, 2, 6], 2).unwrap();
        assert!(Collection::new(vec![deg2]).is_err());
    }

    #[test]
    fn collection_compare_examples() {
        let s = s123();
        let p = |v: &[i64]| AlcovePoint::new(&s, v.to_vec(), 1).unwrap();
        let col = |vs: &[&[i64]]| Collection::new(vs.iter().map(|v| p(v)).collect()).unwrap();

        let a = col(&[&[0, 0, 3, 1], &[0, 0, 1, 3]]);
        let b = col(&[&[0, 0, 2, 2], &[0, 0, 2, 2]]);
        assert_eq!(collection_compare(&a, &b).unwrap(), Ordering::Greater);

        let a = col(&[&[0, 0, 2, 2], &[0, 0, 2, 2], &[0, 0, 0, 4]]);
        let b = col(&[&[0, 0, 2, 2], &[0, 0, 1, 3], &[0, 0, 1, 3]]);
        assert_eq!(collection_compare(&a, &b).unwrap(), Ordering::Greater);

        assert_eq!(collection_compare(&a, &a).unwrap(), Ordering::Equal);
        assert!(collection_compare(&a, &col(&[&[1, 1, 1, 1]])).is_err());
    }

    #[test]
    fn multiset_rendering() {
        let s = s123();
        let p = AlcovePoint::new(&s, vec![0, 2, 1, 1], 1).unwrap();
        assert_eq!(p.multiset_string(), "{2^2 3 4}");
        let p = AlcovePoint::new(&s, vec![0, 0, 0, 4], 1).unwrap();
        assert_eq!(p.multiset_string(), "{4^4}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        // Random same-size collections over the eight degree-1 points of
        // s = (1,2,3); the collection order must be total.
        proptest! {
            #[test]
            fn collection_order_is_total(
                xs in proptest::collection::vec(0usize..8, 3),
                ys in proptest::collection::vec(0usize..8, 3),
                zs in proptest::collection::vec(0usize..8, 3),
            ) {
                let s = s123();
                let pts = enumerate_multisets(&s, B).unwrap();
                let mk = |idx: &Vec<usize>| {
                    Collection::new(idx.iter().map(|&i| pts[i].clone()).collect()).unwrap()
                };
                let (a, b, c) = (mk(&xs), mk(&ys), mk(&zs));
                use Ordering::*;
                let ab = collection_compare(&a, &b).unwrap();
                prop_assert_eq!(ab, collection_compare(&b, &a).unwrap().reverse());
                prop_assert_eq!(ab == Equal, a == b);
                if ab != Greater && collection_compare(&b, &c).unwrap() != Greater {
                    prop_assert_ne!(collection_compare(&a, &c).unwrap(), Greater);
                }
            }
        }
    }
}
