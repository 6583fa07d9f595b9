//! Lattice-point counting and h*-polynomials.
//!
//! For a d-dimensional lattice polytope P with counting function
//! L(k) = |kP ∩ Z^d|, the series sum_k L(k) x^k equals
//! h*(x) / (1-x)^(d+1) for a polynomial h* with nonnegative integer
//! coefficients. We recover h* by multiplying the truncated series with
//! (1-x)^(d+1), which is exact integer arithmetic.
//!
//! Two independent generating-function oracles live here as well: the
//! Eulerian polynomials (permutations by descent count) and the two sides of
//! the Bousquet-Melou--Eriksson identity
//!
//! ```text
//! sum over lattice points of the (1,2,...,n) cone of q^(x_1+...+x_n)
//!     = 1 / prod_{i=1..n} (1 - q^(2i-1)).
//! ```

use itertools::Itertools;

use crate::arith;
use crate::error::{Error, Result};
use crate::polytope;
use crate::poset::LabeledPoset;
use crate::seq::SSequence;

/// Integer polynomial, coefficient of x^i at index i, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of coefficients, i.e. the value at x = 1.
    pub fn eval_one(&self) -> Result<i64> {
        self.coeffs
            .iter()
            .try_fold(0i64, |acc, &c| arith::add(acc, c))
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Lattice-point counts of the dilates of O(P, s) for k = 0..=kmax.
pub fn ehrhart_counts(
    poset: &LabeledPoset,
    s: &SSequence,
    kmax: i64,
    budget: u64,
) -> Result<Vec<i64>> {
    if kmax < 0 {
        return Err(Error::InvalidInput("kmax must be >= 0".into()));
    }
    let mut counts = vec![1i64];
    for k in 1..=kmax {
        let pts = polytope::enumerate_dilate_points(poset, s, k, budget)?;
        counts.push(pts.len() as i64);
    }
    Ok(counts)
}

/// Recover the h*-polynomial of a `dim`-dimensional polytope from its
/// counting sequence (entry k = L(k), so `counts[0]` must be 1).
///
/// Computes the full convolution of `counts` with (1-x)^(dim+1) as far as the
/// data allows: the first dim+1 coefficients are the answer, and every later
/// computable coefficient must vanish. A negative coefficient or a nonzero
/// high coefficient signals a wrong dimension or inconsistent counts.
pub fn hstar_from_counts(counts: &[i64], dim: usize) -> Result<IntPolynomial> {
    if counts.len() < dim + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} counts for dimension {dim}, got {}",
            dim + 1,
            counts.len()
        )));
    }
    if counts.first() != Some(&1) {
        return Err(Error::InvalidInput("counts[0] must be 1".into()));
    }
    let mut coeffs = Vec::with_capacity(counts.len());
    for t in 0..counts.len() {
        let mut acc = 0i64;
        for i in 0..=t.min(dim + 1) {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let b = arith::binomial((dim + 1) as i64, i as u32)?;
            acc = arith::add(acc, arith::mul(sign, arith::mul(b, counts[t - i])?)?)?;
        }
        if t <= dim {
            if acc < 0 {
                return Err(Error::InvalidInput(format!(
                    "negative h* coefficient {acc} at degree {t}; wrong dimension or bad counts"
                )));
            }
            coeffs.push(acc);
        } else if acc != 0 {
            return Err(Error::InvalidInput(format!(
                "h* coefficient of degree {t} > dim is {acc}, expected 0; wrong dimension or bad counts"
            )));
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The n-th Eulerian polynomial by direct descent counting over all n!
/// permutations. Capped at n <= 9.
pub fn eulerian_polynomial(n: usize) -> Result<IntPolynomial> {
    if n == 0 || n > 9 {
        return Err(Error::InvalidInput(format!(
            "descent enumeration supports 1 <= n <= 9, got {n}"
        )));
    }
    let mut coeffs = vec![0i64; n];
    for perm in (1..=n).permutations(n) {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        coeffs[descents] += 1;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Number of lattice points of the cone for s = (1, 2, ..., n) with
/// coordinate sum m, for m = 0..=max_sum, by direct enumeration.
pub fn lecture_hall_gf(n: usize, max_sum: i64, budget: u64) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::InvalidInput("order must be >= 1".into()));
    }
    if max_sum < 0 {
        return Err(Error::InvalidInput("max_sum must be >= 0".into()));
    }
    arith::check_budget(
        arith::box_volume(std::iter::repeat_n(max_sum + 1, n)),
        budget,
    )?;
    let s = SSequence::new((1..=n as i64).collect())?;
    let mut counts = vec![0i64; (max_sum + 1) as usize];

    // DFS over coordinates; every coordinate of a point with sum <= max_sum
    // is itself <= max_sum, so the search space is finite.
    fn walk(
        s: &SSequence,
        coords: &mut Vec<i64>,
        sum: i64,
        max_sum: i64,
        counts: &mut [i64],
    ) -> Result<()> {
        let i = coords.len();
        if i == s.n() {
            counts[sum as usize] += 1;
            return Ok(());
        }
        for v in 0..=(max_sum - sum) {
            // cross-multiplied ratio constraint against the previous entry
            if i > 0 {
                let lhs = arith::mul(coords[i - 1], s.entries()[i])?;
                let rhs = arith::mul(v, s.entries()[i - 1])?;
                if lhs > rhs {
                    continue;
                }
            }
            coords.push(v);
            walk(s, coords, sum + v, max_sum, counts)?;
            coords.pop();
        }
        Ok(())
    }

    walk(&s, &mut Vec::with_capacity(n), 0, max_sum, &mut counts)?;
    Ok(counts)
}

/// Truncated power-series coefficients of `prod_{i=1..n} 1/(1 - q^(2i-1))`,
/// i.e. the number of partitions of m into odd parts < 2n, for m = 0..=max_sum.
pub fn odd_product_gf(n: usize, max_sum: i64, budget: u64) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::InvalidInput("order must be >= 1".into()));
    }
    if max_sum < 0 {
        return Err(Error::InvalidInput("max_sum must be >= 0".into()));
    }
    arith::check_budget((max_sum as u128 + 1) * n as u128, budget)?;
    let len = (max_sum + 1) as usize;
    let mut coeffs = vec![0i64; len];
    coeffs[0] = 1;
    for i in 1..=n {
        let part = 2 * i - 1;
        // In-place multiplication by the geometric series of q^part.
        for m in part..len {
            coeffs[m] = arith::add(coeffs[m], coeffs[m - part])?;
        }
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = 100_000_000;

    #[test]
    fn counts_for_chain() {
        let chain = LabeledPoset::chain(3);
        let s = SSequence::new(vec![1, 2, 3]).unwrap();
        assert_eq!(
            ehrhart_counts(&chain, &s, 3, B).unwrap(),
            vec![1, 8, 27, 64]
        );

        let seg = LabeledPoset::chain(1);
        let s1 = SSequence::new(vec![1]).unwrap();
        assert_eq!(ehrhart_counts(&seg, &s1, 2, B).unwrap(), vec![1, 2, 3]);

        let chain2 = LabeledPoset::chain(2);
        let s12 = SSequence::new(vec![1, 2]).unwrap();
        assert_eq!(ehrhart_counts(&chain2, &s12, 2, B).unwrap(), vec![1, 4, 9]);
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(
            hstar_from_counts(&[1, 8, 27, 64], 3).unwrap(),
            IntPolynomial::new(vec![1, 4, 1])
        );
        assert_eq!(
            hstar_from_counts(&[1, 2, 3], 1).unwrap(),
            IntPolynomial::new(vec![1])
        );
        assert_eq!(
            hstar_from_counts(&[1, 4, 9], 2).unwrap(),
            IntPolynomial::new(vec![1, 1])
        );
    }

    #[test]
    fn hstar_nonnegative_for_posets() {
        // h* coefficients stay nonnegative for order polytopes beyond the
        // chain (hstar_from_counts errors otherwise).
        let v = LabeledPoset::from_covers(3, &[(1, 3), (2, 3)]).unwrap();
        let square = LabeledPoset::antichain(2);
        for (poset, entries) in [
            (&v, vec![1, 1, 2]),
            (&v, vec![2, 3, 3]),
            (&square, vec![1, 1]),
            (&square, vec![3, 2]),
        ] {
            let s = SSequence::new(entries).unwrap();
            let n = s.n();
            let counts = ehrhart_counts(poset, &s, n as i64 + 1, B).unwrap();
            let hstar = hstar_from_counts(&counts, n).unwrap();
            assert!(hstar.coeffs().iter().all(|&c| c >= 0));
        }
    }

    #[test]
    fn hstar_rejects_bad_input() {
        // counts of a segment declared as 2-dimensional: negative coefficient
        assert!(hstar_from_counts(&[1, 2, 3], 2).is_err());
        // too few counts
        assert!(hstar_from_counts(&[1, 2], 2).is_err());
        // inconsistent tail: L(k) = k+1 except L(3)
        assert!(hstar_from_counts(&[1, 2, 3, 5], 1).is_err());
        assert!(hstar_from_counts(&[2, 3], 1).is_err());
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_polynomial(1).unwrap(), IntPolynomial::new(vec![1]));
        assert_eq!(
            eulerian_polynomial(3).unwrap(),
            IntPolynomial::new(vec![1, 4, 1])
        );
        assert_eq!(
            eulerian_polynomial(4).unwrap(),
            IntPolynomial::new(vec![1, 11, 11, 1])
        );
        assert!(eulerian_polynomial(10).is_err());
        assert!(eulerian_polynomial(0).is_err());
    }

    #[test]
    fn gf_examples() {
        assert_eq!(lecture_hall_gf(2, 4, B).unwrap(), vec![1, 1, 1, 2, 2]);
        assert_eq!(lecture_hall_gf(1, 3, B).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(odd_product_gf(2, 4, B).unwrap(), vec![1, 1, 1, 2, 2]);
        assert_eq!(odd_product_gf(1, 2, B).unwrap(), vec![1, 1, 1]);
        assert_eq!(odd_product_gf(3, 5, B).unwrap(), vec![1, 1, 1, 2, 2, 3]);
        assert_eq!(
            lecture_hall_gf(3, 5, B).unwrap(),
            odd_product_gf(3, 5, B).unwrap()
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::new(vec![1, 4, 1]).to_string(),
            "1 + 4x + x^2"
        );
        assert_eq!(IntPolynomial::new(vec![0, 1]).to_string(), "x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
