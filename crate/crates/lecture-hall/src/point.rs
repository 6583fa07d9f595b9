//! Integer vectors with an explicit ambient dimension, together with the
//! componentwise lattice operations (meet = min, join = max) and the
//! lexicographic order used throughout.

use crate::error::{Error, Result};

/// An integer point. The coordinate length is the ambient dimension (`n` for
/// simplex coordinates, `n + 1` for multiset coordinates).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| crate::arith::add(a, b))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| crate::arith::sub(a, b))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Componentwise `a <= b`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.coords.iter().zip(&other.coords).all(|(&a, &b)| a <= b))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        Self::new(coords)
    }
}

impl std::ops::Index<usize> for LatticePoint {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords[i]
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison: `a` is greater when the leftmost nonzero entry
/// of `a - b` is positive. This coincides with the derived `Ord` on the
/// coordinate vectors; the standalone function exists to enforce the
/// equal-length contract.
pub fn lex_compare(a: &[i64], b: &[i64]) -> Result<std::cmp::Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(
            pt(&[1, 3, 5]).meet(&pt(&[1, 2, 3])).unwrap(),
            pt(&[1, 2, 3])
        );
        assert_eq!(
            pt(&[0, 1, 2]).join(&pt(&[1, 0, 0])).unwrap(),
            pt(&[1, 1, 2])
        );
        let x = pt(&[4, 0, 7]);
        assert_eq!(x.meet(&x).unwrap(), x);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(pt(&[1, 2]).meet(&pt(&[1, 2, 3])).is_err());
        assert!(lex_compare(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            lex_compare(&[0, 0, 3, 1], &[0, 0, 2, 2]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&[1, 1, 1, 1], &[0, 0, 0, 4]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(lex_compare(&[2, 5], &[2, 5]).unwrap(), Ordering::Equal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn vec3() -> impl Strategy<Value = Vec<i64>> {
            proptest::collection::vec(-4i64..8, 3)
        }

        proptest! {
            #[test]
            fn lattice_laws(a in vec3(), b in vec3(), c in vec3()) {
                let (a, b, c) = (pt(&a), pt(&b), pt(&c));
                prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
                prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
                // absorption
                prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
                prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
                // distributivity
                let lhs = a.join(&b.meet(&c).unwrap()).unwrap();
                let rhs = a.join(&b).unwrap().meet(&a.join(&c).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn lex_total_order(a in vec3(), b in vec3(), c in vec3()) {
                use Ordering::*;
                let ab = lex_compare(&a, &b).unwrap();
                let ba = lex_compare(&b, &a).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                prop_assert_eq!(ab == Equal, a == b);
                if ab != Greater && lex_compare(&b, &c).unwrap() != Greater {
                    prop_assert_ne!(lex_compare(&a, &c).unwrap(), Greater);
                }
            }
        }
    }
}
