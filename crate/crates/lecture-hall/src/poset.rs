//! Naturally labeled posets on the ground set {1, ..., n}.
//!
//! Natural labeling means i ⪯ j implies i <= j as integers, so every stored
//! strict relation points upward; this makes antisymmetry automatic once the
//! input covers are validated. The relation is kept as its full
//! reflexive-transitive closure.

use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    n: usize,
    /// `le[i][j]` (0-based) holds when element i+1 ⪯ element j+1.
    le: Vec<Vec<bool>>,
}

/// On-disk format: `{"n": 3, "covers": [[1,2],[2,3]]}` with 1-based labels.
#[derive(Deserialize)]
struct PosetFile {
    n: usize,
    covers: Vec<(usize, usize)>,
}

impl LabeledPoset {
    /// Build from cover relations `(i, j)` meaning i ⪯ j, 1-based. Covers
    /// must go strictly upward (i < j); the transitive closure is taken here.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPoset("ground set must be nonempty".into()));
        }
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in covers {
            if i < 1 || i > n || j < 1 || j > n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({i},{j}) out of range 1..={n}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidPoset(format!(
                    "cover ({i},{j}) violates natural labeling (need i < j)"
                )));
            }
            le[i - 1][j - 1] = true;
        }
        // Warshall closure; all relations point upward so this stays
        // antisymmetric and naturally labeled.
        for k in 0..n {
            let through_k = le[k].clone();
            for row in le.iter_mut() {
                if row[k] {
                    for (j, &reach) in through_k.iter().enumerate() {
                        if reach {
                            row[j] = true;
                        }
                    }
                }
            }
        }
        Ok(Self { n, le })
    }

    /// The chain 1 ⪯ 2 ⪯ ... ⪯ n.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_covers(n, &covers).expect("chain covers are valid")
    }

    /// The poset with no strict relations.
    pub fn antichain(n: usize) -> Self {
        Self::from_covers(n, &[]).expect("empty covers are valid")
    }

    /// Deterministic pseudo-random naturally labeled poset: each upward pair
    /// is related with probability `edge_prob`, then closed transitively.
    pub fn random_natural(n: usize, seed: u64, edge_prob: f64) -> Self {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut covers = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.random::<f64>() < edge_prob {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(n, &covers).expect("generated covers are valid")
    }

    /// Parse the JSON file format `{"n": ..., "covers": [[i,j], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PosetFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPoset(format!("bad poset JSON: {e}")))?;
        Self::from_covers(file.n, &file.covers)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether i ⪯ j, 1-based.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i - 1][j - 1]
    }

    /// All strict relations (i, j) with i ⪯ j and i != j, 1-based,
    /// lexicographically ordered.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
