//! Parameter sequences `s = (s_1, ..., s_n)` of positive integers.
//!
//! The sequence drives everything else in the crate: the cone
//! `0 <= x_1/s_1 <= ... <= x_n/s_n`, the simplex obtained by truncating it at
//! `x_n <= s_n`, and the associated order polytopes. Two structural flags are
//! computed once at construction:
//!
//! * `weakly_increasing`: s_i <= s_{i+1} for all i;
//! * `zero_one_diff`: the first-order difference sequence of the extension
//!   `0 = s_0, s_1, ..., s_n` is a 0,1-sequence (which forces s_1 = 1 and
//!   implies weakly increasing).
//!
//! The multiset/Groebner/triangulation layers are only defined for sequences
//! passing the `zero_one_diff` gate; the cone, simplex, order polytope and
//! decomposition layers accept arbitrary positive sequences.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSequence {
    s: Vec<i64>,
    weakly_increasing: bool,
    zero_one_diff: bool,
}

impl SSequence {
    /// Build a sequence from its entries. Every entry must be >= 1.
    pub fn new(s: Vec<i64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidSequence("sequence must be nonempty".into()));
        }
        if let Some(&bad) = s.iter().find(|&&v| v < 1) {
            return Err(Error::InvalidSequence(format!(
                "entries must be positive integers, found {bad}"
            )));
        }
        let weakly_increasing = s.windows(2).all(|w| w[0] <= w[1]);
        // Differences are taken against s_0 := 0, so the first step is s_1
        // itself and the flag forces s_1 = 1.
        let mut prev = 0i64;
        let zero_one_diff = s.iter().all(|&v| {
            let d = v - prev;
            prev = v;
            d == 0 || d == 1
        });
        Ok(Self {
            s,
            weakly_increasing,
            zero_one_diff,
        })
    }

    /// Parse a comma-separated list such as `"1,2,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidSequence(format!("cannot parse entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.s
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.weakly_increasing
    }

    pub fn is_zero_one_diff(&self) -> bool {
        self.zero_one_diff
    }

    /// The homogenizing entry `s_{n+1} = s_n + 1`.
    pub fn ext(&self) -> i64 {
        self.s[self.s.len() - 1] + 1
    }

    /// Entry of the extended sequence `0 = s_0, s_1, ..., s_n, s_{n+1}` at a
    /// 1-based position `i` with `0 <= i <= n + 1`.
    pub fn extended(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else if i <= self.n() {
            self.s[i - 1]
        } else if i == self.n() + 1 {
            self.ext()
        } else {
            panic!("extended index {i} out of range 0..={}", self.n() + 1)
        }
    }

    /// Error unless the sequence passes the 0,1-difference gate required by
    /// the multiset, basis and triangulation layers.
    pub fn require_zero_one_diff(&self) -> Result<()> {
        if self.zero_one_diff {
            Ok(())
        } else {
            Err(Error::Gate(format!(
                "sequence {:?} does not have a 0,1 first-order difference sequence",
                self.s
            )))
        }
    }
}

impl std::fmt::Display for SSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.s.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
