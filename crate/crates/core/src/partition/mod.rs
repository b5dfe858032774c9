//! Scalar restricted partition functions `W(s, d)`: the number of ways to
//! write `s` as a nonnegative integer combination of the generators `d`.

mod bernoulli;
mod closed;
mod table;

pub use bernoulli::{
    bernoulli_higher, bernoulli_higher_numbers, bernoulli_numbers, bernoulli_poly_higher,
    bernoulli_poly_higher_polynomial, polynomial_part,
};
pub use closed::{closed_form, printed_value, ClosedForm};
pub(crate) use closed::rational_to_f64;
pub use table::{convolve, partition_dp, prefix_sum, signed_partition, PartitionTable};

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// Multiset of nonzero integer generators. Negative entries are allowed;
/// they arise from column elimination in vector partition problems.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GeneratorSet {
    generators: Vec<i64>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<i64>) -> Result<Self> {
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        Ok(Self { generators })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The ladder `{1, 2, ..., m}`; empty for `m = 0`.
    pub fn ladder(m: u32) -> Self {
        Self {
            generators: (1..=i64::from(m)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        Self { generators }
    }

    pub fn negated(&self) -> Self {
        Self {
            generators: self.generators.iter().map(|g| -g).collect(),
        }
    }

    /// All generators made positive.
    pub fn abs(&self) -> Self {
        Self {
            generators: self.generators.iter().map(|g| g.abs()).collect(),
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.generators.iter().copied()
    }

    pub fn count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_all_positive(&self) -> bool {
        self.generators.iter().all(|&g| g > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.generators.iter().filter(|&&g| g < 0).count()
    }

    /// Sum of the absolute values of the negative generators.
    pub fn negative_shift(&self) -> i64 {
        self.generators.iter().filter(|&&g| g < 0).map(|g| -g).sum()
    }

    /// `sigma = d_1 + ... + d_m`.
    pub fn sigma(&self) -> Integer {
        self.generators.iter().map(|&g| Integer::from(g)).sum()
    }

    /// `pi = d_1 * ... * d_m`.
    pub fn pi(&self) -> Integer {
        self.generators
            .iter()
            .fold(Integer::one(), |acc, &g| acc * g)
    }

    /// Least common multiple of the absolute generator values (1 if empty).
    pub fn lcm(&self) -> u64 {
        self.generators
            .iter()
            .fold(1u64, |acc, &g| num_integer::lcm(acc, g.unsigned_abs()))
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        match self.generators.iter().find(|&&g| g <= 0) {
            Some(&g) => Err(Error::NonPositiveGenerator { generator: g }),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<i64>> for GeneratorSet {
    type Error = Error;

    fn try_from(generators: Vec<i64>) -> Result<Self> {
        Self::new(generators)
    }
}

impl From<GeneratorSet> for Vec<i64> {
    fn from(set: GeneratorSet) -> Self {
        set.generators
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_and_helpers() {
        let d = GeneratorSet::ladder(4);
        assert_eq!(d.generators(), &[1, 2, 3, 4]);
        assert_eq!(d.sigma(), Integer::from(10));
        assert_eq!(d.pi(), Integer::from(24));
        assert_eq!(d.lcm(), 12);
        assert!(GeneratorSet::ladder(0).is_empty());
        assert_eq!(GeneratorSet::ladder(0).pi(), Integer::from(1));
    }

    #[test]
    fn signs() {
        let d = GeneratorSet::new(vec![-3, 1, -2]).unwrap();
        assert_eq!(d.negative_count(), 2);
        assert_eq!(d.negative_shift(), 5);
        assert_eq!(d.abs().generators(), &[3, 1, 2]);
        assert!(!d.is_all_positive());
        assert_eq!(GeneratorSet::new(vec![1, 0]), Err(Error::ZeroGenerator));
        assert_eq!(d.to_string(), "{-3,1,-2}");
    }
}
