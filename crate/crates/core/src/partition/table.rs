use num_traits::{One, Zero};

use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// `W(0..=s_max, d)` for an all-positive generator set, with prefix sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    generators: GeneratorSet,
    values: Vec<Integer>,
    prefix: Vec<Integer>,
}

impl PartitionTable {
    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    /// Largest `s` held by the table.
    pub fn s_max(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// `W(s, d)`; zero for negative `s`.
    pub fn value(&self, s: i64) -> Result<Integer> {
        self.get(s).map(|v| v.cloned().unwrap_or_default())
    }

    /// Borrowing lookup: `Ok(None)` encodes a negative argument.
    pub fn get(&self, s: i64) -> Result<Option<&Integer>> {
        if s < 0 {
            return Ok(None);
        }
        self.values.get(s as usize).map(Some).ok_or(Error::TableTooShort {
            needed: s,
            available: self.s_max(),
        })
    }

    /// `sum_{k=0}^{s} W(k, d)`; zero for negative `s`.
    pub fn prefix(&self, s: i64) -> Result<Integer> {
        if s < 0 {
            return Ok(Integer::zero());
        }
        self.prefix.get(s as usize).cloned().ok_or(Error::TableTooShort {
            needed: s,
            available: self.s_max(),
        })
    }

    /// Grows the table so that it covers `s_max`. Never shrinks.
    pub fn extend_to(&mut self, s_max: usize) {
        if s_max as i64 <= self.s_max() {
            return;
        }
        let target = s_max.max(2 * self.values.len());
        *self = build(&self.generators, target);
    }
}

fn build(d: &GeneratorSet, s_max: usize) -> PartitionTable {
    let mut values = vec![Integer::zero(); s_max + 1];
    values[0] = Integer::one();
    // generators outer, amounts inner: each generator may be reused
    for g in d.iter() {
        let g = g as usize;
        for x in g..=s_max {
            let (lo, hi) = values.split_at_mut(x);
            let prev = &lo[x - g];
            if !prev.is_zero() {
                hi[0] += prev;
            }
        }
    }
    let mut prefix = Vec::with_capacity(values.len());
    let mut acc = Integer::zero();
    for v in &values {
        acc += v;
        prefix.push(acc.clone());
    }
    PartitionTable {
        generators: d.clone(),
        values,
        prefix,
    }
}

/// Coin-change dynamic program for `W(0..=s_max, d)`.
///
/// Only positive generators are accepted; the empty set gives `W(s) = [s == 0]`.
pub fn partition_dp(d: &GeneratorSet, s_max: usize) -> Result<PartitionTable> {
    d.require_positive()?;
    Ok(build(d, s_max))
}

/// Cauchy product `sum_{k=0}^{s} a[k] * b[s-k]`, which is `W(s)` for the
/// union of the two generator sets.
pub fn convolve(a: &PartitionTable, b: &PartitionTable, s: i64) -> Result<Integer> {
    if s < 0 {
        return Ok(Integer::zero());
    }
    let available = a.s_max().min(b.s_max());
    if s > available {
        return Err(Error::TableTooShort { needed: s, available });
    }
    let s = s as usize;
    let mut acc = Integer::zero();
    for (x, y) in a.values[..=s].iter().zip(b.values[..=s].iter().rev()) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    Ok(acc)
}

/// `W(L, d)` for generators of either sign.
///
/// With `K` negative generators of total absolute value `S`, this is
/// `(-1)^K * W(L - S, |d|)`, and zero whenever `L - S < 0`.
pub fn signed_partition(l: i64, d: &GeneratorSet) -> Integer {
    let shifted = l - d.negative_shift();
    if shifted < 0 {
        return Integer::zero();
    }
    let value = build(&d.abs(), shifted as usize).values[shifted as usize].clone();
    if d.negative_count() % 2 == 1 {
        -value
    } else {
        value
    }
}

/// `sum_{k=0}^{s} W(k, d)`, with `W` taken in the signed sense for negative
/// generators; zero for negative `s`.
pub fn prefix_sum(d: &GeneratorSet, s: i64) -> Integer {
    let shifted = s - d.negative_shift();
    if shifted < 0 {
        return Integer::zero();
    }
    let table = build(&d.abs(), shifted as usize);
    let value = table.prefix[shifted as usize].clone();
    if d.negative_count() % 2 == 1 {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use proptest::prelude::*;

    fn set(g: &[i64]) -> GeneratorSet {
        GeneratorSet::new(g.to_vec()).unwrap()
    }

    /// Counts `x >= 0` with `sum x_i d_i = s` by direct recursion.
    fn enumerate(s: i64, d: &[i64]) -> u64 {
        match d.split_first() {
            None => u64::from(s == 0),
            Some((&g, rest)) => (0..=s / g).map(|k| enumerate(s - k * g, rest)).sum(),
        }
    }

    #[test]
    fn single_unit_generator() {
        let t = partition_dp(&set(&[1]), 5).unwrap();
        assert_eq!(t.values(), vec![int(1); 6].as_slice());
    }

    #[test]
    fn small_values() {
        assert_eq!(partition_dp(&set(&[1, 2]), 4).unwrap().value(4).unwrap(), int(3));
        assert_eq!(partition_dp(&set(&[1, 2, 3]), 6).unwrap().value(6).unwrap(), int(7));
        // enumeration oracle
        assert_eq!(enumerate(6, &[1, 2, 3]), 7);
    }

    #[test]
    fn empty_set_is_delta() {
        let t = partition_dp(&GeneratorSet::empty(), 4).unwrap();
        assert_eq!(t.values(), &[int(1), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn rejects_nonpositive() {
        assert_eq!(
            partition_dp(&set(&[1, -2]), 3),
            Err(Error::NonPositiveGenerator { generator: -2 })
        );
    }

    #[test]
    fn table_bounds() {
        let mut t = partition_dp(&set(&[1, 2]), 3).unwrap();
        assert_eq!(t.value(-1).unwrap(), int(0));
        assert_eq!(t.value(4), Err(Error::TableTooShort { needed: 4, available: 3 }));
        t.extend_to(10);
        assert_eq!(t.value(10).unwrap(), int(6));
        assert_eq!(t.prefix(3).unwrap(), int(1 + 1 + 2 + 2));
    }

    #[test]
    fn convolution_examples() {
        let w1 = partition_dp(&GeneratorSet::ladder(1), 10).unwrap();
        let w2 = partition_dp(&GeneratorSet::ladder(2), 10).unwrap();
        let w3 = partition_dp(&GeneratorSet::ladder(3), 10).unwrap();
        let w4 = partition_dp(&GeneratorSet::ladder(4), 10).unwrap();
        assert_eq!(convolve(&w2, &w3, 0).unwrap(), int(1));
        let union = partition_dp(&set(&[1, 2, 1, 2, 3]), 5).unwrap();
        assert_eq!(convolve(&w2, &w3, 5).unwrap(), union.value(5).unwrap());
        assert_eq!(
            convolve(&w1, &w4, 3).unwrap(),
            int(enumerate(3, &[1, 1, 2, 3, 4]) as i64)
        );
        assert_eq!(convolve(&w1, &w4, -2).unwrap(), int(0));
        assert!(matches!(convolve(&w1, &w4, 11), Err(Error::TableTooShort { .. })));
    }

    #[test]
    fn signed_examples() {
        assert_eq!(signed_partition(1, &set(&[-1])), int(-1));
        assert_eq!(signed_partition(5, &set(&[1])), int(1));
        assert_eq!(signed_partition(2, &set(&[-3, 1])), int(0));
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(prefix_sum(&set(&[1, 2]), 3), int(6));
        assert_eq!(prefix_sum(&set(&[1, 2]), 10), int(36));
        assert_eq!(prefix_sum(&set(&[5, 7]), 0), int(1));
        assert_eq!(prefix_sum(&set(&[1, 2]), -1), int(0));
    }

    #[test]
    fn convolve_of_split_equals_union_exhaustive_small() {
        // every multiset of size <= 4 over {1..6}, every split
        fn multisets(size: usize, min: i64, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
            out.push(cur.clone());
            if cur.len() == size {
                return;
            }
            for g in min..=6 {
                cur.push(g);
                multisets(size, g, out, cur);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        multisets(4, 1, &mut all, &mut Vec::new());
        const S: usize = 100;
        for gens in &all {
            let union = partition_dp(&set(gens), S).unwrap();
            for mask in 0u32..(1 << gens.len()) {
                let (a, b): (Vec<_>, Vec<_>) = gens
                    .iter()
                    .enumerate()
                    .partition(|(i, _)| mask & (1 << i) != 0);
                let ta = partition_dp(&set(&a.iter().map(|p| *p.1).collect::<Vec<_>>()), S).unwrap();
                let tb = partition_dp(&set(&b.iter().map(|p| *p.1).collect::<Vec<_>>()), S).unwrap();
                for s in (0..=S as i64).step_by(7).chain([S as i64]) {
                    assert_eq!(convolve(&ta, &tb, s).unwrap(), union.value(s).unwrap());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn convolve_of_split_equals_union(gens in prop::collection::vec(1i64..=6, 1..=6), mask in any::<u32>()) {
            const S: usize = 100;
            let (a, b): (Vec<i64>, Vec<i64>) = {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for (i, g) in gens.iter().enumerate() {
                    if mask & (1 << i) != 0 { a.push(*g) } else { b.push(*g) }
                }
                (a, b)
            };
            let union = partition_dp(&set(&gens), S).unwrap();
            let ta = partition_dp(&set(&a), S).unwrap();
            let tb = partition_dp(&set(&b), S).unwrap();
            for s in 0..=S as i64 {
                prop_assert_eq!(convolve(&ta, &tb, s).unwrap(), union.value(s).unwrap());
            }
        }

        #[test]
        fn dp_matches_enumeration(gens in prop::collection::vec(1i64..=5, 0..=4), s in 0i64..25) {
            let t = partition_dp(&set(&gens), 25).unwrap();
            prop_assert_eq!(t.value(s).unwrap(), int(enumerate(s, &gens) as i64));
        }

        #[test]
        fn ladder_is_nondecreasing(m in 1u32..=6) {
            let t = partition_dp(&GeneratorSet::ladder(m), 200).unwrap();
            prop_assert!(t.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
