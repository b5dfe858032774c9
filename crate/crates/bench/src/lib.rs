//! Fixed inputs shared by the benchmarks.

use qpart_core::DoubleSystem;

/// Two-row systems with three to five columns, all columns pairwise
/// non-proportional.
pub fn sample_systems() -> Vec<DoubleSystem> {
    [
        (vec![1, 2, 3], vec![3, 2, 1]),
        (vec![1, 1, 2, 5], vec![1, 2, 1, 3]),
        (vec![0, 2, 3, 4, 6], vec![1, 3, 2, 5, 1]),
        (vec![2, 4, 1, 3, 5], vec![3, 1, 4, 6, 2]),
    ]
    .into_iter()
    .map(|(top, bottom)| DoubleSystem::new(top, bottom, (0, 0)).expect("valid fixture"))
    .collect()
}
