//! Double (two-row) vector partition functions: the number of nonnegative
//! integer vectors `x` with `D x = (r, rho)` for a `2 x m` matrix `D`.
//!
//! [`vpf_oracle`] counts by a two-dimensional dynamic program.
//! [`vpf_cayley`] eliminates one column at a time and sums scalar partition
//! functions whose arguments are `2 x 2` determinants.

mod cayley;
mod chamber;
mod slack;

pub use cayley::{
    cayley_reduce, vpf_cayley, vpf_cayley_literal, CayleyGrid, Congruence, ReductionTerm,
};
pub use chamber::{chamber_walls, ChamberWall, Slope};
pub use slack::{count_solutions, slack_reduce, EqualitySystem, InequalitySystem};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// A `2 x m` nonnegative matrix with columns `(b_i, beta_i)` and a
/// right-hand side `(r, rho)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleSystem {
    top: Vec<i64>,
    bottom: Vec<i64>,
    rhs: (i64, i64),
}

impl DoubleSystem {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>, rhs: (i64, i64)) -> Result<Self> {
        if top.is_empty() {
            return Err(Error::InvalidSystem("matrix needs at least one column".into()));
        }
        if top.len() != bottom.len() {
            return Err(Error::InvalidSystem(format!(
                "rows have different lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top.iter().chain(&bottom).any(|&v| v < 0) {
            return Err(Error::InvalidSystem("matrix entries must be nonnegative".into()));
        }
        if let Some(i) = (0..top.len()).find(|&i| top[i] == 0 && bottom[i] == 0) {
            return Err(Error::InvalidSystem(format!("column {} is zero", i + 1)));
        }
        if rhs.0 < 0 || rhs.1 < 0 {
            return Err(Error::InvalidSystem("right-hand side must be nonnegative".into()));
        }
        Ok(Self { top, bottom, rhs })
    }

    pub fn from_rows(matrix: &[Vec<i64>], rhs: &[i64]) -> Result<Self> {
        match (matrix, rhs) {
            ([top, bottom], &[r, rho]) => Self::new(top.clone(), bottom.clone(), (r, rho)),
            _ => Err(Error::InvalidSystem(format!(
                "expected 2 matrix rows and 2 rhs entries, got {} and {}",
                matrix.len(),
                rhs.len()
            ))),
        }
    }

    /// Same matrix, new right-hand side.
    pub fn with_rhs(&self, r: i64, rho: i64) -> Result<Self> {
        Self::new(self.top.clone(), self.bottom.clone(), (r, rho))
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn rhs(&self) -> (i64, i64) {
        self.rhs
    }

    pub fn column_count(&self) -> usize {
        self.top.len()
    }

    /// Columns `(b_i, beta_i)`.
    pub fn columns(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    pub fn swapped(&self) -> Self {
        Self {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
            rhs: (self.rhs.1, self.rhs.0),
        }
    }

    /// Orientation used by the reduction: rows are exchanged when the top row
    /// has zeros and the bottom row has none, so zero entries end up in the
    /// eliminated row. The bottom row must keep a nonzero entry, so a zero top
    /// row stays put and a zero bottom row is always moved up.
    pub fn oriented(&self) -> (Self, bool) {
        let top_zero = self.top.contains(&0);
        let bottom_zero = self.bottom.contains(&0);
        let top_empty = self.top.iter().all(|&v| v == 0);
        let bottom_empty = self.bottom.iter().all(|&v| v == 0);
        if bottom_empty || (top_zero && !bottom_zero && !top_empty) {
            (self.swapped(), true)
        } else {
            (self.clone(), false)
        }
    }
}

/// JSON form of a system: `{"matrix": [[..],[..]], "rhs": [r, rho]}`.
///
/// With `ineq_rhs`, the trailing `ineq_rhs.len()` matrix rows are `<=`
/// constraints and `rhs` holds the equation right-hand sides only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub matrix: Vec<Vec<i64>>,
    pub rhs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ineq_rhs: Option<Vec<i64>>,
}

impl SystemFile {
    pub fn double_system(&self) -> Result<DoubleSystem> {
        if self.ineq_rhs.is_some() {
            return Err(Error::InvalidSystem(
                "inequality system; reduce it with slack variables first".into(),
            ));
        }
        DoubleSystem::from_rows(&self.matrix, &self.rhs)
    }

    pub fn inequality_system(&self) -> Result<InequalitySystem> {
        let ineq_rhs = self.ineq_rhs.clone().unwrap_or_default();
        let k = self.rhs.len();
        if self.matrix.len() != k + ineq_rhs.len() {
            return Err(Error::InvalidSystem(format!(
                "{} matrix rows for {} equations and {} inequalities",
                self.matrix.len(),
                k,
                ineq_rhs.len()
            )));
        }
        let (eq, ineq) = self.matrix.split_at(k);
        InequalitySystem::new(eq.to_vec(), self.rhs.clone(), ineq.to_vec(), ineq_rhs)
    }
}

impl From<&DoubleSystem> for SystemFile {
    fn from(sys: &DoubleSystem) -> Self {
        Self {
            matrix: vec![sys.top.clone(), sys.bottom.clone()],
            rhs: vec![sys.rhs.0, sys.rhs.1],
            ineq_rhs: None,
        }
    }
}

/// Table `T[r][rho]` of solution counts for every right-hand side up to
/// `(r_max, rho_max)`.
pub fn vpf_oracle_table(sys: &DoubleSystem, r_max: usize, rho_max: usize) -> Vec<Vec<Integer>> {
    let mut t = vec![vec![Integer::zero(); rho_max + 1]; r_max + 1];
    t[0][0] = Integer::one();
    for (b, beta) in sys.columns() {
        let (b, beta) = (b as usize, beta as usize);
        for i in b..=r_max {
            for j in beta..=rho_max {
                let prev = t[i - b][j - beta].clone();
                if !prev.is_zero() {
                    t[i][j] += prev;
                }
            }
        }
    }
    t
}

/// Exact solution count of `D x = (r, rho)` by dynamic programming.
pub fn vpf_oracle(sys: &DoubleSystem) -> Integer {
    let (r, rho) = sys.rhs;
    vpf_oracle_table(sys, r as usize, rho as usize)[r as usize][rho as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    pub(crate) fn sys(top: &[i64], bottom: &[i64], r: i64, rho: i64) -> DoubleSystem {
        DoubleSystem::new(top.to_vec(), bottom.to_vec(), (r, rho)).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(vpf_oracle(&sys(&[1, 1], &[1, 2], 3, 4)), int(1));
        assert_eq!(vpf_oracle(&sys(&[1], &[1], 0, 0)), int(1));
        assert_eq!(vpf_oracle(&sys(&[1, 1], &[1, 2], 4, 3)), int(0));
        assert_eq!(vpf_oracle(&sys(&[1, 1], &[1, 2], 4, 6)), int(1));
    }

    #[test]
    fn validation() {
        assert!(DoubleSystem::new(vec![], vec![], (0, 0)).is_err());
        assert!(DoubleSystem::new(vec![1, 0], vec![1, 0], (1, 1)).is_err());
        assert!(DoubleSystem::new(vec![1], vec![-1], (1, 1)).is_err());
        assert!(DoubleSystem::new(vec![1], vec![1, 2], (1, 1)).is_err());
        assert!(DoubleSystem::new(vec![1], vec![1], (-1, 1)).is_err());
    }

    #[test]
    fn orientation_swaps_only_when_top_has_zeros() {
        let (o, swapped) = sys(&[0, 1], &[1, 2], 3, 5).oriented();
        assert!(swapped);
        assert_eq!(o.top(), &[1, 2]);
        assert_eq!(o.rhs(), (5, 3));
        assert!(!sys(&[1, 1], &[0, 2], 3, 5).oriented().1);
        assert!(!sys(&[0, 1], &[1, 0], 3, 5).oriented().1);
        assert!(!sys(&[0, 0], &[1, 2], 0, 5).oriented().1);
        assert!(sys(&[1, 2], &[0, 0], 3, 0).oriented().1);
    }

    #[test]
    fn system_file_round_trip() {
        let json = r#"{"matrix":[[1,1],[1,2]],"rhs":[3,4]}"#;
        let file: SystemFile = serde_json::from_str(json).unwrap();
        let s = file.double_system().unwrap();
        assert_eq!(s, sys(&[1, 1], &[1, 2], 3, 4));
        assert_eq!(serde_json::to_string(&SystemFile::from(&s)).unwrap(), json);
    }
}
