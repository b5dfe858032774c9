use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// `k` equations `A x = s` and `l - k` inequalities `B x <= n` over the same
/// nonnegative integer variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalitySystem {
    equations: Vec<Vec<i64>>,
    eq_rhs: Vec<i64>,
    inequalities: Vec<Vec<i64>>,
    ineq_rhs: Vec<i64>,
}

/// `D x = s` over nonnegative integers, any number of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualitySystem {
    pub matrix: Vec<Vec<i64>>,
    pub rhs: Vec<i64>,
}

impl InequalitySystem {
    pub fn new(
        equations: Vec<Vec<i64>>,
        eq_rhs: Vec<i64>,
        inequalities: Vec<Vec<i64>>,
        ineq_rhs: Vec<i64>,
    ) -> Result<Self> {
        if equations.len() != eq_rhs.len() || inequalities.len() != ineq_rhs.len() {
            return Err(Error::InvalidSystem("row count and rhs length differ".into()));
        }
        let width = equations.iter().chain(&inequalities).map(Vec::len).next().unwrap_or(0);
        if width == 0 {
            return Err(Error::InvalidSystem("system needs at least one row and one variable".into()));
        }
        if equations.iter().chain(&inequalities).any(|row| row.len() != width) {
            return Err(Error::InvalidSystem("rows have different lengths".into()));
        }
        let entries = equations.iter().chain(&inequalities).flatten();
        if entries.chain(&eq_rhs).chain(&ineq_rhs).any(|&v| v < 0) {
            return Err(Error::InvalidSystem("coefficients and rhs must be nonnegative".into()));
        }
        Ok(Self {
            equations,
            eq_rhs,
            inequalities,
            ineq_rhs,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.equations
            .first()
            .or(self.inequalities.first())
            .map_or(0, Vec::len)
    }

    /// Counts solutions by enumerating every variable over its box bound.
    pub fn count_direct(&self) -> Result<Integer> {
        let m = self.variable_count();
        let rows: Vec<(&Vec<i64>, i64)> = self
            .equations
            .iter()
            .zip(self.eq_rhs.iter().copied())
            .chain(self.inequalities.iter().zip(self.ineq_rhs.iter().copied()))
            .collect();
        let bounds = (0..m)
            .map(|i| {
                rows.iter()
                    .filter(|(row, _)| row[i] > 0)
                    .map(|(row, rhs)| rhs / row[i])
                    .min()
                    .ok_or_else(|| unbounded(i))
            })
            .collect::<Result<Vec<i64>>>()?;
        let mut x = vec![0i64; m];
        let mut count = Integer::zero();
        self.enumerate(0, &bounds, &mut x, &mut count);
        Ok(count)
    }

    fn enumerate(&self, i: usize, bounds: &[i64], x: &mut [i64], count: &mut Integer) {
        if i == x.len() {
            let dot = |row: &Vec<i64>| row.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<i64>();
            let eq_ok = self.equations.iter().zip(&self.eq_rhs).all(|(row, &s)| dot(row) == s);
            let ineq_ok = self
                .inequalities
                .iter()
                .zip(&self.ineq_rhs)
                .all(|(row, &n)| dot(row) <= n);
            if eq_ok && ineq_ok {
                *count += 1;
            }
            return;
        }
        for v in 0..=bounds[i] {
            x[i] = v;
            self.enumerate(i + 1, bounds, x, count);
        }
        x[i] = 0;
    }
}

fn unbounded(variable: usize) -> Error {
    Error::InvalidSystem(format!(
        "variable {} has no positive coefficient, so the count is infinite",
        variable + 1
    ))
}

/// Turns every inequality into an equation with its own slack variable:
/// coefficient 1 in that row and 0 everywhere else.
pub fn slack_reduce(sys: &InequalitySystem) -> EqualitySystem {
    let l_minus_k = sys.inequalities.len();
    let mut matrix = Vec::with_capacity(sys.equations.len() + l_minus_k);
    for row in &sys.equations {
        let mut row = row.clone();
        row.resize(row.len() + l_minus_k, 0);
        matrix.push(row);
    }
    for (j, row) in sys.inequalities.iter().enumerate() {
        let mut row = row.clone();
        row.extend((0..l_minus_k).map(|t| i64::from(t == j)));
        matrix.push(row);
    }
    let rhs = sys.eq_rhs.iter().chain(&sys.ineq_rhs).copied().collect();
    EqualitySystem { matrix, rhs }
}

/// Solution count of `D x = s` by dynamic programming over columns on the
/// box `0..=s` (mixed-radix indexed).
pub fn count_solutions(sys: &EqualitySystem) -> Result<Integer> {
    let rows = sys.matrix.len();
    if rows != sys.rhs.len() || rows == 0 {
        return Err(Error::InvalidSystem("row count and rhs length differ".into()));
    }
    let m = sys.matrix[0].len();
    if sys.matrix.iter().any(|r| r.len() != m) {
        return Err(Error::InvalidSystem("rows have different lengths".into()));
    }
    if sys.matrix.iter().flatten().chain(&sys.rhs).any(|&v| v < 0) {
        return Err(Error::InvalidSystem("coefficients and rhs must be nonnegative".into()));
    }
    if let Some(i) = (0..m).find(|&i| sys.matrix.iter().all(|r| r[i] == 0)) {
        return Err(unbounded(i));
    }
    let radix: Vec<usize> = sys.rhs.iter().map(|&s| s as usize + 1).collect();
    let size: usize = radix.iter().product();
    let mut stride = vec![1usize; rows];
    for j in 1..rows {
        stride[j] = stride[j - 1] * radix[j - 1];
    }
    let mut t = vec![Integer::zero(); size];
    t[0] = Integer::one();
    for i in 0..m {
        let col: Vec<usize> = sys.matrix.iter().map(|r| r[i] as usize).collect();
        let offset: usize = col.iter().zip(&stride).map(|(c, s)| c * s).sum();
        // increasing flat index visits every predecessor first
        for idx in 0..size {
            let fits = (0..rows).all(|j| (idx / stride[j]) % radix[j] >= col[j]);
            if fits {
                let prev = t[idx - offset].clone();
                if !prev.is_zero() {
                    t[idx] += prev;
                }
            }
        }
    }
    Ok(t[size - 1].clone())
}
