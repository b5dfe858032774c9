//! Eulerian numbers of types A and B and the leading term of the maximal
//! Gaussian coefficient.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::polypart::Variable;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, int, pow_i64, text, Integer, Rational};

/// `A_{n,k} = sum_{j=0}^{k} (-1)^j C(n+1, j) (k - j)^n`; zero for `k > n + 1`.
pub fn eulerian_a(n: u32, k: u32) -> Integer {
    if k > n + 1 {
        return Integer::zero();
    }
    (0..=k)
        .map(|j| {
            let t = binomial(u64::from(n) + 1, u64::from(j)) * pow_i64(i64::from(k - j), n);
            if j % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `B_{n,k} = sum_{j=0}^{k} (-1)^(k-j) C(n+1, k-j) (2j+1)^n`; zero for `k > n`.
pub fn eulerian_b(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    (0..=k)
        .map(|j| {
            let t = binomial(u64::from(n) + 1, u64::from(k - j)) * pow_i64(2 * i64::from(j) + 1, n);
            if (k - j) % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `B_{n,k}` from `B_{n,k} = (2(n-k)+1) B_{n-1,k-1} + (2k+1) B_{n-1,k}`,
/// `B_{0,0} = 1`.
pub fn eulerian_b_recurrence(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    EulerianTable::new(n).type_b[n as usize][k as usize].clone()
}

/// Rows `0..=n_max` of both triangles: type A from the alternating sum, type
/// B from the recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTable {
    pub type_a: Vec<Vec<Integer>>,
    pub type_b: Vec<Vec<Integer>>,
}

impl EulerianTable {
    pub fn new(n_max: u32) -> Self {
        let type_a = (0..=n_max)
            .map(|n| (0..=n + 1).map(|k| eulerian_a(n, k)).collect())
            .collect();
        let mut type_b: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
        for n in 1..=n_max as usize {
            let prev = &type_b[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Integer::zero);
            let row = (0..=n)
                .map(|k| {
                    let left = if k == 0 { Integer::zero() } else { at(k - 1) * (2 * (n - k) + 1) };
                    left + at(k) * (2 * k + 1)
                })
                .collect();
            type_b.push(row);
        }
        Self { type_a, type_b }
    }

    /// Type-B rows from the explicit sum equal the recurrence rows.
    pub fn type_b_consistent(&self) -> bool {
        self.type_b.iter().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(k, v)| *v == eulerian_b(n as u32, k as u32))
        })
    }
}

/// Leading term `coefficient * base^exponent` of the maximal coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingTerm {
    pub m: u32,
    #[serde(
        serialize_with = "text::serialize_rational",
        deserialize_with = "text::deserialize_rational"
    )]
    pub coefficient: Rational,
    pub exponent: u32,
    /// `n` for even `m`; `r = n/2` or `r = (n+1)/2` for odd `m`.
    pub variable: Variable,
    /// The Eulerian number in the numerator.
    #[serde(
        serialize_with = "text::serialize_integer",
        deserialize_with = "text::deserialize_integer"
    )]
    pub eulerian: Integer,
}

impl LeadingTerm {
    pub fn value_at(&self, n: i64) -> Rational {
        let base = Rational::from_integer(int(self.variable.value_at(n)));
        &self.coefficient * num_traits::pow(base, self.exponent as usize)
    }
}

/// Leading term of `p_m^n`: `n^(m-1) A_{m-1,m/2} / ((m-1)! m!)` for even `m`,
/// `r^(m-1) B_{m-1,(m-1)/2} / ((m-1)! m!)` for odd `m`.
///
/// The odd-`m` numerator is the central type-B number
/// `sum_{j=0}^{k-1} (-1)^j C(2k-1, j) (2(k-1-j)+1)^(2k-2)` with `m = 2k - 1`,
/// which is `B_{m-1,(m-1)/2}`.
pub fn leading_term(m: u32) -> Result<LeadingTerm> {
    if m < 2 {
        return Err(Error::UnsupportedM {
            m,
            reason: "leading terms need m >= 2",
        });
    }
    let norm = factorial(u64::from(m) - 1) * factorial(u64::from(m));
    let (eulerian, variable) = if m % 2 == 0 {
        (eulerian_a(m - 1, m / 2), Variable::N)
    } else {
        let k = (m + 1) / 2;
        let central: Integer = (0..k)
            .map(|j| {
                let t = binomial(u64::from(2 * k - 1), u64::from(j))
                    * pow_i64(2 * (i64::from(k) - 1 - i64::from(j)) + 1, 2 * k - 2);
                if j % 2 == 1 {
                    -t
                } else {
                    t
                }
            })
            .sum();
        (central, Variable::R)
    };
    Ok(LeadingTerm {
        m,
        coefficient: Rational::new(eulerian.clone(), norm),
        exponent: m - 1,
        variable,
        eulerian,
    })
}
