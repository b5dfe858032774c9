//! Coefficients `P_m^n(s)` of the Gaussian polynomial `[m+n choose m]_t`,
//! i.e. the number of partitions of `s` into at most `n` parts of size at
//! most `m`.
//!
//! The fast route writes `P_m^n(s)` as a signed sum of convolutions of the
//! ladder partition functions `W_i(s) = W(s, {1..i})`. On the chamber
//! `(r-1) n <= s <= r n` only part of the sum survives.

mod closed;
mod eulerian;
mod polypart;

pub use closed::{closed_max, closed_p3, closed_p4, printed_max, printed_p3};
pub use eulerian::{
    eulerian_a, eulerian_b, eulerian_b_recurrence, leading_term, EulerianTable, LeadingTerm,
};
pub use polypart::{
    poly_part_gauss, poly_part_max, poly_part_max_chamber, printed_max_poly,
    BivariatePolynomial, MaxPolyPart, Parity, Variable,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Integer;
use crate::partition::{convolve, partition_dp, GeneratorSet, PartitionTable};

/// `s_m = m (m + 1) / 2`.
pub fn ladder_sum(m: u32) -> i64 {
    i64::from(m) * (i64::from(m) + 1) / 2
}

fn sign(e: u32) -> Integer {
    if e % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Coefficients of `[m+n choose m]_t` for `s = 0..=mn`, by a dynamic program
/// over the number of parts. `m = 0` or `n = 0` gives `[1]`.
pub fn gauss_oracle(m: u32, n: u32) -> Vec<Integer> {
    let (m, n) = (m as usize, n as usize);
    let top = m * n;
    // t[j][s]: partitions of s into exactly j parts, each at most m
    let mut t = vec![vec![Integer::zero(); top + 1]; n + 1];
    t[0][0] = Integer::one();
    for part in 1..=m {
        for j in 1..=n {
            for s in part..=top {
                let prev = t[j - 1][s - part].clone();
                if !prev.is_zero() {
                    t[j][s] += prev;
                }
            }
        }
    }
    (0..=top)
        .map(|s| t.iter().map(|row| &row[s]).sum())
        .collect()
}

/// Ladder tables `W_0..=W_m` sized for one `(m, n)` pair.
#[derive(Clone, Debug)]
pub struct GaussEngine {
    m: u32,
    n: u32,
    ladders: Vec<PartitionTable>,
}

impl GaussEngine {
    pub fn new(m: u32, n: u32) -> Self {
        let s_max = (m as usize * n as usize).max(1);
        let ladders = (0..=m)
            .map(|i| partition_dp(&GeneratorSet::ladder(i), s_max).expect("ladders are positive"))
            .collect();
        Self { m, n, ladders }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn ladder(&self, i: u32) -> &PartitionTable {
        &self.ladders[i as usize]
    }

    fn conv(&self, a: u32, b: u32, s: i64) -> Integer {
        convolve(self.ladder(a), self.ladder(b), s).expect("tables cover 0..=mn")
    }

    fn top(&self) -> i64 {
        i64::from(self.m) * i64::from(self.n)
    }

    /// `(-1)^(m-i) W(n i - s - s_{m-i}, {1..i} u {1..m-i})`.
    pub fn term(&self, i: u32, s: i64) -> Result<Integer> {
        if i == 0 || i > self.m {
            return Err(Error::InvalidParameter(format!(
                "term index {i} outside 1..={}",
                self.m
            )));
        }
        let arg = i64::from(self.n) * i64::from(i) - s - ladder_sum(self.m - i);
        if arg > self.top() {
            return Err(Error::InvalidParameter(format!(
                "s = {s} is below the coefficient range"
            )));
        }
        Ok(sign(self.m - i) * self.conv(i, self.m - i, arg))
    }

    /// `P_m^n(s) = W_m(s) + sum_{i=1}^{m-1} (-1)^i (W_{m-i} * W_i)(s - n i - s_i)`;
    /// zero outside `0..=mn`.
    pub fn coeff(&self, s: i64) -> Integer {
        if s < 0 || s > self.top() {
            return Integer::zero();
        }
        let n = i64::from(self.n);
        let mut total = self.ladder(self.m).value(s).expect("table covers s");
        for i in 1..self.m {
            let arg = s - n * i64::from(i) - ladder_sum(i);
            if arg >= 0 {
                total += sign(i) * self.conv(self.m - i, i, arg);
            }
        }
        total
    }

    /// `P_m^n(s)` as the sum of all `m` terms.
    pub fn coeff_via_terms(&self, s: i64) -> Integer {
        if s < 0 || s > self.top() {
            return Integer::zero();
        }
        (1..=self.m).map(|i| self.term(i, s).expect("valid index")).sum()
    }

    pub fn row(&self) -> Vec<Integer> {
        (0..=self.top()).map(|s| self.coeff(s)).collect()
    }

    /// Chambers `r` with `(r-1) n <= s <= r n`; two at a shared boundary.
    pub fn chambers_of(&self, s: i64) -> Vec<u32> {
        let n = i64::from(self.n);
        (1..=self.m)
            .filter(|&r| (i64::from(r) - 1) * n <= s && s <= i64::from(r) * n)
            .collect()
    }

    fn check_chamber(&self, r: u32, s: i64) -> Result<()> {
        let n = i64::from(self.n);
        let (lower, upper) = ((i64::from(r) - 1) * n, i64::from(r) * n);
        if r == 0 || r > self.m || s < lower || s > upper {
            return Err(Error::OutsideChamber {
                r,
                s,
                lower,
                upper,
                expected: self.chambers_of(s),
            });
        }
        Ok(())
    }

    /// Chamber sum counted from the top:
    /// `W_m(mn - s) + sum_{i=r}^{m-1} (-1)^(m-i) (W_i * W_{m-i})(n i - s - s_{m-i})`.
    pub fn chamber_from_top(&self, r: u32, s: i64) -> Result<Integer> {
        self.check_chamber(r, s)?;
        let n = i64::from(self.n);
        let mut total = self.ladder(self.m).value(self.top() - s)?;
        for i in r..self.m {
            let arg = n * i64::from(i) - s - ladder_sum(self.m - i);
            total += sign(self.m - i) * self.conv(i, self.m - i, arg);
        }
        Ok(total)
    }

    /// Chamber sum counted from the bottom:
    /// `W_m(s) + sum_{i=1}^{r-1} (-1)^i (W_{m-i} * W_i)(s - n i - s_i)`.
    pub fn chamber_from_bottom(&self, r: u32, s: i64) -> Result<Integer> {
        self.check_chamber(r, s)?;
        let n = i64::from(self.n);
        let mut total = self.ladder(self.m).value(s)?;
        for i in 1..r {
            let arg = s - n * i64::from(i) - ladder_sum(i);
            total += sign(i) * self.conv(self.m - i, i, arg);
        }
        Ok(total)
    }

    /// Both chamber forms; they must agree.
    pub fn chamber(&self, r: u32, s: i64) -> Result<Integer> {
        let top = self.chamber_from_top(r, s)?;
        let bottom = self.chamber_from_bottom(r, s)?;
        if top != bottom {
            return Err(Error::ChamberMismatch {
                m: self.m,
                n: self.n,
                r,
                s,
            });
        }
        Ok(top)
    }

    /// Chamber and argument of the maximal coefficient.
    pub fn max_location(&self) -> (u32, i64) {
        max_location(self.m, self.n)
    }

    pub fn max_coeff(&self) -> Result<Integer> {
        let (r, s) = self.max_location();
        self.chamber(r, s)
    }
}

/// `(chamber, s)` of the maximal coefficient: `m = 2k` uses chamber `k + 1` at
/// `s = k n`; `m = 2k - 1` uses chamber `k` at `s = (2k-1) r` for `n = 2r`
/// and at `s = 2kr - k - r + 1` for `n = 2r - 1`.
pub fn max_location(m: u32, n: u32) -> (u32, i64) {
    let (m64, n64) = (i64::from(m), i64::from(n));
    if m % 2 == 0 {
        let k = m / 2;
        (k + 1, i64::from(k) * n64)
    } else {
        let k = (m + 1) / 2;
        let k64 = i64::from(k);
        if n % 2 == 0 {
            (k, m64 * (n64 / 2))
        } else {
            let r = (n64 + 1) / 2;
            (k, 2 * k64 * r - k64 - r + 1)
        }
    }
}

pub fn term_w(m: u32, n: u32, i: u32, s: i64) -> Result<Integer> {
    GaussEngine::new(m, n).term(i, s)
}

pub fn gauss_coeff(m: u32, n: u32, s: i64) -> Integer {
    GaussEngine::new(m, n).coeff(s)
}

pub fn gauss_chamber(m: u32, n: u32, r: u32, s: i64) -> Result<Integer> {
    GaussEngine::new(m, n).chamber(r, s)
}

/// Maximal coefficient `P_m^n(ceil(mn / 2))`, routed through its chamber.
pub fn max_coeff(m: u32, n: u32) -> Result<Integer> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    GaussEngine::new(m, n).max_coeff()
}
