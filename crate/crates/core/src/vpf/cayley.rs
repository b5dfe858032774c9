use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::DoubleSystem;
use crate::error::{Error, Result};
use crate::exactnum::Integer;
use crate::partition::{signed_partition, GeneratorSet};

/// Residue restriction `sum_j weights[j] * y_j == target (mod modulus)` on the
/// solutions counted by a reduction term.
///
/// Eliminating column `i` leaves `d_i . y = L_i`, which recovers an integral
/// `x_i` only when `beta_i` divides `rho - sum_j beta_j y_j`. For a primitive
/// column (`gcd(b_i, beta_i) = 1`) this holds automatically and no
/// congruence is attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub modulus: u64,
    pub weights: Vec<i64>,
    pub target: i64,
}

/// Contribution of one eliminated column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTerm {
    /// 1-based column index in the oriented matrix.
    pub index: usize,
    /// `L_i = r beta_i - b_i rho`.
    pub l_value: i64,
    /// `d_ij = b_j beta_i - b_i beta_j` for `j != i`.
    pub generators: GeneratorSet,
    /// `L_i >= 0`.
    pub active: bool,
    pub congruence: Option<Congruence>,
}

impl ReductionTerm {
    /// The term as published: `W(L_i, d_i)` in the signed sense, zero when
    /// inactive.
    pub fn evaluate_literal(&self) -> Integer {
        if !self.active {
            return Integer::zero();
        }
        signed_partition(self.l_value, &self.generators)
    }

    /// Signed count including the congruence restriction.
    pub fn evaluate(&self) -> Integer {
        if !self.active {
            return Integer::zero();
        }
        match &self.congruence {
            None => signed_partition(self.l_value, &self.generators),
            Some(c) => {
                let flipped = FlippedTerm::new(&self.generators, Some(c));
                let amount = self.l_value - flipped.shift;
                if amount < 0 {
                    return Integer::zero();
                }
                let table = flipped.table(amount as usize);
                flipped.read(&table, amount as usize, c.target)
            }
        }
    }
}

/// A term with negative generators turned positive: each `-a` becomes `a`
/// with its weight negated, shifting the amount by `a`, the residue target by
/// the old weight, and flipping the sign.
struct FlippedTerm {
    generators: Vec<usize>,
    weights: Vec<i64>,
    modulus: usize,
    shift: i64,
    target_shift: i64,
    negative: bool,
}

impl FlippedTerm {
    fn new(d: &GeneratorSet, congruence: Option<&Congruence>) -> Self {
        let modulus = congruence.map_or(1, |c| c.modulus as usize);
        let mut out = Self {
            generators: Vec::with_capacity(d.count()),
            weights: Vec::with_capacity(d.count()),
            modulus,
            shift: 0,
            target_shift: 0,
            negative: false,
        };
        for (j, g) in d.iter().enumerate() {
            let w = congruence.map_or(0, |c| c.weights[j]);
            if g < 0 {
                out.generators.push((-g) as usize);
                out.weights.push(-w);
                out.shift += -g;
                out.target_shift += w;
                out.negative = !out.negative;
            } else {
                out.generators.push(g as usize);
                out.weights.push(w);
            }
        }
        out
    }

    /// `T[x * modulus + c]`: number of `y >= 0` with `sum g y = x` and
    /// weighted residue `c`.
    fn table(&self, max_amount: usize) -> Vec<Integer> {
        let q = self.modulus;
        let mut t = vec![Integer::zero(); (max_amount + 1) * q];
        t[0] = Integer::one();
        for (&g, &w) in self.generators.iter().zip(&self.weights) {
            let w = w.rem_euclid(q as i64) as usize;
            for x in g..=max_amount {
                for c in 0..q {
                    let prev = &t[(x - g) * q + c];
                    if !prev.is_zero() {
                        let prev = prev.clone();
                        t[x * q + (c + w) % q] += prev;
                    }
                }
            }
        }
        t
    }

    fn read(&self, table: &[Integer], amount: usize, target: i64) -> Integer {
        let q = self.modulus as i64;
        let c = (target + self.target_shift).rem_euclid(q) as usize;
        let v = table[amount * self.modulus + c].clone();
        if self.negative {
            -v
        } else {
            v
        }
    }
}

/// Reduction terms for `sys`, one per column with `beta_i > 0` in the
/// oriented matrix. Columns with `beta_i = 0` have `L_i = -b_i rho <= 0` and
/// are dropped.
pub fn cayley_reduce(sys: &DoubleSystem) -> Result<Vec<ReductionTerm>> {
    let (sys, _) = sys.oriented();
    let cols: Vec<(i64, i64)> = sys.columns().collect();
    check_non_proportional(&cols)?;
    let (r, rho) = sys.rhs();
    let mut terms = Vec::new();
    for (i, &(b, beta)) in cols.iter().enumerate() {
        if beta == 0 {
            continue;
        }
        let mut gens = Vec::with_capacity(cols.len() - 1);
        let mut weights = Vec::with_capacity(cols.len() - 1);
        for (j, &(bj, betaj)) in cols.iter().enumerate() {
            if j != i {
                gens.push(bj * beta - b * betaj);
                weights.push(betaj);
            }
        }
        let l_value = r * beta - b * rho;
        let congruence = (b.gcd(&beta) != 1).then(|| Congruence {
            modulus: beta as u64,
            weights,
            target: rho,
        });
        terms.push(ReductionTerm {
            index: i + 1,
            l_value,
            generators: GeneratorSet::new(gens).expect("non-proportional columns"),
            active: l_value >= 0,
            congruence,
        });
    }
    Ok(terms)
}

fn check_non_proportional(cols: &[(i64, i64)]) -> Result<()> {
    for (i, &(bi, betai)) in cols.iter().enumerate() {
        for (j, &(bj, betaj)) in cols.iter().enumerate().skip(i + 1) {
            if betai > 0 && betaj > 0 && bj * betai == bi * betaj {
                return Err(Error::DegenerateSystem {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }
    Ok(())
}

/// Solution count as the sum of the active reduction terms.
pub fn vpf_cayley(sys: &DoubleSystem) -> Result<Integer> {
    Ok(cayley_reduce(sys)?.iter().map(ReductionTerm::evaluate).sum())
}

/// The reduction without congruence restrictions: `sum_i W(L_i, d_i)` over
/// active terms. Exact when every column with `beta_i > 0` is primitive.
pub fn vpf_cayley_literal(sys: &DoubleSystem) -> Result<Integer> {
    Ok(cayley_reduce(sys)?
        .iter()
        .map(ReductionTerm::evaluate_literal)
        .sum())
}

/// Reduction of one matrix precomputed for a whole grid of right-hand sides
/// `0..=r_max` by `0..=rho_max`.
pub struct CayleyGrid {
    terms: Vec<GridTerm>,
    swapped: bool,
}

struct GridTerm {
    b: i64,
    beta: i64,
    flipped: FlippedTerm,
    table: Vec<Integer>,
}

impl CayleyGrid {
    pub fn new(sys: &DoubleSystem, r_max: i64, rho_max: i64) -> Result<Self> {
        let (oriented, swapped) = sys.oriented();
        // amounts never exceed r * beta_i in the oriented matrix
        let r_bound = if swapped { rho_max } else { r_max };
        // the reduction depends on the matrix only through its columns
        let probe = oriented.with_rhs(0, 0)?;
        let reduced = cayley_reduce(&probe)?;
        let cols: Vec<(i64, i64)> = oriented.columns().collect();
        let terms = reduced
            .into_iter()
            .map(|t| {
                let (b, beta) = cols[t.index - 1];
                let flipped = FlippedTerm::new(&t.generators, t.congruence.as_ref());
                let max_amount = (r_bound * beta - flipped.shift).max(0) as usize;
                let table = flipped.table(max_amount);
                GridTerm {
                    b,
                    beta,
                    flipped,
                    table,
                }
            })
            .collect();
        Ok(Self { terms, swapped })
    }

    /// Solution count at `(r, rho)` in the original orientation.
    pub fn count(&self, r: i64, rho: i64) -> Integer {
        let (r, rho) = if self.swapped { (rho, r) } else { (r, rho) };
        let mut total = Integer::zero();
        for t in &self.terms {
            let amount = r * t.beta - t.b * rho - t.flipped.shift;
            if amount < 0 {
                continue;
            }
            total += t.flipped.read(&t.table, amount as usize, rho);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::vpf::tests::sys;
    use crate::vpf::{vpf_oracle, vpf_oracle_table};
    use proptest::prelude::*;

    #[test]
    fn reduction_examples() {
        let terms = cayley_reduce(&sys(&[1, 1], &[1, 2], 3, 4)).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!((terms[0].index, terms[0].l_value, terms[0].active), (1, -1, false));
        assert_eq!((terms[1].index, terms[1].l_value, terms[1].active), (2, 2, true));
        assert_eq!(terms[1].generators.generators(), &[1]);

        let terms = cayley_reduce(&sys(&[1, 1], &[1, 2], 4, 3)).unwrap();
        assert_eq!((terms[0].l_value, terms[0].generators.generators()), (1, &[-1][..]));
        assert_eq!((terms[1].l_value, terms[1].generators.generators()), (5, &[1][..]));
        assert!(terms.iter().all(|t| t.congruence.is_none()));

        let terms = cayley_reduce(&sys(&[1, 1, 1], &[0, 1, 2], 5, 4)).unwrap();
        assert_eq!(terms.iter().map(|t| t.index).collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn cayley_examples() {
        assert_eq!(vpf_cayley(&sys(&[1, 1], &[1, 2], 3, 4)).unwrap(), int(1));
        assert_eq!(vpf_cayley(&sys(&[1, 1], &[1, 2], 4, 3)).unwrap(), int(0));
        assert_eq!(vpf_cayley(&sys(&[1, 1], &[1, 2], 4, 6)).unwrap(), int(1));
        assert_eq!(vpf_cayley(&sys(&[1], &[1], 0, 0)).unwrap(), int(1));
    }

    #[test]
    fn proportional_columns_are_rejected() {
        let err = vpf_cayley(&sys(&[1, 2, 1], &[1, 2, 3], 4, 4)).unwrap_err();
        assert_eq!(err, Error::DegenerateSystem { first: 1, second: 2 });
        assert!(err.to_string().contains("degenerate system outside Cayley reduction scope"));
        // proportional columns with beta = 0 are dropped, not rejected
        assert!(vpf_cayley(&sys(&[1, 2, 1], &[0, 0, 1], 4, 4)).is_ok());
    }

    #[test]
    fn non_primitive_column_needs_congruence() {
        let s = sys(&[1, 2], &[2, 2], 2, 1);
        assert_eq!(vpf_oracle(&s), int(0));
        assert_eq!(vpf_cayley_literal(&s).unwrap(), int(-1));
        assert_eq!(vpf_cayley(&s).unwrap(), int(0));
        let s = sys(&[1, 2], &[3, 2], 2, 0);
        assert_eq!(vpf_cayley_literal(&s).unwrap(), int(-1));
        assert_eq!(vpf_cayley(&s).unwrap(), int(0));
    }

    #[test]
    fn zero_rows_keep_a_reducible_orientation() {
        // a zero top row stays on top; a zero bottom row moves up
        for s in [sys(&[0], &[1], 0, 0), sys(&[0], &[3], 0, 6), sys(&[2], &[0], 4, 0), sys(&[2], &[0], 3, 0)] {
            assert_eq!(vpf_cayley(&s).unwrap(), vpf_oracle(&s), "{s:?}");
        }
        assert!(matches!(
            vpf_cayley(&sys(&[1, 2], &[0, 0], 3, 0)),
            Err(Error::DegenerateSystem { .. })
        ));
    }

    #[test]
    fn swapped_rows_give_the_same_count() {
        let s = sys(&[0, 1, 3], &[2, 1, 1], 7, 9);
        assert_eq!(vpf_cayley(&s).unwrap(), vpf_oracle(&s));
        assert_eq!(vpf_cayley(&s).unwrap(), vpf_cayley(&s.swapped()).unwrap());
    }

    fn double_system() -> impl Strategy<Value = DoubleSystem> {
        prop::collection::vec((0i64..=6, 1i64..=6), 1..=5)
            .prop_filter("non-proportional", |cols| {
                cols.iter().enumerate().all(|(i, a)| {
                    cols[i + 1..].iter().all(|b| a.0 * b.1 != a.1 * b.0)
                })
            })
            .prop_map(|cols| {
                let (top, bottom) = cols.into_iter().unzip();
                DoubleSystem::new(top, bottom, (0, 0)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn refined_reduction_matches_oracle(s in double_system()) {
            let grid = CayleyGrid::new(&s, 20, 20).unwrap();
            let table = vpf_oracle_table(&s, 20, 20);
            for r in 0..=20 {
                for rho in 0..=20 {
                    prop_assert_eq!(&grid.count(r, rho), &table[r as usize][rho as usize]);
                }
            }
            let point = s.with_rhs(13, 11).unwrap();
            prop_assert_eq!(vpf_cayley(&point).unwrap(), vpf_oracle(&point));
        }

        #[test]
        fn literal_reduction_exact_on_primitive_columns(s in double_system()) {
            let primitive = s.columns().all(|(b, beta)| b.gcd(&beta) == 1);
            prop_assume!(primitive);
            for (r, rho) in [(0, 0), (5, 7), (12, 3), (9, 16), (14, 14)] {
                let p = s.with_rhs(r, rho).unwrap();
                prop_assert_eq!(vpf_cayley_literal(&p).unwrap(), vpf_oracle(&p));
            }
        }
    }
}
