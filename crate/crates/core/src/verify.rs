//! Cross-checks of every fast route against its brute-force counterpart.
//!
//! [`run`] executes criteria 1 to 9 and returns a [`Report`]. `Level::Full`
//! uses the acceptance ranges; `Level::Quick` shrinks the ranges so the whole
//! run stays well under a minute in a debug build.

use std::fmt;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::exactnum::{factorial, int, rat, Integer, Rational};
use crate::gausspoly::{
    closed_max, closed_p3, closed_p4, eulerian_a, eulerian_b, eulerian_b_recurrence, gauss_coeff,
    gauss_oracle, leading_term, max_coeff, poly_part_max, poly_part_max_chamber, printed_max,
    printed_max_poly, printed_p3, EulerianTable, GaussEngine, Parity, Variable,
};
use crate::partition::{printed_value, rational_to_f64};
use crate::partition::{partition_dp, polynomial_part, ClosedForm};
use crate::vpf::{vpf_cayley_literal, vpf_oracle_table, CayleyGrid, DoubleSystem};

/// Absolute tolerance for published floating-point expressions.
pub const PRINTED_TOLERANCE: f64 = 1e-9;
/// Bound on `|max_coeff - poly_part_max|` for `m <= 6`.
pub const PERIODIC_BOUND: i64 = 1;
/// Seed of the random system generator in criterion 2.
pub const VPF_SEED: u64 = 0x5eed_2d0c;

const MAX_RECORDED: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
    pub millis: u128,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {}: {} checks, {} failed ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks,
            self.failure_count,
            self.millis
        )?;
        for failure in &self.failures {
            write!(f, "\n      fail: {failure}")?;
        }
        for note in &self.notes {
            write!(f, "\n      note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub level: Level,
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.criteria {
            writeln!(f, "{c}")?;
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} criteria passed", self.criteria.len())
    }
}

struct Tally {
    checks: u64,
    failure_count: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(describe());
            }
        }
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }
}

pub const TITLES: [&str; 9] = [
    "Gaussian coefficients: chamber convolutions vs oracle",
    "Double vector partitions: column elimination vs 2-D DP",
    "Closed quasipolynomials",
    "Closed forms for m = 3, 4",
    "Maximal coefficients",
    "Polynomial parts of maximal coefficients",
    "Leading terms",
    "Gaussian coefficient properties",
    "Eulerian numbers",
];

/// Runs one criterion (`1..=9`).
pub fn run_criterion(id: u8, level: Level) -> Option<CriterionReport> {
    let body: fn(&mut Tally, Level) = match id {
        1 => gauss_oracle_equivalence,
        2 => vpf_oracle_equivalence,
        3 => closed_quasipolynomials,
        4 => closed_small_m,
        5 => maximal_coefficients,
        6 => polynomial_parts,
        7 => leading_terms,
        8 => gauss_properties,
        9 => eulerian_checks,
        _ => return None,
    };
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally, level);
    Some(CriterionReport {
        id,
        title: TITLES[id as usize - 1],
        passed: tally.failure_count == 0 && tally.checks > 0,
        checks: tally.checks,
        failure_count: tally.failure_count,
        failures: tally.failures,
        notes: tally.notes,
        millis: start.elapsed().as_millis(),
    })
}

pub fn run(level: Level) -> Report {
    Report {
        level,
        criteria: (1..=9).filter_map(|id| run_criterion(id, level)).collect(),
    }
}

fn row_max(row: &[Integer]) -> Integer {
    row.iter().max().cloned().unwrap_or_default()
}

fn gauss_oracle_equivalence(t: &mut Tally, level: Level) {
    let top = level.pick(6, 8);
    for m in 1..=top {
        for n in 1..=top {
            let oracle = gauss_oracle(m, n);
            let engine = GaussEngine::new(m, n);
            for (s, expected) in oracle.iter().enumerate() {
                let got = engine.coeff(s as i64);
                t.check(&got == expected, || format!("m={m} n={n} s={s}: {got} != {expected}"));
            }
        }
    }
}

fn random_system(rng: &mut StdRng) -> DoubleSystem {
    loop {
        let m = rng.gen_range(2..=5);
        let top: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=6)).collect();
        let bottom: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=6)).collect();
        let proportional = (0..m).any(|i| (i + 1..m).any(|j| top[i] * bottom[j] == top[j] * bottom[i]));
        if !proportional {
            return DoubleSystem::new(top, bottom, (0, 0)).expect("valid by construction");
        }
    }
}

fn vpf_oracle_equivalence(t: &mut Tally, level: Level) {
    let systems = level.pick(40, 200);
    let grid = level.pick(20, 40);
    let literal_grid = 12;
    let mut rng = StdRng::seed_from_u64(VPF_SEED);
    let (mut literal_bad_systems, mut literal_bad_primitive) = (0, 0);
    for _ in 0..systems {
        let sys = random_system(&mut rng);
        let oracle = vpf_oracle_table(&sys, grid as usize, grid as usize);
        let fast = match CayleyGrid::new(&sys, grid, grid) {
            Ok(g) => g,
            Err(e) => {
                t.check(false, || format!("{sys:?}: {e}"));
                continue;
            }
        };
        for r in 0..=grid {
            for rho in 0..=grid {
                let got = fast.count(r, rho);
                let expected = &oracle[r as usize][rho as usize];
                t.check(&got == expected, || {
                    format!("top={:?} bottom={:?} rhs=({r},{rho}): {got} != {expected}", sys.top(), sys.bottom())
                });
            }
        }
        let literal_ok = (0..=literal_grid).all(|r| {
            (0..=literal_grid).all(|rho| {
                let s = sys.with_rhs(r, rho).expect("nonnegative rhs");
                vpf_cayley_literal(&s).ok().as_ref() == Some(&oracle[r as usize][rho as usize])
            })
        });
        if !literal_ok {
            literal_bad_systems += 1;
            let (oriented, _) = sys.oriented();
            if oriented
                .columns()
                .all(|(b, beta)| beta == 0 || crate::exactnum::gcd(b, beta) == 1)
            {
                literal_bad_primitive += 1;
            }
        }
    }
    t.note(format!(
        "unrefined sum of W(L_i, d_i): {literal_bad_systems}/{systems} systems differ from the DP on the 0..={literal_grid} grid, {literal_bad_primitive} of them with only primitive columns"
    ));
}

fn closed_quasipolynomials(t: &mut Tally, level: Level) {
    let s_max = level.pick(100, 200);
    let printed_max_s = 60;
    for form in ClosedForm::ALL {
        let qp = form.quasipolynomial();
        let dp = partition_dp(&form.generators(), s_max).expect("positive generators");
        for s in 0..=s_max as i64 {
            let got = qp.evaluate(s);
            let expected = Rational::from_integer(dp.value(s).expect("in range"));
            t.check(got == expected, || format!("{form} s={s}: {got} != {expected}"));
        }
        let exact_part = polynomial_part(&form.generators()).expect("positive generators");
        t.check(form.printed_polynomial_part() == exact_part, || {
            format!("{form}: printed non-periodic part differs from the Bernoulli polynomial part")
        });
        for s in 0..=printed_max_s {
            let printed = printed_value(form, s);
            let exact = rational_to_f64(&Rational::from_integer(dp.value(s).expect("in range")));
            let err = (printed - exact).abs();
            t.check(err <= PRINTED_TOLERANCE, || format!("{form} s={s}: printed {printed} vs {exact}"));
        }
    }
}

fn closed_small_m(t: &mut Tally, level: Level) {
    let (n3, n4) = level.pick((12, 10), (20, 15));
    for (m, n_max, f) in [(3u32, n3, closed_p3 as fn(i64, i64) -> Rational), (4, n4, closed_p4)] {
        for n in 1..=n_max {
            for (s, v) in gauss_oracle(m, n).into_iter().enumerate() {
                let got = f(i64::from(n), s as i64);
                let expected = Rational::from_integer(v);
                t.check(got == expected, || format!("P_{m}^{n}({s}): {got} != {expected}"));
            }
        }
    }
}

fn maximal_coefficients(t: &mut Tally, level: Level) {
    let (n_small, n_large) = level.pick((12, 8), (20, 12));
    for m in 3..=6u32 {
        let n_max = if m <= 4 { n_small } else { n_large };
        for n in 1..=n_max {
            let expected = row_max(&gauss_oracle(m, n));
            let got = closed_max(m, i64::from(n));
            t.check(got.as_ref().ok() == Some(&Rational::from_integer(expected.clone())), || {
                format!("closed p_{m}^{n}: {got:?} != {expected}")
            });
            let chamber = max_coeff(m, n);
            t.check(chamber.as_ref().ok() == Some(&expected), || {
                format!("chamber p_{m}^{n}: {chamber:?} != {expected}")
            });
        }
    }
    for (m, n, v) in [(3, 2, 2), (4, 2, 3)] {
        let got = closed_max(m, n);
        t.check(got.as_ref().ok() == Some(&rat(v, 1)), || format!("anchor p_{m}^{n}: {got:?} != {v}"));
    }

    let p3_off: Vec<u32> = (1..=n_small)
        .filter(|n| n % 2 == 0)
        .filter(|&n| Rational::from_integer(row_max(&gauss_oracle(3, n))) != printed_p3(i64::from(n)))
        .collect();
    t.note(format!("published trigonometric p_3 is off at even n = {p3_off:?} (n/2 = 2 mod 4)"));
    for m in 4..=6u32 {
        let n_max = if m <= 4 { n_small } else { n_large };
        let worst = (1..=n_max)
            .map(|n| {
                let exact = rational_to_f64(&Rational::from_integer(row_max(&gauss_oracle(m, n))));
                (printed_max(m, i64::from(n)).unwrap_or(f64::NAN) - exact).abs()
            })
            .fold(0.0, f64::max);
        t.note(format!("published trigonometric p_{m}: largest deviation {worst:.3e} for n <= {n_max}"));
    }
}

fn polynomial_parts(t: &mut Tally, level: Level) {
    let n_max = level.pick(20, 20);
    for m in 2..=6u32 {
        for parity in [Parity::Even, Parity::Odd] {
            if m % 2 == 0 && parity == Parity::Odd {
                continue;
            }
            let double_sum = match poly_part_max(m, parity) {
                Ok(p) => p,
                Err(e) => {
                    t.check(false, || format!("m={m} {parity:?}: {e}"));
                    continue;
                }
            };
            let chamber = poly_part_max_chamber(m, parity);
            t.check(chamber.as_ref().ok() == Some(&double_sum), || {
                format!("m={m} {parity:?}: chamber substitution differs from the double sum")
            });
            let printed = printed_max_poly(m, parity).expect("published for m <= 6");
            t.check(printed.polynomial == double_sum.polynomial, || {
                let diff = &double_sum.polynomial - &printed.polynomial;
                format!("m={m} {parity:?}: published {printed}, computed {double_sum} (difference {})", diff.display_in(double_sum.variable.name()))
            });
        }
        let mut worst = (0.0f64, 0);
        for n in 1..=n_max {
            let parity = Parity::of(i64::from(n));
            let part = poly_part_max(m, parity).expect("m >= 2");
            let exact = Rational::from_integer(max_coeff(m, n).expect("valid chamber"));
            let gap = &exact - part.eval_at_n(i64::from(n));
            let size = rational_to_f64(&gap.abs());
            if size > worst.0 {
                worst = (size, n);
            }
            t.check(gap.abs() <= rat(PERIODIC_BOUND, 1), || {
                format!("m={m} n={n}: max_coeff - poly_part_max = {gap} ({:.3})", rational_to_f64(&gap))
            });
        }
        t.note(format!("m={m}: largest |max_coeff - poly_part_max| is {:.3} at n={}", worst.0, worst.1));
    }
}

fn leading_terms(t: &mut Tally, _level: Level) {
    let listed = [
        (2, rat(1, 2), Variable::N),
        (3, rat(1, 2), Variable::R),
        (4, rat(1, 36), Variable::N),
        (5, rat(23, 288), Variable::R),
        (6, rat(11, 14400), Variable::N),
    ];
    for (m, coefficient, variable) in listed {
        let lead = match leading_term(m) {
            Ok(l) => l,
            Err(e) => {
                t.check(false, || format!("m={m}: {e}"));
                continue;
            }
        };
        t.check(lead.coefficient == coefficient && lead.variable == variable && lead.exponent == m - 1, || {
            format!("m={m}: {} {}^{} != {coefficient} {}^{}", lead.coefficient, lead.variable.name(), lead.exponent, variable.name(), m - 1)
        });
        for parity in [Parity::Even, Parity::Odd] {
            let p = poly_part_max(m, parity).expect("m >= 2").polynomial;
            t.check(
                p.degree() == Some(m as usize - 1) && p.leading_coeff() == lead.coefficient,
                || format!("m={m} {parity:?}: polynomial part leads with {}", p.leading_coeff()),
            );
        }
    }
}

fn gauss_properties(t: &mut Tally, level: Level) {
    let top = level.pick(6, 8);
    for m in 1..=top {
        for n in 1..=top {
            let row = gauss_oracle(m, n);
            let mn = (m * n) as usize;
            t.check(row.len() == mn + 1 && row[0] == int(1) && row[mn] == int(1), || {
                format!("m={m} n={n}: endpoints")
            });
            t.check((1..=3).all(|k| gauss_coeff(m, n, (mn + k) as i64).is_zero()), || {
                format!("m={m} n={n}: nonzero beyond mn")
            });
            t.check(row == gauss_oracle(n, m), || format!("m={m} n={n}: not symmetric in m, n"));
            t.check(row.iter().eq(row.iter().rev()), || format!("m={m} n={n}: not palindromic"));
            // P(floor(mn/2) - s) = P(ceil(mn/2) + s)
            let (lo, hi) = (mn / 2, mn.div_ceil(2));
            t.check((0..=lo).all(|s| row[lo - s] == row[hi + s]), || {
                format!("m={m} n={n}: not centrally symmetric")
            });
            t.check((1..=lo).all(|s| row[s] >= row[s - 1]), || format!("m={m} n={n}: not unimodal"));
            t.check(row[lo] == row[hi] && row[hi] == row_max(&row), || {
                format!("m={m} n={n}: central values differ or are not maximal")
            });
        }
    }
    let top = level.pick(6, 7);
    for m in 1..=top {
        for n in 1..=top {
            let engine = GaussEngine::new(m, n);
            let mn = i64::from(m * n);
            for s in 0..=mn {
                t.check(engine.coeff_via_terms(s) == engine.coeff(s), || {
                    format!("m={m} n={n} s={s}: term sum differs from the convolution form")
                });
            }
            for r in 1..=m {
                let lower = (i64::from(r) - 1) * i64::from(n);
                for s in lower..=lower + i64::from(n) {
                    let here = engine.chamber(r, s);
                    t.check(here.as_ref().ok() == Some(&engine.coeff(s)), || {
                        format!("m={m} n={n} r={r} s={s}: {here:?}")
                    });
                    let mirror = engine.chamber(m + 1 - r, mn - s);
                    t.check(here.is_ok() && here.as_ref().ok() == mirror.as_ref().ok(), || {
                        format!("m={m} n={n} r={r} s={s}: mirror chamber gives {mirror:?}")
                    });
                }
                if r < m {
                    let s = i64::from(r) * i64::from(n);
                    let (left, right) = (engine.chamber(r, s), engine.chamber(r + 1, s));
                    t.check(left.is_ok() && left.as_ref().ok() == right.as_ref().ok(), || {
                        format!("m={m} n={n} boundary s={s}: {left:?} vs {right:?}")
                    });
                }
            }
        }
    }
}

fn eulerian_checks(t: &mut Tally, _level: Level) {
    let table = EulerianTable::new(12);
    t.check(table.type_b_consistent(), || "type B: explicit sum differs from the recurrence".into());
    for n in 0..=12u32 {
        for k in 0..=n {
            let (explicit, recurrence) = (eulerian_b(n, k), eulerian_b_recurrence(n, k));
            t.check(explicit == recurrence, || format!("B_{{{n},{k}}}: {explicit} != {recurrence}"));
        }
    }
    for n in 1..=12u32 {
        let row: Vec<Integer> = (1..=n).map(|k| eulerian_a(n, k)).collect();
        let sum: Integer = row.iter().sum();
        t.check(sum == factorial(u64::from(n)), || format!("A row {n} sums to {sum}"));
        t.check(row.iter().eq(row.iter().rev()), || format!("A row {n} is not palindromic"));
    }
}
