//! Published closed forms for `m = 3, 4` coefficients and for maximal
//! coefficients with `m = 3..=6`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::Zero;

use super::max_coeff;
use crate::error::{Error, Result};
use crate::exactnum::trig::{alternating, cos_pi};
use crate::exactnum::{rat, rat_int, Rational};

fn cos_exact(k: i64, d: i64) -> Rational {
    cos_pi(k, d).expect("angle is a multiple of pi/6 or pi/4")
}

/// `W(s, {1, 2}) = s/2 + 3/4 + (-1)^s / 4`.
fn w2(s: i64) -> Rational {
    rat(s, 2) + rat(3, 4) + alternating(s) * rat(1, 4)
}

/// `sum_{k=0}^{s} W(k, {1, 2}) = (s+1)(s+3)/4 + (1 + cos(pi s))/8`.
fn sigma2(s: i64) -> Rational {
    rat((s + 1) * (s + 3), 4) + (rat_int(1) + alternating(s)) * rat(1, 8)
}

/// `W(s, {1, 2, 3})` with its periodic terms.
fn w3(s: i64) -> Rational {
    rat(47, 72) + rat(s, 2) + rat(s * s, 12) + alternating(s) * rat(1, 8)
        + cos_exact(2 * s, 3) * rat(2, 9)
}

/// `W(s, {1, 2, 3, 4})` with its periodic terms.
fn w4(s: i64) -> Rational {
    rat(2 * s * s * s + 30 * s * s + 135 * s + 175, 288)
        + alternating(s) * rat(s + 5, 32)
        + cos_exact(s, 2) * rat(1, 8)
        + (cos_exact(2 * s, 3) - cos_exact(2 * (s + 1), 3)) * rat(2, 27)
}

/// Three-branch formula for `P_3^n(s)`; zero outside `0..=3n`.
pub fn closed_p3(n: i64, s: i64) -> Rational {
    if s < 0 || s > 3 * n {
        Rational::zero()
    } else if s <= n {
        w3(s)
    } else if s <= 2 * n {
        w3(3 * n - s) - sigma2(2 * n - s - 1)
    } else {
        w3(3 * n - s)
    }
}

/// Four-term formula for `P_4^n(s)`; zero outside `0..=4n`.
pub fn closed_p4(n: i64, s: i64) -> Rational {
    if s < 0 || s > 4 * n {
        return Rational::zero();
    }
    let mut total = w4(s);
    for k in 0..=s - n - 1 {
        total -= w3(k);
    }
    let a = s - 2 * n - 3;
    for k in 0..=a {
        total += w2(k) * w2(a - k);
    }
    let b = s - 3 * n - 6;
    for k in 0..=b {
        total -= w3(b - k);
    }
    total
}

/// The printed maximal coefficient for `m = 3`, trigonometric term included:
/// `((r+1)^2 + cos(pi r / 2)) / 2` for `n = 2r`, `r (r+1) / 2` for `n = 2r - 1`.
pub fn printed_p3(n: i64) -> Rational {
    if n % 2 == 0 {
        let r = n / 2;
        (rat_int((r + 1) * (r + 1)) + cos_exact(r, 2)) * rat(1, 2)
    } else {
        let r = (n + 1) / 2;
        rat(r * (r + 1), 2)
    }
}

/// A published maximal-coefficient form: exact non-periodic part in the
/// variable `v` (`n`, or `r` with `n = 2r` / `n = 2r - 1`), with the
/// periodic remainder tabulated over one period of `v`.
struct MaxForm {
    period: i64,
    /// The form's variable for a given `n`.
    variable: fn(i64) -> i64,
    base: fn(i64) -> Rational,
    /// Smallest `n` the form covers.
    first_n: fn(i64) -> i64,
}

fn half_even(n: i64) -> i64 {
    n / 2
}

fn half_odd(n: i64) -> i64 {
    (n + 1) / 2
}

fn identity(n: i64) -> i64 {
    n
}

fn form(m: u32, n: i64) -> Result<(usize, MaxForm)> {
    let even = n % 2 == 0;
    Ok(match (m, even) {
        (3, true) => (
            0,
            MaxForm {
                period: 4,
                variable: half_even,
                base: |r| rat((r + 1) * (r + 1), 2),
                first_n: |r| 2 * r,
            },
        ),
        (3, false) => (
            1,
            MaxForm {
                period: 1,
                variable: half_odd,
                base: |r| rat(r * (r + 1), 2),
                first_n: |r| 2 * r - 1,
            },
        ),
        (4, _) => (
            2,
            MaxForm {
                period: 6,
                variable: identity,
                base: |n| {
                    let t = 2 * n + 5;
                    rat(t * t * t, 288) + rat(t, 32)
                },
                first_n: identity,
            },
        ),
        (5, true) => (
            3,
            MaxForm {
                period: 12,
                variable: half_even,
                base: |r| {
                    rat((23 * r * r + 69 * r + 49) * (r + 1) * (r + 2), 288)
                        + rat(425, 1728)
                        + alternating(r) * rat(3 * (2 * r + 3), 64)
                },
                first_n: |r| 2 * r,
            },
        ),
        (5, false) => (
            4,
            MaxForm {
                period: 12,
                variable: half_odd,
                base: |r| rat((23 * r * r + 46 * r + 36) * r * (r + 2), 288) - rat(37, 1728),
                first_n: |r| 2 * r - 1,
            },
        ),
        (6, _) => (
            5,
            MaxForm {
                period: 60,
                variable: identity,
                base: |n| {
                    let poly = (2 * n + 7)
                        * (66 * n.pow(4) + 924 * n.pow(3) + 4606 * n * n + 9604 * n + 12061);
                    rat(poly, 172800) + alternating(n) * rat(2 * n * n + 14 * n + 55, 256)
                },
                first_n: identity,
            },
        ),
        _ => {
            return Err(Error::UnsupportedM {
                m,
                reason: "closed maximal-coefficient forms exist for m = 3, 4, 5, 6",
            })
        }
    })
}

static TABLES: [OnceLock<Vec<Rational>>; 6] = [const { OnceLock::new() }; 6];

/// Periodic remainder `max_coeff - base` on the first full period of the
/// form's variable, indexed by `variable mod period`.
fn residue_table(m: u32, slot: usize, f: &MaxForm) -> &'static [Rational] {
    TABLES[slot].get_or_init(|| {
        let mut table = vec![Rational::zero(); f.period as usize];
        for v in 1..=f.period {
            let n = (f.first_n)(v);
            let exact = Rational::from_integer(max_coeff(m, n as u32).expect("n >= 1"));
            table[v.rem_euclid(f.period) as usize] = exact - (f.base)(v);
        }
        table
    })
}

/// Maximal coefficient `p_m^n` from the published non-periodic part plus a
/// cached residue table for the periodic part (`m = 3..=6`).
pub fn closed_max(m: u32, n: i64) -> Result<Rational> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (slot, f) = form(m, n)?;
    let v = (f.variable)(n);
    let table = residue_table(m, slot, &f);
    Ok((f.base)(v) + &table[v.rem_euclid(f.period) as usize])
}

/// The published maximal-coefficient expressions evaluated in floating
/// point, trigonometric terms included.
pub fn printed_max(m: u32, n: i64) -> Result<f64> {
    let x = n as f64;
    let c = |t: f64| (PI * t).cos();
    let sn = |t: f64| (PI * t).sin();
    Ok(match m {
        3 if n % 2 == 0 => {
            let r = x / 2.0;
            0.5 * ((r + 1.0).powi(2) + c(r / 2.0))
        }
        3 => {
            let r = (x + 1.0) / 2.0;
            r * (r + 1.0) / 2.0
        }
        4 => {
            (2.0 * x + 5.0).powi(3) / 288.0
                + (2.0 * x + 5.0) / 32.0
                + 3.0 / 16.0 * c(x)
                + 4.0 / 27.0 * c(2.0 * x / 3.0)
                + 4.0 / 27.0 * sn((8.0 * x + 1.0) / 6.0)
        }
        5 if n % 2 == 0 => {
            let r = x / 2.0;
            (23.0 * r * r + 69.0 * r + 49.0) * (r + 1.0) * (r + 2.0) / 288.0 + 425.0 / 1728.0
                + 3.0 * (2.0 * r + 3.0) / 64.0 * c(r)
                + 4.0 / 27.0 * c(2.0 * r / 3.0)
                + (c(r / 2.0) + sn(r / 2.0)) / 8.0
        }
        5 => {
            let r = (x + 1.0) / 2.0;
            (23.0 * r * r + 46.0 * r + 36.0) * r * (r + 2.0) / 288.0 - 37.0 / 1728.0
                - c(r) / 64.0
                - sn(r / 2.0) / 8.0
                + 2.0 / 27.0 * c(2.0 * r / 3.0)
                - 2.0 / 27.0 * sn((8.0 * r + 1.0) / 6.0)
        }
        6 => {
            // the printed quarter-period term is written in r; it is read as n
            let r = x;
            (2.0 * x + 7.0)
                * (66.0 * x.powi(4) + 924.0 * x.powi(3) + 4606.0 * x * x + 9604.0 * x + 12061.0)
                / 172800.0
                + (2.0 * x * x + 14.0 * x + 55.0) / 256.0 * c(x)
                + (c(r / 2.0) - sn(r / 2.0)) / 16.0
                + 4.0 / 81.0 * c(2.0 * x / 3.0)
                + 4.0 / 81.0 * sn((4.0 * x + 1.0) / 6.0)
                + 8.0 / 125.0 * (c(2.0 * x / 5.0) + c(4.0 * x / 5.0))
                + 4.0 / 125.0
                    * (-c((2.0 * x + 1.0) / 5.0)
                        + c((4.0 * x + 1.0) / 5.0)
                        + 2.0 * c((8.0 * x + 1.0) / 5.0))
                + 4.0 / 125.0
                    * (sn((4.0 * x + 1.0) / 10.0) + 2.0 * sn((8.0 * x + 1.0) / 10.0)
                        - sn((12.0 * x + 1.0) / 10.0))
        }
        _ => {
            return Err(Error::UnsupportedM {
                m,
                reason: "printed maximal-coefficient forms exist for m = 3, 4, 5, 6",
            })
        }
    })
}
