//! Closed forms of `W(s, d)` for ladder unions of total size up to six.
//!
//! The canonical representation is a [`QuasiPolynomial`] rebuilt from the
//! dynamic program. The published trigonometric expressions are kept as
//! `f64` evaluators ([`printed_value`]) and as exact non-periodic parts
//! ([`ClosedForm::printed_polynomial_part`]) for cross-checking.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::{partition_dp, GeneratorSet};
use crate::error::{Error, Result};
use crate::exactnum::{qp_interpolate, rat, Integer, Polynomial, QuasiPolynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    W2,
    W3,
    W4,
    W5,
    W6,
    W1u4,
    W2u3,
    W3u3,
    W2u4,
    W1u5,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 10] = [
        ClosedForm::W2,
        ClosedForm::W3,
        ClosedForm::W4,
        ClosedForm::W5,
        ClosedForm::W6,
        ClosedForm::W1u4,
        ClosedForm::W2u3,
        ClosedForm::W3u3,
        ClosedForm::W2u4,
        ClosedForm::W1u5,
    ];

    /// The two ladders `(a, b)` with generators `{1..a} ∪ {1..b}`.
    pub fn ladders(self) -> (u32, u32) {
        match self {
            ClosedForm::W2 => (2, 0),
            ClosedForm::W3 => (3, 0),
            ClosedForm::W4 => (4, 0),
            ClosedForm::W5 => (5, 0),
            ClosedForm::W6 => (6, 0),
            ClosedForm::W1u4 => (1, 4),
            ClosedForm::W2u3 => (2, 3),
            ClosedForm::W3u3 => (3, 3),
            ClosedForm::W2u4 => (2, 4),
            ClosedForm::W1u5 => (1, 5),
        }
    }

    pub fn generators(self) -> GeneratorSet {
        let (a, b) = self.ladders();
        GeneratorSet::ladder(a).union(&GeneratorSet::ladder(b))
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::W2 => "W2",
            ClosedForm::W3 => "W3",
            ClosedForm::W4 => "W4",
            ClosedForm::W5 => "W5",
            ClosedForm::W6 => "W6",
            ClosedForm::W1u4 => "W1∪4",
            ClosedForm::W2u3 => "W2∪3",
            ClosedForm::W3u3 => "W3∪3",
            ClosedForm::W2u4 => "W2∪4",
            ClosedForm::W1u5 => "W1∪5",
        }
    }

    /// Exact quasipolynomial: period `lcm(d)`, degree `m - 1`, interpolated
    /// from `m * period` dynamic-programming samples.
    pub fn quasipolynomial(self) -> QuasiPolynomial {
        let d = self.generators();
        let period = d.lcm();
        let degree = d.count() - 1;
        let n = (degree + 1) * period as usize;
        let table = partition_dp(&d, n).expect("ladder generators are positive");
        let samples: Vec<(i64, Rational)> = table
            .values()
            .iter()
            .enumerate()
            .map(|(s, v)| (s as i64, Rational::from_integer(v.clone())))
            .collect();
        qp_interpolate(&samples, period, degree).expect("enough samples per residue class")
    }

    /// The non-periodic part exactly as published.
    pub fn printed_polynomial_part(self) -> Polynomial {
        let (num, den, extra): (&[i64], i64, Rational) = match self {
            ClosedForm::W2 => (&[3, 2], 4, rat(0, 1)),
            ClosedForm::W3 => (&[47, 36, 6], 72, rat(0, 1)),
            ClosedForm::W4 => (&[175, 135, 30, 2], 288, rat(0, 1)),
            ClosedForm::W2u3 => (&[220, 279, 112, 18, 1], 288, rat(37, 1728)),
            ClosedForm::W1u4 => (&[465, 495, 166, 22, 1], 576, rat(25, 3456)),
            ClosedForm::W5 => (&[1687, 1275, 310, 30, 1], 2880, rat(41, 86400)),
            ClosedForm::W3u3 => (&[19650, 24299, 10440, 2020, 180, 6], 25920, rat(0, 1)),
            ClosedForm::W2u4 => (&[54275, 64458, 26130, 4720, 390, 12], 69120, rat(0, 1)),
            ClosedForm::W1u5 => (&[70888, 71325, 24000, 3560, 240, 6], 86400, rat(0, 1)),
            ClosedForm::W6 => (
                &[598731, 439810, 110250, 12320, 630, 12],
                1036800,
                rat(0, 1),
            ),
        };
        let p = Polynomial::from_i64(num).scale(&Rational::new(Integer::one(), den.into()));
        &p + &Polynomial::constant(extra)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        let canon: String = name
            .trim()
            .chars()
            .map(|c| match c {
                '∪' | 'U' | 'u' => 'u',
                'w' => 'W',
                c => c,
            })
            .collect();
        ClosedForm::ALL
            .into_iter()
            .find(|f| f.name().replace('∪', "u") == canon)
            .ok_or_else(|| Error::UnknownClosedForm {
                name: name.to_string(),
                valid: ClosedForm::ALL.map(ClosedForm::name).join(", "),
            })
    }
}

/// Closed form by name (`W3`, `W2∪3`, also accepting `W2u3`).
pub fn closed_form(name: &str) -> Result<QuasiPolynomial> {
    Ok(name.parse::<ClosedForm>()?.quasipolynomial())
}

/// The published trigonometric expression evaluated in floating point.
pub fn printed_value(form: ClosedForm, s: i64) -> f64 {
    let x = s as f64;
    let alt = if s.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let c = |k: f64| (k * PI).cos();
    let sn = |k: f64| (k * PI).sin();
    let poly = {
        let p = form.printed_polynomial_part();
        p.coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, q| acc * x + rational_to_f64(q))
    };
    // period-five block shared by the size-six ladder unions with a 5
    let fifths = || {
        2.0 / 125.0 * (c(2.0 * x / 5.0) + c(4.0 * x / 5.0))
            + 2.0 / 125.0
                * (c((2.0 * x + 1.0) / 5.0)
                    + 3.0 * c((6.0 * x + 1.0) / 5.0)
                    + 2.0 * c((8.0 * x + 1.0) / 5.0))
            - 2.0 / 125.0
                * (2.0 * sn((8.0 * x + 1.0) / 10.0)
                    + sn((12.0 * x + 1.0) / 10.0)
                    + 3.0 * sn((16.0 * x + 1.0) / 10.0))
    };
    let periodic = match form {
        ClosedForm::W2 => alt / 4.0,
        ClosedForm::W3 => c(x) / 8.0 + 2.0 / 9.0 * c(2.0 * x / 3.0),
        ClosedForm::W4 => {
            (x + 5.0) / 32.0 * c(x)
                + c(x / 2.0) / 8.0
                + 2.0 / 27.0 * (c(2.0 * x / 3.0) - c(2.0 * (x + 1.0) / 3.0))
        }
        ClosedForm::W2u3 => (2.0 * x + 9.0) / 64.0 * alt + 2.0 / 27.0 * c(2.0 * x / 3.0),
        ClosedForm::W1u4 => {
            (2.0 * x + 11.0) / 128.0 * alt
                + 2.0 / 27.0 * sn((4.0 * x + 1.0) / 6.0)
                + (c(x / 2.0) + sn(x / 2.0)) / 16.0
        }
        ClosedForm::W5 => {
            (2.0 * x + 15.0) / 128.0 * alt
                + 2.0 / 27.0 * c(2.0 * x / 3.0)
                + (c(x / 2.0) + sn(x / 2.0)) / 16.0
                + 2.0 / 25.0 * (c(2.0 * x / 5.0) + c(4.0 * x / 5.0))
        }
        ClosedForm::W3u3 => {
            (x + 6.0) / 64.0 * alt
                + (6.0 * x + 34.0) / 243.0 * c(2.0 * x / 3.0)
                + 4.0 / 243.0 * sn((4.0 * x + 1.0) / 6.0)
        }
        ClosedForm::W2u4 => {
            (2.0 * x * x + 26.0 * x + 75.0) / 512.0 * alt
                + 2.0 / 81.0 * c(2.0 * x / 3.0)
                + 2.0 / 81.0 * sn((4.0 * x + 1.0) / 6.0)
                + (c(x / 2.0) + sn(x / 2.0)) / 32.0
        }
        ClosedForm::W1u5 => {
            (x + 8.0) / 128.0 * alt
                + 2.0 / 81.0 * c(2.0 * x / 3.0)
                + 2.0 / 81.0 * sn((4.0 * x + 1.0) / 6.0)
                + sn(x / 2.0) / 16.0
                + fifths()
        }
        ClosedForm::W6 => {
            (6.0 * x * x + 126.0 * x + 581.0) / 4608.0 * alt
                + (6.0 * x + 61.0) / 486.0 * c(2.0 * x / 3.0)
                + 2.0 / 243.0 * sn((4.0 * x + 1.0) / 6.0)
                + c(x / 3.0) / 18.0
                + (c(x / 2.0) + sn(x / 2.0)) / 32.0
                + fifths()
        }
    };
    poly + periodic
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use crate::partition::polynomial_part;

    #[test]
    fn names_parse() {
        assert_eq!("W2∪3".parse::<ClosedForm>().unwrap(), ClosedForm::W2u3);
        assert_eq!("w1u5".parse::<ClosedForm>().unwrap(), ClosedForm::W1u5);
        let err = "W7".parse::<ClosedForm>().unwrap_err();
        assert!(err.to_string().contains("W3∪3"));
        assert!(closed_form("nope").is_err());
    }

    #[test]
    fn w3_values() {
        let q = closed_form("W3").unwrap();
        assert_eq!(q.evaluate(0), rat_int(1));
        assert_eq!(q.evaluate(6), rat_int(7));
        assert_eq!(q.period(), 6);
    }

    #[test]
    fn w2_residue_classes() {
        let q = closed_form("W2").unwrap();
        assert_eq!(q.residue_polys()[0], Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 2)]));
        assert_eq!(q.residue_polys()[1], Polynomial::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn w2u3_leading_coefficient() {
        let q = ClosedForm::W2u3.quasipolynomial();
        assert_eq!(q.evaluate(0), rat_int(1));
        for p in q.residue_polys() {
            assert_eq!(p.degree(), Some(4));
            assert_eq!(p.leading_coeff(), rat(1, 288));
        }
    }

    #[test]
    fn reconstruction_extends_beyond_samples() {
        for form in ClosedForm::ALL {
            let q = form.quasipolynomial();
            let start = (q.degree_bound() + 1) * q.period() as usize;
            let end = start + 3 * q.period() as usize;
            let table = partition_dp(&form.generators(), end).unwrap();
            for s in start..=end {
                assert_eq!(
                    q.evaluate(s as i64),
                    Rational::from_integer(table.values()[s].clone()),
                    "{form} at {s}"
                );
            }
        }
    }

    #[test]
    fn printed_polynomial_parts_match_bernoulli_route() {
        for form in ClosedForm::ALL {
            assert_eq!(
                polynomial_part(&form.generators()).unwrap(),
                form.printed_polynomial_part(),
                "{form}"
            );
        }
    }

    #[test]
    fn residue_average_matches_polynomial_part_leading_terms() {
        for m in 1..=6u32 {
            let d = GeneratorSet::ladder(m);
            let period = d.lcm();
            let n = m as usize * period as usize;
            let t = partition_dp(&d, n).unwrap();
            let samples: Vec<_> = t
                .values()
                .iter()
                .enumerate()
                .map(|(s, v)| (s as i64, Rational::from_integer(v.clone())))
                .collect();
            let q = qp_interpolate(&samples, period, m as usize - 1).unwrap();
            let avg = q.average_polynomial();
            let w = polynomial_part(&d).unwrap();
            let top = m as usize - 1;
            assert_eq!(avg.coeff(top), w.coeff(top), "m={m}");
            if top >= 1 {
                assert_eq!(avg.coeff(top - 1), w.coeff(top - 1), "m={m}");
            }
        }
    }

    #[test]
    fn printed_trig_forms_agree_numerically() {
        for form in ClosedForm::ALL {
            let table = partition_dp(&form.generators(), 60).unwrap();
            for s in 0..=60 {
                let exact: f64 = rational_to_f64(&Rational::from_integer(table.values()[s].clone()));
                let printed = printed_value(form, s as i64);
                assert!((printed - exact).abs() < 1e-9, "{form} s={s}: {printed} vs {exact}");
            }
        }
    }
}
