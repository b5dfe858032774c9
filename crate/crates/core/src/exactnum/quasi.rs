use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{lcm, Integer, Polynomial, Rational};
use crate::error::{Error, Result};

/// A function of an integer argument that is polynomial on every residue
/// class modulo `period`.
///
/// Two quasipolynomials compare equal when they agree on
/// `(degree_bound + 1) * lcm(periods)` consecutive integers, which pins down
/// every residue polynomial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuasiPolynomial {
    period: u64,
    residue_polys: Vec<Polynomial>,
    degree_bound: usize,
}

impl QuasiPolynomial {
    pub fn new(period: u64, residue_polys: Vec<Polynomial>, degree_bound: usize) -> Result<Self> {
        if period == 0 || residue_polys.len() as u64 != period {
            return Err(Error::InvalidParameter(format!(
                "quasipolynomial with period {period} needs {period} residue polynomials, got {}",
                residue_polys.len()
            )));
        }
        if let Some(k) = residue_polys
            .iter()
            .position(|p| p.degree().is_some_and(|d| d > degree_bound))
        {
            return Err(Error::DegreeBoundExceeded {
                residue: k as u64,
                degree_bound,
            });
        }
        Ok(Self {
            period,
            residue_polys,
            degree_bound,
        })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        let degree_bound = p.degree().unwrap_or(0);
        Self {
            period: 1,
            residue_polys: vec![p],
            degree_bound,
        }
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn residue_polys(&self) -> &[Polynomial] {
        &self.residue_polys
    }

    pub fn residue_poly(&self, s: i64) -> &Polynomial {
        &self.residue_polys[s.rem_euclid(self.period as i64) as usize]
    }

    /// Value at `s`, using the residue class `s mod period` (Euclidean, so
    /// negative `s` is fine).
    pub fn evaluate(&self, s: i64) -> Rational {
        self.residue_poly(s).eval_int(s)
    }

    /// Mean of the residue polynomials over one period.
    pub fn average_polynomial(&self) -> Polynomial {
        let sum = self
            .residue_polys
            .iter()
            .fold(Polynomial::zero(), |acc, p| &acc + p);
        sum.scale(&Rational::new(Integer::from(1), Integer::from(self.period)))
    }

    /// Pointwise agreement on enough consecutive integers to decide equality.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let period = lcm(self.period, other.period) as i64;
        let points = (self.degree_bound.max(other.degree_bound) as i64 + 1) * period;
        (0..points).all(|s| self.evaluate(s) == other.evaluate(s))
    }
}

impl PartialEq for QuasiPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl Eq for QuasiPolynomial {}

/// Rebuilds a quasipolynomial from point samples.
///
/// Every residue class needs at least `degree_bound + 1` distinct abscissae.
/// The class polynomial is the Lagrange interpolant of its first
/// `degree_bound + 1` points and must reproduce every remaining sample.
pub fn qp_interpolate(
    samples: &[(i64, Rational)],
    period: u64,
    degree_bound: usize,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(Error::InvalidParameter("period must be positive".into()));
    }
    let mut classes: Vec<BTreeMap<i64, Rational>> = vec![BTreeMap::new(); period as usize];
    for (s, v) in samples {
        let class = &mut classes[s.rem_euclid(period as i64) as usize];
        match class.get(s) {
            Some(prev) if prev != v => return Err(Error::InconsistentSamples { s: *s }),
            Some(_) => {}
            None => {
                class.insert(*s, v.clone());
            }
        }
    }
    let needed = degree_bound + 1;
    let mut residue_polys = Vec::with_capacity(period as usize);
    for (residue, class) in classes.iter().enumerate() {
        if class.len() < needed {
            return Err(Error::InsufficientSamples {
                residue: residue as u64,
                period,
                got: class.len(),
                needed,
            });
        }
        let points: Vec<(i64, Rational)> =
            class.iter().take(needed).map(|(s, v)| (*s, v.clone())).collect();
        let poly = newton_interpolate(&points);
        if class.iter().skip(needed).any(|(s, v)| &poly.eval_int(*s) != v) {
            return Err(Error::DegreeBoundExceeded {
                residue: residue as u64,
                degree_bound,
            });
        }
        residue_polys.push(poly);
    }
    QuasiPolynomial::new(period, residue_polys, degree_bound)
}

/// Newton divided differences, expanded into monomial coefficients.
fn newton_interpolate(points: &[(i64, Rational)]) -> Polynomial {
    let xs: Vec<Rational> = points
        .iter()
        .map(|(x, _)| Rational::from_integer(Integer::from(*x)))
        .collect();
    let mut diffs: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = diffs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &diffs[i] - &diffs[i - 1];
            diffs[i] = num / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = Polynomial::zero();
    for i in (0..n).rev() {
        let factor = Polynomial::linear(Rational::from_integer(1.into()), -xs[i].clone());
        poly = &(&poly * &factor) + &Polynomial::constant(diffs[i].clone());
    }
    if poly.coeffs().iter().all(Zero::is_zero) {
        Polynomial::zero()
    } else {
        poly
    }
}
