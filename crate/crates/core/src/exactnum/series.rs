use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Power series in `t` truncated after `t^order`.
///
/// Arithmetic is exact for every retained order; anything beyond `order`
/// is dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs, order }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// Series of `f(c*t)` given the series of `f(t)`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::new(out, self.order)
    }

    pub fn reciprocal(&self) -> Result<Self> {
        series_reciprocal(self)
    }

    fn binary(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order.min(rhs.order);
        Self::new(
            (0..=order).map(|k| f(&self.coeffs[k], &rhs.coeffs[k])).collect(),
            order,
        )
    }
}

/// Multiplicative inverse up to the truncation order.
///
/// Fails when the constant term vanishes.
pub fn series_reciprocal(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = &a.coeffs[0];
    if a0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv0 = a0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(a.order + 1);
    out.push(inv0.clone());
    for k in 1..=a.order {
        let mut acc = Rational::zero();
        for j in 1..=k {
            if !a.coeffs[j].is_zero() {
                acc += &a.coeffs[j] * &out[k - j];
            }
        }
        out.push(-acc * &inv0);
    }
    Ok(TruncatedSeries::new(out, a.order))
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::new(out, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-9i64..10, 1i64..5), order).prop_map(move |tail| {
            let mut coeffs = vec![rat(1, 1)];
            coeffs.extend(tail.into_iter().map(|(p, q)| rat(p, q)));
            TruncatedSeries::new(coeffs, order)
        })
    }

    #[test]
    fn geometric_series() {
        let inv = series_reciprocal(&TruncatedSeries::from_i64(&[1, -1], 3)).unwrap();
        assert_eq!(inv, TruncatedSeries::from_i64(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn identity_inverts_to_itself() {
        let one = TruncatedSeries::one(5);
        assert_eq!(series_reciprocal(&one).unwrap(), one);
    }

    #[test]
    fn one_minus_t_squared() {
        let a = TruncatedSeries::from_i64(&[1, 0, -1], 4);
        let inv = series_reciprocal(&a).unwrap();
        assert_eq!(inv, TruncatedSeries::from_i64(&[1, 0, 1, 0, 1], 4));
        // multiply back
        assert_eq!(&a * &inv, TruncatedSeries::one(4));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let a = TruncatedSeries::from_i64(&[0, 1], 3);
        assert_eq!(series_reciprocal(&a), Err(Error::NotInvertible));
    }

    #[test]
    fn dilation_scales_powers() {
        let a = TruncatedSeries::from_i64(&[1, 1, 1], 2);
        assert_eq!(a.dilate(&rat(-2, 1)), TruncatedSeries::from_i64(&[1, -2, 4], 2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn reciprocal_is_inverse(a in unit_series(8)) {
            let inv = series_reciprocal(&a).unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(8));
        }

        #[test]
        fn distributive(a in unit_series(5), b in unit_series(5), c in unit_series(5)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }
    }
}
