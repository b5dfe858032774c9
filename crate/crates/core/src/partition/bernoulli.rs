use num_traits::One;

use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Integer, Polynomial, Rational, TruncatedSeries};

/// Bernoulli numbers `B_0..=B_{n_max}` from `t/(e^t - 1)`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    // (e^t - 1)/t = sum t^k / (k+1)!
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut fact = Integer::one();
    for k in 0..=n_max {
        fact *= k + 1;
        coeffs.push(Rational::new(Integer::one(), fact.clone()));
    }
    let inv = TruncatedSeries::new(coeffs, n_max)
        .reciprocal()
        .expect("constant term is 1");
    from_exponential_series(&inv)
}

/// Turns the coefficients `c_k` of an exponential generating function into
/// `k! * c_k`.
fn from_exponential_series(series: &TruncatedSeries) -> Vec<Rational> {
    let mut fact = Integer::one();
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                fact *= k;
            }
            c * &fact
        })
        .collect()
}

/// Higher-order Bernoulli numbers `B_0(d)..=B_{k_max}(d)`: `k!` times the
/// `t^k` coefficient of `prod_i d_i t / (e^{d_i t} - 1)`.
pub fn bernoulli_higher_numbers(k_max: usize, d: &GeneratorSet) -> Vec<Rational> {
    let base: Vec<Rational> = {
        let b = bernoulli_numbers(k_max);
        let mut fact = Integer::one();
        b.into_iter()
            .enumerate()
            .map(|(k, bk)| {
                if k > 0 {
                    fact *= k;
                }
                bk / &fact
            })
            .collect()
    };
    let base = TruncatedSeries::new(base, k_max);
    let product = d.iter().fold(TruncatedSeries::one(k_max), |acc, g| {
        &acc * &base.dilate(&Rational::from_integer(g.into()))
    });
    from_exponential_series(&product)
}

pub fn bernoulli_higher(k: usize, d: &GeneratorSet) -> Rational {
    bernoulli_higher_numbers(k, d).swap_remove(k)
}

/// `B_k(s, d) = sum_l C(k, l) s^l B_{k-l}(d)` as a polynomial in `s`.
pub fn bernoulli_poly_higher_polynomial(k: usize, d: &GeneratorSet) -> Polynomial {
    let numbers = bernoulli_higher_numbers(k, d);
    Polynomial::from_coeffs(
        (0..=k)
            .map(|l| &numbers[k - l] * binomial(k as u64, l as u64))
            .collect(),
    )
}

pub fn bernoulli_poly_higher(k: usize, s: &Rational, d: &GeneratorSet) -> Rational {
    bernoulli_poly_higher_polynomial(k, d).eval(s)
}

/// Polynomial part of `W(s, d)`:
/// `B_{m-1}(s + sigma, d) / ((m-1)! * pi)` for `m = |d|` positive generators.
pub fn polynomial_part(d: &GeneratorSet) -> Result<Polynomial> {
    if d.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    d.require_positive()?;
    let m = d.count();
    let shift = Polynomial::linear(Rational::one(), Rational::from_integer(d.sigma()));
    let norm = Rational::new(Integer::one(), factorial(m as u64 - 1) * d.pi());
    Ok(bernoulli_poly_higher_polynomial(m - 1, d)
        .compose(&shift)
        .scale(&norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};
    use proptest::prelude::*;

    fn set(g: &[i64]) -> GeneratorSet {
        GeneratorSet::new(g.to_vec()).unwrap()
    }

    #[test]
    fn bernoulli_number_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        assert!(b.iter().skip(3).step_by(2).all(|x| *x == rat(0, 1)));
    }

    #[test]
    fn higher_order_values() {
        assert_eq!(bernoulli_higher(0, &set(&[3, 5])), rat(1, 1));
        assert_eq!(bernoulli_higher(1, &set(&[1, 1])), rat(-1, 1));
        assert_eq!(bernoulli_higher(1, &set(&[1, 2])), rat(-3, 2));
        // umbral expansion (B d_1 + B d_2)^2 = B_2 d1^2 + 2 B_1^2 d1 d2 + B_2 d2^2
        let expect = rat(1, 6) + rat(2, 1) * rat(1, 4) * rat(2, 1) + rat(1, 6) * rat(4, 1);
        assert_eq!(bernoulli_higher(2, &set(&[1, 2])), expect);
        assert_eq!(bernoulli_higher(3, &GeneratorSet::empty()), rat(0, 1));
    }

    #[test]
    fn higher_order_polynomials() {
        assert_eq!(bernoulli_poly_higher(0, &rat(7, 3), &set(&[1, 2])), rat(1, 1));
        assert_eq!(
            bernoulli_poly_higher_polynomial(1, &set(&[1, 2])),
            Polynomial::from_coeffs(vec![rat(-3, 2), rat(1, 1)])
        );
        for s in 0..=5 {
            let s = rat_int(s);
            assert_eq!(
                bernoulli_poly_higher(2, &s, &set(&[-1, -2])),
                bernoulli_poly_higher(2, &(s + rat_int(3)), &set(&[1, 2]))
            );
        }
    }

    #[test]
    fn polynomial_parts_of_small_ladders() {
        assert_eq!(polynomial_part(&set(&[1, 1])).unwrap(), Polynomial::from_i64(&[1, 1]));
        assert_eq!(
            polynomial_part(&set(&[1, 2])).unwrap(),
            Polynomial::from_coeffs(vec![rat(3, 4), rat(1, 2)])
        );
        assert_eq!(
            polynomial_part(&set(&[1, 2, 3])).unwrap(),
            Polynomial::from_coeffs(vec![rat(47, 72), rat(1, 2), rat(1, 12)])
        );
        assert_eq!(polynomial_part(&GeneratorSet::empty()), Err(Error::EmptyGeneratorSet));
        assert!(polynomial_part(&set(&[1, -2])).is_err());
    }

    fn generator_set() -> impl Strategy<Value = GeneratorSet> {
        prop::collection::vec((1i64..=6, any::<bool>()), 0..=5).prop_map(|gs| {
            GeneratorSet::new(gs.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect())
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn reflection_identity(d in generator_set(), p in -40i64..40, q in 1i64..9) {
            let s = rat(p, q);
            let shifted = &s + Rational::from_integer(d.sigma());
            for n in 0..=8 {
                prop_assert_eq!(
                    bernoulli_poly_higher(n, &s, &d.negated()),
                    bernoulli_poly_higher(n, &shifted, &d)
                );
            }
        }
    }
}
