//! Exact scalars, dense polynomials, truncated power series and
//! quasipolynomials.

mod polynomial;
mod quasi;
mod series;
pub mod text;
pub mod trig;

pub use polynomial::Polynomial;
pub use quasi::{qp_interpolate, QuasiPolynomial};
pub use series::{series_reciprocal, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(Integer::from(numer), Integer::from(denom))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `b^e` with the convention `0^0 = 1`.
pub fn pow_i64(b: i64, e: u32) -> Integer {
    num_traits::pow(Integer::from(b), e as usize)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Converts an exact rational that is known to be integral.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}
