//! Polynomial parts of Gaussian coefficients: every ladder-union partition
//! function in the chamber sum is replaced by its polynomial part
//! `B_{m-1}(x + sigma, d) / ((m-1)! pi)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ladder_sum, max_location};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, pow_i64, rat, rat_int, text, Polynomial, Rational};
use crate::partition::{bernoulli_higher_numbers, bernoulli_poly_higher_polynomial, GeneratorSet};

/// Polynomial in `(n, s)` with exact coefficients, keyed by `(deg_n, deg_s)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::default().with_term(0, 0, c)
    }

    /// `a n + b s + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::default()
            .with_term(1, 0, a)
            .with_term(0, 1, b)
            .with_term(0, 0, c)
    }

    fn with_term(mut self, dn: usize, ds: usize, c: Rational) -> Self {
        self.add_term(dn, ds, c);
        self
    }

    fn add_term(&mut self, dn: usize, ds: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((dn, ds)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(dn, ds));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    pub fn coeff(&self, dn: usize, ds: usize) -> Rational {
        self.terms.get(&(dn, ds)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(dn, ds), c) in &other.terms {
            out.add_term(dn, ds, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &other.terms {
                out.add_term(a + x, b + y, c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(dn, ds), v) in &self.terms {
            out.add_term(dn, ds, v * c);
        }
        out
    }

    /// `p(inner)` for a univariate `p`.
    pub fn compose(p: &Polynomial, inner: &Self) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(inner).add(&Self::constant(c.clone()))
        })
    }

    /// `p(a n + b s + c)`.
    pub fn compose_linear(p: &Polynomial, a: Rational, b: Rational, c: Rational) -> Self {
        Self::compose(p, &Self::linear(a, b, c))
    }

    pub fn eval(&self, n: &Rational, s: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(dn, ds), c)| c * num_traits::pow(n.clone(), dn) * num_traits::pow(s.clone(), ds))
            .sum()
    }

    /// Substitutes `n = n_of(x)` and `s = s_of(x)`.
    pub fn substitute(&self, n_of: &Polynomial, s_of: &Polynomial) -> Polynomial {
        self.terms.iter().fold(Polynomial::zero(), |acc, (&(dn, ds), c)| {
            let term = (&n_of.pow(dn as u32) * &s_of.pow(ds as u32)).scale(c);
            &acc + &term
        })
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(dn, ds), c) in self.terms.iter().rev() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            if !magnitude.is_one() || (dn == 0 && ds == 0) {
                factors.push(text::format_rational(&magnitude));
            }
            for (var, deg) in [("n", dn), ("s", ds)] {
                match deg {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    d => factors.push(format!("{var}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (&(dn, ds), c) in &self.terms {
            map.serialize_entry(&format!("{dn},{ds}"), &text::format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut out = Self::zero();
        for (key, value) in raw {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| D::Error::custom(format!("bad degree key {key:?}")))?;
            let dn = a.trim().parse().map_err(D::Error::custom)?;
            let ds = b.trim().parse().map_err(D::Error::custom)?;
            let c = text::parse_rational(&value).map_err(D::Error::custom)?;
            out.add_term(dn, ds, c);
        }
        Ok(out)
    }
}

fn ladder_union(a: u32, b: u32) -> GeneratorSet {
    GeneratorSet::ladder(a).union(&GeneratorSet::ladder(b))
}

/// Polynomial part of `P_m^n(s)` on chamber `r`, as a polynomial in `(n, s)`:
/// `sum_{i=r}^{m} (-1)^(m-i) B_{m-1}(n i - s + s_i, {1..i} u {1..m-i}) / ((m-1)! i! (m-i)!)`.
pub fn poly_part_gauss(m: u32, r: u32) -> Result<BivariatePolynomial> {
    if m == 0 || r == 0 || r > m {
        return Err(Error::InvalidParameter(format!(
            "chamber {r} outside 1..={m}"
        )));
    }
    let mut total = BivariatePolynomial::zero();
    for i in r..=m {
        let b = bernoulli_poly_higher_polynomial(m as usize - 1, &ladder_union(i, m - i));
        let arg = BivariatePolynomial::linear(
            rat_int(i64::from(i)),
            rat_int(-1),
            rat_int(ladder_sum(i)),
        );
        let norm = factorial(u64::from(m) - 1) * factorial(u64::from(i)) * factorial(u64::from(m - i));
        let mut c = Rational::new(num_traits::One::one(), norm);
        if (m - i) % 2 == 1 {
            c = -c;
        }
        total = total.add(&BivariatePolynomial::compose(&b, &arg).scale(&c));
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Variable of a maximal-coefficient polynomial: `n` itself (even `m`) or
/// `r` with `n = 2r` / `n = 2r - 1` (odd `m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    N,
    R,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::N => "n",
            Variable::R => "r",
        }
    }

    /// Value of the variable for a concrete `n`.
    pub fn value_at(self, n: i64) -> i64 {
        match self {
            Variable::N => n,
            Variable::R => (n + 1).div_euclid(2),
        }
    }
}

/// Polynomial part of the maximal coefficient `p_m^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxPolyPart {
    pub m: u32,
    /// `None` when the polynomial does not depend on the parity of `n`.
    pub parity: Option<Parity>,
    pub variable: Variable,
    pub polynomial: Polynomial,
}

impl MaxPolyPart {
    /// Value at a concrete `n` of the matching parity.
    pub fn eval_at_n(&self, n: i64) -> Rational {
        self.polynomial.eval_int(self.variable.value_at(n))
    }
}

impl fmt::Display for MaxPolyPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.polynomial.display_in(self.variable.name()))
    }
}

fn shape(m: u32, parity: Parity) -> Result<(Option<Parity>, Variable)> {
    if m < 2 {
        return Err(Error::UnsupportedM {
            m,
            reason: "maximal-coefficient polynomial parts need m >= 2",
        });
    }
    Ok(if m % 2 == 0 {
        (None, Variable::N)
    } else {
        (Some(parity), Variable::R)
    })
}

/// Polynomial part of the maximal coefficient by the reflected double sum:
/// higher-order Bernoulli numbers of `-{1..a} u {1..b}` against binomial
/// weights, collected by powers of the variable.
pub fn poly_part_max(m: u32, parity: Parity) -> Result<MaxPolyPart> {
    let (parity_tag, variable) = shape(m, parity)?;
    let mut coeffs = Vec::new();
    if m % 2 == 0 {
        let k = m / 2;
        let deg = 2 * k - 1;
        for p in 0..=deg {
            let mut inner = Rational::zero();
            for j in 0..=k {
                let d = ladder_union(2 * k - j, 0).negated().union(&GeneratorSet::ladder(j));
                let b = bernoulli_higher_numbers((deg - p) as usize, &d).swap_remove((deg - p) as usize);
                let w = binomial(u64::from(2 * k), u64::from(j)) * pow_i64(i64::from(k - j), p);
                inner += signed(j, b * w);
            }
            coeffs.push(inner * binomial(u64::from(deg), u64::from(p)));
        }
        let norm = factorial(u64::from(deg)) * factorial(u64::from(2 * k));
        Ok(MaxPolyPart {
            m,
            parity: parity_tag,
            variable,
            polynomial: Polynomial::from_coeffs(coeffs).scale(&Rational::new(One::one(), norm)),
        })
    } else {
        let k = (m + 1) / 2;
        let deg = 2 * k - 2;
        for p in 0..=deg {
            let mut inner = Rational::zero();
            for j in 0..k {
                let d = GeneratorSet::ladder(2 * k - 1 - j).negated().union(&GeneratorSet::ladder(j));
                let order = (deg - p) as usize;
                let b = match parity {
                    Parity::Even => bernoulli_higher_numbers(order, &d).swap_remove(order),
                    Parity::Odd => bernoulli_poly_higher_polynomial(order, &d)
                        .eval_int(i64::from(j) - i64::from(k)),
                };
                let w = binomial(u64::from(2 * k - 1), u64::from(j))
                    * pow_i64(2 * (i64::from(k) - 1 - i64::from(j)) + 1, p);
                inner += signed(j, b * w);
            }
            coeffs.push(inner * binomial(u64::from(deg), u64::from(p)));
        }
        let norm = factorial(u64::from(deg)) * factorial(u64::from(2 * k - 1));
        Ok(MaxPolyPart {
            m,
            parity: parity_tag,
            variable,
            polynomial: Polynomial::from_coeffs(coeffs).scale(&Rational::new(One::one(), norm)),
        })
    }
}

fn signed(j: u32, v: Rational) -> Rational {
    if j % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Polynomial part of the maximal coefficient from the chamber polynomial
/// [`poly_part_gauss`] with `n` and `s` written in the form's variable.
pub fn poly_part_max_chamber(m: u32, parity: Parity) -> Result<MaxPolyPart> {
    let (parity_tag, variable) = shape(m, parity)?;
    let x = Polynomial::x();
    let (n_of, s_of, chamber) = if m % 2 == 0 {
        let k = i64::from(m / 2);
        let (r, _) = max_location(m, 2);
        (x.clone(), x.scale(&rat_int(k)), r)
    } else {
        let k = i64::from((m + 1) / 2);
        let mm = i64::from(m);
        match parity {
            Parity::Even => (
                x.scale(&rat_int(2)),
                x.scale(&rat_int(mm)),
                max_location(m, 2).0,
            ),
            Parity::Odd => (
                Polynomial::linear(rat_int(2), rat_int(-1)),
                Polynomial::linear(rat_int(mm), rat_int(1 - k)),
                max_location(m, 1).0,
            ),
        }
    };
    let bivariate = poly_part_gauss(m, chamber)?;
    Ok(MaxPolyPart {
        m,
        parity: parity_tag,
        variable,
        polynomial: bivariate.substitute(&n_of, &s_of),
    })
}

/// Published polynomial parts of maximal coefficients, `m = 2..=6`.
pub fn printed_max_poly(m: u32, parity: Parity) -> Option<MaxPolyPart> {
    let x = Polynomial::x();
    let lin = |a: i64, b: i64| Polynomial::linear(rat_int(a), rat_int(b));
    let poly = |c: &[i64]| Polynomial::from_i64(c);
    let plus = |p: Polynomial, c: Rational| &p + &Polynomial::constant(c);
    let polynomial = match (m, parity) {
        (2, _) => lin(2, 3).scale(&rat(1, 4)),
        (3, Parity::Even) => plus(lin(1, 1).pow(2).scale(&rat(1, 2)), rat(1, 36)),
        (3, Parity::Odd) => (&lin(3, 1) * &lin(3, 2)).scale(&rat(1, 18)),
        (4, _) => lin(2, 5).pow(3).scale(&rat(1, 288)),
        (5, Parity::Even) => plus(
            (&(&lin(1, 1) * &lin(1, 2)) * &poly(&[49, 69, 23])).scale(&rat(1, 288)),
            rat(571, 14400),
        ),
        (5, Parity::Odd) => plus(
            (&(&lin(1, 2) * &x) * &poly(&[36, 46, 23])).scale(&rat(1, 288)),
            rat(89, 1600),
        ),
        (6, _) => (&lin(2, 7) * &poly(&[7511, 9604, 4606, 924, 66])).scale(&rat(1, 172800)),
        _ => return None,
    };
    let (parity, variable) = shape(m, parity).ok()?;
    Some(MaxPolyPart {
        m,
        parity,
        variable,
        polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::polynomial_part;

    #[test]
    fn chamber_polynomial_examples() {
        let p2 = poly_part_gauss(2, 2).unwrap();
        let at = |p: &BivariatePolynomial, n: Polynomial, s: Polynomial| p.substitute(&n, &s);
        let x = Polynomial::x();
        assert_eq!(at(&p2, x.clone(), x.clone()), Polynomial::linear(rat(1, 2), rat(3, 4)));
        let p4 = poly_part_gauss(4, 3).unwrap();
        assert_eq!(
            at(&p4, x.clone(), x.scale(&rat_int(2))),
            Polynomial::linear(rat_int(2), rat_int(5)).pow(3).scale(&rat(1, 288))
        );
        let p3 = poly_part_gauss(3, 2).unwrap();
        let expect = &Polynomial::linear(rat_int(1), rat_int(1)).pow(2).scale(&rat(1, 2))
            + &Polynomial::constant(rat(1, 36));
        assert_eq!(at(&p3, x.scale(&rat_int(2)), x.scale(&rat_int(3))), expect);
        assert!(poly_part_gauss(3, 0).is_err());
        assert!(poly_part_gauss(3, 4).is_err());
    }

    #[test]
    fn chamber_terms_are_partition_polynomial_parts() {
        // each summand equals polynomial_part(d) at n i - s - s_{m-i}
        let (m, n, s) = (5u32, 7i64, 12i64);
        for r in 1..=m {
            let mut expect = Rational::zero();
            for i in r..=m {
                let w = polynomial_part(&ladder_union(i, m - i)).unwrap();
                let v = w.eval_int(n * i64::from(i) - s - ladder_sum(m - i));
                expect += if (m - i) % 2 == 1 { -v } else { v };
            }
            assert_eq!(poly_part_gauss(m, r).unwrap().eval(&rat_int(n), &rat_int(s)), expect);
        }
    }

    #[test]
    fn bivariate_text_forms() {
        let p = BivariatePolynomial::linear(rat_int(2), rat_int(-1), rat(3, 2));
        assert_eq!(p.to_string(), "2*n - s + 3/2");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"0,0":"3/2","0,1":"-1","1,0":"2"}"#);
        assert_eq!(serde_json::from_str::<BivariatePolynomial>(&json).unwrap(), p);
    }

    #[test]
    fn both_routes_agree() {
        for m in 2..=8 {
            for parity in [Parity::Even, Parity::Odd] {
                assert_eq!(
                    poly_part_max(m, parity).unwrap(),
                    poly_part_max_chamber(m, parity).unwrap(),
                    "m={m} {parity:?}"
                );
            }
        }
        assert!(poly_part_max(1, Parity::Even).is_err());
    }

    #[test]
    fn published_entries() {
        for (m, parity) in [
            (2, Parity::Even),
            (3, Parity::Even),
            (3, Parity::Odd),
            (4, Parity::Even),
            (5, Parity::Odd),
            (6, Parity::Even),
        ] {
            assert_eq!(poly_part_max(m, parity).unwrap(), printed_max_poly(m, parity).unwrap());
        }
        // the published constant for m = 5, n = 2r reads 571/14400
        let computed = poly_part_max(5, Parity::Even).unwrap().polynomial;
        let printed = printed_max_poly(5, Parity::Even).unwrap().polynomial;
        assert_eq!(&computed - &printed, Polynomial::constant(rat(-400, 14400)));
    }
}
