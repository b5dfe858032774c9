use std::fmt;

use serde::{Deserialize, Serialize};

use super::{cayley_reduce, DoubleSystem};
use crate::error::Result;
use crate::exactnum::{text, Integer, Rational};

/// Slope `rho / r` of a ray in the right-hand-side plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    Vertical,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => f.write_str(&text::format_rational(q)),
            Slope::Vertical => f.write_str("inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(Slope::Vertical);
        }
        text::parse_rational(&s)
            .map(Slope::Finite)
            .map_err(serde::de::Error::custom)
    }
}

/// The ray spanned by one column, on which that column's determinant `L_i`
/// vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberWall {
    /// 1-based column index.
    pub column: usize,
    pub slope: Slope,
    /// Whether the column yields a reduction term (false for columns dropped
    /// because their entry in the eliminated row is zero).
    pub reduced: bool,
    /// Strictly inside the cone spanned by the columns.
    pub interior: bool,
}

/// Walls of the chamber complex, sorted by slope (vertical last).
pub fn chamber_walls(sys: &DoubleSystem) -> Result<Vec<ChamberWall>> {
    let reduced: Vec<usize> = cayley_reduce(sys)?.iter().map(|t| t.index).collect();
    let mut walls: Vec<ChamberWall> = sys
        .columns()
        .enumerate()
        .map(|(i, (b, beta))| ChamberWall {
            column: i + 1,
            slope: if b == 0 {
                Slope::Vertical
            } else {
                Slope::Finite(Rational::new(Integer::from(beta), Integer::from(b)))
            },
            // orientation swaps rows, never columns
            reduced: reduced.contains(&(i + 1)),
            interior: false,
        })
        .collect();
    walls.sort_by(|a, b| a.slope.cmp(&b.slope).then(a.column.cmp(&b.column)));
    let lo = walls.first().map(|w| w.slope.clone());
    let hi = walls.last().map(|w| w.slope.clone());
    for w in &mut walls {
        w.interior = Some(&w.slope) != lo.as_ref() && Some(&w.slope) != hi.as_ref();
    }
    Ok(walls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};
    use crate::vpf::tests::sys;
    use crate::vpf::{vpf_oracle, ReductionTerm};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn slopes(s: &DoubleSystem) -> Vec<Slope> {
        chamber_walls(s).unwrap().into_iter().map(|w| w.slope).collect()
    }

    #[test]
    fn wall_examples() {
        assert_eq!(
            slopes(&sys(&[1, 1], &[1, 2], 0, 0)),
            vec![Slope::Finite(rat_int(1)), Slope::Finite(rat_int(2))]
        );
        assert_eq!(
            slopes(&sys(&[1, 2], &[2, 1], 0, 0)),
            vec![Slope::Finite(rat(1, 2)), Slope::Finite(rat_int(2))]
        );
        let gauss = chamber_walls(&sys(&[1, 1, 1, 1], &[0, 1, 2, 3], 0, 0)).unwrap();
        assert_eq!(
            gauss.iter().map(|w| w.slope.clone()).collect::<Vec<_>>(),
            (0..=3).map(|k| Slope::Finite(rat_int(k))).collect::<Vec<_>>()
        );
        assert!(!gauss[0].reduced && gauss[1..].iter().all(|w| w.reduced));
        assert_eq!(
            gauss.iter().map(|w| w.interior).collect::<Vec<_>>(),
            vec![false, true, true, false]
        );
        let vertical = chamber_walls(&sys(&[0, 1], &[1, 1], 0, 0)).unwrap();
        assert_eq!(vertical.last().unwrap().slope, Slope::Vertical);
    }

    #[test]
    fn slope_text_round_trip() {
        for s in [Slope::Vertical, Slope::Finite(rat(3, 2))] {
            let json = serde_json::to_string(&s).unwrap();
            assert_eq!(serde_json::from_str::<Slope>(&json).unwrap(), s);
        }
    }

    fn system() -> impl Strategy<Value = DoubleSystem> {
        prop::collection::vec((1i64..=6, 1i64..=6), 2..=5)
            .prop_filter("non-proportional", |cols| {
                cols.iter()
                    .enumerate()
                    .all(|(i, a)| cols[i + 1..].iter().all(|b| a.0 * b.1 != a.1 * b.0))
            })
            .prop_map(|cols| {
                let (top, bottom) = cols.into_iter().unzip();
                DoubleSystem::new(top, bottom, (0, 0)).unwrap()
            })
    }

    fn activity(s: &DoubleSystem) -> Vec<bool> {
        cayley_reduce(s).unwrap().iter().map(|t| t.active).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn crossing_one_wall_flips_one_term(s in system(), scale in 7i64..12) {
            for w in chamber_walls(&s).unwrap() {
                let Slope::Finite(q) = &w.slope else { continue };
                let (p, d) = (
                    i64::try_from(q.numer()).unwrap(),
                    i64::try_from(q.denom()).unwrap(),
                );
                let (r, rho) = (d * scale, p * scale);
                let below = activity(&s.with_rhs(r, rho - 1).unwrap());
                let above = activity(&s.with_rhs(r, rho + 1).unwrap());
                let flipped = below.iter().zip(&above).filter(|(a, b)| a != b).count();
                prop_assert_eq!(flipped, 1);
            }
        }

        #[test]
        fn interior_walls_are_continuous(s in system(), scale in 0i64..6) {
            for w in chamber_walls(&s).unwrap().into_iter().filter(|w| w.interior) {
                let Slope::Finite(q) = &w.slope else { continue };
                let (p, d) = (
                    i64::try_from(q.numer()).unwrap(),
                    i64::try_from(q.denom()).unwrap(),
                );
                let point = s.with_rhs(d * scale, p * scale).unwrap();
                let terms = cayley_reduce(&point).unwrap();
                let on_wall = terms.iter().find(|t| t.index == w.column).unwrap();
                prop_assert_eq!(on_wall.l_value, 0);
                // both neighbouring chamber expressions give the oracle value
                let with: Integer = terms.iter().map(ReductionTerm::evaluate).sum();
                let without: Integer = terms
                    .iter()
                    .filter(|t| t.index != w.column)
                    .map(ReductionTerm::evaluate)
                    .sum();
                prop_assert!(on_wall.evaluate().is_zero());
                prop_assert_eq!(&with, &without);
                prop_assert_eq!(with, vpf_oracle(&point));
            }
        }
    }
}
