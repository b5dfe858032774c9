//! Exact values of `cos(pi*k/d)` and `sin(pi*k/d)` at the angles where they
//! are rational (multiples of `pi/3` and `pi/2` for the cosine).

use super::{rat, Rational};

/// `cos(pi * k / d)` when it is rational, `None` otherwise.
pub fn cos_pi(k: i64, d: i64) -> Option<Rational> {
    assert!(d != 0, "zero denominator in angle");
    // the angle in units of pi/6, reduced to [0, 2pi)
    if (6 * k) % d != 0 {
        return None;
    }
    let sixths = (6 * k / d).rem_euclid(12);
    match sixths {
        0 => Some(rat(1, 1)),
        2 | 10 => Some(rat(1, 2)),
        3 | 9 => Some(rat(0, 1)),
        4 | 8 => Some(rat(-1, 2)),
        6 => Some(rat(-1, 1)),
        _ => None,
    }
}

/// `sin(pi * k / d) = cos(pi * (d - 2k) / (2d))` when it is rational.
pub fn sin_pi(k: i64, d: i64) -> Option<Rational> {
    cos_pi(d - 2 * k, 2 * d)
}

/// `(-1)^s` as a rational.
pub fn alternating(s: i64) -> Rational {
    if s.rem_euclid(2) == 0 {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn approx(q: &Rational) -> f64 {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap()
    }

    #[test]
    fn matches_floating_point_on_rational_angles() {
        for d in [1i64, 2, 3, 6] {
            for k in -30..30 {
                let angle = PI * k as f64 / d as f64;
                if let Some(c) = cos_pi(k, d) {
                    assert!((approx(&c) - angle.cos()).abs() < 1e-12, "cos {k}/{d}");
                }
                if let Some(s) = sin_pi(k, d) {
                    assert!((approx(&s) - angle.sin()).abs() < 1e-12, "sin {k}/{d}");
                }
            }
        }
    }

    #[test]
    fn irrational_angles_are_rejected() {
        assert!(cos_pi(1, 4).is_none());
        assert!(cos_pi(1, 6).is_none());
        assert!(cos_pi(2, 5).is_none());
        assert!(sin_pi(1, 3).is_none());
        assert_eq!(sin_pi(1, 6), Some(rat(1, 2)));
        assert_eq!(cos_pi(2, 3), Some(rat(-1, 2)));
        assert_eq!(cos_pi(3, 2), Some(rat(0, 1)));
    }
}
