//! Exact rationals for bound arithmetic.  Comparisons cross-multiply in
//! `i128`, so no bound check ever rounds.

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    /// Reduced rational with positive denominator.  Panics on `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Least integer `>=` this value.
    pub fn ceil(&self) -> i64 {
        self.num.div_euclid(self.den) + i64::from(self.num.rem_euclid(self.den) != 0)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Ratio {
    fn eq(&self, other: &i64) -> bool {
        *self == Ratio::from_int(*other)
    }
}

impl PartialOrd<i64> for Ratio {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Ratio::from_int(*other)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_formats() {
        assert_eq!(Ratio::new(8, 2).to_string(), "4");
        assert_eq!(Ratio::new(16, 3).to_string(), "16/3");
        assert_eq!(Ratio::new(-10, -4).to_string(), "5/2");
        assert_eq!(Ratio::new(3, -2).to_string(), "-3/2");
    }

    #[test]
    fn exact_ordering() {
        // 5 < 16/3 < 6; an f64 cannot be trusted with the middle claim.
        assert!(Ratio::from_int(5) < Ratio::new(16, 3));
        assert!(Ratio::new(16, 3) < Ratio::from_int(6));
        assert_eq!(Ratio::new(20, 6), Ratio::new(10, 3));
        assert!(Ratio::new(10, 3) >= 3);
    }

    #[test]
    fn ceil_matches_integer_division() {
        assert_eq!(Ratio::new(8, 3).ceil(), 3);
        assert_eq!(Ratio::new(9, 3).ceil(), 3);
        assert_eq!(Ratio::new(-7, 2).ceil(), -3);
    }
}
