//! Exact rational scalars and the circle group Q/Z.
//!
//! Rationals are `num_rational::Ratio<i64>`, which keeps every value in lowest
//! terms with a positive denominator. [`QmodZ`] wraps a rational reduced to the
//! canonical representative in `[0, 1)`; diagonal symmetries, dot-action
//! scalars and root-of-unity exponents all live here.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Renders `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`. Whitespace around the tokens is accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num_s, den_s) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: i64 = num_s
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad rational {t:?}")))?;
    let den: i64 = den_s
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad rational {t:?}")))?;
    if den == 0 {
        return Err(Error::Parse(alloc::format!("zero denominator in {t:?}")));
    }
    Ok(Rational::new(num, den))
}

/// An element of Q/Z, stored as its canonical representative in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QmodZ(Rational);

impl QmodZ {
    pub fn new(r: Rational) -> Self {
        QmodZ(r - r.floor())
    }

    pub fn zero() -> Self {
        QmodZ(Rational::zero())
    }

    pub fn from_parts(num: i64, den: i64) -> Self {
        Self::new(Rational::new(num, den))
    }

    /// The canonical representative in `[0, 1)`.
    pub fn rep(&self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.0 * Rational::from_integer(k))
    }

    /// Order as an element of Q/Z (the denominator of the representative).
    pub fn order(&self) -> i64 {
        *self.0.denom()
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        QmodZ::new(self.0 + rhs.0)
    }
}

impl Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: QmodZ) -> QmodZ {
        QmodZ::new(self.0 - rhs.0)
    }
}

impl Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.0)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.0))
    }
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> i64 {
    let mut l: i64 = 1;
    for r in items {
        l = num_integer::lcm(l, r.denom().abs());
    }
    l
}

/// Sum of a slice of rationals.
pub fn rational_sum(items: &[Rational]) -> Rational {
    items.iter().fold(Rational::zero(), |a, b| a + b)
}

/// Formats a vector of rationals as `[p/q, ...]`.
pub fn format_rational_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    alloc::format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representative() {
        assert_eq!(QmodZ::from_parts(-1, 120).rep(), rat(119, 120));
        assert_eq!(QmodZ::from_parts(7, 3).rep(), rat(1, 3));
        assert_eq!(QmodZ::from_parts(4, 2).rep(), rat(0, 1));
        assert!((QmodZ::from_parts(1, 2) + QmodZ::from_parts(1, 2)).is_zero());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["5/24", "-1/6", "3", "0", "119/120"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("ham").is_err());
    }
}
