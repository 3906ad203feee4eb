//! Two-sided rational enclosures.

use super::{is_negative, Rational};
use num_traits::Zero;
use std::fmt;

/// A closed interval `[lo, hi]` with rational endpoints, used to bracket
/// irrational quantities (infinite products and their arithmetic images).
///
/// Every operation is outward-sound: the result encloses the exact image of
/// any points of the operand intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEnclosure {
    lo: Rational,
    hi: Rational,
}

impl IntervalEnclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    /// Degenerate interval containing exactly one rational.
    pub fn point(value: Rational) -> Self {
        Self {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.hi + &self.lo) / super::rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Distance between the intervals (zero when they intersect).
    pub fn gap(&self, other: &Self) -> Rational {
        if self.intersects(other) {
            Rational::zero()
        } else if self.hi < other.lo {
            &other.lo - &self.hi
        } else {
            &self.lo - &other.hi
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    /// Multiplication by an exact rational, sign-aware.
    pub fn scale(&self, c: &Rational) -> Self {
        if is_negative(c) {
            Self::new(&self.hi * c, &self.lo * c)
        } else {
            Self::new(&self.lo * c, &self.hi * c)
        }
    }
}

impl fmt::Display for IntervalEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}
