//! Adaptive enclosures of the infinite products `prod_r (1 - u/q^r)` and
//! `prod_r (1 + (-1)^r u/q^r)`.
//!
//! Partial products are exact rationals; the omitted tail is bracketed by the
//! geometric bound `sum_{r>R} u/q^r = u / (q^R (q-1))`, so enclosure widths
//! shrink at least geometrically as factors are appended.

use super::{rat_int, IntervalEnclosure, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

/// A value known only through a shrinkable enclosure. Refinements must be
/// nested: every later enclosure is contained in every earlier one.
pub trait Refinable {
    fn enclosure(&self) -> IntervalEnclosure;
    /// Tighten the enclosure. Repeated calls must drive the width to zero.
    fn refine(&mut self);

    fn refine_to_width(&mut self, eps: &Rational) -> IntervalEnclosure {
        let mut enc = self.enclosure();
        while enc.width() > *eps {
            self.refine();
            enc = self.enclosure();
        }
        enc
    }
}

/// An exact rational viewed as an already-converged [`Refinable`].
#[derive(Clone, Debug)]
pub struct ExactValue(pub Rational);

impl Refinable for ExactValue {
    fn enclosure(&self) -> IntervalEnclosure {
        IntervalEnclosure::point(self.0.clone())
    }
    fn refine(&mut self) {}
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    /// `prod_{r>=1} (1 - u/q^r)`
    Euler,
    /// `prod_{r>=1} (1 + (-1)^r u/q^r)`
    Alternating,
}

/// Lazily extended partial product with a rigorous tail bracket.
#[derive(Clone, Debug)]
pub struct EulerProduct {
    kind: ProductKind,
    u: Rational,
    q: Rational,
    depth: u32,
    partial: Rational,
}

/// Number of extra factors appended per [`Refinable::refine`] call.
const REFINE_STEP: u32 = 8;

impl EulerProduct {
    pub fn new(kind: ProductKind, u: Rational, q: Rational) -> Result<Self> {
        if u.is_negative() || u > Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "product parameter u={u} outside [0,1]"
            )));
        }
        if q <= Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "product parameter q={q} must exceed 1"
            )));
        }
        let mut p = Self {
            kind,
            u,
            q,
            depth: 0,
            partial: Rational::one(),
        };
        // Advance until the tail sum is at most 1/2 so both tail brackets
        // below are positive and well-defined.
        while p.tail_sum() > super::rat(1, 2) {
            p.extend(1);
        }
        Ok(p)
    }

    /// `sum_{r>depth} u / q^r`, an exact geometric tail.
    fn tail_sum(&self) -> Rational {
        let qr = super::rat_pow(&self.q, self.depth as i64);
        &self.u / (qr * (&self.q - rat_int(1)))
    }

    fn extend(&mut self, count: u32) {
        for _ in 0..count {
            self.depth += 1;
            let term = &self.u / super::rat_pow(&self.q, self.depth as i64);
            let factor = match self.kind {
                ProductKind::Euler => Rational::one() - term,
                ProductKind::Alternating => {
                    if self.depth % 2 == 0 {
                        Rational::one() + term
                    } else {
                        Rational::one() - term
                    }
                }
            };
            self.partial *= factor;
        }
    }
}

impl Refinable for EulerProduct {
    fn enclosure(&self) -> IntervalEnclosure {
        let t = self.tail_sum();
        if t.is_zero() {
            return IntervalEnclosure::point(self.partial.clone());
        }
        let one = Rational::one();
        match self.kind {
            // Tail factors all lie in (0,1], and prod (1-x_r) >= 1 - sum x_r.
            ProductKind::Euler => {
                IntervalEnclosure::new(&self.partial * (&one - &t), self.partial.clone())
            }
            // |log-ish| bracket: prod (1 +- x_r) in [1 - sum x_r, 1/(1 - sum x_r)].
            ProductKind::Alternating => {
                IntervalEnclosure::new(&self.partial * (&one - &t), &self.partial / (&one - &t))
            }
        }
    }

    fn refine(&mut self) {
        self.extend(REFINE_STEP);
    }
}

/// Enclosure of `prod_{r=1}^inf (1 - u/q^r)` of width at most `eps`.
///
/// Requires `u` in `[0,1]`, `q > 1`, `eps > 0`.
pub fn euler_prefactor(u: &Rational, q: &Rational, eps: &Rational) -> Result<IntervalEnclosure> {
    require_positive_eps(eps)?;
    let mut p = EulerProduct::new(ProductKind::Euler, u.clone(), q.clone())?;
    Ok(p.refine_to_width(eps))
}

/// Enclosure of `prod_{r=1}^inf (1 + (-1)^r u/q^r)` of width at most `eps`.
pub fn signed_prefactor(u: &Rational, q: &Rational, eps: &Rational) -> Result<IntervalEnclosure> {
    require_positive_eps(eps)?;
    let mut p = EulerProduct::new(ProductKind::Alternating, u.clone(), q.clone())?;
    Ok(p.refine_to_width(eps))
}

fn require_positive_eps(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "eps={eps} must be positive"
        )))
    }
}

/// Term `i` of the series expansion of `prod_{r>=1} (1 - u/q^r)` in powers
/// of `u`: `(-1)^i / ((q^i - 1) ... (q - 1))`. Term 0 is 1.
pub fn stong_term(i: u32, q: &Rational) -> Rational {
    debug_assert!(*q > Rational::one());
    let mut denom = Rational::one();
    for j in 1..=i {
        denom *= super::rat_pow(q, j as i64) - rat_int(1);
    }
    let sign = if i % 2 == 0 { 1 } else { -1 };
    rat_int(sign) / denom
}
