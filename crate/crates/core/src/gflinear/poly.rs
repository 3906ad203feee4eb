use super::field::FiniteField;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A polynomial over a [`FiniteField`], coefficients stored constant term
/// first with no trailing zero above the leading term. The zero polynomial
/// has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct FqPoly {
    field: Arc<FiniteField>,
    coeffs: Vec<u16>,
}

impl FqPoly {
    pub fn new(field: &Arc<FiniteField>, mut coeffs: Vec<u16>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Self::new(field, vec![])
    }

    pub fn constant(field: &Arc<FiniteField>, c: u16) -> Self {
        Self::new(field, vec![c])
    }

    /// The monic monomial `z^d`.
    pub fn monomial(field: &Arc<FiniteField>, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        Self::new(field, coeffs)
    }

    /// `z - root`.
    pub fn linear(field: &Arc<FiniteField>, root: u16) -> Self {
        Self::new(field, vec![field.neg(root), 1])
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> u16 {
        self.coeff(0)
    }

    pub fn eval(&self, x: u16) -> u16 {
        let f = &self.field;
        let mut acc = 0u16;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut coeffs = vec![0u16; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Self::new(f, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Remainder of `self` divided by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let dd = divisor.degree().unwrap();
        let lead_inv = f.inv(*divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = f.mul(rem[top], lead_inv);
            if c != 0 {
                for j in 0..=dd {
                    let sub = f.mul(c, divisor.coeffs[j]);
                    rem[top - dd + j] = f.sub(rem[top - dd + j], sub);
                }
            }
            rem.pop();
        }
        Self::new(f, rem)
    }

    /// Trial-division irreducibility test (degrees here are tiny).
    pub fn is_irreducible(&self) -> bool {
        let Some(e) = self.degree() else { return false };
        if e == 0 {
            return false;
        }
        if e == 1 {
            return true;
        }
        for d in 1..=e / 2 {
            for div in Self::enumerate_monic(&self.field, d) {
                if self.rem(&div).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// All monic polynomials of exactly the given degree, in the canonical
    /// order (lower-coefficient tuple packed in base q ascending).
    pub fn enumerate_monic(
        field: &Arc<FiniteField>,
        degree: usize,
    ) -> impl Iterator<Item = FqPoly> {
        let q = field.size();
        let field = Arc::clone(field);
        let total = (q as u128).pow(degree as u32);
        (0..total).map(move |t| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut t = t;
            for _ in 0..degree {
                coeffs.push((t % q as u128) as u16);
                t /= q as u128;
            }
            coeffs.push(1);
            FqPoly::new(&field, coeffs)
        })
    }

    /// The conjugate-reciprocal image of a monic polynomial with nonzero
    /// constant term over a quadratic extension `F_{q0^2}`:
    ///
    /// ```text
    /// phi~(z) = z^m phi^(q0)(1/z) / phi(0)^(q0)
    /// ```
    ///
    /// i.e. the coefficient of `z^(m-i)` becomes `(a_i / a_0)^(q0)` where
    /// `a_m = 1`. Roots map to inverses of their `q0`-th powers; the map is
    /// an involution on monic irreducibles other than `z`.
    pub fn tilde(&self) -> Result<FqPoly> {
        let f = &self.field;
        if !f.has_conjugation() {
            return Err(Error::WrongField(
                "tilde requires a quadratic extension field".into(),
            ));
        }
        if !self.is_monic() {
            return Err(Error::InvalidParameter(
                "tilde requires a monic polynomial".into(),
            ));
        }
        let a0 = self.constant_term();
        if a0 == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let m = self.degree().unwrap();
        let a0_inv = f.inv(a0);
        let mut coeffs = vec![0u16; m + 1];
        coeffs[m] = 1;
        for i in 1..=m {
            // coefficient of z^{m-i} is conj(a_i / a_0)
            let ai = self.coeff(i);
            coeffs[m - i] = f.conj(f.mul(ai, a0_inv))?;
        }
        Ok(FqPoly::new(f, coeffs))
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "z")?,
                1 => write!(f, "{c}*z")?,
                _ if c == 1 => write!(f, "z^{i}")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqPoly({self})")
    }
}
