//! Exhaustive enumeration of `GL(n,q)` and `U(n,q)` and their orders.

use super::field::{make_field, FiniteField};
use super::matrix::FqMatrix;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Arc;

/// Default cap on candidate matrices per enumeration (`q^(n^2)` for the
/// general linear group, `q^(2n^2)` for the unitary group).
pub const DEFAULT_CENSUS_BUDGET: u64 = 1 << 26;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^e` with `p` prime, if `q` is a prime power.
pub fn prime_power_decompose(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// `|GL(n,q)| = prod_{i=0}^{n-1} (q^n - q^i)` as an exact integer.
pub fn gl_order_int(n: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let qn = q.pow(n);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= &qn - q.pow(i);
    }
    acc
}

/// `|U(n,q)| = q^(n(n-1)/2) * prod_{i=1}^{n} (q^i - (-1)^i)`.
///
/// Equals `|prod_{i=0}^{n-1} ((-q)^n - (-q)^i)|`, the general linear order
/// evaluated at `-q`, up to sign.
pub fn unitary_order(n: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = q.pow(n * (n.saturating_sub(1)) / 2);
    for i in 1..=n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc *= q.pow(i) - BigInt::from(sign);
    }
    acc
}

fn checked_budget(candidates: u128, budget: u64) -> Result<()> {
    if candidates > budget as u128 {
        Err(Error::BudgetExceeded {
            candidates,
            budget: budget as u128,
        })
    } else {
        Ok(())
    }
}

/// Number of candidate matrices scanned when enumerating `n x n` matrices
/// over a field of the given size.
pub fn candidate_count(field_size: u64, n: usize) -> u128 {
    (field_size as u128).pow((n * n) as u32)
}

/// Iterator over all invertible `n x n` matrices over `field`, in
/// lexicographic row-major entry order.
pub fn enumerate_gl(
    field: &Arc<FiniteField>,
    n: usize,
    budget: u64,
) -> Result<impl Iterator<Item = FqMatrix>> {
    let total = candidate_count(field.size(), n);
    checked_budget(total, budget)?;
    let field = Arc::clone(field);
    Ok((0..total)
        .map(move |idx| FqMatrix::from_index(&field, n, idx))
        .filter(|m| m.is_invertible()))
}

/// Whether `m` (over `F_{q0^2}`) preserves the identity Hermitian form:
/// `conj(m)^T * m = I`.
pub fn is_unitary(m: &FqMatrix) -> Result<bool> {
    let adj = m.conj_transpose()?;
    Ok(adj.mul(m) == FqMatrix::identity(m.field(), m.n()))
}

/// Iterator over `U(n,q)` inside `GL(n, q^2)`, by filtering all matrices
/// over `F_{q^2}` through the Hermitian-form test. Returns the extension
/// field along with the iterator.
pub fn enumerate_unitary(
    n: usize,
    q: u64,
    budget: u64,
) -> Result<(Arc<FiniteField>, impl Iterator<Item = FqMatrix>)> {
    let (p, e) = prime_power_decompose(q)
        .ok_or_else(|| Error::InvalidParameter(format!("q={q} is not a prime power")))?;
    let field = make_field(p, 2 * e)?;
    let total = candidate_count(field.size(), n);
    checked_budget(total, budget)?;
    let iter_field = Arc::clone(&field);
    let iter = (0..total)
        .map(move |idx| FqMatrix::from_index(&iter_field, n, idx))
        .filter(|m| is_unitary(m).expect("extension field has conjugation"));
    Ok((field, iter))
}
