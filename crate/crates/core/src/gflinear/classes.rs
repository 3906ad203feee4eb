//! Companion matrices, conjugacy-class representatives, and the extraction
//! of the `z - 1` partition from a matrix.

use super::{FiniteField, FqMatrix, FqPoly};
use crate::error::{Error, Result};
use crate::partition::Partition;
use std::sync::Arc;

/// The companion matrix of a monic polynomial
/// `phi = z^m + a_{m-1} z^{m-1} + ... + a_0`: ones on the superdiagonal and
/// `(-a_0, ..., -a_{m-1})` in the last row.
pub fn companion_matrix(phi: &FqPoly) -> Result<FqMatrix> {
    if !phi.is_monic() {
        return Err(Error::InvalidParameter(
            "companion matrix requires a monic polynomial".into(),
        ));
    }
    let m = phi.degree().expect("monic polynomial is nonzero");
    if m < 1 {
        return Err(Error::InvalidParameter(
            "companion matrix requires degree >= 1".into(),
        ));
    }
    let f = phi.field();
    let mut out = FqMatrix::zero(f, m);
    for i in 0..m - 1 {
        out.set(i, i + 1, 1);
    }
    for j in 0..m {
        out.set(m - 1, j, f.neg(phi.coeff(j)));
    }
    Ok(out)
}

/// A block-diagonal representative of the conjugacy class with rational
/// canonical form data `{(phi_i, lambda_i)}`: one companion block
/// `C(phi_i^{lambda_{i,j}})` per part. The `phi_i` must be distinct monic
/// irreducibles other than `z`, the partitions nonempty, and the total
/// degree must equal `n`.
pub fn class_representative(
    field: &Arc<FiniteField>,
    data: &[(FqPoly, Partition)],
    n: usize,
) -> Result<FqMatrix> {
    let mut total = 0usize;
    for (i, (phi, lam)) in data.iter().enumerate() {
        if !phi.is_irreducible() {
            return Err(Error::ReduciblePolynomial);
        }
        if phi.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm); // phi = z is excluded
        }
        if !phi.is_monic() {
            return Err(Error::InvalidParameter(
                "class data requires monic polynomials".into(),
            ));
        }
        if lam.is_empty() {
            return Err(Error::InvalidParameter(
                "class data partitions must be nonempty".into(),
            ));
        }
        for (phi2, _) in &data[..i] {
            if phi2 == phi {
                return Err(Error::InvalidParameter(format!(
                    "duplicate polynomial {phi}"
                )));
            }
        }
        total += lam.size() as usize * (phi.degree().unwrap());
    }
    if total != n {
        return Err(Error::DimensionMismatch(format!(
            "class data fills {total} dimensions, expected {n}"
        )));
    }
    let mut blocks = Vec::new();
    for (phi, lam) in data {
        for &part in lam.parts() {
            blocks.push(companion_matrix(&phi.pow(part))?);
        }
    }
    Ok(FqMatrix::block_diag(field, &blocks))
}

/// The partition attached to the polynomial `z - 1` in the rational
/// canonical form of an invertible matrix: the conjugate partition has
/// parts `dim ker (a - I)^j - dim ker (a - I)^{j-1}`. Its first part is the
/// fixed-space dimension, and its size is `n` exactly when `a` is
/// unipotent.
pub fn unipotent_partition(a: &FqMatrix) -> Result<Partition> {
    if !a.is_invertible() {
        return Err(Error::SingularInput);
    }
    let n = a.n();
    let id = FqMatrix::identity(a.field(), n);
    let b = a.sub(&id);
    let mut conj_parts: Vec<u32> = Vec::new();
    let mut power = id; // b^0
    let mut prev_dim = 0usize;
    for _ in 1..=n {
        power = power.mul(&b);
        let dim = power.kernel_dim();
        let step = dim - prev_dim;
        if step == 0 {
            break;
        }
        conj_parts.push(step as u32);
        prev_dim = dim;
    }
    let conj =
        Partition::new(conj_parts).expect("kernel dimension increments are weakly decreasing");
    Ok(conj.conjugate())
}
