use crate::error::{Error, Result};
use std::sync::Arc;

/// Largest supported field size; tables are `q^2` entries.
const MAX_FIELD_SIZE: u64 = 1024;

/// A finite field `F_{p^e}` with table-driven arithmetic.
///
/// The defining modulus is the least monic irreducible of degree `e` over
/// `F_p`, "least" in the candidate order where the coefficient tuple
/// `(c_0, ..., c_{e-1})` is read as the base-`p` digits of an integer with
/// the constant term varying fastest. That makes field construction
/// reproducible across runs and implementations.
///
/// Elements are indices in `0..q` encoding their coefficient tuple packed
/// in base `p` (constant term = least significant digit).
#[derive(Debug)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: u64,
    /// modulus coefficients, constant first, length e+1, monic
    modulus: Vec<u64>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
    /// x -> x^(p^(e/2)) when e is even (the conjugation of the quadratic
    /// extension over its fixed field)
    conj_t: Option<Vec<u16>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}
impl Eq for FiniteField {}

/// Constructs `F_{p^e}` deterministically.
pub fn make_field(p: u64, e: u32) -> Result<Arc<FiniteField>> {
    if !super::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e < 1 {
        return Err(Error::InvalidParameter(
            "extension degree must be >= 1".into(),
        ));
    }
    let q = (p as u128).pow(e);
    if q > MAX_FIELD_SIZE as u128 {
        return Err(Error::InvalidParameter(format!(
            "field size {q} exceeds the supported maximum {MAX_FIELD_SIZE}"
        )));
    }
    let q = q as u64;
    let modulus = least_irreducible(p, e);
    let field = FiniteField::build(p, e, q, modulus);
    Ok(Arc::new(field))
}

impl FiniteField {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    /// Field size `q = p^e`.
    pub fn size(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first (length `e + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> u16 {
        0
    }

    pub fn one(&self) -> u16 {
        1
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        self.neg_t[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv_t[a as usize]
    }

    pub fn pow(&self, mut a: u16, mut k: u64) -> u16 {
        let mut acc = 1u16;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            k >>= 1;
            if k > 0 {
                a = self.mul(a, a);
            }
        }
        acc
    }

    /// Whether this field is a quadratic extension `F_{q0^2}` of a
    /// well-defined fixed field, i.e. `e` is even.
    pub fn has_conjugation(&self) -> bool {
        self.conj_t.is_some()
    }

    /// The order `q0 = p^(e/2)` of the fixed field of conjugation.
    pub fn conjugation_base(&self) -> Result<u64> {
        if self.e % 2 == 0 {
            Ok((self.p as u128).pow(self.e / 2) as u64)
        } else {
            Err(Error::WrongField(format!(
                "F_{{{}^{}}} is not a quadratic extension",
                self.p, self.e
            )))
        }
    }

    /// `x -> x^(p^(e/2))`, the involutive conjugation of `F_{q0^2}`.
    pub fn conj(&self, a: u16) -> Result<u16> {
        match &self.conj_t {
            Some(t) => Ok(t[a as usize]),
            None => Err(Error::WrongField(format!(
                "F_{{{}^{}}} has no conjugation (odd extension degree)",
                self.p, self.e
            ))),
        }
    }

    /// Coefficient tuple of an element, constant term first, length `e`.
    pub fn coeffs_of(&self, a: u16) -> Vec<u64> {
        let mut a = a as u64;
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn build(p: u64, e: u32, q: u64, modulus: Vec<u64>) -> FiniteField {
        let qs = q as usize;
        let mut add_t = vec![0u16; qs * qs];
        let mut mul_t = vec![0u16; qs * qs];
        let mut neg_t = vec![0u16; qs];
        let mut inv_t = vec![0u16; qs];

        for a in 0..q {
            let ca = digits(a, p, e);
            for b in 0..q {
                let cb = digits(b, p, e);
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add_t[a as usize * qs + b as usize] = pack(&sum, p);
                let prod = poly_mul_mod(&ca, &cb, &modulus, p);
                mul_t[a as usize * qs + b as usize] = pack(&prod, p);
            }
            let negd: Vec<u64> = ca.iter().map(|&x| (p - x) % p).collect();
            neg_t[a as usize] = pack(&negd, p);
        }
        for a in 1..q {
            for b in 1..q {
                if mul_t[a as usize * qs + b as usize] == 1 {
                    inv_t[a as usize] = b as u16;
                    break;
                }
            }
        }
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            add_t,
            mul_t,
            neg_t,
            inv_t,
            conj_t: None,
        };
        if e % 2 == 0 {
            let q0 = (p as u128).pow(e / 2) as u64;
            let t = (0..q).map(|a| field.pow(a as u16, q0)).collect();
            field.conj_t = Some(t);
        }
        field
    }
}

fn digits(mut a: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(a % p);
        a /= p;
    }
    out
}

fn pack(coeffs: &[u64], p: u64) -> u16 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = acc * p + c;
    }
    acc as u16
}

/// Product of two coefficient vectors reduced modulo the defining
/// polynomial, all over `F_p`.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = a.len();
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce by the monic modulus of degree e
    for i in (e..2 * e).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..e {
            let m = modulus[j];
            if m != 0 {
                let idx = i - e + j;
                prod[idx] = (prod[idx] + p * p - c * m % p) % p; // subtract c * m * z^(i-e)
            }
        }
    }
    prod.truncate(e);
    prod
}

/// The least monic irreducible of degree `e` over `F_p`, candidates ordered
/// with constant coefficient varying fastest.
fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    let total = (p as u128).pow(e);
    for t in 0..total {
        let mut coeffs = digits(t as u64, p, e);
        coeffs.push(1); // monic
        if poly_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

/// Trial-division irreducibility over `F_p` for tiny degrees: a reducible
/// polynomial of degree `e` has a monic factor of degree `<= e/2`.
fn poly_irreducible(coeffs: &[u64], p: u64) -> bool {
    let e = coeffs.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        let count = (p as u128).pow(d as u32);
        for t in 0..count {
            let mut div = digits(t as u64, p, d as u32);
            div.push(1);
            if poly_rem_is_zero(coeffs, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u64], div: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = num.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let top = rem.len() - 1;
        if lead != 0 {
            for j in 0..=dd {
                let idx = top - dd + j;
                rem[idx] = (rem[idx] + p * p - lead * div[j] % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
