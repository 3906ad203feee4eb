use super::field::FiniteField;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A square matrix over a [`FiniteField`], entries row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Arc<FiniteField>,
    n: usize,
    entries: Vec<u16>,
}

impl FqMatrix {
    pub fn zero(field: &Arc<FiniteField>, n: usize) -> Self {
        Self {
            field: Arc::clone(field),
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(field: &Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Arc<FiniteField>, rows: &[Vec<u16>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix must be square".into()));
        }
        let entries: Vec<u16> = rows.iter().flatten().copied().collect();
        if entries.iter().any(|&e| e as u64 >= field.size()) {
            return Err(Error::WrongField("entry index outside the field".into()));
        }
        Ok(Self {
            field: Arc::clone(field),
            n,
            entries,
        })
    }

    /// The matrix whose row-major entry tuple is the base-`q` expansion of
    /// `index`, first entry most significant. This fixes the lexicographic
    /// enumeration order.
    pub fn from_index(field: &Arc<FiniteField>, n: usize, mut index: u128) -> Self {
        let q = field.size() as u128;
        let mut entries = vec![0u16; n * n];
        for slot in entries.iter_mut().rev() {
            *slot = (index % q) as u16;
            index /= q;
        }
        Self {
            field: Arc::clone(field),
            n,
            entries,
        }
    }

    /// Row-major entry vector (the serialized form: each entry is the
    /// base-p packing of its coefficient tuple).
    pub fn to_index_vec(&self) -> Vec<u16> {
        self.entries.clone()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Self {
            field: Arc::clone(f),
            n: self.n,
            entries,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Self {
            field: Arc::clone(f),
            n: self.n,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let f = &self.field;
        let n = self.n;
        let mut out = Self::zero(f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            // find pivot
            let mut pivot = None;
            for row in rank..n {
                if m[row * n + col] != 0 {
                    pivot = Some(row);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_chunks(p, rank, n);
            let inv = f.inv(m[rank * n + col]);
            for j in col..n {
                m[rank * n + j] = f.mul(m[rank * n + j], inv);
            }
            for row in 0..n {
                if row != rank && m[row * n + col] != 0 {
                    let factor = m[row * n + col];
                    for j in col..n {
                        let sub = f.mul(factor, m[rank * n + j]);
                        m[row * n + j] = f.sub(m[row * n + j], sub);
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// `n - rank`: the dimension of the kernel.
    pub fn kernel_dim(&self) -> usize {
        self.n - self.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Entrywise conjugation followed by transposition (the adjoint with
    /// respect to the identity Hermitian form). Requires a quadratic
    /// extension field.
    pub fn conj_transpose(&self) -> Result<Self> {
        let f = &self.field;
        let n = self.n;
        let mut out = Self::zero(f, n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, f.conj(self.get(i, j))?);
            }
        }
        Ok(out)
    }

    /// Block-diagonal assembly.
    pub fn block_diag(field: &Arc<FiniteField>, blocks: &[FqMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut out = Self::zero(field, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        out
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize);
}

impl SwapChunks for Vec<u16> {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        for j in 0..len {
            self.swap(a * len + j, b * len + j);
        }
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FqMatrix {}x{} over F_{}:",
            self.n,
            self.n,
            self.field.size()
        )?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
