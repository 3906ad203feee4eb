//! Small finite fields, polynomials and matrices over them, rational
//! canonical form utilities, and exhaustive enumeration of `GL(n,q)` and
//! `U(n,q)`.
//!
//! Fields are table-driven: elements are indices `0..q` encoding the
//! coefficient tuple of the residue polynomial in base `p` (constant term
//! least significant), and all arithmetic is a lookup. This caps the field
//! size but makes the census loops cheap.

mod classes;
mod enumerate;
mod field;
mod matrix;
mod poly;

pub use classes::{class_representative, companion_matrix, unipotent_partition};
pub use enumerate::{
    candidate_count, enumerate_gl, enumerate_unitary, gl_order_int, is_prime, is_unitary,
    prime_power_decompose, unitary_order, DEFAULT_CENSUS_BUDGET,
};
pub use field::{make_field, FiniteField};
pub use matrix::FqMatrix;
pub use poly::FqPoly;
