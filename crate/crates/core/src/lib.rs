//! Exact-arithmetic toolkit for a family of probability measures on integer
//! partitions and the statistics of finite general linear and unitary groups
//! they encode.
//!
//! The crate is organized around nine subsystems:
//!
//! - [`exactnum`]: arbitrary-precision rationals, two-sided enclosures of
//!   infinite products, and exact randomized decisions against them.
//! - [`partition`]: partitions, standard Young tableaux, Young-lattice paths.
//! - [`measure`]: the partition measure `M_(u,q)`, its signed specialization,
//!   and the Young-lattice edge weights that decompose it.
//! - [`sampler`]: an exact sampler growing partitions cell by cell, together
//!   with statistics collection.
//! - [`qseries`]: truncated power series with rational coefficients and
//!   coefficientwise verification of the generating-function identities.
//! - [`gflinear`]: small finite fields, polynomials, matrices, rational
//!   canonical form utilities, and group enumeration.
//! - [`theorems`]: closed-form evaluators for the counting theorems
//!   (Steinberg, Rudvalis-Shinoda, Lusztig) and a Rogers-Ramanujan check.
//! - [`oracle`]: brute-force censuses over `GL(n,q)` and `U(n,q)` that verify
//!   every closed form at desk scale, with cached tables.
//!
//! The `glq` binary exposes all of it on the command line.

pub mod error;
pub mod exactnum;
pub mod gflinear;
pub mod measure;
pub mod oracle;
pub mod partition;
pub mod qseries;
pub mod sampler;
pub mod theorems;

pub use error::{Error, Result};
pub use exactnum::Rational;
